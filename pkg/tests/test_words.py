import pytest

from octahedral.words import IDENTITY, Neg, Power, Product, Sym, parse_relation, parse_word, symbols_in


def test_products_and_powers():
    assert parse_word("jd") == Product((Sym("j"), Sym("d")))
    assert parse_word("w^-1") == Power(Sym("w"), -1)
    assert parse_word("(jd)^8") == Power(Product((Sym("j"), Sym("d"))), 8)
    assert parse_word("j d") == parse_word("jd")


def test_leading_minus_and_identity():
    assert parse_word("-w^2d") == Neg(Product((Power(Sym("w"), 2), Sym("d"))))
    assert parse_word("1") == IDENTITY
    assert parse_word("-1") == Neg(IDENTITY)


def test_relation_chains():
    assert parse_relation("wdw=d") == [parse_word("wdw"), Sym("d")]
    assert len(parse_relation("i^2=j^2=k^2=-1")) == 4


@pytest.mark.parametrize("text", ["", "2", "j^", "(jd", "j==d", "j+d"])
def test_malformed_words(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_symbols():
    assert symbols_in(parse_word("-w^2d")) == {"w", "d"}
    assert symbols_in(IDENTITY) == set()
