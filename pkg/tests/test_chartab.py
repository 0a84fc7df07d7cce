import pytest

from octahedral.catalog import golden, group_by_name, named_table
from octahedral.chartab import (Character, Functor, WedderburnType, alt2, character_table, complex_wedderburn, dual,
                                fs_indicator, functor_character, induce_character, inner_product, paper_label,
                                real_wedderburn, regular_character, restrict_character, sym2, table_json,
                                table_markdown)
from octahedral.exact import ONE, ZERO, ExactMatrix, parse_pretty
from octahedral.group import generate_group
from octahedral.utils import NonCharacterError, PrimeUnsuitableError, UnsupportedGroupError


def _display_values(table, label):
    chi = table[label]
    return [chi.values[c] for c in table.columns]


@pytest.mark.parametrize("name", ["G", "H"])
def test_tables_match_recorded_rows(name):
    table = named_table(name)
    recorded = golden()["tables"][name]
    assert list(table.labels) == list(recorded)
    for label, row in recorded.items():
        assert _display_values(table, label) == [parse_pretty(x) for x in row]


def test_k_table_labels():
    table = named_table("K")
    assert table.labels == ("1+", "1-", "2_0")
    assert [chi.degree for chi in table] == [1, 1, 2]


@pytest.mark.parametrize("name", ["G", "H", "K", "2O", "Q8", "2.Alt4", "Sym4"])
def test_row_orthonormality(name):
    table = named_table(name)
    for a in table:
        for b in table:
            assert inner_product(a, b) == (ONE if a is b else ZERO)
    assert sum(chi.degree ** 2 for chi in table) == table.group.order
    assert len(table) == len(table.group.classes)


def test_column_orthogonality(table_g):
    g = table_g.group
    for x in g.classes:
        for y in g.classes:
            total = ZERO
            for chi in table_g:
                total = total + chi.values[x.index] * chi.values[y.index].conj()
            assert total == (g.order // x.size if x is y else 0)


def test_indicators(table_g):
    assert {chi.label: fs_indicator(chi) for chi in table_g} == golden()["indicators"]


def test_other_cover_has_quaternionic_irreducibles():
    table = named_table("2O")
    assert sorted(fs_indicator(chi) for chi in table).count(-1) == 3


def test_regular_character(table_g):
    reg = regular_character(table_g.group)
    d = table_g.decompose(reg)
    assert d.as_dict() == {chi.label: chi.degree for chi in table_g}


def test_non_characters_are_rejected(table_g):
    g = table_g.group
    half = Character(g, (ONE,) + (ZERO,) * (len(g.classes) - 1))
    with pytest.raises(NonCharacterError):
        table_g.decompose(half)
    with pytest.raises(NonCharacterError):
        table_g.decompose(table_g["1+"] - table_g["1-"])


def test_functors(table_g):
    assert str(table_g.decompose(alt2(table_g["3+"]))) == "3-"
    assert str(table_g.decompose(sym2(table_g["2_0"]))) == "1+ + 2_0"
    assert dual(table_g["2+"]) == table_g["2-"]
    assert dual(table_g["3+"]) == table_g["3+"]


def test_frobenius_reciprocity(table_g, table_h):
    h = table_h.group
    for chi in table_g:
        res = restrict_character(chi, h)
        for psi in table_h:
            assert inner_product(res, psi) == inner_product(chi, induce_character(psi, table_g.group))


def test_restriction_needs_an_embedding(table_g):
    with pytest.raises(ValueError):
        restrict_character(table_g["1+"], group_by_name("2O"))


def test_wedderburn_types():
    recorded = golden()["wedderburn"]
    for name, text in recorded["real"].items():
        g = group_by_name(name)
        assert real_wedderburn(g, named_table(name)) == WedderburnType.parse(text)
        assert real_wedderburn(g, named_table(name)).real_dimension == g.order
    g = group_by_name("G")
    assert complex_wedderburn(g, named_table("G")).render("ascii") == recorded["complex"]["G"]


def test_wedderburn_rendering():
    t = WedderburnType.parse("2R + M2(R) + M2(C)")
    assert t.render("ascii") == "2R + M2(R) + M2(C)"
    assert t.render() == "2ℝ + M₂(ℝ) + M₂(ℂ)"
    assert WedderburnType.parse(t.render()) == t
    with pytest.raises(ValueError):
        WedderburnType.parse("M2(Q)")


def test_labels():
    assert paper_label("3+") == "3⁺"
    assert paper_label("2-") == "2⁻"
    assert paper_label("4_0") == "4⁰"
    assert paper_label("1a") == "1a"


def test_emitters(table_g):
    payload = table_json(table_g)
    assert payload["group"] == "G"
    assert payload["prime"] == 73
    assert [c["size"] for c in payload["classes"]] == golden()["classes"]["G"]["sizes"]
    assert [c["rep_word"] for c in payload["classes"]] == ["1", "-1", "i", "w", "-w", "d", "jd", "-jd"]
    assert [r["label"] for r in payload["irreps"]] == list(table_g.labels)
    lines = table_markdown(table_g).splitlines()
    assert len(lines) == 2 + 8
    assert lines[-1].startswith("| 4⁰ |")


def test_other_primes_give_the_same_table(g):
    assert [c.values for c in character_table(g, 97)] == [c.values for c in character_table(g, 73)]


def test_bad_prime(g):
    with pytest.raises(PrimeUnsuitableError):
        character_table(g, 7)


def test_exponent_must_divide_24():
    cycle = ExactMatrix.from_rows([[0, 0, 0, 0, 1], [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                   [0, 0, 0, 1, 0]])
    with pytest.raises(UnsupportedGroupError):
        character_table(generate_group([cycle], name="C5"))


def test_functor_character_degrees(table_g):
    chi = table_g["4_0"]
    assert functor_character(chi, Functor.SYM2).degree == 10
    assert functor_character(chi, Functor.ALT2).degree == 6
    assert functor_character(chi, Functor.SYM3).degree == 20
    assert functor_character(chi, Functor.ALT3).degree == 4
    square = functor_character(chi, Functor.TENSOR, chi)
    assert square == functor_character(chi, Functor.SYM2) + functor_character(chi, Functor.ALT2)
    dual_twice = functor_character(functor_character(chi, Functor.DUAL), Functor.DUAL)
    assert dual_twice == chi
    with pytest.raises(ValueError):
        functor_character(chi, Functor.TENSOR)
