import pytest

from octahedral.expr import (Apply, Irrep, Restrict, Sum, Tensor, ambient_of, eval_expression,
                             expression_character, parse_expression, render_expression)
from octahedral.utils import ExprParseError, UnknownNameError


def test_precedence():
    e = parse_expression("1+ + 2+ * 3+")
    assert e == Sum(Irrep("1+"), Tensor(Irrep("2+"), Irrep("3+")))
    assert parse_expression("S2(3+)") == Apply("S2", Irrep("3+"))
    assert parse_expression("Res[H](4_0)") == Restrict("H", Irrep("4_0"))


@pytest.mark.parametrize("text", [
    "2+ * 3+",
    "L2(3+ + 4_0)",
    "2_0 * (1+ + 2_0) * (1+ + 3+)",
    "Res[K](3+) + 1-",
    "Ind[G](2b * 2c)",
    "(1+ + 1-) * (1+ + 2_0) * (2+ + 2-)",
])
def test_render_inverts_parse(text):
    assert render_expression(parse_expression(text)) == text
    assert parse_expression(render_expression(parse_expression(text))) == parse_expression(text)


@pytest.mark.parametrize("text, expected", [
    ("L2(3+)", "3-"),
    ("S3(3+)", "1+ + 3+ + 3+ + 3-"),
    ("M3(3+)", "2_0 + 3+ + 3-"),
    ("2+ * 2_0", "4_0"),
    ("Res[H](3+)", "1c + 2a"),
    ("Res[K](4_0)", "1+ + 1- + 2_0"),
    ("Ind[G](1a)", "1+ + 2_0"),
    ("2b * 2c", "1a + 1d + 2a"),
    ("Dual(2+)", "2-"),
])
def test_evaluation(text, expected):
    assert eval_expression(text).render() == expected


def test_paper_style():
    assert eval_expression("2+ * 3+").render("paper") == "2⁻ + 4⁰"


def test_ambient_groups():
    assert ambient_of(parse_expression("1+ + 2_0")) == "G"
    assert ambient_of(parse_expression("2b")) == "H"
    assert ambient_of(parse_expression("Res[K](3+)")) == "K"
    assert eval_expression("1+ + 2_0", ambient="K").group == "K"
    assert expression_character("4_0").degree == 4


def test_mixed_names_have_no_ambient():
    with pytest.raises(UnknownNameError):
        eval_expression("3+ + 2b")


@pytest.mark.parametrize("text", ["5+", "Foo(1+)", "Res[Q](1+)", "Ind[H](1+)"])
def test_unknown_names(text):
    with pytest.raises(UnknownNameError):
        eval_expression(text)


def test_empty_expression():
    with pytest.raises(ExprParseError) as err:
        parse_expression("  ")
    assert err.value.position == 0


@pytest.mark.parametrize("text", ["2+ *", "2+ * )", "(1+ + 2+", "S2 3+", "1+ & 2+"])
def test_parse_errors(text):
    with pytest.raises(ExprParseError) as err:
        parse_expression(text)
    assert 0 <= err.value.position <= len(text)
    assert err.value.expected
    assert err.value.text == text
