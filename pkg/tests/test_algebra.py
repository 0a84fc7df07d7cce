from fractions import Fraction

import pytest

from octahedral import algebra
from octahedral.algebra import AlgebraElement, block_dimension, central_idempotent, convolve, one, ratio
from octahedral.catalog import golden, group_by_name
from octahedral.chartab import WedderburnType
from octahedral.exact import SQRT2, parse_pretty


def test_convolution(g):
    i, j = AlgebraElement.basis(g, "i"), AlgebraElement.basis(g, "j")
    assert i * j == AlgebraElement.basis(g, "k")
    assert i * i == AlgebraElement.basis(g, "-1")
    assert (i + j) * one(g) == i + j
    assert not (i - i)


def test_elements_of_different_groups_do_not_mix(g, k):
    with pytest.raises(ValueError):
        AlgebraElement.basis(g, "w") + AlgebraElement.basis(k, "w")


def test_ratio(g):
    a = AlgebraElement.from_terms(g, [(1, "1"), (2, "w")])
    assert ratio(a * 3, a) == 3
    assert ratio(a, AlgebraElement.basis(g, "d")) is None
    assert ratio(a, AlgebraElement(g, {})) is None


def test_lepton_idempotents():
    leptons = algebra.lepton_idempotents()
    assert leptons.all_passed
    assert len(leptons.checks) == 11


def test_lepton_idempotents_in_the_quotient():
    assert algebra.lepton_idempotents(group_by_name("Sym3")).all_passed


def test_m2_isomorphism():
    iso = algebra.lepton_m2_isomorphism()
    assert iso.all_passed
    assert [name for name, _ in iso.basis] == ["r", "rd", "u", "rdu"]
    assert len(iso.checks) == 2 + 16


def test_central_idempotents(table_g):
    es = algebra.idempotents()
    g = table_g.group
    total = AlgebraElement(g, {})
    for chi in table_g:
        e = es[chi.label]
        assert e * e == e
        assert e.is_central()
        assert block_dimension(e) == chi.degree ** 2
        total = total + e
    assert total == one(g)
    assert not es["1+"] * es["3-"]
    assert (es["2+"] + es["2-"]).is_rational()
    assert not es["2+"].is_rational()


def test_central_idempotent_of_the_trivial_character(table_g):
    e = central_idempotent(table_g["1+"])
    assert all(c == Fraction(1, 48) for c in e.coeffs.values())
    assert len(e.coeffs) == 48


def test_projector_scales():
    recorded = golden()["idempotents"]
    scales = {p.name: p.scale for p in algebra.projector_report()}
    assert scales["M4(R)"] == parse_pretty(recorded["projector_scale_M4R"])
    assert scales["M2(C)"] == parse_pretty(recorded["projector_scale_M2C"])
    assert scales["(1-(-1))/2"] == 1


def test_cube_sum_on_the_spinors():
    es = algebra.idempotents()
    block = es["2+"] + es["2-"]
    assert algebra.cube_sum() * block == block * -4


@pytest.mark.parametrize("sign", [1, -1])
def test_complex_structure(sign):
    recorded = golden()["idempotents"]
    report = algebra.complex_structure_check(sign)
    assert report.displayed_vanishes_on_block is recorded["displayed_vanishes_on_block"]
    assert not report.displayed_in_block
    assert report.displayed_square_factor == parse_pretty(recorded["displayed_square_factor"])
    assert report.exchanged
    assert report.exchanged_square_factor == parse_pretty(recorded["exchanged_square_factor"])
    assert report.solved_scalar == SQRT2 / 6
    assert report.exchanged_in_block is recorded["exchanged_in_block"]
    assert report.squares_to_minus_e
    assert report.commutes_with_block


def test_complex_structure_signs_are_opposite():
    plus, minus = (algebra.complex_structure_check(s) for s in (1, -1))
    assert plus.structure == -minus.structure
    assert plus.to_json()["sign"] == 1


def test_complex_structure_rejects_other_signs():
    with pytest.raises(ValueError):
        algebra.complex_structure_check(2)


def test_displayed_element_is_killed_by_the_block():
    es = algebra.idempotents()
    assert not algebra.iota_zero() * (es["2+"] + es["2-"])


def test_dirac_relation_table():
    recorded = golden()["dirac"]
    table = algebra.dirac_relation_table()
    assert dict(table.squares) == recorded["squares"]
    twisted = {f"{x},{y}": e.witness for (x, y), e in table.pairs.items()
               if e.kind == "twisted" and algebra.QUINTUPLE.index(x) < algebra.QUINTUPLE.index(y)}
    assert twisted == recorded["twisted"]
    assert sorted(table.deviations()) == sorted(tuple(key.split(",")) for key in recorded["twisted"])
    assert table.pairs[("i", "j")].kind == "anticommute"
    assert table.pairs[("i", "d")].agrees
    assert len(table.to_json()["pairs"]) == 20


def test_quotient_algebra_chain():
    recorded = golden()["wedderburn"]["real"]
    chain = algebra.quotient_algebra_chain()
    assert [name for name, _ in chain] == ["G", "Sym4", "Sym3", "Sym2", "Sym1"]
    for name, t in chain:
        assert t == WedderburnType.parse(recorded[name])


def test_normal_subgroup_algebras():
    rows = algebra.normal_subgroup_algebras()
    assert [(name, order) for name, order, _ in rows] == [("1", 1), ("Z2", 2), ("Q8", 8), ("2.Alt4", 24), ("G", 48)]
    assert rows[2][2].render("ascii") == "4R + H"


def test_convolve_matches_product(g):
    w, d = AlgebraElement.basis(g, "w"), AlgebraElement.basis(g, "d")
    assert convolve(w, d) == w * d
    assert convolve(d, w) == AlgebraElement.basis(g, g.mul(g.evaluate("d"), g.evaluate("w")))
    assert convolve(w + d, one(g)) == w + d


def test_block_support_rejects_elements_outside_the_block(g):
    es = algebra.idempotents()
    block = es["2+"] + es["2-"]
    i = AlgebraElement.basis(g, "i")
    assert algebra.supported_in(i * block, block)
    assert not algebra.supported_in(i, block)
    assert not algebra.supported_in(es["3+"], block)
    # both forms of the complex structure also act on 3+
    assert algebra.iota_zero(g) * es["3+"]
    assert not algebra.supported_in(algebra.iota_zero(g, exchanged=True), block)
