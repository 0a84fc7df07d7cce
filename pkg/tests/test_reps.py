import dataclasses
from fractions import Fraction

import pytest

from octahedral.catalog import (ASIDE_ROW, HYPERCUBE_IMAGES, IRREP_IMAGES, QUATERNION_ROWS, SIX_MATRICES,
                                golden)
from octahedral.exact import I, ONE, ExactMatrix
from octahedral.quaternion import Q_C, Q_K, left_multiplication, quaternion_conjugation, right_multiplication
from octahedral.reps import (build_4_0_from_2pm, build_irrep, build_rep, charge_assignment, hypercube_closures,
                             hypercube_steps, invariant_complex_structures, irrep_attempts, literal_twist_images,
                             matrix_group_closure, realify, realize_quaternionic, reflection_eigenframe,
                             relation_failures, row_labels, structure_status)
from octahedral.utils import ClosureBudgetExceeded, HomomorphismViolation, WorkbenchError


@pytest.mark.parametrize("label", list(IRREP_IMAGES))
def test_irreducibles_realise_their_characters(label, table_g):
    rep = build_irrep(label)
    assert rep.character().values == table_g[label].values
    assert rep.note == golden()["irrep_variants"][label]
    rep.verify()


def test_displayed_3_plus_fails_before_the_inverted_variant():
    rep, attempts = irrep_attempts("3+")
    assert [a.passed for a in attempts] == [False, True]
    assert attempts[0].variant == "displayed"
    assert rep.note == "jd inverted"


def test_4_0_falls_back_to_the_hypercube():
    rep, attempts = irrep_attempts("4_0")
    assert not any(a.passed for a in attempts[:4])
    assert attempts[-1].variant == "hypercube"
    assert len(rep.distinct_images()) == 48


def test_unknown_irreducible():
    with pytest.raises(KeyError):
        irrep_attempts("5+")


def test_images_that_break_a_relation(g):
    with pytest.raises(HomomorphismViolation):
        build_rep(g, {"w": ExactMatrix.from_rows([[-1]]), "jd": ExactMatrix.from_rows([[1]])})


def test_images_that_do_not_generate(g):
    with pytest.raises(WorkbenchError):
        build_rep(g, {"w": ExactMatrix.from_rows([[1]])})


def test_unitarity_and_determinants():
    for label in ("2_0", "2+", "2-"):
        assert build_irrep(label).is_unitary()
    assert build_irrep("3-").determinants() == {ONE}
    assert -ONE in build_irrep("3+").determinants()


def test_2_0_images_are_the_six_matrices():
    assert set(build_irrep("2_0").distinct_images()) == set(SIX_MATRICES)


def test_realify():
    assert realify(ExactMatrix.from_rows([[I]])) == ExactMatrix.from_rows([[0, -1], [1, 0]])


@pytest.mark.parametrize("sign", [1, -1])
def test_4_0_from_the_spinors(sign, table_g):
    recipe = build_4_0_from_2pm(sign)
    assert recipe.rep.character().values == table_g["4_0"].values
    assert "wdw=d" in recipe.literal_failures
    recipe.rep.verify()


def test_literal_twist_keeps_the_quaternion_relations():
    images = literal_twist_images(1)
    assert relation_failures(images, ["i^2=-1", "w^3=1"]) == []


def test_4_0_sign_must_be_a_sign():
    with pytest.raises(ValueError):
        build_4_0_from_2pm(0)


def test_row_labels():
    assert row_labels("1++3-") == ["1+", "3-"]
    assert row_labels("1++1-+2_0") == ["1+", "1-", "2_0"]
    assert row_labels(ASIDE_ROW[0]) == ["2+", "2-"]


@pytest.mark.parametrize("row", list(QUATERNION_ROWS) + [ASIDE_ROW[0]])
def test_quaternionic_rows(row):
    action = realize_quaternionic(row)
    assert action.matches
    assert action.rep.degree == 4


def test_unknown_row():
    with pytest.raises(KeyError):
        realize_quaternionic("3+")


def test_complex_structures():
    assert invariant_complex_structures(realize_quaternionic("4_0").rep) == ()
    spinors = realize_quaternionic("2++2-").rep
    structures = invariant_complex_structures(spinors)
    assert set(structures) == {left_multiplication(Q_K), -left_multiplication(Q_K)}
    assert structure_status(spinors, right_multiplication(Q_C)) == (True, False)
    aside = realize_quaternionic(ASIDE_ROW[0]).rep
    assert left_multiplication(Q_C) in invariant_complex_structures(aside)


def test_eigenframe():
    frame = reflection_eigenframe(build_irrep("2_0"))
    assert len(frame.reflections) == 3
    assert frame.plus_matches and frame.minus_matches
    assert frame.orthogonal


def test_eigenframe_needs_a_plane():
    with pytest.raises(ValueError):
        reflection_eigenframe(build_irrep("3+"))


def test_charges():
    charges = charge_assignment()
    first, second = charges.as_rationals()
    assert first == (0, 1, -1)
    assert second == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
    assert charges.scale == Fraction(1, 3)


def test_charges_read_the_given_eigenframe():
    frame = reflection_eigenframe(build_irrep("2_0"))
    assert charge_assignment(frame) == charge_assignment()
    with pytest.raises(WorkbenchError):
        charge_assignment(dataclasses.replace(frame, plus=frame.minus))


def test_hypercube_closures():
    closures = hypercube_closures()
    assert [r.order for _, r in closures] == golden()["hypercube"]["orders"]
    assert all(r.signed_permutations for _, r in closures)


def test_hypercube_steps_extend_each_other():
    steps = hypercube_steps()
    assert [len(gens) for _, gens in steps] == [2, 5, 6]
    assert steps[0][1] == list(HYPERCUBE_IMAGES)
    assert steps[2][1][:5] == steps[1][1]
    assert steps[2][1][-1] == quaternion_conjugation()


def test_closure_cap():
    with pytest.raises(ClosureBudgetExceeded):
        matrix_group_closure(list(HYPERCUBE_IMAGES), cap=20)
