from fractions import Fraction
from random import Random

import pytest

from octahedral.exact import (FIELD, I, OMEGA, ONE, SQRT2, SQRT3, ZERO, ZETA8, CyclotomicNumber, ExactMatrix,
                              cyclo_conj, cyclo_inv, cyclo_mul, cyclo_normalize, eigenline, mat_rank, parallel,
                              parse_pretty)


def _random(rng):
    return CyclotomicNumber(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(8))


def test_named_constants():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert OMEGA != ONE and OMEGA ** 3 == ONE
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO
    assert CyclotomicNumber.zeta(1) ** 24 == ONE
    assert CyclotomicNumber.zeta(1) ** 12 == -ONE


def test_rationals_compare_with_python_numbers():
    assert CyclotomicNumber.from_rational(Fraction(1, 2)) == Fraction(1, 2)
    assert CyclotomicNumber.from_rational(3) == 3
    assert CyclotomicNumber.from_rational(3).to_int() == 3
    assert hash(CyclotomicNumber.from_rational(2)) == hash(Fraction(2))


def test_field_axioms_on_random_elements():
    rng = Random(7)
    for _ in range(25):
        a, b, c = _random(rng), _random(rng), _random(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b - b == a
        if a:
            assert a * a.inverse() == ONE
            assert (b / a) * a == b


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conjugation_and_parts():
    z = CyclotomicNumber.from_rational(3) + I * 2
    assert z.conj() == CyclotomicNumber.from_rational(3) - I * 2
    assert z.real == 3
    assert z.imag == 2
    assert SQRT2.is_real() and not I.is_real()
    assert OMEGA.conj() == OMEGA * OMEGA


def test_galois_action():
    assert SQRT2.galois(5) == -SQRT2
    assert SQRT3.galois(5) == -SQRT3
    assert SQRT3.galois(13) == SQRT3
    assert I.galois(5) == I
    with pytest.raises(ValueError):
        ONE.galois(2)


def test_square_roots_of_rationals():
    assert CyclotomicNumber.sqrt_of_rational(18) == SQRT2 * 3
    assert CyclotomicNumber.sqrt_of_rational(Fraction(1, 3)) == SQRT3 / 3
    assert CyclotomicNumber.sqrt_of_rational(-2) == I * SQRT2
    assert CyclotomicNumber.sqrt_of_rational(6) == SQRT2 * SQRT3
    assert CyclotomicNumber.sqrt_of_rational(5) is None
    assert CyclotomicNumber.sqrt_of_rational(0) == ZERO


def test_text_forms():
    assert ONE.to_text() == "1,0,0,0,0,0,0,0"
    assert CyclotomicNumber.from_text(ONE.to_text()) == ONE
    assert (I * SQRT2).to_pretty() == "i*sqrt2"
    assert (SQRT2 / 6).to_pretty() == "1/6*sqrt2"
    assert ZERO.to_pretty() == "0"
    assert (ONE - I * SQRT2).to_pretty() == "1 - i*sqrt2"
    assert parse_pretty("-i*sqrt2") == -(I * SQRT2)
    assert parse_pretty("1/2 + 1/2*i*sqrt3") == -(OMEGA * OMEGA)
    assert parse_pretty("w^2") == OMEGA * OMEGA


def test_pretty_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_pretty("sqrt5")


def test_pretty_round_trip():
    rng = Random(11)
    for _ in range(20):
        x = _random(rng)
        assert parse_pretty(x.to_pretty()) == x


def test_matrix_arithmetic():
    m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert m.det() == -2
    assert m @ m.inverse() == ExactMatrix.identity(2)
    assert m.trace() == 5
    assert m.transpose() == ExactMatrix.from_rows([[1, 3], [2, 4]])
    u = ExactMatrix.from_rows([[ZERO, I], [I, ZERO]])
    assert u.conj_transpose() @ u == ExactMatrix.identity(2)


def test_rank_nullspace_solve():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    (v,) = m.nullspace()
    assert m.apply(v) == (ZERO, ZERO, ZERO)
    x = m.solve([6, 12, 2])
    assert m.apply(x) == tuple(CyclotomicNumber.from_rational(n) for n in (6, 12, 2))
    assert m.solve([1, 0, 0]) is None
    with pytest.raises(ValueError):
        m.inverse()


def test_signed_permutations():
    assert ExactMatrix.from_rows([[0, -1], [1, 0]]).is_signed_permutation()
    assert not ExactMatrix.from_rows([[1, 1], [0, 1]]).is_signed_permutation()
    assert not (ExactMatrix.identity(2) * 2).is_signed_permutation()


def test_eigenline_and_parallel():
    flip = ExactMatrix.from_rows([[1, 0], [0, -1]])
    (plus,) = eigenline(flip, 1)
    (minus,) = eigenline(flip, -1)
    assert parallel(plus, (ONE, ZERO)) is not None
    assert parallel(minus, (ZERO, ONE)) is not None
    assert eigenline(flip, 2) == []
    assert parallel((ONE * 2, ONE * 4), (ONE, ONE * 2)) == 2
    assert parallel((ONE, ZERO), (ZERO, ONE)) is None


def test_functional_aliases():
    eighth = cyclo_normalize([0] * 8 + [1])
    assert eighth.coeffs == (-1, 0, 0, 0, 1, 0, 0, 0)
    assert cyclo_normalize([0] * 12 + [1]) == -ONE
    zeta = CyclotomicNumber.zeta(1)
    assert cyclo_mul(zeta, cyclo_inv(zeta)) == ONE
    assert cyclo_inv(zeta) == CyclotomicNumber.zeta(23)
    assert cyclo_inv(ZETA8) == cyclo_conj(ZETA8)
    assert cyclo_conj(I) == -I
    assert cyclo_conj(SQRT2) == SQRT2
    assert mat_rank(ExactMatrix.zero(3, 3)) == 0
    assert mat_rank(ExactMatrix.identity(2)) == 2


def test_rank_of_transpose():
    rng = Random(3)
    for _ in range(5):
        m = ExactMatrix.from_rows([[_random(rng) for _ in range(3)] for _ in range(2)])
        assert m.rank() == m.transpose().rank()


def test_reflection_eigenline():
    m = ExactMatrix.from_rows([[-1, -SQRT3], [-SQRT3, 1]]) * Fraction(1, 2)
    (v,) = eigenline(m, 1)
    assert parallel(v, (-ONE, SQRT3)) is not None


def test_matrices_run_on_domain_matrices():
    m = ExactMatrix.from_rows([[1, I], [SQRT2, 3]])
    dm = m.to_domain()
    assert dm.domain == FIELD
    assert ExactMatrix.from_domain(dm) == m
    assert CyclotomicNumber.from_domain(dm.det()) == m.det() == 3 - I * SQRT2
    assert m @ m.inverse() == ExactMatrix.identity(2)
    reduced, pivots = ExactMatrix.from_rows([[2, 4], [1, 2]]).rref()
    assert pivots == (0,)
    assert reduced == ExactMatrix.from_rows([[1, 2], [0, 0]])
