import pytest

from octahedral.catalog import MATRICES
from octahedral.exact import I, ONE, SQRT2, ExactMatrix
from octahedral.quaternion import (Q_C, Q_I, Q_J, Q_K, Q_ONE, Q_W, Quaternion, left_multiplication,
                                   parse_quaternion_map, quaternion_conjugation, right_multiplication)


def test_hamilton_relations():
    assert Q_I * Q_J == Q_K
    assert Q_J * Q_I == -Q_K
    assert Q_I * Q_I == Q_J * Q_J == Q_K * Q_K == -Q_ONE
    assert Q_W ** 3 == Q_ONE
    assert Q_W ** -1 == Q_W ** 2
    assert Q_C * Q_C == -Q_ONE


def test_norm_and_inverse():
    q = Quaternion(1, 2, 3, 4)
    assert q.norm() == 30
    assert q * q.inverse() == Q_ONE
    assert Q_W.norm() == ONE
    with pytest.raises(ZeroDivisionError):
        Quaternion().inverse()


def test_coefficients_must_be_real():
    with pytest.raises(ValueError):
        Quaternion(I)
    assert Quaternion(SQRT2).a == SQRT2


@pytest.mark.parametrize("name, q", [("i", Q_I), ("j", Q_J), ("k", Q_K), ("w", Q_W), ("c", Q_C)])
def test_two_by_two_matrices(name, q):
    assert q.to_matrix() == MATRICES[name]


def test_matrices_multiply_like_quaternions():
    assert (Q_W * Q_C).to_matrix() == MATRICES["w"] @ MATRICES["c"]


def test_quaternion_maps():
    f = parse_quaternion_map("c^-1qc")
    assert f.left == Q_C.inverse()
    assert f.right == Q_C
    assert f(Q_ONE) == Q_ONE
    g = parse_quaternion_map("kqc")
    assert g(Q_ONE) == Q_K * Q_C
    with pytest.raises(ValueError):
        parse_quaternion_map("qiq")
    with pytest.raises(ValueError):
        parse_quaternion_map("ij")


def test_row_convention():
    # v @ L(x) @ L(y) are the coordinates of y x q
    assert left_multiplication(Q_I) @ left_multiplication(Q_J) == -left_multiplication(Q_K)
    assert right_multiplication(Q_I) @ right_multiplication(Q_J) == right_multiplication(Q_K)
    assert left_multiplication(Q_ONE) == ExactMatrix.identity(4)


def test_conjugation_matrix():
    m = quaternion_conjugation()
    assert m.det() == -1
    assert m @ m == ExactMatrix.identity(4)
    assert m.is_signed_permutation()
