import pytest
from sympy import FiniteField
from sympy.polys.matrices import DomainMatrix

from octahedral.modular import (check_prime, dixon_prime, eigenspaces_mod_p, nullspace_mod_p,
                                primitive_root_of_unity, residue)
from octahedral.utils import PrimeUnsuitableError

F73 = FiniteField(73)


def _residues(m, p=73):
    return [[residue(x, p) for x in row] for row in m.to_list()]


def test_field_scalars():
    a = F73(5)
    assert residue(a + 70, 73) == 2
    assert residue(a / a, 73) == 1
    assert residue(a ** 72, 73) == 1
    assert residue(F73(-1), 73) == 72


def test_default_prime_is_accepted():
    assert dixon_prime(48, 24) == 73
    assert dixon_prime(48, 24, 97) == 97


@pytest.mark.parametrize("p", [74, 7, 5, 13, 3])
def test_unsuitable_primes(p):
    with pytest.raises(PrimeUnsuitableError):
        check_prime(p, 48, 24)


def test_small_prime_for_large_group():
    # 73^2 < 4 * 2001
    with pytest.raises(PrimeUnsuitableError):
        check_prime(73, 2001, 24)


def test_primitive_roots_of_unity():
    z = primitive_root_of_unity(24, 73)
    assert pow(z, 24, 73) == 1
    assert pow(z, 12, 73) != 1
    assert pow(z, 8, 73) != 1
    with pytest.raises(PrimeUnsuitableError):
        primitive_root_of_unity(24, 89)


def test_nullspace_mod_p():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = _residues(nullspace_mod_p(DomainMatrix.from_list(rows, F73)))
    assert len(basis) == 2
    for v in basis:
        for r in rows:
            assert sum(x * y for x, y in zip(r, v)) % 73 == 0
    assert nullspace_mod_p(DomainMatrix.eye(3, F73)).shape[0] == 0


def test_eigenspaces_follow_characteristic_roots():
    spaces = eigenspaces_mod_p(DomainMatrix.from_list([[2, 0, 0], [0, 2, 0], [0, 0, 5]], F73))
    assert [s.shape[0] for s in spaces] == [2, 1]
    assert _residues(spaces[1]) == [[0, 0, 1]]

    swap = eigenspaces_mod_p(DomainMatrix.from_list([[0, 1], [1, 0]], F73))
    assert [_residues(s) for s in swap] == [[[1, 1]], [[1, 72]]]


def test_no_eigenspaces_without_roots_in_the_field():
    # x^2 - 5 is irreducible modulo 73
    assert eigenspaces_mod_p(DomainMatrix.from_list([[0, 1], [5, 0]], F73)) == []
