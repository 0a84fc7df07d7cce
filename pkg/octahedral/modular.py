"""
Arithmetic modulo a prime p with p = 1 (mod 24), used by the Dixon character-table method.
Scalars are elements of sympy's FiniteField(p); matrices are DomainMatrix over it.
"""
import logging

from sympy import FiniteField, Poly, Symbol, isprime
from sympy.ntheory import primitive_root
from sympy.polys.matrices import DomainMatrix

from .utils import PrimeUnsuitableError, settings

logger = logging.getLogger(__name__)


def check_prime(p: int, order: int, exponent: int) -> None:
    """
    Raises PrimeUnsuitableError unless p can carry the Dixon computation for a group
    of the given order and exponent:
      - p prime and not dividing |G|
      - p = 1 modulo 24 and modulo the exponent
      - p > 2*sqrt(|G|), so degrees lift uniquely
    """
    if not isprime(p):
        raise PrimeUnsuitableError(p, "not prime")
    if (p - 1) % exponent:
        raise PrimeUnsuitableError(p, f"not congruent to 1 modulo the exponent {exponent}")
    if (p - 1) % 24:
        raise PrimeUnsuitableError(p, "not congruent to 1 modulo 24")
    if order % p == 0:
        raise PrimeUnsuitableError(p, f"divides the group order {order}")
    if p * p <= 4 * order:
        raise PrimeUnsuitableError(p, f"not larger than 2*sqrt({order})")


def dixon_prime(order: int, exponent: int, requested: int = None) -> int:
    """
    Picks the prime for a Dixon computation: the requested one, else the configured one.
    Either way it is validated, never silently replaced.
    """
    p = settings.prime if requested is None else requested
    check_prime(p, order, exponent)
    logger.debug("Dixon prime %d for order %d, exponent %d", p, order, exponent)
    return p


def primitive_root_of_unity(n: int, p: int) -> int:
    """A fixed primitive n-th root of unity modulo p, derived from the least primitive root."""
    if (p - 1) % n:
        raise PrimeUnsuitableError(p, f"has no primitive {n}-th root of unity")
    return pow(int(primitive_root(p)), (p - 1) // n, p)


def residue(x, p: int) -> int:
    """The representative of a FiniteField(p) element in 0..p-1."""
    return int(x) % p


def nullspace_mod_p(m: DomainMatrix) -> DomainMatrix:
    """Row basis, in reduced echelon form, of {v : m v = 0} over the prime field of m."""
    basis = m.nullspace()
    if not basis.shape[0]:
        return basis
    reduced, _ = basis.rref()
    return reduced


def eigenspaces_mod_p(a: DomainMatrix) -> list:
    """
    Row bases of {v : a v = z v}, one per root z in F_p of the characteristic
    polynomial of a, in increasing order of z.
    """
    fp = a.domain
    p = fp.mod
    n = a.shape[0]
    charpoly = Poly(a.charpoly(), Symbol("x"), domain=fp)
    roots = sorted({residue(fp(int(z.p)) / fp(int(z.q)), p) for z in charpoly.ground_roots()})
    logger.debug("eigenvalues %s modulo %d", roots, p)
    return [nullspace_mod_p(a - DomainMatrix.diag([fp(z)] * n, fp)) for z in roots]
