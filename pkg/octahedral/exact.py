"""
Exact arithmetic in the cyclotomic field Q(zeta_24) and dense linear algebra over it.

Field elements wrap sympy's algebraic-number polynomials in QQ.cyclotomic_field(24): the power
basis 1, z, ..., z^7 of z = exp(2*pi*i/24), reduced modulo Phi_24(x) = x^8 - x^4 + 1.
Matrices wrap DomainMatrix over the same field.  Both are canonical, so equality and hashing
are structural.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Optional, Sequence, Union

from funcparserlib.lexer import LexerError, TokenSpec, make_tokenizer
from funcparserlib.parser import NoParseError, finished, forward_decl, many, maybe, tok
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyclasses import ANP

logger = logging.getLogger(__name__)

DEGREE = 8
ORDER = 24
GALOIS_UNITS = (1, 5, 7, 11, 13, 17, 19, 23)

FIELD = QQ.cyclotomic_field(ORDER)

Scalar = Union["CyclotomicNumber", int, Fraction]


def _anp(descending: list) -> ANP:
    return ANP(descending, FIELD.mod, QQ)


def _rational_rep(q) -> ANP:
    q = Fraction(q)
    return _anp([QQ(q.numerator, q.denominator)] if q else [])


_GENERATOR = _anp([QQ(1), QQ(0)])
_ZETA_POWERS = tuple(_GENERATOR ** k for k in range(ORDER))
_ONE_REP = _rational_rep(1)


def _combine(terms: Iterable) -> ANP:
    """sum of q * z^k over (q, k) pairs, reduced in the field"""
    total = _anp([])
    for q, k in terms:
        if q:
            total = total + _rational_rep(q) * _ZETA_POWERS[k % ORDER]
    return total


class CyclotomicNumber:
    __slots__ = ("_rep", "_coeffs")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) <= DEGREE:
            rep = _anp([QQ(f.numerator, f.denominator) for f in reversed(fracs)])
        else:
            rep = _combine((f, k) for k, f in enumerate(fracs))
        self._rep, self._coeffs = rep, None

    @classmethod
    def _wrap(cls, rep: ANP) -> "CyclotomicNumber":
        obj = object.__new__(cls)
        obj._rep, obj._coeffs = rep, None
        return obj

    # constructors

    @classmethod
    def zeta(cls, k: int) -> "CyclotomicNumber":
        return cls._wrap(_ZETA_POWERS[k % ORDER])

    @classmethod
    def from_rational(cls, q) -> "CyclotomicNumber":
        return cls._wrap(_rational_rep(q))

    @classmethod
    def from_domain(cls, element: ANP) -> "CyclotomicNumber":
        """Wrap an element of FIELD."""
        return cls._wrap(element)

    def to_domain(self) -> ANP:
        return self._rep

    @staticmethod
    def sqrt_of_rational(q) -> Optional["CyclotomicNumber"]:
        """
        Square root of a rational inside the field, or None when it is not there.
        Only radicands whose squarefree part divides +-6 have roots in Q(zeta_24).
        """
        q = Fraction(q)
        if q == 0:
            return ZERO
        n = q.numerator * q.denominator
        root = I if n < 0 else ONE
        n = abs(n)
        for p, r in ((2, SQRT2), (3, SQRT3)):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                root = root * r
            root = root * p ** (e // 2)
        s = isqrt(n)
        if s * s != n:
            return None
        return root * Fraction(s, q.denominator)

    # access

    @property
    def coeffs(self) -> tuple:
        if self._coeffs is None:
            desc = self._rep.to_list()
            asc = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(desc)]
            self._coeffs = tuple(asc + [Fraction(0)] * (DEGREE - len(asc)))
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._rep

    def is_rational(self) -> bool:
        return len(self._rep.to_list()) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_int(self) -> int:
        q = self.to_rational()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def is_real(self) -> bool:
        return self == self.conj()

    # arithmetic

    @staticmethod
    def _coerce(x) -> Optional["CyclotomicNumber"]:
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicNumber.from_rational(x)
        return None

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __neg__(self) -> "CyclotomicNumber":
        return self._wrap(-self._rep)

    def __add__(self, other) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._rep + o._rep)

    __radd__ = __add__

    def __sub__(self, other) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._rep - o._rep)

    def __rsub__(self, other) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._rep * o._rep)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_24)")
        return self._wrap(_ONE_REP / self._rep)

    def __truediv__(self, other) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "CyclotomicNumber":
        if n < 0:
            return self.inverse() ** -n
        return self._wrap(self._rep ** n)

    def galois(self, k: int) -> "CyclotomicNumber":
        """The field automorphism z -> z^k for k coprime to 24."""
        if k % ORDER not in GALOIS_UNITS:
            raise ValueError(f"{k} is not a unit modulo {ORDER}")
        return self._wrap(_combine((q, j * k) for j, q in enumerate(self.coeffs)))

    def conj(self) -> "CyclotomicNumber":
        return self.galois(ORDER - 1)

    @property
    def real(self) -> "CyclotomicNumber":
        return (self + self.conj()) * Fraction(1, 2)

    @property
    def imag(self) -> "CyclotomicNumber":
        # (z - conj z) / 2i
        return (self - self.conj()) * I * Fraction(-1, 2)

    # serialization

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "CyclotomicNumber":
        parts = text.split(",")
        if len(parts) != DEGREE:
            raise ValueError(f"expected {DEGREE} comma-separated rationals, got {len(parts)}")
        return cls(Fraction(p.strip()) for p in parts)

    def to_pretty(self) -> str:
        coords = _pretty_coordinates(self)
        terms = []
        for q, name in zip(coords, _PRETTY_NAMES):
            if not q:
                continue
            if not name:
                terms.append(str(q))
            elif q == 1:
                terms.append(name)
            elif q == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{q}*{name}")
        if not terms:
            return "0"
        text = terms[0]
        for t in terms[1:]:
            text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return text

    @classmethod
    def from_pretty(cls, text: str) -> "CyclotomicNumber":
        return parse_pretty(text)

    def __str__(self) -> str:
        return self.to_pretty()

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.to_pretty()!r})"


ZERO = CyclotomicNumber()
ONE = CyclotomicNumber.from_rational(1)
I = CyclotomicNumber.zeta(6)
SQRT2 = CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(21)
SQRT3 = CyclotomicNumber.zeta(2) + CyclotomicNumber.zeta(22)
SQRT6 = SQRT2 * SQRT3
OMEGA = CyclotomicNumber.zeta(8)
ZETA8 = CyclotomicNumber.zeta(3)

_PRETTY_BASIS = (ONE, SQRT2, SQRT3, SQRT6, I, I * SQRT2, I * SQRT3, I * SQRT6)
_PRETTY_NAMES = ("", "sqrt2", "sqrt3", "sqrt2*sqrt3", "i", "i*sqrt2", "i*sqrt3", "i*sqrt2*sqrt3")
_NAMED = {"i": I, "sqrt2": SQRT2, "sqrt3": SQRT3, "w": OMEGA, "zeta": CyclotomicNumber.zeta(1)}


def as_cyclotomic(x: Scalar) -> CyclotomicNumber:
    c = CyclotomicNumber._coerce(x)
    if c is None:
        raise TypeError(f"cannot use {type(x).__name__} as a field element")
    return c


# functional aliases


def cyclo_normalize(raw: Sequence) -> CyclotomicNumber:
    return CyclotomicNumber(raw)


def cyclo_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a * b


def cyclo_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def cyclo_conj(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.conj()


@lru_cache(maxsize=None)
def _pretty_change_of_basis() -> "ExactMatrix":
    columns = [b.coeffs for b in _PRETTY_BASIS]
    m = ExactMatrix.from_rows([[columns[c][r] for c in range(DEGREE)] for r in range(DEGREE)])
    return m.inverse()


def _pretty_coordinates(x: CyclotomicNumber) -> list:
    inv = _pretty_change_of_basis()
    return [c.to_rational() for c in inv.apply(list(x.coeffs))]


_tokenize_pretty = make_tokenizer([
    TokenSpec("space", r"\s+"),
    TokenSpec("name", r"sqrt2|sqrt3|zeta|i|w"),
    TokenSpec("number", r"\d+"),
    TokenSpec("op", r"[-+*/^()]"),
])


def _fold(pair):
    value, rest = pair
    for sym, rhs in rest:
        if sym == "+":
            value = value + rhs
        elif sym == "-":
            value = value - rhs
        elif sym == "*":
            value = value * rhs
        else:
            value = value / rhs
    return value


@lru_cache(maxsize=None)
def _pretty_grammar():
    def op(s):
        return tok("op", s)

    expr = forward_decl()
    unary = forward_decl()
    number = tok("number") >> (lambda s: CyclotomicNumber.from_rational(int(s)))
    name = tok("name") >> _NAMED.__getitem__
    primary = number | name | (-op("(") + expr + -op(")"))
    powered = primary + maybe(-op("^") + tok("number")) >> (
        lambda t: t[0] ** int(t[1]) if t[1] is not None else t[0]
    )
    unary.define((-op("-") + unary >> (lambda x: -x)) | powered)
    term = unary + many((op("*") | op("/")) + unary) >> _fold
    expr.define(term + many((op("+") | op("-")) + term) >> _fold)
    return expr + -finished


def parse_pretty(text: str) -> CyclotomicNumber:
    """Parse the pretty form, e.g. "1/2 + 1/2*i*sqrt3" or "-1 + w^2"."""
    try:
        tokens = [t for t in _tokenize_pretty(text) if t.type != "space"]
        return _pretty_grammar().parse(tokens)
    except (LexerError, NoParseError) as e:
        raise ValueError(f"cannot parse field element {text!r}: {e}") from e


# linear algebra


class ExactMatrix:
    """Immutable dense matrix over Q(zeta_24), stored row-major; algebra runs on DomainMatrix."""

    __slots__ = ("rows", "cols", "entries", "_hash", "_dm")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_cyclotomic(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries = rows, cols, entries
        self._hash = None
        self._dm = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "ExactMatrix":
        if dm.domain != FIELD:
            dm = dm.convert_to(FIELD)
        rows, cols = dm.shape
        m = cls(rows, cols, [CyclotomicNumber.from_domain(x) for row in dm.to_list() for x in row])
        m._dm = dm
        return m

    def to_domain(self) -> DomainMatrix:
        if self._dm is None:
            data = [[x.to_domain() for x in self.row(r)] for r in range(self.rows)]
            self._dm = DomainMatrix(data, (self.rows, self.cols), FIELD)
        return self._dm

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [ONE if r == c else ZERO for r in range(n) for c in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls(n, n, [values[r] if r == c else ZERO for r in range(n) for c in range(n)])

    def __getitem__(self, rc: tuple) -> CyclotomicNumber:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def column(self, c: int) -> tuple:
        return self.entries[c::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(r)) for r in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return ExactMatrix.from_domain(self.to_domain().matmul(other.to_domain()))

    def apply(self, vector: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match columns")
        column = ExactMatrix(self.cols, 1, vector)
        return (self @ column).entries

    def _same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix.from_domain(self.to_domain() + other.to_domain())

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix.from_domain(self.to_domain() - other.to_domain())

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix.from_domain(-self.to_domain())

    def scale(self, s: Scalar) -> "ExactMatrix":
        s = as_cyclotomic(s)
        return ExactMatrix.from_domain(self.to_domain().scalarmul(s.to_domain()))

    def __mul__(self, s: Scalar) -> "ExactMatrix":
        if isinstance(s, ExactMatrix):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_domain(self.to_domain().transpose())

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [x.conj() for x in self.entries])

    def conj_transpose(self) -> "ExactMatrix":
        return self.transpose().conj()

    def trace(self) -> CyclotomicNumber:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self[k, k] for k in range(self.rows)), ZERO)

    def det(self) -> CyclotomicNumber:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        if not self.rows:
            return ONE
        return CyclotomicNumber.from_domain(self.to_domain().det())

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        return self.to_domain().rank()

    def rref(self) -> tuple:
        """(reduced row echelon form, pivot columns)."""
        if not self.rows or not self.cols:
            return self, ()
        reduced, pivots = self.to_domain().rref()
        return ExactMatrix.from_domain(reduced), tuple(pivots)

    def nullspace(self) -> list:
        """Basis (list of tuples) of {v : M v = 0}, one vector per free column."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for i, p in enumerate(pivots):
                v[p] = -reduced[i, f]
            basis.append(tuple(v))
        return basis

    def solve(self, rhs: Sequence) -> Optional[tuple]:
        """One solution of M x = rhs, or None when the system is inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length does not match rows")
        aug = ExactMatrix.from_rows([list(self.row(r)) + [rhs[r]] for r in range(self.rows)])
        reduced, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for i, p in enumerate(pivots):
            x[p] = reduced[i, self.cols]
        return tuple(x)

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        if self.rank() != self.rows:
            raise ValueError("matrix is singular")
        return ExactMatrix.from_domain(self.to_domain().inv())

    def is_signed_permutation(self) -> bool:
        if not self.is_square:
            return False
        for lines in (self.to_rows(), self.transpose().to_rows()):
            for line in lines:
                nonzero = [x for x in line if x]
                if len(nonzero) != 1 or nonzero[0] not in (ONE, -ONE):
                    return False
        return True

    def to_text(self) -> list:
        return [[x.to_text() for x in self.row(r)] for r in range(self.rows)]

    def to_pretty(self) -> list:
        return [[x.to_pretty() for x in self.row(r)] for r in range(self.rows)]

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_pretty()})"


def mat_rank(m: ExactMatrix) -> int:
    return m.rank()


def eigenline(m: ExactMatrix, lam: Scalar) -> list:
    """Basis of the lam-eigenspace of m; empty when lam is not an eigenvalue."""
    if not m.is_square:
        raise ValueError("eigenline needs a square matrix")
    return (m - ExactMatrix.identity(m.rows).scale(lam)).nullspace()


def parallel(u: Sequence, v: Sequence) -> Optional[CyclotomicNumber]:
    """The scalar s with u = s*v, or None when u is not a multiple of v."""
    s = None
    for x, y in zip(u, v):
        if y:
            t = as_cyclotomic(x) / y
            if s is None:
                s = t
            elif t != s:
                return None
        elif x:
            return None
    return s
