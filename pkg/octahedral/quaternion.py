"""
Quaternions a + bi + cj + dk with real coefficients in Q(zeta_24), and the 4x4 matrices of
real-linear maps on them in the basis 1, i, j, k.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .exact import I, ONE, SQRT2, ZERO, CyclotomicNumber, ExactMatrix, as_cyclotomic
from .words import Neg, Power, Product, Sym, Word, parse_word


@dataclass(frozen=True)
class Quaternion:
    a: CyclotomicNumber = ZERO
    b: CyclotomicNumber = ZERO
    c: CyclotomicNumber = ZERO
    d: CyclotomicNumber = ZERO

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = as_cyclotomic(getattr(self, name))
            if not value.is_real():
                raise ValueError(f"quaternion coefficient {name} = {value} is not real")
            object.__setattr__(self, name, value)

    @property
    def parts(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(x + y for x, y in zip(self.parts, other.parts)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(x - y for x, y in zip(self.parts, other.parts)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(*(-x for x in self.parts))

    def __mul__(self, other) -> "Quaternion":
        if not isinstance(other, Quaternion):
            s = as_cyclotomic(other)
            return Quaternion(*(x * s for x in self.parts))
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = other.parts
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other) -> "Quaternion":
        s = as_cyclotomic(other)
        return Quaternion(*(s * x for x in self.parts))

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> CyclotomicNumber:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() * n.inverse()

    def __pow__(self, n: int) -> "Quaternion":
        base = self if n >= 0 else self.inverse()
        result = Q_ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def to_matrix(self) -> ExactMatrix:
        """The 2x2 complex matrix a + b*i + c*j + d*k with i = M(0,1), j = M(0,i), k = M(i,0)."""
        return ExactMatrix.from_rows([
            [self.a + self.d * I, self.b + self.c * I],
            [-self.b + self.c * I, self.a - self.d * I],
        ])

    def __str__(self) -> str:
        terms = []
        for x, unit in zip(self.parts, ("", "i", "j", "k")):
            if x:
                terms.append(f"({x.to_pretty()}){unit}" if unit else f"({x.to_pretty()})")
        return " + ".join(terms) or "0"


Q_ONE = Quaternion(ONE)
Q_I = Quaternion(ZERO, ONE)
Q_J = Quaternion(ZERO, ZERO, ONE)
Q_K = Quaternion(ZERO, ZERO, ZERO, ONE)
Q_W = (-Q_ONE + Q_I + Q_J + Q_K) * Fraction(1, 2)
Q_C = (Q_J - Q_K) * SQRT2.inverse()

BASIS = (Q_ONE, Q_I, Q_J, Q_K)
NAMED = {"1": Q_ONE, "i": Q_I, "j": Q_J, "k": Q_K, "w": Q_W, "c": Q_C}


def coordinates(q: Quaternion) -> tuple:
    return q.parts


def action_matrix(f: Callable[[Quaternion], Quaternion]) -> ExactMatrix:
    """Row r holds the coordinates of f(e_r); the matrix acts on row vectors from the right."""
    return ExactMatrix.from_rows([list(coordinates(f(e))) for e in BASIS])


def evaluate_quaternion(word: Word, named: Mapping[str, Quaternion] = None) -> Quaternion:
    named = NAMED if named is None else named
    if isinstance(word, Sym):
        if word.name not in named:
            raise ValueError(f"unknown quaternion {word.name}")
        return named[word.name]
    if isinstance(word, Neg):
        return -evaluate_quaternion(word.body, named)
    if isinstance(word, Power):
        return evaluate_quaternion(word.body, named) ** word.exponent
    acc = Q_ONE
    for f in word.factors:
        acc = acc * evaluate_quaternion(f, named)
    return acc


@dataclass(frozen=True)
class QuaternionMap:
    """q -> left * q * right, written the way it is read, e.g. "w^-1qw" or "kqc"."""
    text: str
    left: Quaternion
    right: Quaternion

    def __call__(self, q: Quaternion) -> Quaternion:
        return self.left * q * self.right

    def matrix(self) -> ExactMatrix:
        return action_matrix(self)


def parse_quaternion_map(text: str) -> QuaternionMap:
    """Splits a word around its single q, e.g. "c^-1qc" into c^-1 and c."""
    word = parse_word(text)
    factors = list(word.factors) if isinstance(word, Product) else [word]
    marks = [n for n, f in enumerate(factors) if f == Sym("q")]
    if len(marks) != 1:
        raise ValueError(f"{text!r} must contain q exactly once at top level")
    n = marks[0]
    left = evaluate_quaternion(Product(tuple(factors[:n])))
    right = evaluate_quaternion(Product(tuple(factors[n + 1:])))
    return QuaternionMap(text, left, right)


def left_multiplication(x: Quaternion) -> ExactMatrix:
    return action_matrix(lambda q: x * q)


def right_multiplication(x: Quaternion) -> ExactMatrix:
    return action_matrix(lambda q: q * x)


def quaternion_conjugation() -> ExactMatrix:
    """q -> conj(q), determinant -1."""
    return action_matrix(lambda q: q.conj())
