"""
Character tables from scratch (Dixon's method over F_p) and character-level functors.
"""
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Mapping, Optional, Sequence, Union

from sympy import FiniteField
from sympy.polys.matrices import DomainMatrix

from .exact import ONE, ZERO, CyclotomicNumber
from .group import FiniteGroup, QuotientMap, class_power_map
from .modular import dixon_prime, eigenspaces_mod_p, primitive_root_of_unity, residue
from .utils import NonCharacterError, UnsupportedGroupError, WorkbenchError

logger = logging.getLogger(__name__)

ROOT_ORDER = 24


@dataclass(frozen=True, eq=False)
class Character:
    group: FiniteGroup
    values: tuple
    label: str = ""

    @property
    def degree(self) -> int:
        return self.values[0].to_int()

    def __call__(self, x: int) -> CyclotomicNumber:
        return self.values[self.group.class_of[x]]

    def _check(self, other: "Character") -> None:
        if other.group is not self.group:
            raise ValueError(f"characters live on different groups ({self.group.name}, {other.group.name})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return other.group is self.group and other.values == self.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)),
                         f"{self.label} + {other.label}")

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other) -> "Character":
        if isinstance(other, Character):
            return tensor(self, other)
        if isinstance(other, int):
            return Character(self.group, tuple(a * other for a in self.values), f"{other}*{self.label}")
        return NotImplemented

    __rmul__ = __mul__

    def relabel(self, label: str) -> "Character":
        return Character(self.group, self.values, label)

    def values_text(self) -> list:
        return [v.to_text() for v in self.values]


def paper_label(label: str) -> str:
    """1+ -> 1⁺, 3- -> 3⁻, 4_0 -> 4⁰; other labels unchanged."""
    if label.endswith("_0"):
        return label[:-2] + "⁰"
    if label.endswith("+"):
        return label[:-1] + "⁺"
    if label.endswith("-") and len(label) > 1:
        return label[:-1] + "⁻"
    return label


@dataclass(frozen=True)
class Decomposition:
    group: str
    terms: tuple  # (label, multiplicity) in table order, zero multiplicities dropped

    def __getitem__(self, label: str) -> int:
        return dict(self.terms).get(label, 0)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if other.group != self.group:
            raise ValueError("decompositions over different groups")
        order = [lbl for lbl, _ in self.terms] + [lbl for lbl, _ in other.terms if lbl not in self.as_dict()]
        total = {lbl: self[lbl] + other[lbl] for lbl in order}
        return Decomposition(self.group, tuple((lbl, m) for lbl, m in total.items() if m))

    def render(self, style: str = "ascii") -> str:
        if not self.terms:
            return "0"
        names = [paper_label(lbl) if style == "paper" else lbl for lbl, m in self.terms for _ in range(m)]
        return " + ".join(names)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    characters: tuple
    prime: int
    columns: tuple = ()
    column_names: tuple = ()

    def __post_init__(self):
        if not self.columns:
            object.__setattr__(self, "columns", tuple(range(len(self.group.classes))))
        if not self.column_names:
            names = tuple(self.group.words[self.group.classes[c].representative] for c in self.columns)
            object.__setattr__(self, "column_names", names)

    @property
    def labels(self) -> tuple:
        return tuple(c.label for c in self.characters)

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, key: Union[int, str]) -> Character:
        if isinstance(key, int):
            return self.characters[key]
        for c in self.characters:
            if c.label == key:
                return c
        raise KeyError(f"{key} is not an irreducible of {self.group.name}; known: {', '.join(self.labels)}")

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def decompose(self, chi: Character) -> Decomposition:
        return decompose(chi, self)

    def relabeled(self, names: Mapping[str, str], order: Sequence[str] = None,
                  columns: Sequence[int] = None, column_names: Sequence[str] = None) -> "CharacterTable":
        chars = [c.relabel(names.get(c.label, c.label)) for c in self.characters]
        if order:
            rank = {lbl: i for i, lbl in enumerate(order)}
            chars.sort(key=lambda c: rank.get(c.label, len(rank)))
        return CharacterTable(self.group, tuple(chars), self.prime,
                              tuple(columns or self.columns), tuple(column_names or ()))


# Dixon's method


def class_multiplication_coefficients(g: FiniteGroup) -> list:
    """c[j][k][l] = #{x in C_j : x^-1 z_l in C_k} for class representatives z_l."""
    r = len(g.classes)
    c = [[[0] * r for _ in range(r)] for _ in range(r)]
    for j, cls in enumerate(g.classes):
        for l, target in enumerate(g.classes):
            z = target.representative
            for x in cls.members:
                c[j][g.class_of[g.mul(g.inv(x), z)]][l] += 1
    return c


def _common_eigenvectors(matrices: list, p: int, r: int) -> list:
    """Split F_p^r into common eigenlines of the class matrices."""
    fp = FiniteField(p)
    spaces = [DomainMatrix.eye(r, fp)]
    for rows in matrices:
        if len(spaces) == r:
            break
        a = DomainMatrix.from_list(rows, fp)
        refined = []
        for basis in spaces:
            if basis.shape[0] == 1:
                refined.append(basis)
                continue
            # a restricted to the span of basis, in the coordinates of its pivot columns
            reduced, pivots = basis.rref()
            restricted = a.extract(list(pivots), list(range(r))) * reduced.transpose()
            pieces = [piece * reduced for piece in eigenspaces_mod_p(restricted)]
            if sum(piece.shape[0] for piece in pieces) != basis.shape[0]:
                raise WorkbenchError("dixon", "class matrix is not diagonalisable modulo p")
            refined.extend(pieces)
        spaces = refined
    if len(spaces) != r:
        raise WorkbenchError("dixon", "class matrices did not separate the characters")
    return [[residue(x, p) for x in s.to_list()[0]] for s in spaces]


def _lift(theta: list, g: FiniteGroup, fp, degree: int, powers: dict) -> tuple:
    """Lift the F_p class values of one character to Q(zeta_24) through a fixed root z."""
    p = fp.mod
    z = fp(primitive_root_of_unity(ROOT_ORDER, p))
    values = []
    for l, cls in enumerate(g.classes):
        n = cls.element_order
        step = ROOT_ORDER // n
        inv_n = fp(1) / fp(n)
        value = ZERO
        for k in range(n):
            m = fp(0)
            for t in range(n):
                m = m + theta[powers[t][l]] * z ** ((-step * k * t) % (p - 1))
            m = residue(m * inv_n, p)
            if m > degree:
                raise WorkbenchError("dixon", f"eigenvalue multiplicity {m} exceeds degree {degree}")
            if m:
                value = value + CyclotomicNumber.zeta(step * k) * m
        values.append(value)
    return tuple(values)


@lru_cache(maxsize=None)
def _dixon(g: FiniteGroup, p: int) -> tuple:
    r, order = len(g.classes), g.order
    fp = FiniteField(p)
    sizes = [fp(c.size) for c in g.classes]
    inv_class = [g.class_of[g.inv(c.representative)] for c in g.classes]
    coeffs = class_multiplication_coefficients(g)
    vectors = _common_eigenvectors([coeffs[j] for j in range(1, r)], p, r)

    powers = {t: class_power_map(g, t) for t in range(g.exponent)}
    rows = []
    for v in vectors:
        omega = [fp(x) / fp(v[0]) for x in v]
        s = fp(0)
        for l in range(r):
            s = s + omega[l] * omega[inv_class[l]] / sizes[l]
        target = residue(fp(order) / s, p)
        degree = next((d for d in range(1, isqrt(order) + 1) if d * d % p == target), None)
        if degree is None:
            raise WorkbenchError("dixon", "no integer degree matches the modular norm")
        theta = [omega[l] * fp(degree) / sizes[l] for l in range(r)]
        rows.append(_lift(theta, g, fp, degree, powers))

    rows.sort(key=lambda vals: (vals[0].to_int(), [x.to_text() for x in vals]))
    labels, counts = [], {}
    for vals in rows:
        d = vals[0].to_int()
        counts[d] = counts.get(d, 0) + 1
        labels.append(f"{d}.{counts[d]}")
    return tuple(zip(labels, rows))


def character_table(g: FiniteGroup, prime: int = None) -> CharacterTable:
    """
    Complete irreducible characters of g, computed by Dixon's method.
    Canonical labels are "<degree>.<n>", ordered by degree then by value text.
    """
    if ROOT_ORDER % g.exponent:
        raise UnsupportedGroupError(f"exponent {g.exponent} of {g.name} does not divide {ROOT_ORDER}")
    p = dixon_prime(g.order, g.exponent, prime)
    logger.info("Computing character table for %s (p = %d)", g.name, p)
    chars = tuple(Character(g, vals, label) for label, vals in _dixon(g, p))
    table = CharacterTable(g, chars, p)
    check_orthonormal(table)
    return table


def check_orthonormal(table: CharacterTable) -> None:
    for a in table:
        for b in table:
            expected = ONE if a is b else ZERO
            if inner_product(a, b) != expected:
                raise WorkbenchError("dixon", f"<{a.label}, {b.label}> != {expected}")


# inner products and decompositions


def inner_product(a: Character, b: Character) -> CyclotomicNumber:
    a._check(b)
    g = a.group
    total = ZERO
    for cls, x, y in zip(g.classes, a.values, b.values):
        if x and y:
            total = total + x * y.conj() * cls.size
    return total * Fraction(1, g.order)


def decompose(chi: Character, table: CharacterTable) -> Decomposition:
    """Exact multiplicities of the irreducibles in chi; raises NonCharacterError otherwise."""
    terms = []
    for irr in table:
        m = inner_product(chi, irr)
        if not m.is_rational() or m.to_rational().denominator != 1 or m.to_rational() < 0:
            raise NonCharacterError(f"multiplicity of {irr.label} is {m}")
        if m:
            terms.append((irr.label, m.to_int()))
    if sum(m * table[lbl].degree for lbl, m in terms) != chi.values[0]:
        raise NonCharacterError("multiplicities do not account for the degree")
    return Decomposition(chi.group.name, tuple(terms))


def recompose(decomposition: Decomposition, table: CharacterTable) -> Character:
    g = table.group
    values = [ZERO] * len(g.classes)
    for lbl, m in decomposition.terms:
        values = [v + x * m for v, x in zip(values, table[lbl].values)]
    return Character(g, tuple(values), decomposition.render())


def regular_character(g: FiniteGroup) -> Character:
    return Character(g, (CyclotomicNumber.from_rational(g.order),) + (ZERO,) * (len(g.classes) - 1), "reg")


# functors


class Functor(Enum):
    TENSOR = "*"
    SYM2 = "S2"
    ALT2 = "L2"
    SYM3 = "S3"
    ALT3 = "L3"
    MID3 = "M3"
    DUAL = "Dual"


@lru_cache(maxsize=None)
def _powers(g: FiniteGroup, n: int) -> tuple:
    return class_power_map(g, n)


def functor_character(a: Character, f: Functor, b: Optional[Character] = None) -> Character:
    """Classwise formulas for the tensor, symmetric, alternating, middle and dual functors."""
    g = a.group
    v = a.values
    if f is Functor.TENSOR:
        if b is None:
            raise ValueError("TENSOR needs a second character")
        a._check(b)
        return Character(g, tuple(x * y for x, y in zip(v, b.values)), f"{a.label} * {b.label}")
    if f is Functor.DUAL:
        return Character(g, tuple(x.conj() for x in v), f"Dual({a.label})")
    v2 = [v[k] for k in _powers(g, 2)]
    v3 = [v[k] for k in _powers(g, 3)]
    if f is Functor.SYM2:
        vals = [(x * x + y) * Fraction(1, 2) for x, y in zip(v, v2)]
    elif f is Functor.ALT2:
        vals = [(x * x - y) * Fraction(1, 2) for x, y in zip(v, v2)]
    elif f is Functor.SYM3:
        vals = [(x * x * x + x * y * 3 + z * 2) * Fraction(1, 6) for x, y, z in zip(v, v2, v3)]
    elif f is Functor.ALT3:
        vals = [(x * x * x - x * y * 3 + z * 2) * Fraction(1, 6) for x, y, z in zip(v, v2, v3)]
    elif f is Functor.MID3:
        vals = [(x * x * x - z) * Fraction(1, 3) for x, z in zip(v, v3)]
    else:
        raise ValueError(f"unknown functor {f}")
    return Character(g, tuple(vals), f"{f.value}({a.label})")


def tensor(a: Character, b: Character) -> Character:
    return functor_character(a, Functor.TENSOR, b)


def sym2(a: Character) -> Character:
    return functor_character(a, Functor.SYM2)


def alt2(a: Character) -> Character:
    return functor_character(a, Functor.ALT2)


def sym3(a: Character) -> Character:
    return functor_character(a, Functor.SYM3)


def alt3(a: Character) -> Character:
    return functor_character(a, Functor.ALT3)


def mid3(a: Character) -> Character:
    return functor_character(a, Functor.MID3)


def dual(a: Character) -> Character:
    return functor_character(a, Functor.DUAL)


# restriction, induction, inflation


def restrict_character(a: Character, sub: FiniteGroup) -> Character:
    if sub.parent is not a.group:
        raise ValueError(f"{sub.name} is not embedded in {a.group.name}")
    g = a.group
    vals = tuple(a.values[g.class_of[sub.embedding[c.representative]]] for c in sub.classes)
    return Character(sub, vals, f"Res[{sub.name}]({a.label})")


def induce_character(a: Character, g: FiniteGroup) -> Character:
    """Ind(a)(x) = (1/|sub|) sum over y in g with y^-1 x y in sub of a(y^-1 x y)."""
    sub = a.group
    if sub is g:
        return a
    if sub.parent is not g:
        raise ValueError(f"{sub.name} is not embedded in {g.name}")
    inside = sub.parent_index
    vals = []
    for cls in g.classes:
        total = ZERO
        for y in range(g.order):
            conj = g.conjugate(cls.representative, g.inv(y))
            if conj in inside:
                total = total + a(inside[conj])
        vals.append(total * Fraction(1, sub.order))
    return Character(g, tuple(vals), f"Ind[{g.name}]({a.label})")


def inflate_character(a: Character, qmap: QuotientMap) -> Character:
    if a.group is not qmap.target:
        raise ValueError("character does not live on the quotient")
    src = qmap.source
    vals = tuple(a.values[qmap.target.class_of[qmap(c.representative)]] for c in src.classes)
    return Character(src, vals, a.label)


# Frobenius-Schur and Wedderburn


def fs_indicator(a: Character) -> int:
    g = a.group
    total = ZERO
    for cls, k in zip(g.classes, _powers(g, 2)):
        total = total + a.values[k] * cls.size
    value = total * Fraction(1, g.order)
    if value not in (ONE, ZERO, -ONE):
        raise NonCharacterError(f"indicator of {a.label} is {value}; not irreducible")
    return value.to_int()


_KINDS = ("R", "C", "H")
_UNICODE = {"R": "ℝ", "C": "ℂ", "H": "ℍ"}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_PLAIN = str.maketrans({"ℝ": "R", "ℂ": "C", "ℍ": "H", **{s: str(d) for d, s in enumerate("₀₁₂₃₄₅₆₇₈₉")}})
_TERM = re.compile(r"^(\d*)\s*(?:M(\d+)\(([RCH])\)|([RCH]))$")


def _real_dim(block: tuple) -> int:
    kind, n = block
    return {"R": 1, "C": 2, "H": 4}[kind] * n * n


@dataclass(frozen=True)
class WedderburnType:
    blocks: tuple = field(default=())

    @classmethod
    def of(cls, blocks: Iterable[tuple]) -> "WedderburnType":
        return cls(tuple(sorted(blocks, key=lambda b: (_real_dim(b), _KINDS.index(b[0]), b[1]))))

    @property
    def real_dimension(self) -> int:
        return sum(_real_dim(b) for b in self.blocks)

    def render(self, style: str = "unicode") -> str:
        parts, counts = [], {}
        for b in self.blocks:
            counts[b] = counts.get(b, 0) + 1
        for (kind, n), m in counts.items():
            field_name = _UNICODE[kind] if style == "unicode" else kind
            if n == 1:
                body = field_name
            elif style == "unicode":
                body = f"M{str(n).translate(_SUBSCRIPTS)}({field_name})"
            else:
                body = f"M{n}({field_name})"
            parts.append(f"{m if m > 1 else ''}{body}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "WedderburnType":
        """Accepts "2R + M2(R) + M2(C)" and the unicode form "2ℝ + M₂(ℝ) + M₂(ℂ)"."""
        blocks = []
        for term in text.translate(_PLAIN).split("+"):
            match = _TERM.match(term.strip())
            if not match:
                raise ValueError(f"cannot parse algebra term {term.strip()!r}")
            mult, n, kind, bare = match.groups()
            block = (bare, 1) if bare else (kind, int(n))
            blocks.extend([block] * int(mult or 1))
        return cls.of(blocks)


def real_wedderburn(g: FiniteGroup, table: CharacterTable = None) -> WedderburnType:
    """
    Real group algebra type from the indicators: +1 gives M_n(R), -1 gives M_{n/2}(H),
    and each conjugate pair of indicator-0 characters gives one M_n(C).
    """
    table = table or character_table(g)
    blocks, paired = [], set()
    for chi in table:
        ind = fs_indicator(chi)
        if ind == 1:
            blocks.append(("R", chi.degree))
        elif ind == -1:
            blocks.append(("H", chi.degree // 2))
        elif chi.values not in paired:
            paired.add(tuple(x.conj() for x in chi.values))
            blocks.append(("C", chi.degree))
    result = WedderburnType.of(blocks)
    if result.real_dimension != g.order:
        raise WorkbenchError("wedderburn", f"real dimension {result.real_dimension} != |{g.name}| = {g.order}")
    return result


def complex_wedderburn(g: FiniteGroup, table: CharacterTable = None) -> WedderburnType:
    table = table or character_table(g)
    return WedderburnType.of(("C", chi.degree) for chi in table)


# emitters


def table_json(table: CharacterTable) -> dict:
    g = table.group
    return {
        "group": g.name,
        "prime": table.prime,
        "classes": [
            {"rep_word": name, "element_order": g.classes[c].element_order, "size": g.classes[c].size}
            for c, name in zip(table.columns, table.column_names)
        ],
        "irreps": [
            {"label": chi.label, "degree": chi.degree, "values": [chi.values[c].to_text() for c in table.columns]}
            for chi in table
        ],
    }


def table_markdown(table: CharacterTable) -> str:
    header = "| | " + " | ".join(table.column_names) + " |"
    rule = "|---" * (len(table.columns) + 1) + "|"
    lines = [header, rule]
    for chi in table:
        cells = [chi.values[c].to_pretty() for c in table.columns]
        lines.append(f"| {paper_label(chi.label)} | " + " | ".join(cells) + " |")
    return "\n".join(lines)
