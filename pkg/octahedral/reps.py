"""
Explicit matrix representations of G: built from generator images, checked against the
Cayley table, and compared with the character table.

Table convention: image(x*s) = image(x) @ image(s). Quaternionic actions are written as
row-vector matrices (row r = coordinates of f(e_r)), which compose the same way for
actions of the form q -> a q b read left to right.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from .catalog import (ASIDE_ROW, G_RELATIONS, HYPERCUBE_IMAGES, IRREP_IMAGES, QUATERNION_ROWS,
                      binary_octahedral, named_table)
from .chartab import Character, Decomposition
from .exact import I, OMEGA, ONE, SQRT3, ZERO, CyclotomicNumber, ExactMatrix, eigenline, parallel
from .group import FiniteGroup, close_matrices
from .quaternion import (Q_I, Q_J, Q_K, QuaternionMap, left_multiplication, parse_quaternion_map,
                         quaternion_conjugation)
from .utils import HomomorphismViolation, RelationFailure, WorkbenchError
from .words import Neg, Power, Sym, parse_relation, parse_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MatrixRep:
    group: FiniteGroup
    images: Mapping[str, ExactMatrix]
    table: tuple
    label: str = ""
    note: str = ""

    @property
    def degree(self) -> int:
        return self.table[0].rows

    def __call__(self, x: Union[int, str]) -> ExactMatrix:
        return self.table[x if isinstance(x, int) else self.group.evaluate(x)]

    def character(self) -> Character:
        g = self.group
        return Character(g, tuple(self.table[c.representative].trace() for c in g.classes), self.label)

    def verify(self) -> None:
        """image(xy) = image(x) image(y) for every pair of elements."""
        g, t = self.group, self.table
        for a in range(g.order):
            for b in range(g.order):
                if t[g.mul(a, b)] != t[a] @ t[b]:
                    raise HomomorphismViolation(g.words[a], g.words[b], self.label or g.name)

    def is_unitary(self) -> bool:
        one = ExactMatrix.identity(self.degree)
        return all(m.conj_transpose() @ m == one for m in self.table)

    def determinants(self) -> set:
        return {m.det() for m in self.table}

    def distinct_images(self) -> list:
        seen = []
        for m in self.table:
            if m not in seen:
                seen.append(m)
        return seen

    def dump(self) -> list:
        return [{"word": w, "matrix": m.to_text()} for w, m in zip(self.group.words, self.table)]


def build_rep(g: FiniteGroup, images: Mapping[str, ExactMatrix], label: str = "", note: str = "") -> MatrixRep:
    """
    Extends images of generating words to the whole group.

    - images: word in g -> matrix, e.g. {"w": W, "jd": J}
    - raises HomomorphismViolation with the (element, generator) pair when two routes disagree
    """
    if not images:
        raise ValueError("images are required")
    steps = [(word, g.evaluate(word), m) for word, m in images.items()]
    n = steps[0][2].rows
    if any(not m.is_square or m.rows != n for _, _, m in steps):
        raise ValueError("images must be square matrices of one size")
    logger.info("Building representation %s of %s", label or "(unnamed)", g.name)

    table = [None] * g.order
    table[0] = ExactMatrix.identity(n)
    queue = [0]
    for x in queue:
        for word, s, m in steps:
            y = g.mul(x, s)
            image = table[x] @ m
            if table[y] is None:
                table[y] = image
                queue.append(y)
            elif table[y] != image:
                raise HomomorphismViolation(g.words[x], word, label or g.name)
    if len(queue) != g.order:
        raise WorkbenchError("rep", f"{', '.join(images)} do not generate {g.name}")
    return MatrixRep(g, dict(images), tuple(table), label, note)


def evaluate_matrix_word(word, images: Mapping[str, ExactMatrix]) -> ExactMatrix:
    if isinstance(word, str):
        word = parse_word(word)
    n = next(iter(images.values())).rows
    if isinstance(word, Sym):
        if word.name not in images:
            raise KeyError(word.name)
        return images[word.name]
    if isinstance(word, Neg):
        return -evaluate_matrix_word(word.body, images)
    if isinstance(word, Power):
        base = evaluate_matrix_word(word.body, images)
        if word.exponent < 0:
            base = base.inverse()
        acc = ExactMatrix.identity(n)
        for _ in range(abs(word.exponent)):
            acc = acc @ base
        return acc
    acc = ExactMatrix.identity(n)
    for f in word.factors:
        acc = acc @ evaluate_matrix_word(f, images)
    return acc


def relation_failures(images: Mapping[str, ExactMatrix], relations: Sequence[str] = G_RELATIONS) -> list:
    """Relations (as written) whose sides disagree on the given images."""
    n = next(iter(images.values())).rows
    named = {"1": ExactMatrix.identity(n), **images}
    failed = []
    for text in relations:
        sides = [evaluate_matrix_word(side, named) for side in parse_relation(text)]
        if any(s != sides[0] for s in sides[1:]):
            failed.append(text)
    return failed


# irreducibles of G

VARIANTS = (
    ("displayed", False, False),
    ("jd inverted", False, True),
    ("w inverted", True, False),
    ("both inverted", True, True),
)


@dataclass(frozen=True)
class VariantAttempt:
    variant: str
    passed: bool
    reason: str = ""


def _attempts(g: FiniteGroup, label: str, pair: tuple, expected: Character, source: str) -> tuple:
    w_image, jd_image = pair
    attempts = []
    for name, flip_w, flip_jd in VARIANTS:
        images = {
            "w": w_image.inverse() if flip_w else w_image,
            "jd": jd_image.inverse() if flip_jd else jd_image,
        }
        if source == "displayed" or name != "displayed":
            variant = name if source == "displayed" else f"{source}, {name}"
        else:
            variant = source
        try:
            rep = build_rep(g, images, label, variant)
        except HomomorphismViolation as e:
            attempts.append(VariantAttempt(variant, False, str(e)))
            continue
        if rep.character().values != expected.values:
            attempts.append(VariantAttempt(variant, False, "character differs from the table row"))
            continue
        attempts.append(VariantAttempt(variant, True))
        return rep, tuple(attempts)
    return None, tuple(attempts)


def irrep_attempts(label: str, g: FiniteGroup = None) -> tuple:
    """(rep or None, attempts) trying the displayed images, their inverse variants, then hypercube images for 4_0."""
    g = g or binary_octahedral()
    if label not in IRREP_IMAGES:
        raise KeyError(f"{label} has no displayed images; known: {', '.join(IRREP_IMAGES)}")
    expected = named_table("G")[label]
    rep, attempts = _attempts(g, label, IRREP_IMAGES[label], expected, "displayed")
    if rep is None and label == "4_0":
        rep, more = _attempts(g, label, HYPERCUBE_IMAGES, expected, "hypercube")
        attempts += more
    return rep, attempts


@lru_cache(maxsize=None)
def build_irrep(label: str, g: FiniteGroup = None) -> MatrixRep:
    logger.info("Building irreducible %s", label)
    rep, attempts = irrep_attempts(label, g)
    if rep is None:
        raise RelationFailure("w", "jd", f"no image variant for {label} verifies: {attempts[-1].reason}")
    rep.verify()
    return rep


# 4_0 from 2+ or 2-


def realify(m: ExactMatrix) -> ExactMatrix:
    """Complex n x n to real 2n x 2n; a + ib becomes [[a, -b], [b, a]]."""
    rows = []
    for r in range(m.rows):
        top, bottom = [], []
        for c in range(m.cols):
            z = m[r, c]
            top += [z.real, -z.imag]
            bottom += [z.imag, z.real]
        rows += [top, bottom]
    return ExactMatrix.from_rows(rows)


def conjugation_matrix(n: int) -> ExactMatrix:
    """Complex conjugation on C^n in realified coordinates."""
    return ExactMatrix.diagonal([ONE, -ONE] * n)


def _with_derived(images: dict) -> dict:
    # j = w^-1 i w and k = w^-1 j w from iw = wj, jw = wk
    w_inv = images["w"].inverse()
    out = dict(images)
    out["j"] = w_inv @ images["i"] @ images["w"]
    out["k"] = w_inv @ out["j"] @ images["w"]
    return out


@dataclass(frozen=True)
class TwistedRecipe:
    rep: MatrixRep
    twist: CyclotomicNumber
    literal_failures: tuple


def literal_twist_images(sign: int, twist: CyclotomicNumber = OMEGA) -> dict:
    """i -> R(rho(i)), w -> R(twist rho(w)), d -> R(rho(d)) K as first written."""
    base = build_irrep("2+" if sign > 0 else "2-")
    k = conjugation_matrix(2)
    return {
        "i": realify(base("i")),
        "w": realify(base("w") * twist),
        "d": realify(base("d")) @ k,
    }


def build_4_0_from_2pm(sign: int = 1) -> TwistedRecipe:
    """
    4_0 as the realification of 2+ (sign 1) or 2- (sign -1) with w twisted by a primitive cube
    root of unity and d acting by rho(id) composed with complex conjugation.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    logger.info("Building 4_0 from %s", "2+" if sign > 0 else "2-")
    g = binary_octahedral()
    base = build_irrep("2+" if sign > 0 else "2-")
    expected = named_table("G")["4_0"]
    k = conjugation_matrix(2)
    literal = tuple(relation_failures(_with_derived(literal_twist_images(sign))))
    for twist in (OMEGA, OMEGA.conj()):
        images = {
            "i": realify(base("i")),
            "w": realify(base("w") * twist),
            "d": realify(base("id")) @ k,
        }
        try:
            rep = build_rep(g, images, "4_0", f"from {base.label}")
        except HomomorphismViolation:
            continue
        if rep.character().values == expected.values:
            return TwistedRecipe(rep, twist, literal)
    raise RelationFailure("w", "d", f"no cube-root twist of {base.label} gives 4_0")


# quaternionic realisations

_LABEL = re.compile(r"\d(?:_0|[+-])")


def row_labels(row: str) -> list:
    """"1++3-" -> ["1+", "3-"]"""
    return _LABEL.findall(row.split("/")[0])


@dataclass(frozen=True, eq=False)
class QuaternionAction:
    row: str
    maps: Mapping[str, QuaternionMap]
    rep: MatrixRep
    decomposition: Decomposition
    expected: Decomposition

    @property
    def matches(self) -> bool:
        return self.decomposition == self.expected


def _expected(row: str) -> Decomposition:
    table = named_table("G")
    labels = row_labels(row)
    return Decomposition("G", tuple((lbl, labels.count(lbl)) for lbl in table.labels if lbl in labels))


def realize_quaternionic(row: str) -> QuaternionAction:
    """Builds one row of generator actions (q -> w^-1qw, q -> qi, ...) as 4x4 matrices on 1, i, j, k."""
    if not row:
        raise ValueError("row is required")
    rows = dict(QUATERNION_ROWS)
    rows[ASIDE_ROW[0]] = ASIDE_ROW[1]
    if row not in rows:
        raise KeyError(f"unknown row {row}; known: {', '.join(rows)}")
    logger.info("Realising quaternionic row %s", row)
    maps = {gen: parse_quaternion_map(text) for gen, text in rows[row].items()}
    rep = build_rep(binary_octahedral(), {gen: f.matrix() for gen, f in maps.items()}, row)
    decomposition = named_table("G").decompose(rep.character())
    return QuaternionAction(row, maps, rep, decomposition, _expected(row))


# complex structures


def commutant(images: Sequence[ExactMatrix]) -> list:
    """Basis of the matrices commuting with every image."""
    n = images[0].rows
    rows = []
    for a in images:
        for r in range(n):
            for c in range(n):
                eq = [ZERO] * (n * n)
                for k in range(n):
                    eq[r * n + k] = eq[r * n + k] + a[k, c]
                    eq[k * n + c] = eq[k * n + c] - a[r, k]
                rows.append(eq)
    kernel = ExactMatrix.from_rows(rows).nullspace()
    return [ExactMatrix.from_rows([list(v[r * n:(r + 1) * n]) for r in range(n)]) for v in kernel]


def invariant_complex_structures(rep: MatrixRep) -> tuple:
    """
    The J with J^2 = -I commuting with every image, when the commutant is 2-dimensional (+J, -J);
    empty when the commutant is the scalars.
    """
    images = list(rep.images.values())
    basis = commutant(images)
    n = rep.degree
    one = ExactMatrix.identity(n)
    if len(basis) == 1:
        return ()
    if len(basis) != 2:
        raise WorkbenchError("commutant", f"commutant of {rep.label} has dimension {len(basis)}")
    y = next(b for b in basis if parallel(b.entries, one.entries) is None)
    # y^2 = alpha + beta y inside the commutant
    y2 = y @ y
    coeffs = ExactMatrix.from_rows([[p, q] for p, q in zip(one.entries, y.entries)]).solve(y2.entries)
    alpha, beta = coeffs
    z = y - one * (beta * Fraction(1, 2))
    gamma = alpha + beta * beta * Fraction(1, 4)
    if not gamma.is_rational() or gamma.to_rational() >= 0:
        return ()
    root = CyclotomicNumber.sqrt_of_rational(-gamma.to_rational())
    if root is None:
        return ()
    j = z * root.inverse()
    return (j, -j)


def structure_status(rep: MatrixRep, candidate: ExactMatrix) -> tuple:
    """(squares to -I, commutes with every image)"""
    one = ExactMatrix.identity(rep.degree)
    squares = candidate @ candidate == -one
    commutes = all(candidate @ m == m @ candidate for m in rep.images.values())
    return squares, commutes


# eigenframes and charges

PLUS_DIRECTIONS = ((2, 0), (-1, SQRT3), (-1, -SQRT3))
MINUS_DIRECTIONS = ((0, 2), (SQRT3, -1), (-SQRT3, -1))


def _as_vector(pair) -> tuple:
    return tuple(x if isinstance(x, CyclotomicNumber) else CyclotomicNumber.from_rational(x) for x in pair)


def _match(lines: list, targets) -> Optional[tuple]:
    """
    Pairs each target with a line it is parallel to, as (line index, scale) in target order;
    None unless the sets agree projectively.
    """
    pairs, used = [], set()
    for t in targets:
        hit = None
        for n, v in enumerate(lines):
            if n not in used:
                s = parallel(_as_vector(t), v)
                if s:
                    hit = n, s
                    break
        if hit is None:
            return None
        used.add(hit[0])
        pairs.append(hit)
    return tuple(pairs) if len(used) == len(lines) else None


def _representatives(lines: tuple, targets) -> tuple:
    """The vector on each eigenline that equals its listed direction, in listed order."""
    pairs = _match(list(lines), targets)
    if pairs is None:
        raise WorkbenchError("charges", "eigenlines do not match the listed directions")
    return tuple(tuple(x * s for x in lines[n]) for n, s in pairs)


@dataclass(frozen=True)
class Eigenframe:
    reflections: tuple
    plus: tuple
    minus: tuple
    plus_matches: bool
    minus_matches: bool
    orthogonal: bool


def reflection_eigenframe(rep: MatrixRep) -> Eigenframe:
    """+1 and -1 eigenlines of the three reflections in the image of 2_0."""
    if rep.degree != 2:
        raise ValueError("reflection_eigenframe needs a 2-dimensional representation")
    logger.info("Computing the reflection eigenframe of %s", rep.label)
    reflections = tuple(m for m in rep.distinct_images() if m.det() == -ONE)
    if len(reflections) != 3:
        raise WorkbenchError("eigenframe", f"{rep.label} has {len(reflections)} reflections, expected 3")
    plus = tuple(eigenline(m, 1)[0] for m in reflections)
    minus = tuple(eigenline(m, -1)[0] for m in reflections)
    orthogonal = all(u[0] * v[0] + u[1] * v[1] == ZERO for u, v in zip(plus, minus))
    return Eigenframe(
        reflections, plus, minus,
        _match(list(plus), PLUS_DIRECTIONS) is not None,
        _match(list(minus), MINUS_DIRECTIONS) is not None,
        orthogonal,
    )


@dataclass(frozen=True)
class Charges:
    first: tuple
    second: tuple
    scale: CyclotomicNumber
    first_points: tuple
    second_points: tuple

    def as_rationals(self) -> tuple:
        return tuple(v.to_rational() for v in self.first), tuple(v.to_rational() for v in self.second)


def charge_assignment(frame: Eigenframe = None) -> Charges:
    """
    Reads the eigenlines of the frame (of 2_0 by default) as complex numbers x + iy, each
    line taken at its listed direction: the +1 set scaled by 1/sqrt3 is 2/sqrt3 {1, w, w^2};
    the -1 set is scaled so that it becomes 2/3 i {1, w, w^2}. The charges are the imaginary parts.
    """
    if frame is None:
        frame = reflection_eigenframe(build_irrep("2_0"))
    logger.info("Assigning charges to the two direction sets")
    first = tuple((x + y * I) * SQRT3.inverse() for x, y in _representatives(frame.plus, PLUS_DIRECTIONS))
    raw = tuple(x + y * I for x, y in _representatives(frame.minus, MINUS_DIRECTIONS))
    scale = (I * Fraction(2, 3)) / raw[0]
    second = tuple(z * scale for z in raw)
    cube_roots = (ONE, OMEGA, OMEGA * OMEGA)
    if set(first) != {r * 2 * SQRT3.inverse() for r in cube_roots}:
        raise WorkbenchError("charges", "first set is not 2/sqrt3 times the cube roots of unity")
    if set(second) != {r * I * Fraction(2, 3) for r in cube_roots}:
        raise WorkbenchError("charges", "second set is not 2/3 i times the cube roots of unity")
    return Charges(tuple(z.imag for z in first), tuple(z.imag for z in second), scale, first, second)


# closures


@dataclass(frozen=True)
class ClosureResult:
    order: int
    signed_permutations: bool


def matrix_group_closure(generators: Sequence[ExactMatrix], cap: int = None) -> ClosureResult:
    logger.info("Closing %d generators", len(generators))
    elements = close_matrices(list(generators), cap)
    return ClosureResult(len(elements), all(m.is_signed_permutation() for m in elements))


def hypercube_steps() -> tuple:
    """(name, generators) of the three hypercube closures, each step adding to the last."""
    base = list(HYPERCUBE_IMAGES)
    lefts = [left_multiplication(q) for q in (Q_I, Q_J, Q_K)]
    return (
        ("w, jd", base),
        ("w, jd, left i, j, k", base + lefts),
        ("w, jd, left i, j, k, conjugation", base + lefts + [quaternion_conjugation()]),
    )


def hypercube_closures(cap: int = None) -> list:
    return [(name, matrix_group_closure(gens, cap)) for name, gens in hypercube_steps()]
