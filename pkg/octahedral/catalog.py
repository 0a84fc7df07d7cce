"""
The named objects of the workbench: the generating matrices, the binary octahedral group G
and its subgroups and quotients, the display conventions of the character tables, and the
generator images of the explicit representations.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .chartab import CharacterTable, character_table, inflate_character
from .exact import I, ONE, SQRT2, SQRT3, ZERO, CyclotomicNumber, ExactMatrix, as_cyclotomic
from .group import FiniteGroup, QuotientMap, generate_group, quotient_group, subgroup, subgroup_ids
from .utils import AliasError, UnknownNameError, settings

logger = logging.getLogger(__name__)

GOLDEN_PATH = Path(__file__).with_name("golden.json")


def m2(a, b) -> ExactMatrix:
    """M(a, b) = [[a, b], [-conj b, conj a]]"""
    a, b = as_cyclotomic(a), as_cyclotomic(b)
    return ExactMatrix.from_rows([[a, b], [-b.conj(), a.conj()]])


HALF = Fraction(1, 2)
INV_SQRT2 = SQRT2.inverse()

MATRICES = {
    "1": ExactMatrix.identity(2),
    "-1": -ExactMatrix.identity(2),
    "i": m2(0, 1),
    "j": m2(ZERO, I),
    "k": m2(I, ZERO),
    "w": m2(I - 1, I + 1) * HALF,
    "c": m2(-I, I) * INV_SQRT2,
}
MATRICES["d"] = MATRICES["c"] * I.inverse()

G_RELATIONS = (
    "i^2=j^2=k^2=-1",
    "ij=-ji=k",
    "jk=-kj=i",
    "ki=-ik=j",
    "iw=wj",
    "jw=wk",
    "kw=wi",
    "id=-di",
    "jd=-dk",
    "kd=-dj",
    "wdw=d",
    "w^3=1",
    "d^2=1",
)
H_RELATIONS = ("(jd)^8=1", "d^2=1", "(jd)d=d(jd)^3")
K_RELATIONS = ("w^3=1", "d^2=1", "wdw=d")

# class representatives in display order
COLUMNS = {
    "G": ("1", "-1", "i", "w", "-w", "d", "jd", "-jd"),
    "H": ("1", "-1", "i", "j", "d", "jd", "-jd"),
    "K": ("1", "w", "d"),
}

SQRT2I = I * SQRT2

# label -> (degree, {word: value}); each pin must single out exactly one irreducible
ALIAS_PINS = {
    "G": {
        "1+": (1, {"d": ONE}),
        "1-": (1, {"d": -ONE}),
        "2_0": (2, {"-1": CyclotomicNumber.from_rational(2)}),
        "3+": (3, {"d": ONE}),
        "3-": (3, {"d": -ONE}),
        "2+": (2, {"jd": SQRT2I}),
        "2-": (2, {"jd": -SQRT2I}),
        "4_0": (4, {}),
    },
    "H": {
        "1a": (1, {"j": ONE, "d": ONE}),
        "1b": (1, {"j": ONE, "d": -ONE}),
        "1c": (1, {"j": -ONE, "d": ONE}),
        "1d": (1, {"j": -ONE, "d": -ONE}),
        "2a": (2, {"-1": CyclotomicNumber.from_rational(2)}),
        "2b": (2, {"jd": SQRT2I}),
        "2c": (2, {"jd": -SQRT2I}),
    },
    "K": {
        "1+": (1, {"d": ONE}),
        "1-": (1, {"d": -ONE}),
        "2_0": (2, {}),
    },
}

QUOTIENT_CHAIN = (
    # name, kernel name, kernel generators (words in G)
    ("Sym4", "Z2", ("-1",)),
    ("Sym3", "Q8", ("i", "j")),
    ("Sym2", "2.Alt4", ("i", "w")),
    ("Sym1", "G", ("i", "w", "d")),
)

NORMAL_SUBGROUPS = (
    ("1", ()),
    ("Z2", ("-1",)),
    ("Q8", ("i", "j")),
    ("2.Alt4", ("i", "w")),
)

# generator images (w, jd) as displayed for each irreducible of G
_R3 = SQRT3
IRREP_IMAGES = {
    "1+": (ExactMatrix.from_rows([[1]]), ExactMatrix.from_rows([[1]])),
    "1-": (ExactMatrix.from_rows([[1]]), ExactMatrix.from_rows([[-1]])),
    "2+": (MATRICES["w"], m2(1, 1) * (I * INV_SQRT2)),
    "2-": (MATRICES["w"], m2(1, 1) * (-I * INV_SQRT2)),
    "2_0": (
        ExactMatrix.from_rows([[-1, _R3], [-_R3, -1]]) * HALF,
        ExactMatrix.from_rows([[1, 0], [0, -1]]),
    ),
    "3+": (
        ExactMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        ExactMatrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ),
    "3-": (
        ExactMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        -ExactMatrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ),
    "4_0": (
        ExactMatrix.from_rows([
            [1 - _R3, -1 - _R3, -1 - _R3, -1 + _R3],
            [1 + _R3, 1 - _R3, 1 - _R3, -1 - _R3],
            [1 - _R3, -1 - _R3, 1 + _R3, 1 - _R3],
            [1 + _R3, 1 - _R3, -1 + _R3, 1 + _R3],
        ]) * Fraction(1, 4),
        ExactMatrix.from_rows([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, -1], [1, 0, -1, 0]]) * INV_SQRT2,
    ),
}

# the hypercube generators for w and jd on the quaternion basis 1, i, j, k
HYPERCUBE_IMAGES = (
    ExactMatrix.from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]),
    ExactMatrix.from_rows([[0, 0, 0, -1], [0, 0, -1, 0], [-1, 0, 0, 0], [0, 1, 0, 0]]),
)

# the six matrices quantising M2(R)
SIX_MATRICES = (
    ExactMatrix.identity(2),
    ExactMatrix.from_rows([[-1, _R3], [-_R3, -1]]) * HALF,
    ExactMatrix.from_rows([[-1, _R3], [_R3, 1]]) * HALF,
    ExactMatrix.from_rows([[1, 0], [0, -1]]),
    ExactMatrix.from_rows([[-1, -_R3], [-_R3, 1]]) * HALF,
    ExactMatrix.from_rows([[-1, -_R3], [_R3, -1]]) * HALF,
)

# images of a quaternion q under the generators i, j, w, d
QUATERNION_ROWS = {
    "1++1-+2_0": {"i": "q", "j": "q", "w": "w^-1qw", "d": "c^-1qc"},
    "1++3-": {"i": "i^-1qi", "j": "j^-1qj", "w": "w^-1qw", "d": "c^-1qc"},
    "1-+3+": {"i": "i^-1qi", "j": "j^-1qj", "w": "w^-1qw", "d": "cqc"},
    "4_0": {"i": "qi", "j": "qj", "w": "w^-1qw", "d": "c^-1qc"},
    "2++2-": {"i": "qi", "j": "qj", "w": "qw", "d": "kqc"},
}
# w by right multiplication, everything else as in the 4_0 row
ASIDE_ROW = ("2++2-/aside", {"i": "qi", "j": "qj", "w": "qw", "d": "c^-1qc"})


@lru_cache(maxsize=None)
def _binary_octahedral(cap: int) -> FiniteGroup:
    symbols = {s: MATRICES[s] for s in ("1", "-1", "j", "k")}
    return generate_group(
        [MATRICES["i"], MATRICES["w"], MATRICES["d"]],
        names=("i", "w", "d"),
        name="G",
        cap=cap,
        symbols=symbols,
        relations=G_RELATIONS,
    )


def binary_octahedral(cap: int = None) -> FiniteGroup:
    """G = <i, w, d>, order 48, not inside SU(2)."""
    return _binary_octahedral(settings.closure_cap if cap is None else cap)


@lru_cache(maxsize=None)
def _other_cover(cap: int) -> FiniteGroup:
    symbols = {s: MATRICES[s] for s in ("1", "-1", "j", "k")}
    return generate_group(
        [MATRICES["i"], MATRICES["w"], MATRICES["c"]], names=("i", "w", "c"), name="2O", cap=cap, symbols=symbols,
    )


def binary_octahedral_su2(cap: int = None) -> FiniteGroup:
    """<i, w, c>: the double cover of the octahedral group that lies inside SU(2)."""
    return _other_cover(settings.closure_cap if cap is None else cap)


def _ids(g: FiniteGroup, words) -> list:
    return [g.evaluate(w) for w in words]


@lru_cache(maxsize=None)
def subgroup_h(g: FiniteGroup) -> FiniteGroup:
    """H = <j, d>, the semidihedral group of order 16."""
    return subgroup(g, _ids(g, ("j", "d")), "H", ("j", "d"), relations=H_RELATIONS)


@lru_cache(maxsize=None)
def subgroup_k(g: FiniteGroup) -> FiniteGroup:
    """K = <w, d>, isomorphic to Sym(3)."""
    return subgroup(g, _ids(g, ("w", "d")), "K", ("w", "d"), relations=K_RELATIONS)


@lru_cache(maxsize=None)
def normal_subgroup(g: FiniteGroup, name: str) -> FiniteGroup:
    gens = dict(NORMAL_SUBGROUPS + (("G", ("i", "w", "d")),))
    if name not in gens:
        raise UnknownNameError(name, sorted(gens))
    ids = _ids(g, gens[name]) or [0]
    return subgroup(g, ids, name)


@dataclass(frozen=True)
class QuotientStep:
    name: str
    kernel_name: str
    kernel_order: int
    group: FiniteGroup
    qmap: QuotientMap


@lru_cache(maxsize=None)
def quotient_chain(g: FiniteGroup) -> tuple:
    """G -> Sym(4) -> Sym(3) -> Sym(2) -> Sym(1) with kernels Z2, Q8, 2.Alt(4), G."""
    logger.info("Building the quotient chain of %s", g.name)
    steps = []
    for name, kernel_name, gens in QUOTIENT_CHAIN:
        kernel = subgroup_ids(g, _ids(g, gens))
        target, qmap = quotient_group(g, kernel, name)
        steps.append(QuotientStep(name, kernel_name, len(kernel), target, qmap))
    return tuple(steps)


GROUP_NAMES = ("G", "H", "K", "Q8", "2.Alt4", "Z2", "1", "2O", "Sym4", "Sym3", "Sym2", "Sym1")


def group_by_name(name: str, cap: int = None) -> FiniteGroup:
    g = binary_octahedral(cap)
    if name == "G":
        return g
    if name == "H":
        return subgroup_h(g)
    if name == "K":
        return subgroup_k(g)
    if name == "2O":
        return binary_octahedral_su2(cap)
    if name in dict(NORMAL_SUBGROUPS):
        return normal_subgroup(g, name)
    for step in quotient_chain(g):
        if step.name == name:
            return step.group
    raise UnknownNameError(name, list(GROUP_NAMES))


def resolve_aliases(table: CharacterTable, pins: dict) -> dict:
    """Canonical label -> display label, raising AliasError unless every pin is unique."""
    g = table.group
    names = {}
    for alias, (degree, values) in pins.items():
        hits = [
            chi for chi in table
            if chi.degree == degree and all(chi(g.evaluate(w)) == v for w, v in values.items())
        ]
        if len(hits) != 1:
            raise AliasError(f"{alias} pins {len(hits)} characters of {g.name}")
        names[hits[0].label] = alias
    if len(set(names)) != len(pins):
        raise AliasError(f"pins for {g.name} overlap")
    return names


def _display(table: CharacterTable, key: str) -> CharacterTable:
    g = table.group
    pins = ALIAS_PINS[key]
    cols = [g.class_of[g.evaluate(w)] for w in COLUMNS[key]]
    return table.relabeled(resolve_aliases(table, pins), order=list(pins), columns=cols,
                           column_names=COLUMNS[key])


@lru_cache(maxsize=None)
def _named_table(name: str, prime: int, cap: int) -> CharacterTable:
    g = group_by_name(name, cap)
    table = character_table(g, prime)
    if name in ALIAS_PINS:
        return _display(table, name)
    steps = {s.name: s for s in quotient_chain(binary_octahedral(cap))}
    if name in steps:
        # quotient characters take the name of their inflation to G
        parent = named_table("G", prime, cap)
        names = {}
        for chi in table:
            lifted = inflate_character(chi, steps[name].qmap)
            names[chi.label] = next(p.label for p in parent if p.values == lifted.values)
        order = [p.label for p in parent if p.label in names.values()]
        return table.relabeled(names, order=order)
    return table


def named_table(name: str, prime: int = None, cap: int = None) -> CharacterTable:
    """Character table with display labels (1+, 2_0, 4_0, 1a, ...) and display column order."""
    return _named_table(name, settings.prime if prime is None else prime,
                        settings.closure_cap if cap is None else cap)


def irreducible_names(name: str) -> tuple:
    if name not in ALIAS_PINS:
        raise UnknownNameError(name, sorted(ALIAS_PINS))
    return tuple(ALIAS_PINS[name])


@lru_cache(maxsize=None)
def golden() -> dict:
    """Expected values recorded in golden.json (tables, catalogues, solved constants)."""
    with GOLDEN_PATH.open(encoding="utf-8") as fh:
        return json.load(fh)
