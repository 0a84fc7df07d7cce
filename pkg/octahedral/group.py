"""
Finite groups as closed Cayley tables built from explicit generator matrices.

Ids are assigned in breadth-first order from the identity (id 0) under right
multiplication by the generators, so every element also gets a shortest positive word.
"""
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import lcm
from typing import Callable, Hashable, Iterable, Mapping, Optional, Sequence, Union

from .exact import ExactMatrix
from .utils import (ClosureBudgetExceeded, HomomorphismViolation, NotNormalError,
                    UnknownNameError, WorkbenchError, settings)
from .words import Neg, Power, Sym, Word, parse_relation, parse_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    id: int
    word: str


@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    representative: int
    element_order: int
    size: int
    members: frozenset


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    cayley: tuple
    generators: tuple
    generator_names: tuple
    words: tuple
    matrices: Optional[tuple] = None
    symbols: Mapping[str, int] = field(default_factory=dict)
    parent: Optional["FiniteGroup"] = None
    embedding: Optional[tuple] = None
    relations: tuple = ()

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.cayley)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @cached_property
    def inverse(self) -> tuple:
        return tuple(row.index(0) for row in self.cayley)

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return self.cayley[self.cayley[g][x]][self.inverse[g]]

    @cached_property
    def element_orders(self) -> tuple:
        orders = []
        for x in range(self.order):
            n, y = 1, x
            while y != 0:
                y = self.cayley[y][x]
                n += 1
            orders.append(n)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def power(self, x: int, n: int) -> int:
        n %= self.element_orders[x]
        y = 0
        for _ in range(n):
            y = self.cayley[y][x]
        return y

    @cached_property
    def _class_data(self) -> tuple:
        t, inv, n = self.cayley, self.inverse, self.order
        orbits, seen = [], [False] * n
        for x in range(n):
            if not seen[x]:
                orbit = frozenset(t[t[g][x]][inv[g]] for g in range(n))
                for y in orbit:
                    seen[y] = True
                orbits.append(orbit)
        orders = self.element_orders
        orbits.sort(key=lambda o: (orders[min(o)], len(o), min(o)))
        classes = tuple(
            ConjugacyClass(i, min(o), orders[min(o)], len(o), o) for i, o in enumerate(orbits)
        )
        class_of = [0] * n
        for c in classes:
            for y in c.members:
                class_of[y] = c.index
        return classes, tuple(class_of)

    @property
    def classes(self) -> tuple:
        return self._class_data[0]

    @property
    def class_of(self) -> tuple:
        return self._class_data[1]

    @cached_property
    def matrix_index(self) -> dict:
        if self.matrices is None:
            raise WorkbenchError("group", f"{self.name} carries no matrices")
        return {m: x for x, m in enumerate(self.matrices)}

    @cached_property
    def parent_index(self) -> dict:
        if self.embedding is None:
            raise WorkbenchError("group", f"{self.name} is not embedded in a parent group")
        return {p: x for x, p in enumerate(self.embedding)}

    def evaluate(self, word: Union[str, Word]) -> int:
        """Id of a word in the group's named symbols, e.g. "jd" or "-w^2"."""
        if isinstance(word, str):
            word = parse_word(word)
        if isinstance(word, Sym):
            if word.name not in self.symbols:
                raise UnknownNameError(word.name, sorted(s for s in self.symbols if s != "-1"))
            return self.symbols[word.name]
        if isinstance(word, Neg):
            if "-1" not in self.symbols:
                raise WorkbenchError("word", f"{self.name} has no central element -1")
            return self.mul(self.symbols["-1"], self.evaluate(word.body))
        if isinstance(word, Power):
            return self.power(self.evaluate(word.body), word.exponent)
        acc = 0
        for f in word.factors:
            acc = self.mul(acc, self.evaluate(f))
        return acc

    def element(self, ref: Union[int, str]) -> GroupElement:
        x = ref if isinstance(ref, int) else self.evaluate(ref)
        if not 0 <= x < self.order:
            raise ValueError(f"no element {x} in {self.name}")
        return GroupElement(x, self.words[x])

    def with_symbols(self, symbols: Mapping[str, int]) -> "FiniteGroup":
        return replace(self, symbols=dict(symbols))


@dataclass(frozen=True, eq=False)
class QuotientMap:
    source: FiniteGroup
    target: FiniteGroup
    kernel: frozenset
    image: tuple

    def __call__(self, x: int) -> int:
        return self.image[x]

    def verify(self) -> None:
        s, t, img = self.source, self.target, self.image
        if s.order != len(self.kernel) * t.order:
            raise WorkbenchError("quotient", "|source| != |kernel| * |target|")
        if set(img) != set(range(t.order)):
            raise WorkbenchError("quotient", "map is not surjective")
        for a in range(s.order):
            for b in range(s.order):
                if img[s.mul(a, b)] != t.mul(img[a], img[b]):
                    raise HomomorphismViolation(s.words[a], s.words[b], f"{s.name} -> {t.name}")
        if frozenset(x for x in range(s.order) if img[x] == 0) != self.kernel:
            raise WorkbenchError("quotient", "kernel of the map differs from the given kernel")


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    passed: bool
    values: tuple


@dataclass(frozen=True)
class RelationReport:
    group: str
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def _closure(identity: Hashable, count: int, step: Callable, cap: int) -> tuple:
    """Breadth-first closure; returns (elements, right-multiplication table, generator paths)."""
    elements, index, paths, right = [identity], {identity: 0}, [()], []
    x = 0
    while x < len(elements):
        row = []
        for k in range(count):
            y = step(elements[x], k)
            idx = index.get(y)
            if idx is None:
                if len(elements) >= cap:
                    raise ClosureBudgetExceeded(cap)
                idx = len(elements)
                index[y] = idx
                elements.append(y)
                paths.append(paths[x] + (k,))
            row.append(idx)
        right.append(row)
        x += 1
    return elements, right, paths


def _word(path: Sequence[int], names: Sequence[str]) -> str:
    return "".join(names[k] for k in path) or "1"


def close_matrices(generators: Sequence[ExactMatrix], cap: int = None) -> list:
    """All products of the generators (with the identity), as matrices."""
    cap = settings.closure_cap if cap is None else cap
    _check_generators(generators)
    identity = ExactMatrix.identity(generators[0].rows)
    elements, _, _ = _closure(identity, len(generators), lambda m, k: m @ generators[k], cap)
    return elements


def _check_generators(generators: Sequence[ExactMatrix]) -> None:
    if not generators:
        raise ValueError("generators are required")
    n = generators[0].rows
    for m in generators:
        if not m.is_square or m.rows != n:
            raise ValueError("generators must be square matrices of one size")
        if not m.det():
            raise ValueError("generators must be invertible")


def generate_group(
    generators: Sequence[ExactMatrix],
    names: Sequence[str] = None,
    name: str = "G",
    cap: int = None,
    symbols: Mapping[str, ExactMatrix] = None,
    relations: Iterable[str] = (),
) -> FiniteGroup:
    """
    Closes a set of invertible matrices under multiplication.

    - names: display names of the generators (default a, b, c, ...)
    - symbols: extra named elements given by their matrices (must lie in the group)
    - cap: closure budget, default from settings
    """
    cap = settings.closure_cap if cap is None else cap
    _check_generators(generators)
    names = tuple(names) if names else tuple("abcdefgh"[: len(generators)])
    logger.info("Generating group %s from %d generators", name, len(generators))

    identity = ExactMatrix.identity(generators[0].rows)
    elements, right, paths = _closure(identity, len(generators), lambda m, k: m @ generators[k], cap)
    index = {m: x for x, m in enumerate(elements)}

    def follow(a: int, path: tuple) -> int:
        for k in path:
            a = right[a][k]
        return a

    cayley = tuple(tuple(follow(a, paths[b]) for b in range(len(elements))) for a in range(len(elements)))
    gen_ids = tuple(index[m] for m in generators)
    named = {n: g for n, g in zip(names, gen_ids)}
    for sym, m in (symbols or {}).items():
        if m not in index:
            raise WorkbenchError("group", f"symbol {sym} does not lie in {name}")
        named[sym] = index[m]
    group = FiniteGroup(
        name=name,
        cayley=cayley,
        generators=gen_ids,
        generator_names=names,
        words=tuple(_word(p, names) for p in paths),
        matrices=tuple(elements),
        symbols=named,
        relations=tuple(relations),
    )
    logger.info("Group %s has order %d", name, group.order)
    return group


def subgroup(
    g: FiniteGroup,
    generator_ids: Sequence[int],
    name: str,
    generator_names: Sequence[str] = None,
    relations: Iterable[str] = (),
) -> FiniteGroup:
    """The subgroup generated by the given ids, embedded in g."""
    generator_ids = tuple(generator_ids)
    names = tuple(generator_names) if generator_names else tuple(g.words[x] for x in generator_ids)
    elements, _, paths = _closure(0, len(generator_ids), lambda x, k: g.mul(x, generator_ids[k]), g.order)
    index = {p: x for x, p in enumerate(elements)}
    n = len(elements)
    cayley = tuple(tuple(index[g.mul(elements[a], elements[b])] for b in range(n)) for a in range(n))
    return FiniteGroup(
        name=name,
        cayley=cayley,
        generators=tuple(index[x] for x in generator_ids),
        generator_names=names,
        words=tuple(_word(p, names) for p in paths),
        matrices=tuple(g.matrices[p] for p in elements) if g.matrices else None,
        symbols={s: index[x] for s, x in g.symbols.items() if x in index},
        parent=g,
        embedding=tuple(elements),
        relations=tuple(relations),
    )


def subgroup_ids(g: FiniteGroup, generator_ids: Iterable[int]) -> frozenset:
    generator_ids = tuple(generator_ids)
    elements, _, _ = _closure(0, len(generator_ids), lambda x, k: g.mul(x, generator_ids[k]), g.order)
    return frozenset(elements)


def conjugacy_classes(g: FiniteGroup) -> tuple:
    return g.classes


def centralizer(g: FiniteGroup, x: int) -> frozenset:
    return frozenset(y for y in range(g.order) if g.mul(y, x) == g.mul(x, y))


def is_normal(g: FiniteGroup, ids: Iterable[int]) -> bool:
    ids = frozenset(ids)
    return all(g.conjugate(x, y) in ids for x in ids for y in g.generators)


def conjugate_subgroups(g: FiniteGroup, ids: Iterable[int]) -> set:
    ids = frozenset(ids)
    return {frozenset(g.conjugate(x, y) for x in ids) for y in range(g.order)}


def quotient_group(g: FiniteGroup, kernel: Iterable[int], name: str = None) -> tuple:
    """
    G/N for a normal subgroup N given by ids.
    Cosets are numbered by their least element, so the identity coset is 0.
    """
    kernel = frozenset(kernel)
    if 0 not in kernel or any(g.mul(a, b) not in kernel for a in kernel for b in kernel):
        raise ValueError("kernel is not a subgroup")
    for x in kernel:
        for y in range(g.order):
            if g.conjugate(x, y) not in kernel:
                raise NotNormalError(
                    f"{g.words[y]} conjugates {g.words[x]} out of the kernel in {g.name}"
                )
    image, reps = [None] * g.order, []
    for x in range(g.order):
        if image[x] is None:
            for k in kernel:
                image[g.mul(x, k)] = len(reps)
            reps.append(x)
    m = len(reps)
    cayley = tuple(tuple(image[g.mul(reps[a], reps[b])] for b in range(m)) for a in range(m))

    gens, names = [], []
    for gid, gname in zip(g.generators, g.generator_names):
        q = image[gid]
        if q != 0 and q not in gens:
            gens.append(q)
            names.append(gname)
    elements, _, paths = _closure(0, len(gens), lambda x, k: cayley[x][gens[k]], m)
    if len(elements) != m:
        raise WorkbenchError("quotient", "generator images do not generate the quotient")
    # ids stay coset-ordered; words come from the closure paths
    words = [""] * m
    for e, p in zip(elements, paths):
        words[e] = _word(p, names)
    target = FiniteGroup(
        name=name or f"{g.name}/{len(kernel)}",
        cayley=cayley,
        generators=tuple(gens),
        generator_names=tuple(names),
        words=tuple(words),
        symbols={s: image[x] for s, x in g.symbols.items()},
    )
    qmap = QuotientMap(g, target, kernel, tuple(image))
    qmap.verify()
    logger.info("Quotient %s has order %d", target.name, target.order)
    return target, qmap


def power_map(g: FiniteGroup, n: int) -> tuple:
    return tuple(g.power(x, n) for x in range(g.order))


def class_power_map(g: FiniteGroup, n: int) -> tuple:
    return tuple(g.class_of[g.power(c.representative, n)] for c in g.classes)


def verify_relations(g: FiniteGroup, relations: Iterable[str] = None) -> RelationReport:
    """
    Evaluates each relation chain (e.g. "i^2=j^2=k^2=-1") in g; failures are entries,
    not exceptions.
    """
    relations = g.relations if relations is None else tuple(relations)
    checks = []
    for text in relations:
        ids = [g.evaluate(side) for side in parse_relation(text)]
        checks.append(RelationCheck(text, len(set(ids)) == 1, tuple(g.words[x] for x in ids)))
    return RelationReport(g.name, tuple(checks))


def classes_json(g: FiniteGroup, classes: Sequence[ConjugacyClass] = None) -> dict:
    return {
        "group": g.name,
        "order": g.order,
        "classes": [
            {"rep_word": g.words[c.representative], "element_order": c.element_order, "size": c.size}
            for c in (classes or g.classes)
        ],
    }
