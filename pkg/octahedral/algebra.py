"""
The group algebra of a finite group over Q(zeta_24): sparse elements, convolution, central
idempotents, the displayed idempotents and projectors, and the relation table of the
quintuple i, j, k, d, id.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .catalog import NORMAL_SUBGROUPS, binary_octahedral, named_table, quotient_chain, subgroup_h, subgroup_k
from .chartab import Character, WedderburnType, real_wedderburn
from .exact import ONE, SQRT2, SQRT3, ZERO, CyclotomicNumber, ExactMatrix, as_cyclotomic, parallel
from .group import FiniteGroup
from .utils import RelationFailure, WorkbenchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    group: FiniteGroup
    coeffs: Mapping[int, CyclotomicNumber]

    def __post_init__(self):
        clean = {x: as_cyclotomic(c) for x, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, g: FiniteGroup, x: Union[int, str]) -> "AlgebraElement":
        return cls(g, {x if isinstance(x, int) else g.evaluate(x): ONE})

    @classmethod
    def scalar(cls, g: FiniteGroup, c) -> "AlgebraElement":
        return cls(g, {0: as_cyclotomic(c)})

    @classmethod
    def from_terms(cls, g: FiniteGroup, terms: Iterable[tuple]) -> "AlgebraElement":
        """Sum of coefficient * word, e.g. [(1, "1"), (-1, "-1")]."""
        acc = {}
        for c, word in terms:
            x = g.evaluate(word)
            acc[x] = acc.get(x, ZERO) + as_cyclotomic(c)
        return cls(g, acc)

    def _check(self, other: "AlgebraElement") -> None:
        if other.group is not self.group:
            raise ValueError(f"elements of different group algebras ({self.group.name}, {other.group.name})")

    def coefficient(self, x: int) -> CyclotomicNumber:
        return self.coeffs.get(x, ZERO)

    def vector(self) -> tuple:
        return tuple(self.coefficient(x) for x in range(self.group.order))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.group is self.group and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((id(self.group), frozenset(self.coeffs.items())))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        acc = dict(self.coeffs)
        for x, c in other.coeffs.items():
            acc[x] = acc.get(x, ZERO) + c
        return AlgebraElement(self.group, acc)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.group, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        s = as_cyclotomic(other)
        return AlgebraElement(self.group, {x: c * s for x, c in self.coeffs.items()})

    def __rmul__(self, other) -> "AlgebraElement":
        return self * other

    def is_central(self) -> bool:
        g = self.group
        return all(self.coefficient(g.conjugate(x, y)) == self.coefficient(x)
                   for y in g.generators for x in range(g.order))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs.values())

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs.values())

    def terms_json(self) -> list:
        words = self.group.words
        return [{"word": words[x], "value": c.to_text()} for x, c in sorted(self.coeffs.items())]

    def __str__(self) -> str:
        words = self.group.words
        return " + ".join(f"({c.to_pretty()}){words[x]}" for x, c in sorted(self.coeffs.items())) or "0"


def convolve(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """(ab)(g) = sum over xy = g of a(x) b(y)"""
    a._check(b)
    g = a.group
    acc = {}
    for x, c in a.coeffs.items():
        row = g.cayley[x]
        for y, d in b.coeffs.items():
            z = row[y]
            acc[z] = acc.get(z, ZERO) + c * d
    return AlgebraElement(g, acc)


def one(g: FiniteGroup) -> AlgebraElement:
    return AlgebraElement.scalar(g, ONE)


def ratio(a: AlgebraElement, b: AlgebraElement):
    """The scalar s with a = s*b, or None."""
    a._check(b)
    if not b:
        return None
    return parallel(a.vector(), b.vector())


def central_idempotent(chi: Character) -> AlgebraElement:
    """e = (deg / |G|) sum chi(g^-1) g"""
    g = chi.group
    scale = Fraction(chi.degree, g.order)
    return AlgebraElement(g, {x: chi(g.inv(x)) * scale for x in range(g.order)})


def block_dimension(e: AlgebraElement) -> int:
    """Dimension of the span of e*g over all g."""
    g = e.group
    rows = [list((e * AlgebraElement.basis(g, x)).vector()) for x in range(g.order)]
    return ExactMatrix.from_rows(rows).rank()


# lepton block of K


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True, eq=False)
class LeptonIdempotents:
    group: FiniteGroup
    p: AlgebraElement
    q: AlgebraElement
    r: AlgebraElement
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def lepton_idempotents(k: FiniteGroup = None) -> LeptonIdempotents:
    """
    p = (1+w+w^2+d+wd+w^2d)/6, q = (1+w+w^2-d-wd-w^2d)/6, r = (2-w-w^2)/3 in K = <w, d>,
    or in any group naming w and d (the quotient G/Q8 works the same way).
    """
    k = k or subgroup_k(binary_octahedral())
    logger.info("Building the lepton idempotents in %s", k.name)
    sixth, third = Fraction(1, 6), Fraction(1, 3)
    words = ("1", "w", "w^2", "d", "wd", "w^2d")
    p = AlgebraElement.from_terms(k, [(sixth, w) for w in words])
    q = AlgebraElement.from_terms(k, [(sixth if n < 3 else -sixth, w) for n, w in enumerate(words)])
    r = AlgebraElement.from_terms(k, [(2 * third, "1"), (-third, "w"), (-third, "w^2")])
    w, d, unit = AlgebraElement.basis(k, "w"), AlgebraElement.basis(k, "d"), one(k)
    zero = AlgebraElement(k, {})
    checks = [
        Check("p^2 = p", p * p == p),
        Check("q^2 = q", q * q == q),
        Check("r^2 = r", r * r == r),
        Check("p + q + r = 1", p + q + r == unit),
    ]
    for (na, a), (nb, b) in [(("p", p), ("q", q)), (("p", p), ("r", r)), (("q", q), ("r", r))]:
        checks.append(Check(f"{na}{nb} = {nb}{na} = 0", a * b == zero and b * a == zero))
    checks += [
        Check("pw = pd = p", p * w == p and p * d == p),
        Check("qw = q", q * w == q),
        Check("qd = -q", q * d == -q),
        Check("r(1+w+w^2) = 0", r * (unit + w + w * w) == zero),
    ]
    return LeptonIdempotents(k, p, q, r, tuple(checks))


@dataclass(frozen=True, eq=False)
class M2Isomorphism:
    basis: tuple          # (name, element) for r, rd, u, rdu
    images: tuple         # matching 2x2 matrices
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def lepton_m2_isomorphism(k: FiniteGroup = None) -> M2Isomorphism:
    """
    rK -> M2(Q(sqrt3)) with r -> I, rd -> diag(1, -1), u = r(w - w^2)/sqrt3 -> [[0, 1], [-1, 0]];
    multiplicativity is checked on every pair of basis elements.
    """
    leptons = lepton_idempotents(k)
    k, r = leptons.group, leptons.r
    logger.info("Checking the M2 isomorphism of the lepton block of %s", k.name)
    rd = r * AlgebraElement.basis(k, "d")
    u = r * (AlgebraElement.basis(k, "w") - AlgebraElement.basis(k, "w^2")) * SQRT3.inverse()
    basis = (("r", r), ("rd", rd), ("u", u), ("rdu", rd * u))
    flip = ExactMatrix.from_rows([[1, 0], [0, -1]])
    rot = ExactMatrix.from_rows([[0, 1], [-1, 0]])
    images = (ExactMatrix.identity(2), flip, rot, flip @ rot)

    columns = ExactMatrix.from_rows([list(col) for col in zip(*(e.vector() for _, e in basis))])
    checks = [Check("basis is independent", columns.rank() == 4)]
    spanned = ExactMatrix.from_rows([list(m.entries) for m in images]).rank() == 4
    checks.append(Check("images span M2", spanned))
    for (na, a), ia in zip(basis, images):
        for (nb, b), ib in zip(basis, images):
            coords = columns.solve((a * b).vector())
            if coords is None:
                raise RelationFailure(na, nb, "product leaves the span of the basis")
            image = ExactMatrix.zero(2, 2)
            for c, m in zip(coords, images):
                image = image + m * c
            if image != ia @ ib:
                raise RelationFailure(na, nb, "product is not preserved")
            checks.append(Check(f"{na}*{nb}", True))
    if not all(c.passed for c in checks):
        raise WorkbenchError("m2", "basis or images are degenerate")
    return M2Isomorphism(basis, images, tuple(checks))


# projectors and the complex structure of the 2+/2- block


def _g(g: FiniteGroup = None) -> FiniteGroup:
    return g or binary_octahedral()


def _el(g: FiniteGroup, terms: Sequence[tuple]) -> AlgebraElement:
    return AlgebraElement.from_terms(g, terms)


def fermionic_projector(g: FiniteGroup = None) -> AlgebraElement:
    """(1 - (-1))/2"""
    g = _g(g)
    return _el(g, [(Fraction(1, 2), "1"), (Fraction(-1, 2), "-1")])


def cube_sum(g: FiniteGroup = None) -> AlgebraElement:
    """w(1+i+j+k) + w^2(1-i-j-k)"""
    g = _g(g)
    w, w2 = AlgebraElement.basis(g, "w"), AlgebraElement.basis(g, "w^2")
    plus = _el(g, [(1, "1"), (1, "i"), (1, "j"), (1, "k")])
    minus = _el(g, [(1, "1"), (-1, "i"), (-1, "j"), (-1, "k")])
    return w * plus + w2 * minus


def displayed_projectors(g: FiniteGroup = None) -> dict:
    g = _g(g)
    f, s = fermionic_projector(g), cube_sum(g)
    four = AlgebraElement.scalar(g, 4)
    return {
        "M4(R)": f * (four + s) * Fraction(1, 6),
        "M2(C)": f * (four - s * 2) * Fraction(1, 6),
    }


@dataclass(frozen=True, eq=False)
class ProjectorCheck:
    name: str
    displayed: AlgebraElement
    target: AlgebraElement
    target_labels: tuple
    scale: object         # s with target = s * displayed, or None

    @property
    def exact(self) -> bool:
        return self.scale == ONE

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "coeffs": self.displayed.terms_json(),
            "checks": [
                {"property": f"equals e({' + '.join(self.target_labels)})", "pass": self.exact},
                {"property": "normalising scale", "value": None if self.scale is None else self.scale.to_text()},
            ],
        }


def idempotents(g: FiniteGroup = None) -> dict:
    """label -> central primitive idempotent for the named table of G."""
    g = _g(g)
    return {chi.label: central_idempotent(chi) for chi in named_table("G")}


def projector_report(g: FiniteGroup = None) -> list:
    logger.info("Comparing displayed projectors with central idempotents")
    g = _g(g)
    e = idempotents(g)
    shown = displayed_projectors(g)
    out = []
    for name, labels in (("M4(R)", ("4_0",)), ("M2(C)", ("2+", "2-"))):
        target = e[labels[0]]
        for lbl in labels[1:]:
            target = target + e[lbl]
        out.append(ProjectorCheck(name, shown[name], target, labels, ratio(target, shown[name])))
    fermionic = e["2+"] + e["2-"] + e["4_0"]
    out.append(ProjectorCheck("(1-(-1))/2", fermionic_projector(g), fermionic, ("2+", "2-", "4_0"),
                              ratio(fermionic, fermionic_projector(g))))
    return out


def iota_zero(g: FiniteGroup = None, exchanged: bool = False) -> AlgebraElement:
    """((j-k) + (i-j)w + (k-i)w^2) d; with exchanged, w and w^2 swap places."""
    g = _g(g)
    b = lambda word: AlgebraElement.basis(g, word)  # noqa: E731
    w1, w2 = ("w^2", "w") if exchanged else ("w", "w^2")
    return ((b("j") - b("k")) + (b("i") - b("j")) * b(w1) + (b("k") - b("i")) * b(w2)) * b("d")


DISPLAYED_SCALAR = (SQRT2 * 6).inverse()


@dataclass(frozen=True, eq=False)
class ComplexStructureReport:
    sign: int
    displayed_scalar: CyclotomicNumber
    displayed_in_block: bool
    exchanged_in_block: bool           # before projection onto the block
    displayed_vanishes_on_block: bool
    displayed_square_factor: object    # t with (s0 iota0 e)^2 = t e
    exchanged: bool                    # the solved structure uses w and w^2 swapped
    exchanged_square_factor: object    # t with (s0 iota1 e)^2 = t e
    solved_scalar: object
    structure: AlgebraElement
    squares_to_minus_e: bool
    commutes_with_block: bool

    def to_json(self) -> dict:
        text = lambda x: None if x is None else x.to_text()  # noqa: E731
        return {
            "sign": self.sign,
            "displayed_scalar": text(self.displayed_scalar),
            "displayed_square_factor": text(self.displayed_square_factor),
            "exchanged": self.exchanged,
            "exchanged_square_factor": text(self.exchanged_square_factor),
            "solved_scalar": text(self.solved_scalar),
            "checks": [
                {"property": "displayed element lies in the 2+/2- block", "pass": self.displayed_in_block},
                {"property": "displayed element vanishes on the 2+/2- block", "pass": self.displayed_vanishes_on_block},
                {"property": "iota^2 = -e", "pass": self.squares_to_minus_e},
                {"property": "exchanged element lies in the 2+/2- block", "pass": self.exchanged_in_block},
                {"property": "iota commutes with e g e", "pass": self.commutes_with_block},
            ],
        }


def supported_in(x: AlgebraElement, e: AlgebraElement) -> bool:
    """x (1 - e) = 0 for a central idempotent e."""
    return not (x - x * e)


def _solve_scalar(base: AlgebraElement, e: AlgebraElement):
    """The c > 0 with (c base e)^2 = -e, or None."""
    kappa = ratio((base * e) * (base * e), e)
    if kappa is None or not kappa.is_rational() or kappa.to_rational() >= 0:
        return None
    root = CyclotomicNumber.sqrt_of_rational(-kappa.to_rational())
    return root.inverse() if root is not None else None


def complex_structure_check(sign: int = 1, g: FiniteGroup = None) -> ComplexStructureReport:
    """
    Tests the displayed +-((j-k) + (i-j)w + (k-i)w^2) d / (6 sqrt2) against e = e(2+) + e(2-).

    - the displayed element is killed by e, so no scalar makes it square to -e
    - the scalar c > 0 with (c iota e)^2 = -e is solved for the displayed form first, then for the
      form with w and w^2 exchanged, which acts on 2+ and 2- as 3 sqrt2 i up to sign
    - neither form lies in the block as written (both act on 3+ and 3-), so iota is the
      solved form multiplied by e
    """
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    logger.info("Checking the complex structure with sign %+d", sign)
    g = _g(g)
    e_all = idempotents(g)
    e = e_all["2+"] + e_all["2-"]
    displayed, swapped = iota_zero(g), iota_zero(g, exchanged=True)
    shown = displayed * (DISPLAYED_SCALAR * sign)
    projected = shown * e
    swapped_shown = swapped * e * (DISPLAYED_SCALAR * sign)

    solved, chosen, exchanged = None, displayed, False
    for flag, base in ((False, displayed), (True, swapped)):
        solved = _solve_scalar(base, e)
        if solved is not None:
            chosen, exchanged = base, flag
            break
    iota = chosen * e * ((solved if solved is not None else DISPLAYED_SCALAR) * sign)
    block = [e * AlgebraElement.basis(g, x) * e for x in g.generators]
    return ComplexStructureReport(
        sign=sign,
        displayed_scalar=DISPLAYED_SCALAR,
        displayed_in_block=supported_in(shown, e),
        exchanged_in_block=supported_in(swapped * (DISPLAYED_SCALAR * sign), e),
        displayed_vanishes_on_block=not projected,
        displayed_square_factor=ratio(projected * projected, e),
        exchanged=exchanged,
        exchanged_square_factor=ratio(swapped_shown * swapped_shown, e),
        solved_scalar=solved,
        structure=iota,
        squares_to_minus_e=iota * iota == -e,
        commutes_with_block=all(iota * m == m * iota for m in block),
    )


# relation table of the quintuple i, j, k, d, id

QUINTUPLE = ("i", "j", "k", "d", "id")
GAMMA_NAMES = {"i": "γ1", "j": "γ2", "k": "γ3", "d": "γ0", "id": "γ5"}


def _wrap(word: str) -> str:
    return word if len(word) == 1 else f"({word})"


@dataclass(frozen=True)
class RelationEntry:
    kind: str        # commute, anticommute, twisted
    witness: str
    gamma: str       # the Dirac-matrix relation for the same pair
    agrees: bool


@dataclass(frozen=True)
class RelationTable:
    group: str
    squares: Mapping[str, int]
    pairs: Mapping[tuple, RelationEntry]

    def deviations(self) -> list:
        return [(x, y) for (x, y), e in self.pairs.items() if not e.agrees
                and QUINTUPLE.index(x) < QUINTUPLE.index(y)]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "squares": dict(self.squares),
            "pairs": [
                {"pair": [x, y], "kind": e.kind, "witness": e.witness, "gamma": e.gamma, "agrees": e.agrees}
                for (x, y), e in self.pairs.items()
            ],
        }


def _classify(g: FiniteGroup, x: str, y: str) -> tuple:
    ix, iy = g.evaluate(x), g.evaluate(y)
    minus = g.evaluate("-1")
    xy, yx = g.mul(ix, iy), g.mul(iy, ix)
    lhs = _wrap(x) + _wrap(y)
    if xy == yx:
        return "commute", f"{lhs}={_wrap(y)}{_wrap(x)}"
    if xy == g.mul(minus, yx):
        return "anticommute", f"{lhs}=-{_wrap(y)}{_wrap(x)}"
    for z in QUINTUPLE:
        yz = g.mul(iy, g.evaluate(z))
        for eps, target in (("", yz), ("-", g.mul(minus, yz))):
            if xy == target:
                return "twisted", f"{lhs}={eps}{_wrap(y)}{_wrap(z)}"
    return "other", f"{lhs}={g.words[xy]}"


def dirac_relation_table(h: FiniteGroup = None) -> RelationTable:
    """Squares and pairwise relations of i, j, k, d, id beside those of the Dirac matrices."""
    h = h or subgroup_h(binary_octahedral())
    logger.info("Building the relation table of i, j, k, d, id in %s", h.name)
    minus = h.evaluate("-1")
    squares = {}
    for x in QUINTUPLE:
        s = h.evaluate(f"({x})^2")
        squares[x] = 1 if s == 0 else -1 if s == minus else 0
    pairs = {}
    for x in QUINTUPLE:
        for y in QUINTUPLE:
            if x == y:
                continue
            kind, witness = _classify(h, x, y)
            gamma = f"{GAMMA_NAMES[x]}{GAMMA_NAMES[y]}=-{GAMMA_NAMES[y]}{GAMMA_NAMES[x]}"
            pairs[(x, y)] = RelationEntry(kind, witness, gamma, kind == "anticommute")
    return RelationTable(h.name, squares, pairs)


# real Wedderburn types along the quotient chain and over the normal subgroups


def quotient_algebra_chain() -> list:
    """[(name, type)] for G, Sym4, Sym3, Sym2, Sym1."""
    logger.info("Computing the real group algebras along the quotient chain")
    names = ["G"] + [step.name for step in quotient_chain(binary_octahedral())]
    return [(name, wedderburn_of(name)) for name in names]


def normal_subgroup_algebras() -> list:
    """[(name, order, type)] for 1, Z2, Q8, 2.Alt4 and G."""
    logger.info("Computing the real group algebras of the normal subgroups")
    names = [name for name, _ in NORMAL_SUBGROUPS] + ["G"]
    return [(name, named_table(name).group.order, wedderburn_of(name)) for name in names]


def wedderburn_of(name: str) -> WedderburnType:
    return real_wedderburn(named_table(name).group, named_table(name))
