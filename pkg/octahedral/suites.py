"""
Verification suites. Each suite fills a Report whose checks compare computed values with
the recorded ones in golden.json; run_suite returns the report and an exit code.
"""
import logging
from fractions import Fraction
from random import Random
from typing import Callable

from . import algebra
from .catalog import (ASIDE_ROW, QUATERNION_ROWS, SIX_MATRICES, binary_octahedral, golden,
                      group_by_name, named_table, quotient_chain, subgroup_h, subgroup_k)
from .chartab import (WedderburnType, alt2, alt3, complex_wedderburn, fs_indicator, inner_product, mid3,
                      regular_character, sym2, sym3)
from .exact import ONE, ZERO, CyclotomicNumber, ExactMatrix, parse_pretty
from .expr import eval_expression
from .group import FiniteGroup, conjugate_subgroups, is_normal, verify_relations
from .quaternion import Q_C, Q_K, left_multiplication, right_multiplication
from .report import Report, Section
from .reps import (build_4_0_from_2pm, build_irrep, charge_assignment, hypercube_closures,
                   invariant_complex_structures, irrep_attempts, realize_quaternionic, reflection_eigenframe,
                   structure_status)
from .utils import WorkbenchError

logger = logging.getLogger(__name__)

SEED = 20240601


def _pretty(text: str) -> str:
    return parse_pretty(text).to_pretty()


def _column_data(name: str) -> tuple:
    table = named_table(name)
    g = table.group
    return [g.classes[c].size for c in table.columns], [g.classes[c].element_order for c in table.columns]


def _relations(section: Section, g: FiniteGroup) -> None:
    for check in verify_relations(g).checks:
        section.add(f"{check.relation} holds in {g.name}", check.passed, True)


# group


def suite_group(report: Report) -> None:
    gold = golden()
    g = binary_octahedral()
    s = report.section("group G = <i, w, d>")
    s.add("order of G", g.order, 48)
    s.add("number of classes of G", len(g.classes), 8)
    sizes, orders = _column_data("G")
    s.add("class sizes of G in display order", sizes, gold["classes"]["G"]["sizes"])
    s.add("element orders of G in display order", orders, gold["classes"]["G"]["orders"])
    _relations(s, g)

    h = subgroup_h(g)
    s = report.section("subgroup H = <j, d>")
    s.add("order of H", h.order, 16)
    s.add("number of classes of H", len(h.classes), 7)
    sizes, orders = _column_data("H")
    s.add("class sizes of H in display order", sizes, gold["classes"]["H"]["sizes"])
    s.add("element orders of H in display order", orders, gold["classes"]["H"]["orders"])
    _relations(s, h)
    s.add("number of conjugates of H", len(conjugate_subgroups(g, h.embedding)), 3)
    s.add("H is normal in G", is_normal(g, h.embedding), False)

    k = subgroup_k(g)
    s = report.section("subgroup K = <w, d>")
    s.add("order of K", k.order, 6)
    _relations(s, k)

    s = report.section("quotient chain")
    steps = quotient_chain(g)
    s.add("orders along the chain", [g.order] + [st.group.order for st in steps], gold["quotient_chain"]["orders"])
    s.add("kernel orders", [1] + [st.kernel_order for st in steps], gold["quotient_chain"]["kernel_orders"])
    sym3 = next(st.group for st in steps if st.name == "Sym3")
    s.add("K and G/Q8 have the same character labels", list(named_table("K").labels),
          list(named_table("Sym3").labels))
    for check in algebra.lepton_idempotents(sym3).checks:
        s.add(f"{check.name} in G/Q8", check.passed, True)

    cover = group_by_name("2O")
    s = report.section("double cover inside SU(2)")
    s.add("order of <i, w, c>", cover.order, 48)
    s.add("number of classes of <i, w, c>", len(cover.classes), 8)
    s.add("quaternionic irreducibles of <i, w, c>",
          sum(1 for chi in named_table("2O") if fs_indicator(chi) == -1), 3)


# character tables


def suite_chartab(report: Report) -> None:
    gold = golden()
    for name in ("G", "H"):
        table = named_table(name)
        s = report.section(f"character table of {name}")
        s.add(f"irreducible labels of {name}", list(table.labels), list(gold["tables"][name]))
        for label, row in gold["tables"][name].items():
            computed = [table[label].values[c].to_pretty() for c in table.columns]
            s.add(f"row {label}", computed, [_pretty(v) for v in row])

    s = report.section("orthogonality")
    for name in ("G", "H", "K", "2O"):
        table = named_table(name)
        g = table.group
        gram = [[inner_product(a, b).to_pretty() for b in table] for a in table]
        ident = [["1" if i == j else "0" for j in range(len(table))] for i in range(len(table))]
        s.add(f"row orthogonality in {name}", gram, ident)
        s.add(f"sum of squared degrees of {name}", sum(chi.degree ** 2 for chi in table), g.order)
    table = named_table("G")
    g = table.group
    columns_ok = True
    for a in g.classes:
        for b in g.classes:
            total = ZERO
            for chi in table:
                total = total + chi.values[a.index] * chi.values[b.index].conj()
            expected = CyclotomicNumber.from_rational(g.order // a.size if a is b else 0)
            columns_ok = columns_ok and total == expected
    s.add("column orthogonality in G", columns_ok, True)

    s = report.section("Frobenius-Schur indicators")
    s.add("indicators of G", {chi.label: fs_indicator(chi) for chi in table}, gold["indicators"])

    s = report.section("real and complex group algebras")
    for name, expected in gold["wedderburn"]["real"].items():
        s.add(f"real group algebra of {name}", algebra.wedderburn_of(name).render("ascii"),
              WedderburnType.parse(expected).render("ascii"))
    for name, expected in gold["wedderburn"]["complex"].items():
        computed = complex_wedderburn(named_table(name).group, named_table(name))
        s.add(f"complex group algebra of {name}", computed.render("ascii"),
              WedderburnType.parse(expected).render("ascii"))
    for name, alg in algebra.quotient_algebra_chain():
        s.add(f"real group algebra along the chain at {name}", alg.render("ascii"),
              WedderburnType.parse(gold["wedderburn"]["real"][name]).render("ascii"))

    s = report.section("functor consistency")
    for chi in table:
        square = chi * chi
        cube = chi * chi * chi
        s.add(f"{chi.label} squared = S2 + L2", (sym2(chi) + alt2(chi)).values == square.values, True)
        s.add(f"{chi.label} cubed = S3 + L3 + 2 M3",
              (sym3(chi) + alt3(chi) + mid3(chi) * 2).values == cube.values, True)


# branching


def suite_branching(report: Report) -> None:
    gold = golden()
    for sub, key in (("H", "restriction_to_H"), ("K", "restriction_to_K")):
        s = report.section(f"restriction from G to {sub}")
        for label, expected in gold[key].items():
            s.add(f"Res[{sub}]({label})", eval_expression(f"Res[{sub}]({label})").render(),
                  eval_expression(expected, ambient=sub).render())

    s = report.section("Frobenius reciprocity")
    big, small = named_table("G"), named_table("H")
    for psi in small:
        induced = eval_expression(f"Ind[G]({psi.label})")
        restricted = [eval_expression(f"Res[H]({chi.label})")[psi.label] for chi in big]
        s.add(f"<Ind {psi.label}, chi> = <{psi.label}, Res chi> for every chi of G",
              [induced[chi.label] for chi in big], restricted)


# tensor catalogue


def suite_tensors(report: Report) -> None:
    sections = {}
    for entry in golden()["tensors"]:
        s = sections.get(entry["topic"]) or sections.setdefault(entry["topic"], report.section(entry["topic"]))
        s.add(f'{entry["lhs"]} = {entry["rhs"]}', eval_expression(entry["lhs"]).render(),
              eval_expression(entry["rhs"]).render())

    g = named_table("G")
    reg_plus_one = g.decompose(regular_character(g.group)) + eval_expression("1+")
    s = report.section("Clifford squares and the group algebra")
    for sign in "+-":
        lhs = f"L2(3{sign} + 4_0) + S2(3{sign} + 4_0)"
        s.add(f"{lhs} = regular + 1+", eval_expression(lhs).render(), reg_plus_one.render())

    s = report.section("linearity")
    rng = Random(SEED)
    labels = list(g.labels)
    for _ in range(6):
        a, b = rng.choice(labels), rng.choice(labels)
        lhs = eval_expression(f"S2({a}) + {a} * {b}")
        s.add(f"S2({a}) + {a} * {b} evaluates termwise", lhs.as_dict(),
              (eval_expression(f"S2({a})") + eval_expression(f"{a} * {b}")).as_dict())


# group algebra


def suite_idempotents(report: Report) -> None:
    gold = golden()["idempotents"]
    leptons = algebra.lepton_idempotents()
    s = report.section("lepton idempotents in K")
    for check in leptons.checks:
        s.add(check.name, check.passed, True)

    s = report.section("M2 isomorphism of the lepton block")
    iso = algebra.lepton_m2_isomorphism()
    for check in iso.checks:
        s.add(check.name, check.passed, True)

    s = report.section("central idempotents of G")
    es = algebra.idempotents()
    g = binary_octahedral()
    total = algebra.AlgebraElement(g, {})
    for label, e in es.items():
        degree = named_table("G")[label].degree
        s.add(f"e({label})^2 = e({label})", e * e == e, True)
        s.add(f"e({label}) is central", e.is_central(), True)
        s.add(f"block dimension of e({label})", algebra.block_dimension(e), degree ** 2)
        total = total + e
    s.add("idempotents sum to 1", total == algebra.one(g), True)
    labels = list(es)
    orthogonal = all(not (es[a] * es[b]) for n, a in enumerate(labels) for b in labels[n + 1:])
    s.add("idempotents are pairwise orthogonal", orthogonal, True)
    s.add("e(2+) + e(2-) has rational coefficients", (es["2+"] + es["2-"]).is_rational(), True)

    s = report.section("displayed projectors")
    expected = {"M4(R)": gold["projector_scale_M4R"], "M2(C)": gold["projector_scale_M2C"], "(1-(-1))/2": "1"}
    for check in algebra.projector_report():
        computed = None if check.scale is None else check.scale.to_pretty()
        s.add(f"scale taking the {check.name} projector to e({' + '.join(check.target_labels)})",
              computed, _pretty(expected[check.name]))

    s = report.section("complex structure on the 2+/2- block")
    reports = {sign: algebra.complex_structure_check(sign) for sign in (1, -1)}
    for sign, r in reports.items():
        tag = "+" if sign > 0 else "-"
        s.add(f"({tag}) displayed element vanishes on the block", r.displayed_vanishes_on_block,
              gold["displayed_vanishes_on_block"])
        s.add(f"({tag}) displayed element squared on the block, as a multiple of e",
              r.displayed_square_factor.to_pretty(), _pretty(gold["displayed_square_factor"]))
        s.add(f"({tag}) structure solved with w and w^2 exchanged", r.exchanged, True)
        s.add(f"({tag}) exchanged element with the displayed scalar, squared, as a multiple of e",
              r.exchanged_square_factor.to_pretty(), _pretty(gold["exchanged_square_factor"]))
        s.add(f"({tag}) solved scalar", r.solved_scalar.to_pretty() if r.solved_scalar else None,
              _pretty(gold["complex_structure_scalar"]))
        s.add(f"({tag}) iota^2 = -e", r.squares_to_minus_e, True)
        s.add(f"({tag}) exchanged element lies in the block before projection", r.exchanged_in_block,
              gold["exchanged_in_block"])
        s.add(f"({tag}) iota commutes with e g e", r.commutes_with_block, True)
    s.add("the two signs give negatives", reports[1].structure == -reports[-1].structure, True)

    s = report.section("convolution")
    rng = Random(SEED)
    ok = True
    for _ in range(5):
        a, b, c = (_random_element(g, rng) for _ in range(3))
        ok = ok and (a * b) * c == a * (b * c)
    s.add("convolution is associative on random elements", ok, True)


def _random_element(g: FiniteGroup, rng: Random) -> "algebra.AlgebraElement":
    return algebra.AlgebraElement(g, {rng.randrange(g.order): _random_number(rng) for _ in range(4)})


def _random_number(rng: Random) -> CyclotomicNumber:
    return CyclotomicNumber(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8))


# Dirac relations


def suite_dirac(report: Report) -> None:
    gold = golden()["dirac"]
    table = algebra.dirac_relation_table()
    s = report.section("relations of i, j, k, d, id")
    s.add("squares", dict(table.squares), gold["squares"])
    q = algebra.QUINTUPLE
    twisted = {
        f"{x},{y}": e.witness for (x, y), e in table.pairs.items()
        if e.kind == "twisted" and q.index(x) < q.index(y)
    }
    s.add("twisted pairs and their relations", twisted, gold["twisted"])
    s.add("number of deviations from the Dirac relations", len(table.deviations()), 4)
    others = sorted({e.kind for (x, y), e in table.pairs.items() if f"{x},{y}" not in gold["twisted"]
                     and f"{y},{x}" not in gold["twisted"]})
    s.add("kinds of the remaining pairs", others, ["anticommute"])
    symmetric = all(table.pairs[(y, x)].kind == e.kind for (x, y), e in table.pairs.items())
    s.add("relation kinds are symmetric", symmetric, True)


# hypercube, explicit matrices and eigenframes


def suite_hypercube(report: Report) -> None:
    gold = golden()
    s = report.section("hypercube closures")
    results = [result for _, result in hypercube_closures()]
    s.add("closure orders", [r.order for r in results], gold["hypercube"]["orders"])
    s.add("every element is a signed permutation", [r.signed_permutations for r in results], [True] * 3)

    s = report.section("explicit irreducible matrices")
    for label, expected in gold["irrep_variants"].items():
        rep, _ = irrep_attempts(label)
        s.add(f"verified image variant for {label}", rep.note if rep else None, expected)
    four = build_irrep("4_0")
    s.add("distinct 4_0 images", len(four.distinct_images()), 48)
    for label in ("2_0", "2+", "2-"):
        s.add(f"{label} images are unitary", build_irrep(label).is_unitary(), True)
    s.add("3- images all have determinant 1", [d.to_pretty() for d in build_irrep("3-").determinants()], ["1"])
    s.add("some 3+ image has determinant -1", -ONE in build_irrep("3+").determinants(), True)
    two_zero = build_irrep("2_0")
    s.add("2_0 images are the six matrices", set(two_zero.distinct_images()) == set(SIX_MATRICES), True)

    s = report.section("4_0 from 2+ and 2-")
    four_values = named_table("G")["4_0"].values
    for sign in (1, -1):
        recipe = build_4_0_from_2pm(sign)
        tag = "2+" if sign > 0 else "2-"
        s.add(f"character of the twisted realification of {tag}", recipe.rep.character().values == four_values, True)
        s.add(f"literal recipe from {tag} breaks wdw=d", "wdw=d" in recipe.literal_failures, True)

    s = report.section("quaternionic actions")
    for row in list(QUATERNION_ROWS) + [ASIDE_ROW[0]]:
        action = realize_quaternionic(row)
        s.add(f"decomposition of {row}", action.decomposition.render(), action.expected.render())

    s = report.section("invariant complex structures")
    s.add("complex structures on 4_0", len(invariant_complex_structures(realize_quaternionic("4_0").rep)), 0)
    table_row = realize_quaternionic("2++2-").rep
    structures = invariant_complex_structures(table_row)
    left_k = left_multiplication(Q_K)
    s.add("left multiplication by k is invariant on 2++2-", left_k in structures and -left_k in structures, True)
    s.add("right multiplication by c on 2++2-: (squares to -1, commutes)",
          list(structure_status(table_row, right_multiplication(Q_C))), [True, False])
    aside = realize_quaternionic(ASIDE_ROW[0]).rep
    left_c = left_multiplication(Q_C)
    s.add("left multiplication by c is invariant on the variant row",
          left_c in invariant_complex_structures(aside), True)

    s = report.section("eigenframe and charges")
    frame = reflection_eigenframe(two_zero)
    s.add("+1 eigenlines match (2,0), (-1,sqrt3), (-1,-sqrt3)", frame.plus_matches, True)
    s.add("-1 eigenlines match (0,2), (sqrt3,-1), (-sqrt3,-1)", frame.minus_matches, True)
    s.add("each +1 line is orthogonal to the -1 line of its reflection", frame.orthogonal, True)
    charges = charge_assignment()
    s.add("charges of the first set", [c.to_pretty() for c in charges.first],
          [_pretty(x) for x in gold["charges"]["first"]])
    s.add("charges of the second set", [c.to_pretty() for c in charges.second],
          [_pretty(x) for x in gold["charges"]["second"]])
    s.add("scale of the second set", charges.scale.to_pretty(), _pretty(gold["charges"]["scale"]))


# field arithmetic


def suite_exact(report: Report) -> None:
    rng = Random(SEED)
    s = report.section("field axioms")
    triples = [tuple(_random_number(rng) for _ in range(3)) for _ in range(20)]
    s.add("associativity", all((a * b) * c == a * (b * c) for a, b, c in triples), True)
    s.add("distributivity", all(a * (b + c) == a * b + a * c for a, b, c in triples), True)
    s.add("inverses", all(a * a.inverse() == ONE for a, _, _ in triples if a), True)
    s.add("conjugation is multiplicative", all((a * b).conj() == a.conj() * b.conj() for a, b, _ in triples), True)
    s.add("text round trip", all(CyclotomicNumber.from_text(a.to_text()) == a for a, _, _ in triples), True)
    s.add("pretty round trip", all(CyclotomicNumber.from_pretty(a.to_pretty()) == a for a, _, _ in triples), True)

    s = report.section("matrices")
    ok = True
    for _ in range(5):
        m = ExactMatrix.from_rows([[_random_number(rng) for _ in range(3)] for _ in range(3)])
        if m.det():
            ok = ok and m @ m.inverse() == ExactMatrix.identity(3)
    s.add("inverse of random 3x3 matrices", ok, True)


SUITES: dict = {
    "group": suite_group,
    "chartab": suite_chartab,
    "branching": suite_branching,
    "tensors": suite_tensors,
    "idempotents": suite_idempotents,
    "dirac": suite_dirac,
    "hypercube": suite_hypercube,
    "exact": suite_exact,
}


def _run(name: str, fn: Callable, report: Report) -> None:
    logger.info("Running suite %s", name)
    try:
        fn(report)
    except WorkbenchError as e:
        report.section(f"{name}: error").add(f"suite {name} completes", str(e), "no error")


def run_suite(name: str) -> tuple:
    """(report, exit code): 0 when every check passes, 1 on a failed check, 2 for an unknown suite."""
    if name == "all":
        report = Report("all suites")
        for key, fn in SUITES.items():
            _run(key, fn, report)
    elif name in SUITES:
        report = Report(f"{name} suite")
        _run(name, SUITES[name], report)
    else:
        logger.error("Unknown suite %s; known: %s", name, ", ".join(list(SUITES) + ["all"]))
        return Report(f"unknown suite {name}"), 2
    return report, 0 if report.passed else 1
