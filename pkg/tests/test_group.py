import pytest

from octahedral.catalog import MATRICES, golden, group_by_name, normal_subgroup, quotient_chain
from octahedral.group import (centralizer, class_power_map, conjugacy_classes, conjugate_subgroups, generate_group,
                              is_normal, quotient_group, subgroup_ids, verify_relations)
from octahedral.utils import ClosureBudgetExceeded, NotNormalError, UnknownNameError


def test_orders(g, h, k):
    assert g.order == 48
    assert h.order == 16
    assert k.order == 6
    assert g.exponent == 24
    assert len(g.classes) == 8
    assert len(h.classes) == 7
    assert len(k.classes) == 3


def test_class_sizes_match_recorded_values(g, h):
    for grp in (g, h):
        recorded = golden()["classes"][grp.name]
        assert sorted(c.size for c in grp.classes) == sorted(recorded["sizes"])
        assert sorted(c.element_order for c in grp.classes) == sorted(recorded["orders"])
    assert sum(c.size for c in g.classes) == 48


def test_cayley_table_is_a_group(g):
    for a in range(g.order):
        assert sorted(g.cayley[a]) == list(range(g.order))
        assert g.mul(a, g.inv(a)) == 0
    assert all(g.mul(0, x) == x for x in range(g.order))


def test_evaluate_words(g):
    assert g.evaluate("1") == 0
    assert g.evaluate("i^2") == g.evaluate("-1")
    assert g.evaluate("ij") == g.evaluate("k")
    assert g.evaluate("w^3") == 0
    assert g.evaluate("d^2") == 0
    assert g.evaluate("wdw") == g.evaluate("d")
    assert g.element_orders[g.evaluate("jd")] == 8
    with pytest.raises(UnknownNameError):
        g.evaluate("z")


def test_words_name_their_elements(g):
    for x in range(g.order):
        assert g.evaluate(g.words[x]) == x


def test_relations_hold(g, h, k):
    for grp in (g, h, k):
        report = verify_relations(grp)
        assert report.checks
        assert report.all_passed
        assert report.failures == []


def test_failing_relation_is_reported(g):
    report = verify_relations(g, ["w^2=1", "d^2=1"])
    assert [c.passed for c in report.checks] == [False, True]
    assert report.failures[0].relation == "w^2=1"


def test_h_has_three_conjugates(g, h):
    assert len(conjugate_subgroups(g, h.embedding)) == 3
    assert not is_normal(g, h.embedding)


def test_subgroups_inherit_symbols(g, h, k):
    assert h.parent is g
    assert g.evaluate("jd") in h.embedding
    assert k.embedding[k.evaluate("w")] == g.evaluate("w")


def test_normal_subgroups(g):
    for name, order in (("1", 1), ("Z2", 2), ("Q8", 8), ("2.Alt4", 24)):
        n = normal_subgroup(g, name)
        assert n.order == order
        assert is_normal(g, n.embedding)


def test_quotient_chain(g):
    steps = quotient_chain(g)
    recorded = golden()["quotient_chain"]
    assert [s.group.order for s in steps] == recorded["orders"][1:]
    assert [s.kernel_order for s in steps] == recorded["kernel_orders"][1:]
    for s in steps:
        assert s.qmap(0) == 0
        assert s.qmap.kernel == frozenset(x for x in range(g.order) if s.qmap(x) == 0)


def test_quotient_by_a_non_normal_subgroup(g, h):
    with pytest.raises(NotNormalError):
        quotient_group(g, h.embedding)


def test_quotient_needs_a_subgroup(g):
    with pytest.raises(ValueError):
        quotient_group(g, [0, g.evaluate("w")])


def test_other_cover_has_the_same_order_and_classes():
    other = group_by_name("2O")
    assert other.order == 48
    assert len(other.classes) == 8


def test_closure_budget():
    with pytest.raises(ClosureBudgetExceeded):
        generate_group([MATRICES["i"], MATRICES["w"], MATRICES["d"]], cap=10)


def test_power_maps(g):
    squares = class_power_map(g, 2)
    minus_one = g.class_of[g.evaluate("-1")]
    assert squares[g.class_of[g.evaluate("i")]] == minus_one
    assert squares[g.class_of[g.evaluate("d")]] == 0


def test_subgroup_ids_of_generators(g):
    assert len(subgroup_ids(g, [g.evaluate("i"), g.evaluate("j")])) == 8
    assert len(subgroup_ids(g, [g.evaluate("i"), g.evaluate("w")])) == 24


def test_centralizers_and_class_sizes(g):
    classes = conjugacy_classes(g)
    assert sum(c.size for c in classes) == g.order
    assert centralizer(g, 0) == frozenset(range(g.order))
    assert len(centralizer(g, g.evaluate("-1"))) == g.order
    for c in classes:
        assert len(centralizer(g, c.representative)) * c.size == g.order
        assert c.representative in c.members
