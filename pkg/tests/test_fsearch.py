import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowis import (
    Collection,
    EmptyFamilyError,
    FResult,
    PreconditionError,
    bad_collections,
    build_cycle,
    build_path,
    check_B_properties,
    enumerate_ind_sets,
    f_value,
    find_rainbow,
    is_bad,
    parse_descriptor,
    sweep_B_properties,
)
from rainbowis.errors import InvalidParameterError

from .oracles import brute_f

HALVES3 = [[1, 3, 5], [1, 3, 5], [2, 4, 6], [2, 4, 6]]


class TestIsBad:
    def test_two_copies_of_each_half(self):
        assert is_bad(build_cycle(6), Collection.from_lists(HALVES3), 3)

    def test_one_more_copy_is_good(self):
        assert not is_bad(build_cycle(6), Collection.from_lists(HALVES3 + [[1, 3, 5]]), 3)

    def test_fewer_sets_than_m(self):
        assert is_bad(build_cycle(9), Collection.from_lists([[1, 3], [5, 7]]), 3)


class TestValues:
    @pytest.mark.parametrize(
        "desc,n,m,f",
        [
            ("C5", 2, 2, 2),
            ("C7", 3, 3, 3),
            ("C6", 3, 3, 5),
            ("C4", 2, 2, 3),
            ("C8", 3, 2, 2),
            ("C4+C4", 4, 3, 3),
            ("P5", 3, 3, 3),
            ("C6", 2, 1, 1),
        ],
    )
    def test_known(self, desc, n, m, f):
        res = f_value(parse_descriptor(desc), n, m)
        assert res.f_value == f and not res.inconclusive
        assert res.f_value >= m

    def test_witness_of_hexagon(self):
        res = f_value(build_cycle(6), 3, 3)
        assert sorted(res.witness.to_lists()) == sorted(HALVES3)
        assert res.stats["classes_per_level"][-1] >= 1

    def test_no_witness_when_f_equals_m(self):
        assert f_value(build_cycle(7), 3, 3).witness is None

    def test_m_zero(self):
        res = f_value(build_cycle(5), 2, 0)
        assert res.f_value == 0 and res.witness is None

    def test_empty_family(self):
        with pytest.raises(EmptyFamilyError):
            f_value(build_cycle(5), 3, 3)

    def test_bad_parameters(self):
        with pytest.raises(InvalidParameterError):
            f_value(build_cycle(5), 2, 3)
        with pytest.raises(InvalidParameterError):
            f_value(build_cycle(5), 2, 2, cap=0)

    def test_cap_reached_is_inconclusive(self):
        res = f_value(build_cycle(6), 3, 3, cap=3)
        assert res.inconclusive and res.f_value == 4

    def test_time_budget_exhausted_is_inconclusive(self):
        res = f_value(build_path(12), 4, 4, time_budget=0.0)
        assert res.inconclusive

    def test_record_roundtrip(self):
        res = f_value(build_cycle(6), 3, 3)
        back = FResult.from_record(res.to_record())
        assert back.f_value == res.f_value and back.witness == res.witness and back.graph == "C6"


TINY = [("C4", 2), ("C5", 2), ("C6", 2), ("C6", 3), ("P3", 2), ("P4", 2), ("P5", 3), ("C3+P2", 2), ("P2+P2", 2)]


@pytest.mark.parametrize("desc,n", TINY)
def test_f_matches_brute_force(desc, n):
    g = parse_descriptor(desc)
    for m in range(0, n + 1):
        res = f_value(g, n, m)
        assert res.f_value == brute_f(g, n, m, cap=res.f_value)


SMALL = [(f"C{t}", n) for t in range(3, 9) for n in range(1, 4) if n <= t // 2]
SMALL += [(f"P{t}", n) for t in range(1, 9) for n in range(1, 4) if n <= (t + 1) // 2]
SMALL += [("C4+C4", 3), ("C3+C5", 2), ("P2+C4", 2), ("C4+P3", 3)]


@pytest.mark.parametrize("desc,n", SMALL)
def test_symmetry_reduction_is_sound(desc, n):
    g = parse_descriptor(desc)
    for m in range(1, n + 1):
        a = f_value(g, n, m)
        b = f_value(g, n, m, symmetry=False)
        assert a.f_value == b.f_value
        assert a.stats["canonical_classes"] <= b.stats["canonical_classes"]


@pytest.mark.parametrize("desc,n", SMALL)
def test_witness_is_bad_and_maximal(desc, n):
    g = parse_descriptor(desc)
    family = enumerate_ind_sets(g, n)
    for m in range(1, n + 1):
        res = f_value(g, n, m)
        if res.witness is None:
            assert res.f_value == m
            continue
        w = res.witness
        assert len(w) == res.f_value - 1
        assert find_rainbow(g, w, m) is None
        for s in family:
            assert find_rainbow(g, Collection(w.sets + (s,)), m) is not None


@pytest.mark.parametrize("desc,n,m", [("C6", 3, 3), ("C8", 4, 4), ("C4+C4", 4, 4), ("C4", 2, 2)])
def test_sub_multisets_of_witness_stay_bad(desc, n, m):
    g = parse_descriptor(desc)
    w = f_value(g, n, m).witness
    rng = random.Random(7)
    for _ in range(30):
        keep = [s for s in w.sets if rng.random() < 0.6]
        assert is_bad(g, Collection(tuple(keep)), m)


@pytest.mark.parametrize("desc,n,m", [("C6", 3, 3), ("C9", 3, 3), ("P9", 4, 4), ("C4+C6", 4, 4)])
def test_worker_count_does_not_change_result(desc, n, m):
    g = parse_descriptor(desc)
    a = f_value(g, n, m, workers=1)
    b = f_value(g, n, m, workers=2)
    assert a.f_value == b.f_value and a.witness == b.witness
    assert a.stats["classes_per_level"] == b.stats["classes_per_level"]


class TestBProperties:
    def test_hexagon_example(self):
        f = Collection.from_lists([[1, 3, 5], [1, 3, 5], [2, 4, 6]])
        rep = check_B_properties(build_cycle(6), f, 3)
        assert rep.status("B1") == "pass" and rep.status("B3") == "n/a"

    def test_octagon_example(self):
        f = Collection.from_lists([[1, 3, 5, 7], [1, 3, 5, 7], [2, 4, 6, 8], [2, 4, 6, 8]])
        rep = check_B_properties(build_cycle(8), f, 4)
        assert rep.status("B1") == "pass" and rep.status("B3") == "n/a" and rep.ok

    def test_heptagon_is_vacuous(self):
        sweep = sweep_B_properties(7, 3)
        assert sweep.vacuous and sweep.bad_count == 0 and sweep.reports == ()

    @pytest.mark.parametrize("t,n", [(4, 2), (6, 3), (8, 4)])
    def test_even_cycle_families(self, t, n):
        sweep = sweep_B_properties(t, n)
        assert not sweep.vacuous and sweep.ok

    def test_reports_failure_with_vertex(self):
        # not a real bad family for m = n on a cycle long enough, so the check runs on C_6 where it is
        f = Collection.from_lists([[1, 3, 5], [1, 3, 5], [1, 3, 5]])
        with pytest.raises(PreconditionError):
            check_B_properties(build_cycle(6), f, 3)
        f = Collection.from_lists([[1, 3, 5], [2, 4, 6], [2, 4, 6]])
        rep = check_B_properties(build_cycle(6), f, 3)
        assert rep.status("B2") == "pass"

    @pytest.mark.parametrize(
        "desc,sets,n",
        [
            ("P6", [[1, 3, 5]] * 3, 3),
            ("C5", [[1, 3]] * 2, 3),
            ("C6", [[1, 3, 5]] * 2, 3),
            ("C6", [[1, 3, 5], [1, 3, 5], [1, 4]], 3),
        ],
    )
    def test_preconditions(self, desc, sets, n):
        with pytest.raises(PreconditionError):
            check_B_properties(parse_descriptor(desc), Collection.from_lists(sets), n)


def test_bad_collections_of_hexagon():
    bads = bad_collections(build_cycle(6), 3, 3, 4)
    assert [sorted(b.to_lists()) for b in bads] == [sorted(HALVES3)]
    assert bad_collections(build_cycle(6), 3, 3, 5) == []


@settings(max_examples=30)
@given(st.integers(5, 10), st.integers(2, 3))
def test_lower_bound(t, n):
    if 2 * n > t:
        return
    for m in range(n + 1):
        assert f_value(build_cycle(t), n, m).f_value >= m
