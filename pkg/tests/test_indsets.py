import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowis import (
    Collection,
    InvalidParameterError,
    InvalidSetError,
    build_cycle,
    count_ind_sets,
    enumerate_ind_sets,
    enumerate_jump_sets,
    is_independent,
    jump_collection,
    list_number,
    list_of,
    parse_descriptor,
)

from .oracles import brute_ind_sets
from .strategies import collections, graphs


class TestEnumeration:
    def test_hexagon_halves(self):
        assert [s.labels() for s in enumerate_ind_sets(build_cycle(6), 3)] == [[1, 3, 5], [2, 4, 6]]

    def test_pentagon_pairs(self):
        assert len(enumerate_ind_sets(build_cycle(5), 2)) == 5

    def test_two_squares(self):
        sets = enumerate_ind_sets(parse_descriptor("C4+C4"), 4)
        assert [s.labels() for s in sets] == [[1, 3, 5, 7], [1, 3, 6, 8], [2, 4, 5, 7], [2, 4, 6, 8]]

    def test_too_large_is_empty(self):
        assert enumerate_ind_sets(parse_descriptor("P1"), 2) == []
        assert count_ind_sets(parse_descriptor("C7"), 4) == 0

    def test_size_zero(self):
        assert [s.labels() for s in enumerate_ind_sets(build_cycle(5), 0)] == [[]]

    @pytest.mark.parametrize("t", range(3, 17))
    def test_cycles_match_subset_oracle(self, t):
        g = build_cycle(t)
        for n in range(0, min(t, 8) + 1):
            got = [tuple(s.labels()) for s in enumerate_ind_sets(g, n)]
            assert got == brute_ind_sets(g, n)
            assert count_ind_sets(g, n) == len(got)

    def test_cycle_count_formula(self):
        # independent k-sets of C_t: t/(t-k) * C(t-k, k)
        for t in range(3, 30):
            for k in range(0, t // 2 + 1):
                assert count_ind_sets(build_cycle(t), k) * (t - k) == t * comb(t - k, k)


@given(graphs(max_vertices=11), st.integers(0, 6))
def test_enumeration_matches_oracle_on_unions(g, n):
    assert [tuple(s.labels()) for s in enumerate_ind_sets(g, n)] == brute_ind_sets(g, n)
    assert count_ind_sets(g, n) == len(brute_ind_sets(g, n))


class TestJumpSets:
    def test_seven_cycle(self):
        js = enumerate_jump_sets(7, 2, 3)
        assert len(js) == 7 and [j.start for j in js] == list(range(1, 8))
        assert js[5].members == [6, 1, 3]

    def test_hexagon_jumps(self):
        # {a, a+2, a+4} is independent in C_6 (a+4 and a are two apart)
        js = enumerate_jump_sets(6, 2, 3)
        assert len(js) == 6
        assert {tuple(sorted(j.members)) for j in js} == {(1, 3, 5), (2, 4, 6)}

    def test_pentagon_pairs(self):
        assert len(enumerate_jump_sets(5, 2, 2)) == 5

    @pytest.mark.parametrize("t,k,n", [(2, 2, 1), (7, 1, 2), (7, 6, 2), (7, 2, 0)])
    def test_parameter_errors(self, t, k, n):
        with pytest.raises(InvalidParameterError):
            enumerate_jump_sets(t, k, n)

    def test_long_progression_wraps_into_itself(self):
        # step 3 on C_9 repeats after three elements
        assert enumerate_jump_sets(9, 3, 4) == []

    @pytest.mark.parametrize("n", range(1, 7))
    def test_every_start_works_when_long_enough(self, n):
        for t in range(max(2 * n + 1, 4), 2 * n + 8):
            js = enumerate_jump_sets(t, 2, n)
            assert len(js) == t
            g = build_cycle(t)
            for j in js:
                assert is_independent(g, j.vertex_set)
                assert all((b - a) % t == 2 for a, b in zip(j.members, j.members[1:]))
                assert j.end == j.members[-1]


class TestLists:
    f = Collection.from_lists([[1, 3], [1, 4]])

    def test_list_of(self):
        assert list_of(self.f, 1) == [1, 2]
        assert list_of(self.f, 2) == []
        assert list_of(self.f, 4) == [2]

    def test_list_number(self):
        assert list_number(self.f, 1) == 2
        assert list_number(Collection(), 5) == 0

    def test_all_jump_sets_of_seven_cycle(self):
        f = jump_collection(enumerate_jump_sets(7, 2, 3))
        assert all(list_number(f, v) == 3 for v in range(1, 8))


@given(graphs(max_vertices=12), st.data())
def test_double_counting(g, data):
    f = data.draw(collections(g))
    assert sum(list_number(f, v) for v in range(1, g.vertex_count + 1)) == sum(len(s) for s in f)


class TestSerialization:
    def test_roundtrip_example(self):
        text = "[[1, 3, 5], [2, 4, 6]]"
        f = Collection.from_json(text)
        assert f.to_json() == text
        assert Collection.from_json(f.to_json()) == f

    @pytest.mark.parametrize("text", ["{}", "[[1, 1]]", "[[1.5]]", "[1, 2]", "not json"])
    def test_bad_json(self, text):
        with pytest.raises(InvalidSetError):
            Collection.from_json(text)

    def test_validate_names_offending_set(self):
        f = Collection.from_lists([[1, 3], [2, 3]])
        with pytest.raises(InvalidSetError, match="set 2"):
            f.validate(build_cycle(5))

    def test_multiset_key_ignores_order(self):
        a = Collection.from_lists([[1, 3], [2, 4]])
        b = Collection.from_lists([[2, 4], [1, 3]])
        assert a != b and a.multiset_key() == b.multiset_key()


@given(graphs(max_vertices=12), st.data())
def test_json_roundtrip(g, data):
    f = data.draw(collections(g))
    assert Collection.from_json(f.to_json()) == f
    assert json.loads(f.to_json()) == f.to_lists()
