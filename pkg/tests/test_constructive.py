from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowis import (
    Collection,
    EmptyFamilyError,
    JumpSet,
    PreconditionError,
    build_cycle,
    enumerate_ind_sets,
    enumerate_jump_sets,
    gap_vector,
    jump_collection,
    parse_descriptor,
    rainbow_cycle_n_minus_1,
    solve_two_jump,
    solve_two_regular,
    used_fallback,
    verify_rainbow,
)
from rainbowis.graph import to_index

from .oracles import brute_has_rainbow


def jumps(t, n, starts):
    return [JumpSet(t, s, 2, n) for s in starts]


class TestGapVector:
    def test_rotation_minimizes(self):
        # clockwise 1,3,5,8 on C_14 gives (7, 2, 2, 3); other rotations are larger
        d, order = gap_vector([to_index(v) for v in (1, 3, 5, 8)], 14)
        assert d == (7, 2, 2, 3) and [o + 1 for o in order] == [1, 3, 5, 8]

    def test_wraparound(self):
        d, order = gap_vector([to_index(v) for v in (2, 13)], 14)
        assert d == (3, 3) and [o + 1 for o in order] == [13, 2]

    def test_empty(self):
        assert gap_vector([], 9) == ((), ())


class TestTwoJump:
    def test_pentagon(self):
        r = solve_two_jump(5, 2, jumps(5, 2, [1, 2]))
        assert verify_rainbow(build_cycle(5), r.collection, r, 2)
        assert r.collection.to_lists() == [[1, 3], [2, 4]]

    def test_identical_sets(self):
        r = solve_two_jump(7, 3, jumps(7, 3, [1, 1, 1]))
        assert r.pairs == ((1, 1), (3, 2), (5, 3))

    def test_nine_cycle(self):
        r = solve_two_jump(9, 4, jumps(9, 4, [1, 1, 3, 3]))
        assert verify_rainbow(build_cycle(9), r.collection, r, 4)

    def test_log_records_moves(self):
        r = solve_two_jump(14, 5, jumps(14, 5, [1, 1, 1, 14, 14]))
        moves = [rec["move"] for rec in r.log]
        assert moves[0] == "greedy" and "uncovered" in moves and not used_fallback(r)

    def test_fallback_is_flagged(self):
        r = solve_two_jump(11, 5, jumps(11, 5, [6, 7, 8, 8, 11]))
        assert used_fallback(r)
        assert r.log[-1]["reason"] == "t = 2n+1"
        assert verify_rainbow(build_cycle(11), r.collection, r, 5)

    @pytest.mark.parametrize(
        "t,n,sets,clause",
        [
            (6, 3, [JumpSet(6, 1, 2, 3)] * 3, "t >= 2n+1"),
            (7, 3, [JumpSet(7, 1, 2, 3)] * 2, "|F| = n"),
            (7, 3, [JumpSet(7, 1, 2, 3)] * 2 + [JumpSet(7, 1, 3, 3)], "every set is a 2-jump n-set of C_t"),
            (7, 3, [JumpSet(8, 1, 2, 3)] * 3, "every set is a 2-jump n-set of C_t"),
        ],
    )
    def test_preconditions(self, t, n, sets, clause):
        with pytest.raises(PreconditionError) as info:
            solve_two_jump(t, n, sets)
        assert info.value.clause == clause


def _measure(rec):
    return (-len(rec["state"]["order"]), rec["state"]["gaps"])


@pytest.mark.parametrize("n,t", [(2, 5), (2, 9), (3, 7), (3, 10), (4, 9), (4, 12)])
def test_two_jump_exhaustive_small(n, t):
    g = build_cycle(t)
    for combo in combinations_with_replacement(enumerate_jump_sets(t, 2, n), n):
        r = solve_two_jump(t, n, list(combo))
        assert verify_rainbow(g, r.collection, r, n)
        states = [rec for rec in r.log if "state" in rec]
        # every move either grows A or keeps |A| and lowers the gap vector
        for a, b in zip(states, states[1:]):
            assert _measure(b) < _measure(a)


@given(st.data())
def test_two_jump_random(data):
    n = data.draw(st.integers(2, 6))
    t = data.draw(st.integers(2 * n + 1, 2 * n + 10))
    starts = data.draw(st.lists(st.integers(1, t), min_size=n, max_size=n))
    r = solve_two_jump(t, n, jumps(t, n, starts))
    assert verify_rainbow(build_cycle(t), r.collection, r, n)
    if t >= 2 * n + 2:
        assert not used_fallback(r)


class TestTwoRegular:
    def test_two_squares(self):
        g = parse_descriptor("C4+C4")
        f = Collection.from_lists([[1, 3, 5, 7], [2, 4, 6, 8], [1, 3, 6, 8]])
        r = solve_two_regular(g, 4, f)
        assert verify_rainbow(g, f, r, 3)

    def test_single_hexagon_matches_cycle_construction(self):
        g = build_cycle(6)
        f = Collection.from_lists([[1, 3, 5], [2, 4, 6]])
        r = solve_two_regular(g, 3, f)
        assert r.pairs == rainbow_cycle_n_minus_1(6, f, 3).pairs

    def test_square_and_hexagon(self):
        g = parse_descriptor("C4+C6")
        family = enumerate_ind_sets(g, 5)
        for combo in combinations_with_replacement(family, 4):
            f = Collection(combo)
            r = solve_two_regular(g, 5, f)
            assert verify_rainbow(g, f, r, 4)
            assert brute_has_rainbow(g, [set(s.labels()) for s in f], 4)

    @pytest.mark.parametrize("desc", ["C4+C4+C4", "C6+C4+C4", "C4+C6+C6", "C8+C4", "C10"])
    def test_three_or_more_even_cycles(self, desc):
        g = parse_descriptor(desc)
        n = g.vertex_count // 2
        for combo in combinations_with_replacement(enumerate_ind_sets(g, n), n - 1):
            f = Collection(combo)
            assert verify_rainbow(g, f, solve_two_regular(g, n, f), n - 1)

    @pytest.mark.parametrize("desc", ["C3", "C3+C4", "C5+C6", "C3+C3+C5", "C4+C7", "C3+C5"])
    def test_odd_cycles_leave_no_independent_n_set(self, desc):
        g = parse_descriptor(desc)
        n = (g.vertex_count + 1) // 2
        with pytest.raises(EmptyFamilyError):
            solve_two_regular(g, n, Collection())

    @pytest.mark.parametrize(
        "desc,n,sets",
        [
            ("C4+P2", 3, [[1, 3, 5]] * 2),
            ("C4+C4", 5, []),
            ("C4+C4", 4, [[1, 3, 5, 7]]),
            ("C4+C4", 4, [[1, 3, 5]] * 3),
        ],
    )
    def test_preconditions(self, desc, n, sets):
        with pytest.raises(PreconditionError):
            solve_two_regular(parse_descriptor(desc), n, Collection.from_lists(sets))
