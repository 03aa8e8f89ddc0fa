import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowis import (
    Collection,
    InvalidCertificateError,
    RainbowAssignment,
    build_cycle,
    build_path,
    find_rainbow,
    has_rainbow,
    verify_rainbow,
)
from rainbowis.rainbow import assignment_from_labels, match_colors, rainbow_layers

from .oracles import brute_rainbow
from .strategies import collections, graphs

C6 = build_cycle(6)
HALVES = Collection.from_lists([[1, 3, 5], [2, 4, 6]])


class TestVerify:
    def test_valid(self):
        assert verify_rainbow(C6, HALVES, assignment_from_labels(C6, HALVES, [(1, 1), (4, 2)]), 2)

    def test_adjacent_pair(self):
        assert not verify_rainbow(C6, HALVES, assignment_from_labels(C6, HALVES, [(1, 1), (2, 2)]), 2)

    def test_empty(self):
        assert verify_rainbow(C6, HALVES, RainbowAssignment(C6, HALVES, ()), 0)

    def test_wrong_size(self):
        assert not verify_rainbow(C6, HALVES, assignment_from_labels(C6, HALVES, [(1, 1)]), 2)

    def test_repeated_color(self):
        f = Collection.from_lists([[1, 3, 5], [1, 3, 5]])
        assert not verify_rainbow(C6, f, assignment_from_labels(C6, f, [(1, 1), (3, 1)]), 2)

    def test_vertex_outside_its_set(self):
        assert not verify_rainbow(C6, HALVES, assignment_from_labels(C6, HALVES, [(2, 1)]), 1)

    @pytest.mark.parametrize("pairs", [[(7, 1)], [(1, 3)], [(0, 1)]])
    def test_dangling(self, pairs):
        with pytest.raises(InvalidCertificateError):
            verify_rainbow(C6, HALVES, assignment_from_labels(C6, HALVES, pairs), 1)

    def test_other_graph(self):
        r = assignment_from_labels(build_cycle(7), HALVES, [(1, 1)])
        with pytest.raises(InvalidCertificateError):
            verify_rainbow(C6, HALVES, r, 1)


class TestFind:
    def test_hexagon_two(self):
        r = find_rainbow(C6, HALVES, 2)
        assert r.pairs == ((1, 1), (4, 2))

    def test_hexagon_three_impossible(self):
        assert find_rainbow(C6, HALVES, 3) is None

    def test_zero(self):
        assert find_rainbow(C6, HALVES, 0).pairs == ()
        assert find_rainbow(C6, Collection(), 0).pairs == ()

    def test_more_than_colors(self):
        assert find_rainbow(C6, HALVES, 3) is None
        assert not has_rainbow(C6, Collection(), 1)

    def test_path_example(self):
        g = build_path(5)
        f = Collection.from_lists([[2, 4], [1, 3, 5]])
        assert find_rainbow(g, f, 2).pairs == ((1, 2), (4, 1))


@given(graphs(max_vertices=12), st.data())
def test_find_rainbow_is_lexicographically_least(g, data):
    f = data.draw(collections(g, max_sets=5))
    m = data.draw(st.integers(0, 4))
    got = find_rainbow(g, f, m)
    every = brute_rainbow(g, [set(s.labels()) for s in f], m)
    if not every:
        assert got is None
        return
    best = min(every, key=lambda ps: (tuple(v for v, _ in ps), tuple(c for _, c in ps)))
    assert got is not None and got.pairs == best
    assert verify_rainbow(g, f, got, m)


@given(graphs(max_vertices=10), st.data())
def test_layers_agree_with_oracle(g, data):
    f = data.draw(collections(g, max_sets=4))
    layers = rainbow_layers(g, f, 3)
    sets = [set(s.labels()) for s in f]
    for j in range(4):
        expect = {sum(1 << (v - 1) for v, _ in ps) for ps in brute_rainbow(g, sets, j)}
        assert layers[j] == expect


def test_match_colors_respects_seed():
    lists = [[0, 1], [0], [1]]
    got = match_colors([0, 1], lists, start={0: 0})
    assert got == {1: 0, 0: 1}
    assert match_colors([1, 2, 0], lists) is None
