"""Hypothesis strategies for graphs and collections."""

from __future__ import annotations

from hypothesis import strategies as st

from rainbowis import Collection, Degree2Graph, VertexSet, enumerate_ind_sets


@st.composite
def graphs(draw, max_vertices: int = 12, max_components: int = 3):
    comps = []
    total = 0
    for _ in range(draw(st.integers(1, max_components))):
        room = max_vertices - total
        if room < 1:
            break
        kind = draw(st.sampled_from("CP")) if room >= 3 else "P"
        lo = 3 if kind == "C" else 1
        length = draw(st.integers(lo, room))
        comps.append((kind, length))
        total += length
    return Degree2Graph(comps)


@st.composite
def independent_sets(draw, g, min_size: int = 0, max_size: int | None = None):
    """A random independent set built by scanning a random permutation."""
    order = draw(st.permutations(range(1, g.vertex_count + 1)))
    cap = len(order) if max_size is None else max_size
    s = VertexSet(0)
    for v in order:
        if len(s) >= cap:
            break
        cand = VertexSet.from_labels(s.labels() + [v])
        if g._independent_bits(cand.bits) and draw(st.booleans()):
            s = cand
    return s


@st.composite
def collections(draw, g, max_sets: int = 6):
    k = draw(st.integers(0, max_sets))
    return Collection(tuple(draw(independent_sets(g)) for _ in range(k)))


@st.composite
def uniform_collections(draw, g, n: int, size: int):
    family = enumerate_ind_sets(g, n)
    return Collection(tuple(draw(st.sampled_from(family)) for _ in range(size)))
