"""Rainbow independent sets: the assignment type, its checker and the exact search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import InvalidCertificateError
from .graph import Degree2Graph, VertexSet, iter_bits, to_label
from .indsets import Collection


@dataclass(frozen=True)
class RainbowAssignment:
    """Chosen vertices with the color (1-based index into ``collection``) bound to each.

    ``pairs`` is sorted by vertex. ``log`` carries optional solver trace records
    and takes no part in equality.
    """

    graph: Degree2Graph
    collection: Collection
    pairs: tuple[tuple[int, int], ...]
    log: tuple[dict[str, Any], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_labels(v for v, _ in self.pairs)

    @property
    def colors(self) -> list[int]:
        return [c for _, c in self.pairs]

    def color_of(self, v: int) -> int:
        for u, c in self.pairs:
            if u == v:
                return c
        raise KeyError(v)


def make_assignment(
    g: Degree2Graph, f: Collection, mapping: dict[int, int], log: Sequence[dict[str, Any]] = ()
) -> RainbowAssignment:
    """Build an assignment from a ``{vertex label: color}`` dict."""
    return RainbowAssignment(g, f, tuple(sorted(mapping.items())), tuple(log))


def verify_rainbow(g: Degree2Graph, f: Collection, r: RainbowAssignment, m: int) -> bool:
    """True iff ``r`` is a rainbow independent ``m``-set of ``(f, g)``."""
    if r.graph != g or r.collection != f:
        raise InvalidCertificateError("assignment refers to a different graph or collection")
    for v, c in r.pairs:
        if not 1 <= v <= g.vertex_count:
            raise InvalidCertificateError(f"vertex {v} does not exist in {g.descriptor}")
        if not 1 <= c <= len(f):
            raise InvalidCertificateError(f"color {c} does not exist (collection has {len(f)} sets)")
    if len(r.pairs) != m:
        return False
    vs = [v for v, _ in r.pairs]
    if any(a >= b for a, b in zip(vs, vs[1:])):
        return False
    cs = r.colors
    if len(set(cs)) != len(cs):
        return False
    if not all(v in f.color(c) for v, c in r.pairs):
        return False
    return g._independent_bits(r.vertices.bits)


# -- bipartite matching between chosen vertices and colors -------------------------


def color_lists(g: Degree2Graph, f: Collection) -> list[list[int]]:
    """For each vertex index, the 0-based colors of the sets containing it."""
    lists: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for c, s in enumerate(f.sets):
        for i in iter_bits(s.bits):
            lists[i].append(c)
    return lists


def match_colors(
    vertices: Sequence[int],
    lists: Sequence[Sequence[int]],
    forbidden: frozenset[int] | set[int] = frozenset(),
    start: dict[int, int] | None = None,
) -> dict[int, int] | None:
    """Injective map vertex index -> 0-based color, or None if none exists.

    ``start`` seeds the matching (``{color: vertex}``); entries not valid for
    ``vertices`` are dropped. Augmenting paths recolor along alternating chains.
    """
    owner: dict[int, int] = {}
    if start:
        vset = set(vertices)
        used: set[int] = set()
        for c, v in start.items():
            if v in vset and v not in used and c not in forbidden and c in lists[v]:
                owner[c] = v
                used.add(v)
    else:
        used = set()

    def augment(v: int, seen: set[int]) -> bool:
        for c in lists[v]:
            if c in seen or c in forbidden:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = v
                return True
        return False

    for v in vertices:
        if v not in used and not augment(v, set()):
            return None
    return {v: c for c, v in owner.items()}


def find_rainbow(g: Degree2Graph, f: Collection, m: int) -> RainbowAssignment | None:
    """Exhaustive search for a rainbow independent ``m``-set.

    Returns the lexicographically least solution, ordering first by the sorted
    vertex list and then by the color list; ``None`` when no solution exists.
    """
    if m <= 0:
        return RainbowAssignment(g, f, ())
    if len(f) < m:
        return None
    lists = color_lists(g, f)
    cand = [i for i in range(g.vertex_count) if lists[i]]
    closed = g._closed
    chosen: list[int] = []

    def dfs(p0: int, blocked: int) -> bool:
        need = m - len(chosen)
        if need == 0:
            return True
        for p in range(p0, len(cand) - need + 1):
            i = cand[p]
            if blocked >> i & 1:
                continue
            chosen.append(i)
            if match_colors(chosen, lists) is not None and dfs(p + 1, blocked | closed[i]):
                return True
            chosen.pop()
        return False

    if not dfs(0, 0):
        return None
    # least color list for the fixed vertex list
    taken: set[int] = set()
    mapping: dict[int, int] = {}
    for pos, i in enumerate(chosen):
        rest = chosen[pos + 1 :]
        for c in lists[i]:
            if c in taken:
                continue
            if match_colors(rest, lists, forbidden=taken | {c}) is not None:
                taken.add(c)
                mapping[to_label(i)] = c + 1
                break
        else:  # pragma: no cover - the vertex list was proven matchable
            raise AssertionError("color assignment lost feasibility")
    return make_assignment(g, f, mapping)


def has_rainbow(g: Degree2Graph, f: Collection, m: int) -> bool:
    return find_rainbow(g, f, m) is not None


def rainbow_layers(g: Degree2Graph, f: Collection, m: int) -> list[set[int]]:
    """Vertex bitmasks of all rainbow independent j-sets of ``f``, for j = 0..m.

    Colors are processed one at a time, so each set in a layer uses distinct colors.
    """
    layers: list[set[int]] = [{0}] + [set() for _ in range(m)]
    for s in f.sets:
        members = list(iter_bits(s.bits))
        for j in range(min(m, len(layers) - 1), 0, -1):
            src = layers[j - 1]
            if not src:
                continue
            dst = layers[j]
            for R in src:
                blocked = g._closed_bits(R)
                for i in members:
                    if not blocked >> i & 1:
                        dst.add(R | (1 << i))
    return layers


def assignment_from_labels(
    g: Degree2Graph, f: Collection, pairs: Sequence[tuple[int, int]]
) -> RainbowAssignment:
    """Build an assignment from external ``(vertex, color)`` pairs (both 1-based)."""
    return RainbowAssignment(g, f, tuple(sorted((int(v), int(c)) for v, c in pairs)))
