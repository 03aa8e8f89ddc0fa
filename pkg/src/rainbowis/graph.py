"""Graphs of maximum degree two and vertex sets over them.

Vertices carry 1-based labels everywhere in the public API (``[t] = {1..t}``).
Internally a vertex set is an ``int`` bitmask in which label ``v`` occupies bit
``v - 1``; :func:`to_index` / :func:`to_label` are the only place that offset
lives.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import DescriptorParseError, InvalidGraphError, InvalidSetError

MAX_VERTICES = 128
"""Default cap on the vertex count of a graph (configurable per call)."""


def to_index(label: int) -> int:
    """Convert a 1-based vertex label to its 0-based bit index."""
    return label - 1


def to_label(index: int) -> int:
    return index + 1


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the 0-based indices of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, slots=True)
class VertexSet:
    """An immutable set of vertex labels backed by a bitmask."""

    bits: int = 0

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> VertexSet:
        bits = 0
        for v in labels:
            if v < 1:
                raise InvalidSetError(f"vertex label {v} is not positive")
            bits |= 1 << to_index(v)
        return cls(bits)

    def labels(self) -> list[int]:
        return [to_label(i) for i in iter_bits(self.bits)]

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, label: object) -> bool:
        return isinstance(label, int) and label >= 1 and bool(self.bits >> to_index(label) & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits)

    def issubset(self, other: VertexSet) -> bool:
        return self.bits & ~other.bits == 0

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.labels())

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self.labels()))}}})"


class Component(NamedTuple):
    kind: str  # "C" or "P"
    length: int

    def __str__(self) -> str:
        return f"{self.kind}{self.length}"


class Degree2Graph:
    """A disjoint union of paths and cycles.

    Vertices are numbered consecutively component by component; inside a cycle
    the numbering follows the clockwise order, so label ``o + i`` is adjacent to
    ``o + i +- 1`` (wrapping inside the cycle).
    """

    __slots__ = (
        "components",
        "vertex_count",
        "offsets",
        "_edge_lo",
        "_wraps",
        "_closed",
        "_full",
    )

    def __init__(self, components: Iterable[Component | tuple[str, int]], *, cap: int = MAX_VERTICES) -> None:
        comps = tuple(Component(*c) for c in components)
        if not comps:
            raise InvalidGraphError("a graph needs at least one component")
        offsets = []
        total = 0
        edge_lo = 0
        wraps = []
        for c in comps:
            if c.kind == "C":
                if c.length < 3:
                    raise InvalidGraphError(f"cycle length must be >= 3, got {c.length}")
            elif c.kind == "P":
                if c.length < 1:
                    raise InvalidGraphError(f"path length must be >= 1, got {c.length}")
            else:
                raise InvalidGraphError(f"unknown component kind {c.kind!r}")
            offsets.append(total)
            # bit i set <=> {i, i+1} is an edge
            edge_lo |= ((1 << (c.length - 1)) - 1) << total
            if c.kind == "C":
                wraps.append((total, total + c.length - 1))
            total += c.length
        if total > cap:
            raise InvalidGraphError(f"graph has {total} vertices, above the cap of {cap}")
        self.components = comps
        self.vertex_count = total
        self.offsets = tuple(offsets)
        self._edge_lo = edge_lo
        self._wraps = tuple(wraps)
        self._full = (1 << total) - 1
        self._closed = tuple(self._closed_bits(1 << i) for i in range(total))

    # -- internal bitmask kernels -------------------------------------------------

    def _independent_bits(self, bits: int) -> bool:
        if bits & (bits >> 1) & self._edge_lo:
            return False
        for a, b in self._wraps:
            if bits >> a & 1 and bits >> b & 1:
                return False
        return True

    def _closed_bits(self, bits: int) -> int:
        out = bits | ((bits & self._edge_lo) << 1) | ((bits >> 1) & self._edge_lo)
        for a, b in self._wraps:
            if bits >> a & 1:
                out |= 1 << b
            if bits >> b & 1:
                out |= 1 << a
        return out

    # -- public queries -----------------------------------------------------------

    @property
    def descriptor(self) -> str:
        return "+".join(str(c) for c in self.components)

    @property
    def even_cycle_count(self) -> int:
        return sum(1 for c in self.components if c.kind == "C" and c.length % 2 == 0)

    @property
    def is_two_regular(self) -> bool:
        return all(c.kind == "C" for c in self.components)

    def vertices(self) -> VertexSet:
        return VertexSet(self._full)

    def check_set(self, s: VertexSet) -> None:
        if s.bits >> self.vertex_count:
            bad = [v for v in s.labels() if v > self.vertex_count]
            raise InvalidSetError(f"vertices {bad} out of range for {self.descriptor}")

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.vertex_count:
            raise InvalidSetError(f"vertex {v} out of range for {self.descriptor}")

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        i = to_index(v)
        return [to_label(j) for j in iter_bits(self._closed[i] & ~(1 << i))]

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return u != v and bool(self._closed[to_index(u)] >> to_index(v) & 1)

    def component_vertices(self, k: int) -> VertexSet:
        o, c = self.offsets[k], self.components[k]
        return VertexSet(((1 << c.length) - 1) << o)

    def independence_number(self) -> int:
        return sum(c.length // 2 if c.kind == "C" else (c.length + 1) // 2 for c in self.components)

    def edges(self) -> list[tuple[int, int]]:
        out = [(to_label(i), to_label(i + 1)) for i in iter_bits(self._edge_lo)]
        out.extend((to_label(a), to_label(b)) for a, b in self._wraps)
        return sorted(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Degree2Graph) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"Degree2Graph({self.descriptor!r})"

    def __str__(self) -> str:
        return self.descriptor


def build_cycle(t: int, *, cap: int = MAX_VERTICES) -> Degree2Graph:
    if t < 3:
        raise InvalidGraphError(f"cycle length must be >= 3, got {t}")
    return Degree2Graph([("C", t)], cap=cap)


def build_path(t: int, *, cap: int = MAX_VERTICES) -> Degree2Graph:
    if t < 1:
        raise InvalidGraphError(f"path length must be >= 1, got {t}")
    return Degree2Graph([("P", t)], cap=cap)


def disjoint_union(graphs: Iterable[Degree2Graph], *, cap: int = MAX_VERTICES) -> Degree2Graph:
    comps = [c for g in graphs for c in g.components]
    if not comps:
        raise InvalidGraphError("disjoint union of an empty list")
    return Degree2Graph(comps, cap=cap)


_COMPONENT = re.compile(r"([CP])(\d+)")


def parse_descriptor(text: str, *, cap: int = MAX_VERTICES) -> Degree2Graph:
    """Parse ``component ('+' component)*`` where component is ``C<int>`` or ``P<int>``.

    >>> parse_descriptor("P9+C5").vertex_count
    14
    """
    comps = []
    pos = 0
    while True:
        m = _COMPONENT.match(text, pos)
        if m is None:
            raise DescriptorParseError("expected 'C<int>' or 'P<int>'", text, pos)
        length = int(m.group(2))
        if (m.group(1) == "C" and length < 3) or length < 1:
            raise DescriptorParseError(f"invalid length {length} for {m.group(1)}", text, m.start(2))
        comps.append(Component(m.group(1), length))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise DescriptorParseError("expected '+'", text, pos)
        pos += 1
    return Degree2Graph(comps, cap=cap)


def is_independent(g: Degree2Graph, s: VertexSet) -> bool:
    g.check_set(s)
    return g._independent_bits(s.bits)


def closed_neighborhood(g: Degree2Graph, s: VertexSet) -> VertexSet:
    g.check_set(s)
    return VertexSet(g._closed_bits(s.bits))


def cycle_shift(t: int, v: int, d: int) -> int:
    """Add ``d`` to label ``v`` in the residues mod ``t``, labels kept in ``1..t``."""
    return (v - 1 + d) % t + 1


def cycle_diff(t: int, u: int, v: int) -> int:
    """Clockwise distance from ``v`` to ``u``, i.e. ``u - v`` reduced into ``0..t-1``."""
    return (u - v) % t
