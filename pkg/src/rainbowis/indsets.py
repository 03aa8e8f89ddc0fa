"""Independent sets of prescribed size, k-jump sets of cycles, and collections.

A :class:`Collection` is an ordered multiset of vertex sets; the 1-based
position of a set is its color.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidParameterError, InvalidSetError
from .graph import Degree2Graph, VertexSet, build_cycle, cycle_shift, iter_bits, to_label


@dataclass(frozen=True)
class Collection:
    sets: tuple[VertexSet, ...] = ()

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> Collection:
        return cls(tuple(VertexSet.from_labels(s) for s in lists))

    def to_lists(self) -> list[list[int]]:
        return [s.labels() for s in self.sets]

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    @classmethod
    def from_json(cls, text: str) -> Collection:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSetError(f"collection is not valid JSON: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
            raise InvalidSetError("a collection is a JSON list of vertex lists")
        for s in data:
            if not all(isinstance(v, int) for v in s) or len(set(s)) != len(s):
                raise InvalidSetError(f"invalid vertex list {s!r}")
        return cls.from_lists(data)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def color(self, c: int) -> VertexSet:
        """The set carrying color ``c`` (1-based)."""
        if not 1 <= c <= len(self.sets):
            raise IndexError(f"color {c} out of range 1..{len(self.sets)}")
        return self.sets[c - 1]

    def restrict(self, s: VertexSet) -> Collection:
        return Collection(tuple(I & s for I in self.sets))

    def select(self, colors: Iterable[int]) -> Collection:
        return Collection(tuple(self.color(c) for c in colors))

    def validate(self, g: Degree2Graph) -> None:
        """Raise :class:`InvalidSetError` naming the first set that is not independent in ``g``."""
        for c, s in enumerate(self.sets, start=1):
            if s.bits >> g.vertex_count:
                raise InvalidSetError(f"set {c} {s.labels()} has vertices outside {g.descriptor}")
            if not g._independent_bits(s.bits):
                raise InvalidSetError(f"set {c} {s.labels()} is not independent in {g.descriptor}")

    def multiset_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(s.sort_key() for s in self.sets))

    def __repr__(self) -> str:
        return f"Collection({self.to_lists()})"


@dataclass(frozen=True)
class JumpSet:
    """The arithmetic progression ``start, start+jump, ...`` (``size`` terms) on ``C_t``."""

    t: int
    start: int
    jump: int
    size: int

    @property
    def members(self) -> list[int]:
        """Members in progression order (the ordered set)."""
        return [cycle_shift(self.t, self.start, i * self.jump) for i in range(self.size)]

    @property
    def end(self) -> int:
        return cycle_shift(self.t, self.start, (self.size - 1) * self.jump)

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.from_labels(self.members)


# -- counting and enumeration -----------------------------------------------------


@lru_cache(maxsize=None)
def _path_count(length: int, k: int) -> int:
    if k == 0:
        return 1
    if length < 2 * k - 1:
        return 0
    return comb(length - k + 1, k)


def _component_count(kind: str, length: int, k: int) -> int:
    if kind == "P":
        return _path_count(length, k)
    if k == 0:
        return 1
    # cycles: vertex 0 unused (path of length-1) or used (path of length-3)
    return _path_count(length - 1, k) + _path_count(length - 3, k - 1)


def count_ind_sets(g: Degree2Graph, n: int) -> int:
    """Number of independent ``n``-sets of ``g``, by convolution over components."""
    table = [1] + [0] * n
    for c in g.components:
        new = [0] * (n + 1)
        for have, ways in enumerate(table):
            if ways:
                for k in range(n + 1 - have):
                    cnt = _component_count(c.kind, c.length, k)
                    if cnt == 0:
                        break
                    new[have + k] += ways * cnt
        table = new
    return table[n] if n >= 0 else 0


def _path_sets(lo: int, length: int, k: int) -> Iterator[int]:
    """Bitmasks of independent k-sets of the path on bits lo..lo+length-1."""
    if k == 0:
        yield 0
        return
    for first in range(lo, lo + length - 2 * (k - 1)):
        head = 1 << first
        for rest in _path_sets(first + 2, lo + length - first - 2, k - 1):
            yield head | rest


def _component_sets(kind: str, offset: int, length: int, k: int) -> list[int]:
    if kind == "P":
        return list(_path_sets(offset, length, k))
    if k == 0:
        return [0]
    with_first = [(1 << offset) | s for s in _path_sets(offset + 2, length - 3, k - 1)] if length >= 3 else []
    return with_first + list(_path_sets(offset + 1, length - 1, k))


def enumerate_ind_sets(g: Degree2Graph, n: int) -> list[VertexSet]:
    """All independent ``n``-sets of ``g``, ordered lexicographically by sorted labels."""
    if n < 0:
        return []
    comps = g.components
    # max remaining size from component i onward, for pruning size splits
    caps = [0] * (len(comps) + 1)
    for i in range(len(comps) - 1, -1, -1):
        c = comps[i]
        caps[i] = caps[i + 1] + (c.length // 2 if c.kind == "C" else (c.length + 1) // 2)
    masks: list[int] = []

    def splits(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == len(comps):
            if left == 0:
                yield ()
            return
        hi = min(left, caps[i] - caps[i + 1])
        for k in range(max(0, left - caps[i + 1]), hi + 1):
            for rest in splits(i + 1, left - k):
                yield (k, *rest)

    for sizes in splits(0, n):
        parts = [
            _component_sets(c.kind, g.offsets[i], c.length, k) for i, (c, k) in enumerate(zip(comps, sizes))
        ]
        for combo in product(*parts):
            bits = 0
            for b in combo:
                bits |= b
            masks.append(bits)
    masks.sort(key=lambda b: [to_label(i) for i in iter_bits(b)])
    return [VertexSet(b) for b in masks]


def enumerate_jump_sets(t: int, k: int, n: int) -> list[JumpSet]:
    """Every start in ``1..t`` whose ``k``-step progression of length ``n`` is an independent n-set of ``C_t``."""
    if t < 3 or not 2 <= k <= t - 2 or n < 1:
        raise InvalidParameterError(f"need t >= 3, 2 <= k <= t-2, n >= 1; got t={t}, k={k}, n={n}")
    g = build_cycle(t, cap=max(t, 3))
    out = []
    for start in range(1, t + 1):
        js = JumpSet(t, start, k, n)
        members = js.members
        if len(set(members)) == n and g._independent_bits(js.vertex_set.bits):
            out.append(js)
    return out


def jump_collection(sets: Sequence[JumpSet]) -> Collection:
    return Collection(tuple(js.vertex_set for js in sets))


def list_of(f: Collection, v: int) -> list[int]:
    """Colors (1-based, ascending) of the sets of ``f`` that contain vertex ``v``."""
    return [c for c, s in enumerate(f.sets, start=1) if v in s]


def list_number(f: Collection, v: int) -> int:
    return len(list_of(f, v))
