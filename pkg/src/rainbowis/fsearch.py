"""Exact computation of f_G(n, m) by level-wise search over bad collections.

``f_G(n, m)`` is the least ``k`` such that every collection of ``k`` independent
``n``-sets of ``G`` (repetition allowed) has a rainbow independent ``m``-set. A
collection without one is *bad*. Badness is inherited by sub-multisets, so

    f_G(n, m) = 1 + (largest size of a bad collection).

The search keeps, level by level, the canonical keys of all bad collections of
that size. A bad collection ``F`` stays bad after adding ``I`` exactly when
``I`` lies inside ``T(F)``, the intersection of the closed neighbourhoods of
every rainbow independent ``(m-1)``-set of ``F`` (all of ``V`` if there is
none), so only bad extensions are ever generated.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import EmptyFamilyError, InvalidParameterError, PreconditionError
from .graph import Degree2Graph, VertexSet, build_cycle, cycle_shift, iter_bits, parse_descriptor
from .indsets import Collection, enumerate_ind_sets, list_number, list_of
from .rainbow import find_rainbow
from .symmetry import CanonicalKey, automorphisms, canonical_key, set_permutations


@dataclass
class FResult:
    graph: str
    n: int
    m: int
    f_value: int
    witness: Collection | None
    stats: dict[str, Any] = field(default_factory=dict)
    inconclusive: bool = False
    """True when the cap or the time budget stopped the search; ``f_value`` is then a lower bound."""

    def to_record(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "f": self.f_value,
            "inconclusive": self.inconclusive,
            "witness": None if self.witness is None else self.witness.to_lists(),
            "stats": self.stats,
        }

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> FResult:
        w = rec.get("witness")
        return cls(
            rec["graph"],
            rec["n"],
            rec["m"],
            rec["f"],
            None if w is None else Collection.from_lists(w),
            dict(rec.get("stats", {})),
            bool(rec.get("inconclusive", False)),
        )


class SearchContext:
    """Everything the extension step needs, rebuilt cheaply in worker processes."""

    def __init__(self, descriptor: str, n: int, m: int, symmetry: bool = True) -> None:
        self.g = parse_descriptor(descriptor)
        self.n, self.m = n, m
        self.symmetry = symmetry
        self.sets = [s.bits for s in enumerate_ind_sets(self.g, n)]
        self.members = [list(iter_bits(s)) for s in self.sets]
        autos = automorphisms(self.g) if symmetry else automorphisms(self.g, limit=1)
        self.perms = set_permutations(self.sets, autos)[1:]  # identity is implicit
        self.full = (1 << self.g.vertex_count) - 1

    def threshold(self, key: Sequence[int]) -> int:
        """``T(F)``: vertices every bad extension of ``F`` must stay inside."""
        target = self.m - 1
        if len(key) < target:
            return self.full
        closed = self.g._closed
        # rainbow independent j-sets as {R: closed neighbourhood of R}
        layers: list[dict[int, int]] = [{0: 0}] + [{} for _ in range(target)]
        for idx in key:
            members = self.members[idx]
            for j in range(target, 0, -1):
                dst = layers[j]
                for R, NR in layers[j - 1].items():
                    for i in members:
                        if not NR >> i & 1:
                            R2 = R | 1 << i
                            if R2 not in dst:
                                dst[R2] = NR | closed[i]
        top = layers[target]
        if not top:
            return self.full
        T = self.full
        for NR in top.values():
            T &= NR
            if not T:
                break
        return T

    def bad_extensions(self, key: Sequence[int]) -> list[int]:
        T = self.threshold(key)
        if T == self.full:
            return list(range(len(self.sets)))
        if T.bit_count() < self.n:
            return []
        outside = ~T
        return [k for k, s in enumerate(self.sets) if not s & outside]

    def extend(self, keys: Iterable[CanonicalKey]) -> tuple[set[CanonicalKey], int]:
        out: set[CanonicalKey] = set()
        tried = 0
        for key in keys:
            for idx in self.bad_extensions(key):
                tried += 1
                out.add(canonical_key(key + (idx,), self.perms))
        return out, tried

    def collection(self, key: Sequence[int]) -> Collection:
        return Collection(tuple(VertexSet(self.sets[k]) for k in key))


_WORKER: SearchContext | None = None


def _init_worker(descriptor: str, n: int, m: int, symmetry: bool) -> None:
    global _WORKER
    _WORKER = SearchContext(descriptor, n, m, symmetry)


def _extend_chunk(keys: list[CanonicalKey]) -> tuple[set[CanonicalKey], int]:
    assert _WORKER is not None
    return _WORKER.extend(keys)


def _chunks(items: list, parts: int) -> list[list]:
    size = max(1, -(-len(items) // (parts * 4)))
    return [items[i : i + size] for i in range(0, len(items), size)]


class Deadline(Exception):
    pass


def search_levels(
    ctx: SearchContext,
    upto: int,
    *,
    workers: int = 1,
    deadline: float | None = None,
) -> tuple[list[int], set[CanonicalKey], int]:
    """Run the level-wise search up to collections of size ``upto``.

    Returns the per-level class counts, the last nonempty frontier and the
    number of extension candidates tried. Raises :class:`Deadline` on timeout.
    """
    frontier: set[CanonicalKey] = {()} if ctx.m > 0 else set()
    counts = [len(frontier)]
    tried = 0
    pool = None
    if workers > 1:
        pool = ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(ctx.g.descriptor, ctx.n, ctx.m, ctx.symmetry),
        )
    try:
        while frontier and len(counts) - 1 < upto:
            ordered = sorted(frontier)
            nxt: set[CanonicalKey] = set()
            if pool is None:
                step = 256
                for i in range(0, len(ordered), step):
                    if deadline is not None and time.monotonic() > deadline:
                        raise Deadline
                    part, k = ctx.extend(ordered[i : i + step])
                    nxt |= part
                    tried += k
            else:
                for part, k in pool.map(_extend_chunk, _chunks(ordered, workers)):
                    nxt |= part
                    tried += k
                    if deadline is not None and time.monotonic() > deadline:
                        raise Deadline
            if not nxt:
                break
            frontier = nxt
            counts.append(len(frontier))
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return counts, frontier, tried


def f_value(
    g: Degree2Graph,
    n: int,
    m: int,
    cap: int | None = None,
    *,
    workers: int = 1,
    symmetry: bool = True,
    time_budget: float | None = None,
) -> FResult:
    """Compute ``f_G(n, m)`` exactly, with a maximum bad collection as witness.

    ``cap`` bounds the size of the collections searched (default ``3n``). If
    bad collections of size ``cap`` exist, or the time budget runs out, the
    result is flagged ``inconclusive`` and ``f_value`` is only a lower bound.
    """
    if n < 0 or m < 0 or m > n:
        raise InvalidParameterError(f"need 0 <= m <= n, got n={n}, m={m}")
    cap = 3 * n if cap is None else cap
    if cap < 1:
        raise InvalidParameterError(f"cap must be positive, got {cap}")
    t0 = time.monotonic()
    ctx = SearchContext(g.descriptor, n, m, symmetry)
    if not ctx.sets:
        raise EmptyFamilyError("I_n(G) nonempty", f"{g.descriptor} has no independent {n}-set")
    deadline = None if time_budget is None else t0 + time_budget
    inconclusive = False
    try:
        counts, frontier, tried = search_levels(ctx, cap, workers=workers, deadline=deadline)
        max_bad = len(counts) - 1 if frontier else -1
        if frontier and max_bad >= cap:
            inconclusive = True
    except Deadline:
        counts, frontier, tried = [], set(), 0
        max_bad, inconclusive = -1, True
    stats = {
        "classes_per_level": counts,
        "canonical_classes": sum(counts),
        "nodes": tried,
        "automorphisms": len(ctx.perms) + 1,
        "sets": len(ctx.sets),
        "workers": workers,
        "seconds": round(time.monotonic() - t0, 4),
    }
    if inconclusive and not counts:
        stats["timed_out"] = True
        return FResult(g.descriptor, n, m, m, None, stats, True)
    value = max_bad + 1
    witness = None
    if frontier and value > m:
        witness = ctx.collection(min(frontier))
    return FResult(g.descriptor, n, m, value, witness, stats, inconclusive)


def is_bad(g: Degree2Graph, f: Collection, m: int) -> bool:
    """True iff ``(f, g)`` has no rainbow independent ``m``-set."""
    f.validate(g)
    return find_rainbow(g, f, m) is None


def bad_collections(g: Degree2Graph, n: int, m: int, size: int, *, symmetry: bool = True) -> list[Collection]:
    """Canonical representatives of all bad collections of ``size`` independent ``n``-sets."""
    ctx = SearchContext(g.descriptor, n, m, symmetry)
    if not ctx.sets:
        return []
    counts, frontier, _ = search_levels(ctx, size)
    if len(counts) - 1 < size:
        return []
    return [ctx.collection(k) for k in sorted(frontier)]


# -- structure of bad n-collections on cycles --------------------------------------


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    status: str  # "pass", "fail" or "n/a"
    counterexample: int | None = None


@dataclass(frozen=True)
class BReport:
    t: int
    n: int
    checks: tuple[PropertyCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def status(self, name: str) -> str:
        return next(c.status for c in self.checks if c.name == name)


def check_B_properties(g: Degree2Graph, f: Collection, n: int) -> BReport:
    """List-number structure of a bad collection of ``n`` independent ``n``-sets on ``C_t``.

    B1: every vertex has positive list number.
    B2: a vertex whose list is the single set ``I`` has ``I`` in the lists of both ``i - 2`` and ``i + 2``.
    B3: for ``t >= 2n + 1``, no two consecutive vertices both have list number 1.
    """
    if len(g.components) != 1 or g.components[0].kind != "C":
        raise PreconditionError("G is a cycle", g.descriptor)
    t = g.vertex_count
    if t < 2 * n:
        raise PreconditionError("t >= 2n", f"t={t}, n={n}")
    if len(f) != n:
        raise PreconditionError("|F| = n", f"|F|={len(f)}, n={n}")
    f.validate(g)
    for c, s in enumerate(f.sets, start=1):
        if len(s) != n:
            raise PreconditionError("every set has size n", f"set {c} has size {len(s)}")
    if find_rainbow(g, f, n) is not None:
        raise PreconditionError("F is bad for m = n", "F has a rainbow independent n-set")

    counts = {v: list_number(f, v) for v in range(1, t + 1)}
    b1 = next((v for v in range(1, t + 1) if counts[v] == 0), None)
    b2 = None
    for v in range(1, t + 1):
        if counts[v] == 1:
            (c,) = list_of(f, v)
            if c not in list_of(f, cycle_shift(t, v, -2)) or c not in list_of(f, cycle_shift(t, v, 2)):
                b2 = v
                break
    checks = [
        PropertyCheck("B1", "pass" if b1 is None else "fail", b1),
        PropertyCheck("B2", "pass" if b2 is None else "fail", b2),
    ]
    if t >= 2 * n + 1:
        b3 = next(
            (v for v in range(1, t + 1) if counts[v] == 1 and counts[cycle_shift(t, v, 1)] == 1),
            None,
        )
        checks.append(PropertyCheck("B3", "pass" if b3 is None else "fail", b3))
    else:
        checks.append(PropertyCheck("B3", "n/a"))
    return BReport(t, n, tuple(checks))


@dataclass(frozen=True)
class BSweep:
    t: int
    n: int
    bad_count: int
    reports: tuple[BReport, ...]

    @property
    def vacuous(self) -> bool:
        return self.bad_count == 0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


def sweep_B_properties(t: int, n: int) -> BSweep:
    """Check B1-B3 on every bad collection of ``n`` independent ``n``-sets of ``C_t`` (up to symmetry)."""
    g = build_cycle(t)
    bads = bad_collections(g, n, n, n)
    return BSweep(t, n, len(bads), tuple(check_B_properties(g, f, n) for f in bads))
