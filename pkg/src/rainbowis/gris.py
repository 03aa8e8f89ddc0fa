"""Greedy rainbow independent set (GRIS) and its path and cycle consequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import ContractViolation, InvalidOrderingError, PreconditionError
from .graph import Degree2Graph, VertexSet, build_cycle, build_path, to_index
from .indsets import Collection
from .rainbow import RainbowAssignment, make_assignment, verify_rainbow

ADDED = "added"
NO_UNUSED_COLOR = "no-unused-color"
NOT_INDEPENDENT = "not-independent"


@dataclass(frozen=True)
class TraceStep:
    vertex: int
    decision: str
    color: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"vertex": self.vertex, "decision": self.decision, "color": self.color}


@dataclass(frozen=True)
class GreedyResult:
    rainbow: RainbowAssignment
    greedy_colors: frozenset[int]
    trace: tuple[TraceStep, ...]
    ordering: tuple[int, ...] = ()
    # set by rainbow_path: "full" when |R| >= n, "tight" when |R| = n-1
    dichotomy: str | None = field(default=None)

    @property
    def vertices(self) -> VertexSet:
        return self.rainbow.vertices

    def unused_colors(self) -> list[int]:
        return [c for c in range(1, len(self.rainbow.collection) + 1) if c not in self.greedy_colors]


def gris(g: Degree2Graph, ordering: Sequence[int], f: Collection) -> GreedyResult:
    """Scan ``ordering``; take a vertex when it has an unused color and keeps ``R`` independent.

    The color bound to a taken vertex is the unused color of least index.
    """
    if sorted(ordering) != list(range(1, g.vertex_count + 1)):
        raise InvalidOrderingError(f"ordering is not a permutation of 1..{g.vertex_count}")
    f.validate(g)
    used: set[int] = set()
    R = 0
    chosen: dict[int, int] = {}
    trace = []
    for v in ordering:
        i = to_index(v)
        free = [c for c, s in enumerate(f.sets, start=1) if s.bits >> i & 1 and c not in used]
        if not free:
            trace.append(TraceStep(v, NO_UNUSED_COLOR))
        elif not g._independent_bits(R | 1 << i):
            trace.append(TraceStep(v, NOT_INDEPENDENT))
        else:
            c = free[0]
            R |= 1 << i
            used.add(c)
            chosen[v] = c
            trace.append(TraceStep(v, ADDED, c))
    return GreedyResult(make_assignment(g, f, chosen), frozenset(used), tuple(trace), tuple(ordering))


def _dichotomy(result: GreedyResult, n: int) -> str | None:
    R = result.rainbow.vertices
    if len(R) >= n:
        return "full"
    if len(R) != n - 1:
        return None
    f = result.rainbow.collection
    for c in result.unused_colors():
        I = f.color(c)
        if len(I) != n - 1:
            return None
        if any(len(I & VertexSet.from_labels((a, a + 1))) != 1 for a in R):
            return None
    return "tight"


def rainbow_path(t: int, f: Collection, n: int) -> GreedyResult:
    """GRIS on ``P_t`` in natural order, with the size dichotomy of the output checked.

    Requires ``t >= 2n - 1``, ``|f| >= n - 1`` and every set of size at least
    ``n - 1``. The result has ``|R| >= n``, or ``|R| = n - 1`` and every unused
    set ``I`` has ``n - 1`` elements with exactly one of ``a, a + 1`` for each
    ``a`` in ``R``.
    """
    if t < 2 * n - 1:
        raise PreconditionError("t >= 2n-1", f"t={t}, n={n}")
    if len(f) < n - 1:
        raise PreconditionError("|F| >= n-1", f"|F|={len(f)}, n={n}")
    for c, s in enumerate(f.sets, start=1):
        if len(s) < n - 1:
            raise PreconditionError("every set has size >= n-1", f"set {c} has size {len(s)}")
    g = build_path(t, cap=max(t, 1))
    result = gris(g, range(1, t + 1), f)
    verdict = _dichotomy(result, n)
    if verdict is None:
        raise ContractViolation(f"path greedy dichotomy failed on {f!r} with n={n}")
    return GreedyResult(result.rainbow, result.greedy_colors, result.trace, result.ordering, verdict)


def cycle_deletion_greedy(t: int, f: Collection, n: int) -> GreedyResult:
    """GRIS on ``C_t - {t}`` (a path on ``1..t-1``) with ``f`` restricted accordingly."""
    path_part = VertexSet.from_labels(range(1, t))
    return rainbow_path(t - 1, f.restrict(path_part), n)


def rainbow_cycle_n_minus_1(t: int, f: Collection, n: int) -> RainbowAssignment:
    """A rainbow independent ``(n-1)``-set of ``(f, C_t)`` for ``t >= 2n`` and ``|f| >= n-1``.

    Deletes vertex ``t``, runs the path greedy on what is left and keeps the first
    ``n - 1`` chosen vertices.
    """
    if t < 2 * n:
        raise PreconditionError("t >= 2n", f"t={t}, n={n}")
    if len(f) < n - 1:
        raise PreconditionError("|F| >= n-1", f"|F|={len(f)}, n={n}")
    g = build_cycle(t, cap=max(t, 3))
    f.validate(g)
    for c, s in enumerate(f.sets, start=1):
        if len(s) != n:
            raise PreconditionError("every set has size n", f"set {c} has size {len(s)}")
    result = cycle_deletion_greedy(t, f, n)
    pairs = result.rainbow.pairs[: max(n - 1, 0)]
    r = RainbowAssignment(g, f, pairs)
    if not verify_rainbow(g, f, r, max(n - 1, 0)):
        raise ContractViolation(f"cycle greedy did not produce an (n-1)-set for {f!r}")
    return r
