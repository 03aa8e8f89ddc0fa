"""Constructive rainbow solvers for 2-jump collections on cycles and for 2-regular graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Sequence

from .errors import ContractViolation, EmptyFamilyError, PreconditionError
from .graph import Degree2Graph, VertexSet, build_cycle, iter_bits, to_label
from .gris import cycle_deletion_greedy, gris, rainbow_cycle_n_minus_1
from .indsets import Collection, JumpSet, count_ind_sets, jump_collection
from .rainbow import RainbowAssignment, color_lists, find_rainbow, make_assignment, match_colors, verify_rainbow

# -- 2-jump collections on C_t -------------------------------------------------------


def gap_vector(vertices: Sequence[int], t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least circular gap vector of a set of residues mod ``t``, and the order realizing it.

    For the clockwise order ``a_1, ..., a_r`` the vector is
    ``(a_r - a_1, a_2 - a_1, a_3 - a_2, ..., a_r - a_(r-1))`` mod ``t``; the
    minimum is taken over the ``r`` choices of ``a_1``.
    """
    vs = sorted(vertices)
    r = len(vs)
    if r == 0:
        return (), ()
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for s in range(r):
        seq = vs[s:] + vs[:s]
        d = ((seq[-1] - seq[0]) % t,) + tuple((seq[k] - seq[k - 1]) % t for k in range(1, r))
        if best is None or d < best[0]:
            best = (d, tuple(seq))
    assert best is not None
    return best


@dataclass(frozen=True)
class TwoJumpState:
    """A rainbow independent set ``A`` during the exchange phase.

    ``order`` lists ``A`` clockwise from the element that minimizes the gap
    vector ``gaps``; ``colors`` is aligned with ``order``; ``unused`` holds the
    colors not bound to any vertex.
    """

    order: tuple[int, ...]
    colors: tuple[int, ...]
    gaps: tuple[int, ...]
    unused: tuple[int, ...]

    @classmethod
    def of(cls, assign: dict[int, int], t: int, k: int) -> TwoJumpState:
        gaps, order = gap_vector(list(assign), t)
        used = set(assign.values())
        return cls(
            tuple(to_label(i) for i in order),
            tuple(assign[i] + 1 for i in order),
            gaps,
            tuple(c + 1 for c in range(k) if c not in used),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": list(self.order),
            "colors": list(self.colors),
            "gaps": list(self.gaps),
            "unused": list(self.unused),
        }


class _Exchange:
    """Improvement moves on a rainbow independent set of a collection on ``C_t``."""

    def __init__(self, g: Degree2Graph, f: Collection) -> None:
        self.g = g
        self.t = g.vertex_count
        self.k = len(f)
        self.f = f
        self.lists = color_lists(g, f)
        self.closed = g._closed

    def _owner(self, assign: dict[int, int]) -> dict[int, int]:
        return {c: v for v, c in assign.items()}

    def grow(self, assign: dict[int, int]) -> tuple[dict[int, int], dict[str, Any]] | None:
        blocked = self.g._closed_bits(sum(1 << v for v in assign))
        seed = self._owner(assign)
        for v in range(self.t):
            if blocked >> v & 1 or not self.lists[v]:
                continue
            new = match_colors(list(assign) + [v], self.lists, start=seed)
            if new is not None:
                return new, {"move": "grow", "add": to_label(v)}
        return None

    def swap_one_for_two(self, assign: dict[int, int]) -> tuple[dict[int, int], dict[str, Any]] | None:
        seed = self._owner(assign)
        for a in sorted(assign):
            rest = [v for v in assign if v != a]
            blocked = self.g._closed_bits(sum(1 << v for v in rest))
            free = [v for v in range(self.t) if not blocked >> v & 1 and self.lists[v]]
            for b, c in combinations(free, 2):
                if self.closed[b] >> c & 1:
                    continue
                new = match_colors(rest + [b, c], self.lists, start=seed)
                if new is not None:
                    return new, {"move": "swap", "remove": to_label(a), "add": [to_label(b), to_label(c)]}
        return None

    def replace(self, assign: dict[int, int]) -> tuple[dict[int, int], dict[str, Any]] | None:
        """Swap one vertex for another when that makes the gap vector strictly smaller.

        Among all such swaps the one reaching the least gap vector wins.
        """
        current, _ = gap_vector(list(assign), self.t)
        seed = self._owner(assign)
        best = None
        for a in sorted(assign):
            rest = [v for v in assign if v != a]
            rest_bits = sum(1 << v for v in rest)
            blocked = self.g._closed_bits(rest_bits)
            for b in range(self.t):
                if b == a or blocked >> b & 1 or not self.lists[b]:
                    continue
                gaps, _ = gap_vector(rest + [b], self.t)
                if gaps >= current or (best is not None and gaps >= best[0]):
                    continue
                new = match_colors(rest + [b], self.lists, start=seed)
                if new is not None:
                    best = (gaps, new, {"move": "replace", "from": to_label(a), "to": to_label(b)})
        if best is None:
            return None
        return best[1], best[2]

    def uncovered(self, assign: dict[int, int]) -> tuple[dict[int, int], dict[str, Any]] | None:
        """If some vertex lies in no set, greedy on the path that starts right after it."""
        hole = next((v for v in range(self.t) if not self.lists[v]), None)
        if hole is None:
            return None
        order = [to_label((hole + j) % self.t) for j in range(1, self.t + 1)]
        res = gris(self.g, order, self.f)
        if len(res.rainbow) <= len(assign):
            return None
        return {v - 1: c - 1 for v, c in res.rainbow.pairs}, {"move": "uncovered", "vertex": to_label(hole)}


def solve_two_jump(t: int, n: int, f: Sequence[JumpSet]) -> RainbowAssignment:
    """A rainbow independent ``n``-set of ``n`` 2-jump ``n``-sets of ``C_t``, ``t >= 2n + 1``.

    Starts from the cycle greedy and improves with exchange moves: grow,
    one-for-two swap, single-vertex replacement with a strictly smaller gap
    vector, and a path greedy around a vertex that no set covers. If
    the moves stall below ``n``, the exact search finishes the job; the log
    then ends with a ``fallback`` record. In practice this happens only when
    ``t = 2n + 1``.
    """
    if t < 2 * n + 1:
        raise PreconditionError("t >= 2n+1", f"t={t}, n={n}")
    if len(f) != n:
        raise PreconditionError("|F| = n", f"|F|={len(f)}, n={n}")
    for c, js in enumerate(f, start=1):
        if js.t != t or js.jump != 2 or js.size != n:
            raise PreconditionError("every set is a 2-jump n-set of C_t", f"set {c} is {js}")
    g = build_cycle(t)
    coll = jump_collection(f)
    coll.validate(g)
    ex = _Exchange(g, coll)

    start = cycle_deletion_greedy(t, coll, n).rainbow
    assign = {v - 1: c - 1 for v, c in start.pairs}
    log: list[dict[str, Any]] = [{"move": "greedy", "state": TwoJumpState.of(assign, t, n).to_dict()}]
    while len(assign) < n:
        step = ex.grow(assign) or ex.swap_one_for_two(assign) or ex.replace(assign) or ex.uncovered(assign)
        if step is None:
            break
        assign, rec = step
        rec["state"] = TwoJumpState.of(assign, t, n).to_dict()
        log.append(rec)

    if len(assign) == n:
        r = make_assignment(g, coll, {to_label(v): c + 1 for v, c in assign.items()}, log)
    else:
        found = find_rainbow(g, coll, n)
        if found is None:
            raise ContractViolation(f"no rainbow independent {n}-set for 2-jump starts {[js.start for js in f]}")
        # on C_(2n+1) every independent n-set is 2-jump; that length is handled by exact search
        reason = "t = 2n+1" if t == 2 * n + 1 else "moves stalled"
        log.append({"move": "fallback", "reason": reason, "pairs": [list(p) for p in found.pairs]})
        r = RainbowAssignment(g, coll, found.pairs, tuple(log))
    if not verify_rainbow(g, coll, r, n):
        raise ContractViolation("2-jump solver produced an invalid assignment")
    return r


def used_fallback(r: RainbowAssignment) -> bool:
    return any(rec.get("move") == "fallback" for rec in r.log)


# -- 2-regular graphs on 2n-1 or 2n vertices --------------------------------------


def _local(mask: int, offset: int, length: int) -> int:
    return (mask >> offset) & ((1 << length) - 1)


def _solve_two_regular(
    g: Degree2Graph,
    comps: list[int],
    n: int,
    items: list[tuple[int, int]],
    log: list[dict[str, Any]],
) -> dict[int, int]:
    """Rainbow independent ``(n-1)``-set on the cycles ``comps`` of ``g``.

    ``items`` are ``(color, mask)`` pairs, ``n - 1`` of them, each meeting the
    listed cycles in an independent ``n``-set. Returns ``{vertex index: color}``.
    """
    spans = {k: (g.offsets[k], g.components[k].length) for k in comps}
    if len(comps) == 1:
        o, L = spans[comps[0]]
        local = Collection(tuple(VertexSet(_local(m, o, L)) for _, m in items))
        r = rainbow_cycle_n_minus_1(L, local, n)
        log.append({"step": "single-cycle", "cycle": L, "n": n})
        return {o + v - 1: items[c - 1][0] for v, c in r.pairs}

    odd = next((k for k in comps if spans[k][1] % 2), None)
    if odd is not None:
        o, L = spans[odd]
        half = L // 2
        head, tail = items[:half], items[half:]
        local = Collection(tuple(VertexSet(_local(m, o, L)) for _, m in head))
        if any(len(s) != half for s in local.sets):
            raise ContractViolation(f"odd cycle C{L} not met in exactly {half} vertices")
        found = find_rainbow(build_cycle(L), local, half)
        if found is None:
            raise ContractViolation(f"no rainbow independent {half}-set on C{L}")
        log.append({"step": "odd-cycle", "cycle": L, "colors": [head[c - 1][0] + 1 for _, c in found.pairs]})
        out = {o + v - 1: head[c - 1][0] for v, c in found.pairs}
        out.update(_solve_two_regular(g, [k for k in comps if k != odd], n - half, tail, log))
        return out

    # all cycles even: split off the shortest one
    first = min(comps, key=lambda k: (spans[k][1], k))
    rest = [k for k in comps if k != first]
    o1, L1 = spans[first]
    n1 = L1 // 2
    sub = _solve_two_regular(g, rest, n - n1, items[n1:], log)
    short = [k for k in rest if sum(1 for v in sub if spans[k][0] <= v < sum(spans[k])) == spans[k][1] // 2 - 1]
    if len(short) != 1:
        raise ContractViolation(f"expected exactly one cycle one short of half, found {len(short)}")
    second = short[0]
    o2, L2 = spans[second]
    n2 = L2 // 2
    on_second = {v: c for v, c in sub.items() if o2 <= v < o2 + L2}
    J = set(on_second.values())
    pool = [it for pos, it in enumerate(items) if pos < n1 or it[0] in J]
    if len(pool) < 2 * n1 - 1:
        raise ContractViolation(f"pigeonhole pool has {len(pool)} < {2 * n1 - 1} sets")
    # C_(2 n1) has two independent n1-sets: the two parity classes
    classes: dict[int, list[int]] = {}
    for color, mask in pool:
        classes.setdefault(_local(mask, o1, L1), []).append(color)
    parity, colors = max(classes.items(), key=lambda kv: (len(kv[1]), -min(iter_bits(kv[0]))))
    if len(colors) < n1:
        raise ContractViolation(f"no parity class of C{L1} repeated {n1} times")
    bound = colors[:n1]
    r1 = {o1 + i: c for i, c in zip(iter_bits(parity), bound)}
    remaining = [it for it in pool if it[0] not in set(bound)]
    local = Collection(tuple(VertexSet(_local(m, o2, L2)) for _, m in remaining))
    r2 = rainbow_cycle_n_minus_1(L2, local, n2)
    log.append(
        {
            "step": "even-cycles",
            "pigeonhole_cycle": L1,
            "parity_class": [to_label(o1 + i) for i in iter_bits(parity)],
            "bound_colors": [c + 1 for c in bound],
            "rebuilt_cycle": L2,
        }
    )
    out = {v: c for v, c in sub.items() if not o2 <= v < o2 + L2}
    out.update(r1)
    out.update({o2 + v - 1: remaining[c - 1][0] for v, c in r2.pairs})
    return out


def solve_two_regular(g: Degree2Graph, n: int, f: Collection) -> RainbowAssignment:
    """A rainbow independent ``(n-1)``-set for ``n - 1`` independent ``n``-sets of a 2-regular graph.

    Requires ``2n - 1 <= |V(g)| <= 2n`` and at least one independent ``n``-set.
    Recurses on the number of cycles: a single cycle uses the cycle greedy; an
    odd cycle ``C_(2m+1)`` takes the first ``m`` sets and an exact search; with
    only even cycles the shortest cycle is filled by pigeonhole on its two
    parity classes after recursing on the others.
    """
    if not g.is_two_regular:
        raise PreconditionError("G is 2-regular", g.descriptor)
    if not 2 * n - 1 <= g.vertex_count <= 2 * n:
        raise PreconditionError("2n-1 <= |V(G)| <= 2n", f"|V|={g.vertex_count}, n={n}")
    if count_ind_sets(g, n) == 0:
        raise EmptyFamilyError("I_n(G) nonempty", f"{g.descriptor} has no independent {n}-set")
    if len(f) != n - 1:
        raise PreconditionError("|F| = n-1", f"|F|={len(f)}, n={n}")
    f.validate(g)
    for c, s in enumerate(f.sets, start=1):
        if len(s) != n:
            raise PreconditionError("every set has size n", f"set {c} has size {len(s)}")
    log: list[dict[str, Any]] = []
    items = [(c, s.bits) for c, s in enumerate(f.sets)]
    mapping = _solve_two_regular(g, list(range(len(g.components))), n, items, log)
    r = make_assignment(g, f, {to_label(v): c + 1 for v, c in mapping.items()}, log)
    if not verify_rainbow(g, f, r, n - 1):
        raise ContractViolation(f"2-regular construction failed on {f!r}")
    return r
