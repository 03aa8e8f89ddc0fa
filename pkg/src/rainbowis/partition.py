"""The h-value of a collection on a vertex set and the two-part split built on it."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolation, PreconditionError
from .graph import VertexSet
from .indsets import Collection


def h_value(f: Collection, s: VertexSet) -> int:
    """Largest ``m`` such that at least ``m`` sets of ``f`` meet ``s`` in at least ``m`` vertices."""
    sizes = sorted((len(I & s) for I in f.sets), reverse=True)
    h = 0
    for rank, size in enumerate(sizes, start=1):
        if size >= rank:
            h = rank
        else:
            break
    return h


@dataclass(frozen=True)
class PartitionResult:
    part1: Collection
    part2: Collection
    colors1: tuple[int, ...]
    colors2: tuple[int, ...]
    h1: int
    h2: int
    ell: int
    m1: int
    m2: int
    clause: str | None
    """``"ii"`` when m1 + m2 = n, ``"iii"`` when ell <= m1 + m2 - n - 1, else None."""
    violations: tuple[str, ...] = field(default=())


def split(
    f: Collection,
    v1: VertexSet,
    v2: VertexSet,
    ell: int,
    *,
    strict: bool = True,
) -> PartitionResult:
    """Partition ``f`` into two sub-collections with prescribed h-values on ``v1`` and ``v2``.

    Hypotheses: ``n = |f|``, every set has at least ``n`` elements,
    ``h(f, v1 | v2) = n`` and ``0 <= ell <= m1 + m2 - n`` with ``mi = h(f, vi)``.

    The result satisfies ``h(part1, v1) = m1 - ell`` and
    ``h(part2, v2) = n - m1 + ell``. When ``m1 + m2 = n`` every set in part i
    should meet the other side in at most ``m_(3-i)`` vertices; when
    ``ell <= m1 + m2 - n - 1`` every set in part2 meets ``v2`` in at least
    ``n - m1 + ell + 1`` vertices. Failed postconditions are listed in
    ``violations``; with ``strict`` they raise :class:`ContractViolation`.
    """
    n = len(f)
    if v1.bits & v2.bits:
        raise PreconditionError("V1 and V2 disjoint", f"common vertices {(v1 & v2).labels()}")
    for c, I in enumerate(f.sets, start=1):
        if len(I) < n:
            raise PreconditionError("every set has size >= n", f"set {c} has size {len(I)}, n={n}")
    if h_value(f, v1 | v2) != n:
        raise PreconditionError("h(F, V1 u V2) = n", f"got {h_value(f, v1 | v2)}, n={n}")
    m1, m2 = h_value(f, v1), h_value(f, v2)
    if m1 + m2 < n:
        raise ContractViolation(f"m1 + m2 = {m1 + m2} < n = {n}")
    slack = m1 + m2 - n
    if not 0 <= ell <= slack:
        raise PreconditionError("0 <= ell <= m1+m2-n", f"ell={ell}, m1+m2-n={slack}")

    a = [len(I & v1) for I in f.sets]
    b = [len(I & v2) for I in f.sets]
    strong = ell <= slack - 1
    need1 = m1 - ell
    need2 = n - m1 + ell
    thresh2 = need2 + 1 if strong else need2
    first = {c for c in range(n) if a[c] >= need1}
    second = {c for c in range(n) if b[c] >= thresh2}
    if len(first | second) != n:
        raise ContractViolation("the two threshold families do not cover the collection")
    forced = sorted(first - second)
    if len(forced) > need1:
        raise ContractViolation(f"{len(forced)} sets forced into part1 of size {need1}")
    pool = sorted(first & second, key=lambda c: (-a[c], c))
    chosen = set(forced) | set(pool[: need1 - len(forced)])
    if len(chosen) != need1:
        raise ContractViolation(f"part1 needs {need1} sets, only {len(chosen)} qualify")
    colors1 = tuple(c + 1 for c in range(n) if c in chosen)
    colors2 = tuple(c + 1 for c in range(n) if c not in chosen)
    part1, part2 = f.select(colors1), f.select(colors2)
    h1, h2 = h_value(part1, v1), h_value(part2, v2)

    violations = []
    if h1 != need1:
        violations.append(f"(i) h(part1, V1) = {h1} != {need1}")
    if h2 != need2:
        violations.append(f"(i) h(part2, V2) = {h2} != {need2}")
    clause = None
    if slack == 0:
        clause = "ii"
        for c in colors1:
            if b[c - 1] > m2:
                violations.append(f"(ii) set {c} in part1 meets V2 in {b[c - 1]} > m2 = {m2}")
        for c in colors2:
            if a[c - 1] > m1:
                violations.append(f"(ii) set {c} in part2 meets V1 in {a[c - 1]} > m1 = {m1}")
    elif strong:
        clause = "iii"
        for c in colors2:
            if b[c - 1] < need2 + 1:
                violations.append(f"(iii) set {c} in part2 meets V2 in {b[c - 1]} < {need2 + 1}")
    if strict and violations:
        raise ContractViolation("; ".join(violations))
    return PartitionResult(part1, part2, colors1, colors2, h1, h2, ell, m1, m2, clause, tuple(violations))
