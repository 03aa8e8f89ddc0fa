"""Grid verification of the rainbow claims, one cell per parameter point.

Every claim has a short identifier (see ``CLAIMS``). A cell ends as ``pass``,
``fail`` (a counterexample is attached), ``inconclusive`` (cap or time budget
hit), ``vacuous`` (the property has nothing to check at that point) or ``n/a``
(the point lies outside the claim's range). Cells are never dropped.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Callable, Iterable, Sequence

from .cache import ResultCache
from .constructive import solve_two_jump, solve_two_regular, used_fallback
from .errors import ContractViolation, InvalidParameterError
from .fsearch import FResult, f_value, sweep_B_properties
from .graph import Degree2Graph, parse_descriptor
from .indsets import Collection, count_ind_sets, enumerate_ind_sets, enumerate_jump_sets
from .rainbow import verify_rainbow
from .symmetry import automorphisms, canonical_key, set_permutations

CLAIMS: dict[str, str] = {
    "conj-1.2": "f_{C_t}(n, n) = n for t >= 2n + 1",
    "thm-1.4": "f_{C_{2n+1}}(n, n) = n",
    "thm-1.6": "f_{C_t}(n, n) = n for t > n^2/3 + 44n/9",
    "prop-1.3": "f_{C_{2n}}(n, n) = 2n - 1, extremal family = n - 1 copies of each parity class",
    "cor-2.2": "f_{P_t}(n, n) = n for t >= 2n - 1",
    "cor-2.3A": "f_{C_t}(n, n - 1) = n - 1 for t >= 2n",
    "cor-2.3B": "bad families of n independent n-sets of C_t have the list-number properties B1-B3",
    "thm-1.7": "n 2-jump independent n-sets of C_t, t >= 2n + 1, have a rainbow independent n-set",
    "thm-1.2": "n - 1 independent n-sets of a 2-regular graph on 2n - 1 or 2n vertices have a rainbow (n-1)-set",
}

PASS, FAIL, INCONCLUSIVE, VACUOUS, NOT_APPLICABLE = "pass", "fail", "inconclusive", "vacuous", "n/a"

DEFAULT_BUDGET = 60.0
DEFAULT_TWO_REGULAR = ("C4+C4", "C4+C6", "C6+C6")


@dataclass
class Cell:
    claim: str
    params: dict[str, Any]
    status: str
    expected: Any = None
    observed: Any = None
    detail: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class Report:
    claim: str
    cells: list[Cell]

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.cells}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def exit_code(self) -> int:
        return {PASS: 0, FAIL: 1, INCONCLUSIVE: 2}[self.status]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.cells:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "statement": CLAIMS[self.claim],
            "status": self.status,
            "counts": self.counts(),
            "cells": [c.to_dict() for c in self.cells],
        }


# -- planning ---------------------------------------------------------------------


@dataclass(frozen=True)
class _Spec:
    claim: str
    kind: str
    params: dict[str, Any]


def above_thm_1_6_bound(n: int, t: int) -> bool:
    # t > n^2/3 + 44n/9, cleared of denominators
    return 27 * t > 9 * n * n + 132 * n


def _first_above_bound(n: int) -> int:
    t = 2 * n + 1
    while not above_thm_1_6_bound(n, t):
        t += 1
    return t


def _t_values(ts: Sequence[int] | None, lo: int, t_max: int | None, default_hi: int) -> list[int]:
    if ts is not None:
        return list(ts)
    hi = default_hi if t_max is None else t_max
    return list(range(lo, hi + 1))


def _fvalue_spec(claim: str, graph: str, n: int, m: int, expected: int, **extra: Any) -> _Spec:
    return _Spec(claim, "fvalue", {"graph": graph, "n": n, "m": m, "expected": expected, **extra})


def _out_of_range(claim: str, reason: str, **params: Any) -> _Spec:
    return _Spec(claim, "n/a", {**params, "reason": reason})


def plan(
    claim: str,
    ns: Sequence[int] | None = None,
    ts: Sequence[int] | None = None,
    t_max: int | None = None,
    graphs: Sequence[str] | None = None,
) -> list[_Spec]:
    """The cells a claim expands to over the given ranges."""
    if claim not in CLAIMS:
        raise InvalidParameterError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    specs: list[_Spec] = []

    if claim == "thm-1.2":
        for desc in graphs or DEFAULT_TWO_REGULAR:
            specs.append(_Spec(claim, "two-regular", {"graph": desc}))
        specs.append(_Spec(claim, "odd-vacuity", {"max_vertices": 11 if t_max is None else t_max}))
        return specs

    defaults = {
        "conj-1.2": [2, 3],
        "thm-1.4": [2, 3, 4],
        "thm-1.6": [2, 3],
        "prop-1.3": [2, 3, 4],
        "cor-2.2": [2, 3, 4],
        "cor-2.3A": [2, 3, 4],
        "cor-2.3B": [2, 3],
        "thm-1.7": [2, 3, 4, 5],
    }
    for n in ns or defaults[claim]:
        if n < 1:
            raise InvalidParameterError(f"n must be positive, got {n}")
        if claim == "thm-1.4":
            specs.append(_fvalue_spec(claim, f"C{2 * n + 1}", n, n, n))
        elif claim == "prop-1.3":
            specs.append(_fvalue_spec(claim, f"C{2 * n}", n, n, 2 * n - 1, parity_witness=True))
        elif claim == "conj-1.2":
            for t in _t_values(ts, 2 * n + 1, t_max, 2 * n + 7):
                if t < 2 * n + 1:
                    specs.append(_out_of_range(claim, "t < 2n+1", n=n, t=t))
                else:
                    specs.append(_fvalue_spec(claim, f"C{t}", n, n, n))
        elif claim == "thm-1.6":
            lo = _first_above_bound(n)
            for t in _t_values(ts, lo, t_max, lo + 4):
                if not above_thm_1_6_bound(n, t):
                    specs.append(_out_of_range(claim, "t <= n^2/3 + 44n/9", n=n, t=t))
                else:
                    specs.append(_fvalue_spec(claim, f"C{t}", n, n, n))
        elif claim == "cor-2.2":
            for t in _t_values(ts, 2 * n - 1, t_max, 2 * n + 4):
                if t < 2 * n - 1:
                    specs.append(_out_of_range(claim, "t < 2n-1", n=n, t=t))
                else:
                    specs.append(_fvalue_spec(claim, f"P{t}", n, n, n))
        elif claim == "cor-2.3A":
            for t in _t_values(ts, 2 * n, t_max, 2 * n + 6):
                if t < 2 * n or n < 2:
                    specs.append(_out_of_range(claim, "t < 2n or n < 2", n=n, t=t))
                else:
                    specs.append(_fvalue_spec(claim, f"C{t}", n, n - 1, n - 1))
        elif claim == "cor-2.3B":
            for t in _t_values(ts, 2 * n, t_max, 2 * n + 4):
                if t < 2 * n:
                    specs.append(_out_of_range(claim, "t < 2n", n=n, t=t))
                else:
                    specs.append(_Spec(claim, "b-sweep", {"n": n, "t": t}))
        elif claim == "thm-1.7":
            for t in _t_values(ts, 2 * n + 1, t_max, 15):
                if t < 2 * n + 1 or n < 1:
                    specs.append(_out_of_range(claim, "t < 2n+1", n=n, t=t))
                else:
                    specs.append(_Spec(claim, "two-jump", {"n": n, "t": t}))
    return specs


# -- cell runners -----------------------------------------------------------------


def _fvalue_status(spec: _Spec, res: FResult) -> tuple[str, dict[str, Any]]:
    p = spec.params
    detail: dict[str, Any] = {
        "witness": None if res.witness is None else res.witness.to_lists(),
        "stats": res.stats,
    }
    if res.inconclusive:
        detail["lower_bound"] = res.f_value
        return INCONCLUSIVE, detail
    if res.f_value != p["expected"]:
        return FAIL, detail
    if p.get("parity_witness"):
        n = p["n"]
        odd = list(range(1, 2 * n, 2))
        even = list(range(2, 2 * n + 1, 2))
        expect = sorted([odd] * (n - 1) + [even] * (n - 1))
        w = sorted(res.witness.to_lists()) if res.witness is not None else []
        detail["parity_witness"] = w == expect
        if w != expect:
            return FAIL, detail
    return PASS, detail


def _run_fvalue(spec: _Spec, budget: float | None, workers: int) -> Cell:
    p = spec.params
    t0 = time.monotonic()
    g = parse_descriptor(p["graph"])
    res = f_value(g, p["n"], p["m"], workers=workers, time_budget=budget)
    status, detail = _fvalue_status(spec, res)
    detail["record"] = res.to_record()
    return Cell(spec.claim, _public(p), status, p["expected"], res.f_value, detail, time.monotonic() - t0)


def _run_two_jump(spec: _Spec, budget: float | None, workers: int) -> Cell:
    n, t = spec.params["n"], spec.params["t"]
    t0 = time.monotonic()
    stop = None if budget is None else t0 + budget
    sets = enumerate_jump_sets(t, 2, n)
    instances = fallbacks = 0
    for combo in combinations_with_replacement(sets, n):
        if stop is not None and time.monotonic() > stop:
            detail = {"instances": instances, "fallbacks": fallbacks, "timed_out": True}
            return Cell(spec.claim, _public(spec.params), INCONCLUSIVE, None, None, detail, time.monotonic() - t0)
        try:
            r = solve_two_jump(t, n, list(combo))
        except ContractViolation as exc:
            detail = {"starts": [js.start for js in combo], "error": str(exc), "instances": instances}
            return Cell(spec.claim, _public(spec.params), FAIL, "all solvable", "counterexample", detail,
                        time.monotonic() - t0)
        instances += 1
        fallbacks += used_fallback(r)
    detail = {"instances": instances, "fallbacks": fallbacks, "jump_sets": len(sets)}
    return Cell(spec.claim, _public(spec.params), PASS, "all solvable", f"{instances} solved", detail,
                time.monotonic() - t0)


def _run_b_sweep(spec: _Spec, budget: float | None, workers: int) -> Cell:
    n, t = spec.params["n"], spec.params["t"]
    t0 = time.monotonic()
    sweep = sweep_B_properties(t, n)
    failures = [[asdict(c) for c in r.checks] for r in sweep.reports if not r.ok]
    detail = {"bad_families": sweep.bad_count, "failures": failures}
    if sweep.vacuous:
        status = VACUOUS
    elif sweep.ok:
        status = PASS
    else:
        status = FAIL
    return Cell(spec.claim, _public(spec.params), status, "B1-B3 hold", f"{sweep.bad_count} bad families", detail,
                time.monotonic() - t0)


def multisets(g: Degree2Graph, n: int, size: int, *, symmetry: bool = False) -> Iterable[Collection]:
    """Collections of ``size`` independent ``n``-sets; one per automorphism class with ``symmetry``."""
    sets = enumerate_ind_sets(g, n)
    perms = set_permutations([s.bits for s in sets], automorphisms(g)[1:]) if symmetry else []
    for key in combinations_with_replacement(range(len(sets)), size):
        if not perms or canonical_key(key, perms) == key:
            yield Collection(tuple(sets[i] for i in key))


def _run_two_regular(spec: _Spec, budget: float | None, workers: int) -> Cell:
    desc = spec.params["graph"]
    t0 = time.monotonic()
    stop = None if budget is None else t0 + budget
    g = parse_descriptor(desc)
    n = (g.vertex_count + 1) // 2
    if count_ind_sets(g, n) == 0:
        return Cell(spec.claim, {"graph": desc, "n": n}, VACUOUS, None, None, {"reason": "I_n(G) empty"},
                    time.monotonic() - t0)
    instances = 0
    for f in multisets(g, n, n - 1):
        if stop is not None and time.monotonic() > stop:
            return Cell(spec.claim, {"graph": desc, "n": n}, INCONCLUSIVE, None, None,
                        {"instances": instances, "timed_out": True}, time.monotonic() - t0)
        try:
            r = solve_two_regular(g, n, f)
            ok = verify_rainbow(g, f, r, n - 1)
        except ContractViolation as exc:
            ok, r = False, str(exc)
        if not ok:
            return Cell(spec.claim, {"graph": desc, "n": n}, FAIL, "all solvable", "counterexample",
                        {"collection": f.to_lists(), "error": str(r)}, time.monotonic() - t0)
        instances += 1
    return Cell(spec.claim, {"graph": desc, "n": n}, PASS, "all solvable", f"{instances} solved",
                {"instances": instances}, time.monotonic() - t0)


def cycle_partitions(total: int, smallest: int = 3) -> Iterable[tuple[int, ...]]:
    """Multisets of cycle lengths (each >= 3) summing to ``total``, in non-decreasing order."""
    if total == 0:
        yield ()
        return
    for first in range(smallest, total + 1):
        for rest in cycle_partitions(total - first, first):
            yield (first,) + rest


def _run_odd_vacuity(spec: _Spec, budget: float | None, workers: int) -> Cell:
    top = spec.params["max_vertices"]
    t0 = time.monotonic()
    checked = []
    for size in range(3, top + 1, 2):
        n = (size + 1) // 2
        for lengths in cycle_partitions(size):
            desc = "+".join(f"C{L}" for L in lengths)
            g = parse_descriptor(desc)
            count = count_ind_sets(g, n)
            checked.append(desc)
            if count:
                return Cell(spec.claim, _public(spec.params), FAIL, 0, count, {"graph": desc, "n": n},
                            time.monotonic() - t0)
    return Cell(spec.claim, _public(spec.params), PASS, "I_n empty", "I_n empty",
                {"graphs": checked}, time.monotonic() - t0)


def _run_not_applicable(spec: _Spec, budget: float | None, workers: int) -> Cell:
    p = dict(spec.params)
    reason = p.pop("reason")
    return Cell(spec.claim, p, NOT_APPLICABLE, detail={"reason": reason})


_RUNNERS: dict[str, Callable[[_Spec, float | None, int], Cell]] = {
    "fvalue": _run_fvalue,
    "two-jump": _run_two_jump,
    "b-sweep": _run_b_sweep,
    "two-regular": _run_two_regular,
    "odd-vacuity": _run_odd_vacuity,
    "n/a": _run_not_applicable,
}


def _public(params: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in params.items() if k not in ("expected", "parity_witness")}


def run_cell(spec: _Spec, budget: float | None = DEFAULT_BUDGET, workers: int = 1) -> Cell:
    return _RUNNERS[spec.kind](spec, budget, workers)


def _cell_from_cache(spec: _Spec, res: FResult) -> Cell:
    status, detail = _fvalue_status(spec, res)
    detail["record"] = res.to_record()
    detail["cached"] = True
    return Cell(spec.claim, _public(spec.params), status, spec.params["expected"], res.f_value, detail, 0.0)


def verify_theorem_range(
    claim: str,
    ns: Sequence[int] | None = None,
    ts: Sequence[int] | None = None,
    *,
    t_max: int | None = None,
    graphs: Sequence[str] | None = None,
    time_budget: float | None = DEFAULT_BUDGET,
    workers: int = 1,
    jobs: int = 1,
    cache: ResultCache | None = None,
    recompute: bool = False,
) -> Report:
    """Run every cell of ``claim`` over the given ranges.

    ``time_budget`` applies per cell. ``workers`` parallelizes a single f-value
    search; ``jobs`` runs independent cells in separate processes. f-value cells
    consult ``cache`` unless ``recompute`` and store conclusive results in it.
    """
    specs = plan(claim, ns, ts, t_max, graphs)
    cells: list[Cell | None] = [None] * len(specs)
    todo = []
    for k, spec in enumerate(specs):
        if cache is not None and not recompute and spec.kind == "fvalue":
            p = spec.params
            hit = cache.lookup(p["graph"], p["n"], p["m"])
            if hit is not None:
                cells[k] = _cell_from_cache(spec, hit)
                continue
        todo.append(k)

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {k: pool.submit(run_cell, specs[k], time_budget, workers) for k in todo}
            for k, fut in futures.items():
                cells[k] = fut.result()
    else:
        for k in todo:
            cells[k] = run_cell(specs[k], time_budget, workers)

    if cache is not None:
        for k in todo:
            cell = cells[k]
            assert cell is not None
            if specs[k].kind == "fvalue" and cell.status != INCONCLUSIVE:
                cache.store(FResult.from_record(cell.detail["record"]))
    return Report(claim, [c for c in cells if c is not None])
