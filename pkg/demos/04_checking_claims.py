"""Checking a statement over a grid of parameters.

verify_theorem_range evaluates one claim cell by cell and reports pass, fail,
inconclusive (budget exhausted), vacuous or n/a for each.
"""

from rainbowis import CLAIMS, verify_theorem_range

for claim in ("thm-1.4", "prop-1.3", "cor-2.3A"):
    print(f"{claim}: {CLAIMS[claim]}")
    report = verify_theorem_range(claim, [2, 3], None, t_max=9, time_budget=30, cache=None)
    for cell in report.cells:
        print(f"   {cell.params} {cell.status} expected={cell.expected} observed={cell.observed}")
    print("  overall:", report.status)
