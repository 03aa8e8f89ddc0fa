"""Greedy rainbow selection on a path, and what happens when it falls short.

Scanning P_t left to right and always taking the first vertex some unused set
still offers gives a rainbow independent set. When it ends with fewer than n
vertices, it has exactly n-1, and each unused set has size n-1 with one vertex in
every pair {a, a+1} for a in the output.
"""

from rainbowis import Collection, build_path, gris

g = build_path(7)
full = Collection.from_lists([[1, 3, 5], [2, 4, 6], [3, 5, 7]])
res = gris(g, list(range(1, 8)), full)
print("three 3-sets on P_7:", res.rainbow.pairs)

short = Collection.from_lists([[1, 3], [1, 4], [2, 4]])
res = gris(g, list(range(1, 8)), short)
print("sets of size n-1 = 2:", res.rainbow.pairs, "unused colors:", res.unused_colors())
for step in res.trace:
    print("  ", step)
