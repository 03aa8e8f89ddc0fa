"""Constructive solvers return checkable certificates.

For collections of 2-jump n-sets on C_t the exchange solver builds a rainbow
independent n-set; on two-regular graphs with 2n vertices any n-1 independent
n-sets have a rainbow independent (n-1)-set. Each answer is verified
independently before being printed.
"""

from rainbowis import (
    Collection,
    build_cycle,
    enumerate_jump_sets,
    parse_descriptor,
    solve_two_jump,
    solve_two_regular,
    verify_rainbow,
)

t, n = 11, 4
jumps = enumerate_jump_sets(t, 2, n)
chosen = [jumps[0], jumps[3], jumps[3], jumps[7]]
r = solve_two_jump(t, n, chosen)
print(f"2-jump sets on C_{t}:", [j.start for j in chosen], "->", r.pairs,
      "verified:", verify_rainbow(build_cycle(t), r.collection, r, n))

g = parse_descriptor("C4+C6")
f = Collection.from_lists([[1, 3, 5, 7, 9], [2, 4, 6, 8, 10], [1, 3, 6, 8, 10], [2, 4, 5, 7, 9]])
r = solve_two_regular(g, 5, f)
print("C4+C6, four 5-sets ->", r.pairs, "verified:", verify_rainbow(g, f, r, 4))
