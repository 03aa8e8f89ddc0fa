"""How many independent n-sets force a rainbow one?

f_G(n, m) is the smallest k such that every k independent n-sets of G
(repeats allowed) contain m sets, with one vertex taken from each, that form an
independent m-set. On odd cycles that number is n; on even cycles the two
parity classes, each repeated n-1 times, show it must be larger.
"""

from rainbowis import build_cycle, build_path, f_value

print("odd cycles C_{2n+1}:")
for n in (2, 3, 4):
    res = f_value(build_cycle(2 * n + 1), n, n)
    print(f"  n={n}: f = {res.f_value}")

print("even cycles C_{2n}:")
for n in (2, 3, 4):
    res = f_value(build_cycle(2 * n), n, n)
    print(f"  n={n}: f = {res.f_value}, a largest bad family: {res.witness.to_lists()}")

print("paths P_t with t >= 2n-1:")
for n in (2, 3):
    print(f"  n={n}:", [f_value(build_path(t), n, n).f_value for t in range(2 * n - 1, 2 * n + 4)])
