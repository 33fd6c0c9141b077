#!/usr/bin/env python3
"""Both Zagreb indices on familiar graphs, and the tadpole closed forms.

The tadpole C(n, k) -- an (n-k)-cycle with a k-vertex path attached by an
edge -- always lands on M1 = 4n+2.  Its second index is 4n+4 as soon as the
path has at least two vertices, but drops to 4n+3 when k = 1: keep an eye on
that column, the verification demo returns to it.
"""

from zagreb import (
    claimed_minima,
    complete_graph,
    construct_cnk,
    cycle_graph,
    path_graph,
    star_graph,
    zagreb_m1,
    zagreb_m2,
)

print("classic graphs")
for name, g in [
    ("C_4", cycle_graph(4)),
    ("P_5", path_graph(5)),
    ("K_4", complete_graph(4)),
    ("S_5", star_graph(5)),
]:
    print(f"  {name:4}  n={g.n}  m={g.m}  M1={zagreb_m1(g):3}  M2={zagreb_m2(g):3}")

print()
print("tadpoles C(n,k) versus the reference closed forms (4n+2, 4n+4)")
print(f"  {'n':>3} {'k':>3} {'M1':>5} {'4n+2':>5} {'M2':>5} {'4n+4':>5}")
for n in (6, 9, 12):
    ref1, ref2 = claimed_minima(n)
    for k in (1, 2, n - 3):
        g = construct_cnk(n, k)
        print(
            f"  {n:>3} {k:>3} {zagreb_m1(g):>5} {ref1:>5} "
            f"{zagreb_m2(g):>5} {ref2:>5}"
            + ("   <- M2 one short at k=1" if zagreb_m2(g) != ref2 else "")
        )
