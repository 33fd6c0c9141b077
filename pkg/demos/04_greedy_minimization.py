#!/usr/bin/env python3
"""Greedy minimization traces: rewrites applied until the tadpole appears.

The minimizer works in phases (thin out dense blocks, straighten pendant
trees, merge pendant paths, collapse extra cycles) and by default only takes
steps that keep the cut-vertex count, so the result stays in the same class.
"""

from zagreb import Graph, emit_g6, minimize, zagreb_m1, zagreb_m2


def trace(name, g, preserve_k=True):
    t = minimize(g, preserve_k=preserve_k)
    print(f"{name}: M1 {zagreb_m1(g)} -> {zagreb_m1(t.final)}, "
          f"M2 {zagreb_m2(g)} -> {zagreb_m2(t.final)}")
    for step in t.steps:
        print(
            f"  {step.kind.value:9} dM1={step.delta_m1:<3} dM2={step.delta_m2:<3} "
            f"k={step.k_after}"
        )
    print(f"  terminated: {t.terminated_reason}  final {emit_g6(t.final).decode()}")
    print()


butterfly = Graph.build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
trace("butterfly", butterfly)

k4_pendant = Graph.build(
    5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]
)
trace("K4 + pendant", k4_pendant)

messy = Graph.build(
    8,
    [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 0), (2, 5), (5, 6), (2, 7)],
)
trace("two triangles + branches", messy)
