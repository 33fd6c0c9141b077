#!/usr/bin/env python3
"""One application of every index-decreasing rewrite, with its deltas.

Each operation returns the rewritten graph plus exact before/after data; the
deltas here are the quantities the property tests pin down
(strict decrease for the first six kinds, no increase for the two merges).
"""

from zagreb import (
    Graph,
    block_edge_delete,
    complete_graph,
    emit_g6,
    is_cnk,
    merge_identified,
    op_i,
    op_i_b,
    op_ii,
    op_iii,
    op_iv,
    path_merge,
)


def show(name, outcome):
    tag = "  -> tadpole!" if is_cnk(outcome.result) else ""
    print(
        f"  {name:22} dM1={outcome.delta_m1:>3}  dM2={outcome.delta_m2:>3}  "
        f"k: {outcome.k_before}->{outcome.k_after}  "
        f"m: {outcome.m_before}->{outcome.m_after}  "
        f"result {emit_g6(outcome.result).decode()}{tag}"
    )


print("pendant into a cycle edge (triangle + pendant becomes C_4)")
paw = Graph.build(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
show("op_i", op_i(paw, 0, 3, 1, 2))

print("pendant onto another pendant")
two_pendants = Graph.build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
show("op_i_b", op_i_b(two_pendants, 0, 3, 4))

print("one of two pendant paths spliced into the cycle")
branching = Graph.build(7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
show("op_ii", op_ii(branching, 0, (0, 3, 4), (0, 5, 6), 1, 2))

print("end cycle opened into a far cycle (two triangles joined by an edge)")
dumbbell = Graph.build(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (3, 5)])
show("op_iii", op_iii(dumbbell, 3, 4, 5, 4, 1, 2))

print("two cycles sharing a vertex merged into one (butterfly)")
butterfly = Graph.build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
show("op_iv", op_iv(butterfly, 0, 1, 3, 4))

print("pendant path moved across anchors")
show("path_merge", path_merge(two_pendants, 0, 1, (0, 3), (1, 4)))

print("two pendant paths at one anchor combined")
double = Graph.build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])
show("merge_identified", merge_identified(double, 0, (0, 3), (0, 4)))

print("edge deleted from a dense 2-connected block")
show("block_edge_delete", block_edge_delete(complete_graph(4), 0, 1))
