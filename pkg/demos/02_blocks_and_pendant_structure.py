#!/usr/bin/env python3
"""Cut vertices, blocks, the block-cut tree, and trees hanging off the 2-core."""

from zagreb import Graph, construct_cnk, cut_vertices, decompose, pendant_structure


def describe(name, g):
    print(f"{name}: n={g.n}, m={g.m}")
    deco = decompose(g)
    print(f"  cut vertices : {sorted(deco.cut_vertices)}")
    for block, end in zip(deco.blocks, deco.endblock_flags):
        kind = "endblock" if end else "interior"
        print(f"  block {sorted(block)}  ({kind})")
    print(f"  block-cut tree edges: {list(deco.block_cut_tree)}")
    try:
        pend = pendant_structure(g)
    except Exception:
        print("  (acyclic: no 2-core)")
        return
    print(f"  2-core       : {sorted(pend.core)}")
    for tree in pend.pendant_trees:
        print(f"  pendant tree at {tree.anchor}: {sorted(tree.vertices)}")
    for path in pend.pendant_paths:
        print(f"  ... which is a path {path.vertices} (length {path.length})")
    print()


describe("tadpole C(6,2)", construct_cnk(6, 2))

# a triangle with a little star hanging off it: a pendant tree that is NOT a path
spider = Graph.build(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)])
describe("triangle + 2-leaf star", spider)

# sanity: the number of cut vertices drives the whole verification grid
g = construct_cnk(9, 4)
print(f"C(9,4) has {len(cut_vertices(g))} cut vertices, as requested")
