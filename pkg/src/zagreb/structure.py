"""Cut vertices, blocks, pendant trees/paths, and the extremal tadpole family.

The tadpole C(n, k) -- a cycle on n-k vertices with a k-vertex path attached
by one edge -- is the equality case the verifier compares against.  It is
pinned down operationally by the identity M1 = 4n+2, which only this
attachment reading satisfies together with "n vertices, k cut vertices".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import canon
from .errors import (
    AcyclicGraph,
    Disconnected,
    InvalidParameters,
    NotABlock,
)
from .graphs import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal 2-connected blocks (K2 included), cut vertices, and the
    bipartite block-cut tree given as (block index, cut vertex) edges."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    endblock_flags: tuple[bool, ...]
    block_cut_tree: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PendantTree:
    anchor: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class PendantPath:
    anchor: int
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PendantStructure:
    """Trees hanging off the 2-core, one entry per stripped component.

    Several trees may share an anchor; a tree is listed among the paths when
    all of its vertices have degree <= 2 in the host graph, which forces it
    to be a path attached at one end.
    """

    core: frozenset[int]
    pendant_trees: tuple[PendantTree, ...]
    pendant_paths: tuple[PendantPath, ...]


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected("operation requires a connected graph")


def _blocks_and_cuts(g: Graph) -> tuple[set[int], list[frozenset[int]]]:
    """Lowpoint DFS producing articulation vertices and edge-blocks."""
    n = g.n
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    stack: list[tuple[int, int]] = []
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    timer = 1

    def dfs(u: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for w in sorted(g.adj[u]):
            if disc[w] == 0:
                parent[w] = u
                children += 1
                stack.append((u, w))
                dfs(w)
                if low[w] < low[u]:
                    low[u] = low[w]
                if (parent[u] == -1 and children > 1) or (
                    parent[u] != -1 and low[w] >= disc[u]
                ):
                    cuts.add(u)
                if low[w] >= disc[u]:
                    comp: set[int] = set()
                    while True:
                        edge = stack.pop()
                        comp.update(edge)
                        if edge == (u, w):
                            break
                    blocks.append(frozenset(comp))
            elif w != parent[u] and disc[w] < disc[u]:
                stack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]

    dfs(0)
    return cuts, blocks


def cut_vertices(g: Graph) -> frozenset[int]:
    """Exactly the vertices whose removal disconnects the graph."""
    _require_connected(g)
    cuts, _ = _blocks_and_cuts(g)
    return frozenset(cuts)


def decompose(g: Graph) -> BlockDecomposition:
    _require_connected(g)
    cuts, raw_blocks = _blocks_and_cuts(g)
    blocks = tuple(sorted(raw_blocks, key=sorted))
    flags = tuple(len(block & cuts) <= 1 for block in blocks)
    tree = tuple(
        (i, v) for i, block in enumerate(blocks) for v in sorted(block & cuts)
    )
    return BlockDecomposition(blocks, frozenset(cuts), flags, tree)


def is_cycle_block(g: Graph, block: frozenset[int]) -> bool:
    """Whether the given block induces a cycle (every inner degree 2, size >= 3)."""
    deco = decompose(g)
    if block not in deco.blocks:
        raise NotABlock(f"{sorted(block)} is not a block of the graph")
    if len(block) < 3:
        return False
    return all(len(g.adj[v] & block) == 2 for v in block)


def two_core(g: Graph) -> frozenset[int]:
    """Maximal subgraph of minimum degree 2, by stripping degree-1 vertices."""
    deg = {v: g.degree(v) for v in range(g.n)}
    queue = [v for v, d in deg.items() if d <= 1]
    dead: set[int] = set()
    while queue:
        v = queue.pop()
        if v in dead:
            continue
        dead.add(v)
        for w in g.adj[v]:
            if w not in dead:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return frozenset(v for v in range(g.n) if v not in dead)


def pendant_structure(g: Graph) -> PendantStructure:
    _require_connected(g)
    if g.m < g.n:
        raise AcyclicGraph("graph has no cycle, so no 2-core to hang trees on")
    core = two_core(g)
    stripped = set(range(g.n)) - core
    trees: list[PendantTree] = []
    paths: list[PendantPath] = []
    remaining = set(stripped)
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for w in g.adj[u]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    frontier.append(w)
        remaining -= comp
        anchors = {w for u in comp for w in g.adj[u] if w in core}
        # a stripped component always touches the core in exactly one vertex
        assert len(anchors) == 1, anchors
        anchor = anchors.pop()
        trees.append(PendantTree(anchor, frozenset(comp)))
        if all(g.degree(u) <= 2 for u in comp):
            (first,) = [u for u in comp if anchor in g.adj[u]]
            ordered = [first]
            prev = anchor
            while g.degree(ordered[-1]) == 2:
                (nxt,) = [w for w in g.adj[ordered[-1]] if w != prev]
                prev = ordered[-1]
                ordered.append(nxt)
            paths.append(PendantPath(anchor, tuple(ordered)))
    trees.sort(key=lambda t: (t.anchor, sorted(t.vertices)))
    paths.sort(key=lambda p: (p.anchor, p.vertices))
    return PendantStructure(core, tuple(trees), tuple(paths))


# ----------------------------------------------------------------------
# hanging paths (used by the rewrites)
# ----------------------------------------------------------------------


def hanging_path_from(g: Graph, anchor: int, first: int) -> tuple[int, ...] | None:
    """Maximal path anchor-first-...-leaf whose interior has degree 2.

    Returns the ordered vertices after the anchor, or None when the walk from
    `first` does not end at a leaf (it loops back or hits a branch vertex).
    """
    if first not in g.neighbors(anchor) or g.degree(first) > 2:
        return None
    path = [first]
    prev = anchor
    while g.degree(path[-1]) == 2:
        (nxt,) = [w for w in g.adj[path[-1]] if w != prev]
        if nxt == anchor or g.degree(nxt) > 2:
            return None
        prev = path[-1]
        path.append(nxt)
    return tuple(path)


def hanging_paths(g: Graph, v: int) -> list[tuple[int, ...]]:
    """All maximal pendant paths hanging off v, ordered by first vertex."""
    out = []
    for first in sorted(g.neighbors(v)):
        path = hanging_path_from(g, v, first)
        if path is not None:
            out.append(path)
    return out


def vertex_on_cycle(g: Graph, v: int) -> bool:
    deco = decompose(g)
    return any(v in block and len(block) >= 3 for block in deco.blocks)


def cycle_edges(g: Graph) -> set[frozenset[int]]:
    """Edges lying on some cycle: exactly the edges inside blocks of size >= 3."""
    deco = decompose(g)
    out: set[frozenset[int]] = set()
    for block in deco.blocks:
        if len(block) >= 3:
            for u in block:
                for w in g.adj[u] & block:
                    out.add(frozenset((u, w)))
    return out


# ----------------------------------------------------------------------
# the extremal family
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ring_rows(c: int) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(((i - 1) % c, (i + 1) % c)) for i in range(c))


def construct_cnk(n: int, k: int) -> Graph:
    """Cycle on n-k vertices (ids 0..n-k-1) with the path n-k..n-1 attached
    to cycle vertex 0 by an edge.  Has exactly k cut vertices and M1 = 4n+2."""
    if n < 4 or k < 1 or k > n - 3:
        raise InvalidParameters(
            f"tadpole needs n >= 4 and 1 <= k <= n-3, got (n={n}, k={k})"
        )
    c = n - k
    # adjacency is formulaic, so skip the generic edge-list validation
    rows = list(_ring_rows(c))
    rows[0] |= {c}
    for i in range(c, n - 1):
        rows.append(frozenset((i - 1 if i > c else 0, i + 1)))
    rows.append(frozenset((n - 2 if k > 1 else 0,)))
    return Graph(n, tuple(rows))


def is_cnk(g: Graph) -> bool:
    """Whether g is isomorphic to construct_cnk(n, k) for its own n and k."""
    if not g.is_connected():
        return False
    n = g.n
    if n < 4 or g.m != n:
        return False
    k = len(cut_vertices(g))
    if not 1 <= k <= n - 3:
        return False
    degrees = sorted(len(s) for s in g.adj)
    if degrees != [1] + [2] * (n - 2) + [3]:
        return False
    reference = construct_cnk(n, k)
    limit = max(n, canon.CANON_SIZE_LIMIT)
    return canon.is_isomorphic(g, reference, size_limit=limit)


def in_vnk(g: Graph, n: int, k: int) -> bool:
    """Membership in the class: connected, n vertices, exactly k cut vertices,
    and at least one cycle (m >= n)."""
    if g.n != n or g.m < n or not g.is_connected():
        return False
    return len(cut_vertices(g)) == k
