"""Independent brute-force oracles the library is checked against.

Everything here is deliberately naive and self-contained: permutation search
for isomorphism, remove-and-retest for cut vertices, labeled enumeration with
orbit marking for class counts.  None of it calls into the code paths it is
used to verify.
"""

from __future__ import annotations

import itertools
import random

from zagreb.graphs import Graph


def perm_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism by trying every vertex permutation (n <= 8 or so)."""
    if a.n != b.n or a.m != b.m:
        return False
    eb = {frozenset(e) for e in b.edges()}
    for perm in itertools.permutations(range(a.n)):
        if all(frozenset((perm[u], perm[v])) in eb for u, v in a.edges()):
            return True
    return False


def brute_cut_vertices(g: Graph) -> set[int]:
    """Vertices whose removal disconnects the graph, by removal and BFS."""
    out = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if not rest:
            continue
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w != v and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(rest):
            out.add(v)
    return out


def _mask_connected(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        if (mask >> idx) & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labeled_connected_class_count(n: int) -> int:
    """Number of isomorphism classes of connected graphs on n vertices,
    by enumerating all labeled graphs and marking permutation orbits."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        table = [0] * len(pairs)
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            table[i] = index[(a, b) if a < b else (b, a)]
        perm_maps.append(table)
    total = 1 << len(pairs)
    visited = bytearray(total)
    count = 0
    for mask in range(total):
        if visited[mask]:
            continue
        orbit = set()
        for table in perm_maps:
            image = 0
            rest = mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                image |= 1 << table[bit.bit_length() - 1]
            orbit.add(image)
        for image in orbit:
            visited[image] = 1
        if _mask_connected(n, mask, pairs):
            count += 1
    return count


def m2_by_neighbor_sums(g: Graph) -> int:
    """Second index by double counting: half the sum over vertices of
    d(v) times the degree sum over v's neighbourhood."""
    total = 0
    for v in range(g.n):
        total += len(g.adj[v]) * sum(len(g.adj[u]) for u in g.adj[v])
    assert total % 2 == 0
    return total // 2


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (u, v) for v in range(n) for u in range(v) if rng.random() < p
    ]
    return Graph.build(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.25) -> Graph:
    """Random tree plus a sprinkling of extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for v in range(n):
        for u in range(v):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.build(n, sorted(edges))
