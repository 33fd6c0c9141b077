"""Canonical labeling, isomorphism tests, isomorphism-free enumeration.

Canonical form: iterated neighbourhood refinement of an ordered partition,
then a backtracking search over the surviving choices that keeps the
lexicographically least graph6 bit string.  Automorphisms discovered at equal
leaves prune branches that would only revisit an explored orbit.

Enumeration of connected graphs uses canonical augmentation: a graph on v+1
vertices produced by attaching a new vertex survives only when that vertex
lies in the child's canonical removable orbit, so each isomorphism class is
generated exactly once and no global seen-set is needed.  The augmentation
tree can be cut at a fixed depth and the subtrees expanded independently,
which is how the multi-worker mode partitions the search.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .errors import SizeLimitExceeded
from .graphs import Graph, emit_g6, parse_g6

CANON_SIZE_LIMIT = 16
ENUMERATION_SIZE_LIMIT = 9

CanonicalKey = bytes

# ----------------------------------------------------------------------
# bitmask adjacency helpers
# ----------------------------------------------------------------------


def _rows(g: Graph) -> tuple[int, ...]:
    return tuple(sum(1 << u for u in g.adj[v]) for v in range(g.n))


def _graph_from_rows(rows: tuple[int, ...]) -> Graph:
    n = len(rows)
    edges = [(u, v) for v in range(n) for u in range(v) if (rows[v] >> u) & 1]
    return Graph.build(n, edges)


# ----------------------------------------------------------------------
# refinement and canonical search
# ----------------------------------------------------------------------


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each round re-splits cells only against the sub-cells created in the
    previous round; sub-cells are ordered by their neighbour-count signature,
    so the resulting ordered partition is invariant under relabeling.
    """
    splitters = list(cells)
    while splitters:
        masks = [sum(1 << v for v in cell) for cell in splitters]
        created: list[list[int]] = []
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                rv = rows[v]
                key = tuple((rv & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                for key in sorted(buckets):
                    sub = buckets[key]
                    out.append(sub)
                    created.append(sub)
        cells = out
        splitters = created
    return cells


def _same_orbit(n: int, perms: list[list[int]], tried: list[int], v: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for a in range(n):
            ra, rb = find(a), find(p[a])
            if ra != rb:
                parent[ra] = rb
    rv = find(v)
    return any(find(u) == rv for u in tried)


def _cert(rows: tuple[int, ...], cells: list[list[int]]) -> tuple[int, list[int]]:
    """Minimum adjacency bit string (as an int) and the order achieving it.

    Bits follow the graph6 column order, so the certificate packs directly
    into a graph6 body.
    """
    n = len(rows)
    total_bits = n * (n - 1) // 2
    best_cert: int | None = None
    best_order: list[int] | None = None
    gens: list[list[int]] = []

    def descend(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_cert, best_order
        order = []
        for cell in cells:
            if len(cell) != 1:
                break
            order.append(cell[0])
        prefix = 0
        nbits = 0
        for j in range(1, len(order)):
            rv = rows[order[j]]
            for i in range(j):
                prefix = (prefix << 1) | ((rv >> order[i]) & 1)
            nbits += j
        if best_cert is not None and nbits and prefix > best_cert >> (total_bits - nbits):
            return
        if len(order) == n:
            if best_cert is None or prefix < best_cert:
                best_cert = prefix
                best_order = order
            elif prefix == best_cert and order != best_order:
                perm = [0] * n
                for i, v in enumerate(order):
                    perm[v] = best_order[i]
                gens.append(perm)
            return
        cell = cells[len(order)]
        tried: list[int] = []
        for v in cell:
            if tried and gens:
                stab = [p for p in gens if all(p[f] == f for f in fixed)]
                if stab and _same_orbit(n, stab, tried, v):
                    continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            branch = cells[: len(order)] + [[v], rest] + cells[len(order) + 1:]
            descend(_refine(rows, branch), fixed + [v])

    descend(_refine(rows, cells), [])
    assert best_cert is not None and best_order is not None
    return best_cert, best_order


def _full_cert(rows: tuple[int, ...]) -> tuple[int, list[int]]:
    return _cert(rows, [list(range(len(rows)))])


def _rooted_cert(rows: tuple[int, ...], root: int) -> int:
    """Certificate with one vertex pinned to position 0 (vertex-rooted form)."""
    others = [v for v in range(len(rows)) if v != root]
    cells = [[root], others] if others else [[root]]
    return _cert(rows, cells)[0]


def _cert_to_g6(n: int, cert: int) -> bytes:
    out = bytearray([n + 63])
    total = n * (n - 1) // 2
    for start in range(0, total, 6):
        width = min(6, total - start)
        chunk = (cert >> (total - start - width)) & ((1 << width) - 1)
        out.append((chunk << (6 - width)) + 63)
    return bytes(out)


# ----------------------------------------------------------------------
# public canonical API
# ----------------------------------------------------------------------


def canonical_form(g: Graph, *, size_limit: int = CANON_SIZE_LIMIT) -> CanonicalKey:
    """graph6 encoding of the canonically relabeled graph.

    Two graphs have equal keys exactly when they are isomorphic.  The limit
    is configuration, not a constant: callers that know their inputs refine
    well (tadpoles, say) may raise it.
    """
    if g.n > size_limit:
        raise SizeLimitExceeded(
            f"canonical_form limited to n <= {size_limit}, got {g.n}"
        )
    cert, _ = _full_cert(_rows(g))
    return _cert_to_g6(g.n, cert)


def is_isomorphic(a: Graph, b: Graph, *, size_limit: int = CANON_SIZE_LIMIT) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(len(s) for s in a.adj) != sorted(len(s) for s in b.adj):
        return False
    return canonical_form(a, size_limit=size_limit) == canonical_form(
        b, size_limit=size_limit
    )


# ----------------------------------------------------------------------
# canonical augmentation
# ----------------------------------------------------------------------


def _noncut(n: int, rows: tuple[int, ...]) -> list[int]:
    """Vertices that are not articulation points (input must be connected)."""
    if n == 1:
        return [0]
    disc = [0] * n
    low = [0] * n
    arts = [False] * n
    timer = 1

    def dfs(u: int, parent: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        mask = rows[u]
        while mask:
            b = mask & -mask
            mask ^= b
            w = b.bit_length() - 1
            if disc[w] == 0:
                children += 1
                dfs(w, u)
                if low[w] < low[u]:
                    low[u] = low[w]
                if parent != -1 and low[w] >= disc[u]:
                    arts[u] = True
            elif w != parent and disc[w] < low[u]:
                low[u] = disc[w]
        if parent == -1 and children > 1:
            arts[u] = True

    dfs(0, -1)
    return [v for v in range(n) if not arts[v]]


def _children(rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Accepted one-vertex extensions of a connected graph.

    The new vertex is attached to every nonempty subset of the old vertices;
    subsets equivalent under an automorphism of the parent collapse because
    they share the rooted certificate, and a candidate survives only when the
    new vertex sits in the child's canonical removable orbit.
    """
    v = len(rows)
    newbit = 1 << v
    seen: set[int] = set()
    accepted: list[tuple[int, ...]] = []
    for subset in range(1, 1 << v):
        child = tuple(
            rows[u] | newbit if (subset >> u) & 1 else rows[u] for u in range(v)
        ) + (subset,)
        rooted = _rooted_cert(child, v)
        if rooted in seen:
            continue
        seen.add(rooted)
        noncut = _noncut(v + 1, child)
        _, order = _full_cert(child)
        pos = [0] * (v + 1)
        for i, u in enumerate(order):
            pos[u] = i
        target = max(noncut, key=lambda u: pos[u])
        if target == v or _rooted_cert(child, target) == rooted:
            accepted.append(child)
    return accepted


def _walk(rows: tuple[int, ...], depth: int, sink: Callable[[tuple[int, ...]], None]) -> None:
    if len(rows) == depth:
        sink(rows)
        return
    for child in _children(rows):
        _walk(child, depth, sink)


def _seed_depth(n: int) -> int:
    return max(2, n - 2)


def _seeds(n: int) -> list[bytes]:
    seeds: list[bytes] = []
    _walk((0,), _seed_depth(n), lambda r: seeds.append(emit_g6(_graph_from_rows(r))))
    return seeds


def _expand_seed(args: tuple[bytes, int]) -> list[bytes]:
    encoded, n = args
    rows = _rows(parse_g6(encoded))
    out: list[bytes] = []
    _walk(rows, n, lambda r: out.append(emit_g6(_graph_from_rows(r))))
    return out


def enumerate_connected(
    n: int,
    consumer: Callable[[Graph], None],
    *,
    workers: int = 1,
    size_limit: int = ENUMERATION_SIZE_LIMIT,
) -> int:
    """Invoke consumer exactly once per isomorphism class of connected graphs
    on n vertices; returns the class count.

    With workers > 1 the augmentation tree is split into subtrees two levels
    below the target size and the subtrees are expanded by a process pool;
    results stream back in deterministic subtree order, so the consumer sees
    the same sequence regardless of worker count.
    """
    if n < 1:
        raise SizeLimitExceeded(f"enumeration needs n >= 1, got {n}")
    if n > size_limit:
        raise SizeLimitExceeded(
            f"enumeration limited to n <= {size_limit}, got {n}"
        )
    if n == 1:
        consumer(Graph.build(1, []))
        return 1
    count = 0
    if workers > 1 and n >= 4:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block in pool.map(
                _expand_seed, [(s, n) for s in _seeds(n)], chunksize=1
            ):
                for encoded in block:
                    consumer(parse_g6(encoded))
                    count += 1
    else:
        def sink(rows: tuple[int, ...]) -> None:
            nonlocal count
            count += 1
            consumer(_graph_from_rows(rows))

        _walk((0,), n, sink)
    return count
