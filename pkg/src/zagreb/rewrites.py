"""Index-decreasing graph rewrites with validated sites and delta reporting.

Each operation checks its precondition clauses by name, applies a pure edit,
and returns the new graph together with both index deltas, edge counts, and
the cut-vertex counts before and after.  Cut-vertex preservation is *not* a
precondition anywhere: several operations legitimately change the count and
callers enforce whatever policy they need from the reported values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateSite, PreconditionViolated
from .graphs import Graph
from .indices import zagreb_m1, zagreb_m2
from .structure import (
    cut_vertices,
    cycle_edges,
    decompose,
    hanging_path_from,
    hanging_paths,
    is_cycle_block,
    vertex_on_cycle,
)


class RewriteKind(str, enum.Enum):
    OP_I = "I"
    OP_IB = "Ib"
    OP_II = "II"
    OP_III = "III"
    OP_IV = "IV"
    PATH_MERGE = "merge"
    MERGE_IDENTIFIED = "merge-id"
    BLOCK_EDGE_DELETE = "edge-del"


# vertex-tuple layout per kind, as accepted by apply_site and the CLI
SITE_ARITY = {
    RewriteKind.OP_I: 4,            # v, v1, u1, u2
    RewriteKind.OP_IB: 3,           # v, v1, w1
    RewriteKind.OP_II: 5,           # v, head_a, head_b, w1, w2
    RewriteKind.OP_III: 6,          # w, v1, v2, v0, u1, u2
    RewriteKind.OP_IV: 4,           # v, v2, v1, v0
    RewriteKind.PATH_MERGE: 4,      # u, v, head_u, head_v
    RewriteKind.MERGE_IDENTIFIED: 3,  # u, head_a, head_b
    RewriteKind.BLOCK_EDGE_DELETE: 2,  # u, v
}


@dataclass(frozen=True)
class RewriteSite:
    kind: RewriteKind
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class RewriteOutcome:
    result: Graph
    delta_m1: int
    delta_m2: int
    k_before: int
    k_after: int
    m_before: int
    m_after: int


def _outcome(before: Graph, after: Graph) -> RewriteOutcome:
    return RewriteOutcome(
        result=after,
        delta_m1=zagreb_m1(before) - zagreb_m1(after),
        delta_m2=zagreb_m2(before) - zagreb_m2(after),
        k_before=len(cut_vertices(before)),
        k_after=len(cut_vertices(after)),
        m_before=before.m,
        m_after=after.m,
    )


def _need(condition: bool, clause: str) -> None:
    if not condition:
        raise PreconditionViolated(clause)


def _distinct(vertices: Iterable[int], clause: str) -> None:
    seen = list(vertices)
    if len(set(seen)) != len(seen):
        raise DegenerateSite(clause)


def _check_hanging_path(g: Graph, anchor: int, path: Sequence[int], name: str) -> None:
    _need(len(path) >= 2, f"{name} must start at its anchor and contain a vertex")
    _need(path[0] == anchor, f"{name} must start at the anchor vertex")
    derived = hanging_path_from(g, anchor, path[1])
    _need(
        derived is not None and tuple(path[1:]) == derived,
        f"{name} is not a maximal pendant path at vertex {anchor}",
    )


# ----------------------------------------------------------------------
# the operations
# ----------------------------------------------------------------------


def op_i(g: Graph, v: int, v1: int, u1: int, u2: int) -> RewriteOutcome:
    """Detach pendant v1 from its support v and splice it into the cycle edge
    u1 u2.  Keeps n and m; both indices strictly decrease."""
    for x in (v, v1, u1, u2):
        g._check_vertex(x)
    _distinct((v, v1, u1, u2), "site vertices v, v1, u1, u2 must be distinct")
    _need(g.degree(v) >= 3, "support vertex v must have degree >= 3")
    _need(
        g.has_edge(v, v1) and g.degree(v1) == 1,
        "v1 must be a pendant neighbor of v",
    )
    _need(g.has_edge(u1, u2), "u1 u2 must be an edge")
    _need(frozenset((u1, u2)) in cycle_edges(g), "u1 u2 must lie on a cycle")
    result = (
        g.remove_edge(u1, u2).remove_edge(v, v1).add_edge(u1, v1).add_edge(u2, v1)
    )
    return _outcome(g, result)


def op_i_b(g: Graph, v: int, v1: int, w1: int) -> RewriteOutcome:
    """Move pendant v1 from its on-cycle support v onto another pendant w1."""
    for x in (v, v1, w1):
        g._check_vertex(x)
    _distinct((v, v1, w1), "site vertices v, v1, w1 must be distinct")
    _need(vertex_on_cycle(g, v), "support vertex v must lie on a cycle")
    _need(
        g.has_edge(v, v1) and g.degree(v1) == 1,
        "v1 must be a pendant neighbor of v",
    )
    _need(g.degree(w1) == 1, "w1 must be a pendant vertex")
    result = g.remove_edge(v, v1).add_edge(v1, w1)
    return _outcome(g, result)


def op_ii(
    g: Graph,
    v: int,
    path_a: Sequence[int],
    path_b: Sequence[int],
    w1: int,
    w2: int,
) -> RewriteOutcome:
    """Splice the first vertex of one pendant path at v into the cycle edge
    w1 w2 and append the path's tail to the end of a second pendant path.

    Keeps n and m; the second-index drop is at least gap_g(d(w1), d(w2)) + 1.
    """
    for x in (v, w1, w2):
        g._check_vertex(x)
    _need(g.degree(v) >= 3, "vertex v must have degree >= 3")
    _need(
        all(g.degree(u) > 1 for u in g.adj[v]),
        "v must have no pendant neighbor (detach single pendants instead)",
    )
    _check_hanging_path(g, v, path_a, "path_a")
    _check_hanging_path(g, v, path_b, "path_b")
    _need(path_a[1] != path_b[1], "the two pendant paths must be distinct")
    _need(len(path_a) >= 3, "path_a must contain at least two vertices beyond v")
    _need(len(path_b) >= 3, "path_b must contain at least two vertices beyond v")
    _need(g.has_edge(w1, w2), "w1 w2 must be an edge")
    _need(frozenset((w1, w2)) in cycle_edges(g), "w1 w2 must lie on a cycle")
    involved = {v} | set(path_a) | set(path_b)
    if w1 in involved or w2 in involved:
        raise DegenerateSite("w1 w2 must avoid v and both pendant paths")
    head, second = path_a[1], path_a[2]
    tail_end = path_b[-1]
    result = (
        g.remove_edge(v, head)
        .remove_edge(head, second)
        .remove_edge(w1, w2)
        .add_edge(head, w1)
        .add_edge(head, w2)
        .add_edge(second, tail_end)
    )
    return _outcome(g, result)


def op_iii(
    g: Graph, w: int, v1: int, v2: int, v0: int, u1: int, u2: int
) -> RewriteOutcome:
    """Open the end cycle hanging at cut vertex w and splice its path into an
    edge of a disjoint cycle block; v2 is left as a pendant at w.

    Decreases m by exactly 1 (one fewer independent cycle).
    """
    for x in (w, v1, v2, u1, u2, v0):
        g._check_vertex(x)
    _distinct((w, v1, v2, u1, u2), "site vertices w, v1, v2, u1, u2 must be distinct")
    deco = decompose(g)
    _need(w in deco.cut_vertices, "w must be a cut vertex")
    inner = [
        b for b in deco.blocks if w in b and v1 in b and v2 in b and len(b) >= 3
    ]
    _need(len(inner) == 1, "w, v1, v2 must lie in one block of size >= 3")
    c2 = inner[0]
    _need(is_cycle_block(g, c2), "the block at w must be a cycle")
    _need(len(c2 & deco.cut_vertices) == 1, "the cycle at w must be an endblock")
    _need(g.adj[w] & c2 == {v1, v2}, "v1, v2 must be w's neighbors on its cycle")
    others = (g.adj[v2] & c2) - {w}
    _need(others == {v0}, "v0 must be v2's cycle neighbor other than w")
    outer = [b for b in deco.blocks if u1 in b and u2 in b and len(b) >= 3]
    _need(len(outer) == 1 and g.has_edge(u1, u2), "u1 u2 must be a cycle-block edge")
    c1 = outer[0]
    _need(is_cycle_block(g, c1), "u1 u2 must lie in a cycle block")
    _need(c1 != c2, "the two cycle blocks must be distinct")
    _need(w not in c1, "the donor cycle must not pass through w")
    _need(
        not ({u1, u2} & deco.cut_vertices),
        "u1 u2 must avoid the donor cycle's attachment vertices",
    )
    if g.has_edge(u1, v0) or g.has_edge(u2, v1):
        raise DegenerateSite("splice edges u1 v0 / u2 v1 already present")
    result = (
        g.remove_edge(v1, w)
        .remove_edge(v0, v2)
        .remove_edge(u1, u2)
        .add_edge(u1, v0)
        .add_edge(u2, v1)
    )
    return _outcome(g, result)


def op_iv(g: Graph, v: int, v2: int, v1: int, v0: int) -> RewriteOutcome:
    """Merge two cycle blocks sharing the single vertex v into one cycle,
    leaving v1 as a pendant at v.  Decreases m by exactly 1."""
    for x in (v, v2, v1, v0):
        g._check_vertex(x)
    _distinct((v, v2, v1, v0), "site vertices v, v2, v1, v0 must be distinct")
    _need(g.degree(v) >= 4, "shared vertex v must have degree >= 4")
    deco = decompose(g)
    inner = [b for b in deco.blocks if v in b and v1 in b and len(b) >= 3]
    _need(len(inner) == 1 and g.has_edge(v, v1), "v1 must be v's neighbor on a cycle block")
    c2 = inner[0]
    _need(is_cycle_block(g, c2), "the block holding v1 must be a cycle")
    _need(len(c2 & deco.cut_vertices) == 1, "the cycle holding v1 must be an endblock")
    others = (g.adj[v1] & c2) - {v}
    _need(others == {v0}, "v0 must be v1's cycle neighbor other than v")
    outer = [b for b in deco.blocks if v in b and v2 in b and len(b) >= 3]
    _need(len(outer) == 1 and g.has_edge(v, v2), "v2 must be v's neighbor on a cycle block")
    c1 = outer[0]
    _need(is_cycle_block(g, c1), "the block holding v2 must be a cycle")
    _need(c1 != c2, "the two cycle blocks must be distinct")
    if g.has_edge(v0, v2):
        raise DegenerateSite("closing edge v0 v2 already present")
    result = g.remove_edge(v, v2).remove_edge(v0, v1).add_edge(v0, v2)
    return _outcome(g, result)


def path_merge(
    g: Graph,
    u: int,
    v: int,
    path_u: Sequence[int],
    path_v: Sequence[int],
) -> RewriteOutcome:
    """Move the pendant path at u onto the end of the pendant path at v.
    Keeps n and m; neither index increases."""
    g._check_vertex(u)
    g._check_vertex(v)
    _need(u != v, "anchors must be distinct (merge paths at one anchor instead)")
    _need(vertex_on_cycle(g, u), "anchor u must lie on a cycle")
    _need(vertex_on_cycle(g, v), "anchor v must lie on a cycle")
    _need(g.degree(u) >= 3 and g.degree(v) >= 3, "both anchors need degree >= 3")
    _check_hanging_path(g, u, path_u, "path_u")
    _check_hanging_path(g, v, path_v, "path_v")
    result = g.remove_edge(u, path_u[1]).add_edge(path_u[1], path_v[-1])
    return _outcome(g, result)


def merge_identified(
    g: Graph, u: int, path_a: Sequence[int], path_b: Sequence[int]
) -> RewriteOutcome:
    """Combine two pendant paths at the same anchor: one path vertex is
    absorbed into a subdivided cycle edge and the remaining vertices form a
    single pendant path at u.  Keeps n and m; neither index increases."""
    g._check_vertex(u)
    _need(vertex_on_cycle(g, u), "anchor u must lie on a cycle")
    _check_hanging_path(g, u, path_a, "path_a")
    _check_hanging_path(g, u, path_b, "path_b")
    _need(path_a[1] != path_b[1], "the two pendant paths must be distinct")
    candidates = sorted(
        tuple(sorted(e)) for e in cycle_edges(g) if u not in e
    )
    _need(bool(candidates), "no cycle edge available away from the anchor")
    w1, w2 = candidates[0]
    absorbed = path_a[1]
    result = g.remove_edge(u, absorbed)
    if len(path_a) > 2:
        result = result.remove_edge(absorbed, path_a[2]).add_edge(
            path_a[2], path_b[-1]
        )
    result = (
        result.remove_edge(w1, w2).add_edge(w1, absorbed).add_edge(absorbed, w2)
    )
    return _outcome(g, result)


def block_edge_delete(g: Graph, u: int, v: int) -> RewriteOutcome:
    """Delete an edge of a non-cycle block of size >= 4 when the block stays
    2-connected.  Both indices strictly decrease and the cut count is kept."""
    _need(g.has_edge(u, v), "u v must be an edge")
    deco = decompose(g)
    holder = [b for b in deco.blocks if u in b and v in b]
    block = holder[0]
    _need(len(block) >= 4, "the edge's block must have at least 4 vertices")
    _need(not is_cycle_block(g, block), "the edge's block must not be a cycle")
    _need(
        _two_connected_minus(g, block, u, v),
        "removing u v must keep the block 2-connected",
    )
    return _outcome(g, g.remove_edge(u, v))


def _two_connected_minus(g: Graph, block: frozenset[int], u: int, v: int) -> bool:
    ids = sorted(block)
    index = {x: i for i, x in enumerate(ids)}
    edges = [
        (index[a], index[b])
        for a in ids
        for b in sorted(g.adj[a] & block)
        if a < b and {a, b} != {u, v}
    ]
    sub = Graph.build(len(ids), edges)
    return sub.is_connected() and not cut_vertices(sub)


# ----------------------------------------------------------------------
# dispatch and site discovery
# ----------------------------------------------------------------------


def apply_site(g: Graph, site: RewriteSite) -> RewriteOutcome:
    kind = site.kind
    expected = SITE_ARITY[kind]
    if len(site.vertices) != expected:
        raise PreconditionViolated(
            f"{kind.value} site takes {expected} vertices, got {len(site.vertices)}"
        )
    vs = site.vertices
    if kind is RewriteKind.OP_I:
        return op_i(g, *vs)
    if kind is RewriteKind.OP_IB:
        return op_i_b(g, *vs)
    if kind is RewriteKind.OP_II:
        v, head_a, head_b, w1, w2 = vs
        return op_ii(g, v, _derive_path(g, v, head_a), _derive_path(g, v, head_b), w1, w2)
    if kind is RewriteKind.OP_III:
        return op_iii(g, *vs)
    if kind is RewriteKind.OP_IV:
        return op_iv(g, *vs)
    if kind is RewriteKind.PATH_MERGE:
        u, v, head_u, head_v = vs
        return path_merge(g, u, v, _derive_path(g, u, head_u), _derive_path(g, v, head_v))
    if kind is RewriteKind.MERGE_IDENTIFIED:
        u, head_a, head_b = vs
        return merge_identified(g, u, _derive_path(g, u, head_a), _derive_path(g, u, head_b))
    return block_edge_delete(g, *vs)


def _derive_path(g: Graph, anchor: int, head: int) -> tuple[int, ...]:
    g._check_vertex(anchor)
    g._check_vertex(head)
    tail = hanging_path_from(g, anchor, head)
    if tail is None:
        raise PreconditionViolated(
            f"vertex {head} does not start a pendant path at {anchor}"
        )
    return (anchor,) + tail


def find_sites(
    g: Graph, kinds: Sequence[RewriteKind] | None = None
) -> list[RewriteSite]:
    """Every valid application site, brute-forced over vertex/edge tuples.

    Sites are grouped by kind (in the order of `kinds`, by default the enum
    order) and sorted by vertex tuple within a kind; each candidate is pushed
    through the operation itself so the returned list contains only sites
    whose full precondition holds.
    """
    selected = list(kinds) if kinds is not None else list(RewriteKind)
    out: list[RewriteSite] = []
    for kind in selected:
        for vertices in sorted(_candidates(g, kind)):
            site = RewriteSite(kind, vertices)
            try:
                apply_site(g, site)
            except PreconditionViolated:
                continue
            out.append(site)
    return out


def _candidates(g: Graph, kind: RewriteKind) -> list[tuple[int, ...]]:
    deco = decompose(g)
    cyc_edges = sorted(tuple(sorted(e)) for e in cycle_edges(g))
    pendants = [v for v in range(g.n) if g.degree(v) == 1]
    out: list[tuple[int, ...]] = []

    if kind is RewriteKind.OP_I:
        for v1 in pendants:
            (v,) = g.adj[v1]
            if g.degree(v) < 3:
                continue
            for u1, u2 in cyc_edges:
                if {u1, u2} & {v, v1}:
                    continue
                out.append((v, v1, u1, u2))
    elif kind is RewriteKind.OP_IB:
        for v1 in pendants:
            (v,) = g.adj[v1]
            if not vertex_on_cycle(g, v):
                continue
            for w1 in pendants:
                if w1 not in (v, v1):
                    out.append((v, v1, w1))
    elif kind is RewriteKind.OP_II:
        for v in range(g.n):
            if g.degree(v) < 3 or any(g.degree(u) == 1 for u in g.adj[v]):
                continue
            paths = hanging_paths(g, v)
            heads = [p[0] for p in paths if len(p) >= 2]
            for ha in heads:
                for hb in heads:
                    if ha == hb:
                        continue
                    for w1, w2 in cyc_edges:
                        out.append((v, ha, hb, w1, w2))
    elif kind is RewriteKind.OP_III:
        cycles = [b for b in deco.blocks if len(b) >= 3 and is_cycle_block(g, b)]
        for c2 in cycles:
            shared = c2 & deco.cut_vertices
            if len(shared) != 1:
                continue
            (w,) = shared
            n1, n2 = sorted(g.adj[w] & c2)
            for v1, v2 in ((n1, n2), (n2, n1)):
                (v0,) = (g.adj[v2] & c2) - {w}
                for c1 in cycles:
                    if c1 == c2 or w in c1:
                        continue
                    for u in sorted(c1):
                        if u in deco.cut_vertices:
                            continue
                        for x in sorted(g.adj[u] & c1):
                            if x not in deco.cut_vertices:
                                out.append((w, v1, v2, v0, u, x))
    elif kind is RewriteKind.OP_IV:
        cycles = [b for b in deco.blocks if len(b) >= 3 and is_cycle_block(g, b)]
        for v in sorted(deco.cut_vertices):
            at_v = [b for b in cycles if v in b]
            if len(at_v) < 2:
                continue
            for c2 in at_v:
                if len(c2 & deco.cut_vertices) != 1:
                    continue
                for c1 in at_v:
                    if c1 == c2:
                        continue
                    for v1 in sorted(g.adj[v] & c2):
                        (v0,) = (g.adj[v1] & c2) - {v}
                        for v2 in sorted(g.adj[v] & c1):
                            out.append((v, v2, v1, v0))
    elif kind is RewriteKind.PATH_MERGE:
        anchored = {
            v: [p[0] for p in hanging_paths(g, v)]
            for v in range(g.n)
            if g.degree(v) >= 3 and vertex_on_cycle(g, v)
        }
        for u, heads_u in anchored.items():
            for v, heads_v in anchored.items():
                if u == v:
                    continue
                for hu in heads_u:
                    for hv in heads_v:
                        out.append((u, v, hu, hv))
    elif kind is RewriteKind.MERGE_IDENTIFIED:
        for u in range(g.n):
            if not vertex_on_cycle(g, u):
                continue
            heads = [p[0] for p in hanging_paths(g, u)]
            for ha in heads:
                for hb in heads:
                    if ha != hb:
                        out.append((u, ha, hb))
    elif kind is RewriteKind.BLOCK_EDGE_DELETE:
        for block in deco.blocks:
            if len(block) < 4 or is_cycle_block(g, block):
                continue
            for u in sorted(block):
                for v in sorted(g.adj[u] & block):
                    if u < v:
                        out.append((u, v))
    return out
