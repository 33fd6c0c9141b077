"""Simple undirected graphs on dense integer ids, with bit-exact graph6 I/O.

Graphs are immutable: every editing operation returns a new instance and the
original is never touched, so values can be shared freely between workers.
Vertex ids are 0..n-1 and are preserved by edits (no compaction), which keeps
before/after degree comparisons stable across rewrites.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeAbsent,
    EmptyGraph,
    MalformedEncoding,
    SelfLoop,
    UnsupportedSize,
    VertexOutOfRange,
)

G6_HEADER = b">>graph6<<"
G6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus one neighbor set per vertex."""

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n <= 0:
            raise EmptyGraph(f"graph needs at least one vertex, got n={n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside [0,{n})")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge ({u},{v}) listed twice")
            seen.add(key)
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in sets))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside [0,{self.n})")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def is_connected(self) -> bool:
        if self.n == 0:
            raise EmptyGraph("connectivity is undefined on zero vertices")
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # ------------------------------------------------------------------
    # pure edits
    # ------------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if v in self.adj[u]:
            raise DuplicateEdge(f"edge ({u},{v}) already present")
        rows = list(self.adj)
        rows[u] = rows[u] | {v}
        rows[v] = rows[v] | {u}
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise EdgeAbsent(f"edge ({u},{v}) not present")
        rows = list(self.adj)
        rows[u] = rows[u] - {v}
        rows[v] = rows[v] - {u}
        return Graph(self.n, tuple(rows))

    def subdivide_edge(self, u: int, v: int) -> "Graph":
        """Replace edge uv by u-w-v where w is the fresh vertex id n."""
        if not self.has_edge(u, v):
            raise EdgeAbsent(f"edge ({u},{v}) not present")
        w = self.n
        rows = list(self.adj)
        rows[u] = (rows[u] - {v}) | {w}
        rows[v] = (rows[v] - {u}) | {w}
        rows.append(frozenset((u, v)))
        return Graph(self.n + 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation (perm[old] = new) to all vertex ids."""
        if sorted(perm) != list(range(self.n)):
            raise VertexOutOfRange("relabeling is not a permutation of the ids")
        rows: list[frozenset[int]] = [frozenset()] * self.n
        for v in range(self.n):
            rows[perm[v]] = frozenset(perm[u] for u in self.adj[v])
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


# ----------------------------------------------------------------------
# small factories
# ----------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRange(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return Graph.build(n, [(0, i) for i in range(1, n)])


# ----------------------------------------------------------------------
# graph6
# ----------------------------------------------------------------------
#
# Encoding for n <= 62: one size byte (n + 63), then the upper-triangle
# adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
# into 6-bit groups (zero-padded), each group emitted as value + 63.


def emit_g6(g: Graph) -> bytes:
    if g.n > G6_MAX_N:
        raise UnsupportedSize(f"graph6 size byte supports n <= {G6_MAX_N}, got {g.n}")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_g6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            raw = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise MalformedEncoding("graph6 data must be ASCII") from exc
    else:
        raw = bytes(data)
    raw = raw.strip()
    if raw.startswith(G6_HEADER):
        raw = raw[len(G6_HEADER):].strip()
    if not raw:
        raise MalformedEncoding("empty graph6 string")
    size = raw[0]
    if size == 126:
        raise UnsupportedSize("multi-byte graph6 sizes (n > 62) are not supported")
    if not 63 <= size <= 125:
        raise MalformedEncoding(f"invalid graph6 size byte {size}")
    n = size - 63
    if n == 0:
        raise EmptyGraph("graph6 encodes zero vertices")
    nbits = n * (n - 1) // 2
    body = raw[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedEncoding(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}"
        )
    bits: list[int] = []
    for byte in body:
        if not 63 <= byte <= 126:
            raise MalformedEncoding(f"invalid graph6 body byte {byte}")
        val = byte - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedEncoding("nonzero padding bits in graph6 encoding")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.build(n, edges)
