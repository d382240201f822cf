"""Simple undirected graphs and the deterministic family generators.

A graph is a vertex count ``p`` plus an ordered list of edges.  Edge order is
part of every generator's contract: labelings are stored as arrays aligned
with it, so two calls with equal arguments must produce identical edge lists.
"""

from __future__ import annotations

from dataclasses import dataclass

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..p-1``.

    Invariants (enforced on construction): endpoints in range, no self-loops,
    no duplicate edges as unordered pairs.
    """

    p: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.p}")
        seen: set[frozenset[int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise ValueError(
                    f"edge ({u},{v}) has an endpoint out of range [0, {self.p})"
                )
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)

    @property
    def q(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.p
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incidence(self) -> list[list[int]]:
        """For each vertex, the list of edge indices incident to it."""
        inc: list[list[int]] = [[] for _ in range(self.p)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def edge_set(self) -> set[frozenset[int]]:
        """Edges as unordered pairs, for order-insensitive comparison."""
        return {frozenset(e) for e in self.edges}


def make_graph(p: int, edges) -> Graph:
    """Validating constructor; accepts any iterable of (u, v) pairs."""
    return Graph(p, tuple((int(u), int(v)) for u, v in edges))


def fan(m: int, n: int) -> Graph:
    """Join of ``m`` isolated hub vertices with the path on ``n`` vertices.

    Vertices 0..m-1 are the hubs, m..m+n-1 the path in index order.  The edge
    list starts with all hub-path edges (hub-major, path-minor), followed by
    the path edges; p = m+n and q = m*n + (n-1).  The usual fan is m=1.
    """
    if m < 1:
        raise ValueError(f"fan requires m >= 1, got {m}")
    if n < 1:
        raise ValueError(f"fan requires n >= 1, got {n}")
    hub_edges = [(h, m + i) for h in range(m) for i in range(n)]
    path_edges = [(m + i, m + i + 1) for i in range(n - 1)]
    return Graph(m + n, tuple(hub_edges + path_edges))


def cycle(n: int) -> Graph:
    """Cycle on ``n`` vertices; edges (i, i+1 mod n) in index order."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices; edges (i, i+1)."""
    if n < 1:
        raise ValueError(f"path requires n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
