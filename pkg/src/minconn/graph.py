"""Simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from collections.abc import Iterable


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


class MissingEdgeError(GraphError, KeyError):
    pass


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Mutating methods work in place. ``delete_vertex`` and ``contract_edge``
    compact the id space and return the old->new relabeling map so that
    callers can keep external bookkeeping (rows, layers) in sync.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, n: int = 0):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._m = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = [set(a) for a in self._adj]
        g._m = self._m
        return g

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def add_vertex(self) -> int:
        self._adj.append(set())
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def delete_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if v not in self._adj[u]:
            raise MissingEdgeError(f"edge ({u}, {v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def _compact(self, gone: int) -> dict[int, int]:
        mapping = {}
        for old in range(len(self._adj)):
            if old != gone:
                mapping[old] = old if old < gone else old - 1
        del self._adj[gone]
        self._adj = [{mapping[w] for w in nbrs} for nbrs in self._adj]
        return mapping

    def delete_vertex(self, v: int) -> dict[int, int]:
        """Remove ``v`` and its edges; returns the old->new id map."""
        self._check(v)
        for w in self._adj[v]:
            self._adj[w].discard(v)
        self._m -= len(self._adj[v])
        self._adj[v] = set()
        return self._compact(v)

    def contract_edge(self, u: int, v: int) -> dict[int, int]:
        """Merge ``v`` into ``u`` along the edge ``uv``.

        The loop and any parallel edges are dropped. Returns the old->new
        id map (``v`` maps to the new id of ``u``).
        """
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u}, {v}) not present")
        self.delete_edge(u, v)
        for w in list(self._adj[v]):
            self.delete_edge(v, w)
            if w not in self._adj[u]:
                self.add_edge(u, w)
        mapping = self._compact(v)
        mapping[v] = mapping[u]
        return mapping

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def is_complete(self) -> bool:
        n = self.n
        return self._m == n * (n - 1) // 2

    def subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph on ``vertices`` (relabeled in increasing order)."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check(v)
        mapping = {old: new for new, old in enumerate(keep)}
        h = Graph(len(keep))
        for old in keep:
            for w in self._adj[old]:
                if w in mapping and old < w:
                    h.add_edge(mapping[old], mapping[w])
        return h, mapping

    def without_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.subgraph(v for v in range(self.n) if v not in drop)[0]


def new_graph(n: int) -> Graph:
    return Graph(n)


def components(g: Graph) -> tuple[int, list[int]]:
    """Number of connected components and a component label per vertex.

    Labels are assigned in order of each component's smallest vertex.
    """
    label = [-1] * g.n
    count = 0
    for root in range(g.n):
        if label[root] != -1:
            continue
        label[root] = count
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g._adj[v]:
                if label[w] == -1:
                    label[w] = count
                    stack.append(w)
        count += 1
    return count, label


def is_connected(g: Graph) -> bool:
    return components(g)[0] <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - components(g)[0]


# Named families used as fixtures and scaffolds.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}: vertices ``0..a-1`` form one side, ``a..a+b-1`` the other."""
    return Graph.from_edges(a + b, ((u, a + w) for u in range(a) for w in range(b)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
