"""Vertex connectivity via Menger's theorem on a vertex-split unit flow network.

Every vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity 1 and every
edge ``uv`` becomes two unit arcs ``u_out -> v_in`` and ``v_out -> u_in``.
The maximum ``s_out -> t_in`` flow equals the number of internally
vertex-disjoint s-t paths, which equals the size of a minimum s-t separator.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError


@dataclass(frozen=True)
class ConnectivityCertificate:
    kappa: int
    witness_separator: tuple[int, ...] | None = None


@dataclass
class MinimalityReport:
    k: int
    is_k_connected: bool
    is_minimal: bool
    violating_edge: tuple[int, int] | None = None
    per_edge_separator: dict[tuple[int, int], tuple[int, ...]] | None = field(default=None)


def _base_network(g: Graph) -> list[dict[int, int]]:
    n = g.n
    cap: list[dict[int, int]] = [{} for _ in range(2 * n + 1)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = 1
        cap[2 * v + 1][2 * u] = 1
    return cap


def _run_flow(
    base: list[dict[int, int]],
    source: int,
    sink: int,
    cutoff: int | None,
) -> tuple[int, set[int] | None]:
    """Unit augmenting-path max flow; returns (value, source side) or (value, None) on cutoff."""
    cap = [dict(d) for d in base]
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow, set(parent)
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] = cap[b].get(a, 0) + 1
            b = a
        flow += 1
    return flow, None


def _cut_vertices(base: list[dict[int, int]], reach: set[int], source_vertex: int | None) -> tuple[int, ...]:
    # Map each saturated cut arc to one vertex; an edge arc leaving the source
    # is charged to its head so the source itself is never in the separator.
    sep = set()
    for a in reach:
        for b, c in base[a].items():
            if c > 0 and b not in reach:
                if a % 2 == 0 and b == a + 1:
                    sep.add(a // 2)
                elif a == len(base) - 1 or a // 2 == source_vertex:
                    sep.add(b // 2)
                else:
                    sep.add(a // 2)
    return tuple(sorted(sep))


def _pair_flow(base, s: int, t: int, cutoff: int | None) -> tuple[int, tuple[int, ...] | None]:
    value, reach = _run_flow(base, 2 * s + 1, 2 * t, cutoff)
    if reach is None:
        return value, None
    sep = _cut_vertices(base, reach, s)
    assert len(sep) == value
    return value, sep


def _check_pair(g: Graph, s: int, t: int) -> None:
    for v in (s, t):
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    if s == t:
        raise GraphError("local connectivity needs two distinct vertices")
    if g.has_edge(s, t):
        raise GraphError(f"vertices {s} and {t} are adjacent; remove the edge first")


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s, t``.

    With ``cutoff`` the search stops as soon as that many paths are found.
    """
    _check_pair(g, s, t)
    return _pair_flow(_base_network(g), s, t, cutoff)[0]


def minimum_separator(g: Graph, s: int, t: int) -> tuple[int, ...]:
    """A minimum vertex set separating non-adjacent ``s`` and ``t``."""
    _check_pair(g, s, t)
    return _pair_flow(_base_network(g), s, t, None)[1]


def vertex_connectivity(g: Graph) -> ConnectivityCertificate:
    """Exact vertex connectivity over all non-adjacent pairs.

    Complete graphs get ``n - 1`` and no separator. Otherwise the returned
    separator is the lexicographically smallest among the per-pair minimum
    cuts that attain the minimum.
    """
    n = g.n
    if n == 0:
        raise GraphError("vertex connectivity needs n >= 1")
    if g.is_complete():
        return ConnectivityCertificate(n - 1, None)
    base = _base_network(g)
    best: tuple[int, tuple[int, ...]] | None = None
    for s, t in combinations(range(n), 2):
        if g.has_edge(s, t):
            continue
        cutoff = None if best is None else best[0] + 1
        value, sep = _pair_flow(base, s, t, cutoff)
        if sep is None:
            continue
        if best is None or (value, sep) < best:
            best = (value, sep)
    return ConnectivityCertificate(best[0], best[1])


def _hub_flow(g: Graph, base, hub_nbrs: range, t: int, k: int) -> int:
    # Extra node 2n plays a new vertex adjacent to every vertex in hub_nbrs.
    hub = len(base) - 1
    net = list(base)
    net[hub] = {2 * a: 1 for a in hub_nbrs}
    return _run_flow(net, hub, 2 * t, k)[0]


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``n > k`` and no fewer than ``k`` vertices disconnect ``g``.

    Uses Even's pair family: all pairs among vertices ``0..k-1``, then for
    each later vertex ``j`` a flow from a hub joined to ``0..j-1``. That is
    ``O(n + k^2)`` flows, each stopped after ``k`` augmentations.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if n <= k:
        return False
    if g.min_degree() < k:
        return False
    base = _base_network(g)
    for s, t in combinations(range(k), 2):
        if not g.has_edge(s, t) and _pair_flow(base, s, t, k)[0] < k:
            return False
    for j in range(k, n):
        if _hub_flow(g, base, range(j), j, k) < k:
            return False
    return True


def is_minimally_k_connected(g: Graph, k: int, separators: bool = False) -> MinimalityReport:
    """Decide minimal k-connectivity with one flow per edge.

    For k-connected ``g``, ``g - uv`` stays k-connected iff ``u`` and ``v``
    are still joined by ``k`` internally disjoint paths in ``g - uv``.
    With ``separators=True`` the report carries, for every edge, a
    (k-1)-separator of ``g - e`` that splits its endpoints.
    """
    if not is_k_connected(g, k):
        return MinimalityReport(k, False, False)
    base = _base_network(g)
    seps: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v in g.edges():
        uo, vi, vo, ui = 2 * u + 1, 2 * v, 2 * v + 1, 2 * u
        net = list(base)
        net[uo] = {b: c for b, c in base[uo].items() if b != vi}
        net[vo] = {b: c for b, c in base[vo].items() if b != ui}
        value, sep = _pair_flow(net, u, v, None if separators else k)
        if value >= k:
            return MinimalityReport(k, True, False, violating_edge=(u, v))
        if separators:
            seps[(u, v)] = sep
    return MinimalityReport(k, True, True, per_edge_separator=seps if separators else None)
