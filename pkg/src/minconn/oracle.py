"""Brute-force ground truth for small n.

Graphs are adjacency bitmasks. Labeled graphs are enumerated vertex by
vertex (each vertex picks its higher-numbered neighbours), pruned only by
min degree >= k and the edge range. Minimal k-connectivity is decided by
trying every vertex set of size < k as a separator, which shares no code
with the flow-based checker in :mod:`minconn.connectivity`.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import bounds
from .graph import Graph
from .graph_io import to_graph6
from .structure import structure_report

MAX_N = 8


class EnvelopeError(ValueError):
    pass


def _check_envelope(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise EnvelopeError(f"exhaustive search supports 1 <= n <= {MAX_N}, got n={n}")


def to_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]


def from_masks(adj: list[int] | tuple[int, ...]) -> Graph:
    n = len(adj)
    return Graph.from_edges(n, ((u, w) for u in range(n) for w in range(u + 1, n) if adj[u] >> w & 1))


def _connected(adj, alive: int) -> bool:
    if not alive:
        return True
    seen = frontier = alive & -alive
    while frontier:
        b = frontier & -frontier
        frontier ^= b
        nb = adj[b.bit_length() - 1] & alive & ~seen
        seen |= nb
        frontier |= nb
    return seen == alive


def _reaches(adj, alive: int, u: int, v: int) -> bool:
    seen = frontier = 1 << u
    target = 1 << v
    while frontier:
        if seen & target:
            return True
        b = frontier & -frontier
        frontier ^= b
        nb = adj[b.bit_length() - 1] & alive & ~seen
        seen |= nb
        frontier |= nb
    return bool(seen & target)


def _sets_up_to(n: int, size: int) -> list[list[int]]:
    """Vertex masks grouped by popcount 0..size."""
    return [[sum(1 << v for v in c) for c in combinations(range(n), s)] for s in range(size + 1)]


def _k_connected(adj, n: int, k: int, sets) -> bool:
    if n <= k:
        return False
    full = (1 << n) - 1
    return all(_connected(adj, full & ~s) for group in sets[:k] for s in group)


def _minimally_k_connected(adj, n: int, k: int, sets) -> bool:
    if not _k_connected(adj, n, k, sets):
        return False
    full = (1 << n) - 1
    adj = list(adj)
    for u in range(n):
        for v in range(u + 1, n):
            if not adj[u] >> v & 1:
                continue
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            pair = (1 << u) | (1 << v)
            critical = any(
                not _reaches(adj, full & ~s, u, v) for s in sets[k - 1] if not s & pair
            )
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            if not critical:
                return False
    return True


def brute_force_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects ``g``; ``n - 1`` if none."""
    n = g.n
    adj = to_masks(g)
    full = (1 << n) - 1
    for size in range(n - 1):
        for c in combinations(range(n), size):
            s = sum(1 << v for v in c)
            if not _connected(adj, full & ~s):
                return size
    return max(n - 1, 0)


def brute_force_is_k_connected(g: Graph, k: int) -> bool:
    return _k_connected(to_masks(g), g.n, k, _sets_up_to(g.n, max(k - 1, 0)))


def brute_force_is_minimally_k_connected(g: Graph, k: int) -> bool:
    return _minimally_k_connected(to_masks(g), g.n, k, _sets_up_to(g.n, max(k - 1, 0)))


def _upper_subsets(n: int) -> list[list[tuple[int, int]]]:
    out = []
    for v in range(n):
        higher = range(v + 1, n)
        opts = []
        for size in range(len(higher) + 1):
            for c in combinations(higher, size):
                opts.append((sum(1 << w for w in c), size))
        out.append(opts)
    return out


def _degree_feasible(n: int, k: int, lo: int, hi: int, prefix: int | None = None) -> Iterator[tuple[int, ...]]:
    """All labeled graphs with min degree >= k and lo <= m <= hi.

    With ``prefix`` the neighbourhood of vertex 0 is fixed to that mask.
    """
    subsets = _upper_subsets(n)
    adj = [0] * n

    def rec(v: int, m: int):
        if v == n:
            if m >= lo:
                yield tuple(adj)
            return
        need = k - adj[v].bit_count()
        spare = n - v - 2
        opts = subsets[v] if not (v == 0 and prefix is not None) else [(prefix, prefix.bit_count())]
        for mask, c in opts:
            if c < need or m + c > hi:
                continue
            adj[v] |= mask
            w_bits = mask
            while w_bits:
                b = w_bits & -w_bits
                w_bits ^= b
                adj[b.bit_length() - 1] |= 1 << v
            deficit = 0
            ok = True
            for w in range(v + 1, n):
                d = k - adj[w].bit_count()
                if d > spare:
                    ok = False
                    break
                if d > 0:
                    deficit += d
            if ok and m + c + (deficit + 1) // 2 <= hi:
                yield from rec(v + 1, m + c)
            adj[v] ^= mask
            w_bits = mask
            while w_bits:
                b = w_bits & -w_bits
                w_bits ^= b
                adj[b.bit_length() - 1] ^= 1 << v

    yield from rec(0, 0)


def _minimal_graphs(n: int, k: int, prefix: int | None = None) -> Iterator[tuple[int, ...]]:
    lo, hi = bounds.edge_range(n, k)
    sets = _sets_up_to(n, k - 1)
    for adj in _degree_feasible(n, k, lo, hi, prefix):
        if _minimally_k_connected(adj, n, k, sets):
            yield adj


def enumerate_min_k_connected(n: int, k: int, on_found: Callable[[Graph], None] | None = None) -> int:
    """Visit every labeled minimally k-connected graph on n vertices once."""
    _check_envelope(n)
    if k < 1:
        raise ValueError("k must be at least 1")
    count = 0
    for adj in _minimal_graphs(n, k):
        count += 1
        if on_found is not None:
            on_found(from_masks(adj))
    return count


@dataclass
class TableRow:
    min_vk: int
    witness: Graph
    graph_count: int


@dataclass
class TightnessTable:
    n: int
    k: int
    rows: dict[int, TableRow] = field(default_factory=dict)

    def min_vk(self) -> dict[int, int]:
        return {m: r.min_vk for m, r in sorted(self.rows.items())}


def audit_graph(g: Graph, k: int) -> list[str]:
    """Every structural lemma and bound that must hold for a minimally k-connected g."""
    r = structure_report(g, k)
    n, m = g.n, g.m
    failures = []
    if not r.f_is_forest:
        failures.append("F is not a forest")
    if r.c_f + r.ek < k:
        failures.append(f"c_F + |E_k| = {r.c_f + r.ek} < k")
    lo, hi = bounds.edge_range(n, k)
    if not lo <= m <= hi:
        failures.append(f"m={m} outside [{lo}, {hi}]")
    if r.vk < k + 1 or r.vk < r.delta:
        failures.append(f"|V_k|={r.vk} below k+1 or Delta={r.delta}")
    if k >= 2:
        if (k - 1) * r.vk != m - n + r.c_f + r.ek:
            failures.append("|V_k| != (m - n + c_F + |E_k|)/(k-1)")
        checks = {
            "mader": bounds.mader_lower(n, k),
            "mader_generalized": bounds.mader_generalized_lower(n, k, r.c_f, r.ek, r.delta),
            "oxley": bounds.oxley_lower(m, n, k),
            "simple": bounds.simple_lower(m, n, k),
            "tight": bounds.tight_lower(m, n, k),
        }
        for name, value in checks.items():
            if r.vk < value:
                failures.append(f"|V_k|={r.vk} < {name} bound {value}")
    return failures


def _scan(n: int, k: int, prefix: int | None, audit: bool):
    rows: dict[int, list] = {}
    violations = []
    for adj in _minimal_graphs(n, k, prefix):
        m = sum(a.bit_count() for a in adj) // 2
        vk = sum(1 for a in adj if a.bit_count() == k)
        row = rows.get(m)
        if row is None or vk <= row[0]:
            g6 = to_graph6(from_masks(adj)).strip()
            if row is None:
                rows[m] = [vk, g6, 0]
            elif (vk, g6) < (row[0], row[1]):
                row[0], row[1] = vk, g6
        rows[m][2] += 1
        if audit:
            g = from_masks(adj)
            for msg in audit_graph(g, k):
                violations.append((to_graph6(g).strip(), msg))
    return rows, violations


def _merge(parts) -> tuple[dict[int, list], list]:
    rows: dict[int, list] = {}
    violations = []
    for part_rows, part_viol in parts:
        violations.extend(part_viol)
        for m, (vk, g6, count) in part_rows.items():
            cur = rows.get(m)
            if cur is None:
                rows[m] = [vk, g6, count]
            else:
                if (vk, g6) < (cur[0], cur[1]):
                    cur[0], cur[1] = vk, g6
                cur[2] += count
    violations.sort()
    return rows, violations


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MINCONN_THREADS", "1")))
    except ValueError:
        return 1


def _run(n: int, k: int, audit: bool, workers: int | None):
    _check_envelope(n)
    if k < 1:
        raise ValueError("k must be at least 1")
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        return _merge([_scan(n, k, None, audit)])
    prefixes = [mask for mask, c in _upper_subsets(n)[0] if c >= k]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan, [n] * len(prefixes), [k] * len(prefixes), prefixes,
                              [audit] * len(prefixes)))
    return _merge(parts)


def _table(n: int, k: int, rows: dict[int, list]) -> TightnessTable:
    from .graph_io import from_graph6

    table = TightnessTable(n, k)
    for m in sorted(rows):
        vk, g6, count = rows[m]
        table.rows[m] = TableRow(vk, from_graph6(g6), count)
    return table


def min_vk_table(n: int, k: int, workers: int | None = None) -> TightnessTable:
    """Per edge count, the least |V_k| over all minimally k-connected graphs."""
    rows, _ = _run(n, k, False, workers)
    return _table(n, k, rows)


@dataclass
class TightnessReport:
    n: int
    k: int
    table: TightnessTable
    graphs_checked: int
    violations: list[tuple[str, str]]
    equality_checked: list[int]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_tightness(n: int, k: int, workers: int | None = None) -> TightnessReport:
    """Check every bound on every graph and equality wherever a witness is expected."""
    if k < 2:
        raise ValueError("tightness is stated for k >= 2")
    rows, violations = _run(n, k, True, workers)
    table = _table(n, k, rows)
    checked = []
    if n > 2 * k:
        lo, hi = bounds.edge_range(n, k)
        for m in range(lo, hi + 1):
            if not bounds.is_tight_feasible(m, n, k):
                continue
            checked.append(m)
            tight = bounds.tight_lower(m, n, k)
            row = table.rows.get(m)
            if row is None:
                violations.append(("", f"m={m}: no minimally {k}-connected graph, bound {tight} expected tight"))
            elif row.min_vk != tight:
                violations.append((to_graph6(row.witness).strip(),
                                   f"m={m}: least |V_k|={row.min_vk} but tight bound is {tight}"))
    return TightnessReport(n, k, table, sum(r.graph_count for r in table.rows.values()),
                           violations, checked)

