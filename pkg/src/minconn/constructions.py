"""Extremal witness families attaining the tight |V_k| bound.

``H_T(k, l)`` takes k disjoint copies of a tree T on l vertices; the k
copies of a tree vertex v form its *row*, and ``k + 1 - deg_T(v)`` new
vertices are joined to the whole row. The row plus its new vertices is the
*layer* of v, a complete bipartite graph.

Below the threshold m0 the witness ``H'`` (path scaffold) deletes small
matchings from the end layers and one degree-k vertex from each of j
layers. When the count formula gives j < 0 (possible whenever m0 is not an
integer) the missing vertices are supplied by split vertices instead, each
paid for with floor(k/2) units of the matching budget. Above the threshold,
``H''`` adds j degree-k vertices to rows and contracts i tree edges at a
leaf. Every witness is re-verified with the flow-based minimality checker
before it is returned.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .bounds import classify_parity, edge_range, large_contractions, threshold, tight_lower
from .connectivity import is_minimally_k_connected
from .graph import Graph, components, path_graph, star_graph


class ConstructionError(ValueError):
    pass


class InfeasibleParameters(ConstructionError):
    """No construction applies at (m, n, k); carries nearby feasible m values."""

    def __init__(self, message: str, nearest_below: int | None = None,
                 nearest_above: int | None = None, suggestions: tuple[int, ...] = ()):
        super().__init__(message)
        self.nearest_below = nearest_below
        self.nearest_above = nearest_above
        self.suggestions = suggestions


class VerificationError(RuntimeError):
    """A built graph failed its post-construction check."""


@dataclass(frozen=True)
class TreeScaffold:
    tree: Graph
    kind: str = "custom"

    def __post_init__(self):
        t = self.tree
        if t.n < 1:
            raise ConstructionError("scaffold tree needs at least one vertex")
        if t.m != t.n - 1 or components(t)[0] != 1:
            raise ConstructionError("scaffold must be a tree")

    @property
    def l(self) -> int:
        return self.tree.n

    @classmethod
    def path(cls, l: int) -> TreeScaffold:
        return cls(path_graph(l), "path")

    @classmethod
    def star(cls, l: int) -> TreeScaffold:
        return cls(star_graph(l), "star")


@dataclass
class ScaffoldLayout:
    """Vertex bookkeeping for ``H_T(k, l)``.

    ``rows[v][a]`` is the copy of tree vertex ``v`` in tree copy ``a``;
    ``added[v]`` lists the vertices joined to the row of ``v``.
    """

    k: int
    rows: list[list[int]]
    added: list[list[int]]

    def layer(self, v: int) -> list[int]:
        return self.rows[v] + self.added[v]

    def layer_of(self) -> dict[int, int]:
        return {x: v for v in range(len(self.rows)) for x in self.layer(v)}


def build_base(scaffold: TreeScaffold, k: int) -> tuple[Graph, ScaffoldLayout]:
    """``H_T(k, l)``: n = (2k-1)l + 2, m = k(kl+1), |V_k| = (k-1)l + 2."""
    if k < 2:
        raise ConstructionError("k must be at least 2")
    tree, l = scaffold.tree, scaffold.l
    if tree.max_degree() > k + 1:
        raise ConstructionError(f"scaffold max degree {tree.max_degree()} exceeds k+1={k + 1}")
    rows = [[v * k + a for a in range(k)] for v in range(l)]
    g = Graph(l * k)
    for u, v in tree.edges():
        for a in range(k):
            g.add_edge(rows[u][a], rows[v][a])
    added = []
    for v in range(l):
        extra = []
        for _ in range(k + 1 - tree.degree(v)):
            x = g.add_vertex()
            for r in rows[v]:
                g.add_edge(x, r)
            extra.append(x)
        added.append(extra)
    return g, ScaffoldLayout(k, rows, added)


@dataclass(frozen=True)
class ConstructionPlan:
    regime: str
    k: int
    n: int
    m: int
    l: int
    i: int
    j: int
    i_t: int | None = None
    i_s: int | None = None
    splits: int = 0

    @property
    def expected_vk(self) -> int:
        if self.regime == "small_m":
            return (self.k - 1) * (self.l + self.j) + 2 + 2 * self.i
        return (self.k - 1) * self.l + 2 + self.j

    def to_dict(self) -> dict:
        d = asdict(self)
        d["expected_vk"] = self.expected_vk
        return d


@dataclass
class Witness:
    graph: Graph
    plan: ConstructionPlan
    expected_vk: int
    verified: bool = field(default=False)


def _precheck(m: int, n: int, k: int) -> None:
    if k < 2:
        raise ConstructionError("k must be at least 2")
    if n <= 2 * k:
        raise ConstructionError(f"constructions need n > 2k, got n={n}, k={k}")
    lo, hi = edge_range(n, k)
    if not lo <= m <= hi:
        raise InfeasibleParameters(f"m={m} outside edge range [{lo}, {hi}]")


def plan_small_m(m: int, n: int, k: int) -> ConstructionPlan:
    """Parameters of ``H'_T(k, l, i)`` for m at or below the threshold."""
    _precheck(m, n, k)
    if m > threshold(n, k):
        raise ConstructionError(f"m={m} lies above the threshold {threshold(n, k)}")
    i = (k * (n - 1) - m) % (k * (k - 1))
    half = k // 2
    if i > 2 * half:
        raise InfeasibleParameters(f"parity infeasible: residue {i} exceeds 2*floor(k/2)={2 * half}")
    l, rem = divmod(k * (n - 1) - i - m, k * (k - 1))
    assert rem == 0
    j = l * (2 * k - 1) - n + 2
    if l < 1:
        raise ConstructionError(f"derived l={l} < 1")
    if j > l:
        raise ConstructionError(f"derived j={j} exceeds l={l}")
    if j == l - 1 and i > half:
        raise ConstructionError(f"j = l-1 requires i <= floor(k/2), got i={i}")
    if j == l and i != 0:
        raise ConstructionError(f"j = l requires i = 0, got i={i}")
    splits = max(0, -j)
    units = i - splits * half
    if units < 0:
        raise ConstructionError(f"j={j} needs {splits} split vertices but the residue i={i} covers fewer")
    if splits and k % 2 and splits > l:
        raise ConstructionError(f"odd k allows one split vertex per layer, need {splits} > l={l}")
    return ConstructionPlan("small_m", k, n, m, l, i, j, i_t=min(units, half),
                            i_s=max(0, units - half), splits=splits)


def plan_large_m(m: int, n: int, k: int) -> ConstructionPlan:
    """Parameters of ``H''_T(k, l, i, j)`` for m at or above the threshold."""
    _precheck(m, n, k)
    if m < threshold(n, k):
        raise ConstructionError(f"m={m} lies below the threshold {threshold(n, k)}")
    if m >= edge_range(n, k)[1]:
        raise InfeasibleParameters("m = kn-C(k+1,2) is attained only by K_{k+1}")
    i = large_contractions(m, n, k)
    if i is None:
        raise InfeasibleParameters("parity infeasible: k(n-1)-m is not divisible by k-1")
    if 1 <= i < k / 2 and n < 3 * k - 2:
        raise InfeasibleParameters(f"i={i} contractions need n >= 3k-2={3 * k - 2}")
    l, rem = divmod(k * (n - 1) - m + (k - 1) * i, k * (k - 1))
    assert rem == 0
    if l < (2 if i else 1):
        raise InfeasibleParameters(f"derived l={l} too small for i={i} contractions")
    j = n - 2 + i - (2 * k - 1) * l
    if j < 0:
        raise ConstructionError(f"derived j={j} < 0")
    return ConstructionPlan("large_m", k, n, m, l, i, j)


def _matching_pairs(k: int, end: str, x: int) -> list[tuple[int, int]]:
    # (kept copy, transferred copy) per unit; s mirrors t so that for l = 2
    # the two ends never move the tree edge of the same copy.
    if end == "t":
        return [(2 * z - 2, 2 * z - 1) for z in range(1, x + 1)]
    return [(2 * z - 1, 2 * z - 2) for z in range(1, x + 1)]


def delete_x_matching(g: Graph, layout: ScaffoldLayout, end: str, x: int) -> Graph:
    """Delete an x-matching in the K_{k,k} layer of path end ``s`` or ``t``.

    For z = 1..x the tree edge at row vertex ``v_{2z}`` moves to the z-th
    added vertex ``b_z``, then the edge ``v_{2z-1} b_z`` is removed. Each
    step lowers m by one and puts two more vertices at degree k. At ``s``
    the row is read in mirrored pairs (``v_{2z}`` is copy 2z-1).
    """
    k, l = layout.k, len(layout.rows)
    if end not in ("s", "t"):
        raise ConstructionError(f"end must be 's' or 't', got {end!r}")
    if x > k // 2:
        raise ConstructionError(f"x={x} exceeds floor(k/2)={k // 2}")
    if x == 0:
        return g
    if l < 2:
        raise ConstructionError("matching deletion needs a K_{k,k} end layer (l >= 2)")
    v, nbr = (0, 1) if end == "s" else (l - 1, l - 2)
    row, black = layout.rows[v], layout.added[v]
    for z, (keep, moved) in enumerate(_matching_pairs(k, end, x)):
        odd, even, b = row[keep], row[moved], black[z]
        w = layout.rows[nbr][moved]
        g.delete_edge(even, w)
        g.add_edge(b, w)
        g.delete_edge(odd, b)
    return g


def add_split_vertex(g: Graph, whites: list[int], blacks: list[int], k: int) -> int:
    """Insert a degree-k vertex into a layer without changing other degrees.

    The new vertex replaces floor(k/2) disjoint white-black edges by paths
    through itself; for odd k it also takes a white vertex that an earlier
    matching step left at degree k, lifting it back to k+1. Net effect: n+1,
    m+ceil(k/2), and |V_k| grows by 1 (even k) or stays put (odd k). For
    k = 2 this is an edge subdivision.
    """
    half = k // 2
    pairs: list[tuple[int, int]] = []
    used: set[int] = set()
    for w in reversed(whites):
        if len(pairs) == half:
            break
        for b in reversed(blacks):
            if b not in used and g.has_edge(w, b):
                pairs.append((w, b))
                used.update((w, b))
                break
    extra = []
    if k % 2:
        extra = [w for w in whites if w not in used and g.degree(w) == k][:1]
    if len(pairs) < half or len(extra) < k % 2:
        raise ConstructionError("layer too small for a split vertex")
    x = g.add_vertex()
    for w, b in pairs:
        g.delete_edge(w, b)
        g.add_edge(x, w)
        g.add_edge(x, b)
    for y in extra:
        g.add_edge(x, y)
    return x


def _finish(g: Graph, plan: ConstructionPlan) -> Witness:
    k = plan.k
    vk = sum(1 for d in g.degrees() if d == k)
    expected = plan.expected_vk
    problems = []
    if (g.n, g.m) != (plan.n, plan.m):
        problems.append(f"built (n, m)=({g.n}, {g.m}), planned ({plan.n}, {plan.m})")
    if vk != expected:
        problems.append(f"|V_k|={vk}, expected {expected}")
    if expected != tight_lower(plan.m, plan.n, k):
        problems.append(f"expected |V_k|={expected} differs from the tight bound")
    if not problems:
        report = is_minimally_k_connected(g, k)
        if not report.is_k_connected:
            problems.append(f"graph is not {k}-connected")
        elif not report.is_minimal:
            problems.append(f"edge {report.violating_edge} can be removed")
    if problems:
        raise VerificationError(f"witness for {plan}: " + "; ".join(problems))
    return Witness(g, plan, expected, verified=True)


def build_small_m_l1(plan: ConstructionPlan) -> Witness:
    """l = 1 corner: rewire K_{k,k+1} instead of deleting layer matchings.

    For each of the ``i - splits*floor(k/2)`` units the edges
    ``w_{2z-1} b_{2z-1}`` and ``w_{2z} b_{2z}`` are replaced by
    ``b_{2z-1} b_{2z}``; split vertices then enter the same layer.
    """
    k = plan.k
    units = plan.i - plan.splits * (k // 2)
    if plan.l != 1 or plan.j > 0 or not 0 <= units <= k // 2:
        raise ConstructionError(f"l=1 rewiring does not apply to {plan}")
    g, layout = build_base(TreeScaffold.path(1), k)
    white, black = layout.rows[0], layout.added[0]
    for z in range(1, units + 1):
        g.delete_edge(white[2 * z - 2], black[2 * z - 2])
        g.delete_edge(white[2 * z - 1], black[2 * z - 1])
        g.add_edge(black[2 * z - 2], black[2 * z - 1])
    for _ in range(plan.splits):
        add_split_vertex(g, white, black, k)
    return _finish(g, plan)


def _deletion_layers(l: int, j: int) -> list[int]:
    order = list(range(1, l - 1)) + [0] + ([l - 1] if l > 1 else [])
    return order[:max(j, 0)]


def build_small_m(plan: ConstructionPlan) -> Witness:
    if plan.regime != "small_m":
        raise ConstructionError("not a small-m plan")
    if plan.l == 1:
        return build_small_m_l1(plan)
    k = plan.k
    g, layout = build_base(TreeScaffold.path(plan.l), k)
    delete_x_matching(g, layout, "t", plan.i_t)
    delete_x_matching(g, layout, "s", plan.i_s)
    # t and s first: for odd k the split needs a white lowered by a matching step
    order = [plan.l - 1, 0] + list(range(1, plan.l - 1))
    for q in range(plan.splits):
        v = order[q % plan.l]
        add_split_vertex(g, layout.rows[v], layout.added[v], k)
    doomed = []
    for v in _deletion_layers(plan.l, plan.j):
        candidates = [x for x in layout.added[v] if g.degree(x) == k]
        if not candidates:
            raise ConstructionError(f"layer {v} has no added vertex of degree k")
        doomed.append(min(candidates))
    for x in sorted(doomed, reverse=True):
        before = g.m
        g.delete_vertex(x)
        assert before - g.m == k
    return _finish(g, plan)


def build_large_m(plan: ConstructionPlan) -> Witness:
    if plan.regime != "large_m":
        raise ConstructionError("not a large-m plan")
    k, l, i = plan.k, plan.l, plan.i
    if i and l < 2:
        raise ConstructionError("contractions need l >= 2")
    g, layout = build_base(TreeScaffold.path(l), k)
    for q in range(plan.j):
        x = g.add_vertex()
        for r in layout.rows[q % l]:
            g.add_edge(x, r)
    pairs = [(layout.rows[l - 2][a], layout.rows[l - 1][a]) for a in range(i)]
    while pairs:
        keep, gone = pairs.pop(0)
        before = g.m
        mapping = g.contract_edge(keep, gone)
        if before - g.m != 1:
            raise VerificationError("tree-edge contraction created a parallel edge")
        pairs = [(mapping[a], mapping[b]) for a, b in pairs]
    return _finish(g, plan)


def _plan(m: int, n: int, k: int) -> ConstructionPlan:
    pc = classify_parity(m, n, k)
    if pc.regime == "large_m":
        return plan_large_m(m, n, k)
    if pc.regime == "both":
        try:
            return plan_small_m(m, n, k)
        except InfeasibleParameters:
            return plan_large_m(m, n, k)
    return plan_small_m(m, n, k)


def plan_for(m: int, n: int, k: int) -> ConstructionPlan:
    """Plan for either regime, dispatching on exact comparison with m0."""
    return _plan(m, n, k)


def constructible(m: int, n: int, k: int) -> bool:
    try:
        _plan(m, n, k)
    except ConstructionError:
        return False
    return True


def nearest_constructible(m: int, n: int, k: int) -> tuple[int | None, int | None, tuple[int, ...]]:
    """Nearest plannable m below and above, and the two closest overall."""
    lo, hi = edge_range(n, k)
    ok = [x for x in range(lo, hi + 1) if x != m and constructible(x, n, k)]
    below = max((x for x in ok if x < m), default=None)
    above = min((x for x in ok if x > m), default=None)
    closest = tuple(sorted(sorted(ok, key=lambda x: (abs(x - m), x))[:2]))
    return below, above, closest


def build(plan: ConstructionPlan) -> Witness:
    return build_small_m(plan) if plan.regime == "small_m" else build_large_m(plan)


def construct_witness(m: int, n: int, k: int) -> Witness:
    """A verified minimally k-connected graph with |V_k| = tight_lower(m, n, k)."""
    if k < 2:
        raise ConstructionError("k must be at least 2")
    if n <= 2 * k:
        raise ConstructionError(f"constructions need n > 2k, got n={n}, k={k}")
    try:
        plan = _plan(m, n, k)
    except InfeasibleParameters as exc:
        below, above, closest = nearest_constructible(m, n, k)
        raise InfeasibleParameters(str(exc), below, above, closest) from exc
    return build(plan)


def figure_1a() -> Witness:
    """``H_T(3, 4)`` on the star with four vertices: (n, m, |V_3|) = (22, 39, 10)."""
    g, _ = build_base(TreeScaffold.star(4), 3)
    plan = ConstructionPlan("small_m", 3, g.n, g.m, 4, 0, 0, 0, 0)
    return _finish(g, plan)


def figure_1b() -> Witness:
    """``H'_T(5, 3, 3)`` with j = 1: (n, m, |V_5|) = (28, 72, 24)."""
    return build_small_m(plan_small_m(72, 28, 5))


__all__ = [
    "ConstructionError", "ConstructionPlan", "InfeasibleParameters", "ScaffoldLayout",
    "TreeScaffold", "VerificationError", "Witness", "build", "build_base", "build_large_m",
    "add_split_vertex", "build_small_m", "build_small_m_l1", "construct_witness", "constructible",
    "delete_x_matching", "figure_1a", "figure_1b", "nearest_constructible", "plan_for",
    "plan_large_m", "plan_small_m",
]
