"""Degree-k structure of a graph: V_k, E_k, the forest F = G - V_k."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .graph import Graph, components, is_forest


@dataclass(frozen=True)
class StructureReport:
    k: int
    n: int
    m: int
    vk_set: tuple[int, ...]
    vk: int
    ek: int
    f_vertices: int
    f_edges: int
    c_f: int
    f_is_forest: bool
    delta: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["vk_set"] = list(self.vk_set)
        return d


def structure_report(g: Graph, k: int) -> StructureReport:
    if k < 1:
        raise ValueError("k must be at least 1")
    degs = g.degrees()
    vk_set = tuple(v for v in range(g.n) if degs[v] == k)
    in_vk = set(vk_set)
    ek = sum(1 for u, v in g.edges() if u in in_vk and v in in_vk)
    f, _ = g.subgraph(v for v in range(g.n) if v not in in_vk)
    return StructureReport(
        k=k,
        n=g.n,
        m=g.m,
        vk_set=vk_set,
        vk=len(vk_set),
        ek=ek,
        f_vertices=f.n,
        f_edges=f.m,
        c_f=components(f)[0],
        f_is_forest=is_forest(f),
        delta=g.max_degree(),
    )


def check_forest_lemma(g: Graph, k: int) -> bool:
    """F = G - V_k is acyclic (holds for every minimally k-connected graph)."""
    return structure_report(g, k).f_is_forest


def check_component_edge_lemma(g: Graph, k: int) -> bool:
    """c_F + |E_k| >= k (holds for every minimally k-connected graph)."""
    r = structure_report(g, k)
    return r.c_f + r.ek >= k


def oxley_identity_check(g: Graph, k: int) -> tuple[int, Fraction, bool]:
    """Compare |V_k| with (m - n + c_F + |E_k|) / (k - 1), exactly."""
    if k < 2:
        raise ValueError("the identity needs k >= 2")
    r = structure_report(g, k)
    rhs = Fraction(r.m - r.n + r.c_f + r.ek, k - 1)
    return r.vk, rhs, rhs == r.vk
