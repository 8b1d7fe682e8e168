"""Exact lower bounds on |V_k| for minimally k-connected graphs.

All arithmetic is on integers and :class:`fractions.Fraction`; the
threshold ``m0 = k(kn-1)/(2k-1)`` is generically non-integral, so every
regime decision is an exact rational comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _need_k2(k: int) -> None:
    if k < 2:
        raise ValueError(f"bound requires k >= 2, got k={k}")


def mader_lower(n: int, k: int) -> Fraction:
    """((k-1)n + 2k) / (2k-1)."""
    return Fraction((k - 1) * n + 2 * k, 2 * k - 1)


def mader_generalized_lower(n: int, k: int, c_f: int, ek: int, delta: int) -> Fraction:
    return Fraction((k - 1) * n + 2 * (c_f + ek) + max(0, delta - (k + 1)), 2 * k - 1)


def oxley_lower(m: int, n: int, k: int) -> int:
    """ceil((m - n + k) / (k - 1))."""
    _need_k2(k)
    return math.ceil(Fraction(m - n + k, k - 1))


def simple_lower(m: int, n: int, k: int) -> int:
    """(k+1)n - 2m, unclamped."""
    return (k + 1) * n - 2 * m


def threshold(n: int, k: int) -> Fraction:
    return Fraction(k * (k * n - 1), 2 * k - 1)


def tight_lower(m: int, n: int, k: int) -> int:
    """The piecewise bound: simple below the threshold, Oxley above it."""
    _need_k2(k)
    if m <= threshold(n, k):
        value = simple_lower(m, n, k)
    else:
        value = oxley_lower(m, n, k)
    assert value == max(simple_lower(m, n, k), oxley_lower(m, n, k))
    return value


def edge_range(n: int, k: int) -> tuple[int, int]:
    """Edge counts possible for a minimally k-connected graph on n vertices."""
    return -(-k * n // 2), k * n - k * (k + 1) // 2


def regime_of(m: int, n: int, k: int) -> str:
    m0 = threshold(n, k)
    return "below" if m < m0 else "at" if m == m0 else "above"


@dataclass(frozen=True)
class BoundReport:
    k: int
    n: int
    m: int
    mader: Fraction
    oxley: int
    simple: int
    tight: int
    threshold_m0: Fraction
    regime: str
    edge_min: int
    edge_max: int
    in_range: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k, "n": self.n, "m": self.m,
            "mader": [self.mader.numerator, self.mader.denominator],
            "oxley": self.oxley, "simple": self.simple, "tight": self.tight,
            "threshold_m0": [self.threshold_m0.numerator, self.threshold_m0.denominator],
            "regime": self.regime,
            "edge_min": self.edge_min, "edge_max": self.edge_max,
            "in_range": self.in_range,
        }


def bound_report(m: int, n: int, k: int) -> BoundReport:
    """All bounds at (m, n, k); out-of-range m is evaluated but flagged."""
    _need_k2(k)
    lo, hi = edge_range(n, k)
    return BoundReport(
        k=k, n=n, m=m,
        mader=mader_lower(n, k),
        oxley=oxley_lower(m, n, k),
        simple=simple_lower(m, n, k),
        tight=tight_lower(m, n, k),
        threshold_m0=threshold(n, k),
        regime=regime_of(m, n, k),
        edge_min=lo,
        edge_max=hi,
        in_range=lo <= m <= hi,
    )


@dataclass(frozen=True)
class ParityClass:
    """Which tightness regime applies at (m, n, k) and whether it is attainable.

    ``regime`` is ``small_m`` below the threshold, ``large_m`` above it,
    ``both`` exactly at an integral threshold and ``neither`` when m lies
    outside the edge range. ``i`` is the residue used by the matching
    construction (small_m, both) or the contraction count (large_m).
    """

    regime: str
    i: int | None
    feasible: bool
    reason: str
    n_condition_met: bool


def _small_residue(m: int, n: int, k: int) -> int:
    return (k * (n - 1) - m) % (k * (k - 1))


def large_contractions(m: int, n: int, k: int) -> int | None:
    """The i in 0..k-1 making (k(n-1)-m)/(k-1) + i divisible by k, if defined."""
    diff = k * (n - 1) - m
    if diff % (k - 1):
        return None
    return -(diff // (k - 1)) % k


def _small_m_class(m: int, n: int, k: int) -> tuple[int, bool, str, bool]:
    i = _small_residue(m, n, k)
    cap = 2 * (k // 2)
    cond = n >= 3 * k - 2 or (n > 2 * k and (i == 0 or -(-k // 2) <= i <= cap))
    if i > cap:
        return i, False, f"k(n-1)-m has residue {i} mod k(k-1), above 2*floor(k/2)={cap}", cond
    return i, True, f"m = k(n-1)-{i} mod k(k-1)", cond


def _large_m_class(m: int, n: int, k: int) -> tuple[int | None, bool, str, bool]:
    i = large_contractions(m, n, k)
    if i is None:
        return None, False, "k(n-1)-m is not divisible by k-1", n >= 3 * k - 2
    cond = n >= 3 * k - 2 or (n > 2 * k and not 1 <= i < k / 2)
    _, hi = edge_range(n, k)
    if m >= hi:
        return i, False, "m = kn-C(k+1,2) is attained only by K_{k+1}", cond
    if n >= 3 * k - 2 and m > k * n - k * k:
        return i, False, "no minimally k-connected graph with n >= 3k-2 has m > kn-k^2", cond
    return i, True, f"m = k(n-1) mod k-1 with {i} contractions", cond


def classify_parity(m: int, n: int, k: int) -> ParityClass:
    """Parity/range classification of (m, n, k) for the tight constructions."""
    _need_k2(k)
    lo, hi = edge_range(n, k)
    if not lo <= m <= hi:
        return ParityClass("neither", None, False, f"m outside edge range [{lo}, {hi}]", False)
    where = regime_of(m, n, k)
    if where == "below":
        i, ok, why, cond = _small_m_class(m, n, k)
        return ParityClass("small_m", i, ok, why, cond)
    if where == "above":
        i, ok, why, cond = _large_m_class(m, n, k)
        return ParityClass("large_m", i, ok, why, cond)
    i, ok_s, why_s, cond_s = _small_m_class(m, n, k)
    _, ok_l, why_l, cond_l = _large_m_class(m, n, k)
    ok = ok_s or ok_l
    return ParityClass("both", i, ok, f"{why_s}; {why_l}", (ok_s and cond_s) or (ok_l and cond_l))


def is_tight_feasible(m: int, n: int, k: int) -> bool:
    """Feasible parity with the n-condition met: a witness is expected."""
    pc = classify_parity(m, n, k)
    return pc.feasible and pc.n_condition_met
