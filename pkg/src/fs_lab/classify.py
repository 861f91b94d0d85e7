"""Wilsonian and almost-Wilsonian graph classes, plus spanning-star finders."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .graph import (
    Graph,
    _bits,
    is_biconnected,
    is_bipartite,
    is_cycle_graph,
    is_theta_zero,
    min_degree,
)


@dataclass(frozen=True)
class ClassificationReport:
    biconnected: bool
    bipartite: bool
    is_cycle: bool
    is_theta0: bool
    wilsonian: bool
    almost_wilsonian: bool
    reasons: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        d = asdict(self)
        d["reasons"] = list(self.reasons)
        return d


def classify(g: Graph) -> ClassificationReport:
    """Check the four Wilsonian conditions and the three almost-Wilsonian ones.

    ``reasons`` tags every violated condition: ``not_biconnected``,
    ``bipartite``, ``cycle``, ``cycle_ge4`` and ``theta0``.
    """
    biconnected = is_biconnected(g)
    bipartite = is_bipartite(g).bipartite
    cycle = is_cycle_graph(g)
    theta = is_theta_zero(g)
    long_cycle = cycle and g.n >= 4

    reasons = []
    if not biconnected:
        reasons.append("not_biconnected")
    if bipartite:
        reasons.append("bipartite")
    if cycle:
        reasons.append("cycle")
    if long_cycle:
        reasons.append("cycle_ge4")
    if theta:
        reasons.append("theta0")

    wilsonian = biconnected and not bipartite and not cycle and not theta
    almost = biconnected and not long_cycle and not theta
    assert almost or not wilsonian
    return ClassificationReport(biconnected, bipartite, cycle, theta, wilsonian, almost, tuple(reasons))


def check_half_degree_wilsonian(g: Graph) -> bool:
    """Degree test ``2 * min_degree > n``, a sufficient condition for Wilsonian when n >= 4."""
    return 2 * min_degree(g) > g.n


def spanning_star_center(g: Graph) -> int | None:
    full = (1 << g.n) - 1
    for v in range(g.n):
        if g.adj[v] | (1 << v) == full:
            return v
    return None


def spanning_star_plus(g: Graph) -> tuple[int, tuple[int, int]] | None:
    """Smallest universal vertex and the first edge avoiding it, if both exist."""
    full = (1 << g.n) - 1
    for c in range(g.n):
        if g.adj[c] | (1 << c) != full:
            continue
        for u in range(g.n):
            if u == c:
                continue
            for v in _bits(g.adj[u] & ~(1 << c)):
                if v > u:
                    return c, (u, v)
    return None
