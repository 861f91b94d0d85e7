"""Named graph families, the two lower-bound pairs, and seeded random samplers.

Canonical labelings:

* ``star(n)``: center 0, leaves 1..n-1.
* ``star_plus(n)``: ``star(n)`` plus the leaf edge (1, 2).
* ``cycle(n)``: 0-1-...-(n-1)-0.  ``path(n)``: 0-1-...-(n-1).
* ``complete_bipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``theta0()``: the packaged fixture (6-cycle 0..5 plus vertex 6 on 0 and 3).

Always-bipartite families carry their bipartition; even cycles do too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .engine import FsInstance, friendly_swaps
from .graph import Graph, is_connected, min_degree, theta_zero_reference
from .perm import Bijection, identity


class ConstructionError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


def star(n: int) -> Graph:
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)], ([0], range(1, n)))


def star_plus(n: int) -> Graph:
    _need(n >= 3, "star_plus needs n >= 3")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)] + [(1, 2)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    parts = (range(0, n, 2), range(1, n, 2)) if n % 2 == 0 else None
    return Graph.from_edges(n, edges, parts)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], (range(0, n, 2), range(1, n, 2)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite graph needs both parts nonempty")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges, (range(a), range(a, a + b)))


def edgeless(n: int) -> Graph:
    _need(n >= 1, "edgeless graph needs n >= 1")
    return Graph.from_edges(n, [])


def theta0() -> Graph:
    return theta_zero_reference()


@dataclass(frozen=True)
class LowerBoundPair:
    x: Graph
    y: Graph
    sigma: Bijection
    meta: dict = field(default_factory=dict)

    @property
    def instance(self) -> FsInstance:
        return FsInstance(self.x, self.y)

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json(), "sigma": list(self.sigma), "meta": self.meta}


def _groups(n: int, k: int) -> list[list[int]]:
    t, r = divmod(n, k)
    out, start = [], 0
    for i in range(k):
        size = t + 1 if i < r else t
        out.append(list(range(start, start + size)))
        start += size
    return out


def prop_1_6_pair(n: int, k: int) -> LowerBoundPair:
    """Connected pair with high minimum degrees whose FS graph is disconnected.

    Both vertex sets split into k near-equal consecutive groups.  X joins
    vertices whose groups are equal or cyclically adjacent; Y joins vertices
    whose groups are *not* cyclically adjacent.  ``sigma`` is the identity,
    which maps group i of X onto group i of Y.
    """
    _need(k >= 5, "need k >= 5")
    _need(n >= k, "need n >= k")
    groups = _groups(n, k)
    group_of = [i for i, g in enumerate(groups) for _ in g]
    x_edges, y_edges = [], []
    for u, v in combinations(range(n), 2):
        diff = (group_of[u] - group_of[v]) % k
        if diff in (0, 1, k - 1):
            x_edges.append((u, v))
        if diff not in (1, k - 1):
            y_edges.append((u, v))
    x = Graph.from_edges(n, x_edges)
    y = Graph.from_edges(n, y_edges)
    dx, dy = min_degree(x), min_degree(y)
    # exact forms of dx >= 3n/k - 4 and dy >= (k-2)n/k - 3
    assert k * dx >= 3 * n - 4 * k, (n, k, dx)
    assert k * dy >= (k - 2) * n - 3 * k, (n, k, dy)
    assert is_connected(x) and is_connected(y)
    t, r = divmod(n, k)
    meta = {"n": n, "k": k, "t": t, "r": r, "groups": groups, "delta_x": dx, "delta_y": dy}
    return LowerBoundPair(x, y, identity(n), meta)


def thm_1_11_pair(r: int, d1: int, d2: int) -> LowerBoundPair:
    """Edge-subgraphs of ``K_{r,r}`` with min degrees (d1, d2) and an isolated bijection.

    Blocks, in vertex order: A (ceil(r/2)), B (floor(r/2)), C (floor(r/2)),
    D (ceil(r/2)), identical for X and Y, and ``sigma`` is the identity.
    X has parts A+B | C+D: A-C and B-D complete, a (d1 - floor(r/2))-regular
    circulant between A and D, a max(0, d1 - ceil(r/2))-regular circulant
    between B and C.  Y has parts A+C | B+D: A-B and C-D complete, and A-D, B-C
    hold exactly the pairs X lacks there, so no friendly swap leaves sigma.
    """
    _need(r >= 2, "need r >= 2")
    _need(d1 + d2 == 3 * r // 2, f"need d1 + d2 = floor(3r/2) = {3 * r // 2}")
    _need(0 <= d1 <= r and 0 <= d2 <= r, "need 0 <= d1, d2 <= r")
    hi, lo = (r + 1) // 2, r // 2
    a_blk = list(range(hi))
    b_blk = list(range(hi, r))
    c_blk = list(range(r, r + lo))
    d_blk = list(range(r + lo, 2 * r))

    def circulant(left, right, deg):
        m = len(left)
        return {(left[i], right[(i + j) % m]) for i in range(m) for j in range(deg)}

    ad = circulant(a_blk, d_blk, d1 - lo)
    bc = circulant(b_blk, c_blk, max(0, d1 - hi))
    x_edges = {(a, c) for a in a_blk for c in c_blk} | {(b, d) for b in b_blk for d in d_blk} | ad | bc
    y_edges = {(a, b) for a in a_blk for b in b_blk} | {(c, d) for c in c_blk for d in d_blk}
    y_edges |= {(a, d) for a in a_blk for d in d_blk} - ad
    y_edges |= {(b, c) for b in b_blk for c in c_blk} - bc

    n = 2 * r
    x = Graph.from_edges(n, sorted(x_edges), (a_blk + b_blk, c_blk + d_blk))
    y = Graph.from_edges(n, sorted(y_edges), (a_blk + c_blk, b_blk + d_blk))
    sigma = identity(n)
    dx, dy = min_degree(x), min_degree(y)
    assert dx == d1, (r, d1, dx)
    assert dy >= d2, (r, d2, dy)
    assert not friendly_swaps(FsInstance(x, y), sigma)
    meta = {
        "r": r, "d1": d1, "d2": d2, "delta_x": dx, "delta_y": dy,
        "blocks": {"A": a_blk, "B": b_blk, "C": c_blk, "D": d_blk},
    }
    return LowerBoundPair(x, y, sigma, meta)


def _repair(n: int, adj: list[set[int]], allowed, dmin: int, rng: random.Random) -> None:
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        while len(adj[v]) < dmin:
            cands = [w for w in allowed(v) if w not in adj[v]]
            if not cands:
                raise ConstructionError(f"cannot raise vertex {v} to degree {dmin}")
            needy = [w for w in cands if len(adj[w]) < dmin]
            w = rng.choice(needy or cands)
            adj[v].add(w)
            adj[w].add(v)


def random_graph_min_degree(n: int, d_min: int, connected: bool = True, seed: int | None = None,
                            max_tries: int = 1000) -> Graph:
    """Seeded heuristic sampler: G(n, p) with p ~ d_min/(n-1), then top up low-degree vertices.

    Makes no uniformity claim.  With ``connected`` the whole draw is rejected
    and redrawn until connected.
    """
    _need(n >= 1, "need n >= 1")
    _need(0 <= d_min <= max(n - 1, 0), f"min degree {d_min} infeasible on {n} vertices")
    rng = random.Random(seed)
    p = min(1.0, max(d_min, 2) / (n - 1)) if n > 1 else 0.0
    for _ in range(max_tries):
        adj = [set() for _ in range(n)]
        for u, v in combinations(range(n), 2):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)
        _repair(n, adj, lambda v: [w for w in range(n) if w != v], d_min, rng)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
        if not connected or is_connected(g):
            assert min_degree(g) >= d_min
            return g
    raise ConstructionError(f"no connected sample after {max_tries} tries")


def random_bipartite_subgraph(r: int, d_min: int, seed: int | None = None) -> Graph:
    """Seeded edge-subgraph of ``K_{r,r}`` (parts ``0..r-1``, ``r..2r-1``) with min degree >= d_min."""
    _need(r >= 1, "need r >= 1")
    _need(0 <= d_min <= r, f"min degree {d_min} infeasible inside K_{{{r},{r}}}")
    rng = random.Random(seed)
    n = 2 * r
    p = d_min / r
    adj = [set() for _ in range(n)]
    for u in range(r):
        for v in range(r, n):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)

    def other_side(v):
        return range(r, n) if v < r else range(r)

    _repair(n, adj, other_side, d_min, rng)
    g = Graph.from_edges(n, [(u, v) for u in range(r) for v in sorted(adj[u])], (range(r), range(r, n)))
    assert min_degree(g) >= d_min
    return g


def wheel(n: int) -> Graph:
    _need(n >= 4, "wheel needs n >= 4")
    rim = [(1 + i, 1 + (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph.from_edges(n, [(0, v) for v in range(1, n)] + rim)


def fixture_zoo(n: int) -> dict[str, Graph]:
    """Named small graphs on ``n`` vertices used by the harness and the CLI."""
    zoo = {"complete": complete(n), "path": path(n), "star": star(n), "edgeless": edgeless(n)}
    if n >= 2:
        zoo["complete_minus_edge"] = Graph.from_edges(n, [e for e in combinations(range(n), 2) if e != (0, 1)])
    if n >= 3:
        zoo["cycle"] = cycle(n)
        zoo["star_plus"] = star_plus(n)
    if n >= 4:
        zoo["wheel"] = wheel(n)
        zoo["cycle_chord"] = Graph.from_edges(n, cycle(n).edges() + [(0, 2)])
    for a in range(1, n // 2 + 1):
        zoo[f"complete_bipartite_{a}_{n - a}"] = complete_bipartite(a, n - a)
    if n == 7:
        zoo["theta0"] = theta0()
    return zoo
