"""Simple undirected graphs on dense integer vertices, with bitset adjacency.

Every other module consumes :class:`Graph`.  Vertices are ``0..n-1``; optional
string labels ride along in a side table and never enter the algorithms.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 32

VertexSet = frozenset


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in _bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        if self.bipartition is not None:
            a, b = self.bipartition
            if a & b or (a | b) != frozenset(range(self.n)):
                raise GraphError("bipartition must split the vertex set into two disjoint parts")
            for u, v in self.edges():
                if (u in a) == (v in a):
                    raise GraphError(f"edge ({u},{v}) does not cross the bipartition")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match n")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        bipartition: tuple[Iterable[int], Iterable[int]] | None = None,
        labels: Sequence[str] | None = None,
    ) -> Graph:
        rows = [0] * n
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        parts = None
        if bipartition is not None:
            parts = (frozenset(bipartition[0]), frozenset(bipartition[1]))
        return cls(n, tuple(rows), parts, tuple(labels) if labels is not None else None)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def with_bipartition(self, a: Iterable[int], b: Iterable[int]) -> Graph:
        return Graph(self.n, self.adj, (frozenset(a), frozenset(b)), self.labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        parts = None
        if self.bipartition is not None:
            parts = tuple(frozenset(perm[v] for v in p) for p in self.bipartition)
        return Graph.from_edges(self.n, edges, parts)

    def to_json(self) -> dict:
        parts = None
        if self.bipartition is not None:
            parts = [sorted(self.bipartition[0]), sorted(self.bipartition[1])]
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges()],
            "bipartition": parts,
            "labels": list(self.labels) if self.labels is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        try:
            n = int(data["n"])
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
        parts = data.get("bipartition")
        if parts is not None and len(parts) != 2:
            raise GraphError("bipartition must have exactly two parts")
        return cls.from_edges(n, edges, parts, data.get("labels"))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def load_graph(path) -> Graph:
    with open(path) as fh:
        return Graph.from_json(json.load(fh))


def _mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Restrict ``g`` to ``s``.

    Returns the subgraph on ``0..|s|-1`` and the map ``new -> old`` (sorted
    old vertices).  A bipartition, if present, is restricted as well.
    """
    keep = sorted(set(s))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError("vertex set outside the graph's range")
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    parts = None
    if g.bipartition is not None:
        parts = tuple(frozenset(index[v] for v in p if v in index) for p in g.bipartition)
    return Graph.from_edges(len(keep), edges, parts), keep


def _component_masks(g: Graph, alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        start = rest & -rest
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest member."""
    return [frozenset(_bits(m)) for m in _component_masks(g, (1 << g.n) - 1)]


def is_connected(g: Graph) -> bool:
    return len(_component_masks(g, (1 << g.n) - 1)) == 1


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via iterative DFS lowpoints (linear time).

    On a disconnected graph this returns the vertices whose removal splits
    their own component.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(cuts)


class BipartiteCheck(NamedTuple):
    bipartite: bool
    parts: tuple[frozenset[int], frozenset[int]] | None
    odd_cycle: list[int] | None


def is_bipartite(g: Graph) -> BipartiteCheck:
    """2-color by BFS; on failure return an odd cycle as a vertex list."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteCheck(False, None, _odd_cycle(v, w, parent, depth))
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    return BipartiteCheck(True, (a, frozenset(range(g.n)) - a), None)


def _odd_cycle(v: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    # v, w share a color, so their tree paths to the common ancestor have equal parity
    left, right = [v], [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_biconnected(g: Graph) -> bool:
    """Connected with no cut vertex.  ``K_1`` is not biconnected; ``K_2`` is."""
    if g.n == 1:
        return False
    return is_connected(g) and not cut_vertices(g)


@lru_cache(maxsize=1)
def theta_zero_reference() -> Graph:
    """The 7-vertex exception graph from Wilson's theorem, read from the fixture."""
    text = resources.files("fs_lab.data").joinpath("theta0.json").read_text()
    return Graph.from_json(json.loads(text))


def is_theta_zero(g: Graph) -> bool:
    ref = theta_zero_reference()
    if g.n != ref.n or g.num_edges != ref.num_edges:
        return False
    if sorted(g.degrees()) != sorted(ref.degrees()):
        return False
    ref_edges = ref.edges()
    ref_deg = ref.degrees()
    g_deg = g.degrees()
    for perm in itertools.permutations(range(g.n)):
        if any(ref_deg[v] != g_deg[perm[v]] for v in range(g.n)):
            continue
        if all(g.has_edge(perm[u], perm[v]) for u, v in ref_edges):
            return True
    return False
