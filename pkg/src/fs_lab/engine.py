"""Friends-and-strangers graph exploration.

``FS(X, Y)`` has one vertex per bijection ``V(X) -> V(Y)``; two bijections are
adjacent when they differ by a friendly swap: the occupants of an X-edge
``(a, b)`` trade places, which is allowed only when those occupants are
themselves adjacent in Y.

Two query styles live here:

* :func:`component_census` sweeps all ``n!`` Lehmer ranks, generates every
  friendly-swap neighbor with vectorized rank arithmetic, and merges them in a
  flat union-find.  It answers "which component" for every state but keeps no
  paths.
* :func:`same_component` / :func:`exchangeable` / :func:`reachable` run
  breadth-first searches over hashed tuples and return replayable swap
  sequences.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np
from numba import njit

from .graph import Graph
from .perm import (
    Bijection,
    PermError,
    SwapSequence,
    all_perms,
    apply_value_swap,
    check_bijection,
    factorials,
    lehmer_digits,
    rank,
    rank_array,
    sign,
)

log = logging.getLogger(__name__)

DEFAULT_CAP = 10
DEFAULT_BUDGET = 200_000
CHUNK_ROWS = 1 << 18
SMALL_N = 6  # at or below this size the census skips the compiled kernels


class EngineError(ValueError):
    pass


class CapExceeded(EngineError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self.estimate = memory_estimate(n)
        super().__init__(
            f"n={n} exceeds the census cap {cap}; "
            f"a census would need about {self.estimate / 2**20:,.0f} MiB "
            f"for {factorial(n):,} states"
        )


class IllegalSwapError(EngineError):
    def __init__(self, step: int, pair: tuple[int, int]):
        self.step = step
        self.pair = pair
        super().__init__(f"swap {pair} at step {step} is not friendly")


def memory_estimate(n: int) -> int:
    """Bytes held by a census: parent and size arrays plus the cached state tables."""
    return factorial(n) * (8 + 8 + 2 * n) + 4 * 8 * min(factorial(n), CHUNK_ROWS) * n


def default_threads() -> int:
    env = os.environ.get("FS_LAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class FsInstance:
    x: Graph
    y: Graph

    def __post_init__(self) -> None:
        if self.x.n != self.y.n:
            raise EngineError(f"|V(X)| = {self.x.n} but |V(Y)| = {self.y.n}")

    @property
    def n(self) -> int:
        return self.x.n

    def swapped(self) -> FsInstance:
        return FsInstance(self.y, self.x)

    def without(self, forbidden: frozenset[int] | set[int]) -> FsInstance:
        """Same X, with every Y-edge touching a forbidden vertex removed.

        Friendly swaps of the result are exactly the original swaps that avoid
        ``forbidden``.
        """
        if not forbidden:
            return self
        edges = [e for e in self.y.edges() if e[0] not in forbidden and e[1] not in forbidden]
        return FsInstance(self.x, Graph.from_edges(self.y.n, edges, self.y.bipartition))


@dataclass(frozen=True)
class ComponentCensus:
    """Component sizes (descending) with the smallest rank in each component.

    ``sizes[i]`` and ``representatives[i]`` describe the same component; ties in
    size are ordered by representative.
    """

    n: int
    sizes: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def num_components(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def connected(self) -> bool:
        return len(self.sizes) == 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "num_components": self.num_components,
            "sizes": list(self.sizes),
            "representatives": list(self.representatives),
        }

    @classmethod
    def from_json(cls, data: dict) -> ComponentCensus:
        return cls(int(data["n"]), tuple(data["sizes"]), tuple(data["representatives"]))


# ---------------------------------------------------------------------------
# friendly swaps and sequences

def _check_state(inst: FsInstance, b: Sequence[int]) -> Bijection:
    b = check_bijection(b)
    if len(b) != inst.n:
        raise EngineError(f"bijection has length {len(b)}, expected {inst.n}")
    return b


def _moves(inst: FsInstance, b: Bijection, forbidden: frozenset[int] = frozenset()
           ) -> Iterator[tuple[tuple[int, int], Bijection]]:
    """Friendly swaps from ``b`` in X-edge order, each with its resulting state."""
    y = inst.y
    for a, c in inst.x.edges():
        u, v = b[a], b[c]
        if u in forbidden or v in forbidden or not y.has_edge(u, v):
            continue
        nxt = list(b)
        nxt[a], nxt[c] = v, u
        yield (min(u, v), max(u, v)), tuple(nxt)


def friendly_swaps(inst: FsInstance, b: Sequence[int]) -> list[tuple[int, int]]:
    b = _check_state(inst, b)
    return sorted(pair for pair, _ in _moves(inst, b))


def is_friendly(inst: FsInstance, b: Sequence[int], u: int, v: int) -> bool:
    pos_u, pos_v = b.index(u), b.index(v)
    return inst.x.has_edge(pos_u, pos_v) and inst.y.has_edge(u, v)


def apply_sequence(inst: FsInstance, b: Sequence[int], seq: Sequence[tuple[int, int]]) -> Bijection:
    state = _check_state(inst, b)
    for step, (u, v) in enumerate(seq):
        if u == v or not is_friendly(inst, state, u, v):
            raise IllegalSwapError(step, (u, v))
        state = apply_value_swap(state, u, v)
    return state


# ---------------------------------------------------------------------------
# census

class _StateSpace:
    """All ``n!`` permutations in rank order plus their Lehmer digits."""

    def __init__(self, n: int):
        self.n = n
        self.perms = all_perms(n)
        self.digits = lehmer_digits(self.perms)
        self.weights = factorials(n)[n - 1::-1].copy()  # weight of digit i is (n-1-i)!
        self.perms.setflags(write=False)
        self.digits.setflags(write=False)

    @property
    def size(self) -> int:
        return self.perms.shape[0]


@lru_cache(maxsize=2)
def _state_space(n: int) -> _StateSpace:
    return _StateSpace(n)


def _y_matrix(y: Graph) -> np.ndarray:
    m = np.zeros((y.n, y.n), dtype=bool)
    for u, v in y.edges():
        m[u, v] = m[v, u] = True
    return m


@njit(cache=True, nogil=True)
def _chunk_edges_kernel(perms, digits, weights, xa, xb, ymat, lo, hi):
    # For an X-edge (a, b), a < b, with occupants p at a and q at b, only the
    # Lehmer digits at positions a..b change, so each neighbor rank costs O(b - a).
    cap = (hi - lo) * xa.shape[0]
    src = np.empty(cap, dtype=np.int64)
    dst = np.empty(cap, dtype=np.int64)
    k = 0
    for r in range(lo, hi):
        row = perms[r]
        dig = digits[r]
        for e in range(xa.shape[0]):
            a = xa[e]
            b = xb[e]
            p = row[a]
            q = row[b]
            if not ymat[p, q]:
                continue
            below_p = 0
            below_q = 0
            delta = 0
            for i in range(a + 1, b):
                m = row[i]
                if m < p:
                    below_p += 1
                if m < q:
                    below_q += 1
                # position b used to hold q and will hold p
                delta += ((1 if p < m else 0) - (1 if q < m else 0)) * weights[i]
            da = np.int64(dig[a])
            db = np.int64(dig[b])
            new_da = below_q + (1 if p < q else 0) + db
            new_db = da - below_p - (1 if q < p else 0)
            delta += (new_da - da) * weights[a] + (new_db - db) * weights[b]
            src[k] = r
            dst[k] = r + delta
            k += 1
    return src[:k], dst[:k]


def _chunk_edges(space: _StateSpace, x_edges, ymat, lo: int, hi: int):
    """Friendly-swap edges leaving ranks ``lo..hi-1`` as (src, dst) rank arrays."""
    xa = np.array([a for a, _ in x_edges], dtype=np.int64)
    xb = np.array([b for _, b in x_edges], dtype=np.int64)
    return _chunk_edges_kernel(space.perms, space.digits, space.weights, xa, xb, ymat, lo, hi)


def _numpy_edges(space: _StateSpace, x_edges, ymat) -> tuple[np.ndarray, np.ndarray]:
    """Direct swap-and-rerank edge list; cheap for tiny state spaces and needs no JIT."""
    idx = np.arange(space.size, dtype=np.int64)
    srcs, dsts = [], []
    for a, b in x_edges:
        mask = ymat[space.perms[:, a], space.perms[:, b]]
        moved = space.perms[mask]
        moved[:, [a, b]] = moved[:, [b, a]]
        srcs.append(idx[mask])
        dsts.append(rank_array(moved))
    if not srcs:
        return idx[:0], idx[:0]
    return np.concatenate(srcs), np.concatenate(dsts).astype(np.int64)


def iter_fs_edges(inst: FsInstance, threads: int | None = None, cap: int = DEFAULT_CAP,
                  use_kernel: bool | None = None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Every directed FS edge, as (src, dst) rank arrays per contiguous rank chunk.

    Chunks are generated concurrently but always yielded in rank order.  Up to
    ``SMALL_N`` vertices a single numpy batch is produced instead of calling the
    compiled kernel (``use_kernel`` forces either path).
    """
    n = inst.n
    if n > cap:
        raise CapExceeded(n, cap)
    space = _state_space(n)
    x_edges = inst.x.edges()
    ymat = _y_matrix(inst.y)
    if not (n > SMALL_N if use_kernel is None else use_kernel):
        yield _numpy_edges(space, x_edges, ymat)
        return
    bounds = [(lo, min(lo + CHUNK_ROWS, space.size)) for lo in range(0, space.size, CHUNK_ROWS)]
    threads = threads or default_threads()
    if threads <= 1 or len(bounds) == 1:
        for lo, hi in bounds:
            yield _chunk_edges(space, x_edges, ymat, lo, hi)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(lambda lh: _chunk_edges(space, x_edges, ymat, *lh), bounds)


@njit(cache=True)
def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@njit(cache=True)
def _union_edges(parent, size, src, dst):
    for k in range(src.shape[0]):
        a = _find(parent, src[k])
        b = _find(parent, dst[k])
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]


@njit(cache=True)
def _roots(parent):
    out = np.empty_like(parent)
    for i in range(parent.shape[0]):
        out[i] = _find(parent, i)
    return out


def _labels_union_find(total: int, edges, edge_hook) -> np.ndarray:
    parent = np.arange(total, dtype=np.int64)
    size = np.ones(total, dtype=np.int64)
    for src, dst in edges:
        if edge_hook is not None:
            edge_hook(src, dst)
        keep = src < dst
        _union_edges(parent, size, src[keep], dst[keep])
    roots = _roots(parent)
    _, first, inverse = np.unique(roots, return_index=True, return_inverse=True)
    return first[inverse].astype(np.int64)


def _labels_min_propagation(total: int, edges, edge_hook) -> np.ndarray:
    # the edge list is symmetric, so pulling minima along src converges to component minima
    labels = np.arange(total, dtype=np.int64)
    batches = []
    for src, dst in edges:
        if edge_hook is not None:
            edge_hook(src, dst)
        batches.append((src, dst))
    while True:
        new = labels.copy()
        for src, dst in batches:
            np.minimum.at(new, src, labels[dst])
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


def component_labels(inst: FsInstance, threads: int | None = None, cap: int = DEFAULT_CAP,
                     edge_hook: Callable[[np.ndarray, np.ndarray], None] | None = None) -> np.ndarray:
    """Label every rank with the smallest rank of its FS component.

    ``edge_hook`` sees each batch of (src, dst) edges before it is merged.
    """
    total = factorial(inst.n)
    edges = iter_fs_edges(inst, threads=threads, cap=cap)
    if inst.n <= SMALL_N:
        return _labels_min_propagation(total, edges, edge_hook)
    return _labels_union_find(total, edges, edge_hook)


def census_from_labels(n: int, labels: np.ndarray) -> ComponentCensus:
    reps, counts = np.unique(labels, return_counts=True)
    order = sorted(range(len(reps)), key=lambda i: (-int(counts[i]), int(reps[i])))
    return ComponentCensus(
        n,
        tuple(int(counts[i]) for i in order),
        tuple(int(reps[i]) for i in order),
    )


def component_census(inst: FsInstance, threads: int | None = None, cap: int = DEFAULT_CAP,
                     edge_hook: Callable[[np.ndarray, np.ndarray], None] | None = None) -> ComponentCensus:
    labels = component_labels(inst, threads=threads, cap=cap, edge_hook=edge_hook)
    return census_from_labels(inst.n, labels)


def parity_invariant(inst: FsInstance, b: Sequence[int]) -> int:
    """``(sign(b) + |b(A_X) & A_Y|) mod 2`` for bipartite X and Y; constant along friendly swaps."""
    a_x, a_y = _first_parts(inst)
    return (sign(b) + sum(1 for pos in a_x if b[pos] in a_y)) % 2


def parity_invariant_array(inst: FsInstance, cap: int = DEFAULT_CAP) -> np.ndarray:
    """The parity invariant for every rank, as a uint8 array."""
    if inst.n > cap:
        raise CapExceeded(inst.n, cap)
    a_x, a_y = _first_parts(inst)
    space = _state_space(inst.n)
    # inversion count = digit sum, so its parity is the sign
    parity = space.digits.sum(axis=1, dtype=np.int64)
    in_a_y = np.zeros(inst.n, dtype=np.int64)
    in_a_y[list(a_y)] = 1
    for pos in a_x:
        parity += in_a_y[space.perms[:, pos]]
    return (parity % 2).astype(np.uint8)


def _first_parts(inst: FsInstance) -> tuple[frozenset[int], frozenset[int]]:
    if inst.x.bipartition is None or inst.y.bipartition is None:
        raise EngineError("parity invariant needs bipartitions on both X and Y")
    return inst.x.bipartition[0], inst.y.bipartition[0]


def state_perms(n: int) -> np.ndarray:
    """Read-only ``(n!, n)`` table: row r is the bijection of rank r."""
    return _state_space(n).perms


# ---------------------------------------------------------------------------
# path queries

def _trace(parents: dict, state: Bijection) -> SwapSequence:
    """Swaps leading from the search root to ``state``."""
    out = []
    while parents[state] is not None:
        prev, pair = parents[state]
        out.append(pair)
        state = prev
    out.reverse()
    return out


def same_component(inst: FsInstance, a: Sequence[int], b: Sequence[int],
                   forbidden: frozenset[int] | set[int] | None = None,
                   budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP
                   ) -> tuple[bool, SwapSequence | None]:
    """Decide whether ``a`` and ``b`` share an FS component.

    Bidirectional BFS; returns a connecting swap sequence when found.  Swaps
    touching ``forbidden`` Y-vertices are never used.  When both searches grow
    past ``budget`` states and a census fits under ``cap``, the census answers
    instead and no sequence is returned.
    """
    a = _check_state(inst, a)
    b = _check_state(inst, b)
    forbidden = frozenset(forbidden or ())
    if a == b:
        return True, []
    sides = [({a: None}, [a]), ({b: None}, [b])]
    while sides[0][1] and sides[1][1]:
        if len(sides[0][0]) > budget and len(sides[1][0]) > budget and inst.n <= cap:
            log.info("bidirectional search passed budget %d; falling back to census", budget)
            labels = component_labels(inst.without(forbidden), cap=cap)
            return bool(labels[rank(a)] == labels[rank(b)]), None
        k = 0 if len(sides[0][1]) <= len(sides[1][1]) else 1
        parents, frontier = sides[k]
        other = sides[1 - k][0]
        nxt = []
        for s in frontier:
            for pair, t in _moves(inst, s, forbidden):
                if t in parents:
                    continue
                parents[t] = (s, pair)
                if t in other:
                    half_a = _trace(sides[0][0], t)
                    half_b = _trace(sides[1][0], t)
                    return True, half_a + half_b[::-1]
                nxt.append(t)
        sides[k] = (parents, nxt)
    return False, None


def reachable(inst: FsInstance, start: Sequence[int], accept: Callable[[Bijection], bool],
              forbidden: frozenset[int] | set[int] | None = None,
              limit: int | None = None) -> tuple[Bijection, SwapSequence] | None:
    """BFS from ``start`` to the nearest state satisfying ``accept``.

    Returns ``(state, sequence)`` or ``None`` once the component is exhausted
    (or ``limit`` states have been visited).
    """
    start = _check_state(inst, start)
    forbidden = frozenset(forbidden or ())
    if accept(start):
        return start, []
    parents = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for pair, t in _moves(inst, s, forbidden):
                if t in parents:
                    continue
                parents[t] = (s, pair)
                if accept(t):
                    return t, _trace(parents, t)
                nxt.append(t)
        if limit is not None and len(parents) > limit:
            return None
        frontier = nxt
    return None


def exchangeable(inst: FsInstance, b: Sequence[int], u: int, v: int,
                 forbidden: frozenset[int] | set[int] | None = None,
                 budget: int = DEFAULT_BUDGET) -> tuple[bool, SwapSequence | None]:
    """Whether some friendly-swap sequence turns ``b`` into ``(u, v) o b``."""
    if u == v:
        raise PermError("exchangeability needs two distinct vertices")
    b = _check_state(inst, b)
    return same_component(inst, b, apply_value_swap(b, u, v), forbidden=forbidden, budget=budget)
