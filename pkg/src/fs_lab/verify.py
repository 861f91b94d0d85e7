"""Desk-scale theorem harness.

Each claim has a single-instance evaluator returning ``(hypothesis,
conclusion, detail)``.  Check functions and seeded suites collect evaluator
results into a :class:`VerificationReport`; an instance is a counterexample
exactly when its hypothesis holds and its conclusion fails.  Every recorded
instance carries the inputs needed to :func:`replay` it.

The harness only falsifies.  A clean report is evidence, never proof.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any, Callable

import numpy as np

from . import constructions as cons
from .classify import classify
from .engine import (
    DEFAULT_CAP,
    FsInstance,
    apply_sequence,
    component_census,
    component_labels,
    friendly_swaps,
    parity_invariant_array,
    reachable,
    state_perms,
)
from .graph import (
    Graph,
    connected_components,
    cut_vertices,
    induced_subgraph,
    is_connected,
    min_degree,
)
from .perm import apply_value_swap, check_bijection, inverse, rank

CLAIMS = (
    "THM_1_4", "THM_1_5", "THM_1_10", "PROP_2_2", "PROP_2_3", "THM_2_6", "THM_2_8",
    "PROP_1_6", "THM_1_11", "LEM_4_1", "LEM_6_2", "PROP_2_1", "COR_1_12",
)
SEARCHES = ("CONJ_8_1", "CONJ_8_2")

DEFAULT_TRIALS = 100
MIN_NON_VACUOUS = 10


class VerifyError(ValueError):
    pass


@dataclass
class VerificationReport:
    claim_id: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    hypothesis_holds: list[bool] = field(default_factory=list)
    conclusion_holds: list[bool | None] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    evidence: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def instances_checked(self) -> int:
        return len(self.hypothesis_holds)

    @property
    def non_vacuous(self) -> int:
        return sum(self.hypothesis_holds)

    @property
    def vacuous(self) -> int:
        return self.instances_checked - self.non_vacuous

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "params": self.params,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "non_vacuous": self.non_vacuous,
            "vacuous": self.vacuous,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "counterexamples": self.counterexamples,
            "evidence": self.evidence,
            "notes": self.notes,
            "stats": self.stats,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def merge(self, other: VerificationReport) -> VerificationReport:
        offset = self.instances_checked
        self.hypothesis_holds += other.hypothesis_holds
        self.conclusion_holds += other.conclusion_holds
        for rows, src in ((self.counterexamples, other.counterexamples), (self.evidence, other.evidence)):
            rows.extend({**row, "index": row["index"] + offset} for row in src)
        self.notes += other.notes
        for k, v in other.stats.items():
            self.stats[k] = self.stats.get(k, 0) + v
        self.elapsed += other.elapsed
        return self


# ---------------------------------------------------------------------------
# serialization of instance inputs

def _encode(inputs: dict) -> dict:
    out = {}
    for k, v in inputs.items():
        if isinstance(v, Graph):
            out[k] = {"graph": v.to_json()}
        elif isinstance(v, (tuple, frozenset, set)):
            out[k] = sorted(v) if isinstance(v, (frozenset, set)) else list(v)
        else:
            out[k] = v
    return out


def _decode(inputs: dict) -> dict:
    return {k: Graph.from_json(v["graph"]) if isinstance(v, dict) and "graph" in v else v
            for k, v in inputs.items()}


# ---------------------------------------------------------------------------
# single-instance evaluators: (hypothesis, conclusion, detail)

Verdict = tuple[bool, "bool | None", dict]


def _deltas(x: Graph, y: Graph) -> tuple[int, int]:
    return min_degree(x), min_degree(y)


def _same_size(x: Graph, y: Graph) -> None:
    if x.n != y.n:
        raise VerifyError(f"graphs have {x.n} and {y.n} vertices")


def size_histogram(sizes) -> list[list[int]]:
    """Compact ``[[size, count], ...]`` form of a size multiset, largest size first."""
    counts = Counter(sizes)
    return [[s, counts[s]] for s in sorted(counts, reverse=True)]


def _census_detail(inst: FsInstance) -> tuple[Any, dict]:
    c = component_census(inst)
    return c, {"num_components": c.num_components, "size_counts": size_histogram(c.sizes)}


def eval_thm_1_4(x: Graph, y: Graph) -> Verdict:
    _same_size(x, y)
    n = x.n
    dx, dy = _deltas(x, y)
    lo, hi = sorted((dx, dy))
    hyp = n >= 6 and 2 * dx > n and 2 * dy > n and 2 * lo + 3 * hi >= 3 * n
    c, detail = _census_detail(FsInstance(x, y))
    return hyp, c.connected, {"delta_x": dx, "delta_y": dy, **detail}


def eval_thm_1_5(x: Graph, y: Graph) -> Verdict:
    _same_size(x, y)
    dx, dy = _deltas(x, y)
    lo, hi = sorted((dx, dy))
    hyp = is_connected(x) and is_connected(y) and lo + 2 * hi >= 2 * x.n
    c, detail = _census_detail(FsInstance(x, y))
    return hyp, c.connected, {"delta_x": dx, "delta_y": dy, **detail}


def _require_krr(g: Graph, r: int, name: str) -> None:
    if g.bipartition is None:
        raise VerifyError(f"{name} needs a declared bipartition")
    if g.n != 2 * r or sorted(len(p) for p in g.bipartition) != [r, r]:
        raise VerifyError(f"{name} is not an edge-subgraph of K_{{{r},{r}}}")


def eval_thm_1_10(x: Graph, y: Graph, r: int) -> Verdict:
    _require_krr(x, r, "X")
    _require_krr(y, r, "Y")
    dx, dy = _deltas(x, y)
    hyp = 2 * (dx + dy) >= 3 * r + 2
    c, detail = _census_detail(FsInstance(x, y))
    return hyp, c.num_components == 2, {"delta_x": dx, "delta_y": dy, **detail}


def eval_prop_2_2(x: Graph, y: Graph) -> Verdict:
    _same_size(x, y)
    if x.bipartition is None or y.bipartition is None:
        raise VerifyError("both graphs need declared bipartitions")
    if x.n < 3:
        raise VerifyError("needs n >= 3")
    inst = FsInstance(x, y)
    phi = parity_invariant_array(inst)
    broken = 0
    edges = 0

    def hook(src, dst):
        nonlocal broken, edges
        edges += src.size
        broken += int(np.count_nonzero(phi[src] != phi[dst]))

    c = component_census(inst, edge_hook=hook)
    detail = {"num_components": c.num_components, "size_counts": size_histogram(c.sizes),
              "edges_checked": edges, "parity_breaks": broken}
    return True, c.num_components >= 2 and broken == 0, detail


def eval_prop_2_3(r: int) -> Verdict:
    g = cons.complete_bipartite(r, r)
    c, detail = _census_detail(FsInstance(g, g))
    return r >= 2, c.num_components == 2, detail


def eval_thm_2_6(y: Graph) -> Verdict:
    rep = classify(y)
    c, detail = _census_detail(FsInstance(cons.star(y.n), y))
    return rep.wilsonian, c.connected, {"reasons": list(rep.reasons), **detail}


def eval_thm_2_8(y: Graph) -> Verdict:
    if y.n < 3:
        raise VerifyError("needs n >= 3")
    rep = classify(y)
    c, detail = _census_detail(FsInstance(cons.star_plus(y.n), y))
    return rep.almost_wilsonian, c.connected, {"reasons": list(rep.reasons), **detail}


def eval_prop_1_6(n: int, k: int) -> Verdict:
    pair = cons.prop_1_6_pair(n, k)
    inst = pair.instance
    labels = component_labels(inst)
    c = component_census(inst)
    group_of = np.empty(n, dtype=np.int64)
    for i, grp in enumerate(pair.meta["groups"]):
        group_of[grp] = i
    # groups of X and Y share vertex ids, so tau(A_i) = B_i reads group(tau(p)) == group(p)
    members = state_perms(n)[labels == labels[rank(pair.sigma)]]
    aligned = bool(np.all(group_of[members] == group_of[None, :]))
    detail = {"num_components": c.num_components, "sigma_component_size": int(members.shape[0]),
              "groups_preserved": aligned, "delta_x": pair.meta["delta_x"], "delta_y": pair.meta["delta_y"]}
    return True, (not c.connected) and aligned, detail


def eval_thm_1_11(r: int, d1: int, d2: int) -> Verdict:
    pair = cons.thm_1_11_pair(r, d1, d2)
    c = component_census(pair.instance)
    isolated = not friendly_swaps(pair.instance, pair.sigma)
    dx, dy = _deltas(pair.x, pair.y)
    detail = {"num_components": c.num_components, "sigma_isolated": isolated, "delta_x": dx, "delta_y": dy}
    return True, c.num_components >= 3 and isolated and dx == d1 and dy == d2, detail


def eval_census_symmetry(x: Graph, y: Graph) -> Verdict:
    _same_size(x, y)
    fwd = component_census(FsInstance(x, y))
    bwd = component_census(FsInstance(y, x))
    return True, fwd.sizes == bwd.sizes, {"sizes_xy": size_histogram(fwd.sizes),
                                      "sizes_yx": size_histogram(bwd.sizes)}


def _wilsonian(g: Graph) -> bool:
    return classify(g).wilsonian


def eval_lemma_4_1(g: Graph, q) -> Verdict:
    m = g.n
    d = min_degree(g)
    qs = sorted(set(q))
    size = len(qs)
    hyp = size >= 5 and 2 * size + 3 * d >= 3 * m + 2
    detail: dict = {"m": m, "delta": d, "q_size": size}
    if not hyp:
        return False, None, {**detail, "case": "vacuous"}
    h, _ = induced_subgraph(g, qs)
    comps = connected_components(h)
    base = d + size - m
    upper = m - d - 1
    detail["components"] = len(comps)
    if len(comps) > 2:
        return True, False, {**detail, "case": "too_many_components"}

    if len(comps) == 2:
        detail["case"] = "two_components"
        for comp in comps:
            f, _ = induced_subgraph(h, comp)
            if not _wilsonian(f):
                return True, False, {**detail, "failed": "component_not_wilsonian"}
            if not base + 1 <= f.n <= upper:
                return True, False, {**detail, "failed": "component_size"}
            if min_degree(f) < base:
                return True, False, {**detail, "failed": "component_min_degree"}
        return True, True, detail

    if classify(h).almost_wilsonian:
        return True, True, {**detail, "case": "almost_wilsonian"}
    detail["case"] = "cut_vertex"
    for v in sorted(cut_vertices(h)):
        rest = [w for w in range(h.n) if w != v]
        parts = connected_components(induced_subgraph(h, rest)[0])
        if len(parts) != 2:
            continue
        good = True
        for part in parts:
            members = [rest[i] for i in part]
            f, _ = induced_subgraph(h, members)
            if not (_wilsonian(f) and base <= f.n <= upper and min_degree(f) >= base - 1):
                good = False
                break
            if sum(1 for w in members if h.has_edge(v, w)) >= 2:
                if not _wilsonian(induced_subgraph(h, members + [v])[0]):
                    good = False
                    break
        if good:
            return True, True, {**detail, "cut_vertex": v}
    return True, False, {**detail, "failed": "no_cut_vertex_split"}


def _part_of(g: Graph, v: int) -> frozenset[int]:
    a, b = g.bipartition
    return a if v in a else b


def orient_lemma_6_2(x: Graph, y: Graph, sigma, u: int, v: int) -> tuple[tuple, frozenset, frozenset, bool]:
    """Pick the starting bijection and the sides A_X, A_Y as in the standing convention.

    The X-side containing the preimage of ``u`` must hold at least (r-1)/2
    preimages of ``A_Y - {u}``; otherwise start from ``(u, v) o sigma``
    instead.  Returns ``(start, A_X, A_Y, switched)``.
    """
    r = x.n // 2
    inv0 = inverse(sigma)
    if _part_of(y, u) == _part_of(y, v) or not x.has_edge(inv0[u], inv0[v]):
        raise VerifyError("preimages of u and v must be adjacent in X, with u, v on opposite sides of Y")
    a_y = _part_of(y, u)
    for switched, start in ((False, tuple(sigma)), (True, apply_value_swap(sigma, u, v))):
        inv = inverse(start)
        a_x = _part_of(x, inv[u])
        count = sum(1 for w in a_y if w != u and inv[w] in a_x and inv[w] != inv[u])
        if 2 * count >= r - 1:
            return start, a_x, a_y, switched
    raise AssertionError("the two orientations give counts c and r - 1 - c")


def eval_lemma_6_2(x: Graph, y: Graph, sigma, u: int, v: int) -> Verdict:
    r = x.n // 2
    _require_krr(x, r, "X")
    _require_krr(y, r, "Y")
    sigma = check_bijection(sigma)
    inst = FsInstance(x, y)
    dx, dy = _deltas(x, y)
    inv = inverse(sigma)
    hyp = (u != v and 2 * (dx + dy) >= 3 * r + 2
           and _part_of(y, u) != _part_of(y, v) and x.has_edge(inv[u], inv[v]))
    detail: dict = {"delta_x": dx, "delta_y": dy}
    if not hyp:
        return False, None, detail
    start, a_x, a_y, switched = orient_lemma_6_2(x, y, sigma, u, v)
    a_x_sorted = sorted(a_x)
    found = reachable(inst, start, lambda mu: all(mu[p] in a_y for p in a_x_sorted), forbidden={u, v})
    detail["switched"] = switched
    if found is None:
        return True, False, detail
    mu, seq = found
    replay_ok = apply_sequence(inst, start, seq) == mu and all(u not in s and v not in s for s in seq)
    detail["sequence_length"] = len(seq)
    return True, replay_ok, detail


def eval_cor_1_12(kind: str, x: Graph | None = None, r: int | None = None) -> Verdict:
    """One row of the threshold check for ``FS(X, K_{r,r})``.

    ``upper``: hypothesis ``delta(X) >= floor(r/2) + 1`` (the bipartite degree-sum bound with Y = K_{r,r}),
    conclusion exactly two components.  ``lower``: the isolated-bijection pair
    with ``delta(X) = floor(r/2)``, conclusion more than two components.
    ``middle`` (odd r, ``delta(X) = ceil(r/2)``): recorded, never asserted.
    """
    full = cons.complete_bipartite(r, r)
    if kind == "lower":
        pair = cons.thm_1_11_pair(r, r // 2, 3 * r // 2 - r // 2)
        c = component_census(FsInstance(pair.x, full))
        return True, c.num_components > 2, {"delta_x": min_degree(pair.x), "num_components": c.num_components}
    c = component_census(FsInstance(x, full))
    dx = min_degree(x)
    detail = {"delta_x": dx, "num_components": c.num_components}
    if kind == "upper":
        return 2 * (dx + r) >= 3 * r + 2, c.num_components == 2, detail
    return False, c.num_components == 2, detail


def eval_conj_8_1(x: Graph, y: Graph) -> Verdict:
    _same_size(x, y)
    dx, dy = _deltas(x, y)
    lo, hi = sorted((dx, dy))
    hyp = is_connected(x) and is_connected(y) and 2 * lo + 3 * hi >= 3 * x.n
    c, detail = _census_detail(FsInstance(x, y))
    return hyp, c.connected, {"delta_x": dx, "delta_y": dy, **detail}


EVALUATORS: dict[str, Callable[..., Verdict]] = {
    "THM_1_4": eval_thm_1_4,
    "THM_1_5": eval_thm_1_5,
    "THM_1_10": eval_thm_1_10,
    "PROP_2_2": eval_prop_2_2,
    "PROP_2_3": eval_prop_2_3,
    "THM_2_6": eval_thm_2_6,
    "THM_2_8": eval_thm_2_8,
    "PROP_1_6": eval_prop_1_6,
    "THM_1_11": eval_thm_1_11,
    "LEM_4_1": eval_lemma_4_1,
    "LEM_6_2": eval_lemma_6_2,
    "PROP_2_1": eval_census_symmetry,
    "COR_1_12": eval_cor_1_12,
    "CONJ_8_1": eval_conj_8_1,
}


def replay(record: dict) -> tuple[bool, bool | None]:
    """Re-run a recorded instance (counterexample or evidence row) from its inputs."""
    hyp, concl, _ = EVALUATORS[record["claim_id"]](**_decode(record["inputs"]))
    return hyp, concl


# ---------------------------------------------------------------------------
# report assembly

class _Run:
    def __init__(self, claim_id: str, params: dict | None = None, seed: int | None = None):
        self.report = VerificationReport(claim_id, dict(params or {}), seed)
        self._t0 = time.perf_counter()

    def add(self, inputs: dict, verdict: Verdict, evidence: bool = False) -> None:
        hyp, concl, detail = verdict
        rep = self.report
        index = rep.instances_checked
        rep.hypothesis_holds.append(bool(hyp))
        rep.conclusion_holds.append(concl)
        row = {"index": index, "claim_id": rep.claim_id, "inputs": _encode(inputs),
               "hypothesis": bool(hyp), "conclusion": concl, "detail": detail}
        if hyp and concl is False:
            rep.counterexamples.append(row)
        elif evidence:
            rep.evidence.append(row)
        case = detail.get("case")
        if case:
            rep.stats[case] = rep.stats.get(case, 0) + 1

    def evaluate(self, inputs: dict, evidence: bool = False) -> Verdict:
        verdict = EVALUATORS[self.report.claim_id](**inputs)
        self.add(inputs, verdict, evidence)
        return verdict

    def evaluate_many(self, batch: list[dict], threads: int = 1, evidence: bool = False) -> None:
        """Evaluate independent instances, recording results in input order."""
        fn = EVALUATORS[self.report.claim_id]
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                verdicts = list(pool.map(lambda kw: fn(**kw), batch))
        else:
            verdicts = [fn(**kw) for kw in batch]
        for inputs, verdict in zip(batch, verdicts):
            self.add(inputs, verdict, evidence)

    def done(self) -> VerificationReport:
        self.report.elapsed = time.perf_counter() - self._t0
        return self.report


def _child_seeds(seed: int | None, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**63) for _ in range(count)]


# ---------------------------------------------------------------------------
# single-instance checks

def check_thm_1_4(x: Graph, y: Graph) -> VerificationReport:
    run = _Run("THM_1_4")
    run.evaluate({"x": x, "y": y})
    return run.done()


def check_thm_1_5(x: Graph, y: Graph) -> VerificationReport:
    run = _Run("THM_1_5")
    run.evaluate({"x": x, "y": y})
    return run.done()


def check_thm_1_10(x: Graph, y: Graph, r: int) -> VerificationReport:
    run = _Run("THM_1_10", {"r": r})
    inputs = {"x": x, "y": y, "r": r}
    verdict = eval_thm_1_10(**inputs)
    # below the degree line a failed conclusion is boundary evidence, not a counterexample
    run.add(inputs, verdict, evidence=not verdict[0])
    return run.done()


def check_prop_2_2(x: Graph, y: Graph) -> VerificationReport:
    run = _Run("PROP_2_2")
    run.evaluate({"x": x, "y": y})
    return run.done()


def check_prop_2_3(r: int) -> VerificationReport:
    run = _Run("PROP_2_3", {"r": r})
    run.evaluate({"r": r})
    return run.done()


def check_thm_2_6(y: Graph) -> VerificationReport:
    run = _Run("THM_2_6")
    run.evaluate({"y": y}, evidence=True)
    return run.done()


def check_thm_2_8(y: Graph) -> VerificationReport:
    run = _Run("THM_2_8")
    run.evaluate({"y": y}, evidence=True)
    return run.done()


def check_prop_1_6(n: int, k: int) -> VerificationReport:
    run = _Run("PROP_1_6", {"n": n, "k": k})
    run.evaluate({"n": n, "k": k}, evidence=True)
    return run.done()


def check_thm_1_11(r: int, d1: int, d2: int) -> VerificationReport:
    run = _Run("THM_1_11", {"r": r, "d1": d1, "d2": d2})
    run.evaluate({"r": r, "d1": d1, "d2": d2}, evidence=True)
    return run.done()


def check_lemma_4_1(g: Graph, q) -> VerificationReport:
    run = _Run("LEM_4_1")
    run.evaluate({"g": g, "q": sorted(set(q))})
    return run.done()


def check_census_symmetry(x: Graph, y: Graph) -> VerificationReport:
    run = _Run("PROP_2_1")
    run.evaluate({"x": x, "y": y})
    return run.done()


# ---------------------------------------------------------------------------
# seeded suites

def run_thm_1_4_suite(n: int, d1: int, d2: int, trials: int = DEFAULT_TRIALS, seed: int | None = 0,
                      threads: int = 1) -> VerificationReport:
    """Random pairs with min-degree floors (d1, d2); no connectivity filter needed above n/2."""
    run = _Run("THM_1_4", {"n": n, "d1": d1, "d2": d2, "trials": trials}, seed)
    batch = []
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        x = cons.random_graph_min_degree(n, d1, connected=False, seed=rng.randrange(2**63))
        y = cons.random_graph_min_degree(n, d2, connected=False, seed=rng.randrange(2**63))
        batch.append({"x": x, "y": y})
    run.evaluate_many(batch, threads)
    return run.done()


def run_thm_1_5_suite(n: int, d1: int, d2: int, trials: int = DEFAULT_TRIALS, seed: int | None = 0,
                      threads: int = 1) -> VerificationReport:
    run = _Run("THM_1_5", {"n": n, "d1": d1, "d2": d2, "trials": trials}, seed)
    batch = []
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        x = cons.random_graph_min_degree(n, d1, connected=True, seed=rng.randrange(2**63))
        y = cons.random_graph_min_degree(n, d2, connected=True, seed=rng.randrange(2**63))
        batch.append({"x": x, "y": y})
    run.evaluate_many(batch, threads)
    return run.done()


def _krr_floor_pairs(r: int) -> list[tuple[int, int]]:
    """Floor pairs (d1, d2) inside K_{r,r} with 2(d1 + d2) >= 3r + 2, tight sum first."""
    need = math.ceil((3 * r + 2) / 2)
    pairs = [(a, need - a) for a in range(0, r + 1) if 0 <= need - a <= r]
    return pairs or [(r, r)]


def run_thm_1_10_suite(r: int, trials: int = 50, seed: int | None = 0, threads: int = 1) -> VerificationReport:
    run = _Run("THM_1_10", {"r": r, "trials": trials}, seed)
    floors = _krr_floor_pairs(r)
    batch = []
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        d1, d2 = rng.choice(floors)
        x = cons.random_bipartite_subgraph(r, d1, seed=rng.randrange(2**63))
        y = cons.random_bipartite_subgraph(r, d2, seed=rng.randrange(2**63))
        batch.append({"x": x, "y": y, "r": r})
    run.evaluate_many(batch, threads)
    return run.done()


def _random_bipartite(n: int, rng: random.Random) -> Graph:
    a = rng.randint(1, n - 1)
    p = rng.uniform(0.3, 1.0)
    edges = [(i, j) for i in range(a) for j in range(a, n) if rng.random() < p]
    return Graph.from_edges(n, edges, (range(a), range(a, n)))


def run_prop_2_2_suite(trials: int = 50, seed: int | None = 0, max_n: int = 7,
                       threads: int = 1) -> VerificationReport:
    """Random bipartite pairs with 3 <= n <= max_n; arbitrary part sizes and densities."""
    run = _Run("PROP_2_2", {"trials": trials, "max_n": max_n}, seed)
    batch = []
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        n = rng.randint(3, max_n)
        batch.append({"x": _random_bipartite(n, rng), "y": _random_bipartite(n, rng)})
    run.evaluate_many(batch, threads)
    return run.done()


def run_prop_2_3_suite(rs=(2, 3, 4)) -> VerificationReport:
    run = _Run("PROP_2_3", {"r": list(rs)})
    for r in rs:
        run.evaluate({"r": r})
    return run.done()


def run_wilson_suite(claim_id: str, graphs: dict[str, Graph] | list[Graph]) -> VerificationReport:
    """THM_2_6 or THM_2_8 over a graph collection; failed hypotheses are kept as evidence rows."""
    if claim_id not in ("THM_2_6", "THM_2_8"):
        raise VerifyError(f"not a star-graph claim: {claim_id}")
    items = graphs.items() if isinstance(graphs, dict) else enumerate(graphs)
    run = _Run(claim_id)
    for name, y in items:
        if claim_id == "THM_2_8" and y.n < 3:
            continue
        hyp, concl, detail = EVALUATORS[claim_id](y)
        detail["name"] = str(name)
        run.add({"y": y}, (hyp, concl, detail), evidence=not hyp and concl is False)
    return run.done()


def run_census_symmetry_suite(graphs: dict[str, Graph]) -> VerificationReport:
    """PROP_2_1 over every ordered pair drawn from ``graphs`` (all on the same vertex count)."""
    run = _Run("PROP_2_1", {"graphs": sorted(graphs)})
    for x, y in product(graphs.values(), repeat=2):
        run.evaluate({"x": x, "y": y})
    return run.done()


def run_prop_1_6_suite(ns=(5, 6, 7), k: int = 5) -> VerificationReport:
    run = _Run("PROP_1_6", {"n": list(ns), "k": k})
    for n in ns:
        run.evaluate({"n": n, "k": k})
    return run.done()


def legal_thm_1_11_params(r: int) -> list[tuple[int, int]]:
    total = 3 * r // 2
    return [(d1, total - d1) for d1 in range(0, r + 1) if 0 <= total - d1 <= r]


def run_thm_1_11_suite(rs=(2, 3, 4)) -> VerificationReport:
    run = _Run("THM_1_11", {"r": list(rs)})
    for r in rs:
        for d1, d2 in legal_thm_1_11_params(r):
            run.evaluate({"r": r, "d1": d1, "d2": d2})
    return run.done()


def random_lemma_4_1_instance(m: int, rng: random.Random) -> tuple[Graph, list[int]]:
    """A random (G, Q) pair on m vertices satisfying the size/degree hypothesis."""
    lo = max(0, math.ceil((m + 2) / 3))
    while True:
        target = rng.randint(lo, m - 1)
        g = cons.random_graph_min_degree(m, target, connected=False, seed=rng.randrange(2**63))
        d = min_degree(g)
        q_min = max(5, math.ceil((3 * m + 2 - 3 * d) / 2))
        if q_min <= m:
            size = rng.randint(q_min, m)
            return g, sorted(rng.sample(range(m), size))


def run_lemma_4_1_suite(m: int, instances: int = 1000, seed: int | None = 0) -> VerificationReport:
    run = _Run("LEM_4_1", {"m": m, "instances": instances}, seed)
    rng = random.Random(seed)
    for _ in range(instances):
        g, q = random_lemma_4_1_instance(m, rng)
        run.evaluate({"g": g, "q": q})
    if run.report.non_vacuous < MIN_NON_VACUOUS:
        run.report.notes.append(f"only {run.report.non_vacuous} non-vacuous instances")
    return run.done()


def _krr_subgraphs(r: int) -> list[Graph]:
    cross = [(i, r + j) for i in range(r) for j in range(r)]
    out = []
    for mask in range(1 << len(cross)):
        edges = [e for k, e in enumerate(cross) if mask >> k & 1]
        out.append(Graph.from_edges(2 * r, edges, (range(r), range(r, 2 * r))))
    return out


def _lemma_6_2_pairs(x: Graph, y: Graph, sigma) -> list[tuple[int, int]]:
    inv = inverse(sigma)
    return [(u, v) for u, v in product(range(y.n), repeat=2)
            if u != v and _part_of(y, u) != _part_of(y, v) and x.has_edge(inv[u], inv[v])]


def check_lemma_6_2(r: int, seed: int | None = 0, trials: int = DEFAULT_TRIALS) -> VerificationReport:
    """Filtered-reachability check of the realignment step.

    r = 2 is exhaustive over every subgraph pair, bijection and ordered (u, v);
    larger r samples ``trials`` hypothesis-true instances.
    """
    if r > 4:
        raise VerifyError("path search is limited to r <= 4")
    run = _Run("LEM_6_2", {"r": r, "trials": trials}, seed)
    n = 2 * r
    if r == 2:
        subs = _krr_subgraphs(r)
        for x, y in product(subs, repeat=2):
            if 2 * (min_degree(x) + min_degree(y)) < 3 * r + 2:
                continue
            for sigma in _all_bijections(n):
                for u, v in _lemma_6_2_pairs(x, y, sigma):
                    run.evaluate({"x": x, "y": y, "sigma": sigma, "u": u, "v": v})
        return run.done()
    rng = random.Random(seed)
    floors = _krr_floor_pairs(r)
    while run.report.instances_checked < trials:
        d1, d2 = rng.choice(floors)
        x = cons.random_bipartite_subgraph(r, d1, seed=rng.randrange(2**63))
        y = cons.random_bipartite_subgraph(r, d2, seed=rng.randrange(2**63))
        sigma = list(range(n))
        rng.shuffle(sigma)
        pairs = _lemma_6_2_pairs(x, y, sigma)
        if not pairs:
            continue
        u, v = rng.choice(pairs)
        run.evaluate({"x": x, "y": y, "sigma": tuple(sigma), "u": u, "v": v})
    return run.done()


def _all_bijections(n: int):
    return permutations(range(n))


def check_cor_1_12(r: int, trials: int = 20, seed: int | None = 0) -> VerificationReport:
    """Threshold evidence for ``FS(X, K_{r,r})`` having exactly two components.

    Even r: asserts two components whenever delta(X) >= r/2 + 1 (exhaustive at
    r = 2, sampled otherwise) and exhibits delta(X) = r/2 with more than two.
    Odd r: the threshold is ceil(r/2) or ceil(r/2) + 1; both bracketing rows are
    asserted and delta(X) = ceil(r/2) samples are reported without a verdict.
    """
    if not 2 <= r <= 4:
        raise VerifyError("census size limits this check to 2 <= r <= 4")
    run = _Run("COR_1_12", {"r": r, "trials": trials}, seed)
    half = r // 2
    upper_floor = half + 1 if r % 2 == 0 else half + 2
    if r == 2:
        uppers = [g for g in _krr_subgraphs(r) if min_degree(g) >= upper_floor]
    else:
        uppers = [cons.random_bipartite_subgraph(r, upper_floor, seed=s) for s in _child_seeds(seed, trials)]
    for x in uppers:
        run.evaluate({"kind": "upper", "x": x, "r": r})
    run.evaluate({"kind": "lower", "r": r}, evidence=True)
    if r % 2 == 0:
        run.report.notes.append(f"threshold d*_{{{r},{r}}} = {half + 1} consistent with all rows")
    else:
        run.report.notes.append(f"odd r: threshold is {half + 1} or {half + 2}; middle rows are unadjudicated")
        middle = [g for g in (cons.random_bipartite_subgraph(r, half + 1, seed=s)
                              for s in _child_seeds(seed + 1 if seed is not None else None, trials))
                  if min_degree(g) == half + 1]
        for x in middle:
            run.evaluate({"kind": "middle", "x": x, "r": r}, evidence=True)
    return run.done()


def search_conjecture_8_1(n: int, d1: int, d2: int, trials: int = 50, seed: int | None = 0,
                          threads: int = 1) -> VerificationReport:
    """Hunt for connected pairs above the conjectured line whose FS graph is disconnected.

    Any hit is recorded verbatim as a potential counterexample; a clean run is
    only evidence.
    """
    if not (0 <= d1 <= n - 1 and 0 <= d2 <= n - 1):
        raise VerifyError("min degrees must lie in 0..n-1")
    lo, hi = sorted((d1, d2))
    if 2 * lo + 3 * hi < 3 * n:
        raise VerifyError("(d1, d2) must satisfy 2 min + 3 max >= 3n")
    if n > DEFAULT_CAP:
        raise VerifyError(f"n={n} exceeds the census cap {DEFAULT_CAP}")
    run = _Run("CONJ_8_1", {"n": n, "d1": d1, "d2": d2, "trials": trials}, seed)
    batch = []
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        x = cons.random_graph_min_degree(n, d1, connected=True, seed=rng.randrange(2**63))
        y = cons.random_graph_min_degree(n, d2, connected=True, seed=rng.randrange(2**63))
        batch.append({"x": x, "y": y})
    run.evaluate_many(batch, threads)
    run.report.notes.append("search only; a clean run does not establish the conjecture")
    return run.done()


def search_conjecture_8_2(n: int, d1: int, d2: int, trials: int = 50, seed: int | None = 0
                          ) -> VerificationReport:
    """Look for connected X, Y with min degrees exactly (d1, d2) and FS(X, Y) disconnected.

    Existential, so nothing here is a counterexample: each sample with the exact
    degrees is a row (conclusion = disconnected), and disconnected ones are kept
    as witnesses in ``evidence``.  The lower-bound pairs are tried first.
    """
    if not (1 <= d1 <= n - 1 and 1 <= d2 <= n - 1):
        raise VerifyError("min degrees must lie in 1..n-1")
    if n > DEFAULT_CAP:
        raise VerifyError(f"n={n} exceeds the census cap {DEFAULT_CAP}")
    report = VerificationReport("CONJ_8_2", {"n": n, "d1": d1, "d2": d2, "trials": trials}, seed)
    t0 = time.perf_counter()
    candidates = []
    for k in range(5, n + 1):
        pair = cons.prop_1_6_pair(n, k)
        candidates.append((pair.x, pair.y))
    for s in _child_seeds(seed, trials):
        rng = random.Random(s)
        candidates.append((cons.random_graph_min_degree(n, d1, seed=rng.randrange(2**63)),
                           cons.random_graph_min_degree(n, d2, seed=rng.randrange(2**63))))
    for x, y in candidates:
        if min_degree(x) != d1 or min_degree(y) != d2:
            continue
        c = component_census(FsInstance(x, y))
        disconnected = not c.connected
        report.hypothesis_holds.append(True)
        report.conclusion_holds.append(disconnected)
        if disconnected:
            report.evidence.append({"index": report.instances_checked - 1, "claim_id": "CONJ_8_2",
                                    "inputs": _encode({"x": x, "y": y}), "hypothesis": True,
                                    "conclusion": True, "detail": {"size_counts": size_histogram(c.sizes)}})
    lo, hi = sorted((d1, d2))
    report.stats = {"slack": 3 * n - (2 * lo + 3 * hi), "witnesses": len(report.evidence)}
    report.notes.append("existence search; absence of witnesses is not evidence against the conjecture")
    report.elapsed = time.perf_counter() - t0
    return report
