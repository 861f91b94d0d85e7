"""``fs-lab`` command line: constructions, censuses, classification and the claim harness.

Results go to stdout as JSON; the run header (cap, seed, threads) goes to
stderr.  Exit codes: 0 success, 1 counterexample found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import constructions as cons
from . import verify
from .classify import check_half_degree_wilsonian, classify, spanning_star_center, spanning_star_plus
from .engine import (
    DEFAULT_BUDGET,
    DEFAULT_CAP,
    CapExceeded,
    EngineError,
    FsInstance,
    component_census,
    exchangeable,
    memory_estimate,
)
from .graph import Graph, GraphError, load_graph, min_degree
from .perm import PermError, check_bijection

log = logging.getLogger("fs_lab")

SINGLE_FAMILIES = ("star", "star_plus", "cycle", "path", "complete", "complete_bipartite", "theta0",
                   "random", "random_bipartite")
PAIR_FAMILIES = ("prop_1_6", "thm_1_11")


class UsageError(Exception):
    pass


def _emit(payload: dict, out: str | None = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _effective_cap(args) -> int:
    if args.cap is None:
        return DEFAULT_CAP
    if args.cap > DEFAULT_CAP and not args.accept_memory:
        raise UsageError(f"--cap {args.cap} needs --accept-memory "
                         f"(a census at n={args.cap} takes about {memory_estimate(args.cap) / 2**20:,.0f} MiB)")
    return args.cap


# ---------------------------------------------------------------------------
# construct

def _build_single(args) -> Graph:
    fam = args.family
    if fam == "theta0":
        return cons.theta0()
    if fam == "complete_bipartite":
        _need(args, "a", "b")
        return cons.complete_bipartite(args.a, args.b)
    if fam == "random":
        _need(args, "n", "min_degree")
        return cons.random_graph_min_degree(args.n, args.min_degree, connected=not args.allow_disconnected,
                                            seed=args.seed)
    if fam == "random_bipartite":
        _need(args, "r", "min_degree")
        return cons.random_bipartite_subgraph(args.r, args.min_degree, seed=args.seed)
    _need(args, "n")
    return getattr(cons, fam)(args.n)


def cmd_construct(args) -> int:
    if args.family in PAIR_FAMILIES:
        if args.family == "prop_1_6":
            _need(args, "n", "k")
            pair = cons.prop_1_6_pair(args.n, args.k)
        else:
            _need(args, "r", "d1", "d2")
            pair = cons.thm_1_11_pair(args.r, args.d1, args.d2)
        if args.out:
            _emit(pair.x.to_json(), f"{args.out}_x.json")
            _emit(pair.y.to_json(), f"{args.out}_y.json")
            _emit({"sigma": list(pair.sigma), "meta": pair.meta}, f"{args.out}_sigma.json")
        else:
            _emit(pair.to_json())
        return 0
    _emit(_build_single(args).to_json(), args.out)
    return 0


# ---------------------------------------------------------------------------
# components / classify / exchangeable

def _load_pair(args) -> FsInstance:
    x, y = load_graph(args.x), load_graph(args.y)
    return FsInstance(x, y)


def cmd_components(args) -> int:
    inst = _load_pair(args)
    t0 = time.perf_counter()
    census = component_census(inst, threads=args.threads, cap=_effective_cap(args))
    payload = census.to_json()
    if args.timing:
        payload["elapsed"] = round(time.perf_counter() - t0, 3)
    _emit(payload, args.out)
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    payload = classify(g).to_json()
    star_plus = spanning_star_plus(g)
    payload.update({
        "n": g.n,
        "min_degree": min_degree(g),
        "half_degree_test": check_half_degree_wilsonian(g),
        "spanning_star_center": spanning_star_center(g),
        "spanning_star_plus": None if star_plus is None else {"center": star_plus[0], "edge": list(star_plus[1])},
    })
    _emit(payload, args.out)
    return 0


def cmd_exchangeable(args) -> int:
    inst = _load_pair(args)
    _effective_cap(args)
    sigma = check_bijection(args.sigma)
    forbidden = set(args.forbid) if args.forbid else None
    ok, seq = exchangeable(inst, sigma, args.u, args.v, forbidden=forbidden, budget=args.budget)
    _emit({"sigma": list(sigma), "u": args.u, "v": args.v, "forbidden": sorted(forbidden or ()),
           "exchangeable": ok, "sequence": None if seq is None else [list(p) for p in seq]}, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify / search

def _graph_arg(args, name: str) -> Graph | None:
    path = getattr(args, name)
    return None if path is None else load_graph(path)


def _zoo(n: int) -> dict[str, Graph]:
    return {f"{name}_{n}": g for name, g in cons.fixture_zoo(n).items()}


def _run_claim(args) -> verify.VerificationReport:
    claim = args.claim
    x, y = _graph_arg(args, "x"), _graph_arg(args, "y")
    seed, trials = args.seed, args.trials
    pair_given = x is not None and y is not None

    if claim in ("THM_1_4", "THM_1_5"):
        if pair_given:
            return (verify.check_thm_1_4 if claim == "THM_1_4" else verify.check_thm_1_5)(x, y)
        _need(args, "n", "d1", "d2")
        suite = verify.run_thm_1_4_suite if claim == "THM_1_4" else verify.run_thm_1_5_suite
        return suite(args.n, args.d1, args.d2, trials or verify.DEFAULT_TRIALS, seed, args.threads or 1)
    if claim == "THM_1_10":
        _need(args, "r")
        if pair_given:
            return verify.check_thm_1_10(x, y, args.r)
        return verify.run_thm_1_10_suite(args.r, trials or 50, seed, args.threads or 1)
    if claim == "PROP_2_2":
        if pair_given:
            return verify.check_prop_2_2(x, y)
        return verify.run_prop_2_2_suite(trials or 50, seed, args.n or 7, args.threads or 1)
    if claim == "PROP_2_3":
        return verify.check_prop_2_3(args.r) if args.r is not None else verify.run_prop_2_3_suite()
    if claim in ("THM_2_6", "THM_2_8"):
        if y is not None:
            return verify.run_wilson_suite(claim, {"input": y})
        _need(args, "n")
        return verify.run_wilson_suite(claim, _zoo(args.n))
    if claim == "PROP_1_6":
        _need(args, "n", "k")
        return verify.check_prop_1_6(args.n, args.k)
    if claim == "THM_1_11":
        _need(args, "r")
        if args.d1 is None and args.d2 is None:
            return verify.run_thm_1_11_suite((args.r,))
        _need(args, "d1", "d2")
        return verify.check_thm_1_11(args.r, args.d1, args.d2)
    if claim == "LEM_4_1":
        if args.graph is not None:
            _need(args, "q")
            return verify.check_lemma_4_1(load_graph(args.graph), args.q)
        _need(args, "m")
        return verify.run_lemma_4_1_suite(args.m, trials or 1000, seed)
    if claim == "LEM_6_2":
        _need(args, "r")
        return verify.check_lemma_6_2(args.r, seed, trials or verify.DEFAULT_TRIALS)
    if claim == "PROP_2_1":
        if pair_given:
            return verify.check_census_symmetry(x, y)
        _need(args, "n")
        return verify.run_census_symmetry_suite(_zoo(args.n))
    if claim == "COR_1_12":
        _need(args, "r")
        return verify.check_cor_1_12(args.r, trials or 20, seed)
    raise UsageError(f"unknown claim {claim!r}; expected one of {', '.join(verify.CLAIMS)}")


def _report_exit(report: verify.VerificationReport, args) -> int:
    _emit(report.to_json(timing=args.timing), args.out)
    if report.counterexamples:
        log.warning("%s: %d counterexample(s) found", report.claim_id, len(report.counterexamples))
        return 1
    return 0


def cmd_verify(args) -> int:
    if args.claim not in verify.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; expected one of {', '.join(verify.CLAIMS)}")
    return _report_exit(_run_claim(args), args)


def cmd_search(args) -> int:
    _need(args, "n", "d1", "d2")
    trials = args.trials or 50
    if args.conjecture == "CONJ_8_1":
        report = verify.search_conjecture_8_1(args.n, args.d1, args.d2, trials, args.seed, args.threads or 1)
    else:
        report = verify.search_conjecture_8_2(args.n, args.d1, args.d2, trials, args.seed)
    return _report_exit(report, args)


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="census worker threads (default: FS_LAB_THREADS, else CPU count)")
    common.add_argument("--cap", type=int, default=None, help=f"census size cap (default {DEFAULT_CAP})")
    common.add_argument("--accept-memory", action="store_true",
                        help="acknowledge the memory estimate when raising --cap above the default")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include elapsed seconds in the output")
    common.add_argument("--out", default=None, help="output file (pairs: filename prefix)")
    common.add_argument("-v", "--verbose", action="store_true")

    params = argparse.ArgumentParser(add_help=False)
    for flag in ("n", "k", "r", "d1", "d2", "a", "b", "m", "min-degree", "trials"):
        params.add_argument(f"--{flag}", type=int, default=None)

    parser = argparse.ArgumentParser(prog="fs-lab", description="Friends-and-strangers graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, params], help="build a named graph or lower-bound pair")
    p.add_argument("family", choices=SINGLE_FAMILIES + PAIR_FAMILIES)
    p.add_argument("--allow-disconnected", action="store_true", help="random: skip the connectivity filter")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("components", parents=[common], help="component census of FS(X, Y)")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("classify", parents=[common], help="Wilsonian / almost-Wilsonian report")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("exchangeable", parents=[common], help="decide whether (u, v) o sigma ~ sigma")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--sigma", type=_int_list, required=True, help="bijection as comma-separated values")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--forbid", type=_int_list, default=None, help="Y-vertices that may not take part in swaps")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_exchangeable)

    p = sub.add_parser("verify", parents=[common, params], help="check one claim at desk scale")
    p.add_argument("claim", help=", ".join(verify.CLAIMS))
    p.add_argument("--x", default=None, help="graph JSON for X")
    p.add_argument("--y", default=None, help="graph JSON for Y")
    p.add_argument("--graph", default=None, help="graph JSON for LEM_4_1")
    p.add_argument("--q", type=_int_list, default=None, help="vertex subset for LEM_4_1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common, params], help="randomized hunt near a conjectured boundary")
    p.add_argument("conjecture", choices=verify.SEARCHES)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if args.verbose else logging.INFO)
    log.propagate = False
    if args.threads is not None:
        if args.threads < 1:
            parser.error("--threads must be positive")
        # the harness reaches the engine through default_threads()
        os.environ["FS_LAB_THREADS"] = str(args.threads)
    threads = args.threads or int(os.environ.get("FS_LAB_THREADS") or 0) or os.cpu_count() or 1
    log.info("cap=%s seed=%s threads=%d", args.cap or DEFAULT_CAP, args.seed, threads)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CapExceeded as exc:
        log.error("%s", exc)
        return 2
    except (GraphError, PermError, EngineError, cons.ConstructionError, verify.VerifyError,
            OSError, json.JSONDecodeError) as exc:
        log.error("error: %s", exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
