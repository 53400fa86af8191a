"""Command line interface: ``bergekit <command> ...``.

Every command prints JSON (except ``bounds``, which prints a rational) and
signals success only through its exit code.  Pattern arguments name ``.hg``
files; a bare corpus name such as ``k3.hg`` resolves to the shipped corpus.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from pathlib import Path

from . import hgio
from .berge import find_berge, verify_observation
from .boundslab import (WeightTable, alpha_constant, claim1_audit, decaen_bound,
                        ratio_ceiling, rows_to_csv, scaling_experiment, single_edge_example)
from .extremal import (GridError, VerificationError, ex_berge, ex_generalized, ex_uniform,
                       ramsey_number, verify_expansion_chain, verify_sandwich)
from .hypercore import (Hypergraph, HypergraphError, RedBlueHypergraph, as_uniform,
                        clique_replacement, complete_uniform, count_cliques,
                        count_sub_copies, expansion, shadow, star_construction,
                        turan_hypergraph)
from .matchdecomp import (PartitionError, all_bipartite, incidence_bipartite,
                          matching_partition, partition_suite, random_bipartite,
                          redblue_reduction)
from .search import SearchBudget

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _digest(args: argparse.Namespace) -> str:
    h = hashlib.sha256()
    for key in sorted(vars(args)):
        val = getattr(args, key)
        if key == "func":
            continue
        h.update(f"{key}={val}\n".encode())
        if isinstance(val, str) and key in ("pattern", "host", "graph"):
            try:
                h.update(hgio.resolve(val).read_bytes())
            except FileNotFoundError:
                pass
    return h.hexdigest()[:16]


def _report(args, outputs: dict, assertions: dict[str, bool] | None = None) -> dict:
    return {"command": args.argv, "inputs_digest": _digest(args), "outputs": outputs,
            "assertions": assertions or {}}


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _pattern(path, r=None):
    try:
        return hgio.load_pattern(path, r)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None


def _host(path) -> Hypergraph:
    try:
        H = hgio.read(hgio.resolve(path))
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None
    if isinstance(H, RedBlueHypergraph):
        return H.base.base
    return H


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {getattr(args, 'kind', '')} needs "
                         + ", ".join("--" + n.replace("_", "-") for n in missing))


def _budget(args) -> SearchBudget:
    return SearchBudget(args.max_nodes, args.max_seconds, args.threads)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "turan":
        _need(args, "n", "r", "parts")
        H = turan_hypergraph(args.n, args.r, args.parts)
    elif kind == "expansion":
        _need(args, "pattern", "r")
        H = expansion(_pattern(args.pattern), args.r)
    elif kind == "complete":
        _need(args, "s", "r")
        H = complete_uniform(args.s, args.r)
    elif kind == "star":
        _need(args, "n", "r", "t")
        H = star_construction(args.n, args.r, args.t)
    elif kind == "single-edge":
        _need(args, "n")
        H = single_edge_example(args.n)
    else:
        _need(args, "graph", "r")
        H = clique_replacement(_pattern(args.graph), args.r)
    if args.out:
        hgio.write(H, args.out)
        _emit(_report(args, {"file": args.out, "n": H.n, "edges": H.m}))
    else:
        sys.stdout.write(hgio.dumps_hg(H))
    return EXIT_OK


def cmd_shadow(args) -> int:
    S = shadow(_host(args.host), args.r)
    if args.out:
        hgio.write(S, args.out)
        _emit(_report(args, {"file": args.out, "n": S.n, "edges": S.m}))
    else:
        sys.stdout.write(hgio.dumps_hg(S))
    return EXIT_OK


def cmd_detect(args) -> int:
    H = _host(args.host)
    F = _pattern(args.pattern)
    emb = find_berge(H, F)
    if emb is not None and args.witness:
        Path(args.witness).write_text(json.dumps(emb.to_json(), sort_keys=True) + "\n")
    _emit(_report(args, {"found": emb is not None,
                         "witness": emb.to_json() if emb else None}))
    return EXIT_OK if emb is not None else EXIT_FAIL


def cmd_count(args) -> int:
    H = _host(args.host)
    if args.cliques is not None:
        value = count_cliques(as_uniform(H), args.cliques)
        _emit(_report(args, {"cliques": value}))
    else:
        _need(args, "pattern")
        value = count_sub_copies(_pattern(args.pattern), H)
        _emit(_report(args, {"copies": value}))
    return EXIT_OK


def cmd_ex(args) -> int:
    _need(args, "n", "pattern")
    r = args.r if args.r is not None else args.k
    if r is None:
        raise UsageError("ex needs --r (or --k)")
    F = _pattern(args.pattern)
    opts = dict(collect_all=args.all, budget=_budget(args), force=args.force)
    if args.kind == "uniform":
        res = ex_uniform(args.n, r, F, **opts)
    elif args.kind == "berge":
        res = ex_berge(args.n, r, F, **opts)
    else:
        _need(args, "s")
        res = ex_generalized(args.n, r, args.s, F, **opts)
    _emit(_report(args, res.to_json(), {"exhausted": res.exhausted}))
    return EXIT_OK if res.exhausted else EXIT_FAIL


def cmd_ramsey(args) -> int:
    res = ramsey_number(_pattern(args.pattern), args.cap)
    _emit(_report(args, res.to_json()))
    return EXIT_OK


def _verify_lemma5(args) -> tuple[dict, dict]:
    if args.host:
        # the incidence graph of a hypergraph against its k-shadow
        _need(args, "k")
        G = incidence_bipartite(as_uniform(_host(args.host)), args.k)
        try:
            P = matching_partition(G)
        except PartitionError as exc:
            return {"error": str(exc), "dump": exc.dump}, {"partition_found": False}
        return {"partition": P.to_json()}, {"partition_found": not P.violations(G)}
    if args.random is not None:
        rng = random.Random(args.seed)
        graphs = (random_bipartite(rng) for _ in range(args.random))
    else:
        graphs = all_bipartite(args.max_a, args.max_b)
    rep = partition_suite(graphs)
    return rep, {"zero_hard_errors": rep["hard_errors"] == 0}


def _verify_lemma4(args) -> tuple[dict, dict]:
    _need(args, "host", "k", "r")
    H0 = as_uniform(_host(args.host))
    F = _pattern(args.pattern) if args.pattern else None
    out, rep = redblue_reduction(H0, args.k, args.r, pattern=F)
    checks = {"g_dominates": rep.g_dominates, "a2_shadows_blue": rep.a2_shadows_blue}
    if F is not None:
        checks["output_pattern_free"] = bool(rep.output_pattern_free)
    return {"report": rep.to_json(), "output": hgio.to_json(out)}, checks


def cmd_verify(args) -> int:
    kind = args.kind
    if kind in ("sandwich", "expansion-chain"):
        _need(args, "n", "k", "r", "pattern")
        F = _pattern(args.pattern)
        try:
            if kind == "sandwich":
                rep = verify_sandwich(args.n, args.k, args.r, F, budget=_budget(args),
                                      force=args.force)
            else:
                rep = verify_expansion_chain(args.n, args.r, args.k, F, budget=_budget(args),
                                             force=args.force)
        except VerificationError as exc:
            rep = exc.report
        outputs, checks = rep, dict(rep["checks"])
        checks["exact"] = rep["status"] != "inconclusive"
    elif kind == "lemma5":
        outputs, checks = _verify_lemma5(args)
    elif kind == "lemma4":
        outputs, checks = _verify_lemma4(args)
    elif kind == "claim1":
        _need(args, "host", "pattern")
        try:
            outputs = claim1_audit(_host(args.host), _pattern(args.pattern))
            checks = {"audit": True}
        except AssertionError as exc:
            outputs, checks = {"error": str(exc), "dump": getattr(exc, "dump", None)}, \
                {"audit": False}
    else:
        _need(args, "pattern", "l", "k")
        outputs = verify_observation(_pattern(args.pattern), args.l, args.k)
        checks = {"equal": outputs["equal"]}
    _emit(_report(args, outputs, checks))
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def cmd_bounds(args) -> int:
    if args.kind == "decaen":
        _need(args, "n", "r", "s")
        print(decaen_bound(args.n, args.r, args.s))
    elif args.kind == "alpha":
        _need(args, "r", "s")
        a = alpha_constant(args.r, args.s)
        print(f"{a.numerator}/{a.denominator}")
    else:
        _need(args, "pattern")
        c = ratio_ceiling(_pattern(args.pattern))
        print(f"{c.numerator}/{c.denominator}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    F = _pattern(args.pattern)
    r = args.r if args.r is not None else F.r
    gens = [g.strip() for g in args.generators.split(",") if g.strip()]
    weights = WeightTable.from_csv(args.weights) if args.weights else None
    rows = scaling_experiment(F, r, gens, range(args.n_min, args.n_max + 1), seed=args.seed,
                              pattern_name=Path(args.pattern).stem, weights=weights)
    text = rows_to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text)
        _emit(_report(args, {"file": args.csv, "rows": len(rows)}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget_flags(p):
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true", help="allow n outside the exact grid")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bergekit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write a construction as .hg")
    p.add_argument("kind", choices=["turan", "expansion", "complete", "star", "single-edge",
                                    "clique-replacement"])
    for flag in ("--n", "--r", "--parts", "--s", "--t"):
        p.add_argument(flag, type=int)
    p.add_argument("--pattern")
    p.add_argument("--graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("shadow", help="r-shadow of a hypergraph")
    p.add_argument("host")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("detect", help="Berge copy detection (exit 0 found, 1 free)")
    p.add_argument("host")
    p.add_argument("pattern")
    p.add_argument("--witness")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("count", help="count sub-copies of a pattern, or cliques")
    p.add_argument("host")
    p.add_argument("--pattern")
    p.add_argument("--cliques", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("ex", help="exact extremal numbers")
    p.add_argument("kind", choices=["uniform", "berge", "generalized"])
    for flag in ("--n", "--r", "--k", "--s"):
        p.add_argument(flag, type=int)
    p.add_argument("--pattern")
    p.add_argument("--all", action="store_true", help="collect every extremal class")
    _budget_flags(p)
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("ramsey", help="diagonal two-color Ramsey number")
    p.add_argument("--pattern", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("verify", help="run a verifier; exit 0 iff every check passes")
    p.add_argument("kind", choices=["sandwich", "expansion-chain", "lemma5", "lemma4",
                                    "claim1", "observation"])
    for flag in ("--n", "--r", "--k", "--l"):
        p.add_argument(flag, type=int)
    p.add_argument("--pattern")
    p.add_argument("--host")
    p.add_argument("--random", type=int, help="number of random bipartite graphs")
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--max-b", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    _budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="exact closed-form bounds")
    p.add_argument("kind", choices=["decaen", "alpha", "ceiling"])
    for flag in ("--n", "--r", "--s"):
        p.add_argument(flag, type=int)
    p.add_argument("--pattern")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="weight-sum scaling experiment as CSV")
    p.add_argument("kind", choices=["weightsum"])
    p.add_argument("--pattern", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--generators", default="single-edge")
    p.add_argument("--weights", help="CSV with columns m,w")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        args.argv = ["bergekit"] + argv
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except (HypergraphError, GridError, FileNotFoundError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
