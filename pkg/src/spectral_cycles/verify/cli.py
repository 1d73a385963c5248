"""Command-line entry point.

Exit codes: 0 verified/completed, 1 counterexample found (witness on stdout),
2 usage or domain error, 3 oracle budget exceeded or eigensolver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

import numpy as np

from .. import cycles, transforms
from ..cycles import BudgetExceeded, FactStatus, check_fact, circumference, path_with_ends_in
from ..graph import Graph, GraphDomainError, construct_snk, construct_snk_plus
from ..spectral import ConvergenceError, lemma8_compare, quotient_certificate, spectral_radius
from .enumeration import enumerate_labeled
from .graph6 import Graph6Error, parse_graph6, read_graph6_file, to_g6_str
from .instances import lemma5_hypotheses, random_lemma5_instance
from .scan import CycleConstraint, Target, default_jobs, scan_extremal
from .search import hillclimb_search

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _graphs(args) -> Iterator[Graph]:
    if getattr(args, "g6", None):
        yield parse_graph6(args.g6)
    elif getattr(args, "file", None):
        yield from read_graph6_file(args.file)
    elif getattr(args, "enumerate", None):
        yield from enumerate_labeled(args.enumerate)
    else:
        raise GraphDomainError("give a graph with --g6, --file or --enumerate")


def cmd_construct(args) -> int:
    g = construct_snk(args.n, args.k) if args.kind == "snk" else construct_snk_plus(args.n, args.k)
    if args.g6out:
        print(to_g6_str(g))
    else:
        _emit({"graph6": to_g6_str(g), "n": g.n, "k": args.k, "edges": g.edge_count()})
    return EXIT_OK


def cmd_mu(args) -> int:
    for g in _graphs(args):
        r = spectral_radius(g)
        _emit({"graph6": to_g6_str(g), "mu": r.mu, "iterations": r.iterations, "residual": r.residual})
    return EXIT_OK


def cmd_certify(args) -> int:
    g = parse_graph6(args.g6)
    cert = quotient_certificate(g, _num(args.a), _num(args.b), _num(args.c), args.muref)
    out = cert.to_dict()
    out["mu"] = spectral_radius(g).mu
    _emit(out)
    return EXIT_OK


def _num(text: str):
    value = float(text)
    return int(value) if value.is_integer() else value


def cmd_transform(args) -> int:
    g = parse_graph6(args.g6)
    if args.mode == "step":
        if args.u is None or args.v is None:
            raise GraphDomainError("transform step needs -u and -v")
        h, step = transforms.lemma6_step(g, args.u, args.v)
        steps = [step]
    else:
        trace = transforms.reduce_to_fixpoint(g)
        h, steps = trace.final, trace.steps
    for s in steps:
        _emit(s.to_dict())
    bad = [i for i, s in enumerate(steps) if not s.invariants_hold]
    _emit({"initial": to_g6_str(g), "final": to_g6_str(h), "steps": len(steps), "violations": bad})
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_circumference(args) -> int:
    g = parse_graph6(args.g6)
    w = circumference(g, args.budget)
    _emit({"graph6": args.g6, "circumference": 0 if w is None else w.length,
           "cycle": None if w is None else list(w.vertices)})
    return EXIT_OK


def cmd_verify_fact(args) -> int:
    which = args.which
    if which in ("eg", "f1", "f2", "f4"):
        checked = 0
        for g in _graphs(args):
            ells = [args.ell] if args.ell is not None else list(range(3, g.n + 1))
            for ell in ells if which == "eg" else [None]:
                res = check_fact(g, which, k=args.k, ell=ell, plus=args.plus, budget=args.budget)
                checked += 1
                if res.status is FactStatus.COUNTEREXAMPLE:
                    _emit({"fact": which, "status": res.status.value, "graph6": to_g6_str(g),
                           "k": args.k, "ell": ell, "note": res.note})
                    return EXIT_COUNTEREXAMPLE
                if args.g6:
                    _emit({"fact": which, "status": res.status.value, "ell": ell, "k": args.k,
                           "witness": None if res.witness is None else list(res.witness.vertices),
                           "note": res.note})
        _emit({"fact": which, "checked": checked, "counterexamples": 0})
        return EXIT_OK

    if which == "lemma5":
        rng = np.random.default_rng(args.seed)
        for i in range(args.count):
            inst = random_lemma5_instance(rng, remark=args.remark)
            if not lemma5_hypotheses(inst, remark=args.remark):
                raise GraphDomainError(f"instance {i} does not meet the lemma hypotheses")
            w = path_with_ends_in(inst.graph, inst.a, inst.b, 2 * inst.k + 1, inst.k, args.budget)
            if w is None:
                _emit({"fact": "lemma5", "status": "Counterexample", "graph6": to_g6_str(inst.graph),
                       "A": [v for v in range(inst.graph.n) if inst.a >> v & 1], "k": inst.k})
                return EXIT_COUNTEREXAMPLE
        _emit({"fact": "lemma5", "checked": args.count, "counterexamples": 0})
        return EXIT_OK

    if which == "lemma8":
        h = parse_graph6(args.h) if args.h else None
        r = lemma8_compare(h, args.t1 + args.t2, args.t1, args.t2)
        _emit({"fact": "lemma8", "mu_merged": r.mu_merged, "mu_split": r.mu_split, "strict": r.strict})
        return EXIT_COUNTEREXAMPLE if r.strict is False else EXIT_OK

    if which == "claims":
        g = parse_graph6(args.g6)
        if args.k is None:
            raise GraphDomainError("claims needs -k")
        fix = transforms.is_fixpoint(g)
        failed = False
        for u in ([args.u] if args.u is not None else range(g.n)):
            c = transforms.claim_checks(g, u, args.k)
            _emit({"u": u, "fixpoint": fix, **c.__dict__})
            if fix and (not c.structural or (c.cycle_free and not c.bounds)):
                failed = True
        return EXIT_COUNTEREXAMPLE if failed else EXIT_OK

    if which == "perron":
        g = parse_graph6(args.g6)
        bad = transforms.perron_monotonicity_check(g)
        _emit({"fact": "perron", "graph6": args.g6, "violations": [v.__dict__ for v in bad]})
        return EXIT_COUNTEREXAMPLE if bad else EXIT_OK

    raise GraphDomainError(f"unknown fact {which}")


def cmd_scan(args) -> int:
    constraint = CycleConstraint.parse(args.constraint)
    if args.g6:
        source: Iterable[Graph] = read_graph6_file(args.g6)
        label = f"g6:{args.g6}"
    elif args.enumerate:
        source = enumerate_labeled(args.n, allow_large=args.allow_large)
        label = "enumerate"
    else:
        raise GraphDomainError("scan needs --g6 PATH or --enumerate")
    report = scan_extremal(source, args.n, args.k, constraint, args.target,
                           jobs=args.jobs or default_jobs(), budget=args.budget, source_label=label)
    if args.out:
        with open(args.out, "w") as fh:
            report.write_jsonl(fh)
        _emit({"summary": report.summary()})
    else:
        report.write_jsonl(sys.stdout)
    return EXIT_OK if report.complete else EXIT_BUDGET


def cmd_search(args) -> int:
    constraint = CycleConstraint.parse(args.constraint)
    res = hillclimb_search(args.n, args.k, constraint, args.seed, args.budget, target=args.target)
    out = res.to_dict()
    if not args.history:
        out.pop("history")
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spectral-cycles", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def source_opts(p, enumerate_flag=False):
        grp = p.add_mutually_exclusive_group()
        grp.add_argument("--g6", help="graph6 string")
        grp.add_argument("--file", help="file with one graph6 string per line")
        if enumerate_flag:
            grp.add_argument("--enumerate", type=int, metavar="N", help="all labelled graphs on N vertices")

    p = sub.add_parser("construct", help="build S_{n,k} or S+_{n,k}")
    p.add_argument("kind", choices=["snk", "snkp"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--g6out", action="store_true", help="print only the graph6 string")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("mu", help="spectral radius")
    source_opts(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("certify", help="quotient-polynomial column-sum certificate")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", default="0")
    p.add_argument("--muref", type=float, default=0.0)
    p.add_argument("--g6", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("transform", help="move-neighbour step or full reduction")
    p.add_argument("mode", choices=["step", "fixpoint"])
    p.add_argument("--g6", required=True)
    p.add_argument("-u", type=int)
    p.add_argument("-v", type=int)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("circumference", help="longest cycle")
    p.add_argument("--g6", required=True)
    p.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_circumference)

    p = sub.add_parser("verify-fact", help="check a fact or lemma on concrete instances")
    p.add_argument("which", choices=["eg", "f1", "f2", "f4", "lemma5", "lemma8", "claims", "perron"])
    source_opts(p, enumerate_flag=True)
    p.add_argument("-k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--plus", action="store_true", help="F4 on S+_{n,k}")
    p.add_argument("-u", type=int)
    p.add_argument("--h", help="graph6 of H for lemma8 (omit for the empty graph)")
    p.add_argument("--t1", type=int, default=3)
    p.add_argument("--t2", type=int, default=3)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--remark", action="store_true", help="lemma5: use the e(A,B) > k|B| hypothesis")
    p.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify_fact)

    p = sub.add_parser("scan", help="extremal scan over a corpus or full enumeration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--constraint", required=True, help="atleast:L | exactly:L | window:LO:HI")
    p.add_argument("--target", choices=["snk", "snkp"], default="snk")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--g6", metavar="PATH", help="graph6 corpus file")
    grp.add_argument("--enumerate", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit enumeration at n = 8")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: all CPUs)")
    p.add_argument("--out", help="write JSON-lines report here")
    p.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("search", help="seeded hill-climbing counterexample search")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--constraint", required=True)
    p.add_argument("--target", choices=["snk", "snkp"], default="snk")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--history", action="store_true")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphDomainError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, ConvergenceError) as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
