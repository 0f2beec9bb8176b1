"""Command line entry point.

Subcommands: gen, op, homology, wcm, verify, destab, bench.  Complexes
stream between commands as JSON on standard pipes, so shell pipelines
compose the same way the library does.  Exit codes: 0 for pass/success,
1 for failure (a refuted statement or invalid input), 2 for inconclusive
or budget-exceeded outcomes.  Reports are byte-identical across runs for
identical inputs and flags; wall-clock timings appear only under
--timings (and in bench, whose output is inherently timing data).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import destab, doubling, homology, serialize, wcm
from .budget import BudgetExceededError
from .complexes import (
    barycentric,
    boundary_complex,
    f_vector,
    join,
    link,
    simplex_complex,
    skeleton,
    xm_complex,
)
from .reports import BUDGET_EXCEEDED, exit_code
from .snf import rank_mod_p


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        code = "unknown-command" if "invalid choice" in message else "bad-arguments"
        raise _CliError(code, message)


def build_parser() -> _Parser:
    p = _Parser(prog="tupling", description=__doc__)
    p.add_argument("--format", choices=["json", "human"], default="json")
    p.add_argument("--human", action="store_const", const="human",
                   dest="format", help="shorthand for --format human")
    p.add_argument("--budget-simplices", type=int, default=None)
    p.add_argument("--budget-entries", type=int, default=None)
    p.add_argument("--budget-iso-nodes", type=int, default=None)
    p.add_argument("--budget-tietze", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pi1", choices=["auto", "never"], default="auto")
    p.add_argument("--timings", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate standard complexes and graphs")
    gsub = gen.add_subparsers(dest="generator", required=True)
    for name in ("simplex", "boundary"):
        g = gsub.add_parser(name)
        g.add_argument("--n", type=int, required=True)
    g = gsub.add_parser("complete-graph")
    g.add_argument("--n", type=int, required=True)
    g = gsub.add_parser("hypergraph-matching")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int, required=True)

    op = sub.add_parser("op", help="apply a construction to a complex file")
    osub = op.add_subparsers(dest="operation", required=True)
    o = osub.add_parser("tuple")
    o.add_argument("--r", type=int, required=True)
    o.add_argument("file", nargs="?", default="-")
    o.add_argument("--table", action="store_true",
                   help="include the vertex-label table in the output")
    o = osub.add_parser("skeleton")
    o.add_argument("--d", type=int, required=True)
    o.add_argument("file", nargs="?", default="-")
    o = osub.add_parser("link")
    o.add_argument("--simplex", required=True,
                   help="comma-separated vertex ids, or 'empty'")
    o.add_argument("file", nargs="?", default="-")
    o = osub.add_parser("barycentric")
    o.add_argument("file", nargs="?", default="-")
    o.add_argument("--table", action="store_true")
    o = osub.add_parser("xm")
    o.add_argument("--m", type=int, required=True)
    o.add_argument("file", nargs="?", default="-")
    o.add_argument("--table", action="store_true")
    o = osub.add_parser("join")
    o.add_argument("left")
    o.add_argument("right")
    o = osub.add_parser("matching")
    o.add_argument("file", nargs="?", default="-",
                   help="graph JSON; output is its matching complex")

    h = sub.add_parser("homology", help="reduced integral homology of a complex")
    h.add_argument("file", nargs="?", default="-")
    h.add_argument("--degree", type=int, default=None)
    h.add_argument("--mod", type=int, default=None)

    w = sub.add_parser("wcm", help="weakly Cohen-Macaulay check")
    w.add_argument("file", nargs="?", default="-")
    w.add_argument("--dim", type=int, required=True)
    w.add_argument("--summary", action="store_true")

    v = sub.add_parser("verify", help="verification harnesses")
    vsub = v.add_subparsers(dest="statement", required=True)
    t1 = vsub.add_parser("theorem1")
    t1.add_argument("--file", default="-")
    t1.add_argument("--n", type=int, required=True)
    t1.add_argument("--r", type=int, required=True)
    t22 = vsub.add_parser("theorem22")
    t22.add_argument("--n", type=int, required=True)
    t22.add_argument("--r", type=int, required=True)
    l31 = vsub.add_parser("lemma31")
    l31.add_argument("--file", default="-")
    l31.add_argument("--n", type=int, required=True)
    l31.add_argument("--m", type=int, required=True)
    ll = vsub.add_parser("link-lemma")
    ll.add_argument("--file", default="-")
    ll.add_argument("--r", type=int, required=True)
    iso = vsub.add_parser("iso")
    iso.add_argument("--n", type=int, required=True)
    iso.add_argument("--r", type=int, required=True)
    p44 = vsub.add_parser("prop44")
    p44.add_argument("--n", type=int, required=True)
    p44.add_argument("--r", type=int, required=True)
    p45 = vsub.add_parser("prop45")
    p45.add_argument("--n", type=int, required=True)
    p45.add_argument("--r", type=int, required=True)

    d = sub.add_parser("destab", help="destabilization complex constructions")
    dsub = d.add_subparsers(dest="construction", required=True)
    iw = dsub.add_parser("injective-words")
    iw.add_argument("--n", type=int, required=True)
    sc = dsub.add_parser("s-complex")
    sc.add_argument("--n", type=int, required=True)
    sc.add_argument("--r", type=int, required=True)
    sc.add_argument("--table", action="store_true")

    b = sub.add_parser("bench", help="deterministic timing workloads")
    b.add_argument("suite", choices=["tupling", "homology", "wcm-grid"])
    return p


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError("bad-json", f"invalid JSON input: {exc}") from None


def _load_complex(path: str, args):
    kwargs = {}
    if args.budget_simplices is not None:
        kwargs["simplex_budget"] = args.budget_simplices
    try:
        return serialize.complex_from_obj(_read_json(path), **kwargs)
    except ValueError as exc:
        raise _CliError("bad-input", str(exc)) from None


def _cmd_gen(args):
    if args.generator == "simplex":
        return None, serialize.complex_to_obj(simplex_complex(args.n))
    if args.generator == "boundary":
        return None, serialize.complex_to_obj(boundary_complex(args.n))
    if args.generator == "complete-graph":
        return None, serialize.graph_to_obj(doubling.complete_graph(args.n))
    M, _ = doubling.hypergraph_matching(args.n, args.r)
    return None, serialize.complex_to_obj(M)


def _cmd_op(args):
    if args.operation == "join":
        left = _load_complex(args.left, args)
        right = _load_complex(args.right, args)
        Z, _ = join(left, right)
        return None, serialize.complex_to_obj(Z)
    if args.operation == "matching":
        try:
            G = serialize.graph_from_obj(_read_json(args.file))
        except ValueError as exc:
            raise _CliError("bad-input", str(exc)) from None
        M, _ = doubling.matching_complex(G)
        return None, serialize.complex_to_obj(M)
    X = _load_complex(args.file, args)
    if args.operation == "tuple":
        T = doubling.r_tuple(X, args.r)
        obj = serialize.complex_to_obj(T.complex)
        if args.table:
            obj = {"complex": obj,
                   "delta_table": serialize.table_to_obj(T.delta_table)}
        return None, obj
    if args.operation == "skeleton":
        return None, serialize.complex_to_obj(skeleton(X, args.d))
    if args.operation == "link":
        if args.simplex == "empty":
            verts = ()
        else:
            verts = tuple(int(x) for x in args.simplex.split(","))
        try:
            L = link(X, verts)
        except ValueError as exc:
            raise _CliError("bad-input", str(exc)) from None
        return None, serialize.complex_to_obj(L)
    if args.operation == "barycentric":
        Z, table = barycentric(X)
    else:  # xm
        Z, table = xm_complex(X, args.m)
    obj = serialize.complex_to_obj(Z)
    if args.table:
        obj = {"complex": obj, "table": serialize.table_to_obj(table)}
    return None, obj


def _cmd_homology(args):
    X = _load_complex(args.file, args)
    if args.mod is not None:
        degrees = [args.degree] if args.degree is not None \
            else list(range(0, max(X.dim, 0) + 1))
        ranks = [{"degree": d, "mod": args.mod,
                  "rank": rank_mod_p(homology.boundary_matrix(X, d), args.mod)}
                 for d in degrees]
        return None, {"kind": "mod-p-ranks", "ranks": ranks}
    if args.degree is not None:
        if X.is_empty or args.degree > X.dim:
            group = homology.HomologyGroup(args.degree, 0)
        else:
            group = homology.reduced_homology(homology.chain_complex(X), args.degree)
        return None, group.to_obj()
    groups = homology.homology_groups(X)
    return None, {"kind": "homology", "f_vector": list(f_vector(X)),
                  "groups": [g.to_obj() for g in groups]}


def _cmd_wcm(args):
    X = _load_complex(args.file, args)
    report = wcm.check_wcm(X, args.dim, pi1=args.pi1, jobs=args.jobs)
    obj = report.to_obj()
    if args.summary:
        obj["entries"] = [e.to_obj() for e in report.failures()]
    return report.verdict, obj


def _cmd_verify(args):
    s = args.statement
    if s == "theorem1":
        X = _load_complex(args.file, args)
        report = wcm.verify_theorem1(X, args.n, args.r, pi1=args.pi1, jobs=args.jobs)
    elif s == "theorem22":
        report = wcm.verify_theorem22(args.n, args.r, pi1=args.pi1, jobs=args.jobs)
    elif s == "lemma31":
        X = _load_complex(args.file, args)
        report = wcm.verify_lemma31(X, args.n, args.m, pi1=args.pi1, jobs=args.jobs)
    elif s == "link-lemma":
        X = _load_complex(args.file, args)
        report = doubling.verify_link_lemma(X, args.r)
    elif s == "iso":
        report = doubling.verify_tupling_matching_iso(args.n, args.r)
    elif s == "prop44":
        report = destab.verify_prop44(args.n, args.r)
    else:
        report = destab.verify_prop45_fi(args.n, args.r, pi1=args.pi1, jobs=args.jobs)
    return report.verdict, report.to_obj()


def _cmd_destab(args):
    if args.construction == "injective-words":
        W = destab.injective_words(args.n)
        return None, {"kind": "semi-simplicial-set", **W.to_obj()}
    S, table = destab.s_complex_fi(args.n, args.r)
    obj = serialize.complex_to_obj(S)
    if args.table:
        obj = {"complex": obj, "table": serialize.table_to_obj(table)}
    return None, obj


def _cmd_bench(args):
    cases = []

    def run(name, fn):
        start = time.perf_counter()
        peak = fn()
        cases.append({"name": name,
                      "seconds": round(time.perf_counter() - start, 3),
                      "peak_simplices": peak})

    if args.suite == "tupling":
        for n, r in ((7, 2), (8, 3), (6, 2)):
            run(f"tuple-simplex-{n}-r{r}",
                lambda n=n, r=r: doubling.r_tuple(simplex_complex(n), r)
                .complex.n_simplices())
        run("tuple-boundary-6-r2",
            lambda: doubling.r_tuple(boundary_complex(6), 2).complex.n_simplices())
    elif args.suite == "homology":
        def mk7():
            M, _ = doubling.matching_complex(doubling.complete_graph(7))
            homology.homology_groups(M)
            return M.n_simplices()

        def words5():
            C = destab.chain_complex_of(destab.injective_words(5))
            for p in range(5):
                homology.reduced_homology(C, p)
            return sum(C.sizes[p] for p in range(5))

        run("matching-complex-K7", mk7)
        run("injective-words-5", words5)
    else:
        for r in (2, 3):
            for n in range(r - 1, 9):
                run(f"theorem22-n{n}-r{r}",
                    lambda n=n, r=r:
                    (wcm.verify_theorem22(n, r).conclusion.checked))
    return None, {"kind": "bench", "suite": args.suite, "cases": cases}


_HANDLERS = {"gen": _cmd_gen, "op": _cmd_op, "homology": _cmd_homology,
             "wcm": _cmd_wcm, "verify": _cmd_verify, "destab": _cmd_destab,
             "bench": _cmd_bench}


def _render_human(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.extend(_render_human(v, indent + 1))
                lines.append(pad + "-")
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


_WRAPPED = {"wcm", "verify", "bench"}


def _emit(verdict, payload, args, command_echo):
    if args.command in _WRAPPED:
        out = {"command": command_echo, "report": payload}
        if verdict is not None:
            out["verdict"] = verdict
        if args.timings:
            out["wall_time_seconds"] = round(time.perf_counter() - args._start, 3)
    else:
        out = payload
    text = serialize.dumps(out) if args.format == "json" \
        else "\n".join(_render_human(out)) + "\n"
    sys.stdout.write(text)
    report_dir = os.environ.get("TUPLING_REPORT_DIR")
    if report_dir and args.command in _WRAPPED:
        digest = hashlib.sha256(command_echo.encode()).hexdigest()[:12]
        os.makedirs(report_dir, exist_ok=True)
        name = f"{args.command}-{digest}.json"
        with open(os.path.join(report_dir, name), "w") as fh:
            fh.write(serialize.dumps(out))


def _apply_budgets(args):
    from .budget import set_limit
    if args.budget_simplices is not None:
        set_limit("simplices", args.budget_simplices)
    if args.budget_entries is not None:
        set_limit("matrix-entries", args.budget_entries)
    if args.budget_iso_nodes is not None:
        set_limit("iso-nodes", args.budget_iso_nodes)
    if args.budget_tietze is not None:
        set_limit("tietze-steps", args.budget_tietze)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    from .budget import _limits
    saved_limits = dict(_limits)
    try:
        args = parser.parse_args(argv)
        args._start = time.perf_counter()
        _apply_budgets(args)
        verdict, payload = _HANDLERS[args.command](args)
        _emit(verdict, payload, args, " ".join(argv))
        return exit_code(verdict) if verdict is not None else 0
    except _CliError as exc:
        sys.stdout.write(serialize.dumps(
            {"error": {"code": exc.code, "message": str(exc)}}))
        return 1
    except BudgetExceededError as exc:
        sys.stdout.write(serialize.dumps(
            {"error": {"code": "budget-exceeded", "kind": exc.kind,
                       "limit": exc.limit, "message": str(exc)},
             "verdict": BUDGET_EXCEEDED}))
        return 2
    except ValueError as exc:
        sys.stdout.write(serialize.dumps(
            {"error": {"code": "bad-input", "message": str(exc)}}))
        return 1
    finally:
        _limits.clear()
        _limits.update(saved_limits)


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
