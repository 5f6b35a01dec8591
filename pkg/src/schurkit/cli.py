"""Command line front end.

    schurkit schur --shape 2,1 --rank 2 rank
    schurkit lr --mu 1,1 --tau 1,1 --lambda 2,2
    schurkit bott --weight 0,2
    schurkit verify all

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Standard output carries only the result; progress goes to standard error.
"""
import argparse
import json
import os
import sys

from . import bott as bt
from .exact_linalg import ChainComplex, ExactMatrix, StructuralError, homology
from .partitions import Partition, SkewShape, lr_coefficient, skew_decomposition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text):
    try:
        text = text.strip()
        return Partition([int(x) for x in text.split(",") if x.strip()] if text else ())
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _shape(text):
    try:
        return SkewShape.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _emit(obj, fmt, text):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _read_matrix(path):
    with (sys.stdin if path == "-" else open(path)) as fh:
        content = fh.read()
    if content.lstrip().startswith("["):
        return ExactMatrix.from_json(content)
    return ExactMatrix.from_text(content)


def _inline_matrix(text):
    rows = [r for r in text.split(";") if r.strip()]
    return ExactMatrix.from_text("\n".join(rows))


# subcommands

def cmd_schur(args, variant):
    from . import schur_weyl as sw
    build = sw.schur_module if variant == sw.SCHUR else sw.weyl_module
    pres = build(args.shape, args.rank)
    mod = pres.module
    if args.what == "rank":
        obj = {"shape": args.shape.to_json(), "r": args.rank, "variant": variant,
               "rank": mod.free_rank}
        _emit(obj, args.format, str(mod.free_rank))
        return EXIT_OK
    basis = []
    for t in range(mod.free_rank):
        lift = sorted(mod.lift(t).items())
        basis.append({"weight": list(mod.weights[t]),
                      "lift": [{"tensor": [list(x) for x in labels], "coeff": c}
                               for labels, c in lift]})
    obj = {"shape": args.shape.to_json(), "r": args.rank, "variant": variant,
           "rank": mod.free_rank, "basis": basis}
    lines = [f"rank {mod.free_rank}"]
    for t, b in enumerate(basis):
        terms = " + ".join(f"{c['coeff']}*" + "(x)".join(
            "[" + ",".join(map(str, x)) + "]" for x in c["tensor"]) for c in b["lift"])
        lines.append(f"{t}: weight {tuple(b['weight'])}: {terms}")
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_lr(args):
    c = lr_coefficient(args.mu, args.tau, args.lam)
    obj = {"mu": list(args.mu), "tau": list(args.tau), "lambda": list(args.lam),
           "coefficient": c}
    _emit(obj, args.format, str(c))
    return EXIT_OK


def cmd_skew(args):
    taus = skew_decomposition(args.shape)
    obj = {"shape": args.shape.to_json(), "decomposition": [list(t) for t in taus]}
    _emit(obj, args.format, "\n".join(t.to_text() for t in taus) or "(empty)")
    return EXIT_OK


def _rho_from_args(args):
    from .schur_complexes import TwoTermMap
    if args.rho is not None:
        M = _read_matrix(args.rho)
    elif args.rho_inline is not None:
        M = _inline_matrix(args.rho_inline)
    elif args.zero is not None:
        if len(args.zero) != 2:
            raise UsageError("--zero needs m,n")
        return TwoTermMap.zero(*args.zero)
    else:
        raise UsageError("one of --rho, --rho-inline, --zero is required")
    return TwoTermMap(M)


def cmd_schur_complex(args):
    from .schur_complexes import schur_complex
    rho = _rho_from_args(args)
    cx = schur_complex(args.shape, rho)
    obj = {"shape": args.shape.to_json(), "m": rho.m, "n": rho.n,
           "complex": cx.complex.to_json()}
    lines = [f"ranks {cx.ranks()}"]
    if args.homology:
        hs = cx.homology()
        obj["homology"] = [h.to_json() for h in hs]
        lines += [f"H_{k} = {h}" for k, h in enumerate(hs)]
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_homology(args):
    with (sys.stdin if args.complex == "-" else open(args.complex)) as fh:
        C = ChainComplex.from_json(fh.read())
    a, b = C.degrees
    hs = [(i, homology(C, i)) for i in range(a, b + 1)]
    obj = {"degrees": [a, b], "homology": [h.to_json() for _, h in hs]}
    _emit(obj, args.format, "\n".join(f"H_{i} = {h}" for i, h in hs))
    return EXIT_OK


def cmd_bott(args):
    lam = bt.Weight(args.weight)
    if args.char is not None:
        rep = bt.char_p_variant(lam, args.char)
        text = [f"hypothesis {'holds' if rep['applicable'] else 'fails'}"]
        if rep["applicable"]:
            text.append(f"case {rep['case']}")
            for a in rep["answers"]:
                ans = a["answer"]
                s = "0" if ans["answer"] == bt.ZERO else \
                    f"dSchur^{tuple(ans['partition'])}[-{ans['shift']}]"
                text.append(f"w={tuple(a['w'])}: {s}")
        _emit(dict(rep), args.format, "\n".join(text))
        return EXIT_OK if rep["pass"] else EXIT_FAIL
    if args.grass is not None:
        d = args.grass
        e = lam.entries
        ans = bt.grassmann_bott(bt.GrassWeight(lam.n, d, e[:d], e[d:]))
    elif args.dd is not None:
        ans = bt.partial_flag_bott(lam, args.dd)
    else:
        ans = bt.bott_algorithm(lam)
    _emit(ans.to_json(), args.format, ans.to_text())
    return EXIT_OK


def cmd_verify(args):
    from . import suites
    names = suites.criteria() if args.suite == "all" else [args.suite]
    for name in names:
        if name not in suites.SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from "
                             + ", ".join(sorted(suites.SUITES)) + ", all")
    reports = [suites.run_suite(n, timing=args.timing) for n in names]
    ok = all(r["pass"] for r in reports)
    if args.format == "json":
        obj = reports[0] if len(reports) == 1 and args.suite != "all" else \
            {"suites": reports, "pass": ok}
        _emit(obj, "json", "")
    else:
        lines = []
        for r in reports:
            crit = f"[{r['criterion']}] " if r["criterion"] else ""
            status = "PASS" if r["pass"] else "FAIL"
            lines.append(f"{status} {crit}{r['suite']}: {r['passed']}/"
                         f"{r['passed'] + r['failed']} cases")
            if args.verbose or not r["pass"]:
                for c in r["cases"]:
                    if args.verbose or not c["pass"]:
                        lines.append(f"    {'ok ' if c['pass'] else 'BAD'} "
                                     f"{json.dumps(c['inputs'], sort_keys=True)} "
                                     f"expected={json.dumps(c['expected'], sort_keys=True)} "
                                     f"actual={json.dumps(c['actual'], sort_keys=True)}")
        _emit(None, "text", "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = _Parser(prog="schurkit", description="Schur modules, Schur complexes "
                "and Bott's algorithm over the integers.")
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("schur", "weyl"):
        s = sub.add_parser(name, help=f"the {name} module of a skew shape")
        s.add_argument("--shape", type=_shape, required=True)
        s.add_argument("--rank", type=int, required=True, help="rank r of Z^r")
        s.add_argument("what", choices=("rank", "basis"), nargs="?", default="rank")

    s = sub.add_parser("lr", help="a Littlewood-Richardson coefficient c^lambda_{mu,tau}")
    s.add_argument("--mu", type=_partition, required=True)
    s.add_argument("--tau", type=_partition, required=True)
    s.add_argument("--lambda", dest="lam", type=_partition, required=True)

    s = sub.add_parser("skew-decompose", help="the multiset of tau with c^lambda_{mu,tau}")
    s.add_argument("--shape", type=_shape, required=True)

    s = sub.add_parser("schur-complex", help="the Schur complex of rho")
    s.add_argument("--shape", type=_shape, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--rho", help="matrix file (text rows or JSON), - for stdin")
    g.add_argument("--rho-inline", help="rows separated by ';', e.g. '2 0;1 1'")
    g.add_argument("--zero", type=_ints, help="the zero map Z^m -> Z^n, given as m,n")
    s.add_argument("--homology", action="store_true")

    s = sub.add_parser("homology", help="homology of a chain complex in JSON")
    s.add_argument("--complex", required=True, help="JSON file, - for stdin")

    s = sub.add_parser("bott", help="Bott's algorithm for a weight")
    s.add_argument("--weight", type=_ints, required=True)
    s.add_argument("--dd", type=_ints)
    s.add_argument("--grass", type=int)
    s.add_argument("--char", type=int)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite")
    s.add_argument("--timing", action="store_true",
                   help="include elapsed times (output is then not reproducible)")
    s.add_argument("--verbose", action="store_true")
    return p


def run(argv=None):
    parser = build_parser()
    try:
        # allow --format after the subcommand as well
        argv = list(sys.argv[1:] if argv is None else argv)
        fmt = None
        for i, a in enumerate(list(argv)):
            if a.startswith("--format="):
                fmt = a.split("=", 1)[1]
                argv.remove(a)
                break
            if a == "--format" and i + 1 < len(argv):
                fmt = argv[i + 1]
                del argv[i:i + 2]
                break
        args = parser.parse_args(argv)
        if fmt is not None:
            if fmt not in ("json", "text"):
                raise UsageError(f"invalid format {fmt!r}")
            args.format = fmt
        if args.command in ("schur", "weyl"):
            from .schur_weyl import SCHUR, WEYL
            return cmd_schur(args, SCHUR if args.command == "schur" else WEYL)
        handlers = {"lr": cmd_lr, "skew-decompose": cmd_skew,
                    "schur-complex": cmd_schur_complex, "homology": cmd_homology,
                    "bott": cmd_bott, "verify": cmd_verify}
        return handlers[args.command](args)
    except UsageError as e:
        print(f"schurkit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as e:
        print(f"schurkit: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except StructuralError as e:
        print(f"schurkit: structural error: {e}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
