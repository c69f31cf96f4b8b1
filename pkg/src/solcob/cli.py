"""Command-line interface: ``solcob <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass

from . import __version__
from .abelian import enumeration_cap
from .classify import Result, census, cobordant, signature
from .dinv import casson_walker, d_dihedral, d_sol_profile, lescop, rational_str
from .errors import SolcobError
from .manifolds import DihedralManifold, SolManifold, h1_dihedral, h1_sol, splice_presentation
from .verify import run_all

log = logging.getLogger("solcob")

FORMATS = ("text", "json", "csv", "dot")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Config:
    output_format: str = "text"
    census_bound: int = 20
    enumeration_cap: int = 2**16


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _unsupported(cfg: Config, command: str):
    raise UsageError(f"{command} does not support --format {cfg.output_format}")


def _sol_from(values: list[int]) -> SolManifold:
    if len(values) == 2:
        return SolManifold.m(*values)
    if len(values) == 4:
        return SolManifold(*values)
    raise UsageError("--sol takes a b (for M_{a,b}) or a b c d")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_h1(args, cfg: Config) -> int:
    if args.sol is not None:
        S = _sol_from(args.sol)
        group, params, degenerate, kind = h1_sol(S), [S.a, S.b, S.c, S.d], S.degenerate, "sol"
    else:
        D = DihedralManifold(*args.dihedral)
        group, params, degenerate, kind = h1_dihedral(D), [D.b, D.c], False, "dihedral"
    if cfg.output_format == "json":
        _emit_json({"manifold": kind, "parameters": params, "group": group.to_dict(),
                    "text": str(group), "degenerate": degenerate})
    elif cfg.output_format == "text":
        _emit(str(group) + ("\ndegenerate: Seifert fibered, not Sol" if degenerate else ""))
    elif cfg.output_format == "csv":
        _emit(_csv([["manifold", "parameters", "group", "degenerate"],
                    [kind, " ".join(map(str, params)), str(group), degenerate]]))
    else:
        _unsupported(cfg, "h1")
    return EXIT_OK


def cmd_dinv(args, cfg: Config) -> int:
    if args.sol is not None:
        a, b = args.sol
        profile = d_sol_profile(a, b)
        data = profile.to_dict()
        if cfg.output_format == "json":
            _emit_json(data)
        elif cfg.output_format == "text":
            lines = [f"{k}: {{{', '.join(data[k])}}}" for k in ("S_ba", "S_b", "S_a")]
            lines += [f"S_empty: four unknown values with sum {data['q_sum']}",
                      f"total: {data['total']}"]
            _emit("\n".join(lines))
        elif cfg.output_format == "csv":
            rows = [["block", "value"]]
            rows += [[k, v] for k in ("S_ba", "S_b", "S_a") for v in data[k]]
            rows += [["S_empty_sum", data["q_sum"]], ["total", data["total"]]]
            _emit(_csv(rows))
        else:
            _unsupported(cfg, "dinv")
    else:
        n = args.dihedral
        values = [rational_str(v) for v in d_dihedral(n)]
        if cfg.output_format == "json":
            _emit_json({"n": n, "d": values})
        elif cfg.output_format == "text":
            _emit(f"D_{n}: {{{', '.join(values)}}}")
        elif cfg.output_format == "csv":
            _emit(_csv([["n", "value"]] + [[n, v] for v in values]))
        else:
            _unsupported(cfg, "dinv")
    return EXIT_OK


def _invariant(args, cfg: Config, name: str, func) -> int:
    M = SolManifold.m(*args.sol) if args.sol is not None else DihedralManifold.d(args.dihedral)
    value = rational_str(func(M))
    if cfg.output_format == "json":
        _emit_json({"invariant": name, "manifold": str(M), "value": value})
    elif cfg.output_format == "text":
        _emit(value)
    elif cfg.output_format == "csv":
        _emit(_csv([["invariant", "manifold", "value"], [name, str(M), value]]))
    else:
        _unsupported(cfg, name)
    return EXIT_OK


def cmd_lescop(args, cfg: Config) -> int:
    return _invariant(args, cfg, "lescop", lescop)


def cmd_cw(args, cfg: Config) -> int:
    return _invariant(args, cfg, "casson_walker", casson_walker)


def cmd_classify(args, cfg: Config) -> int:
    a, b, a2, b2 = args.params
    verdict = cobordant(a, b, a2, b2)
    if cfg.output_format == "json":
        _emit_json({"first": [a, b], "second": [a2, b2], "verdict": verdict.to_dict(),
                    "signatures": [signature(a, b).to_dict(), signature(a2, b2).to_dict()]})
    elif cfg.output_format == "text":
        _emit(str(verdict))
    elif cfg.output_format == "csv":
        _emit(_csv([["a", "b", "a2", "b2", "result", "witness"],
                    [a, b, a2, b2, verdict.result.value, verdict.witness or ""]]))
    else:
        _unsupported(cfg, "classify")
    return EXIT_OK if verdict.result is Result.HOMEOMORPHIC else EXIT_FAIL


def cmd_census(args, cfg: Config) -> int:
    report = census(cfg.census_bound, workers=args.workers)
    if cfg.output_format == "json":
        _emit_json(report.to_dict())
    elif cfg.output_format == "csv":
        _emit(report.to_csv())
    elif cfg.output_format == "text":
        lines = [
            f"bound: {report.bound}",
            f"parameters: {len(report.parameters)}",
            f"orbit classes: {len(report.classes)}",
            f"degenerate parameters: {len(report.degenerate)}",
            f"pairs compared: {report.pairs}",
            f"witnesses: {dict(report.witnesses)}",
            f"failures: {len(report.failures)}",
            f"degenerate failures: {len(report.degenerate_failures)}",
        ]
        _emit("\n".join(lines))
    else:
        _unsupported(cfg, "census")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_splice(args, cfg: Config) -> int:
    S = SolManifold(*args.params)
    graph = splice_presentation(S)
    chain = graph.chain
    log.info("gluing identity f1^-1 A f2 = [[0,1],[1,0]]: %s", "holds" if chain.identity_holds else "FAILS")
    if cfg.output_format == "dot":
        _emit(graph.to_dot())
    elif cfg.output_format == "json":
        _emit_json({
            "gluing": S.gluing.tolist(), "B": chain.B, "tail": list(chain.tail), "A": chain.A,
            "identity_holds": chain.identity_holds, "formula_A": chain.formula_A,
            "formula_matches": chain.formula_matches, "signed_formula_A": chain.signed_formula_A,
            "graph": graph.to_dict(),
        })
    elif cfg.output_format == "text":
        _emit("\n".join([
            f"gluing: {S.gluing.tolist()}",
            f"-b/c = [{', '.join(map(str, (chain.B,) + chain.tail))}]^-",
            f"A = {chain.A}",
            f"identity f1^-1 A_phi f2 = [[0,1],[1,0]]: {'holds' if chain.identity_holds else 'fails'}",
            f"closed formula a*c' - b'*d = {chain.formula_A} ({'agrees' if chain.formula_matches else 'differs'})",
            f"signed formula -(a*c' + b'*d) = {chain.signed_formula_A}",
            f"weights: {list(graph.weights)}",
        ]))
    else:
        _emit(_csv([["id", "weight", "role", "neighbours"]] +
                   [[v["id"], v["weight"], v["role"], " ".join(map(str, graph.neighbours(v["id"])))]
                    for v in graph.to_dict()["vertices"]]))
    return EXIT_OK if chain.identity_holds else EXIT_FAIL


def cmd_verify(args, cfg: Config) -> int:
    results = run_all()
    passed = all(r.passed for r in results)
    if cfg.output_format == "json":
        _emit_json({"passed": passed, "items": [r.to_dict() for r in results]})
    elif cfg.output_format == "text":
        _emit("\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results))
    elif cfg.output_format == "csv":
        _emit(_csv([["name", "passed", "detail"]] + [[r.name, r.passed, r.detail] for r in results]))
    else:
        _unsupported(cfg, "verify")
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=FORMATS, default=default if suppress else "text",
                   help="output format (default: text)")
    p.add_argument("--bound", type=_positive, default=default if suppress else 20,
                   help="census bound N, |a|,|b| <= N (default: 20)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solcob", parents=[_common(False)],
        description="Homology, d-invariants and homology cobordism of Sol manifolds with |H1| = 16.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("h1", parents=[common], help="first homology")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sol", type=int, nargs="+", metavar="N",
                   help="'a b' for M_{a,b}, or 'a b c d' for the gluing [[a, c], [d, b]]")
    g.add_argument("--dihedral", type=int, nargs=2, metavar=("B", "C"),
                   help="D_{-b/c}, Seifert invariants (2,1), (2,-1), (b,-c)")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("dinv", parents=[common], help="d-invariants")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sol", type=int, nargs=2, metavar=("A", "B"), help="blocked profile of M_{a,b}")
    g.add_argument("--dihedral", type=int, metavar="N", help="the four values on D_n")
    p.set_defaults(func=cmd_dinv)

    for name, func, what in (("lescop", cmd_lescop, "Lescop invariant"),
                             ("cw", cmd_cw, "Casson-Walker invariant")):
        p = sub.add_parser(name, parents=[common], help=what)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--sol", type=int, nargs=2, metavar=("A", "B"), help="M_{a,b}")
        g.add_argument("--dihedral", type=int, metavar="N", help="D_n")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", parents=[common], help="compare M_{a,b} with M_{a',b'}")
    p.add_argument("params", type=int, nargs=4, metavar="INT", help="a b a' b'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="pairwise census over |a|,|b| <= bound")
    p.add_argument("--workers", type=_positive, default=None, help="worker processes")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("splice", parents=[common], help="plumbing chain for a gluing matrix")
    p.add_argument("params", type=int, nargs=4, metavar="INT", help="a b c d for [[a, c], [d, b]]")
    p.set_defaults(func=cmd_splice)

    p = sub.add_parser("verify", parents=[common], help="run the reproduction suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose or args.command == "splice" else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = Config(args.format, args.bound, enumeration_cap())
    except ValueError as exc:
        print(f"solcob: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, cfg)
    except (SolcobError, UsageError, ValueError) as exc:
        print(f"solcob: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
