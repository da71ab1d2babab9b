"""Command-line entry point: ``symconf <subcommand> ...``.

Exit codes: 0 success, 1 domain error (the configuration or request is
impossible or invalid), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass

from . import census, construct, core, cyclic, enumeration, graphs
from .errors import ParseError, SymconfError


@dataclass(frozen=True)
class CommandOutcome:
    code: int
    stdout: str
    stderr: str


class UsageError(Exception):
    pass


class _HelpRequested(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        raise UsageError(message or "")

    def print_help(self, file=None):
        raise _HelpRequested(self.format_help())


def _bool(text):
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symconf", description="Symmetric configurations v_3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def reader(p):
        p.add_argument("file", help='configuration file, or "-" for standard input')
        p.add_argument("--format", choices=("auto", "compact", "json"), default="auto")

    p = sub.add_parser("verify", help="validate, check connectivity and Levi girth")
    reader(p)

    p = sub.add_parser("census", help="direct and formula fragment counts")
    reader(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("triangle-free", help="build a triangle-free v_3")
    p.add_argument("v", type=int)
    p.add_argument("--index", type=int, default=0, help="which order-36 seed to use when v = 3 mod 5")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("chain", help="edge-deleted Heawood chain on 7n points")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cyclic", help="list cyclic triples for v, or emit one configuration")
    p.add_argument("v", type=int)
    p.add_argument("abc", type=int, nargs="*", metavar="a b c")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="all configurations v_3 up to isomorphism")
    p.add_argument("v", type=int)
    p.add_argument("--distribution", action="store_true")
    p.add_argument("--emit", action="store_true")
    p.add_argument("--connected-only", type=_bool, default=True, metavar="BOOL")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--long-run", action="store_true", help=f"allow v >= {enumeration.LONG_RUN_V}")

    p = sub.add_parser("levi", help="Levi graph summary or export")
    reader(p)
    p.add_argument("--export", choices=("dot", "adj"))
    return parser


def _read(args) -> core.Configuration:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        if args.format == "json":
            return core.parse_json(text)
        if args.format == "compact":
            return core.parse_compact(text)
        return core.read_configuration(text)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON configuration: {exc}") from None


def _emit_configuration(cfg, as_json, out):
    if as_json:
        print(core.format_json(cfg), file=out)
    else:
        print(core.format_compact(cfg), file=out)


def _cmd_verify(args, out):
    cfg = _read(args)
    connected = core.is_connected(cfg)
    g = graphs.levi_graph(cfg)
    gi = graphs.girth(g)
    print(f"v: {cfg.v}", file=out)
    print("valid: yes", file=out)
    print(f"connected: {'yes' if connected else 'no'}", file=out)
    print(f"levi girth: {gi if gi != graphs.INFINITE else 'infinite'}", file=out)
    print(f"triangles: {census.count_triangles(cfg)}", file=out)


def _cmd_census(args, out):
    cfg = _read(args)
    direct = census.count_fragments_direct(cfg)
    try:
        formula = census.census_from_formulas(cfg.v, direct.t)
    except SymconfError:
        formula = None
    match = formula == direct
    if args.json:
        doc = direct.as_dict()
        doc.update(direct=direct.as_dict(), formula=formula and formula.as_dict(), match=match)
        print(json.dumps(doc), file=out)
        return
    print(f"v = {cfg.v}, t = {direct.t}", file=out)
    print(f"{'count':<6} {'direct':>10} {'formula':>10}", file=out)
    for name in census.FIELDS[2:]:
        f = "-" if formula is None else getattr(formula, name)
        print(f"{name:<6} {getattr(direct, name):>10} {f:>10}", file=out)
    print(f"match: {'yes' if match else 'no'}", file=out)


def _cmd_triangle_free(args, out):
    cfg, trace = construct.triangle_free(args.v, args.index)
    if args.json:
        doc = cfg.to_json()
        if args.trace:
            doc = {"configuration": doc, "trace": trace.to_json()}
        print(json.dumps(doc), file=out)
        return
    text = core.format_compact(cfg)
    print(text, file=out)
    if args.trace:
        print(f"base: {trace.base_v}", file=out)
        print(f"steps: {trace.steps}", file=out)
        for i, c in enumerate(trace.cycle_history):
            print(f"cycle {i}: {' '.join(map(str, c))}", file=out)


def _cmd_chain(args, out):
    _emit_configuration(construct.heawood_chain(args.n), args.json, out)


def _cmd_cyclic(args, out):
    if args.abc:
        if len(args.abc) != 3:
            raise UsageError("cyclic takes either just v or v a b c")
        t = cyclic.CyclicTriple(args.v, *args.abc)
        _emit_configuration(cyclic.cyclic_configuration(t), args.json, out)
        return
    rows = []
    for t in cyclic.enumerate_cyclic(args.v):
        direct = census.count_triangles(cyclic.cyclic_configuration(t))
        predicted = cyclic.predict_cyclic_triangles(t) if args.v >= 10 else None
        rows.append({"triple": list(t.parts), "predicted": predicted, "direct": direct})
    if args.json:
        print(json.dumps({"v": args.v, "triples": rows}), file=out)
        return
    print(f"{'triple':<16} {'predicted':>9} {'direct':>7}", file=out)
    for row in rows:
        a, b, c = row["triple"]
        pred = "-" if row["predicted"] is None else row["predicted"]
        print(f"{f'<{a},{b},{c}>':<16} {pred:>9} {row['direct']:>7}", file=out)


def _cmd_enumerate(args, out):
    if args.v >= enumeration.LONG_RUN_V and not args.long_run:
        raise UsageError(f"enumerate {args.v} runs for a long time; pass --long-run to confirm")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    configs = enumeration.enumerate_all(args.v, args.connected_only, args.threads)
    show_distribution = args.distribution or not args.emit
    counts = {}
    for cfg in configs:
        if args.emit:
            print(core.format_compact(cfg), file=out)
        t = census.count_triangles(cfg)
        counts[t] = counts.get(t, 0) + 1
    if show_distribution:
        print(f"{'v':>3} {'t':>4} {'count':>7}", file=out)
        for t, n in sorted(counts.items()):
            print(f"{args.v:>3} {t:>4} {n:>7}", file=out)


def _cmd_levi(args, out):
    cfg = _read(args)
    g = graphs.levi_graph(cfg)
    if args.export == "dot":
        out.write(graphs.to_dot(g, "levi"))
    elif args.export == "adj":
        out.write(graphs.to_adjacency_text(g))
    else:
        gi = graphs.girth(g)
        print(f"vertices: {g.n}", file=out)
        print(f"edges: {len(g.edges())}", file=out)
        print(f"girth: {gi if gi != graphs.INFINITE else 'infinite'}", file=out)
        print(f"6-cycles: {graphs.count_six_cycles(g)}", file=out)


COMMANDS = {
    "verify": _cmd_verify,
    "census": _cmd_census,
    "triangle-free": _cmd_triangle_free,
    "chain": _cmd_chain,
    "cyclic": _cmd_cyclic,
    "enumerate": _cmd_enumerate,
    "levi": _cmd_levi,
}


def run(argv) -> CommandOutcome:
    out = io.StringIO()
    try:
        args = build_parser().parse_args(list(argv))
        COMMANDS[args.command](args, out)
    except _HelpRequested as exc:
        return CommandOutcome(0, str(exc), "")
    except UsageError as exc:
        return CommandOutcome(2, "", f"{exc}\n")
    except ParseError as exc:
        return CommandOutcome(2, "", f"symconf: {exc}\n")
    except SymconfError as exc:
        return CommandOutcome(1, "", f"symconf: {exc}\n")
    return CommandOutcome(0, out.getvalue(), "")


def main(argv=None):
    outcome = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(outcome.stdout)
    sys.stderr.write(outcome.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
