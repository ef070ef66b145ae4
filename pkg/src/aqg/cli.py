"""``aqg`` command line.

    aqg <command> FILE [--tol T] [--json] [--times t1,t2,...] [--seed N]
    aqg generate KIND [--group NAME | --table FILE] [-o OUT]

Exit status is 0 iff every check passes, 1 if a check fails, and the
code from ``errors.EXIT_CODES`` when a pipeline stage refuses to run.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import EXIT_CODES, AQGError
from .pipeline import COMMANDS, run_command


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["USAGE"], f"{self.prog}: error: {message}\n")


def _times(text):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad time list {text!r}") from None


def build_parser():
    p = _Parser(prog="aqg", description="Verify finite-dimensional algebraic quantum groups.")
    p.add_argument("--version", action="version", version=f"aqg {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        c = sub.add_parser(name, help=f"run the {name} checks")
        c.add_argument("path", help="definition file (.aqg.json) or bundled example name")
        c.add_argument("--tol", type=float, default=1e-9)
        c.add_argument("--json", action="store_true", help="machine report on stdout")
        c.add_argument("--times", type=_times, default=None, help="one-parameter sample times")
        c.add_argument("--seed", type=int, default=0)
    g = sub.add_parser("generate", help="write a definition file")
    g.add_argument("kind", choices=["group_algebra", "function_algebra", "kac_paljutkin", "sweedler"])
    g.add_argument("--group", help="named group: z1..z6, z2xz2, s3")
    g.add_argument("--table", help="JSON file holding a Cayley table (list of rows)")
    g.add_argument("-o", "--output", help="output path (stdout if omitted)")
    return p


def _emit(rep, as_json, out):
    if as_json:
        out.write(rep.to_json(__version__) + "\n")
    else:
        out.write(rep.format_text() + "\n")


def _generate(args, out):
    from . import deffile
    from .generate import generate_example

    table = None
    if args.table:
        try:
            with open(args.table, encoding="utf-8") as fh:
                table = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise AQGError("PARSE_ERROR", f"{args.table}: {exc}") from None
    if args.kind in ("group_algebra", "function_algebra") and table is None and args.group is None:
        raise AQGError("USAGE", f"{args.kind} needs --group or --table")
    d = generate_example(args.kind, group=args.group, table=table)
    if args.output:
        deffile.dump(d, args.output)
    else:
        out.write(deffile.dumps(d))


def run(argv=None, out=None, err=None):
    """Run the CLI and return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            _generate(args, out)
            return 0
        from .deffile import load

        qg = load(args.path, tol=args.tol)
        rep = run_command(args.command, qg, seed=args.seed, times=args.times)
    except AQGError as exc:
        if exc.report is not None:
            exc.report.error(exc.code, exc.message)
            _emit(exc.report, getattr(args, "json", False), out)
        elif getattr(args, "json", False):
            out.write(json.dumps({"errors": [{"code": exc.code, "message": exc.message}]}, indent=2) + "\n")
        err.write(f"aqg: {exc}\n")
        return exc.exit_code
    _emit(rep, args.json, out)
    return 0 if rep.passed else EXIT_CODES["VERIFICATION_FAILED"]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
