"""Command-line entry point: ``permcoh {check,parity,perm,fmt}``."""

from __future__ import annotations

import argparse
import json
import sys

from .core import PermcohError
from .dsl import Report, ScriptError, bind_morphisms, emit_report, parse_script, render_script, run_script
from .semantics import a_parity, a_permutation


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _split_ref(ref: str) -> tuple[str, str]:
    path, sep, name = ref.rpartition("#")
    if not sep or not path or not name:
        raise ScriptError(f"expected FILE#MORPHISM, got {ref!r}", kind="usage")
    return path, name


def cmd_check(args) -> int:
    status = 0
    for i, path in enumerate(args.files):
        try:
            report = run_script(parse_script(_read(path)))
        except ScriptError as err:
            report = Report(error=str(err))
        if len(args.files) > 1 and not args.json:
            sys.stdout.write(("\n" if i else "") + f"== {path}\n")
        out = emit_report(report, "json" if args.json else "text")
        (sys.stderr if report.error and not args.json else sys.stdout).write(out)
        status = max(status, report.exit_status)
    return status


def _invariant(args, fn, key: str) -> int:
    path, name = _split_ref(args.ref)
    script = parse_script(_read(path))
    mors = bind_morphisms(script)
    if name not in mors:
        raise ScriptError(f"no morphism named {name!r} in {path}", kind="unbound-name")
    value = fn(mors[name], args.gen)
    if args.json:
        print(json.dumps({"morphism": name, "generator": args.gen, key: str(value)}))
    else:
        print(value)
    return 0


def cmd_parity(args) -> int:
    return _invariant(args, a_parity, "parity")


def cmd_perm(args) -> int:
    return _invariant(args, a_permutation, "permutation")


def cmd_fmt(args) -> int:
    sys.stdout.write(render_script(parse_script(_read(args.file))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    parser = argparse.ArgumentParser(
        prog="permcoh",
        parents=[common],
        description="Decide equality of formal morphisms in free permutative categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the checks in one or more scripts")
    p.add_argument("files", nargs="+", metavar="FILE", help="script file, or - for stdin")
    p.set_defaults(func=cmd_check)

    for name, func, what in (("parity", cmd_parity, "a-parity"), ("perm", cmd_perm, "a-permutation")):
        p = sub.add_parser(name, parents=[common], help=f"print the {what} of a bound morphism")
        p.add_argument("--gen", required=True, help="generator to project onto")
        p.add_argument("ref", metavar="FILE#MOR")
        p.set_defaults(func=func)

    p = sub.add_parser("fmt", parents=[common], help="print a script in canonical form")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=cmd_fmt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (PermcohError, OSError) as err:
        print(f"permcoh: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
