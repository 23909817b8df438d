"""Competition-style command line front end."""

from __future__ import annotations

import argparse
import io
import sys
from typing import Optional

from . import encode
from .af import FORMATS, ArgumentationFramework, ParseError, UnknownArgument, parse_file
from .reasoner import (
    Count,
    Extension,
    NoExtension,
    Problem,
    Semantics,
    TaskSpec,
    Verdict,
    answer,
)

PROBLEMS = [f"{p}-{s}" for p in ("DC", "DS", "SE", "CE") for s in ("CO", "GR", "ID", "PR", "ST")]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> _Parser:
    p = _Parser(prog="argsat", add_help=False)
    p.add_argument("-p", dest="problem")
    p.add_argument("-f", dest="file")
    p.add_argument("-fo", dest="format")
    p.add_argument("-a", dest="arg")
    p.add_argument("--problems", action="store_true")
    p.add_argument("--formats", action="store_true")
    p.add_argument("--dimacs-dump", dest="dimacs_dump")
    return p


def render(af: ArgumentationFramework, result) -> str:
    if isinstance(result, Extension):
        return "[" + ",".join(af.names_of(result.args)) + "]"
    if isinstance(result, NoExtension):
        return "NO"
    if isinstance(result, Count):
        return str(result.value)
    if isinstance(result, Verdict):
        return "YES" if result.value else "NO"
    raise TypeError(f"not an answer: {result!r}")


def base_encoding(af: ArgumentationFramework, task: TaskSpec) -> encode.Cnf:
    """The encoding the task's driver starts from.

    Tasks answered without SAT calls (grounded, SE-CO, DS-CO) get a formula
    over the ``in`` variables with no clauses.
    """
    p, sem = task.problem, task.semantics
    if sem is Semantics.ST:
        return encode.encode_stable(af)
    if p is Problem.CE and sem is Semantics.CO:
        return encode.encode_complete(af)
    if p is Problem.DS and sem is Semantics.PR:
        return encode.encode_counterexample_pair(af, task.query)
    if sem in (Semantics.PR, Semantics.ID) or (p is Problem.DC and sem is Semantics.CO):
        return encode.encode_admissible(af)
    return encode.Cnf([], encode.VarMap(len(af)))


def _execute(argv: list[str], out: io.StringIO) -> None:
    opts = _parser().parse_args(argv)
    modes = opts.problems + opts.formats
    task_given = any(x is not None for x in (opts.problem, opts.file, opts.format, opts.arg))
    if modes > 1 or (modes and task_given):
        raise UsageError("--problems and --formats cannot be combined with other options")
    if opts.problems:
        out.write("[" + ",".join(PROBLEMS) + "]\n")
        return
    if opts.formats:
        out.write("[" + ",".join(FORMATS) + "]\n")
        return
    if opts.problem is None or opts.file is None or opts.format is None:
        raise UsageError("a task needs -p <TASK> -f <FILE> -fo <FORMAT>")
    if opts.format not in FORMATS:
        raise UsageError(f"unsupported format {opts.format!r}")
    try:
        task = TaskSpec.parse(opts.problem, opts.arg)
    except ValueError as e:
        raise UsageError(str(e)) from None
    try:
        af = parse_file(opts.file, opts.format)
    except OSError as e:
        raise UsageError(f"cannot read {opts.file}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{opts.file}: input is not valid UTF-8") from None
    except ParseError as e:
        raise UsageError(f"{opts.file}: {e}") from None
    if task.query is not None:
        af.index_of(task.query)
    if opts.dimacs_dump:
        with open(opts.dimacs_dump, "w") as fh:
            fh.write(base_encoding(af, task).to_dimacs())
    out.write(render(af, answer(af, task)) + "\n")


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout, stderr)."""
    out = io.StringIO()
    try:
        _execute(argv, out)
    except (UsageError, UnknownArgument) as e:
        return 1, "", f"argsat: error: {e}\n"
    return 0, out.getvalue(), ""


def main(argv: Optional[list[str]] = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
