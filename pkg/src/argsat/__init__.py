"""SAT-based solver for abstract argumentation frameworks."""

from .af import ArgSet, ArgumentationFramework, ParseError, UnknownArgument, parse, parse_file
from .reasoner import (
    Count,
    Extension,
    NoExtension,
    Problem,
    Semantics,
    TaskSpec,
    Verdict,
    answer,
    count_extensions,
    credulous,
    ds_preferred,
    grounded,
    ideal,
    maximize_admissible,
    skeptical,
    some_extension,
)
from .sat import Solver, SolveResult

__all__ = [
    "ArgSet", "ArgumentationFramework", "ParseError", "UnknownArgument", "parse", "parse_file",
    "Count", "Extension", "NoExtension", "Problem", "Semantics", "TaskSpec", "Verdict",
    "answer", "count_extensions", "credulous", "ds_preferred", "grounded", "ideal",
    "maximize_admissible", "skeptical", "some_extension", "Solver", "SolveResult",
]
