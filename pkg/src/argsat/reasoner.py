"""Task drivers reducing argumentation queries to incremental SAT calls."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .af import ArgRef, ArgSet, ArgumentationFramework
from .encode import (
    Y,
    blocking_clause,
    encode_admissible,
    encode_complete,
    encode_counterexample_pair,
    encode_stable,
    not_subset_clause,
)


class Semantics(str, Enum):
    CO = "CO"
    GR = "GR"
    ST = "ST"
    PR = "PR"
    ID = "ID"


class Problem(str, Enum):
    SE = "SE"
    CE = "CE"
    DC = "DC"
    DS = "DS"


@dataclass(frozen=True)
class TaskSpec:
    problem: Problem
    semantics: Semantics
    query: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "problem", Problem(self.problem))
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        # the grounded and ideal extensions are unique: credulous == skeptical
        if self.problem is Problem.DC and self.semantics in (Semantics.GR, Semantics.ID):
            object.__setattr__(self, "problem", Problem.DS)
        needs_query = self.problem in (Problem.DC, Problem.DS)
        if needs_query != (self.query is not None):
            raise ValueError(f"{self.problem.value}-{self.semantics.value}: query argument "
                             + ("required" if needs_query else "not allowed"))

    @classmethod
    def parse(cls, name: str, query: Optional[str] = None) -> "TaskSpec":
        """Build from a name such as ``"DS-PR"``."""
        parts = name.split("-")
        if (len(parts) != 2 or parts[0] not in Problem.__members__
                or parts[1] not in Semantics.__members__):
            raise ValueError(f"unsupported task {name!r}")
        return cls(Problem(parts[0]), Semantics(parts[1]), query)

    @property
    def name(self) -> str:
        return f"{self.problem.value}-{self.semantics.value}"


@dataclass(frozen=True)
class Extension:
    args: ArgSet


@dataclass(frozen=True)
class NoExtension:
    pass


@dataclass(frozen=True)
class Count:
    value: int


@dataclass(frozen=True)
class Verdict:
    value: bool


Answer = Union[Extension, NoExtension, Count, Verdict]


def grounded(af: ArgumentationFramework) -> ArgSet:
    """Least fixpoint of the defense operator, starting from the empty set."""
    current: ArgSet = frozenset()
    while True:
        beaten = af.attacked_by_set(current)
        nxt = frozenset(a for a in range(len(af))
                        if all(b in beaten for b in af.attackers_of[a]))
        if nxt == current:
            return current
        current = nxt


def _is_admissible(af: ArgumentationFramework, s: ArgSet) -> bool:
    return not af.set_attacks(s, s) and all(af.defends(s, a) for a in s)


def maximize_admissible(af: ArgumentationFramework, seed: ArgSet = frozenset()) -> ArgSet:
    """Grow an admissible ``seed`` into a preferred extension containing it."""
    seed = frozenset(seed)
    if not _is_admissible(af, seed):
        raise ValueError("seed is not admissible")
    cnf = encode_admissible(af)
    solver = cnf.solver()
    vm = cnf.var_map
    current: ArgSet = frozenset()
    grown = seed
    while True:
        for b in grown - current:
            solver.add_clause([vm.in_var(b)])
        current = grown
        solver.add_clause(not_subset_clause(vm, current))
        result = solver.solve()
        if not result:
            return current
        grown = vm.project(result.model)


def some_extension(af: ArgumentationFramework, semantics: Semantics) -> Extension | NoExtension:
    semantics = Semantics(semantics)
    if semantics in (Semantics.GR, Semantics.CO):
        return Extension(grounded(af))
    if semantics is Semantics.ST:
        cnf = encode_stable(af)
        result = cnf.solver().solve()
        return Extension(cnf.var_map.project(result.model)) if result else NoExtension()
    if semantics is Semantics.PR:
        return Extension(maximize_admissible(af))
    return Extension(ideal(af))


def _projections(cnf) -> list[ArgSet]:
    solver = cnf.solver()
    found: list[ArgSet] = []
    while result := solver.solve():
        found.append(cnf.var_map.project(result.model))
        solver.add_clause(blocking_clause(cnf.var_map, found[-1]))
    return found


def preferred_extensions(af: ArgumentationFramework) -> list[ArgSet]:
    """All preferred extensions, in discovery order."""
    cnf = encode_admissible(af)
    solver = cnf.solver()
    found: list[ArgSet] = []
    while result := solver.solve():
        seed = cnf.var_map.project(result.model)
        ext = maximize_admissible(af, seed)
        found.append(ext)
        solver.add_clause(not_subset_clause(cnf.var_map, ext))
    return found


def extensions(af: ArgumentationFramework, semantics: Semantics) -> list[ArgSet]:
    """Every extension under ``semantics``, in discovery order."""
    semantics = Semantics(semantics)
    if semantics is Semantics.GR:
        return [grounded(af)]
    if semantics is Semantics.ID:
        return [ideal(af)]
    if semantics is Semantics.CO:
        return _projections(encode_complete(af))
    if semantics is Semantics.ST:
        return _projections(encode_stable(af))
    return preferred_extensions(af)


def count_extensions(af: ArgumentationFramework, semantics: Semantics) -> int:
    semantics = Semantics(semantics)
    if semantics in (Semantics.GR, Semantics.ID):
        return 1
    return len(extensions(af, semantics))


def credulous(af: ArgumentationFramework, semantics: Semantics, a: ArgRef) -> bool:
    semantics = Semantics(semantics)
    ai = af.index_of(a)
    if semantics is Semantics.GR:
        return ai in grounded(af)
    if semantics is Semantics.ID:
        return ai in ideal(af)
    # an argument in some admissible set is in some preferred (hence complete) one
    cnf = encode_stable(af) if semantics is Semantics.ST else encode_admissible(af)
    return bool(cnf.solver().solve([cnf.var_map.in_var(ai)]))


def skeptical(af: ArgumentationFramework, semantics: Semantics, a: ArgRef) -> bool:
    semantics = Semantics(semantics)
    ai = af.index_of(a)
    if semantics in (Semantics.GR, Semantics.CO):
        return ai in grounded(af)
    if semantics is Semantics.ID:
        return ai in ideal(af)
    if semantics is Semantics.ST:
        cnf = encode_stable(af)
        return not cnf.solver().solve([-cnf.var_map.in_var(ai)])
    return ds_preferred(af, ai)


def ds_preferred(af: ArgumentationFramework, a: ArgRef) -> bool:
    """Skeptical preferred acceptance without computing preferred extensions.

    ``a`` is accepted iff it is in some admissible set and, for every
    admissible S' attacking an admissible set that contains ``a``, the set
    S' + {a} is contained in an admissible set. Candidate attackers S' are
    drawn from the two-copy encoding; each witness Z rules out every
    candidate inside Z.
    """
    ai = af.index_of(a)
    adm = encode_admissible(af)
    probe = adm.solver()
    vm = adm.var_map
    if not probe.solve([vm.in_var(ai)]):
        return False
    pair = encode_counterexample_pair(af, ai)
    candidates = pair.solver()
    while result := candidates.solve():
        attacker = pair.var_map.project(result.model, Y)
        witness = probe.solve([vm.in_var(b) for b in sorted(attacker | {ai})])
        if not witness:
            return False
        z = vm.project(witness.model)
        candidates.add_clause(not_subset_clause(pair.var_map, z, Y))
    return True


def credulous_screen(af: ArgumentationFramework) -> list[bool]:
    """Per argument: whether it belongs to some admissible set."""
    cnf = encode_admissible(af)
    solver = cnf.solver()
    vm = cnf.var_map
    cred: list[Optional[bool]] = [None] * len(af)
    for b in range(len(af)):
        if cred[b] is not None:
            continue
        result = solver.solve([vm.in_var(b)])
        if not result:
            cred[b] = False
            continue
        # every member of the witness is credulously accepted as well
        for c in vm.project(result.model):
            cred[c] = True
    return [bool(c) for c in cred]


def ideal_candidates(af: ArgumentationFramework, cred: list[bool]) -> ArgSet:
    """Arguments not attacked by any credulously accepted argument."""
    return frozenset(x for x in range(len(af))
                     if not any(cred[b] for b in af.attackers_of[x]))


def largest_admissible_subset(af: ArgumentationFramework, candidates: ArgSet) -> tuple[ArgSet, int]:
    """Shrink ``candidates`` to a fixpoint; returns the set and the iteration count.

    Members attacked from within the current set, or not defended by it, are
    dropped until nothing changes.
    """
    current = frozenset(candidates)
    rounds = 0
    while True:
        rounds += 1
        beaten = af.attacked_by_set(current)
        nxt = frozenset(x for x in current
                        if x not in beaten and all(b in beaten for b in af.attackers_of[x]))
        if nxt == current:
            return current, rounds
        current = nxt


def ideal(af: ArgumentationFramework) -> ArgSet:
    cred = credulous_screen(af)
    return largest_admissible_subset(af, ideal_candidates(af, cred))[0]


def answer(af: ArgumentationFramework, task: TaskSpec) -> Answer:
    p, sem = task.problem, task.semantics
    if p is Problem.SE:
        return some_extension(af, sem)
    if p is Problem.CE:
        return Count(count_extensions(af, sem))
    if p is Problem.DC:
        return Verdict(credulous(af, sem, task.query))
    return Verdict(skeptical(af, sem, task.query))
