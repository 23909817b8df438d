"""CNF encodings of argumentation semantics.

Variable layout for every encoding: ``in`` variables first in argument order
(copy X, then copy Y when present), then one selector per attack in attack
order, then ``att`` auxiliaries in argument order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .af import ArgRef, ArgSet, ArgumentationFramework
from .sat import Solver, to_dimacs

X = "X"
Y = "Y"


@dataclass
class VarMap:
    num_args: int
    copies: tuple[str, ...] = (X,)
    aux: list[tuple[str, int]] = field(default_factory=list)
    num_vars: int = 0

    def __post_init__(self):
        self.num_vars = max(self.num_vars, self.num_args * len(self.copies))

    def in_var(self, arg: int, copy: str = X) -> int:
        return self.copies.index(copy) * self.num_args + arg + 1

    def in_vars(self, copy: str = X) -> range:
        base = self.copies.index(copy) * self.num_args
        return range(base + 1, base + self.num_args + 1)

    def new_aux(self, label: str) -> int:
        self.num_vars += 1
        self.aux.append((label, self.num_vars))
        return self.num_vars

    def project(self, model: Sequence[bool], copy: str = X) -> ArgSet:
        """Arguments whose ``in`` variable is true in ``model``."""
        base = self.copies.index(copy) * self.num_args
        return frozenset(i for i in range(self.num_args) if model[base + i])


@dataclass
class Cnf:
    clauses: list[list[int]]
    var_map: VarMap

    @property
    def num_vars(self) -> int:
        return self.var_map.num_vars

    def solver(self) -> Solver:
        """A fresh solver loaded with this formula."""
        s = Solver()
        s.new_vars(self.num_vars)
        s.add_clauses(self.clauses)
        return s

    def to_dimacs(self) -> str:
        return to_dimacs(self.num_vars, self.clauses)


def _conflict_free(af: ArgumentationFramework, vm: VarMap, copy: str = X) -> list[list[int]]:
    inv = vm.in_var
    return [[-inv(a, copy)] if a == b else [-inv(a, copy), -inv(b, copy)]
            for a, b in af.attacks]


def _defense(af: ArgumentationFramework, vm: VarMap, copy: str = X) -> list[list[int]]:
    inv = vm.in_var
    return [[-inv(a, copy)] + [inv(c, copy) for c in af.attackers_of[b]]
            for b, a in af.attacks]


def _admissible(af: ArgumentationFramework, vm: VarMap, copy: str = X) -> list[list[int]]:
    return _conflict_free(af, vm, copy) + _defense(af, vm, copy)


def encode_conflict_free(af: ArgumentationFramework) -> Cnf:
    vm = VarMap(len(af))
    return Cnf(_conflict_free(af, vm), vm)


def encode_stable(af: ArgumentationFramework) -> Cnf:
    # only the "out => attacked" half of the biconditional; the other half is
    # already implied by conflict-freeness
    vm = VarMap(len(af))
    clauses = _conflict_free(af, vm)
    clauses += [[vm.in_var(a)] + [vm.in_var(b) for b in af.attackers_of[a]]
                for a in range(len(af))]
    return Cnf(clauses, vm)


def encode_admissible(af: ArgumentationFramework) -> Cnf:
    vm = VarMap(len(af))
    return Cnf(_admissible(af, vm), vm)


def encode_complete(af: ArgumentationFramework) -> Cnf:
    vm = VarMap(len(af))
    clauses = _admissible(af, vm)
    defeated: dict[int, int] = {}
    for b in range(len(af)):
        if not af.attacked_by[b]:
            continue
        d = defeated[b] = vm.new_aux(f"att_{af.names[b]}")
        attackers = [vm.in_var(c) for c in af.attackers_of[b]]
        clauses.append([-d] + attackers)
        clauses += [[-c, d] for c in attackers]
    # every argument whose attackers are all defeated must be in
    for a in range(len(af)):
        clauses.append([vm.in_var(a)] + [-defeated[b] for b in af.attackers_of[a]])
    return Cnf(clauses, vm)


def encode_counterexample_pair(af: ArgumentationFramework, a: ArgRef) -> Cnf:
    """Pairs (S, S') of admissible sets with ``a`` in S and S' attacking S.

    Copy X holds S, copy Y holds S'.
    """
    ai = af.index_of(a)
    vm = VarMap(len(af), (X, Y))
    clauses = _admissible(af, vm, X) + [[vm.in_var(ai, X)]] + _admissible(af, vm, Y)
    selectors = []
    for u, v in af.attacks:
        s = vm.new_aux(f"sel_{af.names[u]}_{af.names[v]}")
        selectors.append(s)
        clauses.append([-s, vm.in_var(u, Y)])
        clauses.append([-s, vm.in_var(v, X)])
    clauses.append(selectors)
    return Cnf(clauses, vm)


def blocking_clause(vm: VarMap, s: ArgSet, copy: str = X) -> list[int]:
    """Excludes exactly the projection ``s``."""
    return [-v if i in s else v for i, v in enumerate(vm.in_vars(copy))]


def not_subset_clause(vm: VarMap, s: Iterable[int], copy: str = X) -> list[int]:
    """Requires some argument outside ``s``."""
    s = set(s)
    return [v for i, v in enumerate(vm.in_vars(copy)) if i not in s]
