"""A small incremental CDCL SAT solver.

Literals at the API boundary are signed DIMACS integers (``v`` / ``-v`` for
variable ``v >= 1``). Internally literal ``v`` is coded as ``2*v`` and ``-v``
as ``2*v + 1`` so that negation is ``x ^ 1``.

The search uses two watched literals, first-UIP clause learning, VSIDS
activities (decay 0.95, ties to the lowest index), phase saving and Luby
restarts. Assumptions are decided first, one per decision level, so every
learned clause follows from the clause database alone and survives across
:meth:`Solver.solve` calls.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

SAT = "SAT"
UNSAT = "UNSAT"

_DECAY = 0.95
_RESTART_UNIT = 100


class SolverStateError(RuntimeError):
    """Raised when a model is requested without a preceding satisfiable solve."""


@dataclass(frozen=True)
class SolveResult:
    status: str
    model: tuple[bool, ...] | None = None  # model[v - 1] is the value of variable v

    def __bool__(self) -> bool:
        return self.status == SAT

    def value(self, var: int) -> bool:
        if self.model is None:
            raise SolverStateError("no model: formula is unsatisfiable")
        return self.model[var - 1]


def normalize_clause(lits: Iterable[int]) -> list[int] | None:
    """Drop duplicate literals; return None for a tautology."""
    out: list[int] = []
    seen: set[int] = set()
    for lit in lits:
        if -lit in seen:
            return None
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return out


def _luby(i: int) -> int:
    # i >= 1: 1 1 2 1 1 2 4 1 1 2 ...
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    x = i - 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x %= size
    return 1 << seq


class Solver:
    def __init__(self):
        self._nvars = 0
        self._clauses: list[list[int]] = []  # normalized input clauses, DIMACS form
        self._ok = True
        # per literal code (index 0/1 unused)
        self._val: list[int] = [0, 0]  # 1 true, -1 false, 0 unassigned
        self._watches: list[list[list[int]]] = [[], []]
        # per variable (index 0 unused)
        self._level: list[int] = [0]
        self._reason: list[list[int] | None] = [None]
        self._activity: list[float] = [0.0]
        self._phase: list[bool] = [False]
        self._seen: list[bool] = [False]
        self._trail: list[int] = []
        self._trail_lim: list[int] = []
        self._qhead = 0
        self._heap: list[tuple[float, int]] = []
        self._inc = 1.0
        self._learnts = 0
        self._conflicts = 0
        self._model: tuple[bool, ...] | None = None
        self._solved = False

    @property
    def num_vars(self) -> int:
        return self._nvars

    @property
    def num_clauses(self) -> int:
        return len(self._clauses)

    @property
    def clauses(self) -> list[list[int]]:
        return [list(c) for c in self._clauses]

    def new_var(self) -> int:
        self._nvars += 1
        v = self._nvars
        self._val += (0, 0)
        self._watches += ([], [])
        self._level.append(0)
        self._reason.append(None)
        self._activity.append(0.0)
        self._phase.append(False)
        self._seen.append(False)
        heapq.heappush(self._heap, (0.0, v))
        return v

    def new_vars(self, n: int) -> list[int]:
        return [self.new_var() for _ in range(n)]

    def _code(self, lit: int) -> int:
        if not isinstance(lit, int) or lit == 0 or abs(lit) > self._nvars:
            raise ValueError(f"literal {lit!r} refers to an unregistered variable")
        return 2 * lit if lit > 0 else -2 * lit + 1

    def add_clause(self, lits: Iterable[int]) -> None:
        lits = list(lits)
        codes = [self._code(lit) for lit in lits]
        clause = normalize_clause(lits)
        if clause is None:
            return
        self._clauses.append(clause)
        self._solved = False
        self._model = None
        if not self._ok:
            return
        # the solver always rests at decision level 0 between calls
        val = self._val
        kept: list[int] = []
        for x in dict.fromkeys(codes):
            if val[x] == 1:
                return
            if val[x] == 0:
                kept.append(x)
        if not kept:
            self._ok = False
        elif len(kept) == 1:
            self._assign(kept[0], None)
            if self._propagate() is not None:
                self._ok = False
        else:
            self._attach(kept)

    def add_clauses(self, clauses: Iterable[Iterable[int]]) -> None:
        for c in clauses:
            self.add_clause(c)

    def _attach(self, c: list[int]) -> None:
        self._watches[c[0]].append(c)
        self._watches[c[1]].append(c)

    def _assign(self, x: int, reason: list[int] | None) -> None:
        v = x >> 1
        self._val[x] = 1
        self._val[x ^ 1] = -1
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(x)

    def _propagate(self) -> list[int] | None:
        val = self._val
        watches = self._watches
        trail = self._trail
        while self._qhead < len(trail):
            false_lit = trail[self._qhead] ^ 1
            self._qhead += 1
            ws = watches[false_lit]
            kept: list[list[int]] = []
            n = len(ws)
            k = 0
            while k < n:
                c = ws[k]
                k += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if val[first] == 1:
                    kept.append(c)
                    continue
                for i in range(2, len(c)):
                    lit = c[i]
                    if val[lit] != -1:
                        c[1] = lit
                        c[i] = false_lit
                        watches[lit].append(c)
                        break
                else:
                    kept.append(c)
                    if val[first] == -1:
                        kept.extend(ws[k:])
                        watches[false_lit] = kept
                        return c
                    self._assign(first, c)
            watches[false_lit] = kept
        return None

    def _bump(self, v: int) -> None:
        act = self._activity[v] + self._inc
        self._activity[v] = act
        if act > 1e100:
            for i in range(1, self._nvars + 1):
                self._activity[i] *= 1e-100
            self._inc *= 1e-100
            self._heap = [(-self._activity[i], i) for i in range(1, self._nvars + 1)
                          if self._val[2 * i] == 0]
            heapq.heapify(self._heap)
        elif self._val[2 * v] == 0:
            heapq.heappush(self._heap, (-act, v))

    def _analyze(self, confl: list[int]) -> tuple[list[int], int]:
        seen = self._seen
        level = self._level
        trail = self._trail
        current = len(self._trail_lim)
        learnt = [0]
        to_clear: list[int] = []
        pending = 0
        p = -1
        idx = len(trail) - 1
        while True:
            for q in (confl if p == -1 else confl[1:]):
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    to_clear.append(v)
                    self._bump(v)
                    if level[v] >= current:
                        pending += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            confl = self._reason[p >> 1]
            pending -= 1
            if pending == 0:
                break
        learnt[0] = p ^ 1
        for v in to_clear:
            seen[v] = False
        if len(learnt) == 1:
            return learnt, 0
        best = 1
        for i in range(2, len(learnt)):
            if level[learnt[i] >> 1] > level[learnt[best] >> 1]:
                best = i
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _backtrack(self, lvl: int) -> None:
        if len(self._trail_lim) <= lvl:
            return
        start = self._trail_lim[lvl]
        val = self._val
        heap = self._heap
        act = self._activity
        for x in self._trail[start:]:
            v = x >> 1
            val[x] = 0
            val[x ^ 1] = 0
            self._reason[v] = None
            self._phase[v] = not (x & 1)
            heapq.heappush(heap, (-act[v], v))
        del self._trail[start:]
        del self._trail_lim[lvl:]
        self._qhead = start
        if len(heap) > 8 * self._nvars + 64:
            self._heap = [(-act[v], v) for v in range(1, self._nvars + 1) if val[2 * v] == 0]
            heapq.heapify(self._heap)

    def _pick_branch(self) -> int:
        heap = self._heap
        val = self._val
        act = self._activity
        while heap:
            neg_act, v = heapq.heappop(heap)
            if val[2 * v] == 0 and -neg_act == act[v]:
                return 2 * v if self._phase[v] else 2 * v + 1
        return 0

    def solve(self, assumptions: Sequence[int] = ()) -> SolveResult:
        assumed = [self._code(lit) for lit in assumptions]
        self._model = None
        self._solved = True
        if not self._ok:
            return SolveResult(UNSAT)
        restart = 0
        while True:
            restart += 1
            status = self._search(assumed, _luby(restart) * _RESTART_UNIT)
            if status is not None:
                break
        if status:
            val = self._val
            self._model = tuple(val[2 * v] == 1 for v in range(1, self._nvars + 1))
        self._backtrack(0)
        if status:
            return SolveResult(SAT, self._model)
        return SolveResult(UNSAT)

    def _search(self, assumed: list[int], budget: int) -> bool | None:
        """Run CDCL until a verdict or until ``budget`` conflicts (then None)."""
        conflicts = 0
        val = self._val
        while True:
            confl = self._propagate()
            if confl is not None:
                conflicts += 1
                self._conflicts += 1
                if not self._trail_lim:
                    self._ok = False
                    return False
                learnt, bt = self._analyze(confl)
                self._backtrack(bt)
                if len(learnt) == 1:
                    self._assign(learnt[0], None)
                else:
                    self._attach(learnt)
                    self._learnts += 1
                    self._assign(learnt[0], learnt)
                self._inc /= _DECAY
                continue
            if conflicts >= budget:
                self._backtrack(0)
                return None
            lvl = len(self._trail_lim)
            nxt = 0
            while lvl < len(assumed):
                x = assumed[lvl]
                if val[x] == 1:
                    self._trail_lim.append(len(self._trail))
                    lvl += 1
                elif val[x] == -1:
                    return False
                else:
                    nxt = x
                    break
            if not nxt:
                nxt = self._pick_branch()
                if not nxt:
                    return True
            self._trail_lim.append(len(self._trail))
            self._assign(nxt, None)

    def value(self, var: int) -> bool:
        if not self._solved:
            raise SolverStateError("value() called before solve()")
        if self._model is None:
            raise SolverStateError("value() called after an unsatisfiable solve")
        if not 1 <= var <= self._nvars:
            raise ValueError(f"unregistered variable {var}")
        return self._model[var - 1]

    @property
    def model(self) -> tuple[bool, ...] | None:
        return self._model

    def to_dimacs(self) -> str:
        return to_dimacs(self._nvars, self._clauses)


def to_dimacs(nvars: int, clauses: Sequence[Sequence[int]]) -> str:
    lines = [f"p cnf {nvars} {len(clauses)}"]
    lines += [" ".join(map(str, c)) + (" 0" if c else "0") for c in clauses]
    return "\n".join(lines) + "\n"


def evaluate(clauses: Iterable[Sequence[int]], model: Sequence[bool]) -> bool:
    """Whether ``model`` (indexed by variable - 1) satisfies every clause."""
    return all(any(model[abs(lit) - 1] == (lit > 0) for lit in c) for c in clauses)
