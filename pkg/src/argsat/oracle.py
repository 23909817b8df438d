"""Reference semantics by explicit subset enumeration.

Everything here follows the definitions directly and shares no code with the
SAT-based reasoner, so it can serve as ground truth in differential tests.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .af import ArgRef, ArgSet, ArgumentationFramework

MAX_ARGS = 20
SEMANTICS = ("CO", "GR", "ST", "PR", "ID")


class EnumerationLimit(ValueError):
    pass


def canonical(sets: Iterable[ArgSet]) -> tuple[ArgSet, ...]:
    return tuple(sorted(set(sets), key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class ExtensionFamily:
    semantics: str
    extensions: tuple[ArgSet, ...]

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.extensions

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)

    def credulous(self, a: int) -> bool:
        return any(a in e for e in self.extensions)

    def skeptical(self, a: int) -> bool:
        return all(a in e for e in self.extensions)


def is_conflict_free(af: ArgumentationFramework, s: Iterable[int]) -> bool:
    s = set(s)
    return not any(u in s and v in s for u, v in af.attacks)


def is_admissible(af: ArgumentationFramework, s: Iterable[int]) -> bool:
    s = set(s)
    attacks = set(af.attacks)
    if not is_conflict_free(af, s):
        return False
    return all(any((c, b) in attacks for c in s)
               for a in s for b in range(len(af)) if (b, a) in attacks)


class _Masks:
    """Bitmask view of a framework: bit i stands for argument i."""

    def __init__(self, af: ArgumentationFramework):
        n = len(af)
        if n > MAX_ARGS:
            raise EnumerationLimit(f"{n} arguments exceeds the enumeration limit of {MAX_ARGS}")
        self.n = n
        self.into = [0] * n
        self.out = [0] * n
        for u, v in af.attacks:
            self.into[v] |= 1 << u
            self.out[u] |= 1 << v
        self.full = (1 << n) - 1

    def plus(self, s: int) -> int:
        r = 0
        for i in range(self.n):
            if s >> i & 1:
                r |= self.out[i]
        return r

    def conflict_free(self, s: int) -> bool:
        return not (self.plus(s) & s)

    def defended(self, s: int) -> int:
        beaten = self.plus(s)
        return sum(1 << a for a in range(self.n) if self.into[a] & ~beaten == 0)

    def admissible(self, s: int) -> bool:
        return self.conflict_free(s) and s & ~self.defended(s) == 0


def _as_set(mask: int) -> ArgSet:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _maximal(masks: list[int]) -> list[int]:
    return [s for s in masks if not any(t != s and t & s == s for t in masks)]


def _minimal(masks: list[int]) -> list[int]:
    return [s for s in masks if not any(t != s and t & s == t for t in masks)]


def _families(af: ArgumentationFramework) -> dict[str, list[int]]:
    m = _Masks(af)
    subsets = range(m.full + 1)
    adm = [s for s in subsets if m.admissible(s)]
    co = [s for s in adm if m.defended(s) & ~s == 0]
    st = [s for s in subsets if m.conflict_free(s) and s | m.plus(s) == m.full]
    pr = _maximal(adm)
    common = m.full
    for e in pr:
        common &= e
    ideal_candidates = _maximal([s for s in adm if s & ~common == 0])
    return {"AD": adm, "CO": co, "GR": _minimal(co), "ST": st, "PR": pr, "ID": ideal_candidates}


def enumerate_extensions(af: ArgumentationFramework, semantics: str) -> ExtensionFamily:
    if semantics not in SEMANTICS and semantics != "AD":
        raise ValueError(f"unknown semantics {semantics!r}")
    fams = _families(af)
    return ExtensionFamily(semantics, canonical(_as_set(s) for s in fams[semantics]))


def all_families(af: ArgumentationFramework) -> dict[str, ExtensionFamily]:
    """Families for all five semantics plus admissible sets under key ``AD``."""
    return {k: ExtensionFamily(k, canonical(_as_set(s) for s in v))
            for k, v in _families(af).items()}


def credulous(af: ArgumentationFramework, semantics: str, a: ArgRef) -> bool:
    return enumerate_extensions(af, semantics).credulous(af.index_of(a))


def skeptical(af: ArgumentationFramework, semantics: str, a: ArgRef) -> bool:
    return enumerate_extensions(af, semantics).skeptical(af.index_of(a))
