"""Argumentation frameworks: data model, TGF/APX parsing and relational queries."""

from __future__ import annotations

import re
from collections.abc import Iterable
from typing import Union

ArgSet = frozenset  # frozenset[int] of argument indices
ArgRef = Union[str, int]

FORMATS = ("tgf", "apx")

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")
_APX_ARG = re.compile(r"\s*arg\(\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*\Z")
_APX_ATT = re.compile(r"\s*att\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*\Z")


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.reason = message


class UnknownArgument(LookupError):
    def __init__(self, arg):
        super().__init__(f"unknown argument {arg}")
        self.arg = arg


class ArgumentationFramework:
    """A finite argument list plus an attack relation over argument indices.

    Arguments keep their declaration order; attacks are deduplicated but keep
    first-appearance order. Instances are treated as immutable.
    """

    __slots__ = ("names", "attacks", "attackers_of", "attacked_by", "_index")

    def __init__(self, names: Iterable[str], attacks: Iterable[tuple[str, str]] = ()):
        self.names: tuple[str, ...] = tuple(names)
        self._index: dict[str, int] = {}
        for i, name in enumerate(self.names):
            if name in self._index:
                raise ValueError(f"duplicate argument {name}")
            self._index[name] = i
        seen: dict[tuple[int, int], None] = {}
        for src, tgt in attacks:
            seen[(self.index_of(src), self.index_of(tgt))] = None
        self.attacks: tuple[tuple[int, int], ...] = tuple(seen)
        into: list[list[int]] = [[] for _ in self.names]
        out: list[list[int]] = [[] for _ in self.names]
        for u, v in self.attacks:
            into[v].append(u)
            out[u].append(v)
        self.attackers_of: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in into)
        self.attacked_by: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in out)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.names == other.names and set(self.attacks) == set(other.attacks)

    def __hash__(self) -> int:
        return hash((self.names, frozenset(self.attacks)))

    def __repr__(self) -> str:
        atts = ", ".join(f"({self.names[u]},{self.names[v]})" for u, v in self.attacks)
        return f"AF({{{', '.join(self.names)}}}, {{{atts}}})"

    @property
    def all(self) -> ArgSet:
        return frozenset(range(len(self.names)))

    def index_of(self, arg: ArgRef) -> int:
        if isinstance(arg, int) and not isinstance(arg, bool):
            if 0 <= arg < len(self.names):
                return arg
            raise UnknownArgument(arg)
        try:
            return self._index[arg]
        except KeyError:
            raise UnknownArgument(arg) from None

    def argset(self, names: Iterable[ArgRef]) -> ArgSet:
        return frozenset(self.index_of(n) for n in names)

    def names_of(self, s: Iterable[int]) -> list[str]:
        """Names of the members of ``s`` in declaration order."""
        return [self.names[i] for i in sorted(s)]

    def attackers(self, a: ArgRef) -> ArgSet:
        return frozenset(self.attackers_of[self.index_of(a)])

    def set_attacks(self, s: Iterable[int], t: Iterable[int]) -> bool:
        t = t if isinstance(t, (set, frozenset)) else set(t)
        return any(v in t for u in s for v in self.attacked_by[u])

    def attacked_by_set(self, s: Iterable[int]) -> ArgSet:
        """The set of arguments attacked by some member of ``s``."""
        return frozenset(v for u in s for v in self.attacked_by[u])

    def defends(self, s: Iterable[int], a: ArgRef) -> bool:
        defeated = self.attacked_by_set(s)
        return all(b in defeated for b in self.attackers_of[self.index_of(a)])

    def to_tgf(self) -> str:
        lines = list(self.names) + ["#"]
        lines += [f"{self.names[u]} {self.names[v]}" for u, v in self.attacks]
        return "\n".join(lines) + "\n"

    def to_apx(self) -> str:
        lines = [f"arg({n})." for n in self.names]
        lines += [f"att({self.names[u]},{self.names[v]})." for u, v in self.attacks]
        return "".join(line + "\n" for line in lines)

    def serialize(self, fmt: str) -> str:
        if fmt == "tgf":
            return self.to_tgf()
        if fmt == "apx":
            return self.to_apx()
        raise ValueError(f"unsupported format {fmt!r}")


def _decode(text: bytes | str) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


def _declare(names: list[str], index: dict[str, int], name: str, lineno: int) -> None:
    if name in index:
        raise ParseError(lineno, f"duplicate argument {name}")
    index[name] = len(names)
    names.append(name)


def parse_tgf(text: bytes | str) -> ArgumentationFramework:
    names: list[str] = []
    index: dict[str, int] = {}
    attacks: list[tuple[str, str]] = []
    in_attacks = False
    for lineno, raw in enumerate(_decode(text).splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_attacks:
                raise ParseError(lineno, "repeated separator '#'")
            in_attacks = True
            continue
        tokens = line.split()
        if not in_attacks:
            if len(tokens) != 1 or not _TOKEN.match(tokens[0]):
                raise ParseError(lineno, f"malformed argument line {line!r}")
            _declare(names, index, tokens[0], lineno)
        else:
            if len(tokens) != 2 or not all(_TOKEN.match(t) for t in tokens):
                raise ParseError(lineno, f"malformed attack line {line!r}")
            for t in tokens:
                if t not in index:
                    raise ParseError(lineno, f"undeclared argument {t}")
            attacks.append((tokens[0], tokens[1]))
    return ArgumentationFramework(names, attacks)


def parse_apx(text: bytes | str) -> ArgumentationFramework:
    names: list[str] = []
    index: dict[str, int] = {}
    pending: list[tuple[int, str, str]] = []
    for lineno, line in enumerate(_decode(text).splitlines(), 1):
        if not line.strip():
            continue
        if m := _APX_ARG.match(line):
            _declare(names, index, m.group(1), lineno)
        elif m := _APX_ATT.match(line):
            pending.append((lineno, m.group(1), m.group(2)))
        else:
            raise ParseError(lineno, f"malformed fact {line.strip()!r}")
    # att/2 facts may precede the arg/1 facts they mention
    for lineno, src, tgt in pending:
        for t in (src, tgt):
            if t not in index:
                raise ParseError(lineno, f"undeclared argument {t}")
    return ArgumentationFramework(names, [(s, t) for _, s, t in pending])


def parse(text: bytes | str, fmt: str) -> ArgumentationFramework:
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ValueError(f"unsupported format {fmt!r}")


def parse_file(path, fmt: str) -> ArgumentationFramework:
    with open(path, "rb") as fh:
        return parse(fh.read(), fmt)
