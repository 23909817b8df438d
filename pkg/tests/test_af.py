import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from argsat.af import ArgumentationFramework, ParseError, UnknownArgument, parse
from corpus import AF1, AF4, all_frameworks


def test_parse_tgf():
    af = parse(b"a\nb\n#\na b\n", "tgf")
    assert af.names == ("a", "b")
    assert af.attacks == ((0, 1),)


def test_parse_apx():
    af = parse(b"arg(a).\narg(b).\natt(a,b).\n", "apx")
    assert af == ArgumentationFramework("ab", [("a", "b")])


def test_tgf_and_apx_agree():
    assert parse("a\nb\n#\na b\n", "tgf") == parse("arg(a).\narg(b).\natt(a,b).\n", "apx")


def test_undeclared_endpoint():
    with pytest.raises(ParseError, match="undeclared argument b") as exc:
        parse(b"a\n#\na b\n", "tgf")
    assert exc.value.lineno == 3


@pytest.mark.parametrize("text, fmt, lineno", [
    ("a\na\n#\n", "tgf", 2),
    ("a\nb c\n#\n", "tgf", 2),
    ("a\n#\na\n", "tgf", 3),
    ("a\n#\na a a\n", "tgf", 3),
    ("a\n#\n#\n", "tgf", 3),
    ("arg(a).\narg(a).\n", "apx", 2),
    ("arg(a).\nfoo(a).\n", "apx", 2),
    ("arg(a).\natt(a,b).\n", "apx", 2),
    ("arg(a)\n", "apx", 1),
])
def test_parse_errors_carry_line_numbers(text, fmt, lineno):
    with pytest.raises(ParseError) as exc:
        parse(text, fmt)
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"line {lineno}:")


def test_apx_whitespace_and_forward_references():
    af = parse("  att( x , y ).\n\narg(y).\n arg( x ) . \n", "apx")
    assert af.names == ("y", "x")
    assert af.attacks == ((1, 0),)


def test_self_attack_and_duplicates():
    af = parse("a\n#\na a\na a\n", "tgf")
    assert af.attacks == ((0, 0),)


def test_empty_framework():
    for fmt in ("tgf", "apx"):
        assert len(parse("", fmt)) == 0
    assert len(parse("#\n", "tgf")) == 0


def test_invalid_utf8():
    with pytest.raises(UnicodeDecodeError):
        parse(b"\xff\n", "tgf")


def test_attackers():
    assert AF4.attackers("a") == AF4.argset("d")
    assert AF4.attackers("d") == AF4.argset("bc")
    assert ArgumentationFramework("a").attackers("a") == frozenset()
    with pytest.raises(UnknownArgument):
        AF4.attackers("z")


def test_set_attacks():
    assert AF4.set_attacks(AF4.argset("c"), AF4.argset("bd"))
    assert not AF4.set_attacks(frozenset(), AF4.all)
    assert not AF4.set_attacks(AF4.argset("a"), AF4.argset("bcd"))


def test_defends():
    assert AF1.defends(AF1.argset("a"), "c")
    assert AF1.defends(frozenset(), "a")
    assert not AF4.defends(AF4.argset("a"), "a")


def test_adjacency_inverse():
    for af in all_frameworks():
        rebuilt = {(b, a) for a in range(len(af)) for b in af.attackers_of[a]}
        assert rebuilt == set(af.attacks)
        rebuilt = {(a, b) for a in range(len(af)) for b in af.attacked_by[a]}
        assert rebuilt == set(af.attacks)


def test_attackers_matches_set_attacks():
    for af in all_frameworks():
        for a in range(len(af)):
            expected = {b for b in range(len(af)) if af.set_attacks({b}, {a})}
            assert af.attackers(a) == expected


def test_defends_exhaustive():
    for n in range(4):
        for af in all_frameworks("abc"[:n]):
            for bits in itertools.product([0, 1], repeat=n):
                s = {i for i, b in enumerate(bits) if b}
                beaten = {x for x in range(n) if af.set_attacks(s, {x})}
                for a in range(n):
                    assert af.defends(s, a) == (af.attackers(a) <= beaten)


names = st.lists(st.from_regex(r"[A-Za-z0-9_]{1,4}", fullmatch=True), unique=True, max_size=8)


@st.composite
def frameworks(draw):
    args = draw(names)
    if not args:
        return ArgumentationFramework([])
    pair = st.tuples(st.sampled_from(args), st.sampled_from(args))
    return ArgumentationFramework(args, draw(st.lists(pair, max_size=20)))


@given(frameworks(), st.sampled_from(["tgf", "apx"]))
def test_round_trip(af, fmt):
    again = parse(af.serialize(fmt).encode(), fmt)
    assert again == af
    assert again.names == af.names
    assert again.attacks == af.attacks
