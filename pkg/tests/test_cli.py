from pathlib import Path

import pytest

from argsat import oracle
from argsat.cli import main, run
from corpus import all_frameworks, task_matrix

GOLDEN = Path(__file__).parent / "golden"


def golden_cases():
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if line.startswith("#"):
            continue
        argv, stdout, code = (part.strip() for part in line.split("|"))
        yield argv, stdout, int(code)


def resolve(argv):
    """Point ``-f`` operands at the golden directory."""
    out = argv.split()
    for i, tok in enumerate(out[:-1]):
        if tok == "-f":
            out[i + 1] = str(GOLDEN / out[i + 1])
    return out


@pytest.mark.parametrize("argv, stdout, code", list(golden_cases()))
def test_golden(argv, stdout, code):
    got_code, got_out, got_err = run(resolve(argv))
    assert got_code == code
    if code == 0:
        assert got_out == stdout + "\n"
        assert got_err == ""
    else:
        assert got_out == ""
        assert got_err.strip()


def test_parse_error_reports_line():
    code, out, err = run(resolve("-p SE-ST -f bad.tgf -fo tgf"))
    assert code == 1 and out == ""
    assert "line 3" in err and "undeclared argument b" in err


def test_unknown_query_diagnostic():
    _, _, err = run(resolve("-p DC-PR -f af1.tgf -fo tgf -a z"))
    assert "unknown argument z" in err


def test_invalid_utf8(tmp_path):
    path = tmp_path / "x.tgf"
    path.write_bytes(b"\xff\n#\n")
    code, out, err = run(["-p", "SE-PR", "-f", str(path), "-fo", "tgf"])
    assert code == 1 and out == "" and "UTF-8" in err


def test_main_writes_streams(capsys):
    assert main(["--formats"]) == 0
    assert capsys.readouterr().out == "[tgf,apx]\n"
    assert main(["--nope"]) == 1
    captured = capsys.readouterr()
    assert captured.out == "" and captured.err


@pytest.mark.parametrize("task, first_line", [
    ("SE-ST", "p cnf 3 5"),
    ("CE-CO", "p cnf 5 10"),
    ("SE-GR", "p cnf 3 0"),
])
def test_dimacs_dump(tmp_path, task, first_line):
    dump = tmp_path / "base.cnf"
    code, out, _ = run(resolve(f"-p {task} -f af1.tgf -fo tgf") + ["--dimacs-dump", str(dump)])
    assert code == 0
    text = dump.read_text()
    assert text.splitlines()[0] == first_line
    assert all(line.endswith(" 0") or line == "0" for line in text.splitlines()[1:])


def test_dimacs_dump_pair_encoding(tmp_path):
    dump = tmp_path / "pair.cnf"
    code, out, _ = run(resolve("-p DS-PR -f af4.tgf -fo tgf -a a") + ["--dimacs-dump", str(dump)])
    assert (code, out) == (0, "YES\n")
    assert dump.read_text().startswith("p cnf 13 ")


def render_oracle(af, problem, sem, query):
    fam = oracle.enumerate_extensions(af, sem)
    if problem == "CE":
        return [str(len(fam))]
    if problem == "DC":
        return ["YES" if fam.credulous(af.index_of(query)) else "NO"]
    if problem == "DS":
        return ["YES" if fam.skeptical(af.index_of(query)) else "NO"]
    if not len(fam):
        return ["NO"]
    return ["[" + ",".join(af.names_of(e)) + "]" for e in fam]


@pytest.mark.parametrize("fmt", ["tgf", "apx"])
def test_cli_matches_oracle_on_corpus(tmp_path, fmt):
    # every 7th framework of the exhaustive corpus keeps this quick
    for k, af in enumerate(all_frameworks()):
        if k % 7:
            continue
        path = tmp_path / f"af.{fmt}"
        path.write_text(af.serialize(fmt))
        for problem, sem, query in task_matrix(af):
            argv = ["-p", f"{problem}-{sem}", "-f", str(path), "-fo", fmt]
            if query is not None:
                argv += ["-a", query]
            code, out, err = run(argv)
            assert code == 0, err
            assert out.count("\n") == 1 and out.endswith("\n") and out == out.rstrip() + "\n"
            assert out[:-1] in render_oracle(af, problem, sem, query), (af, problem, sem, query)
