import json

import pytest

from raag.cli import main

GROUP = """\
gens a1 a2 a3 a4
commute a1 a4
commute a2 a3
commute a2 a4
"""

FREE_GROUP = "gens a1 a2\n"

TRAP_COMPLEX = """\
vertices x1 x2
edge e1 x1 x1 a1
edge e2 x1 x2 a2
edge e3 x2 x2 a1
"""


@pytest.fixture
def group_file(tmp_path):
    p = tmp_path / "example.group"
    p.write_text(GROUP)
    return str(p)


@pytest.fixture
def free_group_file(tmp_path):
    p = tmp_path / "free.group"
    p.write_text(FREE_GROUP)
    return str(p)


@pytest.fixture
def complex_file(tmp_path):
    p = tmp_path / "trap.complex"
    p.write_text(TRAP_COMPLEX)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normal_form(group_file, capsys):
    code, out, _ = run(capsys, "normal-form", "-g", group_file, "--no-timing",
                       "-w", "a2^-2 a4^-1 a3 a2 a4 a1 a2 a1^-1 a2^2 a4^-1")
    assert code == 0
    assert out.strip() == "a4^-1 a3 a2^-1 a1 a2 a1^-1 a2^2"


def test_normal_form_json(group_file, capsys):
    code, out, _ = run(capsys, "normal-form", "-g", group_file, "--json",
                       "--no-timing", "-w", "a1 a4")
    assert code == 0
    assert json.loads(out) == {"normal_form": "a4 a1", "length": 2}


def test_timing_included_by_default(group_file, capsys):
    code, out, _ = run(capsys, "normal-form", "-g", group_file, "-w", "a1")
    assert code == 0
    assert "elapsed" in out


def test_word_problem(group_file, capsys):
    code, out, _ = run(capsys, "word-problem", "-g", group_file,
                       "--no-timing", "-w", "a1 a4 a1^-1 a4^-1")
    assert code == 0 and out.startswith("YES")
    code, out, _ = run(capsys, "word-problem", "-g", group_file,
                       "--no-timing", "-w", "a1 a2 a1^-1 a2^-1")
    assert code == 0 and out.startswith("NO")


def test_conjugate_yes_and_no(group_file, capsys):
    code, out, _ = run(capsys, "conjugate", "-g", group_file, "--no-timing",
                       "-w", "a1 a2", "-v", "a2 a1")
    assert code == 0 and out.strip() == "YES"
    code, out, _ = run(capsys, "conjugate", "-g", group_file, "--no-timing",
                       "-w", "a1", "-v", "a2")
    assert code == 0 and out.strip() == "NO"


def test_cyclic_normal_form(group_file, capsys):
    code, out, _ = run(capsys, "cyclic-normal-form", "-g", group_file,
                       "--json", "--no-timing", "-w", "a1 a4 a1")
    assert code == 0
    payload = json.loads(out)
    assert payload["factors"] == ["a1^2", "a4"]
    assert payload["components"] == [["a1"], ["a4"]]


def test_centralizer(group_file, capsys):
    code, out, _ = run(capsys, "centralizer", "-g", group_file, "--json",
                       "--no-timing", "-w", "a1 a2 a1 a2")
    assert code == 0
    payload = json.loads(out)
    assert payload["roots"] == [{"z": "a1 a2", "r": 2}]
    assert payload["link_gens"] == ["a4"]


def test_validate_complex(free_group_file, complex_file, capsys):
    code, out, _ = run(capsys, "validate-complex", "-g", free_group_file,
                       "-x", complex_file, "--no-timing")
    assert code == 0
    assert out.startswith("valid")


def test_groupoid_conjugate(free_group_file, complex_file, capsys):
    code, out, _ = run(capsys, "groupoid-conjugate", "-g", free_group_file,
                       "-x", complex_file, "--no-timing",
                       "--loop1", "x1: a1", "--loop2", "x1: a2 a1 a2^-1")
    assert code == 0 and out.strip() == "NO"
    code, out, _ = run(capsys, "groupoid-conjugate", "-g", free_group_file,
                       "-x", complex_file, "--no-timing",
                       "--loop1", "x2: a1", "--loop2", "x1: a2 a1 a2^-1")
    assert code == 0 and out.strip() == "YES"


def test_oracle_subcommands(group_file, capsys):
    code, out, _ = run(capsys, "oracle-equal", "-g", group_file, "--no-timing",
                       "-w", "a1 a4", "-v", "a4 a1")
    assert code == 0 and out.strip() == "YES"
    code, out, _ = run(capsys, "oracle-conjugate", "-g", group_file,
                       "--no-timing", "-w", "a1 a2", "-v", "a2 a1")
    assert code == 0 and out.strip() == "YES"


def test_bench_small(group_file, capsys):
    code, out, _ = run(capsys, "bench", "-g", group_file, "--json",
                       "--sizes", "100", "200", "--repeats", "1")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [100, 200]
    assert all(r["seconds"] >= 0 for r in rows)


def test_bad_word_exits_2(group_file, capsys):
    code, _, err = run(capsys, "normal-form", "-g", group_file,
                       "--no-timing", "-w", "a9")
    assert code == 2
    assert "a9" in err


def test_missing_group_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "normal-form", "-g", str(tmp_path / "nope"),
                       "--no-timing", "-w", "a1")
    assert code == 2


def test_bad_presentation_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.group"
    p.write_text("gens a1\ncommute a1 a7\n")
    code, _, err = run(capsys, "word-problem", "-g", str(p),
                       "--no-timing", "-w", "a1")
    assert code == 2
    assert "a7" in err


def test_non_loop_exits_2(free_group_file, complex_file, capsys):
    code, _, err = run(capsys, "groupoid-conjugate", "-g", free_group_file,
                       "-x", complex_file, "--no-timing",
                       "--loop1", "x1: a2", "--loop2", "x1: a1")
    assert code == 2
    assert "loop" in err
