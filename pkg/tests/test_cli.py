import json

import pytest

from dolrep import analyze
from dolrep.cli import ParseError, parse_system, report_to_dict, run, serialize_system

G_FILE = """\
# Example system
alphabet: 0 1 2
axiom: 0
0 -> 0 1 2
1 -> 2
2 -> 1
"""

TM_FILE = """\
alphabet: 0 1
axiom: 0
0 -> 0 1
1 -> 1 0
"""


def test_parse_system_g(system_g):
    assert parse_system(G_FILE) == system_g


def test_parse_accepts_empty_image():
    system = parse_system("alphabet: a b\naxiom: a\na -> a b\nb ->\n")
    assert system.morphism.image(1) == ()


def test_parse_multicharacter_symbols():
    system = parse_system("alphabet: lo hi\naxiom: lo\nlo -> lo hi\nhi -> hi\n")
    assert system.alphabet.symbols == ("lo", "hi")
    assert system.axiom == (0,)


def test_parse_comments_and_blank_lines():
    text = "\n# header\nalphabet: a  # trailing\n\naxiom: a\na -> a a\n"
    system = parse_system(text)
    assert system.morphism.image(0) == (0, 0)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("", None, "empty input"),
        ("axiom: a\n", 1, "alphabet"),
        ("alphabet:\n", 1, "no symbols"),
        ("alphabet: a a\n", 1, "distinct"),
        ("alphabet: a\na -> a\n", 2, "axiom"),
        ("alphabet: a\naxiom:\n", 2, "non-empty"),
        ("alphabet: a\naxiom: b\n", 2, "undeclared"),
        ("alphabet: a\naxiom: a\nb -> a\n", 3, "undeclared"),
        ("alphabet: a\naxiom: a\na -> b\n", 3, "undeclared"),
        ("alphabet: a\naxiom: a\na -> a\na -> a\n", 4, "duplicate"),
        ("alphabet: a b\naxiom: a\na -> a\n", None, "missing rule"),
        ("alphabet: a\naxiom: a\na a\n", 3, "SYM -> SYM*"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_system(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_serialize_round_trips(system_g, system_h, thue_morse):
    for system in (system_g, system_h, thue_morse):
        text = serialize_system(system)
        assert parse_system(text) == system
        assert serialize_system(parse_system(text)) == text


def test_report_dict_schema(system_g):
    data = report_to_dict(analyze(system_g))
    assert list(data) == [
        "system",
        "pushy",
        "repetitive",
        "strongly_repetitive",
        "bounded_letters",
        "simplification_steps",
        "classes",
    ]
    assert data["system"]["rules"] == {"0": ["0", "1", "2"], "1": ["2"], "2": ["1"]}
    assert data["bounded_letters"] == ["1", "2"]
    assert data["classes"] == [
        {
            "representative": ["1", "1", "2", "2"],
            "conjugates": [
                ["1", "1", "2", "2"],
                ["1", "2", "2", "1"],
                ["2", "1", "1", "2"],
                ["2", "2", "1", "1"],
            ],
            "source": "bounded",
        }
    ]


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_run_text_report(tmp_path, capsys):
    rc = run(["analyze", _write(tmp_path, "g.dol", G_FILE)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pushy: yes" in out
    assert "repetitive: yes" in out
    assert "1122" in out


def test_run_json_report(tmp_path, capsys):
    rc = run(["analyze", _write(tmp_path, "tm.dol", TM_FILE), "--json"])
    out = capsys.readouterr().out
    assert rc == 0
    data = json.loads(out)
    assert data["repetitive"] is False
    assert data["pushy"] is False
    assert data["classes"] == []


def test_run_verify_agreement(tmp_path, capsys):
    rc = run(["analyze", _write(tmp_path, "g.dol", G_FILE), "--verify"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "oracle: agreement" in out


def test_run_verify_flags(tmp_path, capsys):
    rc = run(
        [
            "analyze",
            _write(tmp_path, "tm.dol", TM_FILE),
            "--verify",
            "--depth",
            "10",
            "--max-len",
            "6",
            "--power",
            "3",
        ]
    )
    assert rc == 0
    assert "oracle: agreement" in capsys.readouterr().out


def test_run_parse_error_exit_code(tmp_path, capsys):
    rc = run(["analyze", _write(tmp_path, "bad.dol", "alphabet: a\naxiom: b\n")])
    err = capsys.readouterr().err
    assert rc == 1
    assert "line 2" in err


def test_run_missing_file(capsys):
    rc = run(["analyze", "/nonexistent/path.dol"])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_run_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(G_FILE))
    rc = run(["analyze", "-"])
    assert rc == 0
    assert "repetitive: yes" in capsys.readouterr().out


def test_run_internal_error_exit_code(tmp_path, monkeypatch, capsys):
    from dolrep import EngineInvariantError
    import dolrep.cli as cli_mod

    def boom(system):
        raise EngineInvariantError("forced for the exit-code contract")

    monkeypatch.setattr(cli_mod, "analyze", boom)
    rc = run(["analyze", _write(tmp_path, "g.dol", G_FILE)])
    assert rc == 2
    assert "internal error" in capsys.readouterr().err


def test_run_verify_disagreement_exit_code(tmp_path, capsys):
    # depth 2 is too shallow for the oracle to see G's class: forced disagreement
    rc = run(["analyze", _write(tmp_path, "g.dol", G_FILE), "--verify", "--depth", "2"])
    out = capsys.readouterr().out
    assert rc == 3
    assert "oracle: disagreement" in out
