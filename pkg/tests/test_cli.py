import json

import pytest

from tracecodes.cli import main, parse_m


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_parse_m():
    assert parse_m("7") == [7]
    assert parse_m("5..9") == [5, 6, 7, 8, 9]
    assert parse_m("5,7") == [5, 7]


@pytest.mark.parametrize("argv", [
    ("verify", "--family", "f3", "--m", "5..9"),
    ("verify", "--family", "f7", "--m", "4"),
    ("verify", "--family", "f1", "--m", "3"),
])
def test_verify_exit_zero(capsys, argv):
    rc, out = run(capsys, *argv)
    assert rc == 0, out
    assert "FAIL" not in out


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--family", "f4", "--m", "5,7", "--format", "json")
    assert run(capsys, *argv) == run(capsys, *argv)


def test_families(capsys):
    rc, out = run(capsys, "families", "--list")
    assert rc == 0 and "f4" in out
    rc, out = run(capsys, "families", "--check", "--m", "3..8")
    assert rc == 0


def test_sequence_emits(capsys):
    rc, out = run(capsys, "sequence", "--family", "f1", "--m", "3", "--emit", "poly")
    assert rc == 0 and "x^4+x^2+x+1" in out
    rc, out = run(capsys, "sequence", "--family", "f1", "--m", "3", "--emit", "bits")
    bits = "".join(ch for ch in out if ch in "01")
    assert rc == 0 and len(bits) >= 7


def test_predict_json(capsys):
    rc, out = run(capsys, "predict", "--family", "f4", "--m", "7", "--json")
    doc = json.loads(out)
    assert rc == 0 and doc["span"] == 22 and doc["dimension"] == 105


def test_code_json_schema(capsys):
    rc, out = run(capsys, "code", "--family", "f4", "--m", "7", "--json")
    doc = json.loads(out)
    assert rc == 0
    assert {"family", "m", "n", "k", "generator_hex", "generator_pretty",
            "defining_set_leaders", "distance", "bounds", "optimal"} <= set(doc)
    assert (doc["n"], doc["k"]) == (127, 105)
    assert doc["distance"] == {"kind": "exact", "lo": 6, "hi": 6, "method": doc["distance"]["method"]}
    assert {"bch", "ht", "ht_witness", "sphere_packing"} <= set(doc["bounds"])
    assert int(doc["generator_hex"], 16).bit_length() - 1 == 22


def test_code_dual_bounds_mode(capsys):
    rc, out = run(capsys, "code", "--family", "f2", "--m", "5", "--dual", "--json",
                  "--distance", "bounds")
    doc = json.loads(out)
    assert rc == 0 and doc["k"] == 6 and doc["distance"]["lo"] <= 15 <= doc["distance"]["hi"]


@pytest.mark.parametrize("argv", [
    ("code", "--family", "f9", "--m", "5"),
    ("predict", "--family", "f1", "--m", "4"),
    ("code", "--family", "f1", "--m", "5", "--poly", "x^5+1"),
])
def test_errors_exit_two(capsys, argv):
    assert main(list(argv)) == 2
