import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from supertwist.charring import FormalCharacter, char_exp, coefficient
from supertwist.cli import run
from supertwist.root_systems import Weight, make_gl, parabolic_from_simples
from supertwist.twist import compare, oracle_twisted_char
from supertwist.weyl import parse_word

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out=out)
    return status, out.getvalue()


def error_of(capsys):
    lines = capsys.readouterr().err.strip().splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


@pytest.mark.parametrize(
    "golden,argv",
    [
        ("char_verma_gl2_0.txt", ["char-verma", "--algebra", "gl2|0", "--weight", "0,0", "--trunc", "3"]),
        ("char_twist_gl2_1.json", ["char-twist", "--algebra", "gl2|1", "--parabolic", "2", "--weight", "1,1,-1",
                                   "--word", "s1", "--trunc", "8", "--format", "json"]),
        ("char_gvm_gl3_0_levi.txt", ["char-gvm", "--algebra", "gl3|0", "--parabolic", "1", "--weight", "1,0,0",
                                     "--levi", "--trunc", "4"]),
        ("roots_gl3_2.txt", ["roots", "--algebra", "gl3|2", "--parabolic", "1,3"]),
        ("decompose_gl2_1.json", ["decompose", "--algebra", "gl2|1", "--parabolic", "1", "--weight", "0,0,0",
                                  "--format", "json"]),
    ],
)
def test_golden_output(golden, argv):
    status, text = call(*argv)
    assert status == 0
    assert text == (GOLDEN / golden).read_text()
    # byte-identical on a second run
    assert call(*argv)[1] == text


def test_char_verma_lists_alpha_string():
    status, text = call("char-verma", "--algebra", "gl2|0", "--weight", "0,0", "--trunc", "3")
    assert status == 0
    assert text.splitlines()[1:] == [f"1*e^({-k},{k})" for k in range(4)]


def test_char_twist_json_equals_oracle():
    status, text = call("char-twist", "--algebra", "gl2|1", "--parabolic", "2", "--weight", "1,1,-1",
                        "--word", "s1", "--trunc", "8", "--format", "json", "--check")
    assert status == 0
    chi = FormalCharacter.from_json(json.loads(text))
    rs = make_gl(2, 1)
    P = parabolic_from_simples(rs, {1})
    oracle = oracle_twisted_char(rs, P, parse_word(rs, "s1"), char_exp(Weight.of(1, 1, -1)), 8)
    report = compare(chi, oracle)
    assert report.agree and report.order == 8
    assert chi.to_json() == json.loads(text)


def test_json_round_trip_of_gvm():
    status, text = call("char-gvm", "--algebra", "gl3|0", "--parabolic", "1", "--weight", "1,0,0", "--levi",
                        "--trunc", "4", "--format", "json")
    assert status == 0
    chi = FormalCharacter.from_json(json.loads(text))
    assert coefficient(chi, Weight.of(0, 0, 1)) == 2
    assert json.dumps(chi.to_json()) + "\n" == text


def test_verify_pug_all_exit_zero():
    status, text = call("verify", "pug", "--algebra", "gl3|2", "--all")
    assert status == 0
    assert "verified" in text


@pytest.mark.parametrize("what", ["asp", "pig", "don"])
def test_verify_other_identities(what):
    status, text = call("verify", what, "--algebra", "gl2|1", "--all", "--format", "json")
    assert status == 0
    data = json.loads(text)
    assert data["verified"] and data["checked"] > 0


def test_verify_theorem_single_case():
    status, text = call("verify", "theorem", "--algebra", "gl2|1", "--parabolic", "2", "--word", "s1",
                        "--weight", "1,1,-1", "--trunc", "8", "--format", "json")
    assert status == 0
    assert json.loads(text) == {"agree": True, "order": 8, "first_discrepancy": None}


def test_sweep_small_algebra():
    status, text = call("sweep", "--algebra", "gl2|1", "--trunc", "5", "--samples", "1", "--format", "json")
    assert status == 0
    data = json.loads(text)
    assert data["agree"] and data["cases"] > 0


def test_sweep_refuses_large_algebra(capsys):
    status, _ = call("sweep", "--algebra", "gl4|4")
    assert status == 1
    assert error_of(capsys)["error"] == "usage"


def test_weyl_command():
    status, text = call("weyl", "--algebra", "gl3|2", "--word", "s1 s2 t1", "--format", "json")
    assert status == 0
    data = json.loads(text)
    assert data["element"] == {"sigma": [2, 3, 1], "tau": [2, 1]}
    assert data["length"] == 3


@pytest.mark.parametrize(
    "argv,code",
    [
        (["char-verma", "--algebra", "gl2|1", "--weight", "1,x,0"], "precondition"),
        (["char-verma", "--algebra", "gl2|1", "--weight", "1,0"], "usage"),
        (["char-gvm", "--algebra", "gl2|1", "--parabolic", "7", "--weight", "0,0,0"], "usage"),
        (["char-gvm", "--algebra", "gl3|0", "--parabolic", "1", "--weight", "1,0,0"], "not-one-dimensional"),
        (["char-twist", "--algebra", "gl2|1", "--parabolic", "1", "--weight", "0,0,0", "--word", "s1",
          "--levi"], "incompatible-twist"),
        (["weyl", "--algebra", "gl3|2", "--word", "t2"], "precondition"),
        (["roots"], "usage"),
        (["frobnicate", "--algebra", "gl2|1"], "usage"),
    ],
)
def test_errors_exit_one_with_json_reason(capsys, argv, code):
    status, text = call(*argv)
    assert status == 1
    assert text == ""
    err = error_of(capsys)
    assert err["error"] == code and err["reason"]


def test_trunc_env_override(monkeypatch):
    monkeypatch.setenv("SUPERTWIST_TRUNC", "2")
    status, text = call("char-verma", "--algebra", "gl2|0", "--weight", "0,0")
    assert status == 0
    assert text.startswith("# anchor=(0,0) order=2 terms=3")
    monkeypatch.setenv("SUPERTWIST_TRUNC", "abc")
    assert call("char-verma", "--algebra", "gl2|0", "--weight", "0,0")[0] == 1


def test_verification_failure_exits_two(monkeypatch):
    import supertwist.cli as cli

    monkeypatch.setattr(cli, "verify_pug", lambda rs, w, Z: w.is_identity())
    status, text = call("verify", "pug", "--algebra", "gl2|1", "--all", "--format", "json")
    assert status == 2
    data = json.loads(text)
    assert not data["verified"] and data["first_failure"] is not None


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supertwist", "char-verma", "--algebra", "gl2|0", "--weight", "0,0", "--trunc", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "char_verma_gl2_0.txt").read_text()
