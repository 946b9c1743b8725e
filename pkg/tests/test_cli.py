import json
import math

import pytest

from polyharm import mapspec
from polyharm.cli import main


@pytest.fixture
def f2_map(tmp_path):
    path = tmp_path / "f2.map"
    mapspec.dump(mapspec.loads('{"builtin": "f2"}'), path)
    return str(path)


@pytest.fixture
def identity_map(tmp_path):
    path = tmp_path / "identity.map"
    mapspec.dump(mapspec.loads('{"builtin": "identity"}'), path)
    return str(path)


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _lines(capsys):
    out = capsys.readouterr().out
    return {ln.split("=")[0].strip(): ln.split("=", 1)[1].strip()
            for ln in out.strip().splitlines() if "=" in ln}


# ---- evaluation commands ----


def test_eval(identity_map, capsys):
    assert main(["eval", "--map", identity_map, "--z", "0.25+0.5j"]) == 0
    out = capsys.readouterr().out.strip()
    assert complex(out) == 0.25 + 0.5j


def test_derive(f2_map, capsys):
    assert main(["derive", "--map", f2_map, "--z", "0.5"]) == 0
    vals = _lines(capsys)
    assert complex(vals["F_z"]) == 1.6875
    assert complex(vals["F_zbar"]) == 0.375
    assert float(vals["jacobian"]) == 1.6875**2 - 0.375**2


def test_length_sup(f2_map, capsys):
    assert main(["length", "--map", f2_map, "--sup"]) == 0
    got = float(_lines(capsys)["sup_length"])
    assert abs(got - 6.0 * math.pi) <= 1e-8


def test_length_fixed_radius(f2_map, capsys):
    assert main(["length", "--map", f2_map, "--r", "0.5"]) == 0
    got = float(_lines(capsys)["length"])
    assert abs(got - 2.0 * math.pi * 0.5 * 1.3125) <= 1e-9


def test_area_both_routes(f2_map, capsys):
    assert main(["area", "--map", f2_map, "--r", "0.5", "--method", "both"]) == 0
    vals = _lines(capsys)
    assert abs(float(vals["S_series"]) - 0.4306640625) <= 1e-12
    assert abs(float(vals["S_series"]) - float(vals["S_quadrature"])) <= 1e-8


def test_diam(tmp_path, capsys):
    path = _write(tmp_path, "sq.map",
                  '{"builtin": "monomial", "params": {"p": 1, "j": 2}}')
    assert main(["diam", "--map", path]) == 0
    got = float(capsys.readouterr().out.split(">=")[1])
    assert abs(got - 2.0) <= 1e-9


# ---- radii ----


def test_landau_length_mode(identity_map, capsys):
    assert main(["landau", "--mode", "length", "--map", identity_map]) == 0
    vals = _lines(capsys)
    assert abs(float(vals["r_univ"]) - 0.5) <= 1e-9
    assert abs(float(vals["rho_cover"]) - (1.0 - math.log(2.0))) <= 1e-9


def test_landau_diameter_mode(identity_map, capsys):
    assert main(["landau", "--mode", "diameter", "--map", identity_map]) == 0
    vals = _lines(capsys)
    assert 0.0 < float(vals["r_univ"]) < 1.0
    assert 0.0 < float(vals["rho_cover"]) < 1.0


# ---- certificates ----


def test_three_circles_pass(identity_map, capsys):
    assert main(["three-circles", "--map", identity_map, "--r1", "0.3"]) == 0
    assert "pass" in capsys.readouterr().out


def test_three_circles_hnm(f2_map, capsys):
    # boundary area of about 9 breaks the unit budget hypothesis
    assert main(["three-circles", "--map", f2_map, "--r1", "0.3"]) == 2


def test_schwarz_pass(identity_map, capsys):
    assert main(["schwarz", "--map", identity_map]) == 0
    out = capsys.readouterr().out
    assert "constant" in out


def test_schwarz_hnm(tmp_path, capsys):
    path = _write(tmp_path, "mis.map",
                  '{"p": 2, "J": 1, "terms": ['
                  '{"n": 1, "j": 1, "a": [1, 0]},'
                  '{"n": 2, "j": 1, "a": [-1, 0]}]}')
    assert main(["schwarz", "--map", path]) == 2


# ---- metric commands ----


def test_jmetric_value(capsys):
    assert main(["jmetric", "--z", "0", "--w", "0.5", "--M", "1"]) == 0
    out = capsys.readouterr().out.strip()
    assert abs(float(out) - math.log(2.0)) <= 1e-15


def test_jmetric_mobius(capsys):
    assert main(["jmetric", "--mobius-a", "0.5", "--mobius-theta", "0.3"]) == 0
    vals = _lines(capsys)
    assert float(vals["sup_ratio"]) <= 2.0 + 1e-9
    assert vals["verdict"] == "pass"


# ---- rendering ----


def test_render_svg_file(f2_map, tmp_path, capsys):
    out = tmp_path / "f2.svg"
    assert main(["render", "--map", f2_map, "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    text = out.read_text(encoding="utf-8")
    assert text.startswith("<svg ") and text.rstrip().endswith("</svg>")


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    for name in ("identity", "linear", "monomial", "f2", "f0", "F1", "form37"):
        assert name in out


# ---- verify ----


def test_verify_pass_and_deterministic(f2_map, tmp_path, capsys):
    out_file = tmp_path / "report.json"
    assert main(["verify", "--map", f2_map, "--out", str(out_file)]) == 0
    first = capsys.readouterr().out
    assert out_file.read_text(encoding="utf-8") == first
    assert main(["verify", "--map", f2_map]) == 0
    second = capsys.readouterr().out
    assert first == second  # byte-identical across runs
    doc = json.loads(first)
    assert doc["summary"]["exit_code"] == 0
    assert doc["summary"]["fail"] == 0
    assert doc["summary"]["hypotheses-not-met"] == 0
    assert doc["input"]["p"] == 3
    assert abs(doc["derived"]["K"] - 3.0) <= 1e-6
    assert abs(doc["derived"]["l1"] - 6.0 * math.pi) <= 1e-8
    names = [c["name"] for c in doc["checks"]]
    assert "diameter-coefficient-bounds" in names
    assert "area-schwarz" in names


def test_verify_conclusion_failure(tmp_path, capsys):
    # honest length hypothesis (K = 1, l1 = 2 pi) cannot carry a huge
    # second coefficient: the bound margin goes negative
    path = _write(tmp_path, "big.map",
                  '{"p": 1, "J": 2, "terms": ['
                  '{"n": 1, "j": 1, "a": [1, 0]},'
                  '{"n": 1, "j": 2, "a": [10, 0]}]}')
    code = main(["verify", "--map", path, "--K", "1.0",
                 "--l1", "6.283185307179586"])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["exit_code"] == 1
    bad = [c for c in doc["checks"] if c["verdict"] == "fail"]
    assert [c["name"] for c in bad] == ["length-coefficient-bounds"]


def test_verify_hypotheses_not_met(tmp_path, capsys):
    path = _write(tmp_path, "mis.map",
                  '{"p": 2, "J": 1, "terms": ['
                  '{"n": 1, "j": 1, "a": [1, 0]},'
                  '{"n": 2, "j": 1, "a": [-1, 0]}]}')
    assert main(["verify", "--map", path]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["exit_code"] == 2


# ---- failure modes ----


def test_usage_errors(identity_map, capsys):
    assert main(["no-such-command"]) == 3
    assert main(["eval"]) == 3  # --map is required
    assert main(["eval", "--map", identity_map, "--z", "spiral"]) == 3
    assert main(["length", "--map", identity_map]) == 3  # needs --r or --sup
    assert main(["jmetric", "--z", "0"]) == 3
    capsys.readouterr()


def test_io_errors(tmp_path, identity_map, capsys):
    assert main(["eval", "--map", str(tmp_path / "nope.map"), "--z", "0"]) == 4
    bad = _write(tmp_path, "bad.map", "{not json")
    assert main(["eval", "--map", bad, "--z", "0"]) == 4
    unknown = _write(tmp_path, "unk.map", '{"builtin": "spiral"}')
    assert main(["eval", "--map", unknown, "--z", "0"]) == 4
    assert main(["length", "--map", identity_map, "--r", "0.5",
                 "--tol", "0"]) == 4  # cannot converge to zero tolerance
    capsys.readouterr()


def test_invalid_math_params(identity_map, capsys):
    # mathematically invalid inputs are usage errors, not crashes
    assert main(["three-circles", "--map", identity_map, "--r1", "1.5"]) == 3
    assert main(["jmetric", "--z", "2", "--w", "0", "--M", "1"]) == 3
    capsys.readouterr()
