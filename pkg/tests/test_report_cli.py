import json
import os

import numpy as np
import pytest

from summlab.cli import main
from summlab.report import Report, format_value


def test_float_formatting_17_digits():
    assert format_value(1.0 / 3.0) == format(1 / 3, ".17g")
    assert format_value(2) == "2"
    assert format_value(True) == "true"


def test_report_csv_shape():
    rep = Report(columns=["n", "value"], metadata={"command": "demo", "alpha": 0.5})
    rep.add_row(1, 0.25)
    rep.add_row(2, 1.0 / 3.0)
    text = rep.to_csv()
    lines = text.split("\n")
    assert lines[0] == "# command=demo"
    assert lines[1] == "# alpha=0.5"
    assert lines[2] == "n,value"
    assert lines[3] == "1,0.25"
    assert "0.33333333333333331" in lines[4]
    assert text.endswith("\n") and "\r" not in text


def test_report_json_mirrors_columns():
    rep = Report(columns=["a", "b"], metadata={"k": 1})
    rep.add_row(1, 2.0)
    payload = json.loads(rep.to_json())
    assert payload["columns"] == ["a", "b"]
    assert payload["rows"] == [[1, 2.0]]
    assert payload["metadata"]["k"] == "1"


def test_report_row_width_checked():
    rep = Report(columns=["a"])
    with pytest.raises(ValueError):
        rep.add_row(1, 2)


def run_cli(tmp_path, *argv):
    out = tmp_path / "out.csv"
    rc = main(list(argv) + ["--out", str(out)])
    assert rc == 0
    return out.read_text()


def test_cli_lebesgue_n0_row(tmp_path):
    text = run_cli(tmp_path, "lebesgue", "--n-max", "16")
    rows = [l for l in text.splitlines() if not l.startswith("#")]
    assert rows[0] == "n,dirichlet_l1,fejer_l1"
    first = rows[1].split(",")
    assert first[0] == "0" and float(first[1]) == 1.0


def test_cli_determinism_byte_identical(tmp_path):
    a = run_cli(tmp_path, "cesaro", "--function", "random", "--seed", "7",
                "--n-max", "64", "--alpha", "0.5,1", "--space", "h2")
    b = run_cli(tmp_path, "cesaro", "--function", "random", "--seed", "7",
                "--n-max", "64", "--alpha", "0.5,1", "--space", "h2")
    assert a == b
    c = run_cli(tmp_path, "cesaro", "--function", "random", "--seed", "8",
                "--n-max", "64", "--alpha", "0.5,1", "--space", "h2")
    assert a != c


def test_cli_config_round_trips_into_metadata(tmp_path):
    text = run_cli(tmp_path, "wiener", "--alpha", "1", "--j-max", "32")
    meta = dict(l[2:].split("=", 1) for l in text.splitlines() if l.startswith("# "))
    assert meta["command"] == "wiener"
    assert meta["alpha"] == "1"
    assert meta["j_max"] == "32"
    assert float(meta["max_residual"]) < 1e-9


def test_cli_wiener_residual_column(tmp_path):
    text = run_cli(tmp_path, "wiener", "--alpha", "1", "--j-max", "200")
    rows = [l.split(",") for l in text.splitlines() if not l.startswith("#")]
    header, data = rows[0], rows[1:]
    ri = header.index("row_residual")
    assert len(data) == 201
    assert all(float(r[ri]) < 1e-9 for r in data)


def test_cli_limitation_hb_ladder(tmp_path):
    text = run_cli(tmp_path, "limitation", "--space", "hb", "--alpha", "0",
                   "--j-max", "64")
    rows = [l.split(",") for l in text.splitlines() if not l.startswith("#")]
    header, data = rows[0], rows[1:]
    pi = header.index("p_norm")
    assert float(data[63][pi]) == pytest.approx(np.sqrt(64.0))
    ratios = [float(r[header.index("ratio")]) for r in data]
    assert ratios[-1] > ratios[1]  # partial sums cannot converge here


def test_cli_hb_geometric_ladder(tmp_path):
    text = run_cli(tmp_path, "hb", "--phi", "geom", "--alpha", "0.4,0.5",
                   "--j-max", "100000")
    meta = dict(l[2:].split("=", 1) for l in text.splitlines() if l.startswith("# "))
    assert meta["verdict_alpha_0.5"] == "bounded"
    assert meta["verdict_alpha_0.4"] == "growing"
    rows = [l.split(",") for l in text.splitlines() if not l.startswith("#")]
    header, data = rows[0], rows[1:]
    ni = header.index("monomial_norm")
    ji = header.index("j")
    for r in data:
        assert float(r[ni]) == pytest.approx(np.sqrt(1.0 + float(r[ji])), rel=1e-12)


def test_cli_counterexample(tmp_path):
    text = run_cli(tmp_path, "counterexample", "--which", "mixed_l1", "--n-max", "64")
    rows = [l.split(",") for l in text.splitlines() if not l.startswith("#")]
    assert rows[0] == ["example", "n", "norm_gap", "max_pairing"]
    assert all(r[2] == "1" for r in rows[1:])


def test_cli_json_format(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["lebesgue", "--n-max", "4", "--format", "json", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["columns"] == ["n", "dirichlet_l1", "fejer_l1"]
    assert payload["metadata"]["command"] == "lebesgue"


def test_cli_plot_writes_figure(tmp_path):
    out = tmp_path / "leb.csv"
    rc = main(["lebesgue", "--n-max", "32", "--out", str(out), "--plot"])
    assert rc == 0
    png = tmp_path / "leb.png"
    assert png.exists() and png.stat().st_size > 1000


def test_cli_coefficient_file(tmp_path):
    cf = tmp_path / "f.txt"
    cf.write_text("1 0\n-2 0\n1 0\n")  # (1-z)^2
    text = run_cli(tmp_path, "wiener", "--coeff-file", str(cf), "--j-max", "16")
    meta = dict(l[2:].split("=", 1) for l in text.splitlines() if l.startswith("# "))
    assert float(meta["max_residual"]) < 1e-12


def test_cli_rejects_bad_input(tmp_path):
    with pytest.raises(SystemExit):
        main(["cesaro", "--function", "nope", "--out", str(tmp_path / "x.csv")])
    with pytest.raises(SystemExit):
        main(["lebesgue", "--grid-log2", "25", "--out", str(tmp_path / "x.csv")])
    with pytest.raises(SystemExit):
        main(["lebesgue", "--plot"])
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n")
    with pytest.raises(SystemExit):
        main(["wiener", "--coeff-file", str(bad), "--out", str(tmp_path / "x.csv")])
