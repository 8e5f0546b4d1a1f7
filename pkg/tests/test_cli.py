"""End-to-end checks of the command line interface."""

import json
import math
import shutil
import subprocess

import pytest

from toriclab import RadialGrid, ToricDomain, spectrum_rows_from_csv
from toriclab.cli import main


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def quarterball_json(path, radius=1.0, n=2):
    return write_json(path, {
        "n": n, "descriptor": {"type": "quarterball", "R": radius, "n": n}})


def ellipsoid_json(path, axes):
    return write_json(path, {
        "n": len(axes),
        "descriptor": {"type": "ellipsoid", "a": list(axes)}})


CP2_POLY = {"n": 2, "ineqs": [{"v": [-1, 0], "c": 0}, {"v": [0, -1], "c": 0},
                              {"v": [1, 1], "c": 1}]}
NORM_SQ_HALF = {"type": "quadratic", "Q": [[1, 0], [0, 1]], "l": [0, 0],
                "c": 0}
THREE_BARS = {"bars": [{"start": 0.0, "end": 1.0},
                       {"start": 0.5, "end": None},
                       {"start": 0.2, "end": 0.25}]}


# -- spectrum -----------------------------------------------------------------------

def test_spectrum_quarterball_writes_seven_classes(tmp_path, capsys):
    dom = quarterball_json(tmp_path / "qb.json")
    out = tmp_path / "orbits.csv"
    assert main(["spectrum", "--domain", dom, "--smax", "2.5",
                 "--out", str(out)]) == 0
    assert capsys.readouterr().out.startswith("7 classes")
    rows = spectrum_rows_from_csv(out)
    assert len(rows) == 7
    text = out.read_text()
    assert text.splitlines()[0] == "face,p,action,primitive,degenerate"
    assert format(math.sqrt(2.0), ".17g") in text


def test_spectrum_manifest_records_run(tmp_path):
    dom = quarterball_json(tmp_path / "qb.json")
    out = tmp_path / "orbits.csv"
    main(["spectrum", "--domain", dom, "--smax", "2.5", "--out", str(out)])
    manifest = json.loads((tmp_path / "orbits.csv.manifest.json").read_text())
    assert manifest["command"] == "spectrum"
    assert manifest["arguments"]["smax"] == 2.5
    assert manifest["outputs"] == [str(out)]
    for key in ("toriclab", "python", "numpy", "scipy"):
        assert manifest["versions"][key]


def test_spectrum_reruns_are_byte_identical(tmp_path):
    dom = quarterball_json(tmp_path / "qb.json")
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["spectrum", "--domain", dom, "--smax", "2.5", "--out", str(a)])
    main(["spectrum", "--domain", dom, "--smax", "2.5", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_jobs_flag_defaults_to_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("TORICLAB_JOBS", "3")
    dom = quarterball_json(tmp_path / "qb.json")
    out = tmp_path / "orbits.csv"
    main(["spectrum", "--domain", dom, "--smax", "1.5", "--out", str(out)])
    manifest = json.loads((tmp_path / "orbits.csv.manifest.json").read_text())
    assert manifest["arguments"]["jobs"] == 3
    main(["spectrum", "--domain", dom, "--smax", "1.5", "--out", str(out),
          "--jobs", "2"])
    manifest = json.loads((tmp_path / "orbits.csv.manifest.json").read_text())
    assert manifest["arguments"]["jobs"] == 2


# -- growth -------------------------------------------------------------------------

def test_growth_ellipsoid_fit_is_linear(tmp_path, capsys):
    dom = ellipsoid_json(tmp_path / "ell.json", (1.0, math.sqrt(2.0)))
    out = tmp_path / "growth.csv"
    assert main(["growth", "--domain", dom, "--smax", "1000",
                 "--samples", "50", "--fit-lo", "100", "--fit-hi", "1000",
                 "--out", str(out)]) == 0
    line = capsys.readouterr().out
    degree = float(line.split("poly_degree=")[1].split()[0])
    assert 0.8 <= degree <= 1.2
    assert out.read_text().splitlines()[0] == "s,count"


# -- bound --------------------------------------------------------------------------

def test_bound_certificate_passes_and_reports(tmp_path):
    dom = quarterball_json(tmp_path / "qb.json")
    out = tmp_path / "cert.json"
    assert main(["bound", "--domain", dom, "--s", "1.5,2",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["ok"] is True
    assert payload["c_growth"] == pytest.approx(72.0)
    assert payload["c_offset"] == pytest.approx(41.0)
    assert [e["count"] for e in payload["entries"]] == [9, 13]
    assert all(e["count"] <= e["bound"] for e in payload["entries"])


# -- mollify ------------------------------------------------------------------------

def test_mollify_reports_and_exports_grid(tmp_path):
    dom = write_json(tmp_path / "rd.json", {
        "n": 2,
        "descriptor": {"type": "rolled_disk_plus", "c": [1.0, 1.0],
                       "rho": 1.0}})
    out = tmp_path / "moll.json"
    grid_path = tmp_path / "rung.json"
    assert main(["mollify", "--domain", dom, "--etas", "0.05",
                 "--resolution", "400", "--out", str(out),
                 "--export-grid", str(grid_path)]) == 0
    payload = json.loads(out.read_text())
    assert payload["m_lower_ladder"] > 0
    report = payload["reports"][0]
    assert report["eta"] == 0.05
    assert report["xi"] > 0
    rung = ToricDomain.from_json(grid_path.read_text())
    assert isinstance(rung.descriptor, RadialGrid)
    manifest = json.loads((tmp_path / "moll.json.manifest.json").read_text())
    assert manifest["seed"] == 20260814


# -- delzant ------------------------------------------------------------------------

def test_delzant_count_projective_plane(tmp_path, capsys):
    poly = write_json(tmp_path / "poly.json", CP2_POLY)
    ham = write_json(tmp_path / "ham.json", NORM_SQ_HALF)
    out = tmp_path / "counts.csv"
    assert main(["delzant", "count", "--polytope", poly,
                 "--hamiltonian", ham, "--k", "1,2,3",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("k,total")
    totals = [int(row.split(",")[1]) for row in lines[1:]]
    assert totals == [5, 13, 25]
    assert "1,2:1|1,3:1|2,3:1|1:2|2:2|3:5|-:1" in capsys.readouterr().out


def test_delzant_bound_certifies_quadratic_growth(tmp_path, capsys):
    poly = write_json(tmp_path / "poly.json", CP2_POLY)
    ham = write_json(tmp_path / "ham.json", NORM_SQ_HALF)
    out = tmp_path / "kcert.json"
    assert main(["delzant", "bound", "--polytope", poly,
                 "--hamiltonian", ham, "--kmax", "12",
                 "--out", str(out)]) == 0
    assert "ok" in capsys.readouterr().out
    payload = json.loads(out.read_text())
    assert payload["ok"] is True
    assert 1.5 <= payload["fitted_degree"] <= 2.3


# -- barcode ------------------------------------------------------------------------

def test_barcode_beps_three_bar_example(tmp_path, capsys):
    bars = write_json(tmp_path / "b.json", THREE_BARS)
    assert main(["barcode", "beps", "--bars", bars,
                 "--eps", "0.3", "--s", "0.6"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_barcode_reduce_writes_barcode(tmp_path, capsys):
    cx = write_json(tmp_path / "cx.json", {
        "field": 2,
        "generators": [{"id": "x", "filtration": 0.1},
                       {"id": "y", "filtration": 0.7}],
        "boundary": {"y": [["x", 1]]}})
    out = tmp_path / "bars.json"
    assert main(["barcode", "reduce", "--complex", cx,
                 "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "1 bars"
    payload = json.loads(out.read_text())
    assert payload["bars"] == [{"start": 0.1, "end": 0.7}]
    assert (tmp_path / "bars.json.manifest.json").exists()


def test_barcode_bottleneck_prints_distance(tmp_path, capsys):
    a = write_json(tmp_path / "a.json", {"bars": [{"start": 0.0, "end": 2.0}]})
    b = write_json(tmp_path / "b.json",
                   {"bars": [{"start": 0.1, "end": 2.1}]})
    assert main(["barcode", "bottleneck", "--a", a, "--b", b]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.1)


# -- bm -----------------------------------------------------------------------------

def test_bm_ratio_prints_log_scale(tmp_path, capsys):
    f = quarterball_json(tmp_path / "f.json", radius=1.0)
    g = quarterball_json(tmp_path / "g.json", radius=2.0)
    assert main(["bm", "ratio", "--f", f, "--g", g]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(math.log(2.0),
                                                           abs=1e-12)


def ladder_payload(counts_per_rung):
    rungs = []
    for i, count in enumerate(counts_per_rung):
        bars = [{"start": 0.0, "end": 2.0} for _ in range(count)]
        rungs.append({"label": f"e{i}", "barcode": {"bars": bars},
                      "scale_upper": 10.0})
    return {"rungs": rungs}


def test_bm_ladder_stabilized_run(tmp_path, capsys):
    ladder = write_json(tmp_path / "ladder.json", ladder_payload([2, 2, 2]))
    assert main(["bm", "ladder", "--ladder", ladder,
                 "--eps", "0.5", "--s", "1.0"]) == 0
    assert "liminf=2 stabilized=true" in capsys.readouterr().out


def test_bm_ladder_unstable_run_signals_check_failure(tmp_path, capsys):
    ladder = write_json(tmp_path / "ladder.json", ladder_payload([1, 2, 3]))
    assert main(["bm", "ladder", "--ladder", ladder,
                 "--eps", "0.5", "--s", "1.0"]) == 3
    assert "stabilized=false" in capsys.readouterr().out


# -- exit codes and entry point -------------------------------------------------------

def test_missing_input_file_exits_two(tmp_path, capsys):
    assert main(["spectrum", "--domain", str(tmp_path / "absent.json"),
                 "--smax", "1.0", "--out", str(tmp_path / "o.csv")]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_subcommand_exits_two(capsys):
    assert main(["nonsense"]) == 2
    capsys.readouterr()


def test_invalid_parameter_exits_two(tmp_path, capsys):
    bars = write_json(tmp_path / "b.json", THREE_BARS)
    assert main(["barcode", "beps", "--bars", bars,
                 "--eps", "-0.3", "--s", "0.6"]) == 2
    assert "error:" in capsys.readouterr().err


def test_console_script_is_installed(tmp_path):
    exe = shutil.which("toriclab")
    assert exe, "console script not on PATH"
    bars = tmp_path / "b.json"
    write_json(bars, THREE_BARS)
    proc = subprocess.run([exe, "barcode", "beps", "--bars", str(bars),
                           "--eps", "0.3", "--s", "0.6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2"
