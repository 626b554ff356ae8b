import math

import numpy as np
import pytest

import qpsim

SMALL = ["grid.n=128", "beam.w0=20"]


def test_defaults_and_overrides():
    cfg = qpsim.parse_config()
    assert cfg.n == 512
    assert cfg.half_width == 464.0
    cfg = qpsim.parse_config('{"medium": {"d": 3}}', ["plate.q=1"])
    assert cfg.d == 3.0
    assert '"q":1' in cfg.to_json().replace(" ", "")


def test_config_errors_are_value_errors():
    with pytest.raises(qpsim.ConfigError):
        qpsim.parse_config('{"colour": 1}')
    with pytest.raises(ValueError):
        qpsim.parse_config("", ["scan.steps=1"])


def test_sampling_error_names_criterion():
    with pytest.raises(qpsim.SamplingError, match="mode-resolution"):
        qpsim.run_single(qpsim.parse_config("", ["grid.n=32"]))


def test_single_run_conserves_total_for_q1():
    cfg = qpsim.parse_config("", ["plate.q=1"])
    r = qpsim.run_single(cfg)
    vx, vy = r["output"]
    assert vx.shape == (512, 512) and vx.dtype == np.complex128
    assert abs(r["dwJz"]) < 2e-3
    assert r["dwJz"] == r["dwLz"] + r["dwSz"]
    assert abs(r["energy_ratio"] - 1.0) < 1e-6


def test_propagate_and_report_match_run_single():
    cfg = qpsim.parse_config("", SMALL)
    r = qpsim.run_single(cfg)
    vx, vy = r["input"]
    ox, oy = qpsim.propagate(vx, vy, cfg.half_width, q=0.5)
    np.testing.assert_array_equal(ox, r["output"][0])
    rep = qpsim.am_report(ox, oy, cfg.half_width)
    assert rep["wSz"] == pytest.approx(r["after"]["wSz"], abs=1e-15)
    radial = qpsim.am_report(ox, oy, cfg.half_width, method="radial")
    assert abs(radial["wSz"] - rep["wSz"]) < 1e-3


def test_lg_mode_is_normalized():
    u = qpsim.lg_mode(1, 0, 20.0, 128, 144.0)
    cell = (2 * 144.0 / 128) ** 2
    assert np.sum(np.abs(u) ** 2) * cell == pytest.approx(1.0, abs=1e-6)


def test_closed_form_ratio():
    p = qpsim.predict_delta(1.0, 1.5)
    assert p["dwLz"] / p["dwSz"] == pytest.approx(-1.5)
    assert p["dwSz"] == pytest.approx(-p["bracket"] / (4 * math.pi))


def test_scan_csv_round_trip():
    cfg = qpsim.parse_config("", SMALL + ["scan.parameter=d", "scan.start=1", "scan.stop=2", "scan.steps=3"])
    rows = qpsim.run_scan(cfg)
    assert [row.value for row in rows] == [1.0, 1.5, 2.0]
    name, back = qpsim.parse_scan_csv(qpsim.scan_csv("d", rows))
    assert name == "d"
    assert back == rows


def test_qpsf_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    vx = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    vy = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    path = tmp_path / "f.qpsf"
    qpsim.write_qpsf(path, vx, vy, 3.5)
    assert path.read_bytes()[:4] == b"QPSF"
    bx, by, h = qpsim.read_qpsf(path)
    np.testing.assert_array_equal(bx, vx)
    np.testing.assert_array_equal(by, vy)
    assert h == 3.5


def test_verify_reports_undersized_grid():
    report = qpsim.run_verify(qpsim.parse_config("", ["grid.n=32"]))
    assert not report.passed
    assert any(line.name == "sampling.mode-resolution" and not line.passed for line in report.lines)
