"""Spin-to-orbital angular momentum conversion in q-plates.

Fields are complex (n, n) arrays, row index along y and column index along x,
on a cell-centred grid spanning [-half_width, half_width]. Lengths are in
vacuum wavelengths.
"""

from ._core import (
    Config,
    ConfigError,
    SamplingError,
    ScanRow,
    VerifyLine,
    VerifyReport,
    am_report,
    lg_mode,
    load_config,
    parse_config,
    parse_scan_csv,
    predict_delta,
    propagate,
    read_qpsf,
    run_scan,
    run_single,
    run_verify,
    scan_csv,
    validate_sampling,
    write_qpsf,
)

__all__ = [
    "Config",
    "ConfigError",
    "SamplingError",
    "ScanRow",
    "VerifyLine",
    "VerifyReport",
    "am_report",
    "lg_mode",
    "load_config",
    "parse_config",
    "parse_scan_csv",
    "predict_delta",
    "propagate",
    "read_qpsf",
    "run_scan",
    "run_single",
    "run_verify",
    "scan_csv",
    "validate_sampling",
    "write_qpsf",
]
