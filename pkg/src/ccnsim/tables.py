"""CSV emission for the three command workflows.

Every file starts with a provenance header: ``#``-prefixed comment
lines echoing the tool version and the exact configuration, so outputs
are self-describing.  Data rows are plain CSV below that.  Floats are
written with ``repr``, which round-trips the full double precision, so
identical configurations produce byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

from .config import RunConfig, render_config
from .model import SpectrumReport, state_label
from .scenarios import ExperimentResult, SweepResult

TIMESERIES_COLUMNS = (
    ["t"]
    + [f"re_d{k}" for k in range(8)]
    + [f"im_d{k}" for k in range(8)]
    + [f"p{k}" for k in range(8)]
    + ["iz0", "iz1", "iz2", "ix0", "iy0", "ix1", "iy1", "ix2", "iy2", "norm_err"]
)

SUMMARY_COLUMNS = ["re_f", "im_f", "abs_f", "norm_drift_max"]

SWEEP_COLUMNS = ["j_prime", "j_ratio", "p2", "p3", "p6", "p7", "re_f", "im_f", "abs_f"]


def _fmt(value: float) -> str:
    return repr(float(value))


def provenance_lines(cfg: RunConfig, version: str, extra: dict[str, str] | None = None) -> list[str]:
    lines = [f"# ccnsim {version}"]
    for line in render_config(cfg).splitlines():
        lines.append(f"# {line}")
    for key, value in (extra or {}).items():
        lines.append(f"# {key} = {value}")
    return lines


def _write(path: Path, header_lines: list[str], rows: list[str]) -> Path:
    path = Path(path)
    text = "\n".join(header_lines + rows) + "\n"
    path.write_text(text, encoding="utf-8")
    return path


def write_timeseries_csv(path, result: ExperimentResult, cfg: RunConfig, version: str) -> Path:
    """Per-sample amplitudes, probabilities and spin components."""
    rows = [",".join(TIMESERIES_COLUMNS)]
    amps = result.trajectory.amplitudes
    nerr = result.trajectory.norm_error
    for i, t in enumerate(result.times):
        cells = [_fmt(t)]
        cells += [_fmt(amps[i, k].real) for k in range(8)]
        cells += [_fmt(amps[i, k].imag) for k in range(8)]
        cells += [_fmt(result.probabilities[i, k]) for k in range(8)]
        cells += [_fmt(result.spin_z[i, j]) for j in range(3)]
        for j in range(3):
            cells += [_fmt(result.spin_x[i, j]), _fmt(result.spin_y[i, j])]
        cells.append(_fmt(nerr[i]))
        rows.append(",".join(cells))
    return _write(path, provenance_lines(cfg, version), rows)


def write_summary_csv(path, result: ExperimentResult, cfg: RunConfig, version: str) -> Path:
    """One row: final fidelity (re, im, abs) and the run's norm drift."""
    f = result.fidelity.value
    rows = [
        ",".join(SUMMARY_COLUMNS),
        ",".join([_fmt(f.real), _fmt(f.imag), _fmt(abs(f)), _fmt(result.norm_drift_max)]),
    ]
    return _write(path, provenance_lines(cfg, version), rows)


def write_sweep_csv(path, sweep: SweepResult, cfg: RunConfig, version: str) -> Path:
    """One row per j' value, ascending."""
    jprimes = ", ".join(_fmt(r.j_prime) for r in sweep.records)
    rows = [",".join(SWEEP_COLUMNS)]
    for r in sweep.records:
        rows.append(
            ",".join(
                [
                    _fmt(r.j_prime),
                    _fmt(r.j_ratio),
                    _fmt(r.p2),
                    _fmt(r.p3),
                    _fmt(r.p6),
                    _fmt(r.p7),
                    _fmt(r.fidelity.real),
                    _fmt(r.fidelity.imag),
                    _fmt(r.fidelity_modulus),
                ]
            )
        )
    return _write(path, provenance_lines(cfg, version, {"jprimes": jprimes}), rows)


def write_spectrum_csv(path, report: SpectrumReport, cfg: RunConfig, version: str) -> Path:
    """Levels sorted by energy, then the twelve single-flip transitions."""
    rows = ["state_bits,energy"]
    for level in report.levels:
        rows.append(f"{state_label(level.state)},{_fmt(level.energy)}")
    rows.append("m_bits,k_bits,qubit,frequency")
    for tr in report.transitions:
        rows.append(f"{state_label(tr.upper)},{state_label(tr.lower)},{tr.qubit},{_fmt(tr.frequency)}")
    return _write(path, provenance_lines(cfg, version), rows)
