"""Command-line entry point: ``ccnsim spectrum | run | sweep``.

All three subcommands read the same ``--config`` file and write CSV
tables under the configured output prefix; ``--plot`` additionally
renders figures next to them.  The exit code is 0 only if the run
completed and every numerical sanity check (norm conservation within
1e-6) passed; failures print a single machine-readable line
``ccnsim: error: <token>: <detail>`` to stderr.

Tokens: ``config`` (bad configuration, exit 2), ``io`` (file problem,
exit 1), ``norm_drift`` (integration accuracy check failed, exit 1),
``normalization`` (a state failed its unit-norm gate, exit 1).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .config import ConfigError, RunConfig, parse_config
from .dynamics import NormDriftError
from .model import spectrum_report
from .scenarios import DEFAULT_SWEEP_JPRIMES, run_ccn_experiment, sweep_jprime
from .tables import (
    write_spectrum_csv,
    write_summary_csv,
    write_sweep_csv,
    write_timeseries_csv,
)

#: Largest norm drift a finished run may report and still exit 0.
NORM_CHECK_LIMIT = 1e-6

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2


def _error(token: str, detail: str) -> None:
    print(f"ccnsim: error: {token}: {detail}", file=sys.stderr)


def _warn(detail: str) -> None:
    print(f"ccnsim: warning: {detail}", file=sys.stderr)


def cmd_spectrum(cfg: RunConfig, plot: bool = False) -> list[Path]:
    """Write ``<prefix>_spectrum.csv`` (and the level figure with ``plot``)."""
    report = spectrum_report(cfg.chain_params())
    paths = [write_spectrum_csv(f"{cfg.out_prefix}_spectrum.csv", report, cfg, __version__)]
    if plot:
        from .plots import render_spectrum_figure

        paths += render_spectrum_figure(report, cfg.out_prefix)
    return paths


def cmd_run(cfg: RunConfig, plot: bool = False) -> tuple[list[Path], float]:
    """Run one pulse; write timeseries and summary CSVs, return norm drift."""
    params = cfg.chain_params()
    result = run_ccn_experiment(
        params,
        cfg.initial_state(),
        cfg.integrator_config(),
        pulse=cfg.build_pulse(params),
    )
    paths = [
        write_timeseries_csv(f"{cfg.out_prefix}_timeseries.csv", result, cfg, __version__),
        write_summary_csv(f"{cfg.out_prefix}_summary.csv", result, cfg, __version__),
    ]
    if plot:
        from .plots import render_run_figures

        paths += render_run_figures(result, cfg.out_prefix)
    return paths, result.norm_drift_max


def cmd_sweep(cfg: RunConfig, j_prime_values, plot: bool = False) -> tuple[list[Path], float]:
    """Run the sweep; write ``<prefix>_sweep.csv``, return worst norm drift.

    The drive frequency and pulse duration are rebuilt per point, so any
    configured ``pulse_frequency``/``duration`` overrides are ignored
    here (a fixed drive would defeat the sweep's purpose).
    """
    if cfg.pulse_frequency is not None or cfg.duration is not None:
        _warn("pulse_frequency/duration overrides are ignored by 'sweep'")
    sweep = sweep_jprime(
        cfg.chain_params(), j_prime_values, cfg.initial_state(), cfg.integrator_config()
    )
    paths = [write_sweep_csv(f"{cfg.out_prefix}_sweep.csv", sweep, cfg, __version__)]
    if plot:
        from .plots import render_sweep_figures

        paths += render_sweep_figures(sweep, cfg.out_prefix)
    drift = max(exp.norm_drift_max for exp in sweep.experiments)
    return paths, drift


def _parse_jprimes(raw: str) -> list[float]:
    try:
        values = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"--jprimes: malformed number in {raw!r}") from None
    if not values:
        raise ConfigError("--jprimes: list must not be empty")
    if any(v < 0 for v in values):
        raise ConfigError("--jprimes: values must be >= 0")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccnsim",
        description="Single-pulse CCN (Toffoli) gate dynamics on a three-spin Ising chain.",
    )
    parser.add_argument("--version", action="version", version=f"ccnsim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--config", "-c", required=True, help="path to a key = value config file")
        sp.add_argument("--plot", action="store_true", help="also render figures next to the CSVs")

    sp = sub.add_parser("spectrum", help="energy levels and single-flip transition frequencies")
    add_common(sp)
    sp = sub.add_parser("run", help="one pulse: time series and fidelity summary")
    add_common(sp)
    sp = sub.add_parser("sweep", help="repeat the pulse over a list of j_prime values")
    add_common(sp)
    sp.add_argument(
        "--jprimes",
        default=",".join(str(v) for v in DEFAULT_SWEEP_JPRIMES),
        help="comma-separated j_prime values (default: %(default)s)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        _error("io", f"cannot read config {args.config}: {exc}")
        return EXIT_CHECK_FAILED

    try:
        cfg = parse_config(text)
        jprimes = _parse_jprimes(args.jprimes) if args.command == "sweep" else None
    except ConfigError as exc:
        _error("config", str(exc))
        return EXIT_CONFIG

    if cfg.j_prime > cfg.j / 10.0:
        _warn(
            f"j_prime={cfg.j_prime:g} exceeds j/10={cfg.j / 10.0:g}; second-neighbour "
            "coupling is expected to be at least an order of magnitude weaker"
        )

    drift = 0.0
    try:
        if args.command == "spectrum":
            paths = cmd_spectrum(cfg, plot=args.plot)
        elif args.command == "run":
            paths, drift = cmd_run(cfg, plot=args.plot)
        else:
            paths, drift = cmd_sweep(cfg, jprimes, plot=args.plot)
    except NormDriftError as exc:
        _error("norm_drift", str(exc))
        return EXIT_CHECK_FAILED
    except ValueError as exc:
        # e.g. the fidelity refusing a final state whose norm drifted past 1e-6
        _error("normalization", str(exc))
        return EXIT_CHECK_FAILED
    except OSError as exc:
        _error("io", str(exc))
        return EXIT_CHECK_FAILED

    for path in paths:
        print(path)

    if drift > NORM_CHECK_LIMIT:
        _error(
            "norm_drift",
            f"max |sum p_k - 1| = {drift:.3e} exceeds {NORM_CHECK_LIMIT:g}; "
            "outputs were written but fail the conservation check, decrease dt",
        )
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
