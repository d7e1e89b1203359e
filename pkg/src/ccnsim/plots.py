"""Figure rendering for run, sweep and spectrum results.

Renders matplotlib figures straight to files next to the CSV output;
nothing is shown interactively (the Agg backend is forced so the CLI
works headless).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .model import SpectrumReport, state_label
from .scenarios import ExperimentResult, SweepResult

_DPI = 150


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def render_run_figures(result: ExperimentResult, prefix: str) -> list[Path]:
    """Write the four time-series figures for one experiment.

    ``<prefix>_amplitudes.png``     re/im of the target-pair amplitudes,
    ``<prefix>_probabilities.png``  all eight occupation probabilities,
    ``<prefix>_spin_z.png``         longitudinal spin components,
    ``<prefix>_spin_xy.png``        lab-frame transverse components.
    """
    t = result.times
    paths = []

    fig, ax = plt.subplots(figsize=(7, 4.5))
    amps = result.trajectory.amplitudes
    for k, style in ((6, "-"), (7, "--")):
        ax.plot(t, amps[:, k].real, style, label=f"Re a[{state_label(k)}]")
        ax.plot(t, amps[:, k].imag, style, label=f"Im a[{state_label(k)}]")
    ax.set_xlabel("t (us)")
    ax.set_ylabel("rotating-frame amplitude")
    ax.grid(alpha=0.3)
    ax.legend()
    paths.append(_save(fig, Path(f"{prefix}_amplitudes.png")))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for k in range(8):
        ax.plot(t, result.probabilities[:, k], label=f"p[{state_label(k)}]")
    ax.set_xlabel("t (us)")
    ax.set_ylabel("probability")
    ax.grid(alpha=0.3)
    ax.legend(ncol=2, fontsize=8)
    paths.append(_save(fig, Path(f"{prefix}_probabilities.png")))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for j in range(3):
        ax.plot(t, result.spin_z[:, j], label=f"<Iz> qubit {j}")
    ax.set_xlabel("t (us)")
    ax.set_ylabel("longitudinal spin")
    ax.set_ylim(-0.55, 0.55)
    ax.grid(alpha=0.3)
    ax.legend()
    paths.append(_save(fig, Path(f"{prefix}_spin_z.png")))

    fig, (ax_x, ax_y) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    for j in range(3):
        ax_x.plot(t, result.spin_x[:, j], label=f"<Ix> qubit {j}", lw=0.6)
        ax_y.plot(t, result.spin_y[:, j], label=f"<Iy> qubit {j}", lw=0.6)
    ax_y.set_xlabel("t (us)")
    ax_x.set_ylabel("transverse spin (x)")
    ax_y.set_ylabel("transverse spin (y)")
    for ax in (ax_x, ax_y):
        ax.grid(alpha=0.3)
        ax.legend(fontsize=8)
    paths.append(_save(fig, Path(f"{prefix}_spin_xy.png")))

    return paths


def render_sweep_figures(sweep: SweepResult, prefix: str) -> list[Path]:
    """Write the fidelity and final-population figures of a sweep."""
    ratios = np.array([r.j_ratio for r in sweep.records])
    paths = []

    fig, (ax_f, ax_m) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    ax_f.plot(ratios, [r.fidelity.real for r in sweep.records], "o-", label="Re F")
    ax_f.plot(ratios, [r.fidelity.imag for r in sweep.records], "s-", label="Im F")
    ax_m.plot(ratios, [r.fidelity_modulus for r in sweep.records], "o-", color="k", label="|F|")
    ax_m.set_xlabel("j'/j")
    ax_f.set_ylabel("fidelity")
    ax_m.set_ylabel("|fidelity|")
    for ax in (ax_f, ax_m):
        ax.grid(alpha=0.3)
        ax.legend()
    paths.append(_save(fig, Path(f"{prefix}_sweep_fidelity.png")))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in ("p2", "p3", "p6", "p7"):
        ax.plot(ratios, [getattr(r, name) for r in sweep.records], "o-", label=name)
    ax.set_xlabel("j'/j")
    ax.set_ylabel("final probability")
    ax.grid(alpha=0.3)
    ax.legend()
    paths.append(_save(fig, Path(f"{prefix}_sweep_populations.png")))

    return paths


def render_spectrum_figure(report: SpectrumReport, prefix: str) -> list[Path]:
    """Write the level diagram with per-qubit transition frequencies."""
    fig, (ax_lv, ax_tr) = plt.subplots(1, 2, figsize=(9, 5))
    for level in report.levels:
        ax_lv.hlines(level.energy, 0.1, 0.9, color="tab:blue")
        ax_lv.annotate(
            f"|{level.label}>",
            (0.92, level.energy),
            va="center",
            fontsize=9,
        )
    ax_lv.set_xlim(0, 1.3)
    ax_lv.set_xticks([])
    ax_lv.set_ylabel("energy / hbar (linear MHz)")

    colors = ("tab:red", "tab:green", "tab:purple")
    for tr in report.transitions:
        ax_tr.vlines(tr.frequency, 0, 1, color=colors[tr.qubit], alpha=0.8)
    for j, color in enumerate(colors):
        ax_tr.plot([], [], color=color, label=f"qubit {j} flips")
    ax_tr.set_xlabel("transition frequency (linear MHz)")
    ax_tr.set_yticks([])
    ax_tr.legend(fontsize=8)
    return [_save(fig, Path(f"{prefix}_levels.png"))]
