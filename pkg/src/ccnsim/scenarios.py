"""Canonical experiments: the single-pulse CCN run and the j' sweep.

A CCN experiment drives the chain at the conditional resonance of qubit
0 (both controls set) for exactly one pi-pulse and compares the final
state against the ideal gate action.  The sweep repeats the experiment
over a list of second-neighbour couplings; both the drive frequency and
the pulse duration are rebuilt per point, since the resonance moves
with j'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .dynamics import (
    IntegratorConfig,
    PulseSpec,
    RotatingState,
    Trajectory,
    evolve,
    pi_pulse_duration,
)
from .model import ChainParams, ccn_resonance, state_from_bits
from .observables import (
    GateFidelity,
    apply_ideal_ccn,
    fidelity,
    longitudinal_of,
    probabilities_of,
    transverse_of,
)

#: Second-neighbour couplings of the reference sweep.
DEFAULT_SWEEP_JPRIMES = (0.0, 0.02, 0.04, 0.06, 0.08, 0.1)


def initial_digital(bits: tuple[int, int, int]) -> RotatingState:
    """Basis state |i2 i1 i0> as a t=0 rotating-frame state."""
    i2, i1, i0 = bits
    amps = np.zeros(8, dtype=np.complex128)
    amps[state_from_bits(i2, i1, i0)] = 1.0
    return RotatingState(amps, 0.0)


def initial_superposition() -> RotatingState:
    """The reference eight-component real superposition, exactly normalised.

    Its probabilities are the rationals (4, 14, 1, 17)/72, (9, 23)/128,
    (1, 7)/32, which sum to one exactly.
    """
    r8 = math.sqrt(8.0)
    amps = np.array(
        [
            2.0 / (3.0 * r8),
            math.sqrt(14.0) / (3.0 * r8),
            1.0 / (3.0 * r8),
            math.sqrt(17.0) / (3.0 * r8),
            3.0 / (4.0 * r8),
            math.sqrt(23.0) / (4.0 * r8),
            1.0 / (2.0 * r8),
            math.sqrt(7.0) / (2.0 * r8),
        ],
        dtype=np.complex128,
    )
    return RotatingState(amps, 0.0)


def ccn_pulse(params: ChainParams) -> PulseSpec:
    """Resonant zero-phase pi-pulse for the CCN transition of ``params``."""
    return PulseSpec(
        frequency=ccn_resonance(params),
        duration=pi_pulse_duration(params),
        phase=0.0,
    )


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    """One pulse with all per-sample observables and the final gate fidelity.

    ``probabilities``/``spin_z`` are rotating-frame per-sample arrays
    (frame-independent quantities); ``spin_x``/``spin_y`` are computed
    from the lab-frame amplitudes, where the fast diagonal phases
    survive between flip partners.
    """

    trajectory: Trajectory
    probabilities: np.ndarray  # (n_samples, 8)
    spin_z: np.ndarray  # (n_samples, 3)
    spin_x: np.ndarray  # (n_samples, 3)
    spin_y: np.ndarray  # (n_samples, 3)
    fidelity: GateFidelity
    norm_drift_max: float
    initial: RotatingState
    params: ChainParams
    pulse: PulseSpec

    @property
    def times(self) -> np.ndarray:
        return self.trajectory.times


@dataclass(frozen=True)
class SweepRecord:
    """Final-state summary of one sweep point."""

    j_prime: float
    j_ratio: float
    p2: float
    p3: float
    p6: float
    p7: float
    fidelity: complex
    fidelity_modulus: float


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Per-j' records (ascending j'), with the full experiments attached."""

    records: tuple[SweepRecord, ...]
    experiments: tuple[ExperimentResult, ...]
    initial: RotatingState


def run_ccn_experiment(
    params: ChainParams,
    initial: RotatingState,
    cfg: IntegratorConfig,
    pulse: PulseSpec | None = None,
) -> ExperimentResult:
    """Evolve ``initial`` through one CCN pulse and attach all observables.

    By default the pulse is the resonant pi-pulse of ``params``; pass
    ``pulse`` to override frequency, phase or duration.  The fidelity is
    the overlap of the ideal gate action on ``initial`` with the state
    at exactly t = duration.
    """
    if pulse is None:
        pulse = ccn_pulse(params)
    traj = evolve(initial, pulse, params, cfg)
    lab = traj.lab_amplitudes()
    ix, iy = transverse_of(lab)
    final = traj.final
    return ExperimentResult(
        trajectory=traj,
        probabilities=probabilities_of(traj.amplitudes),
        spin_z=longitudinal_of(traj.amplitudes),
        spin_x=ix,
        spin_y=iy,
        fidelity=fidelity(apply_ideal_ccn(initial), final),
        norm_drift_max=traj.norm_drift_max,
        initial=initial,
        params=params,
        pulse=pulse,
    )


def sweep_jprime(
    base_params: ChainParams,
    j_prime_values,
    initial: RotatingState,
    cfg: IntegratorConfig,
) -> SweepResult:
    """Run the CCN experiment for each j' value, ascending.

    Every point is an independent computation on
    ``replace(base_params, j_prime=value)`` with a freshly built
    resonant pulse, so any single record can be reproduced in isolation
    by :func:`run_ccn_experiment`.
    """
    values = [float(v) for v in j_prime_values]
    if not values:
        raise ValueError("j_prime_values must not be empty")
    for v in values:
        if v < 0:
            raise ValueError(f"j_prime values must be >= 0, got {v}")
    records = []
    experiments = []
    for v in sorted(values):
        params = replace(base_params, j_prime=v)
        result = run_ccn_experiment(params, initial, cfg)
        p_final = result.probabilities[-1]
        records.append(
            SweepRecord(
                j_prime=v,
                j_ratio=v / params.j,
                p2=float(p_final[2]),
                p3=float(p_final[3]),
                p6=float(p_final[6]),
                p7=float(p_final[7]),
                fidelity=result.fidelity.value,
                fidelity_modulus=result.fidelity.modulus,
            )
        )
        experiments.append(result)
    return SweepResult(tuple(records), tuple(experiments), initial)
