"""Simulator for a single-pulse Toffoli (CCN) gate on three Ising-coupled spins.

The library integrates the driven amplitude equations of a chain of
three spin-1/2 nuclei with first- and second-neighbour Ising couplings,
computes spin observables and gate fidelity, and sweeps the fidelity
against the second-neighbour coupling.  The ``ccnsim`` command-line
tool writes the same quantities as CSV tables and optional figures.
"""

from .dynamics import (
    INITIAL_NORM_TOL,
    NORM_ABORT_THRESHOLD,
    IntegratorConfig,
    LabState,
    NormDriftError,
    PulseSpec,
    RotatingState,
    Trajectory,
    evolve,
    evolve_lab_oracle,
    from_lab,
    pi_pulse_duration,
    rotating_rhs,
    to_lab,
)
from .model import (
    ChainParams,
    EnergyLevel,
    SpectrumReport,
    TransitionLine,
    bit,
    ccn_resonance,
    coupling_element,
    detuning,
    energies,
    energy,
    spectrum_report,
    state_from_bits,
    state_label,
    transition_frequency,
)
from .observables import (
    GateFidelity,
    SpinExpectations,
    apply_ideal_ccn,
    classical_ccn,
    classical_cn,
    fidelity,
    ideal_ccn_output_state,
    longitudinal_expectations,
    probabilities,
    spin_expectations,
    transverse_expectations,
)
from .scenarios import (
    DEFAULT_SWEEP_JPRIMES,
    ExperimentResult,
    SweepRecord,
    SweepResult,
    ccn_pulse,
    initial_digital,
    initial_superposition,
    run_ccn_experiment,
    sweep_jprime,
)

__version__ = "0.1.0"

__all__ = [
    "ChainParams",
    "DEFAULT_SWEEP_JPRIMES",
    "EnergyLevel",
    "ExperimentResult",
    "GateFidelity",
    "INITIAL_NORM_TOL",
    "IntegratorConfig",
    "LabState",
    "NORM_ABORT_THRESHOLD",
    "NormDriftError",
    "PulseSpec",
    "RotatingState",
    "SpectrumReport",
    "SpinExpectations",
    "SweepRecord",
    "SweepResult",
    "Trajectory",
    "TransitionLine",
    "apply_ideal_ccn",
    "bit",
    "ccn_pulse",
    "ccn_resonance",
    "classical_ccn",
    "classical_cn",
    "coupling_element",
    "detuning",
    "energies",
    "energy",
    "evolve",
    "evolve_lab_oracle",
    "fidelity",
    "from_lab",
    "ideal_ccn_output_state",
    "initial_digital",
    "initial_superposition",
    "longitudinal_expectations",
    "pi_pulse_duration",
    "probabilities",
    "rotating_rhs",
    "run_ccn_experiment",
    "spectrum_report",
    "spin_expectations",
    "state_from_bits",
    "state_label",
    "sweep_jprime",
    "to_lab",
    "transition_frequency",
    "transverse_expectations",
    "__version__",
]
