"""Static spectral structure of the three-spin Ising chain.

Three spin-1/2 nuclei sit in a strong longitudinal field with distinct
Larmor frequencies, coupled by a first-neighbour Ising constant ``j``
and a weaker second-neighbour constant ``j_prime``, and driven by a
transverse rf field of Rabi frequency ``rabi``.

Unit convention used throughout the package: every stored frequency is
a *linear* value in MHz, standing for the angular frequency ``2*pi*f``
rad/us.  Energies are stored divided by hbar in the same units, so hbar
never appears explicitly.  Any phase argument therefore picks up a
factor ``2*pi`` when a stored frequency multiplies a time in us.

Basis states are the eight product states ``|i2 i1 i0>`` indexed by
their decimal value, qubit 0 being the least significant bit.  Qubit 0
is the gate target; qubits 1 and 2 are the controls.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

N_SPINS = 3
N_STATES = 8


@dataclass(frozen=True)
class ChainParams:
    """Physical frequencies of the chain (linear MHz, see module docs).

    Attributes
    ----------
    omega : tuple of 3 floats
        Larmor frequencies of qubits 0, 1, 2.  They must be pairwise
        distinct so each spin is individually addressable in frequency.
    j : float
        First-neighbour Ising coupling (pairs 0-1 and 1-2).
    j_prime : float
        Second-neighbour Ising coupling (pair 0-2).  May be zero.
    rabi : float
        Amplitude of the transverse drive.
    """

    omega: tuple[float, float, float]
    j: float
    j_prime: float
    rabi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega", tuple(float(w) for w in self.omega))
        object.__setattr__(self, "j", float(self.j))
        object.__setattr__(self, "j_prime", float(self.j_prime))
        object.__setattr__(self, "rabi", float(self.rabi))
        if len(self.omega) != N_SPINS:
            raise ValueError(f"expected {N_SPINS} Larmor frequencies, got {len(self.omega)}")
        for k, w in enumerate(self.omega):
            if not w > 0:
                raise ValueError(f"omega{k} must be positive, got {w}")
        if len(set(self.omega)) != N_SPINS:
            raise ValueError("omega0, omega1, omega2 must be pairwise distinct")
        if not self.j > 0:
            raise ValueError(f"j must be positive, got {self.j}")
        if self.j_prime < 0:
            raise ValueError(f"j_prime must be >= 0, got {self.j_prime}")
        if not self.rabi > 0:
            raise ValueError(f"rabi must be positive, got {self.rabi}")


def _check_state(state: int) -> None:
    if not 0 <= state < N_STATES:
        raise ValueError(f"basis-state index must be in 0..7, got {state}")


def bit(state: int, qubit: int) -> int:
    """Value of ``qubit`` (0 = least significant) in a basis-state index."""
    _check_state(state)
    if qubit not in (0, 1, 2):
        raise ValueError(f"qubit index must be 0, 1 or 2, got {qubit}")
    return (state >> qubit) & 1


def state_from_bits(i2: int, i1: int, i0: int) -> int:
    """Decimal index of ``|i2 i1 i0>``."""
    for name, b in (("i2", i2), ("i1", i1), ("i0", i0)):
        if b not in (0, 1):
            raise ValueError(f"{name} must be 0 or 1, got {b}")
    return (i2 << 2) | (i1 << 1) | i0


def state_label(state: int) -> str:
    """Bit-string label ``i2 i1 i0`` of a basis state, e.g. 6 -> '110'."""
    _check_state(state)
    return format(state, "03b")


def energy(state: int, params: ChainParams) -> float:
    """Diagonal energy (over hbar) of a basis state, in linear MHz.

    Each spin contributes -omega_k/2 when its bit is 0 (ground, aligned)
    and +omega_k/2 when its bit is 1; the Ising terms shift the level by
    -J/2 per aligned first-neighbour pair (+J/2 anti-aligned), and the
    same with J' for the 0-2 pair.
    """
    _check_state(state)
    s0 = 1 - 2 * (state & 1)
    s1 = 1 - 2 * ((state >> 1) & 1)
    s2 = 1 - 2 * ((state >> 2) & 1)
    w = s2 * params.omega[2] + s1 * params.omega[1] + s0 * params.omega[0]
    coupling = params.j * (s0 * s1 + s1 * s2) + params.j_prime * (s0 * s2)
    return -0.5 * (w + coupling)


def energies(params: ChainParams) -> np.ndarray:
    """All eight diagonal energies, indexed by basis state."""
    return np.array([energy(k, params) for k in range(N_STATES)])


def transition_frequency(m: int, k: int, params: ChainParams) -> float:
    """Level splitting ``energy(m) - energy(k)``; antisymmetric in (m, k)."""
    return energy(m, params) - energy(k, params)


def ccn_resonance(params: ChainParams) -> float:
    """Drive frequency that flips qubit 0 only when both controls are set.

    This is the 110 <-> 111 splitting, omega0 - j - j_prime: with both
    neighbours excited, each Ising bond lowers the qubit-0 transition by
    its coupling constant.
    """
    return params.omega[0] - params.j - params.j_prime


def detuning(p_state: int, m_state: int, pulse_freq: float, params: ChainParams) -> float:
    """Offset of the (p_state, m_state) splitting from the drive frequency."""
    return transition_frequency(p_state, m_state, params) - pulse_freq


def coupling_element(
    m: int,
    k: int,
    t: float,
    pulse_freq: float,
    params: ChainParams,
    phase: float = 0.0,
) -> complex:
    """Drive matrix element (over hbar) between basis states, linear units.

    Nonzero only when m and k differ in exactly one bit, with modulus
    rabi/2.  The bit-raising element (m > k) carries e^{-i(w t + phase)}
    and the bit-lowering one its conjugate: the drive phase must rotate
    against the level splitting so that the slow combination
    e^{i(w_mk - w) t} survives in the rotating frame and the nominal
    resonance (ccn_resonance) actually drives the 110 <-> 111 flip.
    """
    _check_state(m)
    _check_state(k)
    diff = m ^ k
    if diff not in (1, 2, 4):
        return 0j
    arg = TWO_PI * pulse_freq * t + phase
    amp = -0.5 * params.rabi
    if m > k:
        return amp * cmath.exp(-1j * arg)
    return amp * cmath.exp(1j * arg)


@dataclass(frozen=True)
class EnergyLevel:
    """One diagonal level: basis state and its energy."""

    state: int
    energy: float

    @property
    def label(self) -> str:
        return state_label(self.state)


@dataclass(frozen=True)
class TransitionLine:
    """One single-flip transition: upper/lower states, flipped qubit, splitting."""

    upper: int
    lower: int
    qubit: int
    frequency: float


@dataclass(frozen=True)
class SpectrumReport:
    """All eight levels (sorted by energy) and the twelve single-flip lines."""

    levels: tuple[EnergyLevel, ...]
    transitions: tuple[TransitionLine, ...]


def spectrum_report(params: ChainParams) -> SpectrumReport:
    """Level diagram data: energies plus every single-bit-flip splitting.

    Transitions are tagged with the flipped qubit and ordered by
    (qubit, frequency); levels are ordered by ascending energy.
    """
    levels = sorted(
        (EnergyLevel(k, energy(k, params)) for k in range(N_STATES)),
        key=lambda lvl: lvl.energy,
    )
    transitions = []
    for qubit in range(N_SPINS):
        mask = 1 << qubit
        for lower in range(N_STATES):
            if lower & mask:
                continue
            upper = lower | mask
            transitions.append(
                TransitionLine(upper, lower, qubit, transition_frequency(upper, lower, params))
            )
    transitions.sort(key=lambda tr: (tr.qubit, tr.frequency, tr.lower))
    return SpectrumReport(tuple(levels), tuple(transitions))
