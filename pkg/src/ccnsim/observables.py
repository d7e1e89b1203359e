"""Derived quantities: probabilities, spin expectations, gate fidelity.

Sign conventions.  A qubit in |0> (ground) counts +1/2 towards its
longitudinal expectation and |1> counts -1/2.  The transverse
components pair each amplitude with its single-flip partner on the
given qubit: with S_j = sum over k with bit j clear of
conj(amp[k + 2^j]) * amp[k], the x component is Re(S_j) and the y
component Im(S_j).  Transverse components are lab-frame quantities --
the diagonal phases do not cancel between partners -- so they are only
defined on :class:`LabState`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import LabState, RotatingState
from .model import N_SPINS, N_STATES, state_from_bits

State = RotatingState | LabState

#: Pair (upper, lower) index tables per qubit for the transverse sums.
_PAIRS = tuple(
    tuple((k | (1 << j), k) for k in range(N_STATES) if not k & (1 << j))
    for j in range(N_SPINS)
)


@dataclass(frozen=True, eq=False)
class SpinExpectations:
    """Longitudinal and transverse spin components of all three qubits."""

    iz: np.ndarray
    ix: np.ndarray
    iy: np.ndarray


@dataclass(frozen=True)
class GateFidelity:
    """Complex overlap of an expected state with a realised one."""

    value: complex

    @property
    def modulus(self) -> float:
        return abs(self.value)


def probabilities(state: State) -> np.ndarray:
    """Occupation probabilities |amplitude_k|^2; frame-independent."""
    return probabilities_of(state.amplitudes)


def probabilities_of(amplitudes: np.ndarray) -> np.ndarray:
    """Same as :func:`probabilities` on raw arrays of shape (..., 8)."""
    a = np.asarray(amplitudes)
    return (a.real**2 + a.imag**2)


def longitudinal_expectations(state: State) -> np.ndarray:
    """<I_j^z> for qubits 0, 1, 2; +1/2 weight on bit-j = 0 states."""
    return longitudinal_of(state.amplitudes)


def longitudinal_of(amplitudes: np.ndarray) -> np.ndarray:
    """Same as :func:`longitudinal_expectations` on arrays of shape (..., 8)."""
    p = probabilities_of(amplitudes)
    out = np.empty(p.shape[:-1] + (N_SPINS,))
    for j in range(N_SPINS):
        signs = np.array([1.0 if not k & (1 << j) else -1.0 for k in range(N_STATES)])
        out[..., j] = 0.5 * (p @ signs)
    return out


def transverse_expectations(state: LabState) -> tuple[np.ndarray, np.ndarray]:
    """(<I_j^x>, <I_j^y>) for qubits 0, 1, 2 of a lab-frame state."""
    if not isinstance(state, LabState):
        raise TypeError(
            "transverse components are lab-frame quantities; convert with to_lab first"
        )
    return transverse_of(state.amplitudes)


def transverse_of(amplitudes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Same as :func:`transverse_expectations` on arrays of shape (..., 8)."""
    a = np.asarray(amplitudes, dtype=np.complex128)
    ix = np.empty(a.shape[:-1] + (N_SPINS,))
    iy = np.empty(a.shape[:-1] + (N_SPINS,))
    for j in range(N_SPINS):
        s = np.zeros(a.shape[:-1], dtype=np.complex128)
        for upper, lower in _PAIRS[j]:
            s = s + np.conj(a[..., upper]) * a[..., lower]
        ix[..., j] = s.real
        iy[..., j] = s.imag
    return ix, iy


def spin_expectations(state: LabState) -> SpinExpectations:
    """All spin components of a lab-frame state in one container."""
    ix, iy = transverse_expectations(state)
    return SpinExpectations(longitudinal_expectations(state), ix, iy)


def fidelity(expected: State, actual: State) -> GateFidelity:
    """Complex overlap <expected|actual> of two same-frame states.

    Both states must be normalised within 1e-6.  The modulus is
    available as ``GateFidelity.modulus``; by Cauchy-Schwarz it cannot
    exceed 1 for normalised inputs.
    """
    if type(expected) is not type(actual):
        raise TypeError(
            f"fidelity requires same-frame states, got {type(expected).__name__} "
            f"and {type(actual).__name__}"
        )
    for name, s in (("expected", expected), ("actual", actual)):
        err = abs(float(np.sum(np.abs(s.amplitudes) ** 2)) - 1.0)
        if err > 1e-6:
            raise ValueError(f"{name} state is not normalised: |norm^2 - 1| = {err:.3e}")
    return GateFidelity(complex(np.vdot(expected.amplitudes, actual.amplitudes)))


def apply_ideal_ccn(state: State) -> State:
    """Reference gate action: swap amplitudes 6 and 7, each times i.

    Identity on basis states 0..5; the 110/111 pair is exchanged with a
    factor i on both sides, the phase a resonant pi-pulse imprints.
    Applying it twice therefore returns -1 on that pair.
    """
    amps = state.amplitudes.copy()
    amps[6], amps[7] = 1j * state.amplitudes[7], 1j * state.amplitudes[6]
    return type(state)(amps, state.t)


def classical_cn(a: int, b: int) -> tuple[int, int]:
    """Classical controlled-not: flip target b iff control a is 1."""
    _check_bits(a=a, b=b)
    return a, b ^ a


def classical_ccn(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Classical controlled-controlled-not: flip c iff both a and b are 1."""
    _check_bits(a=a, b=b, c=c)
    return a, b, c ^ (a & b)


def ideal_ccn_output_state(state: int) -> int:
    """Basis index the reference gate maps ``state`` to (phases dropped)."""
    i2, i1, i0 = (state >> 2) & 1, (state >> 1) & 1, state & 1
    a, b, c = classical_ccn(i2, i1, i0)
    return state_from_bits(a, b, c)


def _check_bits(**bits: int) -> None:
    for name, value in bits.items():
        if value not in (0, 1):
            raise ValueError(f"{name} must be 0 or 1, got {value}")
