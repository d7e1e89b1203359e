"""Shared fixtures and independent oracle helpers for the test suite."""

from __future__ import annotations

import math

import numpy as np
import pytest

from ccnsim import ChainParams

#: Reference parameter set used throughout (second-neighbour coupling 0.1).
REF_KWARGS = dict(omega=(100.0, 200.0, 400.0), j=5.0, j_prime=0.1, rabi=0.1)

#: Hand-derived diagonal energies for the reference set, states 0..7.
REF_ENERGIES = (-355.05, -249.95, -145.05, -49.95, 50.05, 154.95, 250.05, 344.95)

#: Probabilities of the reference superposition state, states 0..7.
SUPERPOSITION_PROBS = (4 / 72, 14 / 72, 1 / 72, 17 / 72, 9 / 128, 23 / 128, 1 / 32, 7 / 32)


@pytest.fixture
def ref_params() -> ChainParams:
    return ChainParams(**REF_KWARGS)


@pytest.fixture
def cheap_params() -> ChainParams:
    """Small-frequency system whose pi-pulse integrates in milliseconds."""
    return ChainParams(omega=(1.0, 2.0, 4.0), j=0.05, j_prime=0.005, rabi=0.25)


# ---------------------------------------------------------------------------
# dense-operator oracle for the spin expectations
# ---------------------------------------------------------------------------

def excitation_raising_operator(qubit: int) -> np.ndarray:
    """8x8 ladder operator taking bit ``qubit`` from 0 to 1."""
    op = np.zeros((8, 8), dtype=complex)
    mask = 1 << qubit
    for k in range(8):
        if not k & mask:
            op[k | mask, k] = 1.0
    return op


def dense_spin_operators(qubit: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(Ix, Iy, Iz) 8x8 matrices for one qubit.

    Built from the excitation ladder, Ix = (L + L^dag)/2 and
    Iy = (L - L^dag)/(2i); Iz counts +1/2 on bit-0 (ground) states,
    matching the sign conventions of the observables module.
    """
    raise_op = excitation_raising_operator(qubit)
    lower_op = raise_op.conj().T
    ix = 0.5 * (raise_op + lower_op)
    iy = (raise_op - lower_op) / 2j
    mask = 1 << qubit
    iz = np.diag([0.5 if not k & mask else -0.5 for k in range(8)]).astype(complex)
    return ix, iy, iz


def dense_expectation(op: np.ndarray, amplitudes: np.ndarray) -> float:
    value = np.vdot(amplitudes, op @ amplitudes)
    return float(value.real)


# ---------------------------------------------------------------------------
# pure-python RK4 mirroring the compiled stepper's time grid
# ---------------------------------------------------------------------------

def rk4_reference(rhs, y0: np.ndarray, duration: float, dt: float) -> np.ndarray:
    """Fixed-step RK4 with the same stage times and shortened last step."""
    y = np.array(y0, dtype=complex)
    n_steps = max(1, math.ceil(duration / dt))
    for i in range(n_steps):
        t0 = i * dt
        h = dt if i < n_steps - 1 else duration - t0
        k1 = rhs(t0, y)
        k2 = rhs(t0 + 0.5 * h, y + 0.5 * h * k1)
        k3 = rhs(t0 + 0.5 * h, y + 0.5 * h * k2)
        k4 = rhs(t0 + h, y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    return y


# ---------------------------------------------------------------------------
# closed-form two-level oracle for the reference sweep
# ---------------------------------------------------------------------------

def analytic_sweep_fidelity(j_prime: float) -> complex:
    """Gate fidelity of the reference superposition sweep, analytically.

    Treats each single-flip pair as an isolated two-level system under
    the pi-pulse: the 110/111 pair is exactly resonant and swaps with
    phase i (matching the ideal gate, contribution p6+p7), the
    spectator amplitudes are frozen (contribution p0+p1+p4+p5), and the
    010/011 pair sees detuning 2*j_prime, for which the detuned-Rabi
    propagator is written out in closed form.  Neglects the far-detuned
    pairs and inter-pair leakage, which are a few 1e-3 in fidelity.
    """
    rabi = 0.1
    tau = 5.0
    a = np.sqrt(np.array(SUPERPOSITION_PROBS))
    delta = 2.0 * j_prime
    omega_gen = math.hypot(rabi, delta)
    half_angle = math.pi * omega_gen * tau  # (2*pi*omega_gen) * tau / 2
    c, s = math.cos(half_angle), math.sin(half_angle)
    nz, nx = delta / omega_gen, rabi / omega_gen
    half_det = math.pi * delta * tau
    pair_sum = a[2] ** 2 + a[3] ** 2
    pair_diff = a[2] ** 2 - a[3] ** 2
    re23 = pair_sum * (c * math.cos(half_det) + s * nz * math.sin(half_det))
    im23 = pair_diff * (s * nz * math.cos(half_det) - c * math.sin(half_det))
    im23 += 2 * a[2] * a[3] * s * nx * math.cos(half_det)
    spectators = a[0] ** 2 + a[1] ** 2 + a[4] ** 2 + a[5] ** 2
    swapped = a[6] ** 2 + a[7] ** 2
    return spectators + swapped + complex(re23, im23)
