"""Compiled fixed-step RK4 cores for the two amplitude equations.

The rotating-frame and lab-frame right-hand sides are written out as
plain loops over the eight amplitudes and their three single-flip
partners so numba can compile them; the public wrappers in
:mod:`ccnsim.dynamics` own validation, allocation and bookkeeping.

Arguments shared by both integrators:

``eang``   angular diagonal energies (2*pi times the stored values),
``wang``   angular drive frequency,
``phase``  constant drive phase in radians,
``cw``     angular drive coupling, -pi*rabi (i.e. -(2*pi*rabi)/2).

The bit-raising drive element (m > k) carries ``exp(-i(wang*t+phase))``
and the bit-lowering one its conjugate, matching
:func:`ccnsim.model.coupling_element`.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _fill_rotating_phases(t, eang, wang, phase, u):
    """Fill u[m] = exp(-i*eang[m]*t); return z = exp(-i*(wang*t+phase))."""
    for m in range(8):
        a = eang[m] * t
        u[m] = complex(math.cos(a), -math.sin(a))
    b = wang * t + phase
    return complex(math.cos(b), -math.sin(b))


@njit(cache=True)
def _rotating_rhs(d, u, z, cw, g, out):
    # out_m = -i * cw * conj(u_m) * sum_k z^{+-1} * u_k * d_k over the
    # three single-flip partners k of m; conj(u_m)*u_k is the rotating
    # phase exp(i*(E_m-E_k)*t).
    for k in range(8):
        g[k] = u[k] * d[k]
    zc = z.conjugate()
    for m in range(8):
        acc = 0j
        for b in range(3):
            k = m ^ (1 << b)
            if m > k:
                acc = acc + z * g[k]
            else:
                acc = acc + zc * g[k]
        out[m] = -1j * (cw * (u[m].conjugate() * acc))


@njit(cache=True)
def _lab_rhs(c, eang, z, cw, out):
    # out_m = -i * (eang[m]*c_m + cw * sum_k z^{+-1} * c_k): the fast
    # diagonal term is kept, no frame transformation applied.
    zc = z.conjugate()
    for m in range(8):
        acc = 0j
        for b in range(3):
            k = m ^ (1 << b)
            if m > k:
                acc = acc + z * c[k]
            else:
                acc = acc + zc * c[k]
        out[m] = -1j * (eang[m] * c[m] + cw * acc)


@njit(cache=True)
def integrate_rotating(
    d0,
    duration,
    dt,
    n_steps,
    stride,
    eang,
    wang,
    phase,
    cw,
    times,
    amps,
    norm_err,
    abort_threshold,
):
    """Classical RK4 from t=0 to t=duration; the last step is shortened.

    Records every ``stride`` steps plus the final state into the
    preallocated ``times``/``amps``/``norm_err`` arrays.  Returns
    ``(samples_written, aborted)``; ``aborted`` is 1 when the norm error
    at a recorded sample exceeded ``abort_threshold``.
    """
    d = d0.copy()
    u = np.empty(8, np.complex128)
    g = np.empty(8, np.complex128)
    k1 = np.empty(8, np.complex128)
    k2 = np.empty(8, np.complex128)
    k3 = np.empty(8, np.complex128)
    k4 = np.empty(8, np.complex128)
    tmp = np.empty(8, np.complex128)

    times[0] = 0.0
    nrm = 0.0
    for m in range(8):
        amps[0, m] = d[m]
        nrm += d[m].real * d[m].real + d[m].imag * d[m].imag
    norm_err[0] = abs(nrm - 1.0)
    si = 0

    for i in range(n_steps):
        t0 = i * dt
        h = dt
        if i == n_steps - 1:
            h = duration - t0

        z = _fill_rotating_phases(t0, eang, wang, phase, u)
        _rotating_rhs(d, u, z, cw, g, k1)

        z = _fill_rotating_phases(t0 + 0.5 * h, eang, wang, phase, u)
        for m in range(8):
            tmp[m] = d[m] + 0.5 * h * k1[m]
        _rotating_rhs(tmp, u, z, cw, g, k2)
        for m in range(8):
            tmp[m] = d[m] + 0.5 * h * k2[m]
        _rotating_rhs(tmp, u, z, cw, g, k3)

        z = _fill_rotating_phases(t0 + h, eang, wang, phase, u)
        for m in range(8):
            tmp[m] = d[m] + h * k3[m]
        _rotating_rhs(tmp, u, z, cw, g, k4)

        s = h / 6.0
        for m in range(8):
            d[m] = d[m] + s * (k1[m] + 2.0 * (k2[m] + k3[m]) + k4[m])

        if ((i + 1) % stride == 0) or (i + 1 == n_steps):
            si += 1
            if i + 1 == n_steps:
                times[si] = duration
            else:
                times[si] = (i + 1) * dt
            nrm = 0.0
            for m in range(8):
                amps[si, m] = d[m]
                nrm += d[m].real * d[m].real + d[m].imag * d[m].imag
            norm_err[si] = abs(nrm - 1.0)
            if norm_err[si] > abort_threshold:
                return si + 1, 1

    return si + 1, 0


@njit(cache=True)
def integrate_lab(
    c0,
    duration,
    dt,
    n_steps,
    stride,
    eang,
    wang,
    phase,
    cw,
    times,
    amps,
    norm_err,
    abort_threshold,
):
    """Same RK4 scheme as :func:`integrate_rotating`, lab-frame equations."""
    c = c0.copy()
    k1 = np.empty(8, np.complex128)
    k2 = np.empty(8, np.complex128)
    k3 = np.empty(8, np.complex128)
    k4 = np.empty(8, np.complex128)
    tmp = np.empty(8, np.complex128)

    times[0] = 0.0
    nrm = 0.0
    for m in range(8):
        amps[0, m] = c[m]
        nrm += c[m].real * c[m].real + c[m].imag * c[m].imag
    norm_err[0] = abs(nrm - 1.0)
    si = 0

    for i in range(n_steps):
        t0 = i * dt
        h = dt
        if i == n_steps - 1:
            h = duration - t0

        a = wang * t0 + phase
        z = complex(math.cos(a), -math.sin(a))
        _lab_rhs(c, eang, z, cw, k1)

        th = t0 + 0.5 * h
        a = wang * th + phase
        z = complex(math.cos(a), -math.sin(a))
        for m in range(8):
            tmp[m] = c[m] + 0.5 * h * k1[m]
        _lab_rhs(tmp, eang, z, cw, k2)
        for m in range(8):
            tmp[m] = c[m] + 0.5 * h * k2[m]
        _lab_rhs(tmp, eang, z, cw, k3)

        te = t0 + h
        a = wang * te + phase
        z = complex(math.cos(a), -math.sin(a))
        for m in range(8):
            tmp[m] = c[m] + h * k3[m]
        _lab_rhs(tmp, eang, z, cw, k4)

        s = h / 6.0
        for m in range(8):
            c[m] = c[m] + s * (k1[m] + 2.0 * (k2[m] + k3[m]) + k4[m])

        if ((i + 1) % stride == 0) or (i + 1 == n_steps):
            si += 1
            if i + 1 == n_steps:
                times[si] = duration
            else:
                times[si] = (i + 1) * dt
            nrm = 0.0
            for m in range(8):
                amps[si, m] = c[m]
                nrm += c[m].real * c[m].real + c[m].imag * c[m].imag
            norm_err[si] = abs(nrm - 1.0)
            if norm_err[si] > abort_threshold:
                return si + 1, 1

    return si + 1, 0
