#!/usr/bin/env python3
"""Regenerate the frozen reference values in tests/test_acceptance.py.

Runs the lab-frame integrator at one tenth of the default step for the
digital scenario (the expensive, independent route) and the default
rotating-frame integrator for the superposition scenario and the sweep,
then prints the PIN_* constants.  Takes a minute or two.
"""

import time

from ccnsim import (
    ChainParams,
    IntegratorConfig,
    ccn_pulse,
    from_lab,
    evolve_lab_oracle,
    initial_digital,
    initial_superposition,
    probabilities,
    run_ccn_experiment,
    sweep_jprime,
    to_lab,
)

REF = ChainParams(omega=(100.0, 200.0, 400.0), j=5.0, j_prime=0.1, rabi=0.1)


def main() -> None:
    start = time.monotonic()
    fine = IntegratorConfig(dt=1e-7, sample_stride=100000)
    lab_final = evolve_lab_oracle(
        to_lab(initial_digital((1, 1, 0)), REF), ccn_pulse(REF), REF, fine
    )
    d7 = complex(from_lab(lab_final, REF).amplitudes[7])
    print(f"PIN_D7 = {d7.real!r} + {d7.imag!r}j")

    cfg = IntegratorConfig()
    sup = run_ccn_experiment(REF, initial_superposition(), cfg)
    delta_iz0 = sup.spin_z[-1][0] - sup.spin_z[0][0]
    print(f"PIN_DELTA_IZ0 = {float(delta_iz0)!r}")

    sweep = sweep_jprime(REF, (0.0, 0.02, 0.04, 0.06, 0.08, 0.1), initial_superposition(), cfg)
    print("PIN_SWEEP_ABSF = (")
    for record in sweep.records:
        print(f"    {record.fidelity_modulus!r},")
    print(")")
    margin = sweep.records[1].fidelity_modulus - sweep.records[0].fidelity_modulus
    print(f"PIN_FIDELITY_MARGIN = {margin!r}")

    p_start = probabilities(initial_superposition())
    record = sweep.records[0]
    ratio = abs(record.p3 - p_start[3]) / abs(record.p7 - p_start[7])
    print(f"PIN_TRANSFER_RATIO = {float(ratio)!r}")
    print(f"# total {time.monotonic() - start:.0f} s")


if __name__ == "__main__":
    main()
