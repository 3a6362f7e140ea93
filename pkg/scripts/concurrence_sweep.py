#!/usr/bin/env python3
"""Sweep the entangler angles and emit CSV: eta, omega, concurrence, law, error.

The final column checks the closed form sin(eta)*sin(omega/2).
Usage: python scripts/concurrence_sweep.py [eta_step_deg] [omega_step_deg]
"""

import math
import sys

from qubit_spheres.gates import Circuit, Gate, run


def main():
    eta_step = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    omega_step = int(sys.argv[2]) if len(sys.argv) > 2 else 20
    print("eta_deg,omega_deg,concurrence,sin_eta_sin_half_omega,abs_error")
    worst = 0.0
    for eta in range(0, 181, eta_step):
        for omega in range(0, 361, omega_step):
            circuit = Circuit(gates=(
                Gate(kind="rx", target="A", angle=math.radians(eta)),
                Gate(kind="cry", control="A", target="B", angle=math.radians(omega)),
            ))
            c = run(circuit)[-1].concurrence
            law = math.sin(math.radians(eta)) * math.sin(math.radians(omega) / 2)
            err = abs(c - law)
            worst = max(worst, err)
            print(f"{eta},{omega},{c:.12f},{law:.12f},{err:.3e}")
    print(f"# max |c - law| = {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
