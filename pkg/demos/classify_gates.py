"""Classify well-known two-qubit gates through their local invariants.

Prints the Makhlin pair, the Weyl-chamber point and the entangling power
of a handful of named gates, then shows the same machinery applied to a
gate file in the CLI's matrix format.
"""

import math
import tempfile
from pathlib import Path

import numpy as np

import spinholonomy as sh

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
DCNOT = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]], dtype=complex)
ISWAP = np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex)

gates = {
    "identity": np.eye(4, dtype=complex),
    "CNOT": CNOT,
    "iSWAP": ISWAP,
    "SWAP": SWAP,
    "DCNOT": DCNOT,
    "chain gate (theta=pi/4)": sh.analytic_entangler(math.pi / 4).matrix,
    "chain gate (theta=pi/8)": sh.analytic_entangler(math.pi / 8).matrix,
}

print(f"{'gate':<24} {'G1':>16} {'G2':>7} {'weyl/pi':>22} {'ep':>7}  class")
for name, u in gates.items():
    m = sh.gate_metrics(u)
    weyl = "(" + ", ".join(f"{c / math.pi:.3f}" for c in m.weyl) + ")"
    g1 = f"{m.g1.real:+.3f}{m.g1.imag:+.3f}j"
    print(f"{name:<24} {g1:>16} {m.g2:>+7.3f} {weyl:>22} {m.ep:>7.4f}  {m.entangler_class}")

# The CLI reads 4x4 matrices as four rows of re+imj tokens:
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "dcnot.txt"
    path.write_text(
        "\n".join(" ".join(f"{v.real:g}{v.imag:+g}j" for v in row) for row in DCNOT)
    )
    from spinholonomy.cli import read_gate_matrix

    parsed = read_gate_matrix(str(path))
    print(f"\nre-parsed DCNOT from {path.name}: "
          f"max deviation {np.max(np.abs(parsed - DCNOT)):.1e}")
    print("class:", sh.gate_metrics(parsed).entangler_class)
