"""Entangling power of the gate family as a function of theta.

Sweeps theta over [0, pi/4], evaluates the Makhlin invariants and the
entangling power of each gate, and marks the perfect-entangler window
[pi/8, pi/4].  Writes an SVG curve next to the printed table.
"""

import math
from pathlib import Path

import numpy as np

import spinholonomy as sh
from spinholonomy.reports import line_svg

out_dir = Path("demo_output")
out_dir.mkdir(exist_ok=True)

thetas = np.linspace(0.0, math.pi / 4, 101)
eps, classes = [], []
for theta in thetas:
    m = sh.gate_metrics(sh.analytic_entangler(float(theta)).matrix)
    eps.append(m.ep)
    classes.append(m.entangler_class)

print("theta/pi    ep        class")
for i in range(0, len(thetas), 10):
    print(f"{thetas[i] / math.pi:7.4f}  {eps[i]:.6f}  {classes[i]}")

first_perfect = next(
    t for t, c in zip(thetas, classes) if c in ("perfect", "special_perfect")
)
print(f"\nperfect entanglers from theta = {first_perfect / math.pi:.4f} pi "
      f"(expected 1/8 pi = {1 / 8:.4f} pi)")
print(f"ep at pi/8: {eps[len(eps) // 2]:.6f} (expected 1/6)")
print(f"ep at pi/4: {eps[-1]:.6f} (expected 2/9)")

svg_path = out_dir / "entangling_power.svg"
line_svg(svg_path, thetas, eps, xlabel="θ", ylabel="entangling power")
print(f"\nwrote {svg_path}")
