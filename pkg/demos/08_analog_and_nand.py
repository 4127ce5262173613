"""Hamiltonian search and game trees.

The analog version of Grover search rotates inside a two-dimensional
plane at frequency sqrt(M/N); waiting t = (pi/2) sqrt(N/M) delivers the
marked vertex with certainty.  The second half evaluates NAND game
trees by the zero-energy amplitude-ratio recursion, whose sign pattern
encodes which player wins.
"""

import math

import numpy as np

from walklab import ctqw

n = 64
t_star = math.pi / 2 * math.sqrt(n)
print(f"analog search, N = {n}: certain at T = (pi/2) sqrt(N) = {t_star:.2f}")
for frac in (0.25, 0.5, 0.75, 1.0):
    t = frac * t_star
    print(f"  t = {t:6.2f}: success {ctqw.analog_search(n, t):.4f}")

print("\nNAND trees (0 = losing position for the player to move)")
games = {
    "((1,1),(0,0)) nested": (((1, 1), (0, 0)), ((1, 1), (1, 1))),
    "all leaves 1": (((1, 1), (1, 1)), ((1, 1), (1, 1))),
    "single gate (0,1)": (0, 1),
}
for label, tree in games.items():
    res = ctqw.nand_eval(tree)
    side = "first" if res.bit else "second"
    print(f"  {label:24s} value {res.bit} "
          f"(root ratio {res.trace[-1]:9.2e}, {side} player wins)")

rng = np.random.default_rng(7)
depth = 8
costs = [ctqw.classical_nand_cost(ctqw.hard_nand_instance(depth, rng), rng, 2)
         for _ in range(200)]
mean = float(np.mean(costs))
leaves = 2 ** depth
print(f"\nrandomized classical evaluation on {leaves}-leaf hard trees:")
print(f"  mean queries {mean:.1f}, between N^0.70 = {leaves**0.70:.1f} "
      f"and N^0.80 = {leaves**0.80:.1f}")
print(f"  (the walk-based evaluator would need about sqrt(N) = "
      f"{math.sqrt(leaves):.0f})")
