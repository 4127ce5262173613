"""Classical and quantum walks on the integer line, side by side.

The fair coin-flip walk spreads like sqrt(m) and its position histogram
is the binomial.  The Hadamard walk interferes with itself: probability
piles up near +-m/sqrt(2) and the spread grows linearly in m.
"""

import math

import numpy as np

from walklab import classical, coined, distributions

M = 100

positions, binom = classical.line_walk_binomial(M)
print(f"classical walk, m = {M}")
print(f"  variance / m       = {binom @ positions.astype(float) ** 2 / M:.6f}"
      "   (diffusive: stays at 1)")
print(f"  entropy            = {distributions.entropy(binom):.4f}")

op = coined.line_operator(M)
state = coined.walk_run(op, coined.line_start(op), M)
quantum = coined.position_distribution(state)
x = coined.line_positions(op).astype(float)

second_moment = quantum @ x ** 2
print(f"\nHadamard walk, m = {M}, walker released moving up")
print(f"  <x^2> / m^2        = {second_moment / M**2:.6f}"
      f"   (ballistic constant (sqrt(2)-1)/sqrt(2) = {(math.sqrt(2)-1)/math.sqrt(2):.6f})")
print(f"  entropy            = {distributions.entropy(quantum):.4f}")

peak = int(x[np.argmax(quantum)])
print(f"  most likely site   = {peak}  (near m/sqrt(2) = {M/math.sqrt(2):.1f})")

sym = coined.walk_run(op, coined.line_start(op, q=0.5, sigma=math.pi / 2), M)
p_sym = coined.position_distribution(sym)
mirror_gap = np.max(np.abs(p_sym - p_sym[::-1]))
print(f"\nbalanced start (up + i down)/sqrt(2): max |p(x) - p(-x)| = {mirror_gap:.2e}")
