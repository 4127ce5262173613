"""Watching a quantum walk decohere into a classical one.

The walk runs as a density matrix; after each step a projective
measurement fires with probability 1 - p.  At p = 0 every step is
measured and the position histogram is exactly the binomial.  At p = 1
the walk is unitary.  In between the spread interpolates between
sqrt(m) and m.
"""

import math

import numpy as np

from walklab import classical, coined, distributions

M = 50

op = coined.line_operator(M)
rho0 = coined.DensityState.from_pure(coined.line_start(op))
x = coined.line_positions(op).astype(float)

bpos, bprob = classical.line_walk_binomial(M)
binom = np.zeros(op.n)
binom[op.n // 2 + bpos] = bprob

print(f"{M}-step Hadamard walk with measurement rate 1 - p")
print(f"{'p':>5} {'spread':>8} {'tvd from binomial':>18}")
for p in (0.0, 0.25, 0.5, 0.75, 0.9, 1.0):
    rho = coined.decohere_evolve(op, p, "both", rho0, M)
    dist = coined.position_distribution(rho)
    mean = dist @ x
    spread = math.sqrt(max(dist @ x**2 - mean**2, 0.0))
    print(f"{p:5.2f} {spread:8.3f} {distributions.tvd(dist, binom):18.3e}")

print(f"\nclassical spread sqrt(m) = {math.sqrt(M):.3f}; "
      "the p = 0 row reproduces it and the tvd column vanishes there")
