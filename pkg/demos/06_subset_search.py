"""Finding a collision by walking over subsets.

The walker's position is a q-element subset of the domain together with
a pointer; it already knows the function values inside its subset, so
one query per move suffices.  A phase flip marks subsets containing two
equal values, and the two-timescale schedule amplifies them.
"""

import numpy as np

from walklab import subset

rng = np.random.default_rng(20260825)
n, q, k = 10, 5, 2
values = rng.integers(6, size=n)
print(f"domain of {n} points, values {values.tolist()}")

collide = lambda pairs: len({v for _, v in pairs}) == 1
res = subset.subset_walk_run(n, q, k, lambda x: int(values[x]), collide)

print(f"\nsubset walk with q = {q}, looking for {k} equal values")
print(f"  schedule tau1 = {res.tau1}, tau2 = {res.tau2}"
      f"  ->  success {res.success:.4f} with {res.queries} queries")
print(f"  best nearby schedule ({res.best_tau1}, {res.best_tau2})"
      f"  ->  success {res.best_success:.4f}")
print(f"  brute force would query all {n} values")

print("\nquery exponents at the optimal subset size q = N^mu:")
print(f"{'variant':<18} {'k':>2} {'exponent':>9}")
for variant, ks in (("subset", (1, 2, 3)),
                    ("clique", (3, 4)),
                    ("recursive_clique", (3, 4, 5))):
    for kk in ks:
        print(f"{variant:<18} {kk:2d} "
              f"{subset.optimal_exponent(kk, variant):9.4f}")

c = subset.cost_model(2, 2.0 / 3.0, "subset")
print(f"\ncollision search at mu = 2/3: exponent {c.exponent:.4f}, "
      f"about {c.cost:.0f} queries at N = 10^6")
