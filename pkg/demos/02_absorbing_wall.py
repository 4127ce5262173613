"""A walker released one site away from an absorbing wall.

A classical walker on the half line comes home with certainty.  The
Hadamard walker does not: the absorbed probability climbs toward 2/pi
and roughly a third of the amplitude escapes ballistically, forever.
"""

import math

from walklab import classical, coined

M = 4000

quantum = coined.absorbing_line_quantum(M)
final = quantum.cumulative[-1]
print(f"quantum absorption after {M} steps: {final:.6f}")
print(f"limit 2/pi                        : {2 / math.pi:.6f}")
print(f"gap                               : {abs(final - 2 / math.pi):.2e}")

print(f"\nclassical return probability (analytic): "
      f"{classical.absorbing_hit_prob_line(0.5):.6f}")

# where the absorbed mass arrived
for horizon in (10, 100, 1000, 4000):
    print(f"  absorbed by step {horizon:5d}: {quantum.cumulative[horizon]:.6f}")

biased = classical.absorbing_hit_prob_line(0.7)
print(f"\na classical walker pushed away (p_away = 0.7) returns with "
      f"probability {biased:.4f}")
