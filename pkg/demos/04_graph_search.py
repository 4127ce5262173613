"""Four ways to find a needle with a walk.

Grover's iteration over a flat list, its fixed-point variant whose
failure probability cubes at every recursion level, the edge walk that
searches a complete graph, and the star-graph walk that locates one
extra edge hidden among the spikes.
"""

import math

from walklab import grover, scattering


def main():
    n = 1024
    res = grover.grover_run(n, [17])
    print(f"Grover, N = {n}: success {res.success:.6f} "
          f"after {res.queries} queries "
          f"(pi/4 sqrt(N) = {math.pi / 4 * math.sqrt(n):.1f})")

    print("\nfixed-point recursion, N = 8, one marked item:")
    for level in range(4):
        fp = grover.fixed_point_run(level, 8, [0])
        print(f"  level {level}: failure {fp.failure:.3e}  "
              f"queries {fp.queries}")

    n = 100
    sqw = scattering.complete_graph_search(n, 1)
    print(f"\nedge walk on the complete graph, N = {n}: "
          f"success {sqw.success:.4f} at {sqw.steps} steps "
          f"(best nearby: {sqw.best_success:.4f} at {sqw.best_steps})")

    star = scattering.star_graph_search(400, 0.0)
    print(f"\nstar graph with a hidden edge, N = 400 spikes:")
    print(f"  triangle probability {star.triangle_probability:.4f} "
          f"at {star.opt_steps} steps")
    c = star.trajectory[-1]
    print(f"  the three triangle edges carry "
          f"{c[0]**2:.4f} / {c[1]**2:.4f} / {c[4]**2:.4f} each")


if __name__ == "__main__":
    main()
