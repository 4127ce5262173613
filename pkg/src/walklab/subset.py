"""Quantum walk for finding k-element subsets with a wanted property.

The walker moves on a bipartite graph whose left vertices are the
q-element subsets of the ground set and whose right vertices are the
(q+1)-element ones; a pointer register selects which element to add or
remove.  Grover coins mix the pointer, a translation swaps sides at one
oracle query each, and a phase flip marks q-sets already containing a
good k-subset.  Walking on subsets instead of elements is what buys the
N^{k/(k+1)} query scaling.

The data register holding the oracle values of the current set is kept
implicit: the set determines it uniquely, so the amplitudes are
identical and only the query count has to pretend it exists.
"""

import itertools
import math
from collections import namedtuple

import numpy as np

__all__ = [
    "SubsetWalk",
    "build_walk",
    "SubsetWalkResult",
    "subset_walk_run",
    "CostEstimate",
    "cost_model",
    "optimal_exponent",
]


def _round_half_up(x):
    return int(math.floor(x + 0.5))


class SubsetWalk:
    """Dense simulation machinery for one problem instance."""

    def __init__(self, n, q, f, prop, k):
        if n > 14:
            raise ValueError("state space too large for dense simulation")
        if not 1 <= q < n:
            raise ValueError("need 1 <= q < n")
        if not 1 <= k <= q:
            raise ValueError("property size k must satisfy 1 <= k <= q")
        self.n, self.q, self.k = n, q, k
        self.left_sets = list(itertools.combinations(range(n), q))
        self.right_sets = list(itertools.combinations(range(n), q + 1))
        right_index = {t: i for i, t in enumerate(self.right_sets)}
        self.left_pointers = [tuple(sorted(set(range(n)) - set(s)))
                              for s in self.left_sets]
        self.left_dim = len(self.left_sets) * (n - q)
        self.right_dim = len(self.right_sets) * (q + 1)
        self.dim = self.left_dim + self.right_dim

        perm = np.empty(self.dim, dtype=np.intp)
        for si, s in enumerate(self.left_sets):
            for jpos, j in enumerate(self.left_pointers[si]):
                t = tuple(sorted(s + (j,)))
                ti = right_index[t]
                left_flat = si * (n - q) + jpos
                right_flat = self.left_dim + ti * (q + 1) + t.index(j)
                perm[left_flat] = right_flat
                perm[right_flat] = left_flat
        self._perm = perm

        self.values = {x: f(x) for x in range(n)}
        self.good_sets = np.array(
            [any(prop(tuple((x, self.values[x]) for x in sub))
                 for sub in itertools.combinations(s, k))
             for s in self.left_sets])
        self.queries = 0

    def initial_state(self):
        state = np.zeros(self.dim)
        state[: self.left_dim] = 1.0 / math.sqrt(self.left_dim)
        self.queries += self.q
        return state

    def coin(self, state):
        n, q = self.n, self.q
        out = state.copy()
        left = out[: self.left_dim].reshape(-1, n - q)
        left[:] = 2.0 / (n - q) * left.sum(axis=1, keepdims=True) - left
        right = out[self.left_dim :].reshape(-1, q + 1)
        right[:] = 2.0 / (q + 1) * right.sum(axis=1, keepdims=True) - right
        return out

    def shift(self, state):
        self.queries += 1
        return state[self._perm]

    def phase(self, state):
        out = state.copy()
        flips = np.repeat(self.good_sets, self.n - self.q)
        out[: self.left_dim][flips] *= -1
        return out

    def success(self, state):
        mass = np.abs(state[: self.left_dim].reshape(-1, self.n - self.q)) ** 2
        return float(mass.sum(axis=1)[self.good_sets].sum())

    def right_mass(self, state):
        return float(np.sum(np.abs(state[self.left_dim :]) ** 2))

    def run(self, tau1, tau2):
        state = self.initial_state()
        for _ in range(tau2):
            state = self.phase(state)
            for _ in range(2 * tau1):
                state = self.shift(self.coin(state))
        return state


def build_walk(n, q, f, prop, k):
    return SubsetWalk(n, q, f, prop, k)


SubsetWalkResult = namedtuple(
    "SubsetWalkResult",
    "success queries tau1 tau2 best_tau1 best_tau2 best_success")


def subset_walk_run(n, q, k, f, prop, schedule="auto"):
    """Run the subset walk and report success against the ground truth.

    Success is the probability that the measured q-set contains a
    k-subset with the property; if no such subset exists anywhere it is
    exactly zero.  With schedule="auto" the asymptotic round-offs
    tau1 = [pi/2 sqrt(q/k)], tau2 = [pi/4 (N/q)^{k/2}] are used and the
    best schedule in a +-2 window is reported alongside, since the
    formulas assume N, q much larger than k.
    """
    if schedule == "auto":
        tau1 = max(1, _round_half_up(math.pi / 2.0 * math.sqrt(q / k)))
        tau2 = max(1, _round_half_up(math.pi / 4.0 * (n / q) ** (k / 2.0)))
    else:
        tau1, tau2 = (int(t) for t in schedule)
        if tau1 < 0 or tau2 < 0:
            raise ValueError("schedule entries must be nonnegative")
    walk = SubsetWalk(n, q, f, prop, k)
    state = walk.run(tau1, tau2)
    success = walk.success(state)
    queries = walk.queries

    best = (tau1, tau2, success)
    if schedule == "auto":
        for t1 in range(max(1, tau1 - 2), tau1 + 3):
            for t2 in range(max(1, tau2 - 2), tau2 + 3):
                if (t1, t2) == (tau1, tau2):
                    continue
                probe = SubsetWalk(n, q, f, prop, k)
                p = probe.success(probe.run(t1, t2))
                if p > best[2] + 1e-12:
                    best = (t1, t2, p)
    return SubsetWalkResult(success, queries, tau1, tau2,
                            best[0], best[1], best[2])


CostEstimate = namedtuple("CostEstimate", "exponent cost")

_VARIANTS = ("subset", "clique", "recursive_clique")


def _term_exponents(k, mu, variant):
    if variant == "subset":
        return [mu, (1 - mu) * k / 2.0 + mu / 2.0]
    if variant == "clique":
        return [2 * mu, (1 - mu) * k / 2.0 + 1.5 * mu]
    if variant == "recursive_clique":
        t2 = (1 - mu) * (k - 1) / 2.0
        return [2 * mu, t2 + 1.5 * mu, t2 + 0.5 + mu * (k - 1) / k]
    raise ValueError(f"unknown variant {variant!r}")


def cost_model(k, mu, variant, n=10 ** 6):
    """Query-count model of the three walk variants with q = N^mu.

    Returns the governing exponent (the largest term exponent) and the
    numeric cost at the given N with unit constants.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= mu <= 1:
        raise ValueError("mu must lie in [0, 1]")
    exps = _term_exponents(k, mu, variant)
    q = n ** mu
    tau1 = math.sqrt(q / k)
    if variant == "subset":
        tau2 = (n / q) ** (k / 2.0)
        cost = q + 2 * tau1 * tau2
    elif variant == "clique":
        tau2 = (n / q) ** (k / 2.0)
        cost = q * q + 2 * q * tau1 * tau2
    else:
        # clique variants pay q^2 queries up front to learn the edges
        # inside the starting subset
        tau2 = (n / q) ** ((k - 1) / 2.0)
        cost = q * q + tau2 * (2 * q * tau1 + math.sqrt(n) * q ** ((k - 1) / k))
    return CostEstimate(max(exps), cost)


def optimal_exponent(k, variant):
    """Exponent at the balanced choice of mu, in closed form.

    For the plain clique variant with k = 2 this is beaten by mu = 0,
    where the walk degenerates to Grover search over all edges at
    exponent 1; for every other listed case it is the true minimum.
    """
    if variant == "subset":
        return 0.5 if k == 1 else k / (k + 1)
    if variant == "clique":
        return 2 * k / (k + 1)
    if variant == "recursive_clique":
        if k < 3:
            raise ValueError("recursive variant needs k >= 3")
        return (5 * k - 2) / (2 * k + 4) if k == 3 else 2 * (k - 1) / k
    raise ValueError(f"unknown variant {variant!r}")
