"""Unstructured search on a flat register.

Three layers: the plain Grover iteration with exact oracle accounting,
the phase-pi/3 fixed-point composition that trades the quadratic speedup
for monotone convergence, and a spectral analysis of search operators
V * R_target for an arbitrary real unitary V, which locates the slow
rotation plane the algorithm actually lives in.
"""

import cmath
import math
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np

from walklab import linalg as _linalg

__all__ = [
    "Oracle",
    "diffusion",
    "GroverResult",
    "grover_run",
    "TwoDimTrajectory",
    "grover_trajectory",
    "FixedPointResult",
    "fixed_point_run",
    "AbstractSearchResult",
    "abstract_search_analyze",
]


class Oracle:
    """Conditional phase oracle for a marked subset, with a query ledger.

    ``reflect`` flips the sign of marked amplitudes; ``phase`` applies a
    selective phase instead.  Every application, including inverses, adds
    one query to the ledger.
    """

    def __init__(self, n, marked):
        marked = frozenset(int(j) for j in marked)
        if not marked:
            raise ValueError("marked set is empty; nothing to search for")
        if len(marked) >= n:
            raise ValueError("marked set covers everything; nothing to find")
        if any(not 0 <= j < n for j in marked):
            raise ValueError("marked element out of range")
        self.n = n
        self.marked = marked
        self.queries = 0
        self._mask = np.zeros(n, dtype=bool)
        self._mask[sorted(marked)] = True

    def reflect(self, state):
        self.queries += 1
        out = np.array(state, copy=True)
        out[self._mask] *= -1
        return out

    def phase(self, angle, state):
        self.queries += 1
        out = np.array(state, dtype=complex, copy=True)
        out[self._mask] *= cmath.exp(1j * angle)
        return out

    def success(self, state):
        return float(np.sum(np.abs(np.asarray(state)[self._mask]) ** 2))


def diffusion(n):
    """Inversion about the average as an explicit matrix."""
    return 2.0 / n * np.ones((n, n)) - np.eye(n)


def _diffuse(state):
    return 2.0 * state.mean() - state


def _uniform_phase(angle, state):
    # selective phase on the uniform superposition; no oracle involved
    return state + (cmath.exp(1j * angle) - 1.0) * state.mean() * np.ones_like(state)


def rotation_angle(n, k):
    """Angle by which one search step turns the state in the plane spanned
    by the marked and unmarked uniform superpositions."""
    return math.acos((n - 2.0 * k) / n)


GroverResult = namedtuple("GroverResult", "state success queries")


def _auto_steps(n, k):
    theta = rotation_angle(n, k)
    center = max(0, int(math.floor((math.pi / theta - 1.0) / 2.0 + 0.5)))
    best = None
    for m in range(max(0, center - 2), center + 3):
        p = math.sin((2 * m + 1) * theta / 2.0) ** 2
        if best is None or p > best[1] + 1e-15:
            best = (m, p)
    return best[0]


def grover_run(n, marked, steps="auto"):
    """Run the search iteration and report the exact query count.

    With steps="auto" the count comes from solving (2m+1) theta/2 = pi/2
    and scanning two steps to either side, which also covers the usual
    round((pi/4) sqrt(n/k)) estimate.
    """
    oracle = Oracle(n, marked)
    m = _auto_steps(n, len(oracle.marked)) if steps == "auto" else int(steps)
    state = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(m):
        state = _diffuse(oracle.reflect(state))
    return GroverResult(state, oracle.success(state), oracle.queries)


@dataclass(frozen=True)
class TwoDimTrajectory:
    """Components of the evolving state on the marked and unmarked uniform
    superpositions, one row per step."""

    theta: float
    components: np.ndarray = field(compare=False)
    leakage: float = 0.0


def grover_trajectory(n, marked, m):
    oracle = Oracle(n, marked)
    k = len(oracle.marked)
    t = np.zeros(n)
    t[oracle._mask] = 1.0 / math.sqrt(k)
    nv = np.zeros(n)
    nv[~oracle._mask] = 1.0 / math.sqrt(n - k)
    state = np.full(n, 1.0 / math.sqrt(n))
    comps = np.empty((m + 1, 2))
    leakage = 0.0
    for j in range(m + 1):
        comps[j] = (t @ state, nv @ state)
        leakage = max(leakage, float(np.linalg.norm(
            state - comps[j, 0] * t - comps[j, 1] * nv)))
        if j < m:
            state = _diffuse(oracle.reflect(state))
    return TwoDimTrajectory(rotation_angle(n, k), comps, leakage)


FixedPointResult = namedtuple("FixedPointResult", "failure queries")


def fixed_point_run(levels, n, marked, base="identity"):
    """Recursively composed phase-pi/3 search.

    Each level wraps the previous algorithm A as
    A' = A . Rs(pi/3) . inverse(A) . Rmarked(pi/3) . A, driving the
    failure probability f to f^3 while tripling the query cost plus one.
    The base algorithm is either the identity or one plain Grover
    iteration written as Rs(pi) after Rmarked(pi).
    """
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    oracle = Oracle(n, marked)
    third = math.pi / 3.0

    if base == "identity":
        def fwd(st):
            return st

        def inv(st):
            return st
    elif base == "grover-iterate":
        def fwd(st):
            return _uniform_phase(math.pi, oracle.phase(math.pi, st))

        def inv(st):
            return oracle.phase(-math.pi, _uniform_phase(-math.pi, st))
    else:
        raise ValueError(f"unknown base algorithm {base!r}")

    for _ in range(levels):
        prev_f, prev_i = fwd, inv

        def fwd(st, f=prev_f, i=prev_i):
            return f(_uniform_phase(third, i(oracle.phase(third, f(st)))))

        def inv(st, f=prev_f, i=prev_i):
            return i(oracle.phase(-third, f(_uniform_phase(-third, i(st)))))

    out = fwd(np.full(n, 1.0 / math.sqrt(n), dtype=complex))
    return FixedPointResult(1.0 - oracle.success(out), oracle.queries)


@dataclass(frozen=True)
class AbstractSearchResult:
    """Spectral picture of a search operator V * R_target.

    ``pair_phases`` and ``pair_coefficients`` describe the expansion of
    the target state over the conjugate eigenvector pairs of V, with
    phases chosen so each coefficient is real and nonnegative;
    ``minus_one_weight`` collects the -1 eigenspace.  ``alpha`` is the
    smallest positive eigenphase of V * R_target, and the two overlaps
    measure how well the initial state and the target sit inside the slow
    rotation plane spanned by ``alpha_minus`` and ``alpha_plus``.
    """

    psi_init: np.ndarray = field(compare=False)
    a: float = 0.0
    pair_phases: np.ndarray = field(default=None, compare=False)
    pair_coefficients: np.ndarray = field(default=None, compare=False)
    minus_one_weight: float = 0.0
    alpha: float = 0.0
    alpha_plus: np.ndarray = field(default=None, compare=False)
    alpha_minus: np.ndarray = field(default=None, compare=False)
    init_overlap: float = 0.0
    target_overlap: float = 0.0


def abstract_search_analyze(v, target, pairing_tol=1e-8):
    v = np.asarray(v)
    if np.iscomplexobj(v) and np.max(np.abs(v.imag)) > 0:
        raise ValueError("the driving operator must be real")
    v = v.astype(float)
    n = v.shape[0]
    if not 0 <= target < n:
        raise ValueError("target index out of range")
    values, vectors = _linalg.unitary_eigensystem(v)
    phases = np.angle(values)
    ones = np.flatnonzero(np.abs(phases) <= pairing_tol)
    if len(ones) != 1:
        raise ValueError("the +1 eigenspace must be one-dimensional")
    psi_init = vectors[:, ones[0]].real
    psi_init = psi_init / np.linalg.norm(psi_init)
    if psi_init[np.argmax(np.abs(psi_init))] < 0:
        psi_init = -psi_init
    a = float(psi_init[target])

    minus = np.flatnonzero(np.abs(np.abs(phases) - math.pi) <= pairing_tol)
    big_a = math.sqrt(float(np.sum(np.abs(vectors[target, minus]) ** 2)))

    pos = np.flatnonzero((phases > pairing_tol)
                         & (phases < math.pi - pairing_tol))
    pair_phases = np.sort(phases[pos])
    order = np.argsort(phases[pos])
    pair_coefficients = np.abs(vectors[target, pos][order])

    u = v @ (np.eye(n) - 2.0 * np.outer(np.eye(n)[target], np.eye(n)[target]))
    uvalues, uvectors = _linalg.unitary_eigensystem(u)
    uphases = np.angle(uvalues)
    positive = np.flatnonzero(uphases > 1e-12)
    if len(positive) == 0:
        raise ValueError("search operator has no rotating eigenplane")
    best = positive[np.argmin(uphases[positive])]
    alpha = float(uphases[best])
    valpha = uvectors[:, best].copy()
    anchor = valpha[target]
    if abs(anchor) < 1e-12:
        anchor = valpha[np.argmax(np.abs(valpha))]
    valpha *= cmath.exp(-1j * cmath.phase(anchor))
    vminus = valpha.conj()
    alpha_plus = (valpha + vminus) / math.sqrt(2.0)
    alpha_minus = (valpha - vminus) / math.sqrt(2.0)
    init_overlap = float(abs(np.vdot(psi_init, alpha_minus)))
    target_overlap = float(abs(alpha_plus[target]))
    return AbstractSearchResult(psi_init, a, pair_phases, pair_coefficients,
                                big_a, alpha, alpha_plus, alpha_minus,
                                init_overlap, target_overlap)
