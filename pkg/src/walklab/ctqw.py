"""Continuous-time quantum walks.

A single Hermitian matrix drives everything here: Schrodinger evolution
under a graph Hamiltonian, its time-averaged and limiting distributions,
closed-form special cases (cycle wavefronts, hypercube traversal, the
analog version of Grover search), symmetry reductions of the glued-trees
graphs to weighted lines, and the NAND-tree ratio recursion.
"""

import math
from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np

from . import graphs as _graphs
from . import linalg as _linalg
from . import special as _special

__all__ = [
    "Hamiltonian",
    "graph_hamiltonian",
    "search_hamiltonian",
    "ctqw_run",
    "BesselCheck",
    "cycle_bessel_check",
    "ctqw_limiting",
    "TimeAverage",
    "time_averaged_distribution",
    "hypercube_antipode_prob",
    "WeightedLine",
    "GluedTreesReduction",
    "glued_trees_reduce",
    "analog_search",
    "NandResult",
    "nand_eval",
    "hard_nand_instance",
    "classical_nand_cost",
]

SYMMETRY_TOL = 1e-12
ENERGY_GROUP_TOL = 1e-8
NAND_SENTINEL = 1e12


@dataclass(frozen=True)
class Hamiltonian:
    """Real symmetric generator of a continuous walk, with basis labels."""

    matrix: np.ndarray
    labels: tuple = None

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("Hamiltonian must be square")
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
            raise ValueError("Hamiltonian must be symmetric")
        object.__setattr__(self, "matrix", m)
        labels = self.labels
        if labels is None:
            labels = tuple(range(m.shape[0]))
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def norm(self):
        return float(np.max(np.abs(np.linalg.eigvalsh(self.matrix))))


def graph_hamiltonian(g, kind="adjacency"):
    """Adjacency, laplacian, or negative-adjacency Hamiltonian of a graph."""
    if kind == "negative-adjacency":
        m = -_graphs.adjacency(g)
    elif kind in ("adjacency", "laplacian"):
        m = _graphs.matrix(g, kind)
    else:
        raise ValueError(f"unknown Hamiltonian kind {kind!r}")
    return Hamiltonian(m, tuple(g.labels) if g.labels else None)


def search_hamiltonian(g, gamma, marked):
    """-gamma A minus a unit energy well on each marked vertex.

    gamma is a free knob; on the complete graph the choice gamma = 1/N
    turns this into the analog Grover generator up to a global energy
    shift, which is what analog_search evaluates in closed form.
    """
    marked = sorted(set(marked))
    if not marked:
        raise ValueError("no marked vertices")
    if marked[0] < 0 or marked[-1] >= g.n:
        raise ValueError("marked vertex out of range")
    m = -gamma * _graphs.adjacency(g)
    for w in marked:
        m[w, w] -= 1.0
    return Hamiltonian(m)


def ctqw_run(h, t, psi0):
    """State exp(-i H t) psi0."""
    return _linalg.evolve_hermitian(h.matrix, t, psi0)


BesselCheck = namedtuple("BesselCheck", "exact approx difference")


def cycle_bessel_check(n, x, y, t):
    """Compare the exact cycle transition probability with |J_d(2t)|^2.

    The exact value comes from the plane-wave eigenbasis of the negative
    adjacency matrix; the comparison only makes sense while the
    wavefront, which travels at speed 2, cannot feel the wrap-around, so
    n >= 8t + |y - x| is required.
    """
    if not 0 <= x < n or not 0 <= y < n:
        raise ValueError("vertices out of range")
    d = y - x
    if n < 8 * t + abs(d):
        raise ValueError("wrap-around regime: cycle too short for this time")
    k = np.arange(n)
    p = 2.0 * math.pi * k / n
    amp = np.mean(np.exp(2j * t * np.cos(p) + 1j * p * d))
    exact = float(abs(amp) ** 2)
    approx = _special.bessel_j(abs(d), 2.0 * t) ** 2
    return BesselCheck(exact, approx, abs(exact - approx))


def _energy_groups(values, tol=ENERGY_GROUP_TOL):
    order = np.argsort(values)
    groups = [[order[0]]]
    for i in order[1:]:
        if values[i] - values[groups[-1][-1]] <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def ctqw_limiting(h, start):
    """Limiting time-averaged distribution from the given start vertex.

    Cross terms between distinct energies average to zero, so only
    amplitudes within each degenerate energy level survive:
    pi(y) = sum over levels |sum_k <y|phi_k><phi_k|start>|^2.
    """
    if not 0 <= start < h.dim:
        raise ValueError("start vertex out of range")
    values, vectors = _linalg.eig_hermitian(h.matrix)
    pi = np.zeros(h.dim)
    for group in _energy_groups(values):
        block = vectors[:, group]
        pi += np.abs(block @ block[start].conj()) ** 2
    return pi


TimeAverage = namedtuple("TimeAverage", "distribution quadrature_error")


def _simpson_average(probs, count):
    weights = np.ones(count + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    # Simpson integral divided by T: the h/3 prefactor and the 1/T
    # cancel into 1/(3*count)
    return (weights[:, None] * probs).sum(axis=0) / (3.0 * count)


def time_averaged_distribution(h, start, big_t):
    """Average of |<y|exp(-iHt)|start>|^2 over t in [0, T], by quadrature.

    Composite Simpson with step at most 0.05/|H|, refined once; the
    returned distribution is the Richardson combination of the two grids
    and the error field is their largest pointwise gap.
    """
    if big_t <= 0:
        raise ValueError("averaging time must be positive")
    if not 0 <= start < h.dim:
        raise ValueError("start vertex out of range")
    values, vectors = _linalg.eig_hermitian(h.matrix)
    norm = float(np.max(np.abs(values)))
    count = int(math.ceil(big_t / (0.05 / max(norm, 1e-12))))
    count += count % 2
    coeff = vectors.conj().T @ np.eye(h.dim)[start]

    def averaged(n_intervals):
        ts = np.linspace(0.0, big_t, n_intervals + 1)
        states = (np.exp(-1j * np.outer(ts, values)) * coeff) @ vectors.T
        return _simpson_average(np.abs(states) ** 2, n_intervals)

    coarse = averaged(count)
    fine = averaged(2 * count)
    richardson = (16.0 * fine - coarse) / 15.0
    return TimeAverage(richardson, float(np.max(np.abs(fine - coarse))))


def hypercube_antipode_prob(n, t):
    """Probability of the all-ones corner at time t from the all-zeros one.

    The negative hypercube adjacency splits into commuting single-qubit
    rotations, so each of the n bits flips with probability sin^2 t.
    """
    if n < 1:
        raise ValueError("need at least one dimension")
    return math.sin(t) ** (2 * n)


@dataclass(frozen=True)
class WeightedLine:
    """Path graph with positive hop weights, one per link."""

    nodes: int
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if self.nodes < 2:
            raise ValueError("need at least two nodes")
        if len(self.weights) != self.nodes - 1:
            raise ValueError("need exactly one weight per link")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    def hamiltonian(self):
        """Negative weighted adjacency, matching the full-graph convention."""
        m = np.zeros((self.nodes, self.nodes))
        for i, w in enumerate(self.weights):
            m[i, i + 1] = m[i + 1, i] = -w
        return Hamiltonian(m)


GluedTreesReduction = namedtuple(
    "GluedTreesReduction", "line graph columns equivalence_error")


def glued_trees_reduce(kind, n, seed=None):
    """Collapse a glued-trees graph onto its column-state line.

    kind "plain" glues the two depth-n trees at a shared leaf layer,
    giving 2n-1 columns with every hop weight sqrt(2); kind "cycle"
    joins separate leaf layers by an alternating cycle, giving 2n
    columns with a middle weight 2.  For n <= 6 the reduction is checked
    by evolving the entrance vertex on the full graph and comparing the
    column-state projections against the line evolution over a grid of
    times up to 4n; the largest deviation is reported.
    """
    if n < 2:
        raise ValueError("need trees of depth at least 2")
    if kind == "plain":
        graph = _graphs.glued_trees(n)
        weights = [math.sqrt(2.0)] * (2 * n - 2)
    elif kind == "cycle":
        graph = _graphs.glued_trees_cycle(n, 0 if seed is None else seed)
        weights = [math.sqrt(2.0)] * (n - 1) + [2.0] + [math.sqrt(2.0)] * (n - 1)
    else:
        raise ValueError(f"unknown glued-trees kind {kind!r}")
    columns = _graphs.tree_columns(kind, n)
    line = WeightedLine(len(columns), weights)

    error = None
    if n <= 6:
        basis = np.zeros((graph.n, len(columns)))
        for j, col in enumerate(columns):
            basis[col, j] = 1.0 / math.sqrt(len(col))
        full = -_graphs.adjacency(graph)
        start = np.zeros(graph.n)
        start[columns[0][0]] = 1.0
        times = np.linspace(0.0, 4.0 * n, 8 * n + 1)
        seen = _linalg.evolve_many(full, times, start) @ basis.conj()
        reduced = _linalg.evolve_many(
            line.hamiltonian().matrix, times, np.eye(len(columns))[0])
        error = float(np.max(np.abs(seen - reduced)))
    return GluedTreesReduction(line, graph, columns, error)


def analog_search(n, t, marked=1):
    """Success probability of the Hamiltonian Grover search at time t.

    The generator -|s><s| - |w><w| keeps the state in the plane spanned
    by the uniform state and the marked one, rotating at frequency
    delta = sqrt(M/N); unity is reached at t = pi/(2 delta).
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    if not 1 <= marked < n:
        raise ValueError("marked count must satisfy 1 <= M < N")
    delta = math.sqrt(marked / n)
    return math.sin(delta * t) ** 2 + delta ** 2 * math.cos(delta * t) ** 2


NandResult = namedtuple("NandResult", "bit oracle_bit trace")


def _check_nand_tree(tree):
    if isinstance(tree, tuple):
        if len(tree) != 2:
            raise ValueError("internal nodes need exactly two children")
        for child in tree:
            _check_nand_tree(child)
    elif tree not in (0, 1):
        raise ValueError("leaves must carry bit 0 or 1")


def _boolean_nand(tree):
    if not isinstance(tree, tuple):
        return tree
    return 1 - (_boolean_nand(tree[0]) & _boolean_nand(tree[1]))


def nand_eval(tree):
    """Evaluate a NAND tree by the zero-energy amplitude-ratio recursion.

    Walking an eigenvector at E = 0 down the tree, the ratio of a
    vertex's amplitude to its parent's obeys X = -1/(C1 + C2).  A bit-0
    leaf has no children and gets the large positive sentinel; a bit-1
    leaf carries one pendant vertex, one recursion step past the
    sentinel.  Large ratios then mean subtree value 0 and small ratios
    value 1, with any threshold between the two scales; 1 is used.  The
    boolean evaluation is returned alongside for comparison, with the
    ratio trace in leaf-to-root order.
    """
    _check_nand_tree(tree)
    trace = []

    def ratio(node):
        if not isinstance(node, tuple):
            x = NAND_SENTINEL if node == 0 else -1.0 / NAND_SENTINEL
        else:
            x = -1.0 / (ratio(node[0]) + ratio(node[1]))
        trace.append(x)
        return x

    root = ratio(tree)
    return NandResult(0 if abs(root) >= 1.0 else 1, _boolean_nand(tree), trace)


def hard_nand_instance(depth, rng, value=None):
    """Game tree drawn from the adversarial distribution.

    A value-1 node gets children 0 and 1 in random order, never two
    zeros, so evaluations short-circuit as rarely as possible; a value-0
    node is forced to children (1, 1).  On balanced trees these
    instances drive the randomized evaluator to its N^0.753 scaling.
    """
    if value is None:
        value = int(rng.integers(2))
    if depth == 0:
        return value
    if value == 0:
        kids = [1, 1]
    else:
        kids = [0, 1]
        if rng.integers(2):
            kids.reverse()
    return tuple(hard_nand_instance(depth - 1, rng, v) for v in kids)


def classical_nand_cost(tree, rng, trials):
    """Mean leaf queries of randomized recursive NAND evaluation.

    Each trial descends into a uniformly chosen child first and skips
    the sibling whenever the first branch returns 0.
    """
    _check_nand_tree(tree)

    def evaluate(node):
        if not isinstance(node, tuple):
            return node, 1
        first, second = (0, 1) if rng.integers(2) else (1, 0)
        b1, q1 = evaluate(node[first])
        if b1 == 0:
            return 1, q1
        b2, q2 = evaluate(node[second])
        return 1 - b2, q1 + q2

    total = 0
    for _ in range(trials):
        total += evaluate(tree)[1]
    return total / trials
