"""Bar-joint frameworks in normed spaces and their rigidity eigenvalues.

Coordinates are laid out vertex-major: column ``v*d + i`` of the rigidity
matrix (and row/column of the framework Laplacian) belongs to vertex ``v``
and coordinate ``i``.  For an edge ``(u, v)`` with ``u < v`` the support
functional is taken at ``p_u - p_v``; the row carries ``phi`` in ``u``'s
block and ``-phi`` in ``v``'s.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import linalg, norms
from .errors import (
    CoincidentEndpointsError,
    NonFiniteError,
    NonSmoothEdgeError,
    TooSmallError,
    UnsatisfiableError,
)
from .graphs import Graph
from .linalg import EPS


@dataclass(frozen=True)
class SearchBudget:
    """Effort limits for randomized searches.

    ``restarts`` independent starts of ``steps`` local moves each;
    ``candidates`` caps the nodes visited by decomposition enumeration.
    """

    restarts: int = 64
    steps: int = 200
    candidates: int = 10 ** 7


@dataclass(frozen=True, eq=False)
class Framework:
    """A graph with a placement that is valid in ``space``.

    Build with :func:`make_framework`, which checks both validity conditions
    and caches the edge support functionals.
    """

    graph: Graph
    space: norms.NormedSpace
    points: np.ndarray = field(repr=False)
    functionals: np.ndarray = field(repr=False)

    @property
    def n(self):
        return self.graph.n

    @property
    def d(self):
        return self.space.d


def as_placement(pts, n=None, d=None):
    P = np.array(pts, dtype=float)
    if P.ndim != 2:
        raise ValueError("placement must be an (n, d) array")
    if n is not None and P.shape[0] != n:
        raise ValueError(f"placement has {P.shape[0]} points for {n} vertices")
    if d is not None and P.shape[1] != d:
        raise ValueError(f"placement points have dimension {P.shape[1]}, expected {d}")
    if not np.all(np.isfinite(P)):
        raise NonFiniteError("placement has non-finite coordinates")
    return P


def edge_vectors(graph, P):
    if graph.m == 0:
        return np.zeros((0, P.shape[1]))
    E = np.array(graph.edges)
    return P[E[:, 0]] - P[E[:, 1]]


def make_framework(g, space, pts, margin=norms.SMOOTH_MARGIN):
    """Validate a placement and cache the edge support functionals.

    Raises
    ------
    CoincidentEndpointsError
        If an edge has ``p_u == p_v``.
    NonSmoothEdgeError
        If the norm is not smooth (within ``margin``) at an edge direction.
    """
    P = as_placement(pts, n=g.n, d=space.d)
    D = edge_vectors(g, P)
    if g.m:
        zero = ~np.any(D != 0, axis=1)
        if np.any(zero):
            raise CoincidentEndpointsError(g.edges[int(np.argmax(zero))])
        smooth = norms.smooth_mask(space, D, margin)
        if not np.all(smooth):
            raise NonSmoothEdgeError(g.edges[int(np.argmin(smooth))])
        Phi = norms.support_rows(space, D)
    else:
        Phi = np.zeros((0, space.d))
    P.setflags(write=False)
    Phi.setflags(write=False)
    return Framework(g, space, P, Phi)


def rigidity_matrix(F):
    """The ``|E| x dn`` rigidity matrix."""
    m, n, d = F.graph.m, F.n, F.d
    R = np.zeros((m, n, d))
    if m:
        E = np.array(F.graph.edges)
        rows = np.arange(m)
        R[rows, E[:, 0], :] = F.functionals
        R[rows, E[:, 1], :] = -F.functionals
    return R.reshape(m, n * d)


def framework_laplacian(F):
    """Framework Laplacian assembled block by block from ``phi.T @ phi``.

    Agrees with ``R.T @ R`` for the rigidity matrix ``R``.
    """
    n, d = F.n, F.d
    L = np.zeros((n * d, n * d))
    for (u, v), phi in zip(F.graph.edges, F.functionals):
        W = np.outer(phi, phi)
        su, sv = slice(u * d, (u + 1) * d), slice(v * d, (v + 1) * d)
        L[su, su] += W
        L[sv, sv] += W
        L[su, sv] -= W
        L[sv, su] -= W
    return L


def edge_weights(F):
    """Matrix weights ``phi.T phi`` per edge, for the matrix-weighted view."""
    return {e: np.outer(phi, phi) for e, phi in zip(F.graph.edges, F.functionals)}


def affine_span_dim(pts, eps=EPS):
    """Dimension of the affine hull of the placement points."""
    P = np.asarray(pts, dtype=float)
    if len(P) <= 1:
        return 0
    D = P[1:] - P[0]
    scale = max(1.0, float(np.max(np.abs(D)))) if D.size else 1.0
    s = np.linalg.svd(D, compute_uv=False)
    return int(np.sum(s > eps * scale))


def has_full_affine_span(pts, eps=EPS):
    P = np.asarray(pts)
    return affine_span_dim(P, eps) == P.shape[1]


def _trivial_generators(F):
    n, d = F.n, F.d
    gens = []
    for i in range(d):
        u = np.zeros((n, d))
        u[:, i] = 1.0
        gens.append(u.ravel())
    if F.space.is_euclidean:
        for i in range(d):
            for j in range(i + 1, d):
                A = np.zeros((d, d))
                A[i, j], A[j, i] = -1.0, 1.0
                gens.append((F.points @ A.T).ravel())
    return np.array(gens).T


def trivial_flex_basis(F, eps=EPS):
    """Orthonormal basis (as columns) of the trivial infinitesimal flexes.

    Translations for every norm, plus the infinitesimal rotations
    ``u_v = A p_v`` (``A`` skew) when the norm is Euclidean.
    """
    G = _trivial_generators(F)
    U, s, _ = np.linalg.svd(G, full_matrices=False)
    scale = max(1.0, float(s[0])) if len(s) else 1.0
    return U[:, s > eps * scale]


@dataclass(frozen=True)
class RigidityReport:
    rigidity_eigenvalue: float
    kernel_dim: int
    rank: int
    infinitesimally_rigid: bool
    full_affine_span: bool
    k: int
    spectrum: np.ndarray = field(repr=False)


def rigidity_report(F, eps=EPS, method="jacobi"):
    """Spectrum-based rigidity summary of a framework.

    ``rigidity_eigenvalue`` is the ``(k+1)``-th smallest eigenvalue of the
    framework Laplacian (zero when ``dn <= k``).  Rigidity is decided from
    the kernel dimension: it must equal ``k`` when the placement spans, and
    the rank of the trivial flexes otherwise.
    """
    k = norms.k_dimension(F.space)
    L = framework_laplacian(F)
    values = linalg.sym_eigenvalues(L, method=method).values
    kernel = linalg.kernel_dimension(values, eps)
    full = has_full_affine_span(F.points, eps)
    expected = k if full else trivial_flex_basis(F, eps).shape[1]
    lam = float(values[k]) if len(values) > k else 0.0
    return RigidityReport(
        rigidity_eigenvalue=max(lam, 0.0),
        kernel_dim=kernel,
        rank=len(values) - kernel,
        infinitesimally_rigid=kernel == expected,
        full_affine_span=full,
        k=k,
        spectrum=values,
    )


def rigidity_eigenvalue(F):
    """``lambda_{k+1}`` of the framework Laplacian (LAPACK, no report)."""
    k = norms.k_dimension(F.space)
    L = framework_laplacian(F)
    if L.shape[0] <= k:
        return 0.0
    return float(max(linalg.fast_eigenvalues(L)[k], 0.0))


def is_infinitesimally_rigid(F, eps=EPS):
    return rigidity_report(F, eps, method="lapack").infinitesimally_rigid


def delete_vertex(F, v):
    """Subframework induced on all vertices except ``v``."""
    if F.n < 2:
        raise TooSmallError("cannot delete a vertex from a one-vertex framework")
    keep = [w for w in range(F.n) if w != v]
    return make_framework(F.graph.delete_vertex(v), F.space, F.points[keep])


def delete_edge(F, e):
    g = F.graph.without_edges([e])
    return make_framework(g, F.space, F.points)


# ---------------------------------------------------------------------------
# placement search

class _Evaluator:
    """Rigidity eigenvalue of ``(g, P)`` without building Framework objects."""

    def __init__(self, g, space, eps=EPS):
        self.g, self.space, self.eps = g, space, eps
        self.n, self.d = g.n, space.d
        self.k = norms.k_dimension(space)
        self.E = np.array(g.edges, dtype=int).reshape(-1, 2)

    def __call__(self, P):
        """Eigenvalue, or ``None`` if ``P`` is invalid or lacks full affine span."""
        m, n, d = len(self.E), self.n, self.d
        if not has_full_affine_span(P, self.eps):
            return None
        R = np.zeros((m, n, d))
        if m:
            D = P[self.E[:, 0]] - P[self.E[:, 1]]
            if not np.all(norms.smooth_mask(self.space, D)):
                return None
            Phi = norms.support_rows(self.space, D)
            rows = np.arange(m)
            R[rows, self.E[:, 0], :] = Phi
            R[rows, self.E[:, 1], :] = -Phi
        R = R.reshape(m, n * d)
        values = linalg.fast_eigenvalues(R.T @ R)
        return float(max(values[self.k], 0.0))


def _random_valid(ev, rng, attempts):
    for _ in range(attempts):
        P = rng.random((ev.n, ev.d))
        val = ev(P)
        if val is not None:
            return P, val
    return None, None


def hill_climb(objective, P, value, rng, steps, scale=0.25, halvings=10):
    """Derivative-free coordinate hill climbing.

    Each step perturbs one random coordinate by ``+-step`` and keeps the move
    if the objective does not decrease (plateaus are walked).  The step is
    halved when both directions fail and reset after ``halvings`` halvings.
    ``objective`` returns ``None`` for invalid placements.
    """
    n, d = P.shape
    step, halved = scale, 0
    for _ in range(steps):
        v, i = int(rng.integers(n)), int(rng.integers(d))
        first = 1.0 if rng.random() < 0.5 else -1.0
        moved = False
        for sgn in (first, -first):
            Q = P.copy()
            Q[v, i] += sgn * step
            val = objective(Q)
            if val is not None and val >= value:
                P, value, moved = Q, val, True
                break
        if not moved:
            step *= 0.5
            halved += 1
            if halved >= halvings:
                step, halved = scale, 0
    return P, value


def _one_restart(args):
    g, space, steps, seed, r, eps = args
    rng = np.random.default_rng([seed, r])
    ev = _Evaluator(g, space, eps)
    P, val = _random_valid(ev, rng, attempts=10)
    if P is None:
        return r, None, None
    P, val = hill_climb(ev, P, val, rng, steps)
    return r, val, P


def estimate_alg_connectivity(g, space, budget=None, seed=0, workers=1, eps=EPS):
    """Lower bound on ``a(G, X)`` from randomized placement search.

    Each restart samples a placement uniformly from ``[0, 1]^{n x d}``
    (resampling placements that are invalid or degenerate), then hill-climbs
    the rigidity eigenvalue.  Restart ``r`` uses the generator seeded by
    ``(seed, r)`` and the best value wins, ties going to the lowest ``r``, so
    the result does not depend on ``workers``.

    Returns
    -------
    lower_bound : float
    witness : ndarray, shape (n, d)
    """
    budget = budget or SearchBudget()
    if g.n < space.d + 1:
        raise TooSmallError(f"need at least d+1 = {space.d + 1} vertices")
    jobs = [(g, space, budget.steps, seed, r, eps) for r in range(budget.restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_one_restart, jobs))
    else:
        results = [_one_restart(j) for j in jobs]
    best = None
    for r, val, P in sorted(results, key=lambda t: t[0]):
        if val is not None and (best is None or val > best[0]):
            best = (val, P)
    if best is None:
        raise UnsatisfiableError(
            f"no valid full-span placement found in {10 * budget.restarts} attempts"
        )
    return best
