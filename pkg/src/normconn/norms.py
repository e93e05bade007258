"""Norms on R^d: the l_p family and polyhedral norms given by facet functionals.

A polyhedral norm is ``||x|| = max_j |F_j . x|`` with one representative
``F_j`` per antipodal facet pair.  l_1 and l_inf are kept as l_p spaces but
also expose their facet functionals through :func:`facet_functionals`, so the
monochrome machinery treats them as polyhedral.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .errors import NonFiniteError, NotIsometryError, NotSmoothError, SingularError, ZeroVectorError
from .linalg import EPS

#: Relative margin below which a point is treated as a tie (non-smooth).
SMOOTH_MARGIN = 1e-9


class Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self):
        return "INF"


INF = Infinity.INF


@dataclass(frozen=True, eq=False)
class NormedSpace:
    """``R^d`` with an l_p norm (``kind="lp"``) or a polyhedral norm (``kind="poly"``)."""

    d: int
    kind: str
    p: object = None
    facets: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be at least 1")
        if self.kind == "lp":
            if self.p is not INF:
                p = float(self.p)
                if not 1.0 <= p < math.inf:
                    raise ValueError(f"p must lie in [1, inf), or be INF; got {self.p}")
                object.__setattr__(self, "p", p)
        elif self.kind == "poly":
            F = np.array(self.facets, dtype=float)
            if F.ndim != 2 or F.shape[0] < 1 or F.shape[1] != self.d:
                raise ValueError(f"facets must be an m x {self.d} array with m >= 1")
            if not np.all(np.isfinite(F)):
                raise NonFiniteError("facet functionals must be finite")
            if np.any(np.all(F == 0, axis=1)):
                raise ValueError("facet functionals must be nonzero")
            if np.linalg.matrix_rank(F) < self.d:
                raise ValueError("facet functionals do not span R^d; the norm would be degenerate")
            F.setflags(write=False)
            object.__setattr__(self, "facets", F)
        else:
            raise ValueError(f"unknown norm kind {self.kind!r}")

    def __eq__(self, other):
        if not isinstance(other, NormedSpace):
            return NotImplemented
        if (self.d, self.kind, self.p) != (other.d, other.kind, other.p):
            return False
        if self.kind == "poly":
            return np.array_equal(self.facets, other.facets)
        return True

    def __hash__(self):
        return hash((self.d, self.kind, self.p))

    @property
    def is_euclidean(self):
        return self.kind == "lp" and self.p == 2.0

    @property
    def is_linf(self):
        return self.kind == "lp" and self.p is INF

    def descriptor(self):
        if self.kind == "poly":
            return f"poly[{self.facets.shape[0]} facets]:{self.d}"
        if self.p is INF:
            return f"linf:{self.d}"
        return f"lp:{self.p:g}:{self.d}"

    def __str__(self):
        return self.descriptor()


def lp(p, d):
    if p is INF or (isinstance(p, str) and p.lower() == "inf"):
        return NormedSpace(d, "lp", INF)
    if isinstance(p, float) and math.isinf(p):
        raise ValueError("use INF (or the string 'inf') for p = infinity")
    return NormedSpace(d, "lp", p)


def linf(d):
    return NormedSpace(d, "lp", INF)


def l1(d):
    return NormedSpace(d, "lp", 1.0)


def l2(d):
    return NormedSpace(d, "lp", 2.0)


def polyhedral(facets):
    F = np.atleast_2d(np.asarray(facets, dtype=float))
    return NormedSpace(F.shape[1], "poly", facets=F)


def facet_functionals(space):
    """Facet functionals (one per antipodal pair) if the norm is polyhedral, else ``None``."""
    if space.kind == "poly":
        return space.facets
    if space.p is INF:
        return np.eye(space.d)
    if space.p == 1.0:
        signs = [(1.0,) + s for s in itertools.product((1.0, -1.0), repeat=space.d - 1)]
        return np.array(signs)
    return None


def _as_vector(space, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (space.d,):
        raise ValueError(f"expected a vector of length {space.d}, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise NonFiniteError("vector has non-finite entries")
    return x


def norms(space, X):
    """Row-wise norms of an ``(k, d)`` array."""
    X = np.asarray(X, dtype=float)
    if space.kind == "poly":
        return np.max(np.abs(X @ space.facets.T), axis=-1)
    if space.p is INF:
        return np.max(np.abs(X), axis=-1)
    if space.p == 1.0:
        return np.sum(np.abs(X), axis=-1)
    if space.p == 2.0:
        return np.sqrt(np.sum(X * X, axis=-1))
    return np.sum(np.abs(X) ** space.p, axis=-1) ** (1.0 / space.p)


def norm(space, x):
    """The norm of ``x`` in ``space``."""
    return float(norms(space, _as_vector(space, x)[None, :])[0])


def dual_norm(space, f):
    """Dual norm ``sup_{||x||=1} |f . x|`` of a row functional."""
    f = _as_vector(space, f)
    if space.kind == "lp":
        if space.p is INF:
            return float(np.sum(np.abs(f)))
        if space.p == 1.0:
            return float(np.max(np.abs(f)))
        q = space.p / (space.p - 1.0)
        return float(np.sum(np.abs(f) ** q) ** (1.0 / q))
    # Dual ball is conv(+-F_j): gauge = min sum|c_j| subject to sum c_j F_j = f.
    # The LP is solved for f / max|f_i| so that solver tolerances stay relative.
    scale = float(np.max(np.abs(f)))
    if scale == 0.0:
        return 0.0
    F = space.facets
    m = F.shape[0]
    res = linprog(
        np.ones(2 * m),
        A_eq=np.hstack([F.T, -F.T]),
        b_eq=f / scale,
        bounds=[(0, None)] * (2 * m),
        method="highs",
        options={"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10},
    )
    if res.status != 0:
        raise RuntimeError(f"dual norm LP failed: {res.message}")
    return scale * float(res.fun)


def _top_two(values):
    """Largest and second-largest entries along the last axis."""
    if values.shape[-1] == 1:
        top = values[..., 0]
        return top, np.zeros_like(top)
    part = np.partition(values, -2, axis=-1)
    return part[..., -1], part[..., -2]


def smooth_mask(space, X, margin=SMOOTH_MARGIN):
    """Row-wise smoothness test for nonzero rows of ``X``; zero rows are not smooth."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    nx = norms(space, X)
    ok = nx > 0
    safe = np.where(ok, nx, 1.0)[:, None]
    U = X / safe
    if space.kind == "lp" and space.p is not INF and space.p > 1.0:
        return ok
    if space.kind == "lp" and space.p == 1.0:
        return ok & np.all(np.abs(U) > margin, axis=-1)
    vals = np.abs(U) if space.kind == "lp" else np.abs(U @ space.facets.T)
    top, second = _top_two(vals)
    return ok & (top - second > margin)


def is_smooth_point(space, x, margin=SMOOTH_MARGIN):
    """Whether ``x / ||x||`` has a unique support functional (with a tie margin)."""
    x = _as_vector(space, x)
    if not np.any(x):
        raise ZeroVectorError("smoothness is undefined at the origin")
    return bool(smooth_mask(space, x[None, :], margin)[0])


def support_rows(space, X):
    """Support functionals of the normalised rows of ``X`` (no smoothness check).

    At a tie the first maximising coordinate/facet is used; callers are
    expected to have filtered with :func:`smooth_mask`.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    U = X / norms(space, X)[:, None]
    if space.kind == "poly" or space.p is INF:
        F = facet_functionals(space)
        proj = U @ F.T
        j = np.argmax(np.abs(proj), axis=1)
        s = np.sign(proj[np.arange(len(U)), j])
        return F[j] * s[:, None]
    if space.p == 1.0:
        return np.sign(U)
    if space.p == 2.0:
        return U
    return np.sign(U) * np.abs(U) ** (space.p - 1.0)


def facet_labels(space, X):
    """Index and sign of the maximising facet functional for each row of ``X``."""
    F = facet_functionals(space)
    if F is None:
        raise ValueError(f"{space} is not polyhedral")
    proj = np.atleast_2d(np.asarray(X, dtype=float)) @ F.T
    j = np.argmax(np.abs(proj), axis=1)
    return j, np.sign(proj[np.arange(len(proj)), j])


@dataclass(frozen=True)
class SupportFunctional:
    """Row ``phi`` with ``phi(x_hat) = 1`` and dual norm one."""

    row: np.ndarray

    def __call__(self, x):
        return float(self.row @ np.asarray(x, dtype=float))


def support_functional(space, x, margin=SMOOTH_MARGIN):
    """The unique support functional at ``x / ||x||``.

    Raises :class:`NotSmoothError` when the point is (within ``margin``) a
    non-smooth point of the unit sphere.
    """
    x = _as_vector(space, x)
    if not is_smooth_point(space, x, margin):
        raise NotSmoothError(f"{space} is not smooth at {x.tolist()}")
    return SupportFunctional(support_rows(space, x[None, :])[0])


def gamma(space):
    """Largest squared Euclidean norm over the dual unit sphere.

    Closed form ``d**(2/p - 1)`` for ``p < 2`` and ``1`` for ``p >= 2``;
    for polyhedral norms the maximum sits at a vertex ``+-F_j`` of the dual
    ball, so it is ``max_j ||F_j||_2**2``.
    """
    if space.kind == "poly":
        return float(np.max(np.sum(space.facets ** 2, axis=1)))
    if space.p is INF or space.p >= 2.0:
        return 1.0
    return float(space.d ** (2.0 / space.p - 1.0))


def k_dimension(space):
    """Dimension of the space of infinitesimal rigid motions.

    ``binom(d+1, 2)`` for the Euclidean norm and ``d`` otherwise.  Polyhedral
    norms always get ``d``; a polyhedral description is never checked for
    hidden Euclidean structure.
    """
    if space.is_euclidean:
        return space.d * (space.d + 1) // 2
    return space.d


@dataclass(frozen=True)
class LinearIsometry:
    matrix: np.ndarray
    source: NormedSpace
    target: NormedSpace

    def __call__(self, x):
        return self.matrix @ np.asarray(x, dtype=float)


def check_isometry(psi, source, target, samples=500, seed=0, rtol=EPS):
    """Validate that ``psi`` maps ``source`` isometrically onto ``target``.

    Norm preservation is tested on ``samples`` seeded Gaussian vectors.
    """
    psi = np.asarray(psi, dtype=float)
    if source.d != target.d or psi.shape != (source.d, source.d):
        raise ValueError("isometry must be a square matrix matching both dimensions")
    if abs(np.linalg.det(psi)) <= EPS:
        raise SingularError("isometry matrix is singular")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((samples, source.d))
    before = norms(source, X)
    after = norms(target, X @ psi.T)
    err = np.abs(after - before) / np.maximum(before, 1.0)
    worst = int(np.argmax(err))
    if err[worst] > rtol:
        raise NotIsometryError(
            f"norm not preserved: |{after[worst]:.6g} - {before[worst]:.6g}| at {X[worst].tolist()}",
            worst_vector=X[worst],
            ratio=after[worst] / before[worst],
        )
    return LinearIsometry(psi.copy(), source, target)


def random_smooth_points(space, count, rng):
    """Gaussian sample of smooth points (rejection on the tie margin)."""
    out = []
    while len(out) < count:
        X = rng.standard_normal((2 * count, space.d))
        out.extend(X[smooth_mask(space, X)])
    return np.array(out[:count])
