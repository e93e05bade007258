"""Inequalities on algebraic connectivity as checkable records, and redundancy tests.

Each check returns a :class:`BoundCheck` carrying both sides of the
inequality, the signed slack and a provenance string saying which result it
instantiates and where the left-hand value came from.  Values of ``a(G, X)``
are taken, in order of preference, from a table of closed forms, from the
exact l_inf engine, and from placement search.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import frameworks as fw
from . import graphs, linalg, linf, norms
from .errors import (
    BudgetExceededError,
    HypothesisViolatedError,
    KernelMismatchError,
    TooDenseError,
    TooSmallError,
)
from .frameworks import SearchBudget
from .graphs import Graph
from .linalg import EPS

RELATIONS = ("<=", ">=", "==")


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality ``lhs relation rhs``.

    ``slack`` is ``rhs - lhs`` for ``<=``, ``lhs - rhs`` for ``>=`` and
    ``-|lhs - rhs|`` for ``==``; the check holds when ``slack >= -eps``.
    """

    name: str
    lhs: float
    rhs: float
    relation: str
    slack: float
    holds: bool
    provenance: str
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        out = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "slack": self.slack,
            "holds": self.holds,
            "provenance": self.provenance,
        }
        out.update(self.extra)
        return out


def make_check(name, lhs, rhs, relation, provenance, eps=EPS, **extra):
    if relation not in RELATIONS:
        raise ValueError(f"relation must be one of {RELATIONS}")
    lhs, rhs = float(lhs), float(rhs)
    if relation == "<=":
        slack = rhs - lhs
    elif relation == ">=":
        slack = lhs - rhs
    else:
        slack = -abs(lhs - rhs)
    return BoundCheck(name, lhs, rhs, relation, slack, slack >= -eps, provenance, extra)


@dataclass(frozen=True)
class RedundancyReport:
    """Outcome of a redundant-rigidity test.

    ``rigid`` is true when a redundantly rigid framework was exhibited (or
    the property is certified).  ``failures`` lists the vertices or edges
    whose deletion broke rigidity at the last placement examined.
    ``certified_by`` names a result that decides the question without a
    witness, if one applies.
    """

    rigid: bool
    failures: tuple = ()
    certified_by: str = None
    lower_bound: float = None
    witness: np.ndarray = field(default=None, compare=False, repr=False)


# ---------------------------------------------------------------------------
# best known values of a(G, X)

@dataclass(frozen=True)
class ConnectivityValue:
    """A value of ``a(G, X)`` with its source; ``exact`` means lower == true value."""

    value: float
    source: str
    exact: bool


def known_value(g, space):
    """Closed-form ``a(G, X)`` for the complete and octahedral graphs worked out by hand."""
    if not (space.is_linf or (space.kind == "lp" and space.p == 1.0 and space.d == 2)):
        return None
    d = space.d
    table = {}
    if g.is_complete():
        table = {
            (4, 2): 2.0 - math.sqrt(2.0),
            (5, 2): (5.0 - math.sqrt(13.0)) / 2.0,
            (6, 2): 1.0,
            (6, 3): linf.grone_root(3),
        }
    elif g.n == 6 and g.m == 12 and graphs.is_isomorphic(g, graphs.octahedral_graph()):
        table = {(6, 2): 1.0}
    val = table.get((g.n, d))
    if val is None:
        return None
    if not space.is_linf:
        # the l_1 plane is linearly isometric to the l_inf plane with a factor 2
        return ConnectivityValue(2.0 * val, "closed form, doubled through the l_1/l_inf plane isometry", True)
    return ConnectivityValue(val, "closed form", True)


def connectivity_value(g, space, budget=None, seed=0, use_table=True, exact_limit=10,
                       candidate_cap=200_000, realize_budget=SearchBudget(32, 300)):
    """Best available lower value of ``a(G, X)``.

    Prefers a closed form, then the exact l_inf engine (for l_inf spaces and,
    through the isometry, the l_1 plane) when ``n <= exact_limit`` and the
    enumeration fits in ``candidate_cap`` nodes, then placement search.
    """
    budget = budget or SearchBudget()
    if g.n < space.d + 1:
        raise TooSmallError(f"need at least d+1 = {space.d + 1} vertices")
    if use_table:
        kv = known_value(g, space)
        if kv is not None:
            return kv
    scale = None
    if space.is_linf:
        scale = 1.0
    elif space.kind == "lp" and space.p == 1.0 and space.d == 2:
        scale = 2.0
    if scale is not None and g.n <= exact_limit:
        try:
            res = linf.exact_linf_connectivity(
                g, space.d, SearchBudget(candidates=candidate_cap), seed,
                realize_budget=realize_budget, max_realize_attempts=20)
        except BudgetExceededError:
            res = None
        if res is not None and res.exact:
            src = "exact l_inf engine" if scale == 1.0 else \
                "exact l_inf engine, doubled through the l_1/l_inf plane isometry"
            return ConnectivityValue(scale * res.lower, src, True)
    if g.n > 1 and not g.is_connected():
        return ConnectivityValue(0.0, "disconnected graph", True)
    lower, _ = fw.estimate_alg_connectivity(g, space, budget, seed)
    return ConnectivityValue(lower, "placement search lower bound", False)


# ---------------------------------------------------------------------------
# spectral upper bounds

def general_upper_bound(g, space, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, X) <= gamma(X) / (2d - k(X)) * a(G)`` for spaces with ``k(X) <= 2d - 1``."""
    d, k = space.d, norms.k_dimension(space)
    if k > 2 * d - 1:
        raise HypothesisViolatedError(
            f"k(X) = {k} exceeds 2d - 1 = {2 * d - 1}; the bound does not apply to {space}")
    if g.n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    value = value or connectivity_value(g, space, budget, seed)
    rhs = norms.gamma(space) * graphs.algebraic_connectivity(g) / (2 * d - k)
    return make_check(
        "normed_space_upper_bound", value.value, rhs, "<=",
        f"a(G,X) <= gamma(X)/(2d-k(X)) a(G) via trace weighting; lhs from {value.source}",
        eps, space=space.descriptor())


def lp_upper_bound(g, space, value=None, budget=None, seed=0, eps=EPS):
    """The l_p specialisation, evaluated from its own closed form.

    ``a(G)/d^(2-2/p)`` for ``1 <= p < 2`` and ``a(G)/d`` for ``p > 2``
    (including ``p = inf``).
    """
    if space.kind != "lp" or space.is_euclidean:
        raise HypothesisViolatedError("the l_p form needs an l_p space with p != 2")
    if space.d < 2:
        raise HypothesisViolatedError("the l_p form needs d >= 2")
    d = space.d
    a = graphs.algebraic_connectivity(g)
    if space.p is not norms.INF and space.p < 2.0:
        rhs = a / d ** (2.0 - 2.0 / space.p)
    else:
        rhs = a / d
    value = value or connectivity_value(g, space, budget, seed)
    return make_check("lp_upper_bound", value.value, rhs, "<=",
                      f"a(G,l_p^d) <= a(G)/d^(2-2/p) (p<2) or a(G)/d (p>2); lhs from {value.source}",
                      eps, space=space.descriptor())


def linf_degree_bound(g, d, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, l_inf^d) <= n/(n-1) * floor(min_deg / d)``.

    For ``d = 1`` this is the classical degree bound on ``a(G)`` and the
    left-hand side is ``a(G)`` itself.
    """
    n = g.n
    if n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    rhs = n / (n - 1) * (min(g.degrees()) // d)
    if d == 1:
        value = ConnectivityValue(graphs.algebraic_connectivity(g), "graph Laplacian", True)
    else:
        value = value or connectivity_value(g, norms.linf(d), budget, seed)
    return make_check("linf_degree_bound", value.value, rhs, "<=",
                      f"a(G,l_inf^d) <= n/(n-1) floor(min deg / d); lhs from {value.source}",
                      eps, d=d)


def z_space(d, n, layout="coordinate"):
    """Columns ``b_i (x) 1_n`` (coordinate-major) or ``1_n (x) b_i`` (vertex-major)."""
    I, one = np.eye(d), np.ones((n, 1))
    if layout == "coordinate":
        return np.kron(I, one)
    if layout == "vertex":
        return np.kron(one, I)
    raise ValueError(f"unknown layout {layout!r}")


def min_eigen_row_bound(M, d, n, layout="coordinate", eps=EPS):
    """``lambda_{d+1}(M) <= n/(n-1) * min_i m_ii`` for PSD ``M`` killing the Z-space.

    Raises
    ------
    KernelMismatchError
        If some ``z_i`` is not annihilated by ``M`` within ``eps``.
    """
    A = linalg.as_symmetric(M)
    if A.shape != (d * n, d * n):
        raise ValueError(f"M must be {d * n} x {d * n}")
    if n < 2:
        raise TooSmallError("need n >= 2")
    Z = z_space(d, n, layout)
    scale = max(1.0, float(np.max(np.abs(A))))
    if np.max(np.abs(A @ Z)) > eps * scale * n:
        raise KernelMismatchError("M does not annihilate the vectors b_i (x) 1")
    lam = float(linalg.sym_eigenvalues(A).values[d])
    rhs = n / (n - 1) * float(np.min(np.diag(A)))
    return make_check("min_diagonal_eigen_bound", lam, rhs, "<=",
                      "lambda_{d+1}(M) <= n/(n-1) min_i m_ii for PSD M with M(Z) = 0", eps)


def sparse_bound(g, d, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, l_inf^d) <= 1`` when ``|E| <= d n``.

    ``extra`` reports whether equality is attained and whether it is
    expected, which happens only for the octahedral graph in the plane.
    """
    if d < 2:
        raise HypothesisViolatedError("the sparse bound needs d >= 2")
    if g.n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    if g.m > d * g.n:
        raise TooDenseError(f"{g.m} edges exceeds d n = {d * g.n}")
    value = value or connectivity_value(g, norms.linf(d), budget, seed)
    attained = abs(value.value - 1.0) <= eps
    expected = d == 2 and g.n == 6 and g.m == 12 and graphs.is_isomorphic(g, graphs.octahedral_graph())
    return make_check("linf_sparse_bound", value.value, 1.0, "<=",
                      f"a(G,l_inf^d) <= 1 when |E| <= dn, equality only for K_2,2,2 in the plane; "
                      f"lhs from {value.source}",
                      eps, equality_attained=attained, equality_expected=expected,
                      equality_consistent=(not attained) or expected or not value.exact)


def linf_average_bound(g, d, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, l_inf^d) <= a(G) / d``."""
    value = value or connectivity_value(g, norms.linf(d), budget, seed)
    return make_check("linf_average_bound", value.value, graphs.algebraic_connectivity(g) / d, "<=",
                      f"a(G,l_inf^d) <= a(G)/d; lhs from {value.source}", eps, d=d)


def linf_dimension_monotonicity(g, d, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, l_inf^d) <= a(G, l_inf^{d-1})``.

    The left side is ``value`` (default: the realized, lower value of the
    exact engine in dimension ``d``) and the right side is the enumeration
    upper bound in dimension ``d - 1``, so the check is sound whether or not
    either side is exact.
    """
    if d < 2:
        raise HypothesisViolatedError("needs d >= 2")
    if g.n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    budget = budget or SearchBudget()
    if value is None:
        res = linf.exact_linf_connectivity(g, d, budget, seed)
        value = ConnectivityValue(res.lower, "exact l_inf engine", res.exact)
    upper = max((dec.score() for dec in
                 linf.enumerate_candidates(g, d - 1, max_nodes=budget.candidates)), default=0.0)
    return make_check("linf_dimension_monotonicity", value.value, upper, "<=",
                      f"a(G,l_inf^d) <= a(G,l_inf^(d-1)); lhs from {value.source}, rhs is the "
                      "enumeration bound one dimension down", eps, d=d)


def linf_path_lower_bound(g, d, result=None, budget=None, seed=0, eps=EPS):
    """Either ``a(G, l_inf^d) = 0`` or ``a(G, l_inf^d) >= 2(1 - cos(pi/n))``."""
    result = result or linf.exact_linf_connectivity(g, d, budget, seed)
    floor = 2.0 * (1.0 - math.cos(math.pi / g.n))
    if result.exact and result.lower <= eps:
        return make_check("linf_path_lower_bound", 0.0, 0.0, "==",
                          "a(G,l_inf^d) is 0 or at least a(P_n); zero branch", eps, exact=True)
    return make_check("linf_path_lower_bound", result.lower, floor, ">=",
                      "a(G,l_inf^d) is 0 or at least a(P_n) = 2(1-cos(pi/n))", eps,
                      exact=result.exact)


def box_product_identity(decomposition, eps=EPS):
    """``a(G_1 box G_2) == min(a(G_1), a(G_2))`` for a two-part decomposition."""
    if decomposition.d != 2:
        raise ValueError("the box-product form is for two parts")
    g1, g2 = decomposition.subgraphs()
    lhs = graphs.algebraic_connectivity(graphs.cartesian_product(g1, g2), method="lapack")
    rhs = min(graphs.algebraic_connectivity(g1), graphs.algebraic_connectivity(g2))
    return make_check("box_product_identity", lhs, rhs, "==",
                      "a(G_1 box G_2) = min(a(G_1), a(G_2)), so a(G,l_inf^2) maximises box products",
                      eps)


# ---------------------------------------------------------------------------
# weighted Laplacians

def weighted_monotonicity(g, w1, w2, eps=EPS):
    """``lambda_2(L(G, w1)) <= lambda_2(L(G, w2))`` when ``w1 <= w2`` edgewise."""
    for e in g.edges:
        if w1.get(e, 0.0) > w2.get(e, 0.0) + eps:
            raise HypothesisViolatedError(f"w1 exceeds w2 on edge {e}")
    l1 = linalg.sym_eigenvalues(graphs.weighted_laplacian(g, w1)).values[1]
    l2 = linalg.sym_eigenvalues(graphs.weighted_laplacian(g, w2)).values[1]
    return make_check("weighted_monotonicity", l1, l2, "<=",
                      "increasing scalar edge weights cannot decrease lambda_2", eps)


def trace_bound(g, W, d, eps=EPS):
    """``sum_{i=1}^d lambda_{d+i}(L(G, W)) <= lambda_2(L(G, tr W))``."""
    L = graphs.matrix_weighted_laplacian(g, W, d)
    values = linalg.sym_eigenvalues(L).values
    lhs = float(np.sum(values[d:2 * d]))
    trace_w = {e: float(np.trace(np.asarray(M))) for e, M in W.items()}
    rhs = float(linalg.sym_eigenvalues(graphs.weighted_laplacian(g, trace_w)).values[1])
    return make_check("trace_bound", lhs, rhs, "<=",
                      "sum of eigenvalues d+1..2d of a matrix-weighted Laplacian is at most "
                      "lambda_2 of its trace weighting", eps)


# ---------------------------------------------------------------------------
# placement-level checks

def vertex_deletion_check(F, v, eps=EPS):
    """``lambda_{k+1}(L(H, p_H)) >= lambda_{k+1}(L(G, p)) - gamma(X)`` for ``H = G - v``."""
    if F.n < F.d + 2:
        raise TooSmallError(f"need at least d+2 = {F.d + 2} vertices")
    H = fw.delete_vertex(F, v)
    if not fw.has_full_affine_span(H.points, eps):
        raise HypothesisViolatedError("the reduced placement must have full affine span")
    lhs = fw.rigidity_report(H, eps, method="lapack").rigidity_eigenvalue
    rhs = fw.rigidity_report(F, eps, method="lapack").rigidity_eigenvalue - norms.gamma(F.space)
    return make_check("vertex_deletion", lhs, rhs, ">=",
                      "deleting a vertex lowers the rigidity eigenvalue by at most gamma(X)",
                      eps, vertex=int(v))


def vertex_deletion_bound(g, space, v, budget=None, seed=0, eps=EPS):
    """Graph-level form ``a(G - v, X) >= a(G, X) - gamma(X)``.

    ``estimates_used`` is set when either side comes from placement search,
    in which case the check is only as good as the search.
    """
    if g.n < space.d + 2:
        raise TooSmallError(f"need at least d+2 = {space.d + 2} vertices")
    h = g.delete_vertex(v)
    if h.m == 0:
        lhs = ConnectivityValue(0.0, "edgeless graph", True)
    else:
        lhs = connectivity_value(h, space, budget, seed)
    whole = connectivity_value(g, space, budget, seed) if g.m else \
        ConnectivityValue(0.0, "edgeless graph", True)
    return make_check("vertex_deletion_graph", lhs.value, whole.value - norms.gamma(space), ">=",
                      f"a(G-v,X) >= a(G,X) - gamma(X); sides from {lhs.source} / {whole.source}",
                      eps, vertex=int(v), estimates_used=not (lhs.exact and whole.exact))


def minimally_rigid_bound(g, space, value=None, budget=None, seed=0, eps=EPS):
    """``a(G, X) <= gamma(X)`` for minimally rigid ``G``.

    Minimal rigidity is taken as ``|E| = d n - k(X)`` together with a
    positive value of ``a(G, X)`` (a rigid placement exists).

    With ``n >= d + 2`` the bound follows from the vertex-deletion
    inequality.  With ``n = d + 1`` the graph is a Euclidean simplex, and the
    bound rests on ``a(K_{d+1}, l_2^d) = 1``; that holds for ``d >= 3`` but
    not below: the unit segment gives 2 and the equilateral triangle gives
    ``3/2``, both above ``gamma = 1``.  The case ``n = d + 1 <= 3`` is
    therefore rejected.
    """
    d, k = space.d, norms.k_dimension(space)
    if g.n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    if g.n == d + 1 and d <= 2:
        raise HypothesisViolatedError(
            "the bound fails for simplices in dimension d <= 2 (equilateral triangle: 3/2 > 1)")
    if g.m != d * g.n - k:
        raise HypothesisViolatedError(f"|E| = {g.m} but minimal rigidity needs dn - k = {d * g.n - k}")
    value = value or connectivity_value(g, space, budget, seed)
    if value.value <= eps:
        raise HypothesisViolatedError("no rigid placement known, so G is not shown to be rigid")
    return make_check("minimally_rigid_bound", value.value, norms.gamma(space), "<=",
                      f"minimally rigid graphs have a(G,X) <= gamma(X); lhs from {value.source}", eps)


# ---------------------------------------------------------------------------
# redundancy

def _rigid(F, eps):
    return fw.rigidity_report(F, eps, method="lapack").infinitesimally_rigid


def edge_redundant_test(F, eps=EPS):
    """Whether ``F`` is infinitesimally rigid and stays so after deleting any one edge."""
    certified = None
    if F.space.is_linf and F.graph.is_complete() and F.n == 2 * F.d + 1 and F.d >= 2:
        certified = "K_(2d+1) is never edge-redundantly rigid in l_inf^d"
    if not _rigid(F, eps):
        return RedundancyReport(False, (), certified, witness=F.points)
    failures = tuple(e for e in F.graph.edges if not _rigid(fw.delete_edge(F, e), eps))
    return RedundancyReport(not failures, failures, certified, witness=F.points)


def _vertex_failures(F, eps):
    out = []
    for v in range(F.n):
        H = fw.delete_vertex(F, v)
        if not (fw.has_full_affine_span(H.points, eps) and _rigid(H, eps)):
            out.append(v)
    return tuple(out)


def vertex_redundant_test(g, space, budget=None, seed=0, eps=EPS):
    """Look for a vertex-redundantly rigid placement of ``g`` in ``space``.

    The placement maximising the rigidity eigenvalue is tried first, then
    fresh random placements (``budget.restarts`` of them).  Independently,
    the graph is certified when the best lower bound on ``a(G, X)`` exceeds
    ``gamma(X)``, and certified negative when it is minimally rigid.
    """
    budget = budget or SearchBudget()
    d, k = space.d, norms.k_dimension(space)
    if g.n < d + 2:
        raise TooSmallError(f"need at least d+2 = {d + 2} vertices")
    lower, best = fw.estimate_alg_connectivity(g, space, budget, seed)
    certified = None
    if lower > norms.gamma(space) + eps:
        certified = "a(G,X) > gamma(X) forces vertex-redundant rigidity"
    elif g.m == d * g.n - k and lower > eps:
        certified = "minimally rigid graphs are never vertex-redundantly rigid"
        F = fw.make_framework(g, space, best)
        return RedundancyReport(False, _vertex_failures(F, eps), certified, lower, best)
    rng = np.random.default_rng([seed, 1])
    candidates = [best] + [rng.random((g.n, d)) for _ in range(budget.restarts)]
    failures = ()
    for P in candidates:
        try:
            F = fw.make_framework(g, space, P)
        except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
            continue
        if not _rigid(F, eps):
            failures = tuple(range(g.n))
            continue
        failures = _vertex_failures(F, eps)
        if not failures:
            return RedundancyReport(True, (), certified, lower, P)
    return RedundancyReport(certified is not None and certified.startswith("a(G,X) >"),
                            failures, certified, lower, None)


# ---------------------------------------------------------------------------
# the octahedral graph and the complete graphs on 6 and 7 vertices

def octahedral_cycle_partitions(g=None):
    """Partitions of ``K_(2,2,2)`` into two spanning 6-cycles, in lexicographic order."""
    g = g or graphs.octahedral_graph()
    c6 = graphs.cycle_graph(6)
    for dec in linf.enumerate_candidates(g, 2):
        parts = dec.subgraphs()
        if all(p.m == 6 and graphs.is_isomorphic(p, c6) for p in parts):
            yield dec


def octahedral_placement(budget=None, seed=0):
    """Placement of ``K_(2,2,2)`` in l_inf^2 whose monochrome parts are two 6-cycles.

    Returns the :class:`linf.Decomposition` with its certificate.
    """
    g = graphs.octahedral_graph()
    for dec in octahedral_cycle_partitions(g):
        P = linf.realize_decomposition(g, dec.parts, budget or linf.REALIZE_BUDGET, seed)
        if P is not None:
            return dec.with_certificate(P)
    raise BudgetExceededError("no two-hexagon placement of K_2,2,2 found within budget")


def extend_placement(P, space, near=(0.5, 0.9), tries=2000, seed=0, eps=EPS):
    """Add one vertex, joined to every existing vertex, keeping edge redundancy.

    ``near`` is tried first; then points at growing distance around it and
    finally anywhere in the bounding box of ``P``.
    """
    n, d = P.shape
    g = graphs.complete_graph(n + 1)
    rng = np.random.default_rng(seed)
    lo, hi = P.min(axis=0), P.max(axis=0)
    near = np.asarray(near, dtype=float)
    for t in range(tries):
        if t == 0:
            q = near
        elif t < tries // 2:
            q = near + rng.normal(scale=0.05 * (1 + t / 50), size=d)
        else:
            q = lo + (hi - lo) * rng.random(d)
        Q = np.vstack([P, q])
        try:
            F = fw.make_framework(g, space, Q)
        except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
            continue
        if edge_redundant_test(F, eps).rigid:
            return F
    raise BudgetExceededError("no edge-redundant extension found")


# ---------------------------------------------------------------------------
# batch evaluation

SWEEP_BUDGET = SearchBudget(restarts=6, steps=80, candidates=20_000)


def _sample_framework(g, space, rng, attempts=200):
    for _ in range(attempts):
        try:
            F = fw.make_framework(g, space, rng.random((g.n, space.d)))
        except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
            continue
        if fw.has_full_affine_span(F.points):
            return F
    return None


def best_value(g, space, budget=SWEEP_BUDGET, seed=0):
    """Cheap best lower value of ``a(G, X)`` plus the l_inf engine result, if run.

    Closed forms first; for l_inf the exact engine capped at
    ``budget.candidates`` nodes; then (or otherwise) placement search.  The
    larger of the engine's realized value and the search value is returned,
    since both are lower bounds.
    """
    kv = known_value(g, space)
    result = None
    if space.is_linf and g.n <= 8:
        try:
            result = linf.exact_linf_connectivity(
                g, space.d, budget, seed, realize_budget=SearchBudget(8, 200),
                max_realize_attempts=5)
        except BudgetExceededError:
            result = None
    if kv is not None:
        return kv, result
    if result is not None and result.exact:
        return ConnectivityValue(result.lower, "exact l_inf engine", True), result
    if g.n > 1 and not g.is_connected():
        return ConnectivityValue(0.0, "disconnected graph", True), result
    lower, _ = fw.estimate_alg_connectivity(g, space, budget, seed)
    if result is not None and result.lower > lower:
        return ConnectivityValue(result.lower, "l_inf engine, realized candidate", False), result
    return ConnectivityValue(lower, "placement search lower bound", False), result


def check_suite(g, space, budget=SWEEP_BUDGET, seed=0, eps=EPS):
    """Every bound check that applies to ``(g, space)``, as a list of :class:`BoundCheck`.

    Graph-level inequalities use :func:`best_value`; placement-level ones
    (vertex deletion, the row bound, the trace bound, weighted monotonicity
    and, in l_inf, the box-product identity) use one seeded random placement.
    Checks whose hypotheses fail are skipped.
    """
    if g.n < space.d + 1:
        return []
    value, result = best_value(g, space, budget, seed)
    rng = np.random.default_rng([seed, g.n, g.m])
    out = []
    graph_level = [
        lambda: general_upper_bound(g, space, value, eps=eps),
        lambda: lp_upper_bound(g, space, value, eps=eps),
        lambda: minimally_rigid_bound(g, space, value, eps=eps),
    ]
    if space.is_linf:
        d = space.d
        graph_level += [
            lambda: linf_degree_bound(g, d, value, eps=eps),
            lambda: linf_average_bound(g, d, value, eps=eps),
            lambda: sparse_bound(g, d, value, eps=eps),
        ]
        if result is not None and result.exact:
            graph_level.append(lambda: linf_path_lower_bound(g, d, result, eps=eps))
        if d >= 2 and g.n <= 8:
            graph_level.append(lambda: linf_dimension_monotonicity(g, d, value, budget, eps=eps))
    for make in graph_level:
        try:
            out.append(make())
        except (HypothesisViolatedError, TooSmallError, TooDenseError, BudgetExceededError):
            continue
    F = _sample_framework(g, space, rng) if g.m else None
    if F is not None:
        d, n = space.d, g.n
        out.append(min_eigen_row_bound(fw.framework_laplacian(F), d, n, layout="vertex", eps=eps))
        if g.n >= d + 2:
            for v in range(n):
                try:
                    out.append(vertex_deletion_check(F, v, eps))
                except HypothesisViolatedError:
                    continue
        out.append(trace_bound(g, fw.edge_weights(F), d, eps))
        w1 = {e: float(x) for e, x in zip(g.edges, rng.random(g.m))}
        w2 = {e: x + float(y) for (e, x), y in zip(w1.items(), rng.random(g.m))}
        out.append(weighted_monotonicity(g, w1, w2, eps))
        if space.is_linf and d == 2:
            out.append(box_product_identity(linf.monochrome_decompose(F), eps))
    return out
