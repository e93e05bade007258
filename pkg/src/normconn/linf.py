"""Exact algebraic connectivity in l_inf^d through monochrome decompositions.

In l_inf^d the support functional of an edge is a signed coordinate vector,
so every framework splits its edge set into ``d`` monochrome subgraphs
``G_1..G_d`` and its rigidity eigenvalue is ``min_i a(G_i)``.  The value
``a(G, l_inf^d)`` is therefore the best such minimum over the decompositions
that some placement actually induces.

This module enumerates candidate decompositions under necessary conditions
(upper bound), searches for placements realizing them (lower bound), and
reports an exact value when the two meet.  A failed realization search is
never taken as proof of non-realizability.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from . import frameworks as fw
from . import graphs, linalg, norms
from .errors import BudgetExceededError, TieOnEdgeError, TooSmallError, WrongEdgeCountError
from .graphs import Graph
from .linalg import EPS


@dataclass(frozen=True)
class Decomposition:
    """Ordered partition of a graph's edges into spanning subgraphs.

    ``certificate``, when present, is a placement whose monochrome
    classification reproduces ``parts`` exactly.
    """

    graph: Graph
    parts: tuple
    certificate: np.ndarray = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(tuple(sorted(tuple(sorted(e)) for e in p)) for p in self.parts)
        flat = [e for p in parts for e in p]
        if len(flat) != len(set(flat)) or set(flat) != set(self.graph.edges):
            raise ValueError("parts must partition the edge set")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self):
        return len(self.parts)

    def subgraphs(self):
        return [Graph(self.graph.n, p) for p in self.parts]

    def connectivities(self):
        return [_part_connectivity(g) for g in self.subgraphs()]

    def score(self):
        """``min_i a(G_i)``."""
        return min(self.connectivities()) if self.parts else 0.0

    def with_certificate(self, P):
        return Decomposition(self.graph, self.parts, np.array(P, dtype=float))

    def to_dict(self):
        out = {
            "parts": [[list(e) for e in p] for p in self.parts],
            "part_connectivity": self.connectivities(),
            "certificate": None if self.certificate is None else self.certificate.tolist(),
        }
        return out


@dataclass(frozen=True)
class LinfResult:
    lower: float
    upper: float
    exact: bool
    best_decomposition: Decomposition
    notes: tuple = ()
    candidates: int = 0

    @property
    def value(self):
        return self.lower if self.exact else None

    def to_dict(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "candidates": self.candidates,
            "best_decomposition": None if self.best_decomposition is None
            else self.best_decomposition.to_dict(),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FilterSet:
    """Necessary conditions applied while enumerating candidates.

    ``connected_spanning``: every part connected (otherwise the score is 0).
    ``odd_hole_free``: no part contains an odd hole; only sound for complete
    graphs and silently skipped otherwise.
    ``min_edge_count``: every part keeps at least ``n - 1`` edges (needs
    ``connected_spanning``).
    ``symmetry``: one representative per reordering of the parts.
    """

    connected_spanning: bool = True
    odd_hole_free: bool = True
    min_edge_count: bool = True
    symmetry: bool = True


NO_FILTERS = FilterSet(False, False, False, False)


_conn_cache = {}


def _part_connectivity(g):
    key = (g.n, g.edges)
    val = _conn_cache.get(key)
    if val is None:
        if g.n < 2:
            val = 0.0
        else:
            val = float(max(linalg.fast_eigenvalues(graphs.laplacian(g))[1], 0.0))
            if val < EPS:
                val = 0.0
        if len(_conn_cache) > 200_000:
            _conn_cache.clear()
        _conn_cache[key] = val
    return val


# ---------------------------------------------------------------------------
# monochrome structure of a framework

def _require_polyhedral(F):
    if norms.facet_functionals(F.space) is None:
        raise ValueError(f"{F.space} is not polyhedral")


def monochrome_labels(F):
    """Facet index and cone sign for every edge of a polyhedral framework."""
    _require_polyhedral(F)
    D = fw.edge_vectors(F.graph, F.points)
    if not np.all(norms.smooth_mask(F.space, D)):
        raise TieOnEdgeError("an edge direction lies on two facet cones")
    return norms.facet_labels(F.space, D)


def monochrome_decompose(F):
    """Monochrome subgraph decomposition of an l_inf or polyhedral framework."""
    j, _ = monochrome_labels(F)
    count = norms.facet_functionals(F.space).shape[0]
    parts = [[] for _ in range(count)]
    for e, c in zip(F.graph.edges, j):
        parts[c].append(e)
    return Decomposition(F.graph, parts, np.array(F.points))


def block_similarity(F, eps=EPS):
    """Compare ``L(G, p)`` with the shuffled direct sum of part Laplacians.

    Returns ``(matrix_ok, eigen_ok, rigidity_eigenvalue, min_part_value)``.
    """
    if not F.space.is_linf:
        raise ValueError("block similarity holds in l_inf only")
    dec = monochrome_decompose(F)
    n, d = F.n, F.d
    blocks = linalg.block_diag(*[graphs.laplacian(h) for h in dec.subgraphs()])
    P = linalg.perfect_shuffle(d, n)
    L = fw.framework_laplacian(F)
    matrix_ok = bool(np.max(np.abs(P @ blocks @ P.T - L), initial=0.0) <= eps)
    lam = float(linalg.sym_eigenvalues(L).values[d]) if n * d > d else 0.0
    parts = [graphs.algebraic_connectivity(h) if n >= 2 else 0.0 for h in dec.subgraphs()]
    low = min(parts)
    return matrix_ok, abs(lam - low) <= eps, lam, low


def verify_block_similarity(F, eps=EPS):
    """Whether ``L(G,p)`` equals the shuffled direct sum of the part Laplacians
    and its ``(d+1)``-th eigenvalue equals ``min_i a(G_i)``."""
    matrix_ok, eigen_ok, _, _ = block_similarity(F, eps)
    return matrix_ok and eigen_ok


def cluster_closure_violations(F, max_paths=20_000):
    """Check that same-sign runs along paths in a monochrome part span cliques.

    Walk every simple path ``v_1, ..., v_k`` inside each monochrome part of a
    complete polyhedral framework (at most ``max_paths`` paths per part) and
    label each step by the sign of ``F_j . (p_{v_i} - p_{v_{i+1}})``.  The
    steps of a run with one sign add up to a vector in the same facet cone,
    so every pair of vertices on a run must be joined inside the part.

    Returns the list of ``(part, u, v)`` pairs that are missing (empty when
    the property holds).
    """
    if not F.graph.is_complete():
        raise ValueError("the cluster closure property is about complete frameworks")
    j, sign = monochrome_labels(F)
    P, n = F.points, F.n
    facets = norms.facet_functionals(F.space)
    members = [set() for _ in range(facets.shape[0])]
    for e, c in zip(F.graph.edges, j):
        members[c].add(e)
    missing = []
    for c, edges in enumerate(members):
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        count = 0
        stack = [[s] for s in range(n) if adj[s]]
        while stack and count < max_paths:
            path = stack.pop()
            count += 1
            run_start = 0
            for i in range(1, len(path) - 1):
                prev = np.sign(facets[c] @ (P[path[i - 1]] - P[path[i]]))
                nxt = np.sign(facets[c] @ (P[path[i]] - P[path[i + 1]]))
                if prev != nxt:
                    run_start = i
            # vertices path[run_start:] form the final run; check its new pairs
            last = path[-1]
            for w in path[run_start:-1]:
                if tuple(sorted((w, last))) not in edges:
                    missing.append((c, min(w, last), max(w, last)))
            for w in adj[last]:
                if w not in path:
                    stack.append(path + [w])
    return sorted(set(missing))


# ---------------------------------------------------------------------------
# candidate enumeration

class _Masks:
    def __init__(self, g):
        self.n, self.m = g.n, g.m
        self.ends = g.edges
        self.inc = [0] * g.n
        for k, (u, v) in enumerate(g.edges):
            self.inc[u] |= 1 << k
            self.inc[v] |= 1 << k

    def connected(self, mask):
        if self.n <= 1:
            return True
        seen = 1
        frontier = [0]
        while frontier:
            x = frontier.pop()
            avail = self.inc[x] & mask
            while avail:
                low = avail & -avail
                k = low.bit_length() - 1
                avail ^= low
                u, v = self.ends[k]
                y = v if u == x else u
                if not seen >> y & 1:
                    seen |= 1 << y
                    frontier.append(y)
        return seen == (1 << self.n) - 1

    def covers(self, mask):
        return all(self.inc[v] & mask for v in range(self.n))

    def edges_of(self, mask):
        return [self.ends[k] for k in range(self.m) if mask >> k & 1]


def enumerate_candidates(g, d, filters=FilterSet(), max_nodes=10 ** 7):
    """Yield candidate decompositions of ``g`` into ``d`` parts.

    Edges are coloured in sorted order.  With ``filters.symmetry`` a colour
    may only be used once all smaller colours have appeared, which keeps one
    representative per permutation of the parts.  Output order is
    deterministic.

    Raises
    ------
    BudgetExceededError
        When more than ``max_nodes`` search nodes are visited.
    """
    if d < 1:
        raise ValueError("d must be positive")
    masks = _Masks(g)
    n, m = g.n, g.m
    need = n - 1
    connected = filters.connected_spanning
    min_edges = filters.min_edge_count and connected
    holes = filters.odd_hole_free and g.is_complete() and n >= 5
    if connected and m < d * need:
        return
    full = (1 << m) - 1
    part = [0] * d
    count = [0] * d
    visited = 0
    hole_cache = {}

    def hole_free(mask):
        val = hole_cache.get(mask)
        if val is None:
            val = graphs.find_odd_hole(Graph(n, masks.edges_of(mask))) is None
            hole_cache[mask] = val
        return val

    def feasible(k, changed):
        # edges k.. are unassigned
        rest = full & ~((1 << k) - 1)
        remaining = m - k
        if min_edges and sum(max(0, need - c) for c in count) > remaining:
            return False
        if connected:
            for c in range(d):
                if c == changed:
                    continue
                avail = part[c] | rest
                if not masks.covers(avail) or not masks.connected(avail):
                    return False
        return True

    def rec(k, used):
        nonlocal visited
        visited += 1
        if visited > max_nodes:
            raise BudgetExceededError(f"candidate enumeration visited more than {max_nodes} nodes")
        if k == m:
            if connected and not all(masks.connected(p) for p in part):
                return
            if holes and not all(hole_free(p) for p in part):
                return
            yield Decomposition(g, [masks.edges_of(p) for p in part])
            return
        top = min(d, used + 1) if filters.symmetry else d
        for c in range(top):
            part[c] |= 1 << k
            count[c] += 1
            if feasible(k + 1, c):
                yield from rec(k + 1, max(used, c + 1))
            part[c] &= ~(1 << k)
            count[c] -= 1

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# realization search

class _Target:
    """Misclassification score of a placement against a target colouring."""

    def __init__(self, g, colours, d, margin=1e-7):
        self.E = np.array(g.edges, dtype=int).reshape(-1, 2)
        self.c = np.asarray(colours, dtype=int)
        self.d = d
        self.rows = np.arange(len(self.c))
        self.margin = margin

    def violations(self, P):
        D = np.abs(P[self.E[:, 0]] - P[self.E[:, 1]])
        own = D[self.rows, self.c]
        D[self.rows, self.c] = -np.inf
        other = D.max(axis=1) if self.d > 1 else np.zeros(len(own))
        return other - own + self.margin * np.maximum(own, 1e-300)

    def score(self, P):
        v = self.violations(P)
        bad = v >= 0
        return int(bad.sum()), float(np.sum(np.maximum(v, 0.0)))


def _lp_polish(target, P, n, d, rng):
    """Fix the cone signs read off ``P`` and maximise the worst margin by LP.

    Returns a placement realizing the target (slightly perturbed to be
    generic), or ``None`` if the LP margin is not positive.
    """
    E, c = target.E, target.c
    m = len(c)
    if m == 0:
        return P
    D = P[E[:, 0]] - P[E[:, 1]]
    s = np.sign(D[target.rows, c])
    s[s == 0] = 1.0
    nv = n * d + 1
    rows = []
    for k in range(m):
        u, v = E[k]
        ci = c[k]
        for j in range(d):
            if j == ci:
                continue
            for sj in (1.0, -1.0):
                # t - s*(P[u,ci]-P[v,ci]) + sj*(P[u,j]-P[v,j]) <= 0
                row = np.zeros(nv)
                row[u * d + ci] -= s[k]
                row[v * d + ci] += s[k]
                row[u * d + j] += sj
                row[v * d + j] -= sj
                row[-1] = 1.0
                rows.append(row)
        if d == 1:
            row = np.zeros(nv)
            row[u * d + ci] -= s[k]
            row[v * d + ci] += s[k]
            row[-1] = 1.0
            rows.append(row)
    A = np.array(rows)
    obj = np.zeros(nv)
    obj[-1] = -1.0
    bounds = [(0.0, 1.0)] * (n * d) + [(None, 1.0)]
    res = linprog(obj, A_ub=A, b_ub=np.zeros(len(A)), bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] <= 1e-6:
        return None
    t = res.x[-1]
    Q = res.x[:-1].reshape(n, d)
    return Q + rng.uniform(-t / 10, t / 10, size=Q.shape)


def _realize_once(target, n, d, steps, rng, scale=0.25, halvings=10):
    P = rng.random((n, d))
    best = target.score(P)
    step, halved = scale, 0
    for _ in range(steps):
        if best[0] == 0:
            break
        viol = target.violations(P)
        bad = np.flatnonzero(viol >= 0)
        if len(bad) and rng.random() < 0.8:
            k = bad[rng.integers(len(bad))]
            v = target.E[k, rng.integers(2)]
        else:
            v = rng.integers(n)
        i = int(rng.integers(d))
        first = 1.0 if rng.random() < 0.5 else -1.0
        moved = False
        for sgn in (first, -first):
            Q = P.copy()
            Q[v, i] += sgn * step
            sc = target.score(Q)
            if sc <= best:
                P, best, moved = Q, sc, True
                break
        if not moved:
            step *= 0.5
            halved += 1
            if halved >= halvings:
                step, halved = scale, 0
    return P, best


def _classifies(g, d, colours, P):
    try:
        F = fw.make_framework(g, norms.linf(d), P)
    except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
        return False
    j, _ = monochrome_labels(F)
    return bool(np.array_equal(j, colours))


def realize_decomposition(g, parts, budget=None, seed=0):
    """Search for an l_inf^d placement whose monochrome parts are exactly ``parts``.

    Each restart samples a uniform placement and hill-climbs the number of
    misclassified edges (ties broken by total violation), moving endpoints
    of misclassified edges most of the time.  The cone signs it ends with are
    then fixed and a linear program maximises the worst classification
    margin.  Returns the placement or ``None``; ``None`` only means the
    budget ran out.
    """
    budget = budget or SearchBudget(restarts=256, steps=500)
    if isinstance(parts, Decomposition):
        parts = parts.parts
    d = len(parts)
    colour_of = {}
    for c, p in enumerate(parts):
        for e in p:
            colour_of[tuple(sorted(e))] = c
    if set(colour_of) != set(g.edges) or sum(len(p) for p in parts) != g.m:
        raise ValueError("parts must partition the edge set")
    colours = np.array([colour_of[e] for e in g.edges], dtype=int)
    target = _Target(g, colours, d)
    for r in range(budget.restarts):
        rng = np.random.default_rng([seed, r])
        P, best = _realize_once(target, g.n, d, budget.steps, rng)
        if best[0] == 0 and _classifies(g, d, colours, P):
            return P
        Q = _lp_polish(target, P, g.n, d, rng)
        if Q is not None and _classifies(g, d, colours, Q):
            return Q
    return None


SearchBudget = fw.SearchBudget
REALIZE_BUDGET = SearchBudget(restarts=256, steps=500)


# ---------------------------------------------------------------------------
# exact values

def exact_linf_connectivity(g, d, budget=None, seed=0, filters=FilterSet(),
                            realize_budget=REALIZE_BUDGET, max_realize_attempts=None,
                            eps=EPS):
    """Bracket ``a(G, l_inf^d)`` between realized and enumerated decompositions.

    ``upper`` is the best ``min_i a(G_i)`` over all candidates that pass the
    filters; ``lower`` is the score of the best candidate for which a
    realizing placement was found (candidates are tried best first).
    ``exact`` is set when the two agree within ``eps``.
    """
    budget = budget or SearchBudget()
    if d < 1:
        raise ValueError("d must be positive")
    if g.n < d + 1:
        raise TooSmallError(f"need at least d+1 = {d + 1} vertices")
    notes = ["value = max over realizable monochrome decompositions of min_i a(G_i)"]
    if filters.connected_spanning:
        notes.append("filter: parts connected (disconnected parts score 0)")
    if filters.odd_hole_free and g.is_complete() and g.n >= 5:
        notes.append("filter: monochrome parts of complete frameworks are odd-hole-free")
    cands = list(enumerate_candidates(g, d, filters, max_nodes=budget.candidates))
    scored = sorted(((dec.score(), k, dec) for k, dec in enumerate(cands)),
                    key=lambda t: (-t[0], t[1]))
    if not scored or scored[0][0] <= eps:
        # every decomposition has a disconnected part, so the value is 0
        P = _any_valid_placement(g, d, seed)
        dec = monochrome_decompose(fw.make_framework(g, norms.linf(d), P))
        notes.append("no candidate with connected parts: value 0")
        return LinfResult(0.0, 0.0, True, dec, tuple(notes), len(cands))
    upper = scored[0][0]
    attempts = 0
    for score, k, dec in scored:
        if max_realize_attempts is not None and attempts >= max_realize_attempts:
            break
        attempts += 1
        P = realize_decomposition(g, dec.parts, realize_budget, seed=seed + k)
        if P is not None:
            exact = upper - score <= eps
            if exact:
                notes.append("realizing placement found for an optimal candidate")
            else:
                notes.append("best realized candidate is below the enumeration bound")
            return LinfResult(score, upper, exact, dec.with_certificate(P), tuple(notes),
                              len(cands))
    notes.append("no candidate realized within budget")
    return LinfResult(0.0, upper, False, scored[0][2], tuple(notes), len(cands))


def _any_valid_placement(g, d, seed):
    rng = np.random.default_rng(seed)
    space = norms.linf(d)
    for _ in range(1000):
        P = rng.random((g.n, d))
        D = fw.edge_vectors(g, P)
        if g.m == 0 or np.all(norms.smooth_mask(space, D)):
            return P
    raise RuntimeError("could not sample a valid placement")


def two_tree_connectivity(g, budget=None, seed=0):
    """``a(G, l_inf^2)`` for a union of two edge-disjoint spanning trees.

    Every complementary pair of spanning trees is realizable in the plane, so
    the value is the best ``min(a(T), a(G - T))`` over such pairs; the
    returned certificate comes from :func:`realize_decomposition`.
    """
    if g.m != 2 * (g.n - 1):
        raise WrongEdgeCountError(f"need 2(n-1) = {2 * (g.n - 1)} edges, got {g.m}")
    best = None
    for T in graphs.spanning_tree_pairs(g):
        rest = tuple(e for e in g.edges if e not in set(T))
        val = min(_part_connectivity(Graph(g.n, T)), _part_connectivity(Graph(g.n, rest)))
        if best is None or val > best[0] + EPS:
            best = (val, T, rest)
    notes = ["value = max over complementary spanning tree pairs of min(a(T), a(G - T))",
             "complementary spanning tree pairs are always realizable in the l_inf plane"]
    if best is None:
        P = _any_valid_placement(g, 2, seed)
        dec = monochrome_decompose(fw.make_framework(g, norms.linf(2), P))
        return LinfResult(0.0, 0.0, True, dec, tuple(notes))
    val, T, rest = best
    dec = Decomposition(g, [T, rest])
    P = realize_decomposition(g, dec.parts, budget or REALIZE_BUDGET, seed)
    if P is not None:
        dec = dec.with_certificate(P)
    else:
        notes.append("certificate search exhausted its budget")
    return LinfResult(val, val, True, dec, tuple(notes))


# ---------------------------------------------------------------------------
# the trees T_d and complete graphs K_{2d}

def t_d_tree(d):
    """Double star on ``2d`` vertices: centres 0 and 1, each with ``d-1`` leaves."""
    if d < 2:
        raise ValueError("T_d needs d >= 2")
    edges = [(0, 1)]
    edges += [(0, k) for k in range(2, d + 1)]
    edges += [(1, k) for k in range(d + 1, 2 * d)]
    return Graph(2 * d, edges)


def grone_polynomial(d, x):
    return x ** 3 - (2 * d + 2) * x ** 2 + (d * d + 2 * d + 2) * x - 2 * d


def grone_root(d, tol=1e-12):
    """Smallest root of ``x^3 - (2d+2)x^2 + (d^2+2d+2)x - 2d`` by bisection on [0, 1]."""
    if d < 2:
        raise ValueError("d must be at least 2")
    lo, hi = 0.0, 1.0
    # p(0) = -2d < 0 and p(1) = (d-1)^2 > 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if grone_polynomial(d, mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def k2d_tree_partition(d):
    """Partition of ``K_{2d}`` into ``d`` copies of ``T_d``.

    Vertices ``2i`` and ``2i+1`` are the centres of part ``i``.  For
    ``i < j`` the four edges between the centre pairs split as a perfect
    matching ``{2i~2j, 2i+1~2j+1}`` in part ``i`` and the crossing matching
    in part ``j``.
    """
    parts = [[] for _ in range(d)]
    for i in range(d):
        a_i, b_i = 2 * i, 2 * i + 1
        parts[i].append((a_i, b_i))
        for j in range(i + 1, d):
            a_j, b_j = 2 * j, 2 * j + 1
            parts[i] += [(a_i, a_j), (b_i, b_j)]
            parts[j] += [(a_i, b_j), (b_i, a_j)]
    return Decomposition(graphs.complete_graph(2 * d), parts)


def k2d_tree_placement(d, alpha=0.1, beta=0.2):
    """Explicit placement realizing :func:`k2d_tree_partition`.

    Centre ``a_k`` sits at ``+e_k`` and ``b_k`` at ``-e_k``, offset in every
    other coordinate ``m`` by ``+alpha``/``-alpha`` (``a_k``, ``m > k``/``m < k``)
    and ``-beta``/``+beta`` (``b_k``).
    """
    if not 0 < alpha < 0.5 or not 0 < beta < 0.5:
        raise ValueError("offsets must lie in (0, 0.5)")
    P = np.zeros((2 * d, d))
    for k in range(d):
        for m in range(d):
            if m == k:
                P[2 * k, m], P[2 * k + 1, m] = 1.0, -1.0
            elif m > k:
                P[2 * k, m], P[2 * k + 1, m] = alpha, -beta
            else:
                P[2 * k, m], P[2 * k + 1, m] = -alpha, beta
    return P


def k2d_decomposition_placement(d, budget=None, seed=0):
    """Framework ``(K_{2d}, p)`` in l_inf^d whose monochrome parts are all ``T_d``.

    The placement is found by :func:`realize_decomposition` on the partition
    of :func:`k2d_tree_partition`.
    """
    dec = k2d_tree_partition(d)
    P = realize_decomposition(dec.graph, dec.parts, budget or REALIZE_BUDGET, seed)
    if P is None:
        raise BudgetExceededError(f"no T_{d} decomposition placement found within budget")
    return fw.make_framework(dec.graph, norms.linf(d), P)


def labelled_copies(g, pattern):
    """Edge sets of all copies of ``pattern`` inside ``g`` on the same vertex set.

    Brute force over vertex permutations, so only for ``n <= 8`` or so.
    """
    if pattern.n != g.n:
        raise ValueError("pattern must have as many vertices as g")
    present = set(g.edges)
    seen = set()
    for perm in itertools.permutations(range(g.n)):
        E = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in pattern.edges))
        if E in seen or not all(e in present for e in E):
            continue
        seen.add(E)
        yield E


def copy_decompositions(g, pattern, d, max_nodes=10 ** 6, pin_first=None):
    """Yield partitions of ``g`` into ``d`` edge-disjoint copies of ``pattern``.

    Exact cover by backtracking, always branching on the uncovered edge with
    the fewest compatible copies (and backtracking when some edge has none).
    Partitions differing only in part order are produced once.

    With ``pin_first`` (the default for complete ``g``) the first part is
    fixed to ``pattern`` with its own labelling.  Every copy of ``pattern``
    in a complete graph is a relabelling of that one, so every partition is
    still produced up to relabelling the vertices, and running to completion
    without output proves that no partition exists.
    """
    if pin_first is None:
        pin_first = g.is_complete()
    if g.m != d * pattern.m:
        return
    if g.m > 62:
        raise ValueError("copy decompositions support at most 62 edges")
    index = g.edge_index
    masks = np.array(sorted({sum(1 << index[e] for e in E) for E in labelled_copies(g, pattern)}),
                     dtype=np.int64)
    bits = (masks[:, None] >> np.arange(g.m)) & 1 == 1
    full = (1 << g.m) - 1
    visited = 0

    def rec(covered, alive, acc):
        nonlocal visited
        visited += 1
        if visited > max_nodes:
            raise BudgetExceededError("copy decomposition search exceeded its budget")
        if covered == full:
            yield tuple(acc)
            return
        counts = bits[alive].sum(axis=0)
        free = np.array([not covered >> k & 1 for k in range(g.m)])
        counts = np.where(free, counts, np.iinfo(np.int64).max)
        k = int(np.argmin(counts))
        if counts[k] == 0:
            return
        for idx in alive[bits[alive, k]]:
            M = int(masks[idx])
            rest = alive[(masks[alive] & M) == 0]
            acc.append(M)
            yield from rec(covered | M, rest, acc)
            acc.pop()

    if pin_first:
        M = sum(1 << index[e] for e in pattern.edges)
        start = rec(M, np.flatnonzero((masks & M) == 0), [M])
    else:
        start = rec(0, np.arange(len(masks)), [])
    for combo in start:
        yield Decomposition(g, [[g.edges[k] for k in range(g.m) if M >> k & 1] for M in combo])
