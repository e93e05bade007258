"""Finite simple graphs and their Laplacians.

Vertices are ``0..n-1``; an edge is a sorted pair ``(u, v)`` with ``u < v``.
Everything combinatorial here is exhaustive and intended for small graphs
(tens of vertices at most, ten or so for the exponential searches).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from . import linalg
from .errors import (
    DisconnectedError,
    NegativeWeightError,
    NonPSDWeightError,
    TooLargeError,
    TooSmallError,
    WrongEdgeCountError,
)

HOLE_SEARCH_LIMIT = 12
BRUTE_FORCE_CONNECTIVITY_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normal = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normal.append((min(u, v), max(u, v)))
        ordered = tuple(sorted(normal))
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", ordered)

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def neighbors(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self):
        return {e: k for k, e in enumerate(self.edges)}

    def degree(self, v):
        return len(self.neighbors[v])

    def degrees(self):
        return [len(a) for a in self.neighbors]

    def has_edge(self, u, v):
        return v in self.neighbors[u]

    def adjacency_matrix(self):
        A = np.zeros((self.n, self.n))
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1.0
        return A

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def complement(self):
        present = set(self.edges)
        return Graph(self.n, [e for e in itertools.combinations(range(self.n), 2)
                              if e not in present])

    def spanning_subgraph(self, edges):
        """Graph on the same vertex set with the given subset of edges."""
        return Graph(self.n, edges)

    def without_edges(self, edges):
        drop = {tuple(sorted(e)) for e in edges}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices):
        """Induced subgraph, relabelled to ``0..k-1`` in the given vertex order."""
        vertices = list(vertices)
        relabel = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), [(relabel[u], relabel[v]) for u, v in self.edges
                                     if u in relabel and v in relabel])

    def delete_vertex(self, v):
        return self.induced([w for w in range(self.n) if w != v])

    def components(self, removed=()):
        removed = set(removed)
        seen = set(removed)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self, removed=()):
        return len(self.components(removed)) <= 1

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# named graphs

def empty_graph(n):
    return Graph(n, ())


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star_graph(n):
    """Star on ``n`` vertices with centre 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_multipartite(*sizes):
    labels = [k for k, s in enumerate(sizes) for _ in range(s)]
    n = len(labels)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2)
                     if labels[u] != labels[v]])


def octahedral_graph():
    """K_{2,2,2}; the three non-edges are {0,1}, {2,3}, {4,5}."""
    return complete_multipartite(2, 2, 2)


def bull_graph():
    """Triangle 0-1-2 with pendant vertices 3 (on 1) and 4 (on 2)."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def random_graph(n, p, rng):
    """Erdos-Renyi G(n, p) drawn from a numpy Generator."""
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


# ---------------------------------------------------------------------------
# Laplacians

def laplacian(g):
    """Graph Laplacian: degrees on the diagonal, -1 on edges."""
    if g.n < 1:
        raise TooSmallError("Laplacian needs at least one vertex")
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
        L[u, u] += 1.0
        L[v, v] += 1.0
    return L


def oriented_incidence(g, orientation=None):
    """Oriented incidence matrix, rows indexed by edges, columns by vertices.

    ``orientation`` maps each edge ``(u, v)`` to a ``(source, range)`` pair.
    Omitted edges are oriented from the smaller endpoint.
    """
    orientation = orientation or {}
    C = np.zeros((g.m, g.n))
    for k, e in enumerate(g.edges):
        s, r = orientation.get(e, e)
        if {s, r} != set(e):
            raise ValueError(f"orientation {s, r} does not match edge {e}")
        C[k, s] = 1.0
        C[k, r] = -1.0
    return C


def algebraic_connectivity(g, method="jacobi"):
    """Second smallest Laplacian eigenvalue ``a(G)``."""
    if g.n < 2:
        raise TooSmallError("algebraic connectivity needs at least two vertices")
    values = linalg.sym_eigenvalues(laplacian(g), method=method).values
    return float(max(values[1], 0.0))


def _check_weight_keys(g, weights):
    extra = {tuple(sorted(e)) for e in weights} - set(g.edges)
    if extra:
        raise ValueError(f"weights given for non-edges {sorted(extra)}")


def weighted_laplacian(g, w):
    """Laplacian of a scalar-weighted graph; ``w`` maps edges to weights.

    Edges missing from ``w`` get weight zero.
    """
    _check_weight_keys(g, w)
    L = np.zeros((g.n, g.n))
    for e, x in w.items():
        u, v = sorted(e)
        x = float(x)
        if x < 0:
            raise NegativeWeightError(f"edge {u}-{v} has weight {x}")
        L[u, v] -= x
        L[v, u] -= x
        L[u, u] += x
        L[v, v] += x
    return L


def matrix_weighted_laplacian(g, W, d=None, eps=linalg.EPS):
    """Laplacian of a matrix-weighted graph, in vertex-major ``d x d`` blocks.

    ``W`` maps edges to symmetric PSD ``d x d`` matrices; row/column
    ``v*d + i`` belongs to vertex ``v`` and coordinate ``i``.
    """
    _check_weight_keys(g, W)
    if d is None:
        if not W:
            raise ValueError("cannot infer d from empty weights")
        d = np.asarray(next(iter(W.values()))).shape[0]
    L = np.zeros((g.n * d, g.n * d))
    for e, M in W.items():
        u, v = sorted(e)
        M = linalg.as_symmetric(M, name=f"weight on {u}-{v}")
        if M.shape != (d, d):
            raise ValueError(f"weight on {u}-{v} is not {d}x{d}")
        if np.linalg.eigvalsh(M)[0] < -eps:
            raise NonPSDWeightError(f"weight on {u}-{v} is not positive semidefinite")
        su, sv = slice(u * d, (u + 1) * d), slice(v * d, (v + 1) * d)
        L[su, su] += M
        L[sv, sv] += M
        L[su, sv] -= M
        L[sv, su] -= M
    return L


# ---------------------------------------------------------------------------
# connectivity

def vertex_connectivity(g):
    """Minimum number of vertices whose removal disconnects ``g``.

    Complete graphs return ``n - 1``.  Exhaustive separator search up to
    twelve vertices, max-flow with vertex splitting beyond.
    """
    if g.n < 2:
        raise TooSmallError("vertex connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    if g.n <= BRUTE_FORCE_CONNECTIVITY_LIMIT:
        for k in range(1, g.n - 1):
            for S in itertools.combinations(range(g.n), k):
                if not g.is_connected(removed=S):
                    return k
        return g.n - 1
    return _vertex_connectivity_flow(g)


def edge_connectivity(g):
    """Minimum number of edges whose removal disconnects ``g``."""
    if g.n < 2:
        raise TooSmallError("edge connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    if g.n <= BRUTE_FORCE_CONNECTIVITY_LIMIT:
        best = g.m
        # every cut separates vertex 0 from something
        others = range(1, g.n)
        for k in range(0, g.n - 1):
            for extra in itertools.combinations(others, k):
                side = {0, *extra}
                cut = sum(1 for u, v in g.edges if (u in side) != (v in side))
                best = min(best, cut)
        return best
    return min(_max_flow(_edge_network(g), 0, t) for t in range(1, g.n))


def _max_flow(cap, s, t):
    return int(maximum_flow(csr_matrix(cap), s, t).flow_value)


def _edge_network(g):
    cap = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges:
        cap[u, v] = cap[v, u] = 1
    return cap


def _vertex_connectivity_flow(g):
    # vertex x splits into x_in = 2x and x_out = 2x + 1
    big = g.n
    cap = np.zeros((2 * g.n, 2 * g.n), dtype=np.int32)
    for x in range(g.n):
        cap[2 * x, 2 * x + 1] = 1
    for u, v in g.edges:
        cap[2 * u + 1, 2 * v] = big
        cap[2 * v + 1, 2 * u] = big
    best = g.n - 1
    for s, t in itertools.combinations(range(g.n), 2):
        if g.has_edge(s, t):
            continue
        best = min(best, _max_flow(cap, 2 * s + 1, 2 * t))
    return best


def cut_vertices(g):
    """Vertices whose deletion disconnects a connected graph."""
    if not g.is_connected():
        raise DisconnectedError("cut vertices are defined here for connected graphs")
    return {v for v in range(g.n) if not g.is_connected(removed=(v,))}


# ---------------------------------------------------------------------------
# holes and perfection

def _find_chordless_cycle(g, accept):
    """DFS over chordless paths; return the first chordless cycle accepted.

    Each cycle is grown from its smallest vertex ``s``.  A path stays
    chordless when every new vertex touches only the current end (and ``s``
    exactly when it closes the cycle).
    """
    adj = g.neighbors
    for s in range(g.n):
        stack = [[s]]
        while stack:
            path = stack.pop()
            last = path[-1]
            interior = path[1:-1]
            for w in sorted(adj[last], reverse=True):
                if w <= s or w in path:
                    continue
                if any(w in adj[x] for x in interior):
                    continue
                if len(path) >= 2 and s in adj[w]:
                    cycle = path + [w]
                    if len(cycle) >= 4 and accept(len(cycle)):
                        return cycle
                    continue
                stack.append(path + [w])
    return None


def find_odd_hole(g):
    """An induced odd cycle of length at least five, or ``None``."""
    if g.n > HOLE_SEARCH_LIMIT:
        raise TooLargeError(f"hole search limited to {HOLE_SEARCH_LIMIT} vertices")
    return _find_chordless_cycle(g, lambda k: k >= 5 and k % 2 == 1)


def find_odd_antihole(g):
    """Vertex set of an induced odd antihole, or ``None``."""
    return find_odd_hole(g.complement())


def is_perfect_small(g):
    """Perfection via the absence of odd holes and odd antiholes."""
    if g.n > HOLE_SEARCH_LIMIT:
        raise TooLargeError(f"perfection test limited to {HOLE_SEARCH_LIMIT} vertices")
    return find_odd_hole(g) is None and find_odd_antihole(g) is None


# ---------------------------------------------------------------------------
# products, trees, isomorphism

def cartesian_product(g1, g2):
    """Box product; vertex ``(a, b)`` becomes ``a * g2.n + b``."""
    n2 = g2.n
    edges = []
    for a in range(g1.n):
        for u, v in g2.edges:
            edges.append((a * n2 + u, a * n2 + v))
    for b in range(n2):
        for u, v in g1.edges:
            edges.append((u * n2 + b, v * n2 + b))
    return Graph(g1.n * n2, edges)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _connects(n, edges):
    uf = _UnionFind(n)
    joins = sum(uf.union(u, v) for u, v in edges)
    return joins == n - 1


def spanning_trees(g):
    """Yield every spanning tree of ``g`` as a tuple of edges.

    Include/exclude recursion over the sorted edge list, so trees come out in
    lexicographic order of their edge tuples.
    """
    n, edges = g.n, g.edges
    if n == 0:
        return
    if n == 1:
        yield ()
        return
    if not g.is_connected():
        return

    def rec(i, chosen):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if i == len(edges):
            return
        u, v = edges[i]
        # include edge i when it closes no cycle
        uf = _UnionFind(n)
        for a, b in chosen:
            uf.union(a, b)
        if uf.find(u) != uf.find(v):
            chosen.append(edges[i])
            yield from rec(i + 1, chosen)
            chosen.pop()
        # exclude edge i when the rest can still span
        if _connects(n, chosen + list(edges[i + 1:])):
            yield from rec(i + 1, chosen)

    yield from rec(0, [])


def spanning_tree_pairs(g):
    """Spanning trees ``T`` of ``g`` whose complement is also a spanning tree."""
    if g.m != 2 * (g.n - 1):
        raise WrongEdgeCountError(f"need 2(n-1) = {2 * (g.n - 1)} edges, got {g.m}")
    for T in spanning_trees(g):
        rest = [e for e in g.edges if e not in set(T)]
        if _connects(g.n, rest):
            yield T


def is_isomorphic(g, h):
    """Backtracking isomorphism test with degree pruning (small graphs only)."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    dg, dh = g.degrees(), h.degrees()
    order = sorted(range(n), key=lambda v: -dg[v])
    mapping = {}
    used = set()

    def rec(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if w in used or dh[w] != dg[v]:
                continue
            if all(g.has_edge(v, x) == h.has_edge(w, mapping[x]) for x in order[:k]):
                mapping[v] = w
                used.add(w)
                if rec(k + 1):
                    return True
                used.discard(w)
                del mapping[v]
        return False

    return rec(0)
