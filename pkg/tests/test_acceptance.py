"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the per-criterion lines
are printed even when output capture is on.
"""
import contextlib
import math
import time

import numpy as np
import pytest

from normconn import bounds, catalog, explore, graphs, linalg, linf, norms
from normconn import frameworks as fw
from normconn.errors import NonSmoothEdgeError
from normconn.frameworks import SearchBudget

PSI = np.array([[1.0, -1.0], [1.0, 1.0]])


@pytest.fixture
def criterion(capsys):
    """Context manager that records violations and prints one verdict line.

    Yields a list; append a description of every violation to it.  Any
    exception or non-empty list counts as FAIL.
    """
    @contextlib.contextmanager
    def run(label):
        violations = []
        start = time.perf_counter()
        try:
            yield violations
        except BaseException as exc:
            violations.append(f"{type(exc).__name__}: {exc}")
            raise
        finally:
            elapsed = time.perf_counter() - start
            verdict = "FAIL" if violations else "PASS"
            with capsys.disabled():
                detail = "; ".join(map(str, violations[:3]))
                print(f"\n[{verdict}] criterion {label} ({elapsed:.1f}s){': ' + detail if detail else ''}")
        assert not violations, violations
    return run


def _valid_framework(g, space, rng, scale=1.0):
    for _ in range(500):
        try:
            F = fw.make_framework(g, space, scale * rng.random((g.n, space.d)))
        except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
            continue
        if fw.has_full_affine_span(F.points):
            return F
    raise AssertionError("no valid placement sampled")


def _eig(M):
    return linalg.fast_eigenvalues(M)


# ---------------------------------------------------------------------------


def test_closed_form_spectra(criterion):
    with criterion("1 closed-form spectra of P_n, C_n, K_n for 2 <= n <= 12") as bad:
        start = time.perf_counter()
        for n in range(2, 13):
            cases = [("P", graphs.path_graph(n), 2 * (1 - math.cos(math.pi / n))),
                     ("K", graphs.complete_graph(n), float(n))]
            if n >= 3:
                cases.append(("C", graphs.cycle_graph(n), 2 * (1 - math.cos(2 * math.pi / n))))
            for name, g, expected in cases:
                got = graphs.algebraic_connectivity(g)
                if abs(got - expected) > 1e-9:
                    bad.append(f"a({name}_{n}) = {got!r}, expected {expected!r}")
        if time.perf_counter() - start >= 1.0:
            bad.append("runtime exceeded 1 s")


EXACT_CASES = [
    ("K_4", 4, 2, 2 - math.sqrt(2), None),
    ("K_5", 5, 2, (5 - math.sqrt(13)) / 2, None),
    ("K_6", 6, 2, 1.0, 10.0),
    ("K_6", 6, 3, None, 600.0),
]


@pytest.mark.parametrize("name,n,d,expected,limit", EXACT_CASES,
                         ids=[f"{c[0]}-linf{c[2]}" for c in EXACT_CASES])
def test_exact_linf_values(criterion, name, n, d, expected, limit):
    if expected is None:
        # smallest root of x^3 - 8x^2 + 17x - 6, computed independently of grone_root
        expected = float(min(r.real for r in np.roots([1, -8, 17, -6]) if abs(r.imag) < 1e-12))
    with criterion(f"2 exact a({name}, l_inf^{d})") as bad:
        g = graphs.complete_graph(n)
        start = time.perf_counter()
        res = linf.exact_linf_connectivity(g, d, seed=0)
        elapsed = time.perf_counter() - start
        if not res.exact:
            bad.append("not exact-flagged")
        if abs(res.lower - expected) > 1e-6:
            bad.append(f"value {res.lower!r} vs {expected!r}")
        cert = res.best_decomposition.certificate
        if cert is None:
            bad.append("no certificate")
        else:
            F = fw.make_framework(g, norms.linf(d), cert)
            if linf.monochrome_decompose(F).parts != res.best_decomposition.parts:
                bad.append("certificate does not realize the decomposition")
            lam = fw.rigidity_report(F).rigidity_eigenvalue
            if abs(lam - res.lower) > 1e-9:
                bad.append(f"certificate eigenvalue {lam!r} vs value {res.lower!r}")
        if limit is not None and elapsed >= limit:
            bad.append(f"runtime {elapsed:.1f}s exceeds {limit}s")


def test_k5_example_end_to_end(criterion):
    with criterion("3 K_5 worked example: bull/bull parts and block similarity") as bad:
        g, space = graphs.complete_graph(5), norms.linf(2)
        # the integer placement has a coordinate tie on edge (2, 4)
        try:
            fw.make_framework(g, space, catalog.K5_BULL_POINTS)
            bad.append("printed placement unexpectedly valid")
        except NonSmoothEdgeError as exc:
            if exc.edge != (2, 4):
                bad.append(f"tie reported on {exc.edge}, expected (2, 4)")
        F = fw.make_framework(g, space, catalog.K5_BULL_POINTS_NUDGED)
        dec = linf.monochrome_decompose(F)
        bull = graphs.bull_graph()
        for h in dec.subgraphs():
            if not graphs.is_isomorphic(h, bull):
                bad.append(f"part {h.edges} is not a bull graph")
        value = (5 - math.sqrt(13)) / 2
        lam = fw.rigidity_report(F).rigidity_eigenvalue
        if abs(lam - value) > 1e-9:
            bad.append(f"rigidity eigenvalue {lam!r}")
        blocks = linalg.block_diag(*[graphs.laplacian(h) for h in dec.subgraphs()])
        S = linalg.perfect_shuffle(2, 5)
        gap = np.max(np.abs(S @ blocks @ S.T - fw.framework_laplacian(F)))
        if gap > 1e-9:
            bad.append(f"block similarity off by {gap:.2e}")
        if not linf.verify_block_similarity(F, 1e-9):
            bad.append("verify_block_similarity rejected the placement")


PROPERTY_SPACES = [norms.linf(2), norms.linf(3), norms.l1(2), norms.l2(2), norms.lp(1.5, 3)]


def _framework_properties(F, rng, bad):
    """Every stated invariant of one framework; violations are appended to ``bad``."""
    space, g, n, d = F.space, F.graph, F.n, F.d
    tag = f"{space.descriptor()} n={n} m={g.m}"
    k = norms.k_dimension(space)
    L = fw.framework_laplacian(F)
    R = fw.rigidity_matrix(F)
    vals = _eig(L)
    if vals[0] < -1e-9:
        bad.append(f"{tag}: not PSD ({vals[0]:.2e})")
    if np.any(np.abs(vals[:k]) >= 1e-9):
        bad.append(f"{tag}: kernel eigenvalues {vals[:k]}")
    if np.max(np.abs(R.T @ R - L)) > 1e-9:
        bad.append(f"{tag}: block formula differs from R^T R")
    # Laplacian of a random two-colouring sums to the whole
    colour = rng.integers(0, 2, g.m)
    subs = []
    for c in (0, 1):
        H = graphs.Graph(n, [e for e, x in zip(g.edges, colour) if x == c])
        subs.append(fw.framework_laplacian(fw.make_framework(H, space, F.points)))
    scale = max(1.0, float(np.max(np.abs(L))))
    if np.max(np.abs(subs[0] + subs[1] - L)) > 4 * n * np.finfo(float).eps * scale:
        bad.append(f"{tag}: Laplacian sum over a two-colouring differs")
    # Weyl: lambda_i(A) + lambda_min(B) <= lambda_i(A + B) <= lambda_i(A) + lambda_max(B)
    a, b = _eig(subs[0]), _eig(subs[1])
    if np.any(vals < a + b[0] - 1e-9) or np.any(vals > a + b[-1] + 1e-9):
        bad.append(f"{tag}: Weyl inequalities violated")
    # Ostrowski: lambda_i(S L S^T) = theta_i lambda_i(L), theta_i in the spectrum of S^T S
    S = np.eye(n * d) + 0.3 * rng.standard_normal((n * d, n * d)) / math.sqrt(n * d)
    ss = _eig(S @ S.T)
    cong = _eig(linalg.congruence(L, S))
    if np.any(cong < ss[0] * vals - 1e-9) or np.any(cong > ss[-1] * vals + 1e-9):
        bad.append(f"{tag}: Ostrowski sandwich violated")
    # relabelling vertices is a permutation congruence
    perm = rng.permutation(n)
    H = graphs.Graph(n, [(int(perm[u]), int(perm[v])) for u, v in g.edges])
    Q = np.empty_like(F.points)
    Q[perm] = F.points
    relabelled = _eig(fw.framework_laplacian(fw.make_framework(H, space, Q)))
    if np.max(np.abs(relabelled - vals)) > 1e-9:
        bad.append(f"{tag}: spectrum not invariant under relabelling")
    if space.is_linf:
        matrix_ok, _, lam, low = linf.block_similarity(F)
        if not matrix_ok or abs(vals[d] - low) > 1e-9:
            bad.append(f"{tag}: lambda_(d+1) = {vals[d]!r} but min a(G_i) = {low!r}")
    if norms.facet_functionals(space) is not None and g.is_complete():
        for h in linf.monochrome_decompose(F).subgraphs():
            if graphs.find_odd_hole(h) is not None:
                bad.append(f"{tag}: monochrome part {h.edges} has an odd hole")
            if d == 2 and not graphs.is_perfect_small(h):
                bad.append(f"{tag}: monochrome part {h.edges} is not perfect")
    if space.kind == "lp" and space.p == 1.0 and d == 2:
        Finf = fw.make_framework(g, norms.linf(2), F.points @ PSI.T)
        T = np.kron(np.eye(n), PSI)
        if np.max(np.abs(linalg.congruence(fw.framework_laplacian(Finf), T) - L)) > 1e-9:
            bad.append(f"{tag}: L(l_1) != (I x Psi)^T L(l_inf) (I x Psi)")


def test_property_suite(criterion):
    rng = np.random.default_rng(20240601)
    with criterion("4 property suite over 500 random frameworks") as bad:
        count = 0
        for space in PROPERTY_SPACES:
            for i in range(100):
                n = int(rng.integers(space.d + 1, 9))
                if i % 4 == 0:
                    g = graphs.complete_graph(n)
                else:
                    g = graphs.random_graph(n, float(rng.uniform(0.3, 1.0)), rng)
                _framework_properties(_valid_framework(g, space, rng), rng, bad)
                count += 1
        if count != 500:
            bad.append(f"only {count} frameworks checked")


SWEEP_SPACES = [norms.linf(2), norms.linf(3), norms.l1(2), norms.lp(1.5, 3)]


def sweep_corpus(count=200, seed=7):
    corpus = dict(catalog.named_graphs())
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(4, 9))
        corpus[f"random-{i}"] = graphs.random_graph(n, float(rng.uniform(0.3, 0.9)), rng)
    return corpus


def test_bound_sweep(criterion):
    with criterion("5 bound sweep over named graphs and 200 random graphs") as bad:
        start = time.perf_counter()
        names = set()
        for i, (label, g) in enumerate(sweep_corpus().items()):
            for space in SWEEP_SPACES:
                for check in bounds.check_suite(g, space, seed=i):
                    names.add(check.name)
                    if check.slack < -1e-9:
                        bad.append(f"{label} {space.descriptor()} {check.name}: slack {check.slack:.3e}")
        expected = {"normed_space_upper_bound", "lp_upper_bound", "linf_degree_bound",
                    "linf_average_bound", "linf_dimension_monotonicity", "linf_path_lower_bound",
                    "min_diagonal_eigen_bound", "vertex_deletion", "weighted_monotonicity",
                    "trace_bound", "linf_sparse_bound", "minimally_rigid_bound", "box_product_identity"}
        missing = expected - names
        if missing:
            bad.append(f"checks never exercised: {sorted(missing)}")
        if time.perf_counter() - start >= 300:
            bad.append("runtime exceeded 5 minutes")


def test_octahedron_and_k7(criterion):
    with criterion("6 K_2,2,2 with two C_6 parts; K_7 extension edge-redundant") as bad:
        dec = bounds.octahedral_placement(seed=0)
        F = fw.make_framework(dec.graph, norms.linf(2), dec.certificate)
        c6 = graphs.cycle_graph(6)
        parts = linf.monochrome_decompose(F).subgraphs()
        if not all(graphs.is_isomorphic(h, c6) for h in parts):
            bad.append("monochrome parts are not two 6-cycles")
        lam = fw.rigidity_report(F).rigidity_eigenvalue
        if abs(lam - 1.0) > 1e-9:
            bad.append(f"rigidity eigenvalue {lam!r}")
        # K_6 on the same points, plus a vertex near (0.5, 0.9)
        F6 = fw.make_framework(graphs.complete_graph(6), norms.linf(2), dec.certificate)
        F7 = bounds.extend_placement(F6.points, norms.linf(2), seed=0)
        if F7.n != 7 or not F7.graph.is_complete():
            bad.append("extension is not K_7")
        if np.linalg.norm(F7.points[6] - np.array([0.5, 0.9])) > 0.5:
            bad.append(f"extra vertex at {F7.points[6]}")
        if not bounds.edge_redundant_test(F7).rigid:
            bad.append("K_7 framework is not edge-redundantly rigid")


@pytest.mark.parametrize("psi,label", [(PSI, "Psi"), (PSI / 2, "Psi/2")])
def test_isometry_scaling(criterion, psi, label):
    rng = np.random.default_rng(11)
    with criterion(f"7 factor-1/2 eigenvalue relation under {label}: l_1^2 -> l_inf^2") as bad:
        for _ in range(100):
            n = int(rng.integers(3, 9))
            g = graphs.random_graph(n, float(rng.uniform(0.4, 1.0)), rng)
            F1 = _valid_framework(g, norms.l1(2), rng)
            Finf = fw.make_framework(g, norms.linf(2), F1.points @ psi.T)
            l1 = _eig(fw.framework_laplacian(F1))
            linf_ = _eig(fw.framework_laplacian(Finf))
            if np.max(np.abs(linf_ - 0.5 * l1)) > 1e-9:
                bad.append(f"n={n}: spectra not in ratio 1/2")
            if abs(fw.rigidity_eigenvalue(Finf) - 0.5 * fw.rigidity_eigenvalue(F1)) > 1e-9:
                bad.append(f"n={n}: rigidity eigenvalues not in ratio 1/2")


def test_negative_results(criterion):
    rng = np.random.default_rng(5)
    with criterion("8 K_5 in l_inf^2 never edge-redundant, no C_5 part; explorers claim nothing") as bad:
        g, c5 = graphs.complete_graph(5), graphs.cycle_graph(5)
        for i in range(100):
            F = _valid_framework(g, norms.linf(2), rng)
            if bounds.edge_redundant_test(F).rigid:
                bad.append(f"sample {i} is edge-redundantly rigid")
            if any(graphs.is_isomorphic(h, c5) for h in linf.monochrome_decompose(F).subgraphs()):
                bad.append(f"sample {i} has a C_5 part")
        found = explore.k2d(4, SearchBudget(restarts=8, steps=100, candidates=10 ** 4), seed=0)
        if found.values.get("best realized min a(G_i)", 0.0) < linf.grone_root(4) - 1e-9:
            bad.append("K_8 lower bound below a(T_4)")
        if "exact" in found.values:
            bad.append("k2d harness claimed an exact value")
        h = explore.h8(4, SearchBudget(restarts=4, steps=50), seed=0)
        if h.status not in (explore.REALIZED, explore.NOT_FOUND):
            bad.append(f"h8 status {h.status!r}")
        if any("impossib" in note.lower() for note in h.notes):
            bad.append("h8 harness claimed impossibility")
