import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from normconn import catalog, graphs, linalg, linf, norms
from normconn import frameworks as fw
from normconn.errors import CoincidentEndpointsError, NonSmoothEdgeError, TooSmallError
from normconn.frameworks import SearchBudget

from strategies import small_graphs

SPACES = [norms.linf(2), norms.linf(3), norms.l1(2), norms.l2(2), norms.lp(1.5, 3)]


def random_framework(g, space, rng):
    for _ in range(100):
        try:
            return fw.make_framework(g, space, rng.random((g.n, space.d)))
        except (NonSmoothEdgeError, CoincidentEndpointsError):
            continue
    raise AssertionError("no valid placement sampled")


class TestValidation:
    def test_coincident_endpoints(self):
        with pytest.raises(CoincidentEndpointsError) as info:
            fw.make_framework(graphs.path_graph(3), norms.l2(2), [[0, 0], [1, 1], [1, 1]])
        assert info.value.edge == (1, 2)

    def test_printed_k5_placement_has_a_tie(self):
        with pytest.raises(NonSmoothEdgeError) as info:
            fw.make_framework(graphs.complete_graph(5), norms.linf(2), catalog.K5_BULL_POINTS)
        assert info.value.edge == (2, 4)
        assert "2-4" in str(info.value)

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            fw.make_framework(graphs.path_graph(3), norms.l2(2), np.zeros((3, 3)))

    def test_nonfinite(self):
        with pytest.raises(ValueError):
            fw.make_framework(graphs.path_graph(2), norms.l2(2), [[0, 0], [np.inf, 1]])


class TestRigidityMatrix:
    def test_row_layout(self):
        F = fw.make_framework(graphs.path_graph(2), norms.linf(2), [[0.0, 0.0], [-3.0, 1.0]])
        # p_0 - p_1 = (3, -1): support functional e_1 at vertex 0, -e_1 at vertex 1
        np.testing.assert_array_equal(fw.rigidity_matrix(F), [[1.0, 0.0, -1.0, 0.0]])

    def test_rows_determined_up_to_sign(self):
        # reversing every edge orientation flips every row and leaves L alone
        F = fw.make_framework(graphs.path_graph(2), norms.linf(2), [[0.0, 0.0], [-3.0, 1.0]])
        G = fw.make_framework(graphs.path_graph(2), norms.linf(2), [[-3.0, 1.0], [0.0, 0.0]])
        R, S = fw.rigidity_matrix(F), fw.rigidity_matrix(G)
        assert np.array_equal(R, S) or np.array_equal(R, -S)
        np.testing.assert_array_equal(R.T @ R, S.T @ S)

    @pytest.mark.parametrize("space", SPACES, ids=[s.descriptor() for s in SPACES])
    def test_laplacian_is_gram_of_rigidity_matrix(self, space, rng):
        g = graphs.random_graph(7, 0.6, rng)
        F = random_framework(g, space, rng)
        R = fw.rigidity_matrix(F)
        np.testing.assert_allclose(fw.framework_laplacian(F), R.T @ R, atol=1e-12)

    @pytest.mark.parametrize("space", SPACES, ids=[s.descriptor() for s in SPACES])
    def test_trivial_flexes_in_kernel(self, space, rng):
        F = random_framework(graphs.complete_graph(6), space, rng)
        T = fw.trivial_flex_basis(F)
        assert T.shape[1] == norms.k_dimension(space)
        assert np.max(np.abs(fw.rigidity_matrix(F) @ T)) < 1e-9

    def test_matrix_weighted_view(self, rng):
        F = random_framework(graphs.complete_graph(5), norms.lp(1.5, 3), rng)
        L = graphs.matrix_weighted_laplacian(F.graph, fw.edge_weights(F), 3)
        np.testing.assert_allclose(L, fw.framework_laplacian(F), atol=1e-12)


class TestRigidityEigenvalue:
    def test_equilateral_triangle(self):
        # the 3 x 3 Gram matrix of the rows is 2I with off-diagonal entries of size 1/2
        P = [[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]]
        rep = fw.rigidity_report(fw.make_framework(graphs.complete_graph(3), norms.l2(2), P))
        assert rep.rigidity_eigenvalue == pytest.approx(1.5, abs=1e-12)
        assert rep.infinitesimally_rigid and rep.kernel_dim == 3

    def test_nudged_k5_example(self):
        F = fw.make_framework(graphs.complete_graph(5), norms.linf(2), catalog.K5_BULL_POINTS_NUDGED)
        assert fw.rigidity_report(F).rigidity_eigenvalue == pytest.approx(catalog.BULL_VALUE, abs=1e-9)

    def test_collinear_points_are_flexible_in_the_plane(self):
        P = [[0.0, 0.0], [1.0, 0.1], [2.0, 0.2]]
        F = fw.make_framework(graphs.complete_graph(3), norms.l2(2), P)
        rep = fw.rigidity_report(F)
        assert not rep.full_affine_span
        assert not rep.infinitesimally_rigid

    def test_path_is_flexible(self, rng):
        F = random_framework(graphs.path_graph(4), norms.linf(2), rng)
        assert not fw.is_infinitesimally_rigid(F)
        assert fw.rigidity_eigenvalue(F) == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("space", SPACES, ids=[s.descriptor() for s in SPACES])
    def test_jacobi_and_lapack_routes_agree(self, space, rng):
        F = random_framework(graphs.complete_graph(6), space, rng)
        a = fw.rigidity_report(F, method="jacobi").spectrum
        b = fw.rigidity_report(F, method="lapack").spectrum
        np.testing.assert_allclose(a, b, atol=1e-9)

    @given(small_graphs(min_n=4, max_n=7), st.integers(0, 2 ** 32 - 1))
    def test_edge_deletion_is_monotone(self, g, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(g, norms.l1(2), rng)
        for e in g.edges[:3]:
            H = fw.delete_edge(F, e)
            assert fw.rigidity_eigenvalue(H) <= fw.rigidity_eigenvalue(F) + 1e-9

    @given(st.integers(0, 2 ** 32 - 1))
    def test_translation_and_scaling_invariance(self, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(graphs.complete_graph(5), norms.lp(1.5, 3), rng)
        Q = 3.0 * F.points + rng.standard_normal(3)
        G = fw.make_framework(F.graph, F.space, Q)
        assert fw.rigidity_eigenvalue(G) == pytest.approx(fw.rigidity_eigenvalue(F), abs=1e-9)

    @given(st.integers(0, 2 ** 32 - 1))
    def test_linf_equals_min_part_connectivity(self, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(graphs.complete_graph(6), norms.linf(3), rng)
        dec = linf.monochrome_decompose(F)
        assert fw.rigidity_eigenvalue(F) == pytest.approx(dec.score(), abs=1e-9)


class TestDeletion:
    def test_delete_vertex_relabels(self, rng):
        F = random_framework(graphs.complete_graph(5), norms.l2(2), rng)
        H = fw.delete_vertex(F, 2)
        assert H.graph == graphs.complete_graph(4)
        np.testing.assert_array_equal(H.points, F.points[[0, 1, 3, 4]])


class TestSearch:
    def test_estimate_is_deterministic(self):
        budget = SearchBudget(restarts=4, steps=40)
        a = fw.estimate_alg_connectivity(graphs.complete_graph(5), norms.l1(2), budget, seed=7)
        b = fw.estimate_alg_connectivity(graphs.complete_graph(5), norms.l1(2), budget, seed=7)
        assert a[0] == b[0]
        np.testing.assert_array_equal(a[1], b[1])

    def test_estimate_independent_of_workers(self):
        budget = SearchBudget(restarts=4, steps=30)
        g = graphs.complete_graph(5)
        a = fw.estimate_alg_connectivity(g, norms.linf(2), budget, seed=3, workers=1)
        b = fw.estimate_alg_connectivity(g, norms.linf(2), budget, seed=3, workers=2)
        assert a[0] == b[0]

    def test_estimate_witness_achieves_value(self):
        g = graphs.complete_graph(5)
        val, P = fw.estimate_alg_connectivity(g, norms.linf(2), SearchBudget(8, 100), seed=1)
        F = fw.make_framework(g, norms.linf(2), P)
        assert fw.rigidity_eigenvalue(F) == pytest.approx(val, abs=1e-12)
        # a lower bound on the exact value
        assert val <= catalog.BULL_VALUE + 1e-9

    def test_hill_climb_never_decreases(self, rng):
        def objective(P):
            return -float(np.sum((P - 0.5) ** 2))
        P0 = rng.random((4, 2))
        P, val = fw.hill_climb(objective, P0, objective(P0), rng, steps=100)
        assert val >= objective(P0)
        assert val == pytest.approx(objective(P))

    def test_needs_d_plus_one_vertices(self):
        with pytest.raises(TooSmallError):
            fw.estimate_alg_connectivity(graphs.path_graph(1), norms.l1(2), SearchBudget(1, 1))


class TestDecompositionInvariants:
    @given(st.sampled_from(SPACES), st.integers(3, 8), st.integers(0, 2 ** 32 - 1))
    def test_laplacian_sum_over_edge_colouring(self, space, n, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(graphs.complete_graph(n), space, rng)
        side = rng.random(F.graph.m) < 0.5
        parts = [[e for e, s in zip(F.graph.edges, side) if s == flag] for flag in (True, False)]
        total = sum(fw.framework_laplacian(fw.make_framework(graphs.Graph(n, p), space, F.points))
                    for p in parts)
        if norms.facet_functionals(space) is not None:
            # entries are sums of +-1 and 0: no rounding at all
            np.testing.assert_array_equal(total, fw.framework_laplacian(F))
        else:
            # same terms, different summation order: equal up to rounding
            np.testing.assert_allclose(total, fw.framework_laplacian(F), rtol=0,
                                       atol=4 * n * np.finfo(float).eps)

    @given(st.sampled_from(SPACES), st.integers(4, 8), st.integers(2, 3),
           st.integers(0, 2 ** 32 - 1))
    def test_superadditivity_at_fixed_placement(self, space, n, m, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(graphs.complete_graph(n), space, rng)
        colour = rng.integers(m, size=F.graph.m)
        parts = [fw.make_framework(graphs.Graph(n, [e for e, c in zip(F.graph.edges, colour) if c == k]),
                                   space, F.points) for k in range(m)]
        assert fw.has_full_affine_span(F.points)
        total = sum(fw.rigidity_eigenvalue(H) for H in parts)
        assert fw.rigidity_eigenvalue(F) >= total - m * 1e-9

    @given(st.sampled_from(SPACES), st.integers(0, 2 ** 32 - 1))
    def test_adding_an_edge_never_lowers_the_eigenvalue(self, space, seed):
        rng = np.random.default_rng(seed)
        F = random_framework(graphs.complete_graph(6), space, rng)
        H = fw.make_framework(F.graph.without_edges(F.graph.edges[:4]), space, F.points)
        assert fw.rigidity_eigenvalue(F) >= fw.rigidity_eigenvalue(H) - 1e-9
