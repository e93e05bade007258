import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from normconn import graphs, io, norms
from normconn.errors import ParseError

from strategies import small_graphs


class TestGraphFormat:
    @given(small_graphs(min_n=1))
    def test_round_trip(self, g):
        assert io.parse_graph(io.format_graph(g)) == g

    def test_comments_and_blank_lines(self):
        g = io.parse_graph("# triangle\n3 3\n\n0 1\n1 2\n   \n0 2\n")
        assert g == graphs.complete_graph(3)

    @pytest.mark.parametrize("text,line", [
        ("3 1\n1 0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 x\n", 1),
        ("3\n", 1),
        ("2 1\n0 1 5\n", 2),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as info:
            io.parse_graph(text, path="g.txt")
        assert info.value.line == line
        assert str(info.value).startswith(f"g.txt:{line}:")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError, match="announces 2 edges"):
            io.parse_graph("3 2\n0 1\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            io.parse_graph("# nothing\n")


class TestPlacementFormat:
    @given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
    def test_round_trip(self, n, d, seed):
        P = np.random.default_rng(seed).standard_normal((n, d))
        np.testing.assert_array_equal(io.parse_placement(io.format_placement(P)), P)

    def test_any_vertex_order(self):
        P = io.parse_placement("1 2 3\n0 0.5 -1\n")
        np.testing.assert_array_equal(P, [[0.5, -1.0], [2.0, 3.0]])

    @pytest.mark.parametrize("text", ["0 1 2\n0 1 2\n", "0 1 2\n1 1\n", "0 1 nan\n", "0 1 x\n",
                                      "0 1 2\n2 3 4\n"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            io.parse_placement(text)

    def test_expected_size(self):
        with pytest.raises(ParseError, match="missing"):
            io.parse_placement("0 1 2\n", n=2, d=2)


class TestSpaces:
    @pytest.mark.parametrize("desc,space", [
        ("linf:3", norms.linf(3)), ("lp:1:2", norms.l1(2)), ("lp:1.5:3", norms.lp(1.5, 3)),
        ("lp:inf:2", norms.linf(2)), ("lp:2:4", norms.l2(4))])
    def test_descriptors(self, desc, space):
        assert io.parse_space(desc) == space

    @pytest.mark.parametrize("desc", ["l2", "lp:0.5:2", "linf:x", "lp:2", "poly:/nonexistent"])
    def test_bad_descriptors(self, desc):
        with pytest.raises(ParseError):
            io.parse_space(desc)

    def test_polyhedral_file(self, tmp_path):
        path = tmp_path / "hex.txt"
        path.write_text("# hexagonal norm\n2 3\n1 0\n0 1\n1 1\n")
        space = io.parse_space(f"poly:{path}")
        assert space.kind == "poly" and space.facets.shape == (3, 2)
        assert norms.norm(space, [1.0, 1.0]) == 2.0

    def test_polyhedral_errors(self):
        with pytest.raises(ParseError):
            io.parse_polyhedral("2 2\n1 0\n")
        with pytest.raises(ParseError):
            io.parse_polyhedral("2 2\n1 0\n2 0\n")
