"""Worked instances with known answers: graphs, placements and their values."""
from __future__ import annotations

import math

import numpy as np

from . import graphs, linf
from .graphs import Graph

#: Integer placement of K_5 in the l_inf plane from the hand-worked example.
#: The difference of points 2 and 4 is (1, -1), a tie between the two
#: coordinates, so this placement is *not* valid as printed.
K5_BULL_POINTS = np.array([[1.0, -2.0], [-2.0, 0.0], [0.0, 1.0], [2.0, 0.0], [-1.0, 2.0]])

#: The same placement with the last point raised by 1e-3, which breaks the
#: tie and yields two bull-graph monochrome parts.
K5_BULL_POINTS_NUDGED = K5_BULL_POINTS + np.array([[0, 0], [0, 0], [0, 0], [0, 0], [0, 1e-3]])

#: Monochrome parts of the nudged placement (horizontal, vertical).
K5_BULL_PARTS = (
    ((0, 1), (1, 2), (1, 3), (2, 3), (3, 4)),
    ((0, 2), (0, 3), (0, 4), (1, 4), (2, 4)),
)

BULL_VALUE = (5.0 - math.sqrt(13.0)) / 2.0


def spider_graph(legs):
    """Tree with one centre (vertex 0) and paths of the given lengths hanging from it."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph(nxt, edges)


def h8_tree():
    """The 8-vertex tree with a degree-4 centre and legs of lengths 2, 2, 2, 1.

    Its algebraic connectivity is ``(3 - sqrt 5)/2 ~ 0.382``, the only
    8-vertex tree of maximum degree <= 4 and diameter <= 4 above ``a(T_4)``.
    """
    return spider_graph((2, 2, 2, 1))


H8_VALUE = (3.0 - math.sqrt(5.0)) / 2.0


def named_graphs():
    """Named graphs used across the worked examples."""
    out = {
        "P_4": graphs.path_graph(4),
        "C_6": graphs.cycle_graph(6),
        "bull": graphs.bull_graph(),
        "K_2,2,2": graphs.octahedral_graph(),
        "T_3": linf.t_d_tree(3),
        "T_4": linf.t_d_tree(4),
        "H_8": h8_tree(),
    }
    for n in range(3, 8):
        out[f"K_{n}"] = graphs.complete_graph(n)
    return out
