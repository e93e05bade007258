"""K_5 in the l_inf plane: from a placement to its rigidity eigenvalue.

The integer placement below has a coordinate tie on one edge, so it is
rejected; raising one point slightly fixes that.  The monochrome parts are
then two bull graphs, and the rigidity eigenvalue equals the algebraic
connectivity of the bull graph, (5 - sqrt 13)/2.

Run with ``python3 demos/k5_worked_example.py``.
"""
import numpy as np

from normconn import catalog, graphs, linalg, linf, norms
from normconn import frameworks as fw


def main():
    g, space = graphs.complete_graph(5), norms.linf(2)
    try:
        fw.make_framework(g, space, catalog.K5_BULL_POINTS)
    except fw.NonSmoothEdgeError as exc:
        print(f"integer placement rejected: {exc}")

    F = fw.make_framework(g, space, catalog.K5_BULL_POINTS_NUDGED)
    dec = linf.monochrome_decompose(F)
    for axis, part in zip("xy", dec.subgraphs()):
        print(f"{axis}-part edges {part.edges}; bull graph: "
              f"{graphs.is_isomorphic(part, graphs.bull_graph())}")

    report = fw.rigidity_report(F)
    print(f"rigidity eigenvalue   {report.rigidity_eigenvalue:.12f}")
    print(f"(5 - sqrt 13)/2       {catalog.BULL_VALUE:.12f}")

    # the framework Laplacian is the shuffled direct sum of the part Laplacians
    blocks = linalg.block_diag(*[graphs.laplacian(h) for h in dec.subgraphs()])
    S = linalg.perfect_shuffle(2, 5)
    gap = np.max(np.abs(S @ blocks @ S.T - fw.framework_laplacian(F)))
    print(f"block similarity, max entry difference {gap:.1e}")


if __name__ == "__main__":
    main()
