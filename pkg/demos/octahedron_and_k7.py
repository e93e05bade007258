"""Two 6-cycles in the plane, and a redundantly rigid K_7.

The octahedral graph K_{2,2,2} splits into two hexagons; a placement
realizing that split has rigidity eigenvalue a(C_6) = 1.  Placing K_6 on
the same points and adding one vertex near (0.5, 0.9) gives a K_7
framework that stays rigid after deleting any single edge.
"""
from normconn import bounds, graphs, linf, norms
from normconn import frameworks as fw


def main():
    space = norms.linf(2)
    dec = bounds.octahedral_placement(seed=0)
    F = fw.make_framework(dec.graph, space, dec.certificate)
    parts = linf.monochrome_decompose(F).subgraphs()
    print("parts are 6-cycles:", all(graphs.is_isomorphic(h, graphs.cycle_graph(6)) for h in parts))
    print(f"rigidity eigenvalue: {fw.rigidity_eigenvalue(F):.12f}")

    F6 = fw.make_framework(graphs.complete_graph(6), space, dec.certificate)
    F7 = bounds.extend_placement(F6.points, space, seed=0)
    print("extra vertex:", F7.points[6].round(4))
    report = bounds.edge_redundant_test(F7)
    print("K_7 edge-redundantly rigid:", report.rigid)


if __name__ == "__main__":
    main()
