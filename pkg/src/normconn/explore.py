"""Exploration harnesses for open questions about l_inf^d.

Running out of budget never settles anything: a harness either exhibits a
witness or reports ``"not found within budget"``.  A harness never reports
impossibility; when an exhaustive combinatorial search did finish, that is
recorded in ``values`` and ``notes`` (``search_complete``) next to the
``"not found within budget"`` status.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bounds, catalog, graphs, linf, norms
from . import frameworks as fw
from .errors import BudgetExceededError
from .frameworks import SearchBudget

REALIZED = "realized"
NOT_FOUND = "not found within budget"


@dataclass(frozen=True)
class Finding:
    name: str
    status: str
    values: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def budget_exhausted(self):
        """Whether the harness stopped for lack of budget rather than by finishing."""
        return self.status == NOT_FOUND and not self.values.get("search_complete", False)

    def to_dict(self):
        return {"name": self.name, "status": self.status, "values": self.values,
                "notes": list(self.notes)}


def k2d(d=4, budget=None, seed=0, enumeration_cap=10 ** 5):
    """Lower bound on ``a(K_2d, l_inf^d)`` from a placement with ``T_d`` parts.

    Also tries the exhaustive engine, capped at the smaller of
    ``budget.candidates`` and ``enumeration_cap`` nodes; for ``d >= 4`` this
    is expected to run out, which is reported rather than treated as a
    result.
    """
    budget = budget or SearchBudget()
    notes = []
    values = {"a(T_d)": linf.grone_root(d) if d >= 2 else None}
    try:
        F = linf.k2d_decomposition_placement(d, seed=seed)
    except BudgetExceededError:
        return Finding("k2d", NOT_FOUND, values, ("no T_d placement found",))
    lower = fw.rigidity_eigenvalue(F)
    values["best realized min a(G_i)"] = lower
    values["placement"] = F.points.tolist()
    try:
        cap = SearchBudget(budget.restarts, budget.steps, min(budget.candidates, enumeration_cap))
        res = linf.exact_linf_connectivity(graphs.complete_graph(2 * d), d, cap, seed)
        values["enumeration upper bound"] = res.upper
        if res.exact:
            values["exact"] = res.lower
            notes.append("enumeration finished: value is exact")
        else:
            notes.append("enumeration finished but optimum not realized")
    except BudgetExceededError:
        notes.append("enumeration exhausted its candidate budget: no conclusion on equality")
    return Finding("k2d", REALIZED, values, tuple(notes))


def h8(d=4, budget=None, seed=0, max_decompositions=None):
    """Search for a placement of ``K_8`` in l_inf^4 with four ``H_8`` parts.

    Decompositions of ``K_8`` into four copies of ``H_8`` are generated by
    exact cover; each is handed to the realization search with a budget of
    ``budget.restarts`` restarts of ``budget.steps`` steps.  At most
    ``max_decompositions`` (default ``budget.restarts``) are tried.
    """
    budget = budget or SearchBudget()
    if d != 4:
        raise ValueError("the H_8 question concerns K_8 in l_inf^4")
    g, tree = graphs.complete_graph(8), catalog.h8_tree()
    limit = max_decompositions if max_decompositions is not None else budget.restarts
    tried = 0
    realize_budget = SearchBudget(max(1, budget.restarts // 4), budget.steps)
    values = {"a(H_8)": graphs.algebraic_connectivity(tree), "a(T_4)": linf.grone_root(4)}
    exhausted = False
    try:
        for dec in linf.copy_decompositions(g, tree, 4, max_nodes=budget.candidates):
            if tried >= limit:
                break
            tried += 1
            P = linf.realize_decomposition(g, dec.parts, realize_budget, seed + tried)
            if P is not None:
                values.update(decompositions_tried=tried, placement=P.tolist(),
                              parts=[list(map(list, p)) for p in dec.parts])
                return Finding("h8", REALIZED, values,
                               ("a placement with four H_8 parts exists, so a(K_8,l_inf^4) >= a(H_8)",))
        else:
            exhausted = True
    except BudgetExceededError:
        pass
    values["decompositions_tried"] = tried
    values["search_complete"] = exhausted and tried < limit
    if exhausted and tried == 0:
        return Finding("h8", NOT_FOUND, values, (
            "the exact cover ran to completion (first copy pinned by the symmetry of K_8) and "
            "produced no partition of K_8 into four copies of H_8, realizable or not",
            "this is a statement about edge partitions only; no claim about a(K_8,l_inf^4) is "
            "made here",
        ))
    return Finding("h8", NOT_FOUND, values,
                   ("no H_8 decomposition was realized; this is not a proof that none is realizable",))


def redrig(d=2, n=6, budget=None, seed=0):
    """Look for an edge-redundantly rigid placement of ``K_n`` in l_inf^d.

    In the plane the octahedral two-hexagon placement gives ``K_6``, and
    each further vertex is added near ``(0.5, 0.9)``.  Otherwise random
    placements and the eigenvalue-maximising search witness are tested.
    """
    budget = budget or SearchBudget()
    space = norms.linf(d)
    if n <= 2 * d + 1 and d >= 2:
        return Finding("redrig", NOT_FOUND, {"n": n, "d": d},
                       ("K_(2d+1) and smaller are never edge-redundantly rigid in l_inf^d",))
    if d == 2 and n >= 6:
        dec = bounds.octahedral_placement(seed=seed)
        F = fw.make_framework(graphs.complete_graph(6), space, dec.certificate)
        for extra in range(n - 6):
            F = bounds.extend_placement(F.points, space, seed=seed + extra)
        if bounds.edge_redundant_test(F).rigid:
            return Finding("redrig", REALIZED, {"n": n, "d": d, "placement": F.points.tolist()},
                           ("octahedral two-hexagon placement, extra vertices near (0.5, 0.9)",))
    g = graphs.complete_graph(n)
    rng = np.random.default_rng(seed)
    _, best = fw.estimate_alg_connectivity(g, space, budget, seed)
    for P in [best] + [rng.random((n, d)) for _ in range(budget.restarts)]:
        try:
            F = fw.make_framework(g, space, P)
        except (fw.NonSmoothEdgeError, fw.CoincidentEndpointsError):
            continue
        if bounds.edge_redundant_test(F).rigid:
            return Finding("redrig", REALIZED, {"n": n, "d": d, "placement": F.points.tolist()},
                           ("random or search placement",))
    return Finding("redrig", NOT_FOUND, {"n": n, "d": d}, ("no conclusion",))


HARNESSES = {"k2d": k2d, "h8": h8, "redrig": redrig}
