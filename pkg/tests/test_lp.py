from fractions import Fraction

import pytest

from nncp import simplex
from nncp.baseline import solve_spp
from nncp.circuit import CNOT, RawGate, decompose
from nncp.coupling import make
from nncp.lp import (LpSolution, ReducedPath, build_gnfp, build_rspp_scaled,
                     gnfp_lp, simplex_solve, solve_reduced, write_lp)
from nncp.symmetry import quotient_graph


def instance(n, pairs, family, m_side=None):
    c = decompose([RawGate(CNOT, p) for p in pairs], n=n)
    g, _, _ = make(family, n=n, m_side=m_side)
    return c, g, quotient_graph(c, g)


CHAIN6 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]


def test_model_sizes_match_closed_forms():
    c, g, q = instance(6, CHAIN6, "star")
    lp = build_rspp_scaled(q)
    assert lp.n_vars == q.m * len(q.arcs) + len(q.nodes) + sum(
        len(ids) for ids in q.compliant) == 166
    assert len(lp.rows) == q.m * len(q.nodes) + 2 == 32
    assert len(lp.rows) == len(lp.rhs)
    assert all(len(t) in (3,) for t in lp.var_tags)


def test_star_trivial_pattern_coefficients_are_unit():
    # trivial pattern on a star: every orbit has size |Aut|, so every scaled
    # coefficient collapses to 1
    _, _, q = instance(6, CHAIN6, "star")
    lp = build_rspp_scaled(q)
    lam = [cv for cv, t in zip(lp.objective, lp.var_tags) if t[0] == "lam"]
    assert set(lam) == {Fraction(1)}
    assert set(cv for _, cv in lp.rows[0]) == {Fraction(1)}
    assert set(cv for _, cv in lp.rows[1]) == {Fraction(1)}


def test_conservation_rows_balance():
    _, _, q = instance(5, [(0, 1), (2, 3)], "biclique", m_side=2)
    lp = build_rspp_scaled(q)
    # each lambda column hits exactly two conservation rows, +d_in and -d_out
    by_col: dict[int, list[Fraction]] = {}
    for row in lp.rows[2:]:
        for j, cv in row:
            by_col.setdefault(j, []).append(cv)
    for j, tag in enumerate(lp.var_tags):
        if tag[0] != "lam":
            continue
        arc = q.arcs[tag[2]]
        if arc.src == arc.dst:   # self-loop orbitals merge to a net entry
            net = Fraction(arc.d_in - arc.d_out)
            assert by_col.get(j, []) == ([net] if net else [])
        else:
            assert sorted(by_col[j]) == sorted(
                [Fraction(arc.d_in), Fraction(-arc.d_out)])


def test_builders_reject_empty_circuits():
    c, g, q = instance(4, [], "cycle")
    with pytest.raises(ValueError):
        build_rspp_scaled(q)
    with pytest.raises(ValueError):
        build_gnfp(q)
    assert solve_reduced(q)[0] == 0


def test_fast_path_used_only_without_multipliers():
    _, _, q = instance(5, CHAIN6[:4], "cycle")      # trivial pattern
    opt, sol = solve_reduced(q)
    assert isinstance(sol, ReducedPath)
    _, _, q = instance(4, [(0, 1), (2, 3), (0, 1)], "star")  # pair pattern
    opt, sol = solve_reduced(q)
    assert isinstance(sol, LpSolution)
    assert opt == 2


def test_fast_path_agrees_with_simplex_on_the_same_model():
    for pairs in ([(0, 2), (1, 3), (0, 1)], [(0, 1), (1, 2), (0, 4)]):
        _, _, q = instance(5, pairs, "cycle")
        opt, sol = solve_reduced(q)
        assert isinstance(sol, ReducedPath)
        ref = simplex_solve(build_rspp_scaled(q))
        assert ref.status == simplex.OPTIMAL
        assert round(ref.objective) == opt
        assert abs(ref.objective - opt) < 1e-9


def test_reduced_path_support_shape():
    _, _, q = instance(5, [(0, 2), (2, 4), (1, 3), (0, 1)], "cycle")
    opt, path = solve_reduced(q)
    assert isinstance(path, ReducedPath)
    assert len(path.lam_support) == opt
    boundaries = sorted(k for k, _ in path.theta_support)
    assert boundaries[0] == 0 and boundaries[-1] == q.m
    assert path.steps[0][0] == "enter" and path.steps[-1][0] == "cross"


@pytest.mark.parametrize("n, pairs, family, m_side", [
    (4, [(0, 1), (2, 3), (0, 1)], "star", None),
    (5, [(0, 1), (2, 3), (1, 4)], "biclique", 2),
    (5, [(0, 2), (1, 3), (0, 1)], "cycle", None),
    (6, [(0, 1), (2, 3), (4, 5)], "star", None),
])
def test_reduced_matches_baseline(n, pairs, family, m_side):
    c, g, q = instance(n, pairs, family, m_side)
    opt, _ = solve_reduced(q)
    assert opt == solve_spp(c, g).opt


@pytest.mark.parametrize("n, pairs, family, m_side", [
    (4, [(0, 1), (2, 3), (0, 1)], "star", None),
    (5, [(0, 1), (2, 3)], "biclique", 2),
    (5, [(0, 2), (1, 3), (0, 1)], "cycle", None),
])
def test_gnfp_equals_rspp(n, pairs, family, m_side):
    _, _, q = instance(n, pairs, family, m_side)
    a = simplex_solve(build_rspp_scaled(q))
    b = simplex_solve(gnfp_lp(build_gnfp(q)))
    assert a.status == b.status == simplex.OPTIMAL
    assert abs(a.objective - b.objective) <= 1e-6


def test_gnfp_multiplier_structure():
    _, _, q = instance(5, [(0, 1), (2, 3)], "star")
    model = build_gnfp(q)
    for arc in model.arcs:
        if arc.tail == ("s",):
            assert arc.multiplier == Fraction(1, int(arc.upper))
        elif arc.head == ("t",):
            assert arc.multiplier == q.nodes[arc.tag[2]].orbit_size
            assert arc.upper == 1
        elif arc.tag[0] == "theta":
            assert arc.multiplier == 1 and arc.upper == 1


def test_solution_residual_and_implied_bounds():
    _, _, q = instance(4, [(0, 1), (2, 3), (0, 1)], "star")
    sol = simplex_solve(build_rspp_scaled(q))
    assert sol.status == simplex.OPTIMAL
    assert sol.residual <= 1e-8
    assert all(v <= q.coupling.aut.order + 1e-6 for v in sol.values)


def test_write_lp_format():
    _, _, q = instance(4, [(0, 1), (1, 2)], "star")
    lp = build_rspp_scaled(q)
    text = write_lp(lp, name="example")
    assert text.startswith("\\ example\nMinimize")
    assert "Subject To" in text and "Bounds" in text and text.endswith("End\n")
    assert "lam_1_0" in text and "theta_0_0" in text
    # fractional coefficients keep 12 significant digits
    lp.objective[0] = Fraction(1, 3)
    assert "0.333333333333 " in write_lp(lp)
