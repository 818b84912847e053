import json

import pytest

from nncp.baseline import solve_spp
from nncp.circuit import CNOT, RawGate, decompose
from nncp.coupling import make
from nncp.errors import SolverError
from nncp.lp import ReducedPath, solve_reduced
from nncp.perm import Permutation, Transposition
from nncp.reconstruct import NncpSolution, reconstruct, verify
from nncp.symmetry import quotient_graph


def circ(n, pairs):
    return decompose([RawGate(CNOT, p) for p in pairs], n=n)


def solved(n, pairs, family, m_side=None):
    c = circ(n, pairs)
    g, _, _ = make(family, n=n, m_side=m_side)
    q = quotient_graph(c, g)
    opt, sol = solve_reduced(q)
    return c, g, q, opt, sol


def test_reconstruct_from_shortest_path():
    c, g, q, opt, sol = solved(5, [(0, 2), (2, 4), (1, 3)], "cycle")
    assert isinstance(sol, ReducedPath)
    schedule = reconstruct(q, sol)
    assert schedule.opt == opt == len(schedule.swaps)
    assert verify(schedule, c, g)["ok"]


def test_reconstruct_from_lp_support():
    c, g, q, opt, sol = solved(4, [(0, 1), (2, 3), (0, 1)], "star")
    assert not isinstance(sol, ReducedPath)
    schedule = reconstruct(q, sol)
    assert schedule.opt == opt == 2
    assert verify(schedule, c, g)["ok"]


def test_reconstruct_matches_baseline_optimum():
    for family, m_side, pairs in [
            ("biclique", 2, [(0, 1), (2, 3), (1, 4)]),
            ("cycle", None, [(0, 3), (1, 4), (0, 1), (2, 3)]),
            ("star", None, [(0, 1), (2, 3), (4, 1), (0, 2)])]:
        c, g, q, opt, sol = solved(5, pairs, family, m_side)
        schedule = reconstruct(q, sol)
        assert verify(schedule, c, g)["ok"]
        assert schedule.opt == solve_spp(c, g).opt


def test_reconstruct_empty_circuit():
    c, g, q, opt, sol = solved(4, [], "cycle")
    schedule = reconstruct(q, sol)
    assert schedule.opt == 0 and schedule.orders == [] and schedule.swaps == []


def test_reconstruct_rejects_empty_support():
    _, _, q, _, _ = solved(4, [(0, 1)], "cycle")
    with pytest.raises(SolverError, match="no source orbit"):
        reconstruct(q, ReducedPath(opt=0, steps=[]))


def test_reconstruct_dead_end():
    _, _, q, _, sol = solved(4, [(0, 1), (1, 2), (0, 2)], "cycle")
    assert isinstance(sol, ReducedPath)
    # keep the entry point but erase everything else
    broken = ReducedPath(opt=sol.opt, steps=[],
                         theta_support={(0, u) for (k, u) in sol.theta_support
                                        if k == 0})
    with pytest.raises(SolverError, match="dead-end"):
        reconstruct(q, broken)


# --- JSON schedule format ------------------------------------------------------

def sample_solution():
    return NncpSolution(
        opt=1,
        orders=[Permutation((0, 1, 2)), Permutation((1, 0, 2))],
        swaps=[(1, Transposition(0, 1))])


def test_json_round_trip():
    sol = sample_solution()
    again = NncpSolution.from_json(sol.to_json())
    assert again.opt == sol.opt
    assert again.orders == sol.orders
    assert again.swaps == sol.swaps


def test_json_is_one_based():
    data = json.loads(sample_solution().to_json())
    assert data["schema"] == 1
    assert data["orders"][0] == [1, 2, 3]
    assert data["swaps"][0] == {"after_gate": 1, "swap": [1, 2]}


def test_json_schema_guard():
    data = json.loads(sample_solution().to_json())
    data["schema"] = 99
    with pytest.raises(ValueError, match="schema"):
        NncpSolution.from_json_dict(data)


# --- verification catches tampering --------------------------------------------

def good_instance():
    c = circ(4, [(0, 1), (2, 3)])
    g, _, _ = make("star", n=4)
    sol = solve_spp(c, g)
    assert verify(sol, c, g)["ok"]
    return c, g, sol


def test_verify_flags_wrong_opt():
    c, g, sol = good_instance()
    sol.opt += 1
    rep = verify(sol, c, g)
    assert not rep["ok"] and "claims opt" in rep["violations"][0]


def test_verify_flags_noncompliant_order():
    c, g, sol = good_instance()
    bad = [tau for tau in sol.orders]
    # rotate qubits so gate 1 no longer touches the centre
    a, b = c.gates[0].pair
    others = [x for x in range(4) if x not in (a, b)]
    bad[0] = Permutation((others[0], a, b, others[1]))
    rep = verify(NncpSolution(sol.opt, bad, sol.swaps), c, g)
    assert not rep["ok"] and "not a coupling edge" in rep["violations"][0]


def test_verify_flags_broken_swap_chain():
    c, g, sol = good_instance()
    swaps = [(k, Transposition(1, 2)) for k, _ in sol.swaps]
    rep = verify(NncpSolution(sol.opt, sol.orders, swaps), c, g)
    assert not rep["ok"]


def test_verify_flags_non_edge_swap():
    c, g, sol = good_instance()
    # locations 1 and 2 are both leaves: not a star edge
    swaps = sol.swaps + [(1, Transposition(1, 2))]
    rep = verify(NncpSolution(sol.opt + 1, sol.orders, swaps), c, g)
    assert not rep["ok"]
    assert any("not a coupling edge" in v for v in rep["violations"])


def test_verify_flags_bad_after_gate():
    c, g, sol = good_instance()
    swaps = [(c.m, t) for _, t in sol.swaps]      # after the last gate
    rep = verify(NncpSolution(sol.opt, sol.orders, swaps), c, g)
    assert not rep["ok"] and "outside" in rep["violations"][0]


def test_verify_flags_wrong_order_count():
    c, g, sol = good_instance()
    rep = verify(NncpSolution(sol.opt, sol.orders[:-1], sol.swaps), c, g)
    assert not rep["ok"] and "expected 2 qubit orders" in rep["violations"][0]


def test_verify_flags_wrong_degree():
    c, g, sol = good_instance()
    orders = [Permutation((0, 1, 2))] + sol.orders[1:]
    rep = verify(NncpSolution(sol.opt, orders, sol.swaps), c, g)
    assert not rep["ok"] and "permutes 3 items" in rep["violations"][0]
