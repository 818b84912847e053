# Two independent ways to the same optimum, plus the averaging argument that
# justifies the reduction.
#
# 1. solve_spp walks the full layered graph over all n! qubit orders.
# 2. solve_reduced works on the quotient and must land on the same value.
# 3. reynolds_check takes a concrete optimal unit flow, averages it over the
#    whole symmetry group, and confirms the average satisfies every reduced
#    LP row and bound with the same objective -- the reason dropping to the
#    quotient loses nothing.

from nncp import (RawGate, decompose, make, quotient_graph, reynolds_check,
                  solve_reduced, solve_spp)
from nncp.circuit import CNOT

pairs = [(0, 1), (2, 3), (1, 3), (0, 2)]
circuit = decompose([RawGate(CNOT, p) for p in pairs], n=5)
coupling, _, _ = make("cycle", n=5)

base = solve_spp(circuit, coupling)
opt, _ = solve_reduced(quotient_graph(circuit, coupling))
print(f"full layered graph optimum : {base.opt}")
print(f"quotient model optimum     : {opt}")
assert base.opt == opt

report = reynolds_check(circuit, coupling)
print(f"\ngroup order |S_n(F)| * |Aut| = {report['group_order']}")
print(f"averaged-flow objective      = {report['objective']}"
      f"  (error {report['objective_error']:.1e})")
print(f"max row residual             = {report['max_row_residual']:.1e}")
print(f"max bound violation          = {report['max_bound_violation']:.1e}")
print(f"feasible after averaging     : {report['ok']}")
