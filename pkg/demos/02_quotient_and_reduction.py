# How much smaller does the symmetry-reduced model get?  Build the layered
# shortest-path LP for one circuit on three coupling graphs and compare the
# reduced sizes against the plain formulation over all n! qubit orders.

from nncp import (RawGate, build_rspp_scaled, decompose, make,
                  quotient_graph, reduction_stats)
from nncp.circuit import CNOT

n = 6
pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]   # connected gate graph
circuit = decompose([RawGate(CNOT, p) for p in pairs], n=n)

print(f"circuit: n={n}, m={circuit.m}")
print(f"{'coupling':<14}{'|Aut|':>6}{'orbits':>8}{'vars':>8}{'consts':>8}"
      f"{'plain vars':>12}{'var red %':>11}{'const red %':>13}")

for family, m_side in [("cycle", None), ("star", None), ("biclique", 2)]:
    coupling, _, _ = make(family, n=n, m_side=m_side)
    q = quotient_graph(circuit, coupling)
    s = reduction_stats(q)
    label = family if m_side is None else f"{family}(2,{n - 2})"
    print(f"{label:<14}{s['aut_order']:>6}{s['nodes_per_layer']:>8}"
          f"{s['variables']:>8}{s['constraints']:>8}"
          f"{s['unreduced_variables']:>12}"
          f"{s['reduction_variables_pct']:>11.2f}"
          f"{s['reduction_constraints_pct']:>13.2f}")

# The LP itself is exact rational data; peek at the star model.
coupling, _, _ = make("star", n=n)
lp = build_rspp_scaled(quotient_graph(circuit, coupling))
print(f"\nstar LP: {lp.n_vars} variables, {len(lp.rows)} equality rows")
print("first few objective coefficients:", lp.objective[:6])
