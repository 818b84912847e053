# The reduced model has an equivalent reading as a generalized network flow:
# one unit leaves the source, arc multipliers d_in/d_out rescale it across
# orbital arcs, and one (rescaled) unit must reach the sink.  Both forms
# price out to the same optimum; either can be exported as an LP text file
# for an external solver.

from nncp import (RawGate, build_gnfp, build_rspp_scaled, decompose, gnfp_lp,
                  make, quotient_graph, simplex_solve, write_lp)
from nncp.circuit import CNOT

pairs = [(0, 1), (0, 2), (1, 2), (3, 4)]   # a triangle can't sit in a biclique
circuit = decompose([RawGate(CNOT, p) for p in pairs], n=5)
coupling, _, _ = make("biclique", n=5, m_side=2)
q = quotient_graph(circuit, coupling)

lp = build_rspp_scaled(q)
sol = simplex_solve(lp)
print(f"scaled shortest-path LP : {lp.n_vars} vars, "
      f"objective {sol.objective:.6f} ({sol.status})")

model = build_gnfp(q)
flow = simplex_solve(gnfp_lp(model))
print(f"generalized flow LP     : {len(model.arcs)} arcs, "
      f"objective {flow.objective:.6f} ({flow.status})")

# multipliers differ from 1 exactly where orbital in/out-degrees differ
scaled = [a for a in model.arcs if a.multiplier != 1][:4]
for a in scaled:
    print(f"  arc {a.tag}: cost {a.cost}, upper {a.upper}, "
          f"multiplier {a.multiplier}")

text = write_lp(lp, name="demo")
print("\nLP text export (head):")
print("\n".join(text.splitlines()[:8]))
