"""Turn quotient-level solutions back into concrete SWAP schedules.

The LP (or shortest-path) solution lives on orbits and orbitals.  Because
the averaged solution spreads flow uniformly over each orbit, *any* walk
that stays inside the support corresponds to a concrete shortest path: start
at the representative of a supported source orbit, and at each layer either
cross to the next gate (when the current orbit's boundary variable is
supported) or apply the lexicographically smallest coupling edge whose
orbital carries flow.  Each applied edge is one SWAP.

`verify` re-checks a finished schedule against nothing but the problem
statement: gate-by-gate compliance of the qubit orders, and that the listed
SWAPs are coupling edges transforming each order into the next.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .circuit import Circuit
from .coupling import CouplingGraph
from .errors import SolverError
from .lp import LpSolution, ReducedPath
from .perm import Permutation, Transposition, inverse
from .symmetry import QuotientGraph

SUPPORT_TOL = 1e-6

SCHEMA_VERSION = 1


@dataclass(eq=False)
class NncpSolution:
    """A concrete optimum: per-gate qubit orders plus the SWAPs between them.

    ``orders[k-1]`` maps locations to qubits while gate k executes; a swap
    ``(after_gate=k, (i, j))`` exchanges the qubits at locations i and j
    between gates k and k+1.  Everything is 0-based in memory and 1-based in
    the JSON form."""

    opt: int
    orders: list[Permutation]
    swaps: list[tuple[int, Transposition]]

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "opt": self.opt,
            "orders": [[x + 1 for x in tau.images] for tau in self.orders],
            "swaps": [{"after_gate": k, "swap": [t.i + 1, t.j + 1]}
                      for k, t in self.swaps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "NncpSolution":
        if data.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
            raise ValueError(f"unsupported solution schema {data['schema']!r}")
        orders = [Permutation(tuple(x - 1 for x in images))
                  for images in data["orders"]]
        swaps = [(entry["after_gate"],
                  Transposition(entry["swap"][0] - 1, entry["swap"][1] - 1))
                 for entry in data["swaps"]]
        return cls(opt=int(data["opt"]), orders=orders, swaps=swaps)

    @classmethod
    def from_json(cls, text: str) -> "NncpSolution":
        return cls.from_json_dict(json.loads(text))


def _support(solution) -> tuple[set, set, int]:
    if isinstance(solution, ReducedPath):
        return solution.lam_support, solution.theta_support, solution.opt
    if isinstance(solution, LpSolution):
        lam, theta = solution.support(SUPPORT_TOL)
        return lam, theta, round(solution.objective)
    raise TypeError(f"cannot reconstruct from {type(solution).__name__}")


def reconstruct(q: QuotientGraph, solution) -> NncpSolution:
    """Walk the support of a reduced solution into a concrete schedule."""
    if q.m == 0:
        return NncpSolution(opt=0, orders=[], swaps=[])
    lam, theta, opt = _support(solution)

    starts = sorted(u for (k, u) in theta if k == 0)
    if not starts:
        raise SolverError("solution support has no source orbit")
    tau = q.nodes[starts[0]].rep
    edges = sorted(q.coupling.edges)

    orders: list[Permutation] = []
    swaps: list[tuple[int, Transposition]] = []
    k = 1
    while k <= q.m:
        rep, b = q.canonical(tau)
        u = q.node_id(rep)
        if (k, u) in theta:
            orders.append(tau)
            k += 1
            continue
        if len(swaps) >= opt:
            raise SolverError(
                f"support walk exceeded the optimum of {opt} swaps at gate {k}")
        for (i, j) in edges:
            x, y = b(i), b(j)
            if x > y:
                x, y = y, x
            class_rep = q.edge_class_rep[u][(x, y)]
            arc_id = q.arc_lookup[(u, class_rep)]
            if (k, arc_id) in lam:
                swaps.append((k - 1, Transposition(i, j)))
                tau = tau.swap(i, j)
                break
        else:
            raise SolverError(
                f"support walk dead-ends at gate {k} after {len(swaps)} swaps "
                f"(orbit {u})")
    if len(swaps) != opt:
        raise SolverError(
            f"support walk used {len(swaps)} swaps, expected {opt}")
    return NncpSolution(opt=opt, orders=orders, swaps=swaps)


def verify(solution: NncpSolution, circuit: Circuit, coupling: CouplingGraph) -> dict:
    """Check a schedule against the problem statement alone.

    Returns ``{"ok": bool, "violations": [...], "gates": m, "swaps": ...}``;
    a populated ``violations`` list pinpoints the first failure of each
    kind rather than every instance."""
    violations: list[str] = []
    m, n = circuit.m, circuit.n

    if len(solution.orders) != m:
        violations.append(
            f"expected {m} qubit orders, got {len(solution.orders)}")
    for idx, tau in enumerate(solution.orders):
        if tau.n != n:
            violations.append(
                f"order {idx + 1} permutes {tau.n} items, expected {n}")
            break

    if not violations:
        for k, (gate, tau) in enumerate(zip(circuit.gates, solution.orders), start=1):
            loc = inverse(tau)
            a, b = gate.pair
            edge = tuple(sorted((loc(a), loc(b))))
            if edge not in coupling.edges:
                violations.append(
                    f"gate {k} acts on locations {edge[0] + 1},{edge[1] + 1}, "
                    f"not a coupling edge")
                break

        by_layer: dict[int, list[Transposition]] = {}
        for after_gate, t in solution.swaps:
            if not 1 <= after_gate <= m - 1:
                violations.append(
                    f"swap scheduled after gate {after_gate}, outside 1..{m - 1}")
                break
            by_layer.setdefault(after_gate, []).append(t)
        else:
            for t in (t for _, t in solution.swaps):
                if (t.i, t.j) not in coupling.edges:
                    violations.append(
                        f"swap ({t.i + 1},{t.j + 1}) is not a coupling edge")
                    break
            else:
                for k in range(1, m):
                    cur = solution.orders[k - 1]
                    for t in by_layer.get(k, ()):
                        cur = cur.swap(t.i, t.j)
                    if cur != solution.orders[k]:
                        violations.append(
                            f"swaps after gate {k} do not transform order {k} "
                            f"into order {k + 1}")
                        break

    if len(solution.swaps) != solution.opt:
        violations.append(
            f"solution lists {len(solution.swaps)} swaps but claims "
            f"opt={solution.opt}")

    return {
        "ok": not violations,
        "violations": violations,
        "gates": m,
        "swaps": len(solution.swaps),
        "opt": solution.opt,
    }
