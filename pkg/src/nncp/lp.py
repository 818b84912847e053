"""Reduced LP model and solvers for the quotient graph.

Variables follow the orbital structure: one λ̄ per (layer, intra-layer
orbital) and one θ̄ per (layer boundary, compliant orbit).  The scaled model
divides the orbital sizes by |Aut(Coup(E))|, which turns every coefficient
into a small rational (at most 2^p·f!·|E|) regardless of how factorially
large the group is; coefficients are assembled exactly as Fractions and only
then converted to floats.  Upper bounds are omitted — the two degree rows
bound everything — and re-checked after solving.

When every orbital has in/out degree 1 (trivial qubit-side stabilizer, or
more generally trivial B_τ everywhere), the model *is* a shortest-path
problem: intra-layer arcs cost one SWAP each, boundary arcs are free, and a
0-1 BFS over (layer, orbit) states replaces the simplex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import simplex
from .errors import SolverError
from .symmetry import QuotientGraph

Tag = tuple  # ("lam", layer, arc_id) or ("theta", boundary, orbit_id)


@dataclass(eq=False)
class LinearProgram:
    """Sparse equality-form LP with [lb, ub] bounds, ub possibly absent."""

    n_vars: int
    objective: list[Fraction]
    rows: list[list[tuple[int, Fraction]]]
    rhs: list[Fraction]
    lower: list[Fraction]
    upper: list[Fraction | None]
    var_tags: list[Tag]

    def float_arrays(self):
        cols: list[list[tuple[int, float]]] = [[] for _ in range(self.n_vars)]
        for ri, row in enumerate(self.rows):
            for j, coef in row:
                cols[j].append((ri, float(coef)))
        c = [float(v) for v in self.objective]
        b = [float(v) for v in self.rhs]
        lb = [float(v) for v in self.lower]
        ub = [float("inf") if v is None else float(v) for v in self.upper]
        return c, cols, b, lb, ub


@dataclass(eq=False)
class LpSolution:
    status: str
    objective: float
    values: list[float]
    var_tags: list[Tag]
    residual: float = 0.0

    def support(self, threshold: float = 1e-6):
        """(lam_support, theta_support) as sets of tag tails."""
        lam, theta = set(), set()
        for tag, v in zip(self.var_tags, self.values):
            if v > threshold:
                if tag[0] == "lam":
                    lam.add((tag[1], tag[2]))
                else:
                    theta.add((tag[1], tag[2]))
        return lam, theta


@dataclass(eq=False)
class ReducedPath:
    """Integral quotient-path solution from the shortest-path fast path."""

    opt: int
    steps: list[tuple]                      # ("enter", u) / ("swap", k, arc) / ("cross", k, u)
    lam_support: set = field(default_factory=set)     # {(layer, arc_id)}
    theta_support: set = field(default_factory=set)   # {(boundary, orbit_id)}


# ---------------------------------------------------------------------------
# model builders

def _ratio(q: QuotientGraph, orbit_size: int) -> Fraction:
    # orbit_size/|Aut| = |S_n(F)|/|B_τ|: small by construction
    return Fraction(orbit_size, q.coupling.aut.order)


def build_rspp_scaled(q: QuotientGraph) -> LinearProgram:
    """The scaled reduced shortest-path LP over the quotient graph."""
    if q.m == 0:
        raise ValueError("model needs at least one gate")
    m, nodes, arcs = q.m, q.nodes, q.arcs

    tags: list[Tag] = []
    for k in range(1, m + 1):
        tags.extend(("lam", k, ai) for ai in range(len(arcs)))
    tags.extend(("theta", 0, u) for u in range(len(nodes)))
    for k in range(1, m + 1):
        tags.extend(("theta", k, u) for u in q.compliant[k - 1])
    col = {tag: j for j, tag in enumerate(tags)}
    nv = len(tags)

    objective = [Fraction(0)] * nv
    for k in range(1, m + 1):
        for ai, arc in enumerate(arcs):
            objective[col[("lam", k, ai)]] = _ratio(q, nodes[arc.src].orbit_size) * arc.d_out

    rows: list[list[tuple[int, Fraction]]] = []
    rhs: list[Fraction] = []

    rows.append([(col[("theta", 0, u)], _ratio(q, nodes[u].orbit_size))
                 for u in range(len(nodes))])
    rhs.append(Fraction(1))
    rows.append([(col[("theta", m, u)], _ratio(q, nodes[u].orbit_size))
                 for u in q.compliant[m - 1]])
    rhs.append(Fraction(1))

    for k in range(1, m + 1):
        acc: list[dict[int, Fraction]] = [{} for _ in range(len(nodes))]
        for u in range(len(nodes)):
            tag = ("theta", k - 1, u)
            if tag in col:                      # always for k=1, else if compliant
                acc[u][col[tag]] = Fraction(1)
            tag = ("theta", k, u)
            if tag in col:
                acc[u][col[tag]] = Fraction(-1)
        for ai, arc in enumerate(arcs):
            j = col[("lam", k, ai)]
            # self-loop orbitals accumulate d_in - d_out on one row
            acc[arc.dst][j] = acc[arc.dst].get(j, Fraction(0)) + arc.d_in
            acc[arc.src][j] = acc[arc.src].get(j, Fraction(0)) - arc.d_out
        for u in range(len(nodes)):
            rows.append([(j, cv) for j, cv in acc[u].items() if cv])
            rhs.append(Fraction(0))

    return LinearProgram(n_vars=nv, objective=objective, rows=rows, rhs=rhs,
                         lower=[Fraction(0)] * nv, upper=[None] * nv, var_tags=tags)


@dataclass(frozen=True)
class GnfpArc:
    tail: tuple
    head: tuple
    cost: Fraction
    upper: Fraction
    multiplier: Fraction
    tag: Tag


@dataclass(eq=False)
class GnfpModel:
    """Generalized-flow view: per-arc cost, capacity and gain multiplier.

    One unit leaves the source; an arc carrying flow f delivers
    multiplier·f at its head.  Source arcs aggregate a whole orbit, so their
    multiplier is 1/(orbit size): one unit spread over the orbit delivers a
    single representative's worth of flow downstream.  Sink arcs aggregate
    the other way (multiplier = orbit size)."""

    arcs: list[GnfpArc]
    internal_nodes: list[tuple]


def build_gnfp(q: QuotientGraph) -> GnfpModel:
    if q.m == 0:
        raise ValueError("model needs at least one gate")
    m, nodes = q.m, q.nodes
    arcs: list[GnfpArc] = []
    for u, node in enumerate(nodes):
        arcs.append(GnfpArc(("s",), ("v", 1, u), cost=Fraction(0),
                            upper=Fraction(node.orbit_size),
                            multiplier=Fraction(1, node.orbit_size),
                            tag=("theta", 0, u)))
    for k in range(1, m + 1):
        for ai, arc in enumerate(q.arcs):
            arcs.append(GnfpArc(("v", k, arc.src), ("v", k, arc.dst),
                                cost=Fraction(nodes[arc.src].orbit_size),
                                upper=Fraction(arc.d_out),
                                multiplier=Fraction(arc.d_in, arc.d_out),
                                tag=("lam", k, ai)))
    for k in range(1, m):
        for u in q.compliant[k - 1]:
            arcs.append(GnfpArc(("v", k, u), ("v", k + 1, u), cost=Fraction(0),
                                upper=Fraction(1), multiplier=Fraction(1),
                                tag=("theta", k, u)))
    for u in q.compliant[m - 1]:
        arcs.append(GnfpArc(("v", m, u), ("t",), cost=Fraction(0),
                            upper=Fraction(1),
                            multiplier=Fraction(nodes[u].orbit_size),
                            tag=("theta", m, u)))
    internal = [("v", k, u) for k in range(1, m + 1) for u in range(len(nodes))]
    return GnfpModel(arcs=arcs, internal_nodes=internal)


def gnfp_lp(model: GnfpModel) -> LinearProgram:
    """Flatten the flow model into equality form for the simplex."""
    nv = len(model.arcs)
    row_of = {v: i + 2 for i, v in enumerate(model.internal_nodes)}
    acc: list[dict[int, Fraction]] = [{} for _ in range(len(row_of) + 2)]
    rhs = [Fraction(1), Fraction(1)] + [Fraction(0)] * len(row_of)
    for j, arc in enumerate(model.arcs):
        ri = 0 if arc.tail == ("s",) else row_of[arc.tail]
        acc[ri][j] = acc[ri].get(j, Fraction(0)) + 1
        if arc.head == ("t",):
            acc[1][j] = acc[1].get(j, Fraction(0)) + arc.multiplier
        else:
            ri = row_of[arc.head]
            acc[ri][j] = acc[ri].get(j, Fraction(0)) - arc.multiplier
    rows = [[(j, cv) for j, cv in row.items() if cv] for row in acc]
    return LinearProgram(n_vars=nv,
                         objective=[arc.cost for arc in model.arcs],
                         rows=rows, rhs=rhs,
                         lower=[Fraction(0)] * nv,
                         upper=[arc.upper for arc in model.arcs],
                         var_tags=[arc.tag for arc in model.arcs])


# ---------------------------------------------------------------------------
# solving

def simplex_solve(lp: LinearProgram) -> LpSolution:
    c, cols, b, lb, ub = lp.float_arrays()
    try:
        status, x, obj = simplex.solve(c, cols, b, lb, ub)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"basis factorization failed: {exc}") from exc
    residual = 0.0
    if status == simplex.OPTIMAL:
        for row, beta in zip(lp.rows, lp.rhs):
            r = sum(float(coef) * x[j] for j, coef in row) - float(beta)
            residual = max(residual, abs(r))
    return LpSolution(status=status, objective=obj, values=list(x),
                      var_tags=list(lp.var_tags), residual=residual)


def _shortest_quotient_path(q: QuotientGraph) -> ReducedPath:
    """0-1 BFS over (layer, orbit): intra arcs cost 1, boundary arcs 0."""
    m, nnodes = q.m, len(q.nodes)
    compl = [set(ids) for ids in q.compliant]
    INF = float("inf")
    dist = [[INF] * nnodes for _ in range(m + 1)]
    parent: dict[tuple[int, int], tuple] = {}
    dq = deque()
    for u in range(nnodes):
        dist[1][u] = 0
        parent[(1, u)] = (None, ("enter", u))
        dq.append((0, 1, u))

    end = None
    while dq:
        d, k, u = dq.popleft()
        if d > dist[k][u]:
            continue
        if u in compl[k - 1]:
            if k == m:
                end = (k, u)
                break
            if d < dist[k + 1][u]:
                dist[k + 1][u] = d
                parent[(k + 1, u)] = ((k, u), ("cross", k, u))
                dq.appendleft((d, k + 1, u))
        for ai in q.out_arcs[u]:
            v = q.arcs[ai].dst
            if d + 1 < dist[k][v]:
                dist[k][v] = d + 1
                parent[(k, v)] = ((k, u), ("swap", k, ai))
                dq.append((d + 1, k, v))
    if end is None:
        raise SolverError("no compliant path through the quotient graph")

    steps: list[tuple] = []
    state = end
    while state is not None:
        prev, move = parent[state]
        steps.append(move)
        state = prev
    steps.reverse()
    steps.append(("cross", m, end[1]))

    path = ReducedPath(opt=dist[end[0]][end[1]], steps=steps)
    for move in steps:
        if move[0] == "enter":
            path.theta_support.add((0, move[1]))
        elif move[0] == "cross":
            path.theta_support.add((move[1], move[2]))
        else:
            path.lam_support.add((move[1], move[2]))
    return path


def solve_reduced(q: QuotientGraph):
    """Solve the reduced model: shortest path when every orbital multiplier
    is 1, otherwise the scaled LP via the simplex.  Returns (opt, solution)
    where the solution is a ReducedPath or an LpSolution."""
    if q.m == 0:
        return 0, ReducedPath(opt=0, steps=[], theta_support={(0, 0)})
    if all(arc.d_out == 1 and arc.d_in == 1 for arc in q.arcs):
        path = _shortest_quotient_path(q)
        return path.opt, path

    sol = simplex_solve(build_rspp_scaled(q))
    if sol.status != simplex.OPTIMAL:
        raise SolverError(f"simplex finished with status {sol.status}")
    aut_order = q.coupling.aut.order
    for v in sol.values:
        if v - 1e-6 > aut_order:
            raise SolverError(f"variable exceeds implied bound: {v} > {aut_order}")
    opt = round(sol.objective)
    if abs(sol.objective - opt) > 1e-6:
        raise SolverError(f"reduced optimum {sol.objective} is not integral")
    return opt, sol


# ---------------------------------------------------------------------------
# export

def write_lp(lp: LinearProgram, name: str = "nncp") -> str:
    """Render in LP text format (12 significant digits) for cross-checks
    with external solvers."""

    def vname(tag: Tag) -> str:
        return f"{tag[0]}_{tag[1]}_{tag[2]}"

    def num(v) -> str:
        return f"{float(v):.12g}"

    out = [f"\\ {name}", "Minimize", " obj:"]
    terms = [f" {num(cv)} {vname(tag)}" for cv, tag in zip(lp.objective, lp.var_tags)
             if cv != 0]
    out[-1] += "".join(terms) if terms else " 0 " + vname(lp.var_tags[0])
    out.append("Subject To")
    for ri, (row, beta) in enumerate(zip(lp.rows, lp.rhs)):
        lhs = " + ".join(f"{num(coef)} {vname(lp.var_tags[j])}" for j, coef in row)
        out.append(f" c{ri}: {lhs} = {num(beta)}")
    out.append("Bounds")
    for j, (lo, hi) in enumerate(zip(lp.lower, lp.upper)):
        nm = vname(lp.var_tags[j])
        if hi is None:
            out.append(f" {num(lo)} <= {nm}")
        else:
            out.append(f" {num(lo)} <= {nm} <= {num(hi)}")
    out.append("End")
    return "\n".join(out) + "\n"
