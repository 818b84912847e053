"""Orbit and orbital structure of the layered search graph.

The solver never touches the m·n! concrete qubit orders.  A qubit order τ is
identified with every aτb⁻¹ for a in the gate-side stabilizer S_n(F) (qubit
relabelings that fix each fixing-pattern class) and b in Aut(Coup(E))
(location relabelings).  This module computes

  * B_τ — the subgroup of coupling automorphisms that setwise stabilize the
    pattern classes pulled back through τ; its order gives orbit sizes via
    orbit–stabilizer, and its edge classes give the arc multiplicities;
  * one canonical representative per orbit (DFS over canonical forms,
    right-multiplying by the SWAP transpositions — T is closed under
    conjugation by coupling automorphisms, so right moves alone reach every
    orbit);
  * the quotient graph: orbit nodes, orbital arcs with in/out degrees, and
    per-gate compliance marks.  All layers share one node/arc structure since
    the layers are identical copies; only the compliance marks vary by gate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .circuit import Circuit, FixingPattern, fixing_pattern
from .coupling import BICLIQUE, CYCLE, STAR, CouplingGraph, canonical_right
from .errors import CapError
from .perm import Permutation, Transposition, compose, identity, inverse

ORBIT_NODE_CAP = 5_000_000
SNF_ELEMENT_CAP = 100_000

Edge = tuple[int, int]


# ---------------------------------------------------------------------------
# the stabilizer S_n(F) on the qubit side

def snf_elements(fp: FixingPattern, n: int) -> list[Permutation]:
    """All qubit relabelings that setwise stabilize every fixing-pattern
    class: independent swaps of the p pairs times permutations of the free
    set, 2^p·f! elements in total."""
    if fp.group_order > SNF_ELEMENT_CAP:
        raise CapError(
            f"stabilizer S_n(F) has {fp.group_order} elements, cap is {SNF_ELEMENT_CAP}")
    pairs = [cl for cl in fp.classes if len(cl) == 2 and cl != fp.free]
    free = list(fp.free)
    out = []
    for bits in itertools.product((False, True), repeat=len(pairs)):
        base = list(range(n))
        for swap_it, (q1, q2) in zip(bits, pairs):
            if swap_it:
                base[q1], base[q2] = q2, q1
        for img in itertools.permutations(free):
            im = list(base)
            for slot, q in zip(free, img):
                im[slot] = q
            out.append(Permutation(im))
    out.sort(key=lambda p: p.images)
    return out


# ---------------------------------------------------------------------------
# B_tau and its edge classes

@dataclass(eq=False)
class BTau:
    """Stabilizer (inside Aut(Coup(E))) of the pattern classes pulled back
    through τ, together with its orbit partition of the coupling edges."""

    order: int
    edge_orbits: list[list[Edge]]
    representative_edges: list[Edge]
    elements: list[Permutation] | None = None
    class_of: dict[Edge, int] = field(default_factory=dict, repr=False)

    def class_size(self, e: Edge) -> int:
        return len(self.edge_orbits[self.class_of[e]])

    def class_rep(self, e: Edge) -> Edge:
        return self.representative_edges[self.class_of[e]]


def _finish(order, groups, elements=None) -> BTau:
    """Package edge classes deterministically (sorted by representative)."""
    orbits = sorted((sorted(g) for g in groups), key=lambda cl: cl[0])
    class_of = {}
    for ci, cl in enumerate(orbits):
        for e in cl:
            class_of[e] = ci
    return BTau(order=order, edge_orbits=[list(cl) for cl in orbits],
                representative_edges=[cl[0] for cl in orbits],
                elements=elements, class_of=class_of)


def b_tau(tau: Permutation, fp: FixingPattern, g: CouplingGraph) -> BTau:
    edges = sorted(g.edges)
    if fp.group_order == 1:
        # every pattern class is a singleton: only the identity stabilizes
        # all the pulled-back points, for any coupling family
        return _finish(1, [[e] for e in edges])

    inv = inverse(tau)
    loc_classes = [frozenset(inv.images[q] for q in cl) for cl in fp.classes]

    if g.family in (STAR, BICLIQUE):
        # the group is the direct product of the symmetric groups on each
        # "pattern class ∩ side" part; order = Π part! = 2^(p-p̂)·f1!·f2!
        part_id = [0] * g.n
        sizes = []
        for cl in loc_classes:
            for side in (frozenset(x for x in cl if x < g.split),
                         frozenset(x for x in cl if x >= g.split)):
                if side:
                    pid = len(sizes)
                    sizes.append(len(side))
                    for x in side:
                        part_id[x] = pid
        order = math.prod(math.factorial(s) for s in sizes)
        groups: dict[tuple[int, int], list[Edge]] = {}
        for e in edges:
            groups.setdefault((part_id[e[0]], part_id[e[1]]), []).append(e)
        for (pu, pv), cl in groups.items():
            assert len(cl) == sizes[pu] * sizes[pv]
        return _finish(order, groups.values())

    if g.family == CYCLE and fp.c >= 3:
        # three pulled-back fixed points pin down every rotation/reflection
        return _finish(1, [[e] for e in edges])

    # small enumerated groups (cycle with c < 3, or GENERAL): filter directly
    kept = [b for b in g.aut.elements
            if all(frozenset(b.images[x] for x in cl) == cl for cl in loc_classes)]
    groups = _edge_orbits_under(kept, edges)
    return _finish(len(kept), groups, elements=kept)


def _edge_orbits_under(elements: list[Permutation], edges: list[Edge]) -> list[list[Edge]]:
    remaining = set(edges)
    groups = []
    while remaining:
        e = min(remaining)
        orb = {e}
        frontier = [e]
        while frontier:
            u, v = frontier.pop()
            for b in elements:
                x, y = b.images[u], b.images[v]
                e2 = (x, y) if x < y else (y, x)
                if e2 not in orb:
                    orb.add(e2)
                    frontier.append(e2)
        groups.append(sorted(orb))
        remaining -= orb
    return groups


# ---------------------------------------------------------------------------
# orbit enumeration

@dataclass(eq=False)
class OrbitNode:
    rep: Permutation
    orbit_size: int
    compliant: dict[int, bool] = field(default_factory=dict)


@dataclass(eq=False)
class OrbitalArc:
    src: int
    dst: int
    edge_class_rep: Transposition
    size: int
    d_out: int
    d_in: int


def canonical_form(tau: Permutation, snf: list[Permutation], g: CouplingGraph
                   ) -> tuple[Permutation, Permutation]:
    """Canonical representative of the full orbit S_n(F)·τ·Aut(Coup(E)):
    the minimum over the left-multiplied coset canonical forms.  Returns the
    representative and a witness ``b`` with ``rep == compose(a, compose(tau,
    inverse(b)))`` for some qubit relabeling ``a`` (``a`` never matters
    downstream: it moves qubit labels, not locations)."""
    if len(snf) == 1:
        return canonical_right(tau, g)
    best = None
    best_b = None
    for a in snf:
        cand, b = canonical_right(compose(a, tau), g)
        if best is None or cand.images < best.images:
            best, best_b = cand, b
    return best, best_b


def layer_orbits(fp: FixingPattern, g: CouplingGraph,
                 _btau_cache: dict | None = None) -> list[OrbitNode]:
    """One canonical representative per orbit of a layer, orbit sizes by
    orbit–stabilizer.  Nodes are sorted by representative."""
    snf = snf_elements(fp, g.n)
    moves = sorted(g.edges)
    start, _ = canonical_form(identity(g.n), snf, g)
    seen = {start.images}
    stack = [start]
    reps = [start]
    while stack:
        rep = stack.pop()
        for i, j in moves:
            cand, _ = canonical_form(rep.swap(i, j), snf, g)
            if cand.images not in seen:
                if len(seen) >= ORBIT_NODE_CAP:
                    raise CapError(
                        f"orbit count exceeds cap {ORBIT_NODE_CAP}; "
                        "use a more symmetric coupling family or smaller n")
                seen.add(cand.images)
                reps.append(cand)
                stack.append(cand)
    reps.sort(key=lambda p: p.images)

    group_order = fp.group_order * g.aut.order
    nodes = []
    for rep in reps:
        bt = b_tau(rep, fp, g)
        if _btau_cache is not None:
            _btau_cache[rep.images] = bt
        size, remainder = divmod(group_order, bt.order)
        assert remainder == 0
        nodes.append(OrbitNode(rep=rep, orbit_size=size))
    return nodes


def layer_orbitals(nodes: list[OrbitNode], fp: FixingPattern, g: CouplingGraph,
                   _btau_cache: dict | None = None) -> list[OrbitalArc]:
    """One arc per (source orbit, B_τ edge class); destination and reverse
    degree found by canonicalizing the moved representative."""
    snf = snf_elements(fp, g.n)
    cache = _btau_cache if _btau_cache is not None else {}
    index = {node.rep.images: i for i, node in enumerate(nodes)}

    def bt_of(rep: Permutation) -> BTau:
        bt = cache.get(rep.images)
        if bt is None:
            bt = b_tau(rep, fp, g)
            cache[rep.images] = bt
        return bt

    arcs = []
    for i, node in enumerate(nodes):
        bt = bt_of(node.rep)
        for ci, (u, v) in enumerate(bt.representative_edges):
            d_out = len(bt.edge_orbits[ci])
            dst_rep, b = canonical_form(node.rep.swap(u, v), snf, g)
            j = index[dst_rep.images]
            x, y = b.images[u], b.images[v]
            back = (x, y) if x < y else (y, x)
            d_in = bt_of(dst_rep).class_size(back)
            size = node.orbit_size * d_out
            assert size == nodes[j].orbit_size * d_in
            arcs.append(OrbitalArc(src=i, dst=j, edge_class_rep=Transposition(u, v),
                                   size=size, d_out=d_out, d_in=d_in))
    return arcs


# ---------------------------------------------------------------------------
# the full quotient structure

@dataclass(eq=False)
class QuotientGraph:
    """Shared per-layer orbit/orbital structure plus per-gate compliance.

    ``compliant[k]`` lists the orbit ids whose members put gate k's qubits on
    adjacent locations; the source arcs (one per orbit, out-degree = orbit
    size) and sink arcs (one per compliant orbit of the last gate, in-degree
    = orbit size) are implicit."""

    circuit: Circuit
    coupling: CouplingGraph
    fp: FixingPattern
    nodes: list[OrbitNode]
    arcs: list[OrbitalArc]
    compliant: list[list[int]]
    out_arcs: list[list[int]]
    arc_lookup: dict[tuple[int, Edge], int]
    edge_class_rep: list[dict[Edge, Edge]]
    _snf: list[Permutation]
    _node_index: dict[tuple, int]

    @property
    def n(self) -> int:
        return self.coupling.n

    @property
    def m(self) -> int:
        return self.circuit.m

    def canonical(self, tau: Permutation) -> tuple[Permutation, Permutation]:
        return canonical_form(tau, self._snf, self.coupling)

    def node_id(self, rep: Permutation) -> int:
        return self._node_index[rep.images]


def quotient_graph(c: Circuit, g: CouplingGraph) -> QuotientGraph:
    if c.n != g.n:
        raise ValueError(f"circuit has {c.n} qubits, coupling {g.n} locations")
    fp = fixing_pattern(c)
    btaus: dict = {}
    nodes = layer_orbits(fp, g, _btau_cache=btaus)
    arcs = layer_orbitals(nodes, fp, g, _btau_cache=btaus)

    out_arcs: list[list[int]] = [[] for _ in nodes]
    arc_lookup: dict[tuple[int, Edge], int] = {}
    for ai, arc in enumerate(arcs):
        out_arcs[arc.src].append(ai)
        arc_lookup[(arc.src, (arc.edge_class_rep.i, arc.edge_class_rep.j))] = ai
    edge_class_rep = []
    for node in nodes:
        bt = btaus[node.rep.images]
        edge_class_rep.append({e: bt.class_rep(e) for e in bt.class_of})

    compliant: list[list[int]] = []
    inv_reps = [inverse(node.rep) for node in nodes]
    for k, gate in enumerate(c.gates):
        q1, q2 = gate.pair
        ids = []
        for i, node in enumerate(nodes):
            a, b = inv_reps[i].images[q1], inv_reps[i].images[q2]
            ok = g.has_edge(a, b)
            node.compliant[k] = ok
            if ok:
                ids.append(i)
        compliant.append(ids)

    return QuotientGraph(
        circuit=c, coupling=g, fp=fp, nodes=nodes, arcs=arcs,
        compliant=compliant, out_arcs=out_arcs, arc_lookup=arc_lookup,
        edge_class_rep=edge_class_rep, _snf=snf_elements(fp, g.n),
        _node_index={node.rep.images: i for i, node in enumerate(nodes)})


def reduction_stats(q: QuotientGraph) -> dict:
    """Counts and reduction percentages against the unreduced layered model
    (m·n!·|T| + n! + Σ_k|F^k| variables, m·n! + 2 constraints)."""
    n, m = q.n, q.m
    n_fact = math.factorial(n)
    n_edges = len(q.coupling.edges)
    cross = [len(ids) for ids in q.compliant]

    red_vars = m * len(q.arcs) + len(q.nodes) + sum(cross)
    red_consts = m * len(q.nodes) + 2
    fk = 2 * n_edges * math.factorial(n - 2)
    unred_vars = m * n_fact * n_edges + n_fact + m * fk
    unred_consts = m * n_fact + 2

    def pct(unred, red):
        # Fraction first: plain int division overflows past ~1e308
        return float(Fraction((unred - red) * 100, unred)) if unred else 0.0

    return {
        "n": n,
        "m": m,
        "family": q.coupling.family,
        "aut_order": q.coupling.aut.order,
        "snf_order": q.fp.group_order,
        "nodes_per_layer": len(q.nodes),
        "arcs_per_layer": len(q.arcs),
        "source_arcs": len(q.nodes),
        "cross_arcs": cross,
        "variables": red_vars,
        "constraints": red_consts,
        "unreduced_variables": unred_vars,
        "unreduced_constraints": unred_consts,
        "reduction_variables_pct": pct(unred_vars, red_vars),
        "reduction_constraints_pct": pct(unred_consts, red_consts),
    }
