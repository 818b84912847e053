"""Coupling-graph families, their SWAP transposition sets, and automorphism
groups.

The structured families carry their automorphism group *symbolically* (order
and generators only), so canonicalizing a qubit order against a star on 100
locations never enumerates the (n-1)! group elements: the coset minimum is
obtained by sorting images inside each side of the bipartition.  The cycle
group (order 2n) and GENERAL groups (backtracking search, small n only) are
enumerated outright.

Location conventions are fixed once: star center = location 0, biclique
small side = the first M locations, cycle = 0..n-1 in ring order.  Bicliques
require M < N; for M = N the side-swapping symmetry would make the group
larger than the S_M × S_N handled here.  Note that for C_4 (and complete
graphs) the reduction group used downstream is still a valid automorphism
group, just possibly not the largest one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import CapError, ParseError
from .perm import Permutation, Transposition, compose, identity, inverse

CYCLE = "cycle"
STAR = "star"
BICLIQUE = "biclique"
GENERAL = "general"

GENERAL_N_CAP = 10
GENERAL_ELEMENT_CAP = 50_000


@dataclass(eq=False)
class AutGroup:
    """Automorphism group of a coupling graph.

    ``elements`` is the full enumeration when available (cycle, GENERAL) and
    None for the symbolic factorial-sized families (star, biclique).
    """

    order: int
    generators: list[Permutation]
    family: str
    elements: list[Permutation] | None = None
    _inverses: list[Permutation] | None = field(default=None, repr=False)

    def inverses(self) -> list[Permutation]:
        """Element inverses aligned with ``elements`` (enumerated groups only)."""
        if self.elements is None:
            raise ValueError(f"{self.family} group is symbolic, not enumerated")
        if self._inverses is None:
            self._inverses = [inverse(b) for b in self.elements]
        return self._inverses


@dataclass(eq=False)
class CouplingGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    family: str
    aut: AutGroup
    split: int | None = None    # M for star (1) / biclique; None otherwise

    def __post_init__(self):
        if not _connected(self.n, self.edges):
            raise ValueError("coupling graph must be connected")

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self.edges


@dataclass(frozen=True)
class TranspositionSet:
    """One transposition per coupling edge; the SWAP alphabet T."""

    transpositions: tuple[Transposition, ...]

    def __iter__(self):
        return iter(self.transpositions)

    def __len__(self) -> int:
        return len(self.transpositions)


def transposition_set(g: CouplingGraph) -> TranspositionSet:
    return TranspositionSet(tuple(Transposition(i, j) for i, j in sorted(g.edges)))


def _connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _is_automorphism(p: Permutation, edges: frozenset) -> bool:
    im = p.images
    for a, b in edges:
        x, y = im[a], im[b]
        if ((x, y) if x < y else (y, x)) not in edges:
            return False
    return True


# ---------------------------------------------------------------------------
# family constructors

def make(family: str, n: int | None = None, m_side: int | None = None,
         edges=None) -> tuple[CouplingGraph, TranspositionSet, AutGroup]:
    """Build a coupling graph plus its transposition set and automorphism
    group.  ``family`` is one of cycle/star/biclique/general; bicliques take
    the small-side size ``m_side`` (with ``1 <= m_side < n - m_side``);
    general graphs take an explicit 0-based edge list."""
    if family == CYCLE:
        g = _make_cycle(n)
    elif family == STAR:
        g = _make_biclique(n, 1)
    elif family == BICLIQUE:
        g = _make_biclique(n, m_side)
    elif family == GENERAL:
        g = _make_general(edges)
    else:
        raise ValueError(f"unknown coupling family {family!r}")
    return g, transposition_set(g), g.aut


def _make_cycle(n: int) -> CouplingGraph:
    if n is None or n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = frozenset(tuple(sorted((i, (i + 1) % n))) for i in range(n))
    elements = []
    for s in range(n):
        elements.append(Permutation([(x + s) % n for x in range(n)]))       # rotations
        elements.append(Permutation([(s - x) % n for x in range(n)]))       # reflections
    elements.sort(key=lambda p: p.images)
    assert all(_is_automorphism(b, edges) for b in elements)
    gens = [Permutation([(x + 1) % n for x in range(n)]),
            Permutation([(-x) % n for x in range(n)])]
    aut = AutGroup(order=2 * n, generators=gens, family=CYCLE, elements=elements)
    return CouplingGraph(n=n, edges=edges, family=CYCLE, aut=aut)


def _make_biclique(n: int, m: int) -> CouplingGraph:
    """K_{M,N} with M = ``m`` < N = n - m; m = 1 is the star K_{1,N}."""
    if n is None or m is None:
        raise ValueError("biclique needs n and the small-side size")
    if not 1 <= m < n - m:
        raise ValueError(f"biclique needs 1 <= M < N, got M={m}, N={n - m}")
    if m == 1 and n - 1 < 2:
        raise ValueError("star needs at least 2 leaves")
    edges = frozenset((i, j) for i in range(m) for j in range(m, n))
    gens = []
    for i in range(m - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(Permutation(p))
    for i in range(m, n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(Permutation(p))
    assert all(_is_automorphism(b, edges) for b in gens)
    family = STAR if m == 1 else BICLIQUE
    aut = AutGroup(order=math.factorial(m) * math.factorial(n - m),
                   generators=gens, family=family)
    return CouplingGraph(n=n, edges=edges, family=family, aut=aut, split=m)


def _make_general(edge_list) -> CouplingGraph:
    if not edge_list:
        raise ValueError("general coupling needs a nonempty edge list")
    edges = frozenset(tuple(sorted(e)) for e in edge_list)
    n = max(max(e) for e in edges) + 1
    for a, b in edges:
        if a == b or a < 0:
            raise ValueError(f"bad edge ({a}, {b})")
    if n > GENERAL_N_CAP:
        raise CapError(f"general automorphism search capped at n <= {GENERAL_N_CAP}, got n={n}")
    elements = _enumerate_automorphisms(n, edges)
    elements.sort(key=lambda p: p.images)
    aut = AutGroup(order=len(elements), generators=list(elements),
                   family=GENERAL, elements=elements)
    return CouplingGraph(n=n, edges=edges, family=GENERAL, aut=aut)


def _enumerate_automorphisms(n: int, edges: frozenset) -> list[Permutation]:
    """All edge-preserving vertex bijections, by degree-respecting backtracking."""
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    deg = [len(a) for a in adj]
    out: list[Permutation] = []

    def extend(partial: list[int], used: set[int]):
        v = len(partial)
        if v == n:
            out.append(Permutation(partial))
            if len(out) > GENERAL_ELEMENT_CAP:
                raise CapError(
                    f"automorphism group larger than cap {GENERAL_ELEMENT_CAP}")
            return
        for cand in range(n):
            if cand in used or deg[cand] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj[v]) != (partial[u] in adj[cand]):
                    ok = False
                    break
            if ok:
                partial.append(cand)
                used.add(cand)
                extend(partial, used)
                partial.pop()
                used.discard(cand)

    extend([], set())
    return out


def coupling_from_descriptor(desc: str, n: int) -> CouplingGraph:
    """CLI descriptor → coupling graph: ``star``, ``cycle``, ``biclique:M``,
    or ``file:PATH`` (1-based "u v" edge lines)."""
    if desc == STAR:
        return _make_biclique(n, 1)
    if desc == CYCLE:
        return _make_cycle(n)
    if desc.startswith("biclique:"):
        try:
            m = int(desc.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad biclique descriptor {desc!r}")
        return _make_biclique(n, m)
    if desc.startswith("file:"):
        path = desc.split(":", 1)[1]
        edge_list = []
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    u, v = map(int, line.split())
                except ValueError:
                    raise ParseError(f"bad edge line {line!r}", line=lineno)
                edge_list.append((u - 1, v - 1))
        g = _make_general(edge_list)
        if g.n != n:
            raise ParseError(f"coupling file covers {g.n} locations, circuit has {n} qubits")
        return g
    raise ParseError(f"unknown coupling descriptor {desc!r}")


# ---------------------------------------------------------------------------
# canonical coset representatives

def canonical_right(tau: Permutation, g: CouplingGraph) -> tuple[Permutation, Permutation]:
    """Lexicographically smallest element of the left coset τ·Aut(Coup(E)),
    plus a witness ``b`` with ``tau_star == compose(tau, inverse(b))``.

    For star/biclique the minimum is reached by sorting the images inside
    each side of the bipartition (the group is exactly the side-preserving
    permutations); for cycle/general it is a scan over the enumerated group.
    """
    if g.split is not None:
        im = tau.images
        m = g.split
        star_im = tuple(sorted(im[:m])) + tuple(sorted(im[m:]))
        if star_im == im:
            return tau, identity(g.n)
        tau_star = Permutation(star_im)
        return tau_star, compose(inverse(tau_star), tau)

    best = None
    best_b = None
    inverses = g.aut.inverses()
    for b, b_inv in zip(g.aut.elements, inverses):
        cand = compose(tau, b_inv)
        if best is None or cand.images < best.images:
            best, best_b = cand, b
    return best, best_b
