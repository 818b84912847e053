import itertools

import pytest

from nncp.coupling import (GENERAL_N_CAP, CouplingGraph, canonical_right,
                           coupling_from_descriptor, make, transposition_set)
from nncp.errors import CapError, ParseError
from nncp.perm import Permutation, all_permutations, compose, inverse


def brute_aut(g: CouplingGraph) -> list[Permutation]:
    out = []
    for images in itertools.permutations(range(g.n)):
        if all(tuple(sorted((images[a], images[b]))) in g.edges
               for a, b in g.edges):
            out.append(Permutation(images))
    return out


@pytest.mark.parametrize("family, n, m_side, order", [
    ("cycle", 4, None, 8),      # dihedral 2n
    ("cycle", 6, None, 12),
    ("star", 5, None, 24),      # leaves permute freely: (n-1)!
    ("star", 6, None, 120),
    ("biclique", 6, 2, 48),     # 2!·4!
    ("biclique", 5, 2, 12),
])
def test_aut_orders(family, n, m_side, order):
    g, _, aut = make(family, n=n, m_side=m_side)
    assert aut.order == order
    if n <= 6:
        assert len(brute_aut(g)) == order


@pytest.mark.parametrize("family, n, m_side", [
    ("cycle", 5, None), ("star", 5, None), ("biclique", 5, 2)])
def test_generators_inside_brute_group(family, n, m_side):
    g, _, aut = make(family, n=n, m_side=m_side)
    brute = {p.images for p in brute_aut(g)}
    assert all(gen.images in brute for gen in aut.generators)
    if aut.elements is not None:
        assert {p.images for p in aut.elements} == brute


def test_cycle_elements_closed():
    _, _, aut = make("cycle", n=6)
    elems = {p.images for p in aut.elements}
    for a in aut.elements:
        assert inverse(a).images in elems
        for b in aut.elements:
            assert compose(a, b).images in elems


def test_general_family_detects_square():
    g, tset, aut = make("general", edges=[(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4 and aut.order == 8
    assert {(t.i, t.j) for t in tset.transpositions} == set(g.edges)


def test_general_caps():
    with pytest.raises(CapError):
        make("general", edges=[(i, i + 1) for i in range(GENERAL_N_CAP)])
    # K_9 has 9! = 362880 automorphisms, far past the element cap
    with pytest.raises(CapError):
        make("general", edges=list(itertools.combinations(range(9), 2)))


def test_make_validation():
    with pytest.raises(ValueError, match="connected"):
        make("general", edges=[(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="1 <= M < N"):
        make("biclique", n=4, m_side=2)
    with pytest.raises(ValueError):
        make("nonsense", n=4)


def test_transposition_set_matches_edges():
    g, tset, _ = make("star", n=4)
    assert {(t.i, t.j) for t in transposition_set(g).transpositions} == set(g.edges)
    assert set(g.edges) == {(0, 1), (0, 2), (0, 3)}


# --- canonical coset representatives -----------------------------------------

def brute_canonical(tau: Permutation, g: CouplingGraph) -> Permutation:
    return min(compose(tau, inverse(b)) for b in brute_aut(g))


@pytest.mark.parametrize("family, n, m_side", [
    ("cycle", 5, None), ("star", 5, None), ("biclique", 5, 2),
    ("cycle", 6, None), ("biclique", 6, 2)])
def test_canonical_right_matches_brute_minimum(family, n, m_side):
    g, _, _ = make(family, n=n, m_side=m_side)
    for tau in itertools.islice(all_permutations(n), 0, None, 7):
        rep, b = canonical_right(tau, g)
        assert rep == brute_canonical(tau, g)
        assert rep == compose(tau, inverse(b))


@pytest.mark.parametrize("family, n, m_side", [
    ("cycle", 5, None), ("star", 5, None), ("biclique", 5, 2)])
def test_canonical_right_constant_on_cosets(family, n, m_side):
    g, _, _ = make(family, n=n, m_side=m_side)
    tau = Permutation((3, 1, 4, 0, 2))
    rep, _ = canonical_right(tau, g)
    for b in brute_aut(g):
        rep2, _ = canonical_right(compose(tau, b), g)
        assert rep2 == rep


def test_canonical_right_witness_in_group():
    g, _, _ = make("biclique", n=6, m_side=2)
    brute = {p.images for p in brute_aut(g)}
    tau = Permutation((5, 3, 1, 0, 4, 2))
    _, b = canonical_right(tau, g)
    assert b.images in brute


# --- CLI descriptors ----------------------------------------------------------

def test_descriptor_named_families():
    g = coupling_from_descriptor("star", 5)
    assert g.family == "star"
    g = coupling_from_descriptor("cycle", 5)
    assert g.family == "cycle"
    g = coupling_from_descriptor("biclique:2", 5)
    assert g.family == "biclique" and g.split == 2


def test_descriptor_file(tmp_path):
    p = tmp_path / "edges.txt"
    p.write_text("# a square\n1 2\n2 3\n3 4\n4 1\n")
    g = coupling_from_descriptor(f"file:{p}", 4)
    assert g.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})


def test_descriptor_errors():
    with pytest.raises(ParseError):
        coupling_from_descriptor("biclique:x", 5)
    with pytest.raises(ParseError):
        coupling_from_descriptor("torus", 5)
