"""Exact permutation arithmetic on {0, ..., n-1}.

Permutations are stored in one-line notation: ``images[x]`` is the image of
``x``.  A qubit order is a permutation from locations to qubits, so
``images[loc]`` reads "the qubit sitting at location ``loc``".

Composition convention, fixed once and used everywhere: ``compose(p, q)`` is
*p after q*, i.e. ``compose(p, q)(x) == p(q(x))``.  Consequently
``compose(tau, sigma)`` for a transposition ``sigma = (i j)`` exchanges the
qubits at locations ``i`` and ``j`` (a SWAP gate as a right action), while
``compose(a, tau)`` relabels qubits (a left action).

Everything in this package is 0-based internally; the 1-based convention of
circuit files and CLI output is applied only at the I/O boundary (the
display helpers here emit 1-based text).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Permutation:
    """An immutable permutation of {0, ..., n-1} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Permutation is immutable")

    def swap(self, i: int, j: int) -> "Permutation":
        """Right-multiply by the transposition (i j): exchange the entries
        at positions i and j (the qubits at locations i and j)."""
        im = list(self.images)
        im[i], im[j] = im[j], im[i]
        p = object.__new__(Permutation)
        object.__setattr__(p, "images", tuple(im))
        return p


class Transposition:
    """An unordered pair of distinct locations; the group element (i j)."""

    __slots__ = ("i", "j")

    def __init__(self, i: int, j: int):
        if i == j:
            raise ValueError(f"transposition needs two distinct points, got ({i} {j})")
        if i > j:
            i, j = j, i
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    def __eq__(self, other) -> bool:
        return isinstance(other, Transposition) and (self.i, self.j) == (other.i, other.j)

    def __lt__(self, other: "Transposition") -> bool:
        return (self.i, self.j) < (other.i, other.j)

    def __hash__(self) -> int:
        return hash((self.i, self.j))

    def __iter__(self) -> Iterator[int]:
        return iter((self.i, self.j))

    def __repr__(self) -> str:
        return f"Transposition({self.i}, {self.j})"

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Transposition is immutable")

    def as_permutation(self, n: int) -> Permutation:
        im = list(range(n))
        im[self.i], im[self.j] = im[self.j], im[self.i]
        return Permutation(im)


def identity(n: int) -> Permutation:
    return Permutation(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, the permutation x ↦ p(q(x))."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    pi = p.images
    r = object.__new__(Permutation)
    object.__setattr__(r, "images", tuple(pi[x] for x in q.images))
    return r


def inverse(p: Permutation) -> Permutation:
    im = [0] * p.n
    for x, y in enumerate(p.images):
        im[y] = x
    r = object.__new__(Permutation)
    object.__setattr__(r, "images", tuple(im))
    return r


def conjugate_transposition(t: Transposition, b: Permutation) -> Transposition:
    """Conjugate of (i j) by b, i.e. b(i j)b⁻¹ = (b(i) b(j))."""
    if t.j >= b.n:
        raise ValueError(f"degree mismatch: transposition on ({t.i} {t.j}) vs degree {b.n}")
    return Transposition(b.images[t.i], b.images[t.j])


def one_line_str(p: Permutation) -> str:
    """1-based one-line notation, e.g. (3,1,2)."""
    return "(" + ",".join(str(x + 1) for x in p.images) + ")"


def cycle_str(p: Permutation) -> str:
    """1-based cycle notation for group elements in logs, e.g. (1 3 2)."""
    seen = [False] * p.n
    out = []
    for start in range(p.n):
        if seen[start] or p.images[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p.images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p.images[x]
        out.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
    return "".join(out) if out else "()"


def from_one_line(text: str) -> Permutation:
    """Parse 1-based one-line notation as produced by :func:`one_line_str`."""
    body = text.strip().strip("()")
    entries = [int(tok) for tok in body.replace(",", " ").split()]
    return Permutation([x - 1 for x in entries])


def all_permutations(n: int) -> Iterable[Permutation]:
    """Every element of S_n in lexicographic order (test/oracle helper)."""
    import itertools

    for im in itertools.permutations(range(n)):
        p = object.__new__(Permutation)
        object.__setattr__(p, "images", im)
        yield p
