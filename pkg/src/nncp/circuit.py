"""Circuit model: RevLib-style ``.real`` parsing, decomposition of multi-qubit
gates into two-qubit gates, the gate graph, and the fixing pattern.

Only the *unordered pair of qubits* a two-qubit gate acts on matters for
SWAP-insertion: control/target orientation and the specific unitary are
irrelevant downstream, so the decomposition step erases everything else.
Multi-controlled gates are expanded with the usual controlled-V / V† ladder
construction, hard-coded as fixed position tables (one deterministic strategy,
no decomposition search).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParseError

# ---------------------------------------------------------------------------
# gate kinds

NOT = "NOT"
CNOT = "CNOT"
SWAP = "SWAP"
CV = "CV"
CVDAG = "CVDAG"
TOFFOLI3 = "TOFFOLI3"
TOFFOLI4 = "TOFFOLI4"
TOFFOLI5 = "TOFFOLI5"
FREDKIN3 = "FREDKIN3"
FREDKIN4 = "FREDKIN4"
PERES = "PERES"

ARITY = {
    NOT: 1,
    CNOT: 2,
    SWAP: 2,
    CV: 2,
    CVDAG: 2,
    TOFFOLI3: 3,
    FREDKIN3: 3,
    PERES: 3,
    TOFFOLI4: 4,
    FREDKIN4: 4,
    TOFFOLI5: 5,
}

#: default ``.real`` gate-token table; extend/override via parse_real(aliases=...)
GATE_TOKENS = {
    "t1": NOT,
    "t2": CNOT,
    "t3": TOFFOLI3,
    "t4": TOFFOLI4,
    "t5": TOFFOLI5,
    "f2": SWAP,
    "f3": FREDKIN3,
    "f4": FREDKIN4,
    "p3": PERES,
    "v": CV,
    "v+": CVDAG,
}

DIRECTIVES = {
    ".version",
    ".numvars",
    ".variables",
    ".inputs",
    ".outputs",
    ".constants",
    ".garbage",
    ".begin",
    ".end",
}


@dataclass(frozen=True)
class RawGate:
    """A named gate as read from a file: controls first, target(s) last."""

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ParseError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != ARITY[self.kind]:
            raise ParseError(
                f"{self.kind} expects {ARITY[self.kind]} qubits, got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ParseError(f"{self.kind} acts on repeated qubits {self.qubits}")


class TwoQubitGate:
    """An unordered pair of distinct qubits; all that SWAP-insertion sees."""

    __slots__ = ("pair",)

    def __init__(self, a: int, b: int):
        if a == b:
            raise ValueError(f"two-qubit gate needs distinct qubits, got ({a}, {b})")
        object.__setattr__(self, "pair", (a, b) if a < b else (b, a))

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoQubitGate) and self.pair == other.pair

    def __hash__(self) -> int:
        return hash(self.pair)

    def __iter__(self):
        return iter(self.pair)

    def __repr__(self) -> str:
        return f"TwoQubitGate{self.pair}"

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("TwoQubitGate is immutable")


@dataclass
class Circuit:
    """A preprocessed circuit: n qubits and an ordered list of two-qubit gates."""

    n: int
    gates: list[TwoQubitGate]
    qubit_names: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.qubit_names:
            self.qubit_names = [f"q{i + 1}" for i in range(self.n)]
        if len(self.qubit_names) != self.n:
            raise ValueError(f"{len(self.qubit_names)} names for {self.n} qubits")
        for g in self.gates:
            if not all(0 <= q < self.n for q in g.pair):
                raise ValueError(f"gate {g} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.gates)


# ---------------------------------------------------------------------------
# .real parsing

def parse_real(text, aliases: dict[str, str] | None = None):
    """Parse a ``.real``-style circuit file.

    Returns ``(gates, meta)`` where ``gates`` is the ordered list of RawGate
    and ``meta`` carries the directive values (``numvars``, ``variables``,
    ...).  ``aliases`` extends/overrides the gate-token table, e.g.
    ``{"pg": "PERES"}`` for collections that use a different Peres token.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    tokens = dict(GATE_TOKENS)
    if aliases:
        tokens.update({k.lower(): v for k, v in aliases.items()})

    meta: dict = {"variables": []}
    var_index: dict[str, int] = {}
    gates: list[RawGate] = []
    in_body = False
    ended = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]

        if head.startswith("."):
            directive = head.lower()
            if directive not in DIRECTIVES:
                raise ParseError(f"unknown directive {head!r}", line=lineno)
            if directive == ".begin":
                if in_body or ended:
                    raise ParseError("misplaced .begin", line=lineno)
                in_body = True
            elif directive == ".end":
                if not in_body:
                    raise ParseError(".end without .begin", line=lineno)
                in_body = False
                ended = True
            elif in_body:
                raise ParseError(f"directive {head!r} inside .begin/.end", line=lineno)
            elif directive == ".numvars":
                try:
                    meta["numvars"] = int(parts[1])
                except (IndexError, ValueError):
                    raise ParseError(".numvars expects an integer", line=lineno)
            elif directive == ".variables":
                meta["variables"] = parts[1:]
                var_index = {name: i for i, name in enumerate(parts[1:])}
                if len(var_index) != len(parts[1:]):
                    raise ParseError("duplicate variable name", line=lineno)
            else:
                meta[directive[1:]] = " ".join(parts[1:])
            continue

        if not in_body:
            raise ParseError(f"gate line outside .begin/.end: {line!r}", line=lineno)
        kind = tokens.get(head.lower())
        if kind is None:
            raise ParseError(f"unknown gate token {head!r}", line=lineno)
        qubits = []
        for name in parts[1:]:
            if name not in var_index:
                raise ParseError(f"undeclared variable {name!r}", line=lineno)
            qubits.append(var_index[name])
        try:
            gates.append(RawGate(kind, tuple(qubits)))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None

    if in_body:
        raise ParseError(".begin without matching .end")
    if "numvars" in meta and meta["variables"] and meta["numvars"] != len(meta["variables"]):
        raise ParseError(
            f".numvars {meta['numvars']} != {len(meta['variables'])} declared variables"
        )
    if "numvars" not in meta and meta["variables"]:
        meta["numvars"] = len(meta["variables"])
    return gates, meta


# ---------------------------------------------------------------------------
# decomposition tables
#
# Each entry is a sequence of (position, position) pairs into the gate's
# qubit tuple (controls first, target last).  Transcribed once from the fixed
# V/V†-ladder construction; the per-kind lengths (5, 4, 7, 13, 15, 29) are
# frozen by tests.

_TOFFOLI4_TABLE = [
    (0, 3), (0, 1), (1, 3), (0, 1), (1, 3), (1, 2), (2, 3),
    (0, 2), (2, 3), (1, 2), (2, 3), (0, 2), (2, 3),
]

DECOMPOSE_TABLE: dict[str, list[tuple[int, int]]] = {
    NOT: [],
    CNOT: [(0, 1)],
    SWAP: [(0, 1)],
    CV: [(0, 1)],
    CVDAG: [(0, 1)],
    TOFFOLI3: [(1, 2), (0, 1), (1, 2), (0, 1), (0, 2)],
    PERES: [(1, 2), (0, 2), (0, 1), (1, 2)],
    FREDKIN3: [(1, 2), (0, 2), (1, 2), (0, 1), (1, 2), (1, 2), (0, 1)],
    TOFFOLI4: list(_TOFFOLI4_TABLE),
    FREDKIN4: [(2, 3)] + _TOFFOLI4_TABLE + [(2, 3)],
    TOFFOLI5: [
        (0, 4), (0, 1), (1, 4), (0, 1), (1, 4), (1, 2), (2, 4),
        (0, 2), (2, 4), (1, 2), (2, 4), (0, 2), (2, 4), (2, 3),
        (3, 4), (0, 3), (3, 4), (1, 3), (3, 4), (0, 3), (3, 4),
        (2, 3), (3, 4), (0, 3), (3, 4), (1, 3), (3, 4), (0, 3), (3, 4),
    ],
}


def decompose(gates: list[RawGate], n: int | None = None,
              qubit_names: list[str] | None = None) -> Circuit:
    """Expand every multi-qubit gate into its fixed two-qubit sequence and
    drop single-qubit gates.  ``n`` defaults to the smallest count covering
    all referenced qubits (or ``len(qubit_names)`` when names are given)."""
    out: list[TwoQubitGate] = []
    top = -1
    for g in gates:
        table = DECOMPOSE_TABLE.get(g.kind)
        if table is None:
            raise ParseError(f"cannot decompose unsupported gate kind {g.kind!r}")
        top = max(top, *g.qubits) if g.qubits else top
        for a, b in table:
            out.append(TwoQubitGate(g.qubits[a], g.qubits[b]))
    if n is None:
        n = len(qubit_names) if qubit_names else top + 1
    return Circuit(n=n, gates=out, qubit_names=list(qubit_names or []))


# ---------------------------------------------------------------------------
# gate graph and fixing pattern

def gate_graph(c: Circuit) -> set[tuple[int, int]]:
    """Edge set of the gate graph on qubits (parallel gates collapse)."""
    return {g.pair for g in c.gates}


@dataclass(frozen=True)
class FixingPattern:
    """Partition of the qubits induced by the gate-graph components:
    singletons for every qubit in a component of size ≥ 3, one pair per
    2-qubit component, and all isolated qubits collected in a single free
    set.  The setwise stabilizer of this partition in S_n has order 2^p·f!.
    """

    classes: tuple[tuple[int, ...], ...]
    p: int          # number of pair classes
    f: int          # size of the free set (0 if there are no isolated qubits)
    c: int          # qubits living in components of size >= 3
    free: tuple[int, ...]   # the free set itself (may be empty)

    @property
    def group_order(self) -> int:
        return (2 ** self.p) * math.factorial(self.f)

    @property
    def trivial(self) -> bool:
        """True iff the stabilizer is trivial (every class effectively fixed)."""
        return self.group_order == 1


def fixing_pattern(c: Circuit) -> FixingPattern:
    edges = gate_graph(c)
    adj: dict[int, set[int]] = {q: set() for q in range(c.n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    seen = [False] * c.n
    classes: list[tuple[int, ...]] = []
    free: list[int] = []
    p = 0
    big = 0
    for start in range(c.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        if len(comp) == 1:
            free.extend(comp)
        elif len(comp) == 2:
            classes.append(tuple(comp))
            p += 1
        else:
            classes.extend((q,) for q in comp)
            big += len(comp)
    if free:
        classes.append(tuple(sorted(free)))
    classes.sort()
    return FixingPattern(classes=tuple(classes), p=p, f=len(free), c=big,
                         free=tuple(sorted(free)))
