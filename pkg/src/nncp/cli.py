"""Command-line interface.

Subcommands: ``solve`` (reduced / baseline / dp / all with cross-check),
``stats`` (model sizes and reduction factors), ``decompose`` (library gates
to two-qubit form), ``verify`` (re-check a saved schedule) and ``random``
(seeded benchmark instances).  Exit codes: 1 parse/usage, 2 a size cap was
hit, 3 the solver failed, 4 verification failed.

``--circuit`` accepts a ``.real`` file path or a generator descriptor
``classI:N:M`` / ``classII:N:M`` (combined with ``--seed``)."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .baseline import solve_spp
from .circuit import Circuit, decompose, parse_real
from .coupling import STAR, CouplingGraph, coupling_from_descriptor
from .dp import solve_star_dp, star_solution
from .errors import CapError, NncpError, ParseError, SolverError, VerificationError
from .generate import random_class_i, random_class_ii, to_real
from .lp import solve_reduced
from .perm import one_line_str
from .reconstruct import NncpSolution, reconstruct, verify
from .symmetry import quotient_graph, reduction_stats

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    circuit: str
    coupling: str
    method: str = "reduced"
    seed: int = 0
    out: str = "human"


def _load_circuit(desc: str, seed: int) -> Circuit:
    for prefix, gen in (("classI:", random_class_i), ("classII:", random_class_ii)):
        if desc.startswith(prefix):
            try:
                n, m = (int(v) for v in desc[len(prefix):].split(":"))
            except ValueError:
                raise ParseError(f"expected {prefix}N:M, got {desc!r}")
            try:
                return decompose(gen(n, m, seed), n=n)
            except ValueError as exc:
                raise ParseError(str(exc))
    path = Path(desc)
    if not path.is_file():
        raise ParseError(f"no such circuit file: {desc}")
    gates, meta = parse_real(path.read_text())
    return decompose(gates, n=meta.get("numvars"),
                     qubit_names=meta["variables"] or None)


def _solve_one(method: str, circuit: Circuit, coupling: CouplingGraph) -> NncpSolution:
    if method == "reduced":
        q = quotient_graph(circuit, coupling)
        _, sol = solve_reduced(q)
        return reconstruct(q, sol)
    if method == "baseline":
        return solve_spp(circuit, coupling)
    if method == "dp":
        if coupling.family != STAR:
            raise ParseError("--method dp needs a star coupling; "
                             "use --method reduced otherwise")
        return star_solution(circuit, solve_star_dp(circuit))
    raise ParseError(f"unknown method {method!r}")


def cmd_solve(cfg: RunConfig) -> int:
    circuit = _load_circuit(cfg.circuit, cfg.seed)
    coupling = coupling_from_descriptor(cfg.coupling, circuit.n)

    methods = ["reduced"]
    skipped = []
    if cfg.method == "all":
        if circuit.n <= 8:
            methods.append("baseline")
        else:
            skipped.append("baseline")
        if coupling.family == STAR:
            methods.append("dp")
        else:
            skipped.append("dp")
    else:
        methods = [cfg.method]

    solutions: dict[str, NncpSolution] = {}
    for method in methods:
        sol = _solve_one(method, circuit, coupling)
        report = verify(sol, circuit, coupling)
        if not report["ok"]:
            raise VerificationError(
                f"{method} schedule failed verification: {report['violations'][0]}")
        solutions[method] = sol

    opts = {method: sol.opt for method, sol in solutions.items()}
    if len(set(opts.values())) > 1:
        raise VerificationError(f"methods disagree on the optimum: {opts}")

    chosen = solutions[methods[0]]
    if cfg.out == "json":
        payload = chosen.to_json_dict()
        payload.update({"n": circuit.n, "m": circuit.m,
                        "coupling": cfg.coupling, "methods": opts})
        print(json.dumps(payload, indent=2))
    elif cfg.out == "csv":
        print("n,m,coupling,method,opt,swap_count")
        for method in methods:
            sol = solutions[method]
            print(f"{circuit.n},{circuit.m},{cfg.coupling},{method},"
                  f"{sol.opt},{len(sol.swaps)}")
    else:
        head = f"n={circuit.n} m={circuit.m} coupling={cfg.coupling}"
        if skipped:
            head += f" (skipped: {', '.join(skipped)})"
        print(head)
        for method in methods:
            print(f"{method}: opt={solutions[method].opt}")
        for k, t in chosen.swaps:
            print(f"swap after gate {k}: locations ({t.i + 1},{t.j + 1})")
        for idx, tau in enumerate(chosen.orders, start=1):
            print(f"order at gate {idx}: {one_line_str(tau)}")
    return 0


def cmd_stats(cfg: RunConfig) -> int:
    circuit = _load_circuit(cfg.circuit, cfg.seed)
    coupling = coupling_from_descriptor(cfg.coupling, circuit.n)
    stats = reduction_stats(quotient_graph(circuit, coupling))
    if cfg.out == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, **stats}, indent=2, default=str))
    elif cfg.out == "csv":
        def cell(v):  # per-boundary counts are lists; keep the row comma-safe
            return ";".join(map(str, v)) if isinstance(v, list) else str(v)
        print(",".join(stats))
        print(",".join(cell(v) for v in stats.values()))
    else:
        width = max(len(k) for k in stats)
        for k, v in stats.items():
            print(f"{k:<{width}}  {v}")
    return 0


def cmd_decompose(cfg: RunConfig) -> int:
    """Emit the two-qubit form; pairs come out as t2 lines since only the
    acted-on pair matters downstream."""
    circuit = _load_circuit(cfg.circuit, cfg.seed)
    lines = [f"# two-qubit decomposition: {circuit.m} gates",
             ".version 2.0",
             f".numvars {circuit.n}",
             ".variables " + " ".join(circuit.qubit_names),
             ".begin"]
    for g in circuit.gates:
        a, b = g.pair
        lines.append(f"t2 {circuit.qubit_names[a]} {circuit.qubit_names[b]}")
    lines.append(".end")
    print("\n".join(lines))
    return 0


def cmd_verify(solution_path: str, cfg: RunConfig) -> int:
    circuit = _load_circuit(cfg.circuit, cfg.seed)
    coupling = coupling_from_descriptor(cfg.coupling, circuit.n)
    try:
        sol = NncpSolution.from_json(Path(solution_path).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise ParseError(f"cannot read solution file: {exc}")
    report = verify(sol, circuit, coupling)
    print(json.dumps({"schema": SCHEMA_VERSION, **report}, indent=2))
    if not report["ok"]:
        raise VerificationError(report["violations"][0])
    return 0


def cmd_random(klass: str, n: int, m: int, seed: int) -> int:
    try:
        gates = (random_class_i if klass == "I" else random_class_ii)(n, m, seed)
    except ValueError as exc:
        raise ParseError(str(exc))
    sys.stdout.write(to_real(gates, n, comment=f"class {klass} n={n} m={m} seed={seed}"))
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nncp",
                                 description="SWAP-minimal nearest-neighbour "
                                             "compliance solver")
    sub = ap.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("--circuit", required=True,
                       help=".real file or classI:N:M / classII:N:M")
        p.add_argument("--coupling", required=True,
                       help="star | cycle | biclique:M | file:PATH")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", choices=["json", "csv", "human"], default="human")

    p = sub.add_parser("solve", help="compute a SWAP-minimal schedule")
    instance_args(p)
    p.add_argument("--method", choices=["reduced", "baseline", "dp", "all"],
                   default="reduced")

    p = sub.add_parser("stats", help="model sizes before/after reduction")
    instance_args(p)

    p = sub.add_parser("decompose", help="rewrite a circuit into two-qubit gates")
    p.add_argument("--circuit", required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="re-check a saved schedule")
    p.add_argument("--solution", required=True)
    p.add_argument("--circuit", required=True)
    p.add_argument("--coupling", required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("random", help="emit a seeded benchmark circuit")
    p.add_argument("--class", dest="klass", choices=["I", "II"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(RunConfig(args.circuit, args.coupling,
                                       args.method, args.seed, args.out))
        if args.command == "stats":
            return cmd_stats(RunConfig(args.circuit, args.coupling, "reduced",
                                       args.seed, args.out))
        if args.command == "decompose":
            return cmd_decompose(RunConfig(args.circuit, "", seed=args.seed))
        if args.command == "verify":
            return cmd_verify(args.solution,
                              RunConfig(args.circuit, args.coupling,
                                        seed=args.seed))
        return cmd_random(args.klass, args.n, args.m, args.seed)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NncpError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
