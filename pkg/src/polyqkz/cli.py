"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import asm, loopmodel, qkz
from .sampling import random_z
from .scalar import DegenerateParameters, parse_scalar, rat, render
from .verify import SUITES, Options, run_suite

SIZE_GUARD_N = 8  # homogeneous/loop size n
SIZE_GUARD_CHAIN = 13  # inhomogeneous chain length N


class UsageError(Exception):
    pass


def _guard_n(n: int, allow_large: bool, label: str = "--n"):
    if n < 1:
        raise UsageError(f"{label} must be >= 1")
    if n > SIZE_GUARD_N and not allow_large:
        raise UsageError(f"{label} {n} exceeds the size guard {SIZE_GUARD_N}; pass --allow-large to override")


def _parse_q(text: str):
    try:
        q = parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse q {text!r}: {exc}") from None
    return q


def _parse_rat(text: str, label: str):
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {label} {text!r} as a rational") from None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _idx(a) -> str:
    return " ".join(map(str, a))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_ground_state(args) -> tuple[int, str]:
    _guard_n(args.n, args.allow_large)
    tau = None if args.tau in (None, "sym") else _parse_rat(args.tau, "--tau")
    table = qkz.psi_table(args.n, tau=tau)
    if args.format == "json":
        return 0, qkz.table_to_json(args.n, table, tau) + "\n"
    if args.format == "csv":
        # symbolic values are written as their coefficient lists in tau
        rows = [(_idx(a), " ".join(str(c) for c in v.to_list()) if tau is None else render(v))
                for a, v in table.items()]
        return 0, _csv(["a", "value"], rows)
    head = f"n={args.n} N={2 * args.n + 1} tau={'symbolic' if tau is None else render(tau)}"
    lines = [head] + [f"psi{list(a)} = {v if tau is None else render(v)}" for a, v in table.items()]
    return 0, "\n".join(lines) + "\n"


def cmd_loop(args) -> tuple[int, str]:
    _guard_n(args.n, args.allow_large)
    xi = loopmodel.loop_ground_state(args.n)
    partial = {a: loopmodel.partial_sum_xi(a, xi) for a in range(2, 2 * args.n + 1, 2)}
    pats = sorted(xi.entries)
    if args.format == "json":
        doc = json.loads(xi.to_json())
        doc["partial_sums"] = {str(a): v for a, v in partial.items()}
        doc["total"] = xi.total()
        return 0, json.dumps(doc) + "\n"
    if args.format == "csv":
        return 0, _csv(["pattern", "value"], [(_idx(p), xi.entries[p]) for p in pats])
    lines = [f"n={args.n} patterns={len(pats)}"]
    lines += [f"{list(p)} {xi.entries[p]}" for p in pats]
    lines += [f"xi(1,{a}) = {v}" for a, v in partial.items()]
    lines.append(f"total = {xi.total()}")
    return 0, "\n".join(lines) + "\n"


def cmd_asm_table(args) -> tuple[int, str]:
    _guard_n(args.max_n, True, "--max-n")
    if args.format == "json":
        return 0, asm.asm_table_json(args.max_n) + "\n"
    if args.format == "csv":
        return 0, asm.asm_table_csv(args.max_n)
    lines = [f"A({r['n']}) = {r['A']}  refined: {' '.join(map(str, r['refined']))}"
             for r in asm.asm_rows(args.max_n)]
    return 0, "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    if args.max_n is not None:
        _guard_n(args.max_n, args.allow_large, "--max-n")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be >= 1")
    sizes = None
    if args.N:
        for N in args.N:
            if N < 3 or N % 2 == 0:
                raise UsageError(f"--N must be odd and >= 3, got {N}")
            if N > SIZE_GUARD_CHAIN and not args.allow_large:
                raise UsageError(f"--N {N} exceeds the size guard {SIZE_GUARD_CHAIN}; pass --allow-large")
        sizes = tuple(args.N)
    q = _parse_q(args.q) if args.q is not None else None
    opt = Options(seed=args.seed, trials=args.trials, sizes=sizes, q=q, max_n=args.max_n)
    report = run_suite(args.suite, opt)
    text = {"json": report.to_json() + "\n", "csv": report.to_csv()}.get(args.format, report.pretty())
    return (0 if report.passed else 1), text


def cmd_inhom_component(args) -> tuple[int, str]:
    q = _parse_q(args.q)
    if args.z:
        z = [_parse_rat(t, "--z") for t in args.z]
    elif args.N:
        if args.N < 3 or args.N % 2 == 0:
            raise UsageError("--N must be odd and >= 3")
        z = random_z(random.Random(args.seed), args.N, q)
    else:
        raise UsageError("give spectral parameters with --z or a chain length with --N")
    N = len(z)
    if N < 3 or N % 2 == 0:
        raise UsageError("the number of spectral parameters must be odd and >= 3")
    if N > SIZE_GUARD_CHAIN and not args.allow_large:
        raise UsageError(f"N={N} exceeds the size guard {SIZE_GUARD_CHAIN}; pass --allow-large")
    n = (N - 1) // 2
    try:
        if args.b:
            idx = qkz.check_up_index(args.b, n)
            rows = [(idx, qkz.psibar_inhom(idx, z, q))]
            kind = "up"
        else:
            kind = "down"
            if args.a:
                idx = qkz.check_down_index(args.a, n)
                rows = [(idx, qkz.psi_inhom(idx, z, q))]
            else:
                rows = sorted(qkz.psi_vector_inhom(z, q).entries.items())
    except DegenerateParameters as exc:
        raise UsageError(f"non-generic parameters: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        doc = {"N": N, "q": render(q), "z": [render(x) for x in z], "seed": args.seed, "kind": kind,
               "components": [{"index": list(k), "value": render(v)} for k, v in rows]}
        return 0, json.dumps(doc) + "\n"
    if args.format == "csv":
        return 0, _csv(["index", "value"], [(_idx(k), render(v)) for k, v in rows])
    name = "Psibar" if kind == "up" else "Psi"
    head = f"N={N} q={render(q)} z=({', '.join(render(x) for x in z)})"
    return 0, head + "\n" + "".join(f"{name}{list(k)} = {render(v)}\n" for k, v in rows)


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def _common(p, fmt_default="pretty"):
    p.add_argument("--format", choices=("json", "csv", "pretty"), default=fmt_default)
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--allow-large", action="store_true", help="lift the default size guard")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyqkz", description="Exact qKZ, XXZ and loop-model computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ground-state", help="homogeneous component table psi^(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", default=None, help="rational value of tau, or 'sym' (default) for polynomials")
    _common(p, "json")
    p.set_defaults(func=cmd_ground_state)

    p = sub.add_parser("loop", help="Temperley-Lieb ground state at tau = 1")
    p.add_argument("--n", type=int, required=True)
    _common(p, "json")
    p.set_defaults(func=cmd_loop)

    p = sub.add_parser("asm-table", help="A(n) and A(n, r)")
    p.add_argument("--max-n", type=int, default=8)
    _common(p, "csv")
    p.set_defaults(func=cmd_asm_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--N", type=int, nargs="+", help="odd chain lengths")
    p.add_argument("--q", help="'omega+', 'omega-' or a rational")
    p.add_argument("--max-n", type=int)
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inhom-component", help="components of Psi(z) by residues")
    p.add_argument("--q", required=True, help="'omega+', 'omega-' or a rational")
    p.add_argument("--z", nargs="+", help="spectral parameters as rationals")
    p.add_argument("--N", type=int, help="draw z at random for this chain length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", type=int, nargs="+", help="down positions (default: all components)")
    p.add_argument("--b", type=int, nargs="+", help="up positions, computed from the (n+1)-fold integral")
    _common(p)
    p.set_defaults(func=cmd_inhom_component)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
