"""Named verification suites.

Each suite returns a :class:`SuiteReport` holding one :class:`CaseResult`
per checked case. Random inputs come from a :class:`random.Random` seeded
with the report's seed, so a report can be replayed exactly.
"""
from __future__ import annotations

import csv
import io
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from . import asm, loopmodel, qkz, sixvertex
from .sampling import GENERIC_Q, random_generic_q, random_rat, random_z
from .scalar import DegenerateParameters, q_root_of_unity, rat, render
from .spinvector import complement


@dataclass
class CaseResult:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class Options:
    seed: int = 0
    trials: int | None = None
    sizes: tuple | None = None  # odd chain lengths N
    q: object = None  # fixed q, or None for the suite default
    max_n: int | None = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    def summary(self) -> str:
        good = sum(c.ok for c in self.cases)
        return f"{self.suite}: {good}/{len(self.cases)} passed (seed={self.seed})"

    def pretty(self) -> str:
        lines = [f"{'PASS' if c.ok else 'FAIL'} {c.label}" + (f"  [{c.detail}]" if c.detail else "")
                 for c in self.cases]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite, "seed": self.seed, "passed": self.passed,
            "cases": [{"label": c.label, "ok": c.ok, "detail": c.detail} for c in self.cases],
        })

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "seed", "label", "ok", "detail"])
        for c in self.cases:
            w.writerow([self.suite, self.seed, c.label, int(c.ok), c.detail])
        return buf.getvalue()


def _pick(value, default):
    return default if value is None else value


def _fmt_z(z) -> str:
    return "(" + ", ".join(render(x) for x in z) + ")"


# --------------------------------------------------------------------------
# generic-q suites
# --------------------------------------------------------------------------

def suite_exchange(opt: Options, rng: random.Random) -> list:
    out = []
    for N in _pick(opt.sizes, (3, 5, 7)):
        for t in range(_pick(opt.trials, 20)):
            q = opt.q if opt.q is not None else random_generic_q(rng)
            z = random_z(rng, N, q)
            psi = qkz.psi_vector_inhom(z, q)
            bad = [i for i in range(1, N) if not qkz.check_exchange(z, q, i, psi)]
            out.append(CaseResult(f"N={N} trial={t} q={render(q)}", not bad,
                                  f"failing sites {bad} at z={_fmt_z(z)}" if bad else ""))
    return out


def suite_cyclicity(opt: Options, rng: random.Random) -> list:
    out = []
    for N in _pick(opt.sizes, (3, 5, 7)):
        for t in range(_pick(opt.trials, 20)):
            q = opt.q if opt.q is not None else random_generic_q(rng)
            z = random_z(rng, N, q, cyclic=True)
            ok = qkz.check_cyclicity(z, q)
            out.append(CaseResult(f"N={N} trial={t} q={render(q)}", ok,
                                  "" if ok else f"z={_fmt_z(z)}"))
    return out


def suite_yang_baxter(opt: Options, rng: random.Random) -> list:
    qs = [opt.q] if opt.q is not None else list(GENERIC_Q) + [q_root_of_unity(1), q_root_of_unity(-1)]
    out = []
    for t in range(_pick(opt.trials, 20)):
        q = qs[t % len(qs)]
        while True:
            x = [random_rat(rng) for _ in range(3)]
            try:
                ok = sixvertex.yang_baxter_check(*x, q) and sixvertex.unitarity_check(x[0] / x[1], q)
            except DegenerateParameters:
                continue
            break
        out.append(CaseResult(f"trial={t} q={render(q)}", ok, "" if ok else f"x={_fmt_z(x)}"))
    return out


def suite_complement(opt: Options, rng: random.Random) -> list:
    out = []
    for N in _pick(opt.sizes, (3, 5, 7)):
        for t in range(_pick(opt.trials, 3)):
            q = opt.q if opt.q is not None else (q_root_of_unity(1) if t % 2 else random_generic_q(rng))
            z = random_z(rng, N, q)
            ok = qkz.psi_vector_inhom(z, q) == qkz.psibar_vector_inhom(z, q)
            out.append(CaseResult(f"inhomogeneous N={N} trial={t} q={render(q)}", ok,
                                  "" if ok else f"z={_fmt_z(z)}"))
    for n in range(1, _pick(opt.max_n, 5) + 1):
        N = 2 * n + 1
        tb, bt = qkz.psi_table(n), qkz.psibar_table(n)
        bad = [a for a, v in tb.items() if bt[complement(a, N)] != v]
        out.append(CaseResult(f"homogeneous n={n}", not bad, f"mismatch at {bad[:3]}" if bad else ""))
    return out


# --------------------------------------------------------------------------
# q = omega suites
# --------------------------------------------------------------------------

def suite_transfer_eigen(opt: Options, rng: random.Random) -> list:
    q = opt.q if opt.q is not None else q_root_of_unity(1)
    out = []
    for N in _pick(opt.sizes, (3, 5, 7, 9)):
        for t in range(_pick(opt.trials, 5)):
            z = random_z(rng, N, q)
            psi = qkz.psi_vector_inhom(z, q)
            ys = [rat(0)]
            while len(ys) < 4:
                y = random_rat(rng) * (1 if rng.random() < 0.5 else -1)
                if y not in ys:
                    ys.append(y)
            bad = []
            for y in ys:
                try:
                    if sixvertex.transfer_apply(psi, y, z, q) != psi:
                        bad.append(render(y))
                except DegenerateParameters:
                    bad.append(f"{render(y)} (pole)")
            out.append(CaseResult(f"N={N} trial={t} q={render(q)} y=" + ",".join(render(y) for y in ys),
                                  not bad, f"failing y {bad} at z={_fmt_z(z)}" if bad else ""))
    return out


def suite_xxz_eigen(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(1, _pick(opt.max_n, 6) + 1):
        N = 2 * n + 1
        v = qkz.table_as_spinvector(n, qkz.psi_table(n, tau=1))
        ok = sixvertex.xxz_apply(v, rat(-1, 2)) == v.scaled(rat(-3 * N, 4))
        out.append(CaseResult(f"n={n} H psi = -{3 * N}/4 psi", ok))
    return out


# --------------------------------------------------------------------------
# homogeneous and loop suites
# --------------------------------------------------------------------------

def suite_recurrence(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(2, _pick(opt.max_n, 5) + 1):
        tb = qkz.psi_table(n)
        t1 = qkz.psi_table(n, tau=1)
        bad = [a for a in tb if a[0] == 1 and qkz.recurrence_rhs(a) != tb[a]]
        out.append(CaseResult(f"n={n} tau-recurrence", not bad, f"{bad[:3]}" if bad else ""))
        bad = [a for a in t1 if qkz.rotated_recurrence_rhs(a) != t1[a]]
        out.append(CaseResult(f"n={n} rotated recurrence at tau=1", not bad, f"{bad[:3]}" if bad else ""))
    return out


def suite_theorem1(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(1, _pick(opt.max_n, 6) + 1):
        t1 = qkz.psi_table(n, tau=1)
        vals = list(t1.values())
        integral = all(v.denominator == 1 and v > 0 for v in vals)
        base = t1[tuple(range(1, n + 1))]
        ok = integral and base == 1 and min(vals) == 1
        out.append(CaseResult(f"n={n} positive integers, min 1 at psi_1..n", ok,
                              "" if ok else f"min={min(vals)} base={base}"))
    return out


def suite_theorem2(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(1, _pick(opt.max_n, 6) + 1):
        t1 = qkz.psi_table(n, tau=1)
        v = t1[tuple(range(1, 2 * n, 2))]
        A = asm.asm_count(n)
        ok = v == A and max(t1.values()) == A
        out.append(CaseResult(f"n={n} psi_1,3,..,{2 * n - 1} = A({n}) = {A}", ok, "" if ok else f"got {v}"))
    return out


def theorem3_sides(n: int) -> list:
    """[(k, psi with defect 2k, sum_{m<=k} xi_(1,2m), closing-at-2k sum)] at tau = 1."""
    t1 = qkz.psi_table(n, tau=1)
    xi = loopmodel.loop_ground_state(n)
    rows = []
    for k in range(1, n + 1):
        a = tuple(2 * l - 1 if l != k else 2 * k for l in range(1, n + 1))
        partial = sum(loopmodel.partial_sum_xi(2 * m, xi) for m in range(1, k + 1))
        closing = sum(v for p, v in xi.entries.items() if p[2 * k - 1] < 2 * k)
        rows.append((k, int(t1[a]), partial, closing))
    return rows


def suite_theorem3(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(1, _pick(opt.max_n, 6) + 1):
        for k, lhs, partial, closing in theorem3_sides(n):
            ok = lhs == partial == closing
            out.append(CaseResult(f"n={n} k={k}: {lhs} = {partial} = {closing}", ok))
    return out


def suite_loop_expansion(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(2, _pick(opt.max_n, 5) + 1):
        xi = loopmodel.loop_ground_state(n)
        bt = qkz.psibar_table(n - 1, tau=1)
        bad = [b for b in combinations(range(1, 2 * n), n) if loopmodel.loop_expansion(b, xi) != bt[b]]
        out.append(CaseResult(f"n={n} all {len(bt)} up-indices", not bad, f"{bad[:3]}" if bad else ""))
    return out


def suite_refined_asm(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(2, _pick(opt.max_n, 6) + 1):
        target = asm.refined_generating_poly(n)
        got = asm.refined_sum_poly(n)
        out.append(CaseResult(f"n={n} eps-sum = {target}", got == target, "" if got == target else f"got {got}"))
        ok = asm.verify_alpha_integral_reps(n)
        out.append(CaseResult(f"n={n} constant-term representations", ok))
        alpha = rat(rng.randint(-20, 20), rng.randint(1, 9))
        ok = asm.verify_prerefined_identity(n, alpha)
        out.append(CaseResult(f"n={n} normalized identity at alpha={render(alpha)}", ok))
    return out


def even_opening_distribution(n: int) -> list[int]:
    """[sum of xi_pi over patterns with r-1 even openings for r = 1..n]."""
    xi = loopmodel.loop_ground_state(n)
    c = Counter()
    for p, v in xi.entries.items():
        c[loopmodel.even_openings(p)] += v
    return [c[r] for r in range(n)]


def suite_loopinter(opt: Options, rng: random.Random) -> list:
    out = []
    for n in range(2, _pick(opt.max_n, 6) + 1):
        target = asm.refined_generating_poly(n)
        got = even_opening_distribution(n)
        out.append(CaseResult(f"n={n} grouping by even openings = {target}", got == target,
                              "" if got == target else f"got {got}"))
    return out


SUITES = {
    "exchange": suite_exchange,
    "cyclicity": suite_cyclicity,
    "yang-baxter": suite_yang_baxter,
    "transfer-eigen": suite_transfer_eigen,
    "xxz-eigen": suite_xxz_eigen,
    "complement": suite_complement,
    "recurrence": suite_recurrence,
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "theorem3": suite_theorem3,
    "loop-expansion": suite_loop_expansion,
    "refined-asm": suite_refined_asm,
    "loopinter": suite_loopinter,
}


def run_suite(name: str, opt: Options | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    opt = opt or Options()
    rng = random.Random(opt.seed)
    return SuiteReport(name, opt.seed, SUITES[name](opt, rng))
