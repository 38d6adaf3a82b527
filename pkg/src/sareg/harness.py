"""Verification suites for the regularity bound on subspace arrangements.

Each check produces a :class:`VerificationReport`.  :func:`run_suite` draws
seeded instances (trial ``t`` uses seed ``base_seed + t``), runs a suite and
aggregates the reports.  Rendered reports leave out wall times unless asked
for, so two runs with the same configuration print identical bytes.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .arrangements import (Arrangement, arrangement_ideal, auxiliary_line, random_arrangement, sharp_example,
                           subspace_ideal)
from .field import Field, field_from_spec
from .groebner import DegreeCapExceeded
from .ideal import (GenericityFailure, HomogeneousIdeal, generic_linear_form, height_linear, ideal_sum,
                    intersect, irrelevant_ideal, is_nonzerodivisor, power, principal, product,
                    quotient_by_form, saturate, saturation_degree)
from .polynomial import Polynomial, Ring, substitute_linear
from .resolution import (ResolutionError, StrategyMismatch, betti_regularity, minimal_resolution, regularity,
                         _nonzerodivisor_mod)

log = logging.getLogger(__name__)

SUITES = ("theorem-random", "sharp", "prop-aux", "hyperplane-lemma", "ses")

# computational failures (exit status 3) as opposed to failed predicates (1)
COMPUTATIONAL_ERRORS = (DegreeCapExceeded, GenericityFailure, ResolutionError, StrategyMismatch, ArithmeticError)


@dataclass
class VerificationReport:
    """One checked instance.

    For the bound checks ``passed`` is ``computed_regularity <= bound``; the
    sharp suite asks for equality (``relation == "=="``), and the lemma
    suites record their own predicate in ``details``.
    """

    suite: str
    trial: int
    instance: str
    computed_regularity: int | None = None
    bound: int | None = None
    relation: str = "<="
    passed: bool = False
    strategy_agreement: bool | None = None
    genericity_retries: int = 0
    wall_time: float = 0.0
    details: dict = dc_field(default_factory=dict)
    error: str | None = None
    note: str | None = None

    def record(self, timings: bool = False) -> dict:
        out = {
            "suite": self.suite, "trial": self.trial, "instance": self.instance,
            "regularity": self.computed_regularity, "bound": self.bound, "relation": self.relation,
            "passed": self.passed, "strategy_agreement": self.strategy_agreement,
            "genericity_retries": self.genericity_retries, "details": self.details,
            "error": self.error, "note": self.note,
        }
        if timings:
            out["wall_time"] = round(self.wall_time, 4)
        return out

    def line(self, timings: bool = False) -> str:
        parts = [f"{self.suite} #{self.trial}", self.instance]
        if self.computed_regularity is not None:
            parts.append(f"reg={self.computed_regularity}")
        if self.bound is not None:
            parts.append(f"bound{self.relation}{self.bound}")
        for k, v in self.details.items():
            parts.append(f"{k}={_fmt(v)}")
        if self.strategy_agreement is not None:
            parts.append(f"agree={'yes' if self.strategy_agreement else 'NO'}")
        parts.append(f"retries={self.genericity_retries}")
        if self.note:
            parts.append(f"note={self.note}")
        if self.error:
            parts.append(f"error={self.error}")
        if timings:
            parts.append(f"time={self.wall_time:.3f}s")
        parts.append("PASS" if self.passed else ("ERROR" if self.error else "FAIL"))
        return " ".join(parts)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _describe(X: Arrangement, seed=None) -> str:
    head = f"seed={seed} " if seed is not None else ""
    return f"{head}n={X.n} d={X.d} codims={','.join(map(str, X.codims))}"


def _run(report: VerificationReport, body: Callable[[VerificationReport, dict], None]) -> VerificationReport:
    tally: dict = {}
    start = time.perf_counter()
    try:
        body(report, tally)
    except StrategyMismatch as exc:
        report.strategy_agreement = False
        report.passed = False
        report.error = f"strategy mismatch betti={exc.betti} hyperplane={exc.hyperplane}"
    except COMPUTATIONAL_ERRORS as exc:
        report.passed = False
        report.error = f"{type(exc).__name__}: {exc}"
    report.genericity_retries = tally.get("genericity_retries", 0)
    report.wall_time = time.perf_counter() - start
    return report


def saturation_checks(I: HomogeneousIdeal, reg: int | None = None) -> dict:
    """Idempotence of saturation, ``I`` inside its saturation, and ``reg(I) >= sat(I)``."""
    sat = saturate(I)
    out = {"sat_idempotent": saturate(sat) == sat, "sat_contains": sat.contains_ideal(I)}
    if not sat.is_unit():
        s = saturation_degree(I, sat, regularity=reg)
        out["sat_degree"] = s
        if reg is not None:
            out["reg_ge_sat"] = reg >= s
    return out


def verify_theorem(X: Arrangement, seed: int = 0, trial: int = 0, suite: str = "theorem",
                   check_saturation: bool = False, instance: str | None = None) -> VerificationReport:
    """``reg(I(X)) <= d``, computed with both regularity algorithms."""
    report = VerificationReport(suite, trial, instance or _describe(X, seed), bound=X.d)

    def body(rep, tally):
        I = arrangement_ideal(X)
        res = regularity(I, "both", seed=seed, tally=tally)
        rep.computed_regularity = res.value
        rep.strategy_agreement = res.agree
        rep.passed = res.value <= X.d
        if check_saturation:
            checks = saturation_checks(I, res.value)
            rep.details.update(checks)
            rep.details["saturated"] = checks.get("sat_degree") == 0
    return _run(report, body)


def verify_sharp(d: int, seed: int = 0, trial: int = 0, field=None,
                 check_saturation: bool = False) -> VerificationReport:
    """The sharp example has regularity exactly ``d`` and a minimal generator of degree ``d``."""
    report = VerificationReport("sharp", trial, f"sharp({d}) seed={seed}", bound=d, relation="==")

    def body(rep, tally):
        X = sharp_example(d, seed, field)
        I = arrangement_ideal(X)
        res = regularity(I, "both", seed=seed, tally=tally)
        table = minimal_resolution(I)
        rep.computed_regularity = res.value
        rep.strategy_agreement = res.agree
        rep.details["beta_0d"] = table[0, d]
        rep.details["low_degree_on_L"] = low_degree_vanishes_on_line(I, d)
        rep.passed = res.value == d and table[0, d] >= 1 and rep.details["low_degree_on_L"]
        if check_saturation:
            checks = saturation_checks(I, res.value)
            rep.details.update(checks)
            rep.details["saturated"] = checks.get("sat_degree") == 0
    return _run(report, body)


def low_degree_vanishes_on_line(I: HomogeneousIdeal, d: int) -> bool:
    """Every element of ``I`` of degree below ``d`` restricts to zero on ``x2 = x3 = 0``."""
    ring = I.ring
    line = Ring(2, ring.field)
    images = [line.var(0), line.var(1), line.zero(), line.zero()]
    for g in I.groebner.generators:
        if g.degree() < d and substitute_linear(g, images):
            return False
    return True


def verify_prop_aux(X: Arrangement, L: HomogeneousIdeal, seed: int = 0, trial: int = 0,
                    check_saturation: bool = False, instance: str | None = None) -> VerificationReport:
    """``reg(I(X) + L) <= d`` for a linear ideal ``L``."""
    h = height_linear(L)
    report = VerificationReport("prop-aux", trial, instance or f"{_describe(X, seed)} height(L)={h}", bound=X.d)

    def body(rep, tally):
        J = ideal_sum(arrangement_ideal(X), L)
        res = regularity(J, "both", seed=seed, tally=tally)
        rep.computed_regularity = res.value
        rep.strategy_agreement = res.agree
        rep.passed = res.value <= X.d
        if check_saturation:
            rep.details.update(saturation_checks(J, res.value))
    return _run(report, body)


def random_linear_ideal(ring: Ring, height: int, seed: int) -> HomogeneousIdeal:
    rng = random.Random(f"linear-ideal:{seed}")
    fld = ring.field
    while True:
        forms = [ring.linear_form([fld.random(rng) for _ in range(ring.nvars)]) for _ in range(height)]
        L = HomogeneousIdeal(ring, forms)
        if height_linear(L) == height:
            return L


def verify_hyperplane_lemma(I: HomogeneousIdeal, seed: int = 0, trial: int = 0, instance: str = "",
                            check_saturation: bool = False) -> VerificationReport:
    """``reg(I) = max(reg(I + (x)), sat(I))`` with ``I + (x)`` resolved in the full ring."""
    report = VerificationReport("hyperplane-lemma", trial, instance, relation="=")

    def body(rep, tally):
        sat = saturate(I)
        if sat.is_unit():
            raise GenericityFailure("saturation is the unit ideal; no nonzerodivisor exists")
        x = _nonzerodivisor_mod(sat, seed, tally, 100)
        reg_i = betti_regularity(minimal_resolution(I))
        reg_ix = betti_regularity(minimal_resolution(ideal_sum(I, principal(x))))
        s = saturation_degree(I, sat, regularity=reg_i)
        rep.computed_regularity = reg_i
        rep.details.update({"reg_I_plus_x": reg_ix, "sat": s})
        rep.passed = reg_i == max(reg_ix, s)
        if check_saturation:
            rep.details.update(saturation_checks(I, reg_i))
    return _run(report, body)


def verify_ses_bounds(I: HomogeneousIdeal, x: Polynomial, trial: int = 0, instance: str = "",
                      check_saturation: bool = False) -> VerificationReport:
    """Regularity bounds on ``0 -> I cap (x) -> I + (x)(direct sum) -> I + (x) -> 0``.

    With ``A = (I : x) x``, ``B = I (+) (x)`` and ``C = I + (x)``:
    (a) ``reg A <= max(reg B, reg C + 1)``, (b) ``reg B <= max(reg A, reg C)``,
    (c) ``reg C <= max(reg A - 1, reg B)`` (the standard form of the third bound).
    """
    report = VerificationReport("ses", trial, instance, relation="ses", note="(c) as-corrected")

    def body(rep, tally):
        X = principal(x)
        C = ideal_sum(I, X)
        if C.is_unit():
            rep.passed = True
            rep.note = "skipped: I + (x) is the unit ideal"
            return
        colon = quotient_by_form(I, x)
        A = product(colon, X)
        reg = lambda J: betti_regularity(minimal_resolution(J))
        ra, ri, rx, rc = reg(A), reg(I), reg(X), reg(C)
        rcolon = reg(colon) if not colon.is_unit() else 0
        rb = max(ri, rx)
        checks = {"a": ra <= max(rb, rc + 1), "b": rb <= max(ra, rc), "c": rc <= max(ra - 1, rb)}
        rep.details.update({"reg_A": ra, "reg_I": ri, "reg_x": rx, "reg_B": rb, "reg_C": rc,
                            "reg_I_colon_x": rcolon})
        rep.details.update({f"bound_{k}": v for k, v in checks.items()})
        rep.computed_regularity = ri
        rep.passed = all(checks.values())
        if check_saturation:
            rep.details.update(saturation_checks(I, ri))
    return _run(report, body)


# -- instance generation -----------------------------------------------------------------

def parse_range(spec, default: Sequence[int]) -> list[int]:
    """``"2-4"`` -> [2, 3, 4]; ``"3"`` -> [3]; ``"2,5"`` -> [2, 5]; ``None`` -> default."""
    if spec is None:
        return list(default)
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, (list, tuple)):
        return [int(v) for v in spec]
    out = []
    for part in str(spec).split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {spec!r}")
    return out


@dataclass
class SuiteConfig:
    suite: str = "theorem-random"
    trials: int = 10
    seed: int = 0
    n_values: list = dc_field(default_factory=lambda: [2, 3, 4])
    d_values: list = dc_field(default_factory=lambda: [2, 3, 4])
    codims: list | None = None
    field: str = "32003"
    check_saturation: bool = False
    sharp_d_values: list = dc_field(default_factory=lambda: [2, 3, 4, 5])

    def field_obj(self) -> Field:
        return field_from_spec(self.field)


def draw_arrangement(cfg: SuiteConfig, seed: int) -> Arrangement:
    # string seeds give each kind of draw its own stream
    rng = random.Random(f"shape:{seed}")
    n = rng.choice(cfg.n_values)
    if cfg.codims is not None:
        codims = list(cfg.codims)
        d = len(codims)
        n = max(n, max(codims))
    else:
        d = rng.choice(cfg.d_values)
        codims = [rng.randint(1, n) for _ in range(d)]
    return random_arrangement(n, d, codims, seed, cfg.field_obj())


def lemma_instance(cfg: SuiteConfig, seed: int, kind: int) -> tuple[HomogeneousIdeal, str]:
    """Cycle of test ideals: an arrangement ideal, the same times ``m``, and ``l * m`` for a linear ``l``.

    The last two are not saturated.
    """
    X = draw_arrangement(cfg, seed)
    if kind % 3 == 0:
        return arrangement_ideal(X), f"arrangement {_describe(X, seed)}"
    if kind % 3 == 1:
        I = product(arrangement_ideal(X), irrelevant_ideal(X.ring))
        return I, f"arrangement*m {_describe(X, seed)}"
    rng = random.Random(f"l*m:{seed}")
    fld = X.ring.field
    l0 = X.ring.linear_form([fld.random(rng) for _ in range(X.ring.nvars)])
    return HomogeneousIdeal(X.ring, [l0 * x for x in X.ring.gens()]), f"l*m seed={seed} n={X.n}"


def _trial_reports(cfg: SuiteConfig, suite: str) -> list[VerificationReport]:
    out = []
    fld = cfg.field_obj()
    for t in range(cfg.trials):
        seed = cfg.seed + t
        if suite == "theorem-random":
            X = draw_arrangement(cfg, seed)
            out.append(verify_theorem(X, seed, t, suite, cfg.check_saturation))
        elif suite == "sharp":
            d = cfg.sharp_d_values[t % len(cfg.sharp_d_values)]
            out.append(verify_sharp(d, seed, t, fld, cfg.check_saturation))
        elif suite == "prop-aux":
            X = draw_arrangement(cfg, seed)
            h = random.Random(f"height:{seed}").randint(1, X.n)
            L = random_linear_ideal(X.ring, h, seed)
            out.append(verify_prop_aux(X, L, seed, t, cfg.check_saturation))
        elif suite == "hyperplane-lemma":
            I, desc = lemma_instance(cfg, seed, t)
            out.append(verify_hyperplane_lemma(I, seed, t, desc, cfg.check_saturation))
        elif suite == "ses":
            I, desc = lemma_instance(cfg, seed, t)
            if t % 2:
                x = I.ring.var(0)
                desc += " x=x0"
            else:
                x = generic_linear_form(I.ring, (), seed)
                desc += " x=generic"
            out.append(verify_ses_bounds(I, x, t, desc, cfg.check_saturation))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    if suite == "prop-aux" and cfg.trials:
        X = draw_arrangement(cfg, cfg.seed)
        out.append(verify_prop_aux(X, irrelevant_ideal(X.ring), cfg.seed, cfg.trials, cfg.check_saturation,
                                   instance=f"{_describe(X, cfg.seed)} L=m"))
    return out


@dataclass
class SuiteResult:
    reports: list
    total_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def errors(self) -> int:
        return sum(r.error is not None for r in self.reports)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def max_regularity(self):
        regs = [r.computed_regularity for r in self.reports if r.computed_regularity is not None]
        return max(regs) if regs else None

    @property
    def exit_status(self) -> int:
        if self.ok:
            return 0
        return 3 if self.errors else 1

    def summary(self, timings: bool = False) -> str:
        s = (f"summary: {self.passed}/{len(self.reports)} passed, errors={self.errors}, "
             f"max_reg={self.max_regularity if self.max_regularity is not None else '-'}")
        if timings:
            s += f", time={self.total_time:.2f}s"
        return s + (" OK" if self.ok else " FAILED")

    def render(self, timings: bool = False, json_lines: bool = False) -> str:
        if json_lines:
            lines = [json.dumps(r.record(timings), sort_keys=True) for r in self.reports]
            agg = {"summary": True, "passed": self.passed, "total": len(self.reports), "errors": self.errors,
                   "max_regularity": self.max_regularity, "ok": self.ok}
            if timings:
                agg["total_time"] = round(self.total_time, 4)
            lines.append(json.dumps(agg, sort_keys=True))
        else:
            lines = [r.line(timings) for r in self.reports] + [self.summary(timings)]
        return "\n".join(lines) + "\n"


def run_suite(cfg: SuiteConfig) -> SuiteResult:
    """Run ``cfg.suite`` (or every suite for ``"all"``) and aggregate the reports."""
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    for s in suites:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
    start = time.perf_counter()
    reports = []
    for s in suites:
        reports.extend(_trial_reports(cfg, s))
    return SuiteResult(reports, time.perf_counter() - start)
