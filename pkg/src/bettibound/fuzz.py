"""Seeded property harness over random Borel sets and Borel ideals.

Every check is a theorem about the objects involved, so any failure is a bug;
failing inputs are shrunk before being reported.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import ideal as ideal_mod
from .errors import SizeGuardError
from .ideal import (
    MonomialIdeal,
    beta1_closed_form,
    betti_by_degree,
    closed_form_betti,
    dominates,
    ek_betti,
    hilbert,
    lex_ideal,
    minimalize,
    stable_hilbert,
)
from .monoset import (
    MonomialSet,
    ambient_size,
    b_q,
    b_q_closed,
    compare_mle,
    expand,
    expand_size_borel,
    is_borel,
    lex_segment,
    m_counts,
    m_le,
)
from .oracle import DEFAULT_SIZE_GUARD, random_borel_ideal, random_borel_set, taylor_betti


def set_checks(b: MonomialSet, h: int) -> list[str]:
    """Names of the set-level properties that fail for Borel ``b`` and a lex size ``h <= |b|``."""
    n, d = b.vars, b.degree
    failed = []
    grown = expand(b)
    if not compare_mle(lex_segment(n, d, h), b):
        failed.append("lex_m_le_dominance")
    lex = lex_segment(n, d, len(b))
    if not compare_mle(lex, b):
        failed.append("lex_m_le_dominance")
    lex_grown = expand(lex)
    if len(lex_grown) > len(grown):
        failed.append("lex_expansion_smallest")
    for q in range(n):
        if b_q(lex, q) < b_q(b, q):
            failed.append("b_q_lex_largest")
        if b_q(lex_grown, q) > b_q(grown, q):
            failed.append("b_q_expansion_lex_smallest")
        if b_q_closed(b, q) != b_q(b, q):
            failed.append("b_q_closed_form")
    if expand_size_borel(b) != len(grown):
        failed.append("expansion_size")
    if m_counts(grown)[0] != m_le(b):
        failed.append("expansion_m_statistics")
    return sorted(set(failed))


def ideal_checks(ideal: MonomialIdeal, size_guard: int = DEFAULT_SIZE_GUARD) -> tuple[list[str], bool]:
    """Failing ideal-level properties, and whether the Taylor comparison ran."""
    failed = []
    ek = ek_betti(ideal)
    if betti_by_degree(ideal) != ek:
        failed.append("by_degree_consistency")
    taylor_ran = False
    if ideal.generators:
        try:
            if taylor_betti(ideal, size_guard) != ek:
                failed.append("eliahou_kervaire_vs_taylor")
            taylor_ran = True
        except SizeGuardError:
            pass
    hf = stable_hilbert(ideal)
    lex = lex_ideal(hf)
    if hilbert(lex, hf.max_degree) != hf:
        failed.append("lex_ideal_hilbert")
    if not ideal_mod.is_lex(lex):
        failed.append("lex_ideal_is_lex")
    bound = closed_form_betti(hf)
    if bound != ek_betti(lex):
        failed.append("closed_form_vs_lex")
    if ideal.vars > 1 and beta1_closed_form(hf) != bound.betas[1]:
        failed.append("beta1_closed_form")
    if not dominates(bound, ek):
        failed.append("lex_dominates")
    return failed, taylor_ran


def shrink(items: list, still_fails: Callable[[list], bool]) -> list:
    """Greedy one-at-a-time deletion while the failure persists."""
    cur = list(items)
    changed = True
    while changed:
        changed = False
        for k in range(len(cur)):
            cand = cur[:k] + cur[k + 1:]
            if still_fails(cand):
                cur = cand
                changed = True
                break
    return cur


@dataclass
class FuzzSummary:
    vars: int
    max_degree: int
    cases: int
    seed: int
    passed: int = 0
    taylor_skipped: int = 0
    checks: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "vars": self.vars,
            "max_degree": self.max_degree,
            "cases": self.cases,
            "seed": self.seed,
            "passed": self.passed,
            "failed": len(self.failures),
            "taylor_skipped": self.taylor_skipped,
            "checks": dict(sorted(self.checks.items())),
            "failures": self.failures,
        }


def _case_rng(seed: int, k: int) -> random.Random:
    return random.Random(f"bettibound-fuzz:{seed}:{k}")


def run_case(nvars: int, max_degree: int, seed: int, k: int, size_guard: int = DEFAULT_SIZE_GUARD):
    """Run case ``k``; returns (failure records, checks run, taylor skipped)."""
    rng = _case_rng(seed, k)
    failures = []
    ran = Counter()

    deg = rng.randint(1, max_degree)
    b = random_borel_set(nvars, deg, rng)
    h = rng.randint(0, len(b))
    ran["borel_set"] += 1
    bad = set_checks(b, h)
    if bad:
        def still(elems):
            s = MonomialSet(nvars, deg, tuple(elems))
            return is_borel(s) and bool(set_checks(s, min(h, len(s))))
        small = shrink(list(b.elements), still)
        failures.append({"case": k, "kind": "borel_set", "checks": bad,
                         "reproducer": {"vars": nvars, "degree": deg, "elements": [list(t) for t in small]}})

    if nvars >= 2:
        total = sum(ambient_size(nvars, d) for d in range(1, max_degree + 1))
        ideal = random_borel_ideal(nvars, max_degree, rng.getrandbits(32), rng.uniform(0.5, 3.0) / total)
        ran["borel_ideal"] += 1
        bad, taylor_ran = ideal_checks(ideal, size_guard)
        if bad:
            def still(gens):
                cand = minimalize(gens, nvars)
                return ideal_mod.is_borel(cand) and bool(ideal_checks(cand, size_guard)[0])
            small = shrink([list(g) for g in ideal.generators], still)
            failures.append({"case": k, "kind": "borel_ideal", "checks": bad,
                             "reproducer": {"vars": nvars, "generators": small}})
        return failures, ran, not taylor_ran and bool(ideal.generators)
    return failures, ran, False


def run_fuzz(nvars: int, max_degree: int, cases: int, seed: int, size_guard: int = DEFAULT_SIZE_GUARD) -> FuzzSummary:
    summary = FuzzSummary(nvars, max_degree, cases, seed)
    for k in range(cases):
        failures, ran, skipped = run_case(nvars, max_degree, seed, k, size_guard)
        summary.checks.update(ran)
        summary.taylor_skipped += skipped
        if failures:
            summary.failures.extend(failures)
        else:
            summary.passed += 1
    return summary
