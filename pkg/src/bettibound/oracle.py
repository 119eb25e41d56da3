"""Independent ground truth for the Betti-number formulas.

Betti numbers of an arbitrary monomial ideal are computed as the homology of
the Taylor complex tensored with the rationals.  That complex splits by the
lcm multidegree of each generator subset, so ranks are taken blockwise with
exact integer elimination.  The module also produces Borel sets and ideals
for property tests.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Sequence

from .errors import AmbientTooLarge, TooFewVariables, TooManyGenerators
from .ideal import BettiTable, MonomialIdeal, minimalize
from .monoset import MonomialSet, ambient_size, borel_closure, is_borel
from .monomial import monomials_of_degree

DEFAULT_SIZE_GUARD = 14


def _reduce_into(pivots: dict, row: dict) -> bool:
    """Reduce ``row`` against the echelon ``pivots``; store it and return True if independent."""
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            g = 0
            for v in row.values():
                g = gcd(g, v)
            if g > 1:
                row = {k: v // g for k, v in row.items()}
            pivots[c] = row
            return True
        a, b = piv[c], row[c]
        new = {k: a * v for k, v in row.items()}
        for k, v in piv.items():
            x = new.get(k, 0) - b * v
            if x:
                new[k] = x
            else:
                new.pop(k, None)
        g = 0
        for v in new.values():
            g = gcd(g, v)
        if g > 1:
            new = {k: v // g for k, v in new.items()}
        row = new
    return False


def sparse_rank(rows: Sequence[dict]) -> int:
    """Rank over Q of a matrix given as sparse integer rows ``{column: value}``."""
    pivots = {}
    # sparser rows first keeps fill-in low
    return sum(_reduce_into(pivots, dict(r)) for r in sorted(rows, key=len) if r)


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free elimination."""
    rows = [{j: int(v) for j, v in enumerate(r) if v} for r in matrix]
    return sparse_rank(rows)


@dataclass(frozen=True)
class TaylorReport:
    generator_count: int
    chain_dims: tuple[int, ...]
    ranks: tuple[int, ...]
    betas: tuple[int, ...]
    table: BettiTable


def taylor_report(ideal: MonomialIdeal, size_guard: int = DEFAULT_SIZE_GUARD) -> TaylorReport:
    """Homology of the Taylor complex of ``ideal`` over Q.

    Basis: nonempty subsets F of the minimal generators (chain index |F|).
    ``d(F) = sum_k (-1)^k [lcm(F - f_k) == lcm(F)] (F - f_k)`` with k the
    position of f_k in F.  ``ranks[p-1]`` is the rank of the differential
    leaving subsets of size p; it is 0 for p = 1.
    """
    gens = list(ideal.generators)
    r = len(gens)
    n = ideal.vars
    if r > size_guard:
        raise TooManyGenerators(f"{r} generators exceed the Taylor size guard {size_guard}")
    if r == 0:
        return TaylorReport(0, (), (), tuple([0] * n), BettiTable(tuple([0] * n), {}))

    lcms = [None] * (1 << r)
    lcms[0] = (0,) * n
    for mask in range(1, 1 << r):
        low = mask & -mask
        g = gens[low.bit_length() - 1]
        lcms[mask] = tuple(map(max, lcms[mask ^ low], g))

    groups = defaultdict(lambda: defaultdict(list))
    for mask in range(1, 1 << r):
        groups[lcms[mask]][bin(mask).count("1")].append(mask)

    ranks = [0] * (r + 2)
    graded = defaultdict(lambda: [0] * r)
    for mdeg, by_size in groups.items():
        local_rank = {}
        for p, cols in by_size.items():
            if p == 1:
                continue
            index = {m: k for k, m in enumerate(by_size.get(p - 1, ()))}
            rows = []
            for mask in cols:
                entries = {}
                bits = [b for b in range(r) if mask >> b & 1]
                for k, b in enumerate(bits):
                    face = mask ^ (1 << b)
                    if face in index:
                        entries[index[face]] = -1 if k % 2 else 1
                if entries:
                    rows.append(entries)
            local_rank[p] = sparse_rank(rows)
            ranks[p] += local_rank[p]
        deg = sum(mdeg)
        for p, cols in by_size.items():
            h = len(cols) - local_rank.get(p, 0) - local_rank.get(p + 1, 0)
            if h:
                q = p - 1
                graded[deg - q][q] += h

    chain_dims = tuple(comb(r, p) for p in range(1, r + 1))
    rank_seq = tuple(ranks[p] for p in range(1, r + 1))
    betas = tuple(chain_dims[p - 1] - ranks[p] - ranks[p + 1] for p in range(1, r + 1))
    width = max(n, max((q + 1 for q, b in enumerate(betas) if b), default=0))
    table_betas = tuple(betas[q] if q < r else 0 for q in range(width))
    by_degree = {d: tuple(v[q] if q < r else 0 for q in range(width)) for d, v in sorted(graded.items()) if any(v)}
    return TaylorReport(r, chain_dims, rank_seq, betas, BettiTable(table_betas, by_degree))


def taylor_betti(ideal: MonomialIdeal, size_guard: int = DEFAULT_SIZE_GUARD) -> BettiTable:
    """Betti numbers of any monomial ideal; ``betas`` has length N unless homology leaks past q = N-1."""
    return taylor_report(ideal, size_guard).table


ENUMERATION_GUARD = 12


def enumerate_borel_sets(nvars: int, deg: int) -> Iterator[MonomialSet]:
    """Every Borel normed subset of the degree-``deg`` monomials, each once."""
    if nvars < 1:
        raise TooFewVariables("need at least one variable")
    total = ambient_size(nvars, deg)
    if total > ENUMERATION_GUARD:
        raise AmbientTooLarge(f"{total} monomials in degree {deg}; subset enumeration is capped at {ENUMERATION_GUARD}")
    ambient = list(monomials_of_degree(nvars, deg))
    for mask in range(1 << total):
        s = MonomialSet._trusted(nvars, deg, [t for k, t in enumerate(ambient) if mask >> k & 1])
        if is_borel(s):
            yield s


def random_borel_set(nvars: int, deg: int, rng: random.Random, max_seeds: int = 3) -> MonomialSet:
    """Borel closure of a few random monomials; empty with small probability."""
    ambient = list(monomials_of_degree(nvars, deg))
    k = rng.randint(0, max_seeds)
    if k == 0 or deg == 0:
        return MonomialSet._trusted(nvars, deg, ())
    return borel_closure([rng.choice(ambient) for _ in range(k)], nvars)


def random_borel_ideal(nvars: int, max_deg: int, seed: int, density: float, min_deg: int = 1) -> MonomialIdeal:
    """Ideal generated by per-degree Borel closures of randomly sampled monomials."""
    if nvars < 2:
        raise TooFewVariables("random_borel_ideal needs N >= 2")
    if not 1 <= min_deg <= max_deg:
        raise ValueError("need 1 <= min_deg <= max_deg")
    rng = random.Random(seed)
    raw = []
    for d in range(min_deg, max_deg + 1):
        sample = [t for t in monomials_of_degree(nvars, d) if rng.random() < density]
        if sample:
            raw.extend(borel_closure(sample, nvars))
    return minimalize(raw, nvars)


def borel_ideal_corpus(count: int, seed: int, max_vars: int = 5, max_deg: int = 5, max_gens: int = 12) -> list[MonomialIdeal]:
    """``count`` nonzero random Borel ideals with at most ``max_gens`` generators.

    Top generator degrees cycle through ``1..max_deg``.  The lowest sampled
    degree is drawn too; otherwise an early linear form swallows most of the
    later samples.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = 1 + len(out) % max_deg
        n = rng.randint(2, max_vars)
        lo = rng.randint((d + 1) // 2, d)
        total = sum(ambient_size(n, k) for k in range(lo, d + 1))
        density = rng.uniform(0.5, 3.0) / total
        ideal = random_borel_ideal(n, d, rng.getrandbits(32), density, lo)
        if 1 <= len(ideal.generators) <= max_gens and ideal.max_generator_degree == d:
            out.append(ideal)
    return out
