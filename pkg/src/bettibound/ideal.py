"""Monomial ideals, their Betti numbers, and lex-segment bounds.

Betti numbers of stable ideals come from the Eliahou-Kervaire count
``beta_q = sum over minimal generators T of C(m(T) - 1, q)``.  The lex ideal
with a prescribed Hilbert function maximises every ``beta_q`` among ideals with
that Hilbert function, and :func:`closed_form_betti` evaluates its Betti
numbers from the Hilbert function alone via Macaulay expansions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    MalformedInput,
    NotAdmissible,
    NotStable,
    TailNotStabilized,
    ZeroDegreeGenerator,
)
from .macaulay import (
    HilbertFunction,
    binom_ext,
    eval_shift,
    expand as macaulay_expand,
    generator_degrees,
    is_admissible,
    m_le_lex,
    min_growth,
)
from .monomial import Monomial, divides, max_index
from .monoset import MonomialSet, b_q, expand, lex_range, lex_rank


def _gen_key(t):
    return (sum(t), tuple(-e for e in t))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Generators are sorted by degree, then lex-descending.  Use
    :func:`minimalize` to build one from an arbitrary generating list.
    """

    vars: int
    generators: tuple = ()
    _by_degree: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if type(self.vars) is not int or self.vars < 1:
            raise MalformedInput("vars must be a positive integer")
        gens = [Monomial(t) for t in self.generators]
        for t in gens:
            if len(t) != self.vars:
                raise DimensionMismatch(f"generator {list(t)} does not have {self.vars} variables")
            if sum(t) == 0:
                raise ZeroDegreeGenerator("constant generators (the unit ideal) are not supported")
        gens = sorted(set(gens), key=_gen_key)
        for a in gens:
            for b in gens:
                if a != b and divides(a, b):
                    raise MalformedInput(f"generators are not minimal: {a} divides {b}")
        object.__setattr__(self, "generators", tuple(gens))
        self._index()

    @classmethod
    def _trusted(cls, nvars: int, gens) -> "MonomialIdeal":
        # gens must already be minimal Monomials of the right length
        ideal = object.__new__(cls)
        object.__setattr__(ideal, "vars", nvars)
        object.__setattr__(ideal, "generators", tuple(sorted(gens, key=_gen_key)))
        ideal._index()
        return ideal

    def _index(self):
        by_degree = {}
        for g in self.generators:
            by_degree.setdefault(sum(g), []).append(g)
        object.__setattr__(self, "_by_degree", by_degree)

    def __contains__(self, t) -> bool:
        return any(divides(g, t) for g in self.generators)

    @property
    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def generators_of_degree(self, d: int) -> list:
        return list(self._by_degree.get(d, ()))

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def to_json(self) -> dict:
        return {"vars": self.vars, "generators": [list(g) for g in self.generators]}


def minimalize(raw: Iterable[Sequence[int]], nvars: int) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``raw``."""
    gens = set()
    for t in raw:
        t = Monomial(t)
        if len(t) != nvars:
            raise DimensionMismatch(f"{list(t)} does not have {nvars} variables")
        if sum(t) == 0:
            raise ZeroDegreeGenerator("constant generators (the unit ideal) are not supported")
        gens.add(t)
    # a monomial is kept iff nothing of lower or equal degree properly divides it
    ordered = sorted(gens, key=_gen_key)
    kept = []
    for t in ordered:
        if not any(divides(g, t) for g in kept):
            kept.append(t)
    return MonomialIdeal._trusted(nvars, kept)


def graded_bases(ideal: MonomialIdeal, d_max: int) -> list[MonomialSet]:
    """``[G_k(I_0), ..., G_k(I_{d_max})]``, built by expansion plus new generators."""
    n = ideal.vars
    out = [MonomialSet._trusted(n, 0, ())]
    for d in range(1, d_max + 1):
        cur = expand(out[-1])
        new = ideal.generators_of_degree(d)
        if new:
            cur = MonomialSet._trusted(n, d, set(cur.elements) | set(new))
        out.append(cur)
    return out[: d_max + 1] if d_max >= 0 else []


def graded_basis(ideal: MonomialIdeal, d: int) -> MonomialSet:
    if d < 0:
        raise MalformedInput("degree must be non-negative")
    return graded_bases(ideal, d)[d]


def _stable_values(ideal: MonomialIdeal, more) -> list[int]:
    # X_N I_d is the disjoint union of {T X_j : j >= m(T)}, so m_i(X_N I_d) = m_{<=i}(I_d)
    n = ideal.vars
    counts = [0] * n
    values = [0]
    while more(values):
        d = len(values)
        prefix = 0
        for i in range(n):
            prefix += counts[i]
            counts[i] = prefix
        for g in ideal.generators_of_degree(d):
            counts[max_index(g) - 1] += 1
        values.append(sum(counts))
    return values


def hilbert(ideal: MonomialIdeal, d_max: int) -> HilbertFunction:
    """``dim I_d`` for ``d = 0..d_max``; stable ideals are counted without enumeration."""
    if d_max < 0:
        raise MalformedInput("degree must be non-negative")
    if is_stable(ideal):
        values = _stable_values(ideal, lambda v: len(v) <= d_max)
    else:
        values = [len(s) for s in graded_bases(ideal, d_max)]
    return HilbertFunction(ideal.vars, tuple(values))


def _growth(h: int, n: int) -> int:
    return h if n == 1 else min_growth(h, n)


def stable_hilbert(ideal: MonomialIdeal) -> HilbertFunction:
    """Hilbert function up to the first degree past the generators where growth is minimal.

    Past the largest generator degree, one step of minimal growth persists
    forever, so the lex ideal has no generators beyond that point.  Stable
    ideals are counted through their ``m_i`` statistics; others by enumeration.
    """
    n = ideal.vars
    top = ideal.max_generator_degree
    if not is_stable(ideal):
        bases = graded_bases(ideal, top + 1)
        while len(bases[-1]) != _growth(len(bases[-2]), n):
            bases.append(expand(bases[-1]))
        return HilbertFunction(n, tuple(len(s) for s in bases))
    values = _stable_values(ideal, lambda v: len(v) <= top + 1 or v[-1] != _growth(v[-2], n))
    return HilbertFunction(n, tuple(values))


@dataclass(frozen=True)
class Classification:
    is_lex: bool
    is_borel: bool
    is_stable: bool


def is_stable(ideal: MonomialIdeal) -> bool:
    if is_lex(ideal):
        return True
    for t in ideal.generators:
        m = max_index(t)
        for i in range(1, m):
            e = list(t)
            e[m - 1] -= 1
            e[i - 1] += 1
            if e not in ideal:
                return False
    return True


def is_borel(ideal: MonomialIdeal) -> bool:
    if is_lex(ideal):
        return True
    for t in ideal.generators:
        for j in range(2, ideal.vars + 1):
            if not t[j - 1]:
                continue
            for i in range(1, j):
                e = list(t)
                e[j - 1] -= 1
                e[i - 1] += 1
                if e not in ideal:
                    return False
    return True


def is_lex(ideal: MonomialIdeal) -> bool:
    # X_N of a lex segment is again one, so I_d stays lex exactly when the new
    # generators occupy the lex positions right after X_N I_{d-1}
    n = ideal.vars
    h = 0
    for d in range(1, ideal.max_generator_degree + 1):
        start = _growth(h, n)
        ranks = sorted(lex_rank(g) for g in ideal.generators_of_degree(d))
        if ranks != list(range(start, start + len(ranks))):
            return False
        h = start + len(ranks)
    return True


def classify(ideal: MonomialIdeal) -> Classification:
    return Classification(is_lex(ideal), is_borel(ideal), is_stable(ideal))


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers plus their split by generator degree.

    ``by_degree[d][q]`` is the part of ``betas[q]`` owed to degree-``d``
    generators, i.e. the graded Betti number ``beta_{q, d+q}``.  Degrees with
    no contribution are omitted.
    """

    betas: tuple[int, ...]
    by_degree: dict = field(default_factory=dict)

    @property
    def vars(self) -> int:
        return len(self.betas)

    def to_json(self) -> dict:
        return {
            "betas": list(self.betas),
            "by_degree": {str(d): list(self.by_degree[d]) for d in sorted(self.by_degree)},
        }

    def csv_rows(self):
        yield ("q", "beta")
        for q, b in enumerate(self.betas):
            yield (q, b)
        yield ()
        yield ("d", "q", "contribution")
        for d in sorted(self.by_degree):
            for q, c in enumerate(self.by_degree[d]):
                yield (d, q, c)


def _table(nvars: int, by_degree: dict) -> BettiTable:
    clean = {d: tuple(v) for d, v in sorted(by_degree.items()) if any(v)}
    betas = tuple(sum(v[q] for v in clean.values()) for q in range(nvars))
    return BettiTable(betas, clean)


def _require_stable(ideal: MonomialIdeal) -> None:
    if not is_stable(ideal):
        raise NotStable(f"{ideal} is not stable")


def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire Betti numbers of a stable ideal."""
    _require_stable(ideal)
    n = ideal.vars
    by_degree = {}
    for t in ideal.generators:
        row = by_degree.setdefault(sum(t), [0] * n)
        m = max_index(t)
        for q in range(n):
            row[q] += binom_ext(m - 1, q)
    return _table(n, by_degree)


def betti_by_degree(ideal: MonomialIdeal) -> BettiTable:
    """Betti numbers as ``sum_d b_q(G_k(I_d)) - b_q(X_N G_k(I_{d-1}))``."""
    _require_stable(ideal)
    n = ideal.vars
    bases = graded_bases(ideal, ideal.max_generator_degree)
    by_degree = {}
    for d in range(1, len(bases)):
        grown = expand(bases[d - 1])
        by_degree[d] = [b_q(bases[d], q) - b_q(grown, q) for q in range(n)]
    return _table(n, by_degree)


def lex_ideal(hf: HilbertFunction) -> MonomialIdeal:
    """The lex-segment ideal with Hilbert function ``hf`` (up to its last degree)."""
    rep = is_admissible(hf)
    if not rep.ok:
        raise NotAdmissible(rep.reason, rep.first_violation)
    n = hf.vars
    gens = []
    prev = 0
    for d, h in enumerate(hf.values):
        # X_N of a lex segment is the lex segment of minimal-growth size
        start = _growth(prev, n) if d > 0 else 0
        gens.extend(lex_range(n, d, start, h))
        prev = h
    return MonomialIdeal._trusted(n, gens)


def _stabilized_top(hf: HilbertFunction):
    gd = generator_degrees(hf)
    if not gd.stabilized:
        raise TailNotStabilized(
            f"h_{hf.max_degree}={hf.values[-1]} is not the minimal growth of h_{hf.max_degree - 1}; "
            "extend the Hilbert function to see every generator degree"
        )
    return gd.top_degree


def _shifted(h: int, n: int, s: int, t: int) -> int:
    return eval_shift(macaulay_expand(h, n - 1), s, t)


def closed_form_betti(hf: HilbertFunction) -> BettiTable:
    """Betti numbers of the lex ideal with Hilbert function ``hf``, from ``hf`` alone.

    ``betas`` evaluates the closed formula in the top generator degree D;
    ``by_degree`` evaluates the per-degree differences independently, so the
    two can be cross-checked.
    """
    top = _stabilized_top(hf)
    n = hf.vars
    if top is None:
        return BettiTable(tuple([0] * n), {})
    h = hf.values

    def mle(hd, i):
        return hd if i == n else m_le_lex(hd, n, i)

    betas = []
    for q in range(n):
        beta = comb(n - 1, q) * h[top]
        beta -= sum(mle(h[top], i) * binom_ext(i - 1, q - 1) for i in range(1, n))
        beta -= sum(mle(h[d], i) * binom_ext(i, q) for d in range(1, top) for i in range(1, n))
        betas.append(beta)

    by_degree = {}
    for d in range(1, top + 1):
        row = []
        for q in range(n):
            b_here = comb(n - 1, q) * h[d] - sum(mle(h[d], i) * binom_ext(i - 1, q - 1) for i in range(1, n))
            b_grown = sum(mle(h[d - 1], i) * binom_ext(i - 1, q) for i in range(1, n + 1))
            row.append(b_here - b_grown)
        if any(row):
            by_degree[d] = tuple(row)
    return BettiTable(tuple(betas), by_degree)


def beta1_closed_form(hf: HilbertFunction) -> int:
    """First syzygy count of the lex ideal via the shift calculus.

    ``(N-1) H(D) - H(D)_{-1} - sum_{d<D} [(N-1) H(d)_{-1} - H(d)_{-2}]``
    where ``H(d)_t`` shifts the lower indices of the base-(N-1) expansion.
    """
    top = _stabilized_top(hf)
    n = hf.vars
    if top is None or n == 1:
        return 0
    h = hf.values
    total = (n - 1) * h[top] - _shifted(h[top], n, 0, -1)
    total -= sum((n - 1) * _shifted(h[d], n, 0, -1) - _shifted(h[d], n, 0, -2) for d in range(1, top))
    return total


def dominates(a: BettiTable, b: BettiTable) -> bool:
    if len(a.betas) != len(b.betas):
        raise DimensionMismatch(f"tables for {len(a.betas)} and {len(b.betas)} variables")
    return all(x >= y for x, y in zip(a.betas, b.betas))


def bound_for(ideal: MonomialIdeal, d_max: int | None = None) -> BettiTable:
    """Betti numbers of the lex ideal sharing the Hilbert function of ``ideal``."""
    if d_max is None:
        return closed_form_betti(stable_hilbert(ideal))
    if ideal.generators and d_max <= ideal.max_generator_degree:
        raise TailNotStabilized(
            f"d_max={d_max} must exceed the largest generator degree {ideal.max_generator_degree}"
        )
    return closed_form_betti(hilbert(ideal, d_max))
