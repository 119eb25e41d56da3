"""Degree-homogeneous sets of monomials.

Covers the Borel-normed / lex-segment predicates, the expansion ``X_N S``
to the next degree, the decomposition with respect to the last variable,
the star operation, the ``m_i`` / ``m_{<=i}`` statistics and ``b_q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegreeZero,
    DimensionMismatch,
    MixedDegrees,
    NotBorel,
    PreconditionViolated,
    SizeExceedsAmbient,
    TooFewVariables,
)
from .monomial import Monomial, max_index, monomials_of_degree


@dataclass(frozen=True)
class MonomialSet:
    """Canonical form: ``elements`` strictly lex-descending, all of ``degree``."""

    vars: int
    degree: int
    elements: tuple = ()
    _members: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vars < 1:
            raise TooFewVariables("a monomial set needs at least one variable")
        elems = tuple(sorted({Monomial(t) for t in self.elements}, reverse=True))
        for t in elems:
            if len(t) != self.vars:
                raise DimensionMismatch(f"{t} does not have {self.vars} variables")
            if sum(t) != self.degree:
                raise MixedDegrees(f"{t} does not have degree {self.degree}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    @classmethod
    def _trusted(cls, nvars, deg, elems) -> "MonomialSet":
        # elems must already be distinct Monomials of the right shape
        s = object.__new__(cls)
        ordered = tuple(sorted(elems, reverse=True))
        object.__setattr__(s, "vars", nvars)
        object.__setattr__(s, "degree", deg)
        object.__setattr__(s, "elements", ordered)
        object.__setattr__(s, "_members", frozenset(ordered))
        return s

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t):
        return t in self._members

    def __bool__(self):
        return bool(self.elements)

    def min(self) -> Monomial:
        return self.elements[-1]

    def issubset(self, other: "MonomialSet") -> bool:
        return self._members <= other._members

    def without(self, t: Monomial) -> "MonomialSet":
        return MonomialSet._trusted(self.vars, self.degree, self._members - {t})

    def union(self, other: "MonomialSet") -> "MonomialSet":
        _same_shape(self, other)
        return MonomialSet._trusted(self.vars, self.degree, self._members | other._members)

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        _same_shape(self, other)
        return MonomialSet._trusted(self.vars, self.degree, self._members - other._members)

    def to_json(self) -> dict:
        return {"vars": self.vars, "degree": self.degree, "elements": [list(t) for t in self.elements]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialSet":
        return cls(data["vars"], data["degree"], tuple(tuple(t) for t in data["elements"]))


def _same_shape(a: MonomialSet, b: MonomialSet) -> None:
    if a.vars != b.vars or a.degree != b.degree:
        raise DimensionMismatch(
            f"sets live in different spaces: ({a.vars} vars, deg {a.degree}) vs ({b.vars}, {b.degree})"
        )


def ambient_size(nvars: int, deg: int) -> int:
    """Number of monomials of degree ``deg`` in ``nvars`` variables."""
    if deg < 0:
        return 0
    return comb(nvars + deg - 1, nvars - 1)


def is_borel(s: MonomialSet) -> bool:
    members = s._members
    for t in s.elements:
        for j in range(1, len(t)):
            if t[j] == 0:
                continue
            for i in range(j):
                e = list(t)
                e[j] -= 1
                e[i] += 1
                if tuple(e) not in members:
                    return False
    return True


def is_lex_segment(s: MonomialSet) -> bool:
    top = monomials_of_degree(s.vars, s.degree)
    return all(a == b for a, b in zip(s.elements, top))


def lex_segment(nvars: int, deg: int, h: int) -> MonomialSet:
    """The ``h`` lex-greatest monomials of degree ``deg``."""
    total = ambient_size(nvars, deg)
    if not 0 <= h <= total:
        raise SizeExceedsAmbient(f"h={h} outside 0..{total} for {nvars} vars in degree {deg}")
    return MonomialSet._trusted(nvars, deg, islice(monomials_of_degree(nvars, deg), h))


def lex_unrank(nvars: int, deg: int, k: int) -> Monomial:
    """The monomial at 0-based position ``k`` of the lex-descending order."""
    if not 0 <= k < ambient_size(nvars, deg):
        raise SizeExceedsAmbient(f"position {k} outside the {ambient_size(nvars, deg)} monomials")
    e = []
    rest = deg
    for v in range(nvars - 1):
        m = nvars - v - 1
        # monomials whose exponent here exceeds a: ambient_size(m + 1, rest - a - 1)
        lo, hi = 0, rest
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if ambient_size(m + 1, rest - mid) > k:
                lo = mid
            else:
                hi = mid - 1
        k -= ambient_size(m + 1, rest - lo - 1)
        e.append(lo)
        rest -= lo
    e.append(rest)
    return Monomial._trusted(e)


def lex_rank(t: Sequence[int]) -> int:
    """Inverse of :func:`lex_unrank`."""
    n = len(t)
    rest = sum(t)
    k = 0
    for v in range(n - 1):
        k += ambient_size(n - v, rest - t[v] - 1)
        rest -= t[v]
    return k


def lex_successor(t: Monomial) -> Monomial | None:
    """Next monomial of the same degree in lex-descending order, or None after the last."""
    for i in range(len(t) - 2, -1, -1):
        if t[i]:
            tail = sum(t[i + 1:]) + 1
            return Monomial._trusted(t[:i] + (t[i] - 1, tail) + (0,) * (len(t) - i - 2))
    return None


def lex_range(nvars: int, deg: int, start: int, stop: int):
    """Monomials at lex positions ``start <= k < stop`` without enumerating the prefix."""
    if start >= stop:
        return
    t = lex_unrank(nvars, deg, start)
    for _ in range(stop - start):
        yield t
        t = lex_successor(t)


def expand(s: MonomialSet) -> MonomialSet:
    """All degree-(D+1) multiples ``X_i T`` of elements of ``s``."""
    n = s.vars
    out = {t[:i] + (t[i] + 1,) + t[i + 1:] for t in s.elements for i in range(n)}
    return MonomialSet._trusted(n, s.degree + 1, map(Monomial._trusted, out))


def expand_size_borel(s: MonomialSet) -> int:
    """``|expand(s)|`` for a Borel set, counted without building the expansion."""
    if not is_borel(s):
        raise NotBorel("expand_size_borel requires a Borel normed set")
    if s.degree == 0:
        return s.vars * len(s)
    return sum(s.vars - max_index(t) + 1 for t in s.elements)


def decompose(s: MonomialSet) -> list[MonomialSet]:
    """Slots ``S_0..S_D``: slot d holds the elements with ``X_N``-exponent d, last coordinate dropped."""
    n = s.vars
    if n < 2:
        raise TooFewVariables("decompose needs N >= 2")
    slots = [[] for _ in range(s.degree + 1)]
    for t in s.elements:
        slots[t[-1]].append(Monomial._trusted(t[:-1]))
    return [MonomialSet._trusted(n - 1, s.degree - d, slot) for d, slot in enumerate(slots)]


def recompose(slots: Sequence[MonomialSet]) -> MonomialSet:
    if not slots:
        raise DimensionMismatch("need at least one slot")
    nvars = slots[0].vars + 1
    deg = slots[0].degree
    out = []
    for d, slot in enumerate(slots):
        if slot.vars != nvars - 1 or slot.degree != deg - d:
            raise DimensionMismatch(f"slot {d} has the wrong shape")
        out.extend(Monomial._trusted(t + (d,)) for t in slot.elements)
    return MonomialSet._trusted(nvars, deg, out)


def star(s: MonomialSet) -> MonomialSet:
    """Replace every slot of the decomposition by the lex segment of the same size."""
    slots = decompose(s)
    return recompose([lex_segment(sl.vars, sl.degree, len(sl)) for sl in slots])


def m_counts(s: MonomialSet) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(m_1..m_N, m_{<=1}..m_{<=N})``."""
    if s.degree < 1:
        raise DegreeZero("m-statistics are undefined in degree 0")
    m = [0] * s.vars
    for t in s.elements:
        m[max_index(t) - 1] += 1
    prefix = []
    acc = 0
    for c in m:
        acc += c
        prefix.append(acc)
    return tuple(m), tuple(prefix)


def m_le(s: MonomialSet) -> tuple[int, ...]:
    return m_counts(s)[1]


def _binom(a, b):
    return comb(a, b) if 0 <= b <= a else 0


def b_q(s: MonomialSet, q: int) -> int:
    if s.degree < 1:
        raise DegreeZero("b_q is undefined in degree 0")
    return sum(_binom(max_index(t) - 1, q) for t in s.elements)


def b_q_closed(s: MonomialSet, q: int) -> int:
    """``b_q`` from the ``m_{<=i}`` statistics; valid for any set, Borel or not."""
    n = s.vars
    prefix = m_le(s)
    return _binom(n - 1, q) * len(s) - sum(prefix[i - 1] * _binom(i - 1, q - 1) for i in range(1, n))


def compare_mle(lex: MonomialSet, borel: MonomialSet) -> bool:
    """Whether ``m_{<=i}(lex) <= m_{<=i}(borel)`` for every i."""
    _same_shape(lex, borel)
    if not is_lex_segment(lex):
        raise PreconditionViolated("first argument is not a lex segment")
    if not is_borel(borel):
        raise PreconditionViolated("second argument is not Borel normed")
    if len(lex) > len(borel):
        raise PreconditionViolated(f"|L|={len(lex)} exceeds |B|={len(borel)}")
    return all(a <= b for a, b in zip(m_le(lex), m_le(borel)))


def borel_closure(seed: Iterable[Sequence[int]], nvars: int | None = None) -> MonomialSet:
    """Smallest Borel normed set containing ``seed``."""
    seeds = [Monomial(t) for t in seed]
    if not seeds:
        if nvars is None:
            raise DimensionMismatch("cannot infer the variable count of an empty seed")
        raise DegreeZero("empty seed has no degree")
    n = nvars if nvars is not None else len(seeds[0])
    deg = sum(seeds[0])
    for t in seeds:
        if len(t) != n:
            raise DimensionMismatch(f"{t} does not have {n} variables")
        if sum(t) != deg:
            raise MixedDegrees("borel_closure needs monomials of one degree")
    if deg < 1:
        raise MixedDegrees("borel_closure needs degree >= 1")
    seen = set(seeds)
    stack = list(seen)
    while stack:
        t = stack.pop()
        for j in range(1, n):
            if t[j] == 0:
                continue
            for i in range(j):
                e = list(t)
                e[j] -= 1
                e[i] += 1
                u = Monomial._trusted(e)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return MonomialSet._trusted(n, deg, seen)
