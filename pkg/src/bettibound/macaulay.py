"""Macaulay binomial expansions and Hilbert functions of ideals.

``HilbertFunction.values[d]`` is ``dim_k I_d`` for the *ideal* ``I`` (not the
quotient ring).  The shift operator ``eval_shift(e, s, t)`` evaluates
``sum_j C(h(j) + s, j + t)`` over the terms of an expansion ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange, MalformedInput, NotAdmissible, TooFewVariables


def binom_ext(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``b < 0``, ``a < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class MacaulayExpansion:
    """``h = C(tops[0], base) + C(tops[1], base-1) + ...``"""

    base: int
    tops: tuple[int, ...] = ()

    def __post_init__(self):
        if self.base < 1:
            raise MalformedInput("expansion base must be >= 1")
        if len(self.tops) > self.base:
            raise MalformedInput("more terms than the base allows")
        prev = None
        for k, top in enumerate(self.tops):
            j = self.base - k
            if top < j:
                raise MalformedInput(f"top {top} below its lower index {j}")
            if prev is not None and top >= prev:
                raise MalformedInput("tops must be strictly decreasing")
            prev = top

    def terms(self):
        """Pairs ``(top, lower index)``."""
        return [(top, self.base - k) for k, top in enumerate(self.tops)]

    def evaluate(self) -> int:
        return sum(comb(top, j) for top, j in self.terms())

    def __str__(self):
        if not self.tops:
            return "0"
        return " + ".join(f"C({top},{j})" for top, j in self.terms())


def _largest_top(rem: int, j: int) -> int:
    # largest a >= j with C(a, j) <= rem; C(a, j) >= a - j + 1 bounds the search
    if j == 1:
        return rem
    lo, hi = j, rem + j - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if comb(mid, j) <= rem:
            lo = mid
        else:
            hi = mid - 1
    return lo


@lru_cache(maxsize=65536)
def expand(h: int, n: int) -> MacaulayExpansion:
    """The binomial expansion of ``h`` in base ``n`` (greedy, hence unique)."""
    if n < 1:
        raise MalformedInput("expansion base must be >= 1")
    if h < 0:
        raise MalformedInput("cannot expand a negative number")
    tops = []
    rem = h
    for j in range(n, 0, -1):
        if rem == 0:
            break
        a = _largest_top(rem, j)
        tops.append(a)
        rem -= comb(a, j)
    assert rem == 0
    return MacaulayExpansion(n, tuple(tops))


def eval_shift(e: MacaulayExpansion, s: int, t: int) -> int:
    return sum(binom_ext(top + s, j + t) for top, j in e.terms())


def min_growth(h: int, nvars: int) -> int:
    """Least possible ``dim I_{d+1}`` given ``dim I_d = h``."""
    if nvars < 2:
        raise TooFewVariables("min_growth needs N >= 2")
    return eval_shift(expand(h, nvars - 1), 1, 0)


def m_le_lex(h: int, nvars: int, i: int) -> int:
    """``m_{<=i}`` of any lex segment of size ``h`` in ``nvars`` variables."""
    if nvars < 2:
        raise TooFewVariables("m_le_lex needs N >= 2")
    if not 1 <= i <= nvars:
        raise IndexOutOfRange(f"index {i} outside 1..{nvars}")
    k = nvars - i
    return eval_shift(expand(h, nvars - 1), -k, -k)


@dataclass(frozen=True)
class HilbertFunction:
    vars: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if type(self.vars) is not int or self.vars < 1:
            raise MalformedInput("vars must be a positive integer")
        if not self.values:
            raise MalformedInput("a Hilbert function needs at least the degree-0 value")
        for d, h in enumerate(self.values):
            if type(h) is not int or h < 0:
                raise MalformedInput(f"value at degree {d} must be a non-negative integer")
            cap = comb(self.vars + d - 1, self.vars - 1)
            if h > cap:
                raise MalformedInput(f"value {h} at degree {d} exceeds the {cap} monomials available")

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d: int) -> int:
        if not 0 <= d < len(self.values):
            raise IndexOutOfRange(f"degree {d} outside the known range 0..{self.max_degree}")
        return self.values[d]

    def to_json(self) -> dict:
        return {"vars": self.vars, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "HilbertFunction":
        try:
            return cls(data["vars"], tuple(data["values"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad Hilbert function JSON: {exc}") from None


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    first_violation: int | None = None
    reason: str = ""


def is_admissible(hf: HilbertFunction) -> AdmissibilityReport:
    n = hf.vars
    values = hf.values
    for d, h in enumerate(values):
        if h > comb(n + d - 1, n - 1):
            return AdmissibilityReport(False, d, f"h_{d}={h} exceeds the number of monomials")
    if values[0] != 0:
        # a nonzero degree-0 piece means the unit ideal, which is not modelled
        return AdmissibilityReport(False, 0, "h_0 must be 0 (unit ideal is not supported)")
    if n == 1:
        for d in range(len(values) - 1):
            if values[d] and values[d + 1] < 1:
                return AdmissibilityReport(False, d + 1, f"h_{d + 1}={values[d + 1]} < 1")
        return AdmissibilityReport(True)
    for d in range(len(values) - 1):
        need = min_growth(values[d], n)
        if values[d + 1] < need:
            return AdmissibilityReport(
                False, d + 1, f"h_{d + 1}={values[d + 1]} < minimal growth {need} of h_{d}={values[d]}"
            )
    return AdmissibilityReport(True)


def _growth(h: int, n: int) -> int:
    return h if n == 1 else min_growth(h, n)


@dataclass(frozen=True)
class GeneratorDegrees:
    counts: tuple[tuple[int, int], ...]
    top_degree: int | None
    stabilized: bool


def generator_degrees(hf: HilbertFunction) -> GeneratorDegrees:
    """Per-degree count of new minimal generators of the lex ideal with this Hilbert function.

    ``stabilized`` reports whether the last known step grows minimally; if it
    does not, generators may exist beyond the last known degree.
    """
    rep = is_admissible(hf)
    if not rep.ok:
        raise NotAdmissible(rep.reason, rep.first_violation)
    n = hf.vars
    values = hf.values
    counts = []
    prev = 0
    for d, h in enumerate(values):
        new = h - (_growth(prev, n) if d > 0 else 0)
        if new > 0:
            counts.append((d, new))
        prev = h
    top = counts[-1][0] if counts else None
    stabilized = len(values) >= 2 and values[-1] == _growth(values[-2], n)
    return GeneratorDegrees(tuple(counts), top, stabilized)


def green_degree(hf: HilbertFunction) -> int | None:
    """Largest degree of a minimal generator of the lex ideal (None for the zero ideal)."""
    return generator_degrees(hf).top_degree

