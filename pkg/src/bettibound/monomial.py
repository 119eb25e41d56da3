"""Monomials as exponent vectors.

A :class:`Monomial` is an immutable tuple of non-negative exponents, so the
built-in tuple comparison is exactly the lexicographic order with
``X1 > X2 > ... > XN``.  Variable indices in this API are 1-based.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    ConstantMonomial,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidMove,
    MalformedInput,
    TooFewVariables,
)


class Monomial(tuple):
    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        self = super().__new__(cls, exponents)
        if not self:
            raise MalformedInput("a monomial needs at least one variable")
        for e in self:
            if type(e) is not int or e < 0:
                raise MalformedInput(f"exponents must be non-negative integers, got {e!r}")
        return self

    @classmethod
    def _trusted(cls, exponents) -> "Monomial":
        # skips validation; for internal callers that preserve the invariants
        return tuple.__new__(cls, exponents)

    @property
    def nvars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Monomial({list(self)})"

    def __str__(self):
        if not any(self):
            return "1"
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"X{i}")
            elif e > 1:
                parts.append(f"X{i}^{e}")
        return "*".join(parts)


def degree(t: Monomial) -> int:
    return sum(t)


def max_index(t: Monomial) -> int:
    """Largest (1-based) index of a variable dividing ``t``."""
    for i in range(len(t) - 1, -1, -1):
        if t[i]:
            return i + 1
    raise ConstantMonomial("max_index is undefined for the constant monomial")


def lex_compare(t: Monomial, u: Monomial) -> int:
    """Return -1, 0 or 1 as ``t`` is lex-smaller, equal or lex-greater than ``u``."""
    if len(t) != len(u):
        raise DimensionMismatch(f"cannot compare monomials in {len(t)} and {len(u)} variables")
    return (tuple(t) > tuple(u)) - (tuple(t) < tuple(u))


def _check_index(t: Monomial, i: int) -> None:
    if not 1 <= i <= len(t):
        raise IndexOutOfRange(f"variable index {i} outside 1..{len(t)}")


def elementary_move(t: Monomial, i: int, j: int) -> Monomial:
    """Return ``X_i * t / X_j`` for ``i < j``."""
    _check_index(t, i)
    _check_index(t, j)
    if i >= j:
        raise InvalidMove(f"need i < j, got i={i}, j={j}")
    if t[j - 1] == 0:
        raise InvalidMove(f"X{j} does not divide {t}")
    e = list(t)
    e[j - 1] -= 1
    e[i - 1] += 1
    return Monomial._trusted(e)


def multiply_by_var(t: Monomial, i: int) -> Monomial:
    _check_index(t, i)
    e = list(t)
    e[i - 1] += 1
    return Monomial._trusted(e)


def bar_correspondence(t: Monomial) -> Monomial:
    """Fold the last exponent into the second-to-last one (N -> N-1 variables)."""
    if len(t) < 2:
        raise TooFewVariables("the corresponding monomial needs N >= 2")
    return Monomial._trusted(t[:-2] + (t[-2] + t[-1],))


def divides(t: Monomial, u: Monomial) -> bool:
    return all(a <= b for a, b in zip(t, u))


def lcm(monomials: Iterable[Monomial]) -> Monomial:
    return Monomial._trusted(map(max, zip(*monomials)))


def monomials_of_degree(nvars: int, deg: int) -> Iterator[Monomial]:
    """All monomials of degree ``deg`` in ``nvars`` variables, lex-descending."""
    if nvars < 1:
        raise TooFewVariables("need at least one variable")
    if deg < 0:
        return
    for e in _desc(nvars, deg):
        yield Monomial._trusted(e)


def _desc(n, d):
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _desc(n - 1, d - a):
            yield (a,) + rest
