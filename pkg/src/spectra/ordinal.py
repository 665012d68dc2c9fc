"""Ordinal arithmetic in Cantor normal form below epsilon_0.

An ordinal is a strictly decreasing tuple of (exponent, coefficient) pairs
denoting sum of w**exponent * coefficient; exponents are themselves ordinals
and coefficients are positive integers.  The empty tuple is zero.  Every
ordinal below epsilon_0 has exactly one such form, so structural equality is
ordinal equality.

Exposed operations are the ones the derived-set machinery consumes: total
comparison, zero/successor/limit classification, successor and predecessor,
non-commutative addition, left subtraction (the unique d with g + d == a) and
Wainer-style fundamental sequences for limits.  Multiplication and
exponentiation are intentionally not provided.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Tuple

from .errors import NoPredecessorError, NotLimitError, SubtractionError

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "left_subtract",
    "omega_power",
    "from_int",
]


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, Ordinal) or not isinstance(coeff, int):
                raise TypeError("terms must be (Ordinal, int) pairs")
            if coeff < 1:
                raise ValueError("coefficients must be positive")
            if prev is not None and not exp < prev:
                raise ValueError("exponents must strictly decrease")
            prev = exp

    # -- classification ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def classify(self) -> str:
        """One of 'zero', 'successor', 'limit'; the three cases partition."""
        if not self.terms:
            return "zero"
        return "successor" if self.terms[-1][0].is_zero() else "limit"

    def natural(self):
        """The int value if this ordinal is finite, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and self.terms[0][0].is_zero():
            return self.terms[0][1]
        return None

    # -- order -------------------------------------------------------------

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    # -- successor structure -----------------------------------------------

    def successor(self) -> "Ordinal":
        ts = list(self.terms)
        if ts and ts[-1][0].is_zero():
            exp, coeff = ts[-1]
            ts[-1] = (exp, coeff + 1)
        else:
            ts.append((ZERO, 1))
        return Ordinal(tuple(ts))

    def predecessor(self) -> "Ordinal":
        if not self.is_successor():
            raise NoPredecessorError(f"{self} has no predecessor")
        ts = list(self.terms)
        exp, coeff = ts[-1]
        if coeff == 1:
            ts.pop()
        else:
            ts[-1] = (exp, coeff - 1)
        return Ordinal(tuple(ts))

    # -- addition ----------------------------------------------------------

    def __add__(self, other: "Ordinal") -> "Ordinal":
        if not isinstance(other, Ordinal):
            return NotImplemented
        if other.is_zero():
            return self
        lead = other.terms[0][0]
        ts = self.terms
        i = 0
        while i < len(ts) and lead < ts[i][0]:
            i += 1
        # terms of self below the lead exponent are absorbed by other
        rest = list(other.terms)
        if i < len(ts) and ts[i][0] == lead:
            rest[0] = (lead, ts[i][1] + rest[0][1])
        return Ordinal(ts[:i] + tuple(rest))

    def plus_int(self, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("plus_int takes a nonnegative amount")
        return self + from_int(n)

    # -- fundamental sequence ----------------------------------------------

    def fundamental(self, k: int) -> "Ordinal":
        """k-th element (k >= 1) of the canonical strictly increasing sequence
        converging to this limit ordinal.

        The last term w**e * c is rewritten: for successor e the sequence is
        w**e * (c-1) + w**(e-1) * k, for limit e it is
        w**e * (c-1) + w**(e[k]).
        """
        if not self.is_limit():
            raise NotLimitError(f"{self} is not a limit ordinal")
        if k < 1:
            raise ValueError("fundamental sequence index starts at 1")
        prefix = list(self.terms[:-1])
        exp, coeff = self.terms[-1]
        if coeff > 1:
            prefix.append((exp, coeff - 1))
        if exp.is_successor():
            down = exp.predecessor()
            tail = (down, k)
        else:
            tail = (exp.fundamental(k), 1)
        return Ordinal(tuple(prefix) + (tail,))

    # -- auxiliary structure -----------------------------------------------

    def split_tail(self) -> Tuple["Ordinal", int]:
        """Split off the finite tail: returns (head, n) with head + n == self
        and head zero or a limit."""
        if self.is_successor():
            return Ordinal(self.terms[:-1]), self.terms[-1][1]
        return self, 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            if exp.is_zero():
                parts.append(str(coeff))
            elif exp == ONE:
                parts.append("w" if coeff == 1 else f"w*{coeff}")
            else:
                body = f"w^({exp})"
                parts.append(body if coeff == 1 else f"{body}*{coeff}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal[{self}]"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are nonnegative")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def omega_power(exp: Ordinal, coeff: int = 1) -> Ordinal:
    """w**exp * coeff as a single-term ordinal."""
    if exp.is_zero():
        return from_int(coeff)
    return Ordinal(((exp, coeff),))


def left_subtract(a: Ordinal, g: Ordinal) -> Ordinal:
    """The unique d with g + d == a; requires g <= a."""
    ta, tg = a.terms, g.terms
    i = 0
    while i < len(ta) and i < len(tg) and ta[i] == tg[i]:
        i += 1
    if i == len(tg):
        return Ordinal(ta[i:])
    if i == len(ta):
        raise SubtractionError(f"{g} exceeds {a}")
    (ea, ca), (eg, cg) = ta[i], tg[i]
    if ea < eg or (ea == eg and ca < cg):
        raise SubtractionError(f"{g} exceeds {a}")
    if eg < ea:
        return Ordinal(ta[i:])
    # shared exponent with cg < ca: the difference keeps the surplus copies
    return Ordinal(((ea, ca - cg),) + ta[i + 1 :])
