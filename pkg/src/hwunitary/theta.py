"""K-type bookkeeping for the E6 dual pair inside split E7.

The z'-eigenspace Pi[m-2]' of the minimal representation decomposes as

    Pi[m-2]' = sum over n >= 0, a + b + c = n, c - a = m of V_{a lam + b mu}(3n + m + 16)'

where lam and mu are the minuscule D6 weights of dimension 10 and 16 and
the number in parentheses is the h'-eigenvalue.  Under the h-grading the
nilradical splits as 10 + 16 + 1; that is recorded here only as the fixed
data ``NILRADICAL_DIMS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import List

from .classify import Status, classify_lambda
from .root_system import E6, Weight, as_weight, build

NILRADICAL_DIMS = (10, 16, 1)

# h = 2(e8 - e7 - e6) as a vector in the ambient space of e6
H = as_weight((0, 0, 0, 0, 0, -2, -2, 2))


@dataclass(frozen=True)
class ThetaType:
    """V_{a lam + b mu} at level n = a + b + c with h'-weight 3n + m + 16."""

    a: int
    b: int
    c: int
    n: int
    hprime_weight: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 0 or self.a + self.b + self.c != self.n:
            raise ValueError(f"bad type (a, b, c, n) = {(self.a, self.b, self.c, self.n)}")
        if self.hprime_weight != 3 * self.n + self.m + 16:
            raise ValueError("h'-weight must equal 3n + m + 16")

    @property
    def m(self) -> int:
        return self.c - self.a

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "ThetaType":
        n = a + b + c
        return cls(a=a, b=b, c=c, n=n, hprime_weight=3 * n + (c - a) + 16)

    def as_row(self) -> tuple:
        return (self.a, self.b, self.c, self.n, self.hprime_weight)


def pi_types(m: int, max_level: int) -> List[ThetaType]:
    """Types of Pi[m-2]' up to level ``max_level``, ordered by (n, a)."""
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    out = []
    for n in range(max_level + 1):
        for a in range(n + 1):
            c = a + m
            b = n - a - c
            if c >= 0 and b >= 0:
                out.append(ThetaType.of(a, b, c))
    return out


def minimal_type(m: int) -> ThetaType:
    """The lowest type: C(4m+16)' for m >= 0, V_{|m| lam}(2|m|+16)' for m <= 0."""
    if m >= 0:
        return ThetaType.of(0, 0, m)
    return ThetaType.of(-m, 0, 0)


@dataclass(frozen=True)
class BridgePoint:
    weight: Weight
    m: int
    h_value: Q


def discrete_point_bridge(k: int) -> BridgePoint:
    """Match the e6 discrete point (0,0,0,0,k,l,l,-l), 3l - k = 8, with Pi[-k-2].

    Only k that make 2l an integer give an e6 weight; the rest are refused.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    l = Q(k + 8, 3)
    if (2 * l).denominator != 1:
        raise ValueError(f"k = {k} gives l = {l}, which is not a half-integer")
    chi = as_weight((0, 0, 0, 0, k, l, l, -l))
    h_value = sum((x * y for x, y in zip(chi, H)), Q(0))
    assert h_value == -2 * k - 16
    assert -h_value == minimal_type(-k).hprime_weight
    verdict = classify_lambda(build(E6), chi)
    assert verdict.status is Status.UNITARY, verdict
    return BridgePoint(weight=chi, m=-k, h_value=h_value)
