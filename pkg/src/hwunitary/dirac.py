"""The basic Dirac inequality ||(lam - s)^+ + rho||^2 >= ||lam + rho||^2.

``basic_dirac`` evaluates it numerically (exactly) for any family and any of
the basic Schmid weights.  ``dirac_scalar_form`` is the closed-form version
for the two orthogonal families with s = beta, the highest noncompact root;
it is kept separate so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from typing import Sequence

from .root_system import (
    HALF,
    Kind,
    RootSystemSpec,
    as_weight,
    check_dim,
    is_k_dominant,
    norm2,
)
from .weyl import k_dominant_representative


class DiracStatus(Enum):
    STRICT_HOLDS = "StrictHolds"
    EQUALITY = "Equality"
    FAILS = "Fails"


@dataclass(frozen=True)
class DiracOutcome:
    status: DiracStatus
    lhs: Q
    rhs: Q


class NotKDominantError(ValueError):
    pass


def _compare(lhs: Q, rhs: Q) -> DiracStatus:
    if lhs > rhs:
        return DiracStatus.STRICT_HOLDS
    if lhs == rhs:
        return DiracStatus.EQUALITY
    return DiracStatus.FAILS


def basic_dirac(spec: RootSystemSpec, lam: Sequence, s_index: int = 0) -> DiracOutcome:
    lam = as_weight(lam)
    check_dim(spec.family, lam)
    if not 0 <= s_index < len(spec.schmid):
        raise IndexError(f"{spec.family} has {len(spec.schmid)} basic Schmid weights, got index {s_index}")
    if not is_k_dominant(spec, lam):
        raise NotKDominantError(f"{tuple(map(str, lam))} is not k-dominant")
    s = spec.schmid[s_index]
    shifted = k_dominant_representative(spec, tuple(a - b for a, b in zip(lam, s)))
    lhs = norm2(spec, tuple(a + r for a, r in zip(shifted, spec.rho)))
    rhs = norm2(spec, tuple(a + r for a, r in zip(lam, spec.rho)))
    return DiracOutcome(_compare(lhs, rhs), lhs, rhs)


@dataclass(frozen=True)
class ScalarForm:
    """One clause of the closed-form inequality: ``value <= bound``."""

    case: str
    p: int | None
    value: Q
    bound: Q

    @property
    def holds(self) -> bool:
        return self.value <= self.bound

    @property
    def strict(self) -> bool:
        return self.value < self.bound

    @property
    def status(self) -> DiracStatus:
        if self.strict:
            return DiracStatus.STRICT_HOLDS
        return DiracStatus.EQUALITY if self.holds else DiracStatus.FAILS


def run_length(tail: Sequence) -> int:
    """Largest p with lam_2 = ... = lam_p, where tail = (lam_2, ..., lam_n).

    The last coordinate enters through its absolute value: flipping the sign of
    lam_n is a symmetry of the D-type diagram and leaves the inequality alone.
    """
    tail = list(tail[:-1]) + [abs(tail[-1])]
    p = 2
    while p - 1 < len(tail) and tail[p - 1] == tail[0]:
        p += 1
    return p


def dirac_scalar_form(spec: RootSystemSpec, lam: Sequence) -> ScalarForm:
    lam = as_weight(lam)
    check_dim(spec.family, lam)
    kind, n = spec.family.kind, spec.family.n
    if not spec.family.is_so:
        raise ValueError(f"no closed-form Dirac inequality for {spec.family}")
    if not is_k_dominant(spec, lam):
        raise NotKDominantError(f"{tuple(map(str, lam))} is not k-dominant")
    tail = lam[1:]
    if all(c == 0 for c in tail):
        return ScalarForm("scalar", None, lam[0], Q(0))
    even = kind is Kind.SO_EVEN
    if all(abs(c) == HALF for c in tail) and (even or all(c == HALF for c in tail)):
        return ScalarForm("spinor", None, lam[0], Q(3, 2) - n if even else Q(1 - n))
    p = run_length(tail)
    bound = 2 + p - 2 * n if even else 1 + p - 2 * n
    return ScalarForm("general", p, lam[0] + lam[1], Q(bound))
