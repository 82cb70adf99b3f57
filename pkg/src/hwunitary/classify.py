"""Unitarity of L(lam) for the four Hermitian families.

There are two independent deciders.  ``classify_lambda`` works with the
highest weight lam directly; ``classify_inf_char`` works with the parameter
Lam = lam + rho and its own list of cases.  They share no case logic on
purpose: agreement between them is the main guard against a mistyped
threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from typing import Callable, Sequence, Tuple

from .root_system import (
    HALF,
    Kind,
    RootSystemSpec,
    Weight,
    as_weight,
    check_dim,
    e6_f,
    e7_g,
    in_subspace,
    is_k_dominant,
    is_k_dominant_regular,
    is_k_integral,
)
from .weyl import k_dominant_conjugates


class Status(Enum):
    NOT_PARAMETER = "NotParameter"
    NONUNITARY = "Nonunitary"
    UNITARY = "Unitary"


@dataclass(frozen=True)
class UnitarityVerdict:
    status: Status
    verma_irreducible: bool
    case_label: str

    def __post_init__(self) -> None:
        if self.verma_irreducible and self.status is not Status.UNITARY:
            raise ValueError("only unitary verdicts can carry the irreducible-Verma flag")

    @property
    def is_unitary(self) -> bool:
        return self.status is Status.UNITARY


@dataclass(frozen=True)
class InfCharReport:
    dominant: Weight
    unitary: Tuple[Weight, ...]
    nonunitary: Tuple[Weight, ...]


def _not_param(label: str) -> UnitarityVerdict:
    return UnitarityVerdict(Status.NOT_PARAMETER, False, label)


def _verdict(label: str, unitary: bool, verma: bool) -> UnitarityVerdict:
    if unitary:
        return UnitarityVerdict(Status.UNITARY, verma, label)
    return UnitarityVerdict(Status.NONUNITARY, False, label)


def _ray(label: str, value: Q, bound: Q, *isolated: Q) -> UnitarityVerdict:
    """Unitary on value >= bound (Verma when strict) and at isolated points."""
    return _verdict(label, value >= bound or value in isolated, value > bound)


def _screen(spec: RootSystemSpec, w: Weight, dominant: Callable) -> str | None:
    if not in_subspace(spec.family, w):
        return "off-subspace"
    if not dominant(spec, w):
        return "not-k-dominant"
    if not is_k_integral(spec, w):
        return "not-k-integral"
    return None


# --- highest-weight form ---------------------------------------------------


def _lambda_so(spec: RootSystemSpec, lam: Weight) -> UnitarityVerdict:
    n = spec.family.n
    even = spec.family.kind is Kind.SO_EVEN
    l1, tail = lam[0], lam[1:]
    if all(c == 0 for c in tail):
        wallach = Q(2 - n) if even else Q(3, 2) - n
        return _verdict("scalar", l1 == 0 or l1 <= wallach, l1 < wallach)
    if all(c == HALF for c in tail[:-1]) and (tail[-1] == HALF or (even and tail[-1] == -HALF)):
        bound = Q(3, 2) - n if even else Q(1 - n)
        return _verdict("spinor", l1 <= bound, l1 < bound)
    # lam_n only counts through |lam_n|, matching the Dirac computation
    flat = list(lam[:-1]) + [abs(lam[-1])]
    p = 2
    while p <= n - 1 and flat[p] == flat[1]:
        p += 1
    bound = Q(2 + p - 2 * n) if even else Q(1 + p - 2 * n)
    return _verdict("general", l1 + lam[1] <= bound, l1 + lam[1] < bound)


def _lambda_e6(lam: Weight) -> UnitarityVerdict:
    l1, l2, l3, l4, l5 = lam[:5]
    f = e6_f(lam)
    if (l1, l2, l3, l4, l5) == (0, 0, 0, 0, 0):
        return _ray("case-1", f, Q(6), Q(0))
    if (l1, l2, l3, l4) == (0, 0, 0, 0):
        # isolated discrete point at f = 8
        return _ray("case-2", f, Q(14), Q(8))
    if l1 + l2 >= 1:
        return _ray("case-3", f, Q(20))
    if l3 - l2 >= 1:
        return _ray("case-4", f, Q(18))
    if l2 == 0:
        return _ray("case-6", f, Q(14))
    if l4 - l2 >= 1:
        return _ray("case-5", f, Q(16))
    if l5 - l2 >= 1:
        return _ray("case-7", f, Q(14))
    return _ray("case-8", f, Q(12))


def _lambda_e7(lam: Weight) -> UnitarityVerdict:
    l1, l2, l3, l4, l5 = lam[:5]
    f, g = lam[6], e7_g(lam)
    if g >= 1:
        return _ray("case-1", f, Q(8))
    if l1 < l2:
        return _ray("case-2", f, Q(15, 2))
    if l2 < l3:
        return _ray("case-3", f, Q(7))
    if l3 < l4:
        return _ray("case-4", f, Q(13, 2)) if l1 > 0 else _ray("case-5", f, Q(6))
    if l4 < l5:
        return _ray("case-6", f, Q(6)) if l1 > 0 else _ray("case-7", f, Q(6), Q(4))
    if l1 > 0:
        return _ray("case-8", f, Q(11, 2))
    return _ray("case-9", f, Q(4), Q(2), Q(0))


def classify_lambda(spec: RootSystemSpec, lam: Sequence) -> UnitarityVerdict:
    lam = as_weight(lam)
    check_dim(spec.family, lam)
    bad = _screen(spec, lam, is_k_dominant)
    if bad:
        return _not_param(bad)
    kind = spec.family.kind
    if spec.family.is_so:
        return _lambda_so(spec, lam)
    if kind is Kind.E6:
        return _lambda_e6(lam)
    return _lambda_e7(lam)


# --- parameter form ----------------------------------------------------------


def _inf_char_so(spec: RootSystemSpec, lam: Weight) -> UnitarityVerdict:
    n = spec.family.n
    even = spec.family.kind is Kind.SO_EVEN
    x1, tail = lam[0], list(lam[1:])
    scalar = [Q(n - 2 - i) for i in range(n - 1)] if even else [Q(2 * n - 3 - 2 * i, 2) for i in range(n - 1)]
    spinor = [Q(2 * n - 3 - 2 * i, 2) for i in range(n - 1)] if even else [Q(n - 1 - i) for i in range(n - 1)]
    if tail == scalar:
        top = Q(n - 1) if even else Q(2 * n - 1, 2)
        return _verdict("scalar", x1 == top or x1 <= 1, x1 < 1)
    if tail == spinor or (even and tail == spinor[:-1] + [-spinor[-1]]):
        return _verdict("spinor", x1 <= HALF, x1 < HALF)
    flat = list(lam[:-1]) + [abs(lam[-1])]
    p = 2
    while p <= n - 1 and flat[p] == flat[p - 1] - 1:
        p += 1
    s = x1 + lam[1]
    return _verdict("general", s <= p - 1, s < p - 1)


_E6_CASES = (
    # (label, shape test on x1..x5, threshold, isolated points)
    ("case-1", lambda x: x == (0, 1, 2, 3, 4), Q(-16), (Q(-22),)),
    ("case-2", lambda x: x[:4] == (0, 1, 2, 3) and x[4] > 4, Q(-8), (Q(-14),)),
    ("case-3", lambda x: x[0] + x[1] >= 2, Q(-2), ()),
    ("case-4", lambda x: x[1] == -x[0] + 1 and x[2] - x[1] >= 2, Q(-4), ()),
    ("case-5", lambda x: x[2] == x[1] + 1 == -x[0] + 2 and x[1] > 1 and x[3] - x[1] >= 3, Q(-6), ()),
    ("case-6", lambda x: x[:3] == (0, 1, 2) and x[3] >= 4, Q(-8), ()),
    ("case-7", lambda x: x[3] == x[2] + 1 == x[1] + 2 == -x[0] + 3 and x[1] > 1 and x[4] - x[1] >= 4, Q(-8), ()),
    ("case-8", lambda x: x[4] == x[3] + 1 == x[2] + 2 == x[1] + 3 == -x[0] + 4 and x[1] > 1, Q(-10), ()),
)

_E7_CASES = (
    ("case-1", lambda x, g: g >= 2, Q(-1, 2), ()),
    ("case-2", lambda x, g: g == 1 and x[0] < x[1] - 1, Q(-1), ()),
    ("case-3", lambda x, g: g == 1 and x[0] == x[1] - 1 < x[2] - 2, Q(-3, 2), ()),
    ("case-4", lambda x, g: g == 1 and 0 < x[0] == x[1] - 1 == x[2] - 2 < x[3] - 3, Q(-2), ()),
    ("case-5", lambda x, g: g == 1 and 0 == x[0] == x[1] - 1 == x[2] - 2 and x[3] > 3, Q(-5, 2), ()),
    ("case-6", lambda x, g: g == 1 and 0 < x[0] == x[1] - 1 == x[2] - 2 == x[3] - 3 < x[4] - 4, Q(-5, 2), ()),
    ("case-7", lambda x, g: g == 1 and 0 == x[0] == x[1] - 1 == x[2] - 2 == x[3] - 3 and x[4] > 4, Q(-5, 2), (Q(-9, 2),)),
    ("case-8", lambda x, g: g == 1 and 0 < x[0] == x[1] - 1 == x[2] - 2 == x[3] - 3 == x[4] - 4, Q(-3), ()),
    ("case-9", lambda x, g: g == 1 and 0 == x[0] == x[1] - 1 == x[2] - 2 == x[3] - 3 == x[4] - 4, Q(-9, 2), (Q(-13, 2), Q(-17, 2))),
)


def _inf_char_e(spec: RootSystemSpec, lam: Weight) -> UnitarityVerdict:
    x = tuple(lam[:5])
    if spec.family.kind is Kind.E6:
        f = e6_f(lam)
        hits = [c for c in _E6_CASES if c[1](x)]
    else:
        f, g = lam[6], e7_g(lam)
        hits = [c for c in _E7_CASES if c[1](x, g)]
    if len(hits) != 1:
        # every regular integral parameter sits in exactly one case
        raise AssertionError(f"{tuple(map(str, lam))} matched {len(hits)} cases")
    label, _, bound, isolated = hits[0]
    return _ray(label, f, bound, *isolated)


def classify_inf_char(spec: RootSystemSpec, lam: Sequence) -> UnitarityVerdict:
    """Decide unitarity from the parameter Lam = lam + rho."""
    lam = as_weight(lam)
    check_dim(spec.family, lam)
    bad = _screen(spec, lam, is_k_dominant_regular)
    if bad:
        return _not_param(bad)
    if spec.family.is_so:
        return _inf_char_so(spec, lam)
    return _inf_char_e(spec, lam)


def inf_char_report(spec: RootSystemSpec, dominant: Sequence) -> InfCharReport:
    """Split the k-dominant-regular conjugates of a g-dominant weight by unitarity.

    Conjugates that are not parameters at all (for instance not k-integral)
    land in the nonunitary list, as they do in the reference listings.
    """
    orbit = k_dominant_conjugates(spec, dominant)
    unitary, nonunitary = [], []
    for c in orbit.conjugates:
        (unitary if classify_inf_char(spec, c).is_unitary else nonunitary).append(c)
    return InfCharReport(orbit.source, tuple(unitary), tuple(nonunitary))
