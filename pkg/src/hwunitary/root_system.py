"""Exact root data for the Hermitian families so(2,2n-2), so(2,2n-1), e6(-14), e7(-25).

Weights are tuples of :class:`fractions.Fraction`.  The so families use the
standard length-n coordinates; the exceptional families use length-8 tuples
living in a subspace of R^8 (e6: x6 = x7 = -x8, e7: x7 = -x8).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from functools import lru_cache
from itertools import product
from numbers import Rational
from typing import Iterable, Sequence, Tuple

Weight = Tuple[Q, ...]

HALF = Q(1, 2)


class RankError(ValueError):
    """Rank parameter outside the family's domain."""


class DimensionError(ValueError):
    """Weight length does not match the ambient dimension."""


class ConstraintError(ValueError):
    """Weight leaves the subspace an exceptional family lives in."""


class Kind(Enum):
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"
    E6 = "e6"
    E7 = "e7"


@dataclass(frozen=True)
class Family:
    kind: Kind
    n: int | None = None

    def __post_init__(self) -> None:
        if self.kind in (Kind.SO_EVEN, Kind.SO_ODD):
            if not isinstance(self.n, int) or isinstance(self.n, bool):
                raise RankError(f"{self.kind.value} needs an integer rank n, got {self.n!r}")
            low = 3 if self.kind is Kind.SO_EVEN else 2
            if self.n < low:
                raise RankError(f"{self.kind.value} needs n >= {low}, got {self.n}")
        elif self.n is not None:
            raise RankError(f"{self.kind.value} takes no rank parameter")

    @classmethod
    def so_even(cls, n: int) -> "Family":
        return cls(Kind.SO_EVEN, n)

    @classmethod
    def so_odd(cls, n: int) -> "Family":
        return cls(Kind.SO_ODD, n)

    @property
    def is_so(self) -> bool:
        return self.kind in (Kind.SO_EVEN, Kind.SO_ODD)

    @property
    def dim(self) -> int:
        return self.n if self.is_so else 8

    def __str__(self) -> str:
        return f"{self.kind.value}({self.n})" if self.is_so else self.kind.value


E6 = Family(Kind.E6)
E7 = Family(Kind.E7)


def to_rational(x) -> Q:
    """Coerce ints, Fractions and numeric strings to an exact rational.

    Floats are refused so that nothing inexact leaks into the core.
    """
    if isinstance(x, float):
        raise TypeError(f"refusing float coordinate {x!r}; pass a Fraction or a string")
    if isinstance(x, (int, Rational, str)):
        return Q(x)
    raise TypeError(f"cannot read {x!r} as an exact rational")


def as_weight(coords: Iterable) -> Weight:
    return tuple(to_rational(c) for c in coords)


def make_weight(family: Family, coords: Sequence) -> Weight:
    """Build a weight for ``family``, completing the redundant E coordinates.

    e6 accepts 6 values (x6 is repeated as x6, x6, -x6) and e7 accepts 7
    values (x7 becomes x7, -x7); full 8-tuples are checked against the
    subspace constraint.
    """
    w = as_weight(coords)
    if family.kind is Kind.E6 and len(w) == 6:
        w = w[:5] + (w[5], w[5], -w[5])
    elif family.kind is Kind.E7 and len(w) == 7:
        w = w[:6] + (w[6], -w[6])
    check_dim(family, w)
    if not in_subspace(family, w):
        raise ConstraintError(f"{tuple(str(c) for c in w)} violates the {family} coordinate constraint")
    return w


def check_dim(family: Family, w: Sequence) -> None:
    if len(w) != family.dim:
        raise DimensionError(f"{family} weights have {family.dim} coordinates, got {len(w)}")


def in_subspace(family: Family, w: Sequence) -> bool:
    if family.kind is Kind.E6:
        return w[5] == w[6] == -w[7]
    if family.kind is Kind.E7:
        return w[6] == -w[7]
    return True


@dataclass(frozen=True)
class RootSystemSpec:
    family: Family
    positive_compact: Tuple[Weight, ...]
    positive_noncompact: Tuple[Weight, ...]
    simple_roots_g: Tuple[Weight, ...]
    simple_roots_k: Tuple[Weight, ...]
    rho: Weight
    schmid: Tuple[Weight, ...]

    @property
    def dim(self) -> int:
        return self.family.dim

    @property
    def positive_roots(self) -> Tuple[Weight, ...]:
        return self.positive_compact + self.positive_noncompact

    def is_root(self, a: Sequence) -> bool:
        a = tuple(a)
        neg = tuple(-c for c in a)
        roots = self._root_set()
        return a in roots or neg in roots

    def _root_set(self) -> frozenset:
        return _root_set(self)


@lru_cache(maxsize=None)
def _root_set(spec: RootSystemSpec) -> frozenset:
    return frozenset(spec.positive_roots)


def _unit(dim: int, i: int, c=1) -> list:
    v = [Q(0)] * dim
    v[i] = Q(c)
    return v


def _eps(dim: int, *terms: Tuple[int, int]) -> Weight:
    """Sum of c * e_i over (i, c) pairs, indices 1-based as on paper."""
    v = [Q(0)] * dim
    for i, c in terms:
        v[i - 1] += c
    return tuple(v)


def _half_spin(sign6: int, parity: int) -> list:
    """(1/2)(e8 - e7 + sign6*e6 + sum_{i<=5} (-1)^{n(i)} e_i), sum n(i) = parity mod 2."""
    out = []
    for signs in product((0, 1), repeat=5):
        if sum(signs) % 2 != parity:
            continue
        v = [HALF * (-1) ** s for s in signs] + [HALF * sign6, -HALF, HALF]
        out.append(tuple(v))
    return out


def _so_even(n: int):
    compact = []
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            compact.append(_eps(n, (i, 1), (j, -1)))
            compact.append(_eps(n, (i, 1), (j, 1)))
    noncompact = []
    for j in range(2, n + 1):
        noncompact.append(_eps(n, (1, 1), (j, -1)))
        noncompact.append(_eps(n, (1, 1), (j, 1)))
    simple = [_eps(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
    simple.append(_eps(n, (n - 1, 1), (n, 1)))
    rho = tuple(Q(n - i) for i in range(1, n + 1))
    schmid = [_eps(n, (1, 1), (2, 1)), _eps(n, (1, 2))]
    return compact, noncompact, simple, rho, schmid


def _so_odd(n: int):
    compact = []
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            compact.append(_eps(n, (i, 1), (j, -1)))
            compact.append(_eps(n, (i, 1), (j, 1)))
    compact += [_eps(n, (i, 1)) for i in range(2, n + 1)]
    noncompact = []
    for j in range(2, n + 1):
        noncompact.append(_eps(n, (1, 1), (j, -1)))
        noncompact.append(_eps(n, (1, 1), (j, 1)))
    noncompact.append(_eps(n, (1, 1)))
    simple = [_eps(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
    simple.append(_eps(n, (n, 1)))
    rho = tuple(Q(2 * (n - i) + 1, 2) for i in range(1, n + 1))
    schmid = [_eps(n, (1, 1), (2, 1)), _eps(n, (1, 2))]
    return compact, noncompact, simple, rho, schmid


def _d5_on_first_five() -> list:
    roots = []
    for i in range(1, 6):
        for j in range(1, i):
            roots.append(_eps(8, (i, 1), (j, -1)))
            roots.append(_eps(8, (i, 1), (j, 1)))
    return roots


_ALPHA1 = (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF)


def _e_simple(rank: int) -> list:
    simple = [_ALPHA1, _eps(8, (2, 1), (1, 1)), _eps(8, (2, 1), (1, -1))]
    simple += [_eps(8, (i + 1, 1), (i, -1)) for i in range(2, rank - 1)]
    return simple


def _e6():
    compact = _d5_on_first_five()
    # (1/2)(e8 - e7 - e6 + ...) with an even number of minus signs on e1..e5
    noncompact = _half_spin(-1, 0)
    simple = _e_simple(6)
    rho = as_weight((0, 1, 2, 3, 4, -4, -4, 4))
    schmid = [
        tuple(HALF * c for c in (1, 1, 1, 1, 1, -1, -1, 1)),
        as_weight((0, 0, 0, 0, 1, -1, -1, 1)),
    ]
    return compact, noncompact, simple, rho, schmid


def _e7():
    compact = _d5_on_first_five() + _half_spin(-1, 0)
    noncompact = []
    for i in range(1, 6):
        noncompact.append(_eps(8, (6, 1), (i, 1)))
        noncompact.append(_eps(8, (6, 1), (i, -1)))
    noncompact.append(_eps(8, (8, 1), (7, -1)))
    noncompact += _half_spin(1, 1)
    simple = _e_simple(7)
    rho = as_weight((0, 1, 2, 3, 4, 5, "-17/2", "17/2"))
    schmid = [
        as_weight((0, 0, 0, 0, 0, 0, -1, 1)),
        as_weight((0, 0, 0, 0, 1, 1, -1, 1)),
        as_weight((0, 0, 0, 0, 0, 2, -1, 1)),
    ]
    return compact, noncompact, simple, rho, schmid


def _indecomposable(positive: Sequence[Weight]) -> list:
    """Positive roots that are not a sum of two positive roots of the same set."""
    pos = set(positive)
    out = []
    for r in positive:
        split = any(
            tuple(a - b for a, b in zip(r, s)) in pos for s in positive if s != r
        )
        if not split:
            out.append(r)
    return out


@lru_cache(maxsize=None)
def build(family: Family) -> RootSystemSpec:
    if not isinstance(family, Family):
        raise TypeError(f"expected a Family, got {family!r}")
    if family.kind is Kind.SO_EVEN:
        data = _so_even(family.n)
    elif family.kind is Kind.SO_ODD:
        data = _so_odd(family.n)
    elif family.kind is Kind.E6:
        data = _e6()
    else:
        data = _e7()
    compact, noncompact, simple, rho, schmid = data
    return RootSystemSpec(
        family=family,
        positive_compact=tuple(compact),
        positive_noncompact=tuple(noncompact),
        simple_roots_g=tuple(simple),
        simple_roots_k=tuple(_indecomposable(compact)),
        rho=rho,
        schmid=tuple(schmid),
    )


def inner(spec: RootSystemSpec, a: Sequence, b: Sequence) -> Q:
    check_dim(spec.family, a)
    check_dim(spec.family, b)
    return sum((Q(x) * y for x, y in zip(a, b)), Q(0))


def norm2(spec: RootSystemSpec, a: Sequence) -> Q:
    return inner(spec, a, a)


def e7_g(w: Sequence) -> Q:
    """g(w) = (w1 - w2 - ... - w6 - 2 w7) / 2, the pairing of w with alpha_1."""
    return (w[0] - sum(w[1:6]) - 2 * w[6]) / 2


def e6_f(w: Sequence) -> Q:
    """f(w) = 3 w6 - (w1 + ... + w5)."""
    return 3 * w[5] - sum(w[:5])


def _chain(w: Sequence, strict: bool) -> bool:
    """|w1| <= w2 <= w3 <= w4 <= w5 (strict variant with <)."""
    if strict:
        return abs(w[0]) < w[1] < w[2] < w[3] < w[4]
    return abs(w[0]) <= w[1] <= w[2] <= w[3] <= w[4]


def _k_dom(spec: RootSystemSpec, w: Sequence, strict: bool) -> bool:
    check_dim(spec.family, w)
    kind = spec.family.kind
    lt = (lambda a, b: a > b) if strict else (lambda a, b: a >= b)
    if kind is Kind.SO_EVEN:
        tail = list(w[1:])
        return all(lt(tail[i], tail[i + 1]) for i in range(len(tail) - 2)) and lt(tail[-2], abs(tail[-1]))
    if kind is Kind.SO_ODD:
        tail = list(w[1:]) + [Q(0)]
        return all(lt(tail[i], tail[i + 1]) for i in range(len(tail) - 1))
    if kind is Kind.E6:
        return _chain(w, strict)
    g = e7_g(w)
    return _chain(w, strict) and (g > 0 if strict else g >= 0)


def is_k_dominant(spec: RootSystemSpec, w: Sequence) -> bool:
    return _k_dom(spec, w, strict=False)


def is_k_dominant_regular(spec: RootSystemSpec, w: Sequence) -> bool:
    return _k_dom(spec, w, strict=True)


def is_g_dominant(spec: RootSystemSpec, w: Sequence) -> bool:
    check_dim(spec.family, w)
    kind = spec.family.kind
    if kind is Kind.SO_EVEN:
        return all(w[i] >= w[i + 1] for i in range(len(w) - 2)) and w[-2] >= abs(w[-1])
    if kind is Kind.SO_ODD:
        return all(w[i] >= w[i + 1] for i in range(len(w) - 1)) and w[-1] >= 0
    if kind is Kind.E6:
        return _chain(w, strict=False) and w[0] - sum(w[1:5]) - 3 * w[5] >= 0
    return _chain(w, strict=False) and w[4] <= w[5] and e7_g(w) >= 0


def _uniform_mod_one(xs: Sequence) -> bool:
    """All in Z or all in 1/2 + Z."""
    doubled = [2 * Q(x) for x in xs]
    if any(d.denominator != 1 for d in doubled):
        return False
    return len({d.numerator % 2 for d in doubled}) <= 1


def is_k_integral(spec: RootSystemSpec, w: Sequence) -> bool:
    check_dim(spec.family, w)
    kind = spec.family.kind
    if spec.family.is_so:
        return _uniform_mod_one(w[1:])
    if kind is Kind.E6:
        return _uniform_mod_one(w[:5])
    return _uniform_mod_one(w[:5]) and e7_g(w).denominator == 1
