"""Lam_dom grids for comparing the closed-form conjugates with the orbit search."""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations

from hwunitary.root_system import Family, Kind


def g_dominant_form(family: Family, coords):
    """The g-dominant representative of a multiset of coordinates."""
    mags = sorted((abs(Q(c)) for c in coords), reverse=True)
    if family.kind is Kind.SO_EVEN:
        negs = sum(Q(c) < 0 for c in coords) % 2
        if negs and mags[-1] != 0:
            mags[-1] = -mags[-1]
    return tuple(mags)


def _chains(family: Family, top: int):
    n = family.n
    for shift in (Q(0), Q(1, 2)):
        values = [Q(k) + shift for k in range(top + 1) if Q(k) + shift <= top]
        for combo in combinations(values, n - 1):
            chain = sorted(combo, reverse=True)
            yield chain
            if family.kind is Kind.SO_EVEN and chain[-1] != 0:
                yield chain[:-1] + [-chain[-1]]


def case_grid(family: Family):
    """Integer and half-integer dominant tuples in [0, n+4] plus a half-step x sweep."""
    n = family.n
    top = n + 4
    seen = set()
    for shift in (Q(0), Q(1, 2)):
        values = [Q(k) + shift for k in range(top + 1) if Q(k) + shift <= top]
        for combo in combinations(values, n):
            for signs in ((1,), (1, -1)) if family.kind is Kind.SO_EVEN else ((1,),):
                for s in signs:
                    dom = tuple(sorted(combo, reverse=True))
                    dom = dom[:-1] + (s * dom[-1],)
                    if dom not in seen:
                        seen.add(dom)
                        yield dom
    for chain in _chains(family, top):
        for k in range(-2 * top, 2 * top + 1):
            dom = g_dominant_form(family, chain + [Q(k, 2)])
            if dom not in seen:
                seen.add(dom)
                yield dom
