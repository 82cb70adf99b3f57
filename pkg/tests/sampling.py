"""Random k-dominant integral highest weights, bounded by +-12, for property sweeps."""

from __future__ import annotations

import random
from fractions import Fraction as Q

from hwunitary.root_system import E6, E7, Family, Kind, build, e7_g

BOUND = 12


def _chain(rng: random.Random, length: int, half: bool, top: int = BOUND):
    """Non-increasing non-negative values of one parity class, at most ``top``."""
    shift = Q(1, 2) if half else Q(0)
    vals = sorted((Q(rng.randint(0, top - 1 if half else top)) + shift for _ in range(length)), reverse=True)
    if rng.random() < 0.4:
        # long flat runs keep the special cases populated
        k = rng.randint(1, length)
        vals = [vals[-1]] * k + vals[k:] if rng.random() < 0.5 else vals[:length - k] + [vals[length - k]] * k
        vals = sorted(vals, reverse=True)
    return vals


def _special_tail(rng, kind, n):
    if rng.random() < 0.5:
        return [Q(0)] * (n - 1)
    tail = [Q(1, 2)] * (n - 1)
    if kind is Kind.SO_EVEN and rng.random() < 0.5:
        tail[-1] = -tail[-1]
    return tail


def _first(rng, near=None):
    if near is not None and rng.random() < 0.5:
        return near + Q(rng.randint(-4, 4), 2)
    return Q(rng.randint(-2 * BOUND, 2 * BOUND), 2)


def sample_so(rng: random.Random, family: Family):
    n = family.n
    if rng.random() < 0.2:
        tail = _special_tail(rng, family.kind, n)
    else:
        tail = _chain(rng, n - 1, rng.random() < 0.5)
        if family.kind is Kind.SO_EVEN and tail[-1] != 0 and rng.random() < 0.5:
            tail[-1] = -tail[-1]
    return (_first(rng, Q(-2 * n - tail[0])),) + tuple(tail)


def _e_first_five(rng):
    """|x1| <= x2 <= ... <= x5, uniform parity, biased toward repeated values."""
    half = rng.random() < 0.4
    top = rng.choice([0, 1, 2, 4, BOUND])
    chain = sorted(_chain(rng, 5, half, max(top, 1)))
    if not half and rng.random() < 0.3:
        chain = [Q(0)] * rng.randint(1, 5) + chain
        chain = sorted(chain[:5])
    if rng.random() < 0.5:
        chain[0] = -chain[0]
    return chain


def sample_e6(rng: random.Random):
    x = _e_first_five(rng)
    f_target = Q(rng.randint(-4, 48))
    l6 = (f_target + sum(x)) / 3
    l6 = Q(round(l6 * 2), 2) if rng.random() < 0.5 else l6
    return tuple(x) + (l6, l6, -l6)


def sample_e7(rng: random.Random):
    x = _e_first_five(rng)
    l7 = Q(rng.randint(-2 * BOUND, 2 * BOUND), 2)
    g = rng.choice([0, 0, 0, 1, 2, rng.randint(0, 6)])
    # solve g = (x1 - x2 - ... - x5 - l6 - 2 l7) / 2 for l6
    l6 = x[0] - sum(x[1:]) - 2 * l7 - 2 * g
    w = tuple(x) + (l6, l7, -l7)
    assert e7_g(w) == g
    return w


def samples(family: Family, count: int, seed: int = 0):
    rng = random.Random(f"{family}-{seed}")
    spec = build(family)
    draw = {Kind.E6: sample_e6, Kind.E7: sample_e7}.get(family.kind)
    out = []
    while len(out) < count:
        lam = draw(rng) if draw else sample_so(rng, family)
        out.append(lam)
    return spec, out
