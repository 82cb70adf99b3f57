"""Reflections, compact descent and k-dominant-regular conjugates of a g-dominant weight.

Orbits are explored breadth-first over the simple reflections of g.  The
exact weights are scaled to integer rows so that a whole BFS level can be
reflected with one numpy product; nothing is ever rounded, and any row that
would leave the integer lattice triggers a retry at a finer scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from .root_system import (
    Kind,
    RootSystemSpec,
    Weight,
    as_weight,
    check_dim,
    inner,
    is_g_dominant,
)

NOT_G_DOMINANT = "The entered parameter is not g-dominant"


class NotARootError(ValueError):
    pass


class NotGDominantError(ValueError):
    def __init__(self, message: str = NOT_G_DOMINANT):
        super().__init__(message)


@dataclass(frozen=True)
class OrbitEnumeration:
    source: Weight
    conjugates: Tuple[Weight, ...]
    orbit_size: int


def reflect(spec: RootSystemSpec, alpha: Sequence, w: Sequence) -> Weight:
    """s_alpha(w) = w - (2<w, alpha>/<alpha, alpha>) alpha."""
    alpha, w = as_weight(alpha), as_weight(w)
    check_dim(spec.family, w)
    if not spec.is_root(alpha):
        raise NotARootError(f"{tuple(map(str, alpha))} is not a root of {spec.family}")
    c = 2 * inner(spec, w, alpha) / inner(spec, alpha, alpha)
    return tuple(x - c * a for x, a in zip(w, alpha))


def k_dominant_representative(spec: RootSystemSpec, w: Sequence) -> Weight:
    """Descend to the closed k-dominant chamber through simple compact reflections."""
    w = as_weight(w)
    check_dim(spec.family, w)
    simple = spec.simple_roots_k
    while True:
        for a in simple:
            if inner(spec, w, a) < 0:
                w = reflect(spec, a, w)
                break
        else:
            return w


def _k_dom_reg_rows(kind: Kind, x: np.ndarray) -> np.ndarray:
    """Vectorized strict k-dominance; homogeneous, so any positive scale works."""
    if kind is Kind.SO_EVEN:
        tail = x[:, 1:]
        ok = np.ones(len(x), dtype=bool)
        for i in range(tail.shape[1] - 2):
            ok &= tail[:, i] > tail[:, i + 1]
        return ok & (tail[:, -2] > np.abs(tail[:, -1]))
    if kind is Kind.SO_ODD:
        tail = x[:, 1:]
        ok = tail[:, -1] > 0
        for i in range(tail.shape[1] - 1):
            ok &= tail[:, i] > tail[:, i + 1]
        return ok
    ok = (np.abs(x[:, 0]) < x[:, 1]) & (x[:, 1] < x[:, 2]) & (x[:, 2] < x[:, 3]) & (x[:, 3] < x[:, 4])
    if kind is Kind.E7:
        # twice g(w); the sign is all that matters
        ok &= x[:, 0] - x[:, 1:6].sum(axis=1) - 2 * x[:, 6] > 0
    return ok


class _ScaleTooCoarse(Exception):
    pass


def _lcm_den(ws) -> int:
    d = 1
    for w in ws:
        for c in w:
            d = math.lcm(d, Q(c).denominator)
    return d


def _packer(bound: int, dim: int):
    bits = (2 * bound + 1).bit_length()
    if bits * dim <= 62:
        weights = np.array([1 << (bits * i) for i in range(dim)], dtype=np.int64)
        return lambda a: (a + bound) @ weights
    # wide rows: compare whole rows as opaque byte strings
    def void_key(a: np.ndarray) -> np.ndarray:
        a = np.ascontiguousarray(a)
        return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()

    return void_key


def _bfs(spec: RootSystemSpec, dom: Weight, scale: int):
    roots = np.array([[int(2 * c) for c in a] for a in spec.simple_roots_g], dtype=np.int64)
    norms = np.einsum("ij,ij->i", roots, roots)
    start = np.array([[int(c * scale) for c in dom]], dtype=np.int64)
    bound = math.isqrt(int(start[0] @ start[0])) + 1
    key = _packer(bound, spec.dim)
    kind = spec.family.kind

    prev_k = key(start[:0])
    cur, cur_k = start, key(start)
    total = 1
    hits = [cur[_k_dom_reg_rows(kind, cur)]]
    while len(cur):
        batches = []
        for r, nr in zip(roots, norms):
            num = 2 * (cur @ r)
            if np.any(num % nr):
                raise _ScaleTooCoarse
            batches.append(cur - (num // nr)[:, None] * r)
        nxt = np.concatenate(batches)
        k, idx = np.unique(key(nxt), return_index=True)
        fresh = ~np.isin(k, np.concatenate([prev_k, cur_k]), assume_unique=True)
        prev_k, cur_k, cur = cur_k, k[fresh], nxt[idx[fresh]]
        total += len(cur)
        hits.append(cur[_k_dom_reg_rows(kind, cur)])
    return np.concatenate(hits), total


@lru_cache(maxsize=256)
def _conjugates(spec: RootSystemSpec, dom: Weight) -> OrbitEnumeration:
    d = _lcm_den([dom] + list(spec.simple_roots_g))
    for scale in (d, 2 * d, 4 * d, 8 * d):
        try:
            rows, total = _bfs(spec, dom, scale)
            break
        except _ScaleTooCoarse:
            continue
    else:  # pragma: no cover - the orbit of a weight never needs more
        raise ArithmeticError("could not find an integral scale for the orbit")
    found = sorted({tuple(Q(int(c), scale) for c in row) for row in rows})
    return OrbitEnumeration(source=dom, conjugates=tuple(found), orbit_size=total)


def k_dominant_conjugates(spec: RootSystemSpec, dom: Sequence) -> OrbitEnumeration:
    """All k-dominant-regular points of the W_g-orbit of a g-dominant weight.

    The conjugates come back sorted lexicographically and deduplicated;
    ``orbit_size`` counts every orbit point the search touched.
    """
    dom = as_weight(dom)
    check_dim(spec.family, dom)
    if not is_g_dominant(spec, dom):
        raise NotGDominantError()
    return _conjugates(spec, dom)
