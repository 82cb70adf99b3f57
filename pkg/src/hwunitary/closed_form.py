"""Closed-form unitary conjugates for the orthogonal families.

Given a g-dominant Lam_dom, this module writes down its k-dominant-regular
conjugates by hand (a choice of first coordinate, the rest sorted) and picks
the unitary ones straight from the conjugate theorems.  It never touches the
orbit search, so it can serve as an oracle for ``inf_char_report``.

Two shapes of Lam_dom are covered:

* case 1: n-1 coordinates form a regular integral chain and the remaining
  coordinate x is either of the other parity class or repeats the chain;
* case 2: all coordinates share a parity class and are strictly regular.

Anything else raises :class:`NotCoveredError`.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, List, Sequence, Tuple

from .classify import InfCharReport
from .root_system import HALF, Kind, RootSystemSpec, Weight, as_weight, check_dim, is_g_dominant
from .weyl import NotGDominantError


class NotCoveredError(ValueError):
    """Lam_dom is in neither of the two shapes the theorems describe."""


def _uniform(xs: Iterable[Q]) -> bool:
    classes = {(2 * x).numerator % 2 if (2 * x).denominator == 1 else None for x in xs}
    return None not in classes and len(classes) <= 1


def _regular_chain(c: Sequence[Q], even: bool) -> bool:
    if any(c[i] <= c[i + 1] for i in range(len(c) - 2)):
        return False
    if even:
        return len(c) < 2 or c[-2] > abs(c[-1])
    return all(c[i] > c[i + 1] for i in range(len(c) - 1)) and c[-1] > 0


def _k_regular(v: Weight, even: bool) -> bool:
    return _regular_chain(v[1:], even)


def _run_p(v: Sequence[Q]) -> int:
    """p for a parameter: lam_2 = ... = lam_p becomes a step-one descent from v[1]."""
    flat = list(v[:-1]) + [abs(v[-1])]
    p = 2
    while p < len(flat) and flat[p] == flat[p - 1] - 1:
        p += 1
    return p


def _without(seq: Sequence[Q], value: Q) -> List[Q]:
    out = list(seq)
    out.remove(value)
    return out


def _w(first, rest) -> Weight:
    return as_weight([first, *rest])


def all_conjugates(spec: RootSystemSpec, dom: Weight) -> set:
    """k-dominant-regular W_g-conjugates, built from signed choices of the first slot."""
    even = spec.family.kind is Kind.SO_EVEN
    n = len(dom)
    has_zero = any(c == 0 for c in dom)
    base_neg = sum(c < 0 for c in dom) % 2
    out = set()
    for j in range(n):
        rest = sorted((abs(c) for k, c in enumerate(dom) if k != j), reverse=True)
        for sign in (1, -1):
            first = sign * abs(dom[j])
            tails = [rest]
            if even and rest and rest[-1] != 0:
                tails.append(rest[:-1] + [-rest[-1]])
            for tail in tails:
                v = _w(first, tail)
                if even and not has_zero and sum(c < 0 for c in v) % 2 != base_neg:
                    continue
                if _k_regular(v, even):
                    out.add(v)
    return out


# --- case detection ---------------------------------------------------------


def _case1_splits(dom: Weight, even: bool) -> List[Tuple[Q, List[Q]]]:
    splits = []
    for j, x in enumerate(dom):
        chain = list(dom[:j]) + list(dom[j + 1:])
        if not (_uniform(chain) and _regular_chain(chain, even)):
            continue
        other_class = not _uniform(chain + [x])
        if even:
            repeats = x in chain[:-1] or abs(x) == abs(chain[-1])
        else:
            repeats = x in chain or x == 0
        if other_class or repeats:
            splits.append((x, chain))
    return splits


def _is_case2(dom: Weight, even: bool) -> bool:
    return _uniform(dom) and _regular_chain(dom, even)


# --- so(2, 2n-2) ------------------------------------------------------------


def _even_case1(n: int, x: Q, c: List[Q]) -> set:
    lam = _w(x, c)
    tilde = _w(-x, c[:-1] + [-c[-1]])
    scalar = [Q(k) for k in range(n - 2, -1, -1)]
    spinor = [Q(2 * k + 1, 2) for k in range(n - 2, -1, -1)]
    unitary = set()
    if c == scalar:
        if 0 <= x <= 1:
            unitary.add(lam)
        if x >= 0:
            unitary.add(tilde)
    elif c == spinor:
        if -HALF <= x <= HALF:
            unitary.add(lam)
        if x >= -HALF:
            unitary.add(tilde)
    elif c == spinor[:-1] + [-HALF]:
        if x == HALF:
            unitary.add(lam)
        if x >= HALF:
            unitary.add(tilde)
    elif x > 0:
        if -x + c[0] <= _run_p(tilde) - 1:
            unitary.add(tilde)
    elif x < 0:
        if x + c[0] <= _run_p(lam) - 1:
            unitary.add(lam)
    return unitary


def _even_case2(n: int, d: Weight) -> set:
    d1, tail = d[0], list(d[1:])
    scalar = [Q(k) for k in range(n - 2, -1, -1)]
    spinor = [Q(2 * k + 1, 2) for k in range(n - 2, -1, -1)]
    if tail == scalar:
        if d1 == n - 1:
            full = [Q(k) for k in range(n - 1, -1, -1)]
            return {d} | {_w(-n + i, _without(full, Q(n - i))) for i in range(1, n + 1)}
        return {_w(-d1, scalar)}
    flipped = spinor[:-1] + [-HALF]
    if tail in (spinor, flipped):
        other = flipped if tail == spinor else spinor
        if d1 >= n + HALF:
            return {_w(-d1, other)}
        top = [Q(2 * k + 1, 2) for k in range(n - 1, 0, -1)]
        last = other[-1]
        out = {_w(-n + HALF, other)}
        out |= {_w(-(n - i + HALF), _without(top, n - i + HALF) + [last]) for i in range(2, n)}
        if tail == flipped:
            out.add(_w(-HALF, top))
        return out
    a = d1
    consecutive = all(d[k] == a - k for k in range(n - 1))
    if consecutive and abs(d[-1]) == a - n + 1:
        body = [a - k for k in range(n - 1)]
        out = {_w(-a + i, _without(body, a - i) + [-d[-1]]) for i in range(n - 1)}
        if d[-1] < 0:
            out.add(_w(d[-1], body))
        return out
    q = 1
    while q < n and d[q] == a - q:
        q += 1
    run = [a - k for k in range(q)]
    rest = list(d[q:])
    rest[-1] = -rest[-1]
    return {_w(-a + i, _without(run, a - i) + rest) for i in range(q)}


# --- so(2, 2n-1) ------------------------------------------------------------


def _odd_case1(n: int, x: Q, c: List[Q]) -> set:
    lam, tilde = _w(x, c), _w(-x, c)
    scalar = [Q(2 * k + 1, 2) for k in range(n - 2, -1, -1)]
    spinor = [Q(k) for k in range(n - 1, 0, -1)]
    unitary = set()
    if c == scalar:
        if x <= 1:
            unitary.add(lam)
        unitary.add(tilde)
    elif c == spinor:
        if x <= HALF:
            unitary.add(lam)
        unitary.add(tilde)
    elif x > HALF and -x + c[0] <= _run_p(tilde) - 1:
        unitary.add(tilde)
    return unitary


def _odd_case2(n: int, d: Weight) -> set:
    d1, tail = d[0], list(d[1:])
    scalar = [Q(2 * k + 1, 2) for k in range(n - 2, -1, -1)]
    spinor = [Q(k) for k in range(n - 1, 0, -1)]
    if tail == scalar:
        if d1 == n - HALF:
            full = [Q(2 * k + 1, 2) for k in range(n - 1, -1, -1)]
            return {d} | {_w(-n + i - HALF, _without(full, n - i + HALF)) for i in range(1, n + 1)}
        return {_w(-d1, scalar)}
    if tail == spinor:
        if d1 >= n + 1:
            return {_w(-d1, spinor)}
        full = [Q(k) for k in range(n, 0, -1)]
        return {_w(-n + i, _without(full, Q(n - i))) for i in range(n)}
    a = d1
    q = 1
    while q < n and d[q] == a - q:
        q += 1
    run = [a - k for k in range(q)]
    # the last coordinate keeps its sign here; there is no sign constraint in type B
    return {_w(-a + i, _without(run, a - i) + list(d[q:])) for i in range(q)}


def _flip(v: Weight) -> Weight:
    return v[:-1] + (-v[-1],)


def _theorem_unitary(n: int, even: bool, dom: Weight) -> set:
    if _is_case2(dom, even):
        return _even_case2(n, dom) if even else _odd_case2(n, dom)
    splits = _case1_splits(dom, even)
    if not splits:
        raise NotCoveredError(f"{tuple(map(str, dom))} is in neither conjugate case")
    unitary = set()
    for x, chain in splits:
        unitary |= _even_case1(n, x, chain) if even else _odd_case1(n, x, chain)
    return unitary


def closed_form_conjugates_so(spec: RootSystemSpec, dominant: Sequence) -> InfCharReport:
    if not spec.family.is_so:
        raise ValueError(f"closed forms exist only for the orthogonal families, not {spec.family}")
    dom = as_weight(dominant)
    check_dim(spec.family, dom)
    if not is_g_dominant(spec, dom):
        raise NotGDominantError()
    n, even = spec.family.n, spec.family.kind is Kind.SO_EVEN
    unitary = _theorem_unitary(n, even, dom)
    if even and dom[-1] != 0:
        # Negating the last coordinate is an automorphism of the whole setup,
        # so the answer for dom mirrors the one for its flip.  The theorems
        # read p off the signed last coordinate and lose one mirrored
        # conjugate of the consecutive Lam_dom; taking the union restores it.
        unitary |= {_flip(v) for v in _theorem_unitary(n, even, _flip(dom))}
    elif even:
        unitary |= {_flip(v) for v in unitary}
    conjugates = all_conjugates(spec, dom)
    stray = unitary - conjugates
    if stray:
        raise AssertionError(f"closed form produced non-conjugates {sorted(stray)}")
    return InfCharReport(dom, tuple(sorted(unitary)), tuple(sorted(conjugates - unitary)))
