"""Integral closure of monomial ideals via exact Newton-polyhedron tests.

A monomial x^v lies in the integral closure of I exactly when v is
componentwise above a convex combination of the exponent vectors of I.
Membership is decided by exact rational linear feasibility; each negative
answer yields a separating dual certificate that is cached and reused, so
the polyhedron is probed by a simplex call only once per facet-ish
direction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .ideals import MonomialIdeal, _degree_array, _minimal_rows, _to_tuples, mono_deg
from .lp import max_convex_cover


class NewtonMembership:
    """Membership oracle for conv(gens(I)) + the non-negative orthant."""

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_zero():
            raise ValueError("the zero ideal has no Newton polyhedron")
        self.ideal = ideal
        self.columns = [tuple(g) for g in ideal.gens]
        # integer separators (w, c): w.v < c implies v is outside
        self._seps: list[tuple[np.ndarray, int]] = []

    def separate_batch(self, rows: np.ndarray) -> np.ndarray:
        """Boolean mask of rows already known to be outside."""
        out = np.zeros(len(rows), dtype=bool)
        for w, c in self._seps:
            out |= rows @ w < c
        return out

    def contains(self, v: tuple[int, ...]) -> bool:
        if self.ideal.is_unit():
            return True
        if self.ideal.contains_monomial(v):
            return True
        if mono_deg(v) < self.ideal.order:
            return False
        arr = np.array(v, dtype=np.int64)
        for w, c in self._seps:
            if arr @ w < c:
                return False
        opt, dual = max_convex_cover(self.columns, tuple(v))
        if opt >= 1:
            return True
        den = 1
        for y in dual:
            den = den * y.denominator // gcd(den, y.denominator)
        w = np.array([int(y * den) for y in dual], dtype=np.int64)
        if den < (1 << 40) and int(np.abs(w).max(initial=0)) < (1 << 40):
            self._seps.append((w, den))
        return False


@lru_cache(maxsize=None)
def newton_closure(I: MonomialIdeal) -> MonomialIdeal:
    """The integral closure of a nonzero monomial ideal.

    Candidates are enumerated up to degree D + n - 1 where D is the largest
    generator degree: a lattice point of the Newton polyhedron with total
    slack n or more over its witness combination can be decremented in some
    coordinate, so every minimal lattice generator lies below that bound.
    The bound is re-asserted one degree higher at runtime.
    """
    if I.is_zero() or I.is_unit():
        return I
    n = I.n
    member = NewtonMembership(I)
    lo, hi = I.order, I.max_degree + n - 1
    gen_set = set(I.gens)
    found: list[tuple[int, ...]] = []
    for degree in range(lo, hi + 2):
        cands = _degree_array(n, degree)
        if found:
            base = np.array(found, dtype=np.int64)
            dominated = (base[None, :, :] <= cands[:, None, :]).all(axis=2).any(axis=1)
            cands = cands[~dominated]
        if len(cands):
            cands = cands[~member.separate_batch(cands)]
        for row in cands:
            v = tuple(int(e) for e in row)
            if v in gen_set or member.contains(v):
                if degree > hi:
                    raise RuntimeError(
                        "integral closure generated above the degree bound"
                    )
                found.append(v)
    result = MonomialIdeal(n, _to_tuples(_minimal_rows(np.array(found, dtype=np.int64))))
    if not result.contains_ideal(I):
        raise RuntimeError("integral closure lost the ideal it started from")
    return result


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return newton_closure(I) == I


def closure_by_powers(I: MonomialIdeal, k_max: int | None = None) -> MonomialIdeal:
    """Integral closure by the power test: v is integral over I when
    x^(k*v) lies in I^k for some k.

    Exponential in everything; retained as a cross-check oracle for small
    inputs.  The default bound k <= n * max generator degree covers the
    denominators of vertex witnesses at this scale.
    """
    if I.is_zero() or I.is_unit():
        return newton_closure(I)
    n = I.n
    if k_max is None:
        k_max = n * I.max_degree
    powers = [None, I]
    for k in range(2, k_max + 1):
        powers.append(powers[-1] * I)

    def integral(v: tuple[int, ...]) -> bool:
        return any(
            powers[k].contains_monomial(tuple(k * e for e in v))
            for k in range(1, k_max + 1)
        )

    found: list[tuple[int, ...]] = []
    for degree in range(I.order, I.max_degree + n):
        for v in _degree_array(n, degree):
            vt = tuple(int(e) for e in v)
            if any(all(f[i] <= vt[i] for i in range(n)) for f in found):
                continue
            if integral(vt):
                found.append(vt)
    return MonomialIdeal.of(n, found)
