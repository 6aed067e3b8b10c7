"""Exact combinatorics of monomial ideals of K[x_1,...,x_n].

A monomial is an exponent tuple of length n.  A MonomialIdeal stores the
unique divisibility-minimal generating set, sorted by degree and then
lexicographically, so structural equality coincides with ideal equality.
The zero ideal has no generators; the unit ideal is generated by 1, the
all-zero tuple.  Exponent vectors are validated to stay far below 2**63 so
the vectorised int64 kernels are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

Monomial = tuple[int, ...]

EXPONENT_LIMIT = 1 << 31


class AmbientMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


def mono_deg(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _check_monomial(n: int, m) -> Monomial:
    t = tuple(int(e) for e in m)
    if len(t) != n:
        raise AmbientMismatch(f"monomial {m!r} does not have {n} exponents")
    if any(e < 0 for e in t):
        raise ValueError(f"negative exponent in monomial {m!r}")
    if any(e >= EXPONENT_LIMIT for e in t):
        raise OverflowError(f"exponent out of range in monomial {m!r}")
    return t


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree d in n variables, lex sorted."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if n == 1:
        return ((d,),)
    out = []
    for e in range(d + 1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _degree_array(n: int, d: int) -> np.ndarray:
    arr = np.array(monomials_of_degree(n, d), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _rows(n: int, gens) -> np.ndarray:
    lst = list(gens)
    if not lst:
        return np.empty((0, n), dtype=np.int64)
    return np.array(lst, dtype=np.int64)


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows, sorted by (degree, lex)."""
    if len(rows) == 0:
        return rows
    rows = np.unique(rows, axis=0)
    deg = rows.sum(axis=1)
    rows = rows[np.argsort(deg, kind="stable")]
    deg = rows.sum(axis=1)
    kept: list[np.ndarray] = []
    i = 0
    while i < len(rows):
        j = i
        while j < len(rows) and deg[j] == deg[i]:
            j += 1
        grp = rows[i:j]
        if kept:
            base = kept[0] if len(kept) == 1 else np.concatenate(kept)
            dominated = (base[None, :, :] <= grp[:, None, :]).all(axis=2).any(axis=1)
            grp = grp[~dominated]
        if len(grp):
            kept.append(grp)
        i = j
    return np.concatenate(kept) if kept else rows[:0]


def _to_tuples(rows: np.ndarray) -> tuple[Monomial, ...]:
    return tuple(tuple(int(e) for e in row) for row in rows)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (canonical order)."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient ring needs at least one variable")

    @classmethod
    def of(cls, n: int, gens) -> "MonomialIdeal":
        """Build an ideal from any generating set; minimalizes and sorts."""
        checked = [_check_monomial(n, m) for m in gens]
        return cls(n, _to_tuples(_minimal_rows(_rows(n, checked))))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        """The irrelevant ideal M = (x_1, ..., x_n)."""
        return cls.max_power(n, 1)

    @classmethod
    def max_power(cls, n: int, d: int) -> "MonomialIdeal":
        """M^d, minimally generated by all monomials of degree d."""
        if d < 0:
            raise ValueError("negative power")
        return cls(n, monomials_of_degree(n, d))

    # -- basic shape ---------------------------------------------------

    def array(self) -> np.ndarray:
        return _rows(self.n, self.gens)

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    @property
    def order(self) -> int | None:
        """Least degree of a generator; None for the zero ideal."""
        if not self.gens:
            return None
        return mono_deg(self.gens[0])

    @property
    def max_degree(self) -> int | None:
        if not self.gens:
            return None
        return mono_deg(self.gens[-1])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and mono_deg(self.gens[0]) == 0

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains_monomial(self, m) -> bool:
        v = _check_monomial(self.n, m)
        return any(mono_divides(g, v) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._match(other)
        return all(self.contains_monomial(g) for g in other.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return other.contains_ideal(self)

    def _match(self, other: "MonomialIdeal"):
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected a MonomialIdeal, got {other!r}")
        if self.n != other.n:
            raise AmbientMismatch(f"ambient sizes differ: {self.n} vs {other.n}")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._match(other)
        rows = np.concatenate([self.array(), other.array()])
        return MonomialIdeal(self.n, _to_tuples(_minimal_rows(rows)))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._match(other)
        a, b = self.array(), other.array()
        if len(a) == 0 or len(b) == 0:
            return MonomialIdeal.zero(self.n)
        prod = (a[:, None, :] + b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal(self.n, _to_tuples(_minimal_rows(prod)))

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection: generated by pairwise lcms."""
        self._match(other)
        a, b = self.array(), other.array()
        if len(a) == 0 or len(b) == 0:
            return MonomialIdeal.zero(self.n)
        lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal(self.n, _to_tuples(_minimal_rows(lcms)))

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative ideal power")
        result = MonomialIdeal.unit(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- components and saturation --------------------------------------

    def component(self, j: int) -> "MonomialIdeal":
        """The ideal generated by all degree-j monomials of the ideal."""
        if j < 0:
            raise ValueError("negative degree")
        if self.is_zero():
            return self
        cands = _degree_array(self.n, j)
        g = self.array()
        keep = (g[None, :, :] <= cands[:, None, :]).all(axis=2).any(axis=1)
        return MonomialIdeal(self.n, _to_tuples(cands[keep]))

    def saturate_var(self, i: int) -> "MonomialIdeal":
        """The colon ideal I : x_i^infinity (x_i-exponents zeroed out)."""
        if not 0 <= i < self.n:
            raise ValueError(f"variable index {i} out of range")
        rows = self.array().copy()
        if len(rows):
            rows[:, i] = 0
        return MonomialIdeal(self.n, _to_tuples(_minimal_rows(rows)))

    def saturate(self) -> "MonomialIdeal":
        """I : M^infinity, the intersection of all I : x_i^infinity."""
        out = self.saturate_var(0)
        for i in range(1, self.n):
            out = out & self.saturate_var(i)
        return out

    # -- counting --------------------------------------------------------

    def colength(self) -> int | None:
        """Number of monomials outside the ideal; None when infinite."""
        if self.is_zero():
            return None
        if self.is_unit():
            return 0
        for i in range(self.n):
            if not any(_is_pure_power(g, i) for g in self.gens):
                return None
        return _outside_total(self.gens, self.n)

    def hilbert_function(self, t: int) -> int:
        """Number of degree-t monomials not in the ideal."""
        if t < 0:
            raise ValueError("negative degree")
        return _outside_at_degree(self.gens, self.n, t)

    def basic_stats(self) -> tuple[int | None, int, int | None]:
        """(order, number of minimal generators, colength-or-None)."""
        return (self.order, self.mu, self.colength())

    # -- primes ----------------------------------------------------------

    def minimal_primes(self) -> tuple[frozenset[int], ...]:
        """Minimal primes, as minimal transversals of generator supports."""
        if self.is_zero() or self.is_unit():
            raise ValueError("minimal primes need a nonzero proper ideal")
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in self.gens]
        found: set[frozenset[int]] = set()

        def extend(chosen: frozenset, rest: list[frozenset]):
            rest = [s for s in rest if not (s & chosen)]
            if not rest:
                found.add(chosen)
                return
            for v in sorted(rest[0]):
                extend(chosen | {v}, rest[1:])

        extend(frozenset(), supports)
        minimal = [s for s in found if not any(t < s for t in found)]
        return tuple(sorted(minimal, key=lambda s: (len(s), sorted(s))))

    def dimension(self) -> int:
        """Krull dimension of the quotient ring."""
        return self.n - min(len(s) for s in self.minimal_primes())


@dataclass(frozen=True, order=True)
class CoordinatePrime:
    """The monomial prime generated by all variables except one."""

    omitted: int

    def ideal(self, n: int) -> MonomialIdeal:
        return self.power(n, 1)

    def power(self, n: int, a: int) -> MonomialIdeal:
        if not 0 <= self.omitted < n:
            raise ValueError(f"omitted index {self.omitted} out of range")
        if a < 0:
            raise ValueError("negative power")
        if a == 0:
            return MonomialIdeal.unit(n)
        gens = []
        for m in monomials_of_degree(n - 1, a):
            gens.append(m[: self.omitted] + (0,) + m[self.omitted :])
        return MonomialIdeal(n, tuple(sorted(gens)))


def _is_pure_power(g: Monomial, i: int) -> bool:
    return all(e == 0 for j, e in enumerate(g) if j != i)


# -- staircase counting (recursive slicing on the first variable) ---------


@lru_cache(maxsize=None)
def _project_slice(gens: tuple[Monomial, ...], bound: int) -> tuple[Monomial, ...]:
    """Generators with first exponent <= bound, first coordinate dropped."""
    keep = [g[1:] for g in gens if g[0] <= bound]
    n = len(gens[0]) - 1 if gens else 0
    return _to_tuples(_minimal_rows(_rows(n, keep)))


@lru_cache(maxsize=None)
def _outside_total(gens: tuple[Monomial, ...], n: int) -> int:
    """Monomials outside the ideal; caller guarantees finiteness."""
    if any(mono_deg(g) == 0 for g in gens):
        return 0
    if n == 1:
        return min(g[0] for g in gens)
    bound = min(g[0] for g in gens if _is_pure_power(g, 0))
    cuts = sorted({g[0] for g in gens if g[0] < bound} | {0})
    total = 0
    for idx, lo in enumerate(cuts):
        hi = cuts[idx + 1] if idx + 1 < len(cuts) else bound
        total += (hi - lo) * _outside_total(_project_slice(gens, lo), n - 1)
    return total


@lru_cache(maxsize=None)
def _outside_at_degree(gens: tuple[Monomial, ...], n: int, t: int) -> int:
    if any(mono_deg(g) == 0 for g in gens):
        return 0
    if not gens:
        return comb(t + n - 1, n - 1)
    if n == 1:
        return 1 if t < min(g[0] for g in gens) else 0
    cuts = sorted({g[0] for g in gens} | {0})
    total = 0
    for idx, lo in enumerate(cuts):
        hi = cuts[idx + 1] if idx + 1 < len(cuts) else t + 1
        if lo > t:
            break
        sl = _project_slice(gens, lo)
        for e in range(lo, min(hi, t + 1)):
            total += _outside_at_degree(sl, n - 1, t - e)
    return total


def hilbert_function_incl_excl(I: MonomialIdeal, t: int) -> int:
    """Inclusion-exclusion count of degree-t monomials outside I.

    Exponential in the number of generators; kept as a cross-check oracle
    for the sliced count used by MonomialIdeal.hilbert_function.
    """
    if t < 0:
        raise ValueError("negative degree")
    n, gens = I.n, I.gens
    total = comb(t + n - 1, n - 1)
    inside = 0
    m = len(gens)
    if m > 20:
        raise ValueError("inclusion-exclusion oracle is limited to 20 generators")
    for mask in range(1, 1 << m):
        lcm = (0,) * n
        bits = 0
        mm = mask
        while mm:
            lcm = mono_lcm(lcm, gens[(mm & -mm).bit_length() - 1])
            bits += 1
            mm &= mm - 1
        r = t - mono_deg(lcm)
        if r >= 0:
            inside += (-1) ** (bits + 1) * comb(r + n - 1, n - 1)
    return total - inside


# -- localization and regularity ------------------------------------------


def localize_power(Q: MonomialIdeal, prime: CoordinatePrime) -> int | None:
    """Power a with Q R_P ∩ R = P^a, or None when not a prime power.

    The localization of a monomial ideal at a coordinate prime P is obtained
    by zeroing the exponent of the omitted variable; the result is read in
    the n-1 remaining variables and compared against powers of their
    maximal ideal.
    """
    if Q.n < 2:
        raise ValueError("localization needs at least two variables")
    if Q.is_zero() or Q.is_unit():
        raise ValueError("localization needs a nonzero proper ideal")
    w = prime.omitted
    if not 0 <= w < Q.n:
        raise ValueError(f"omitted index {w} out of range")
    rows = [g[:w] + g[w + 1 :] for g in Q.gens]
    proj = MonomialIdeal.of(Q.n - 1, rows)
    if proj.is_unit():
        return 0
    a = proj.order
    if proj.gens == monomials_of_degree(Q.n - 1, a):
        return a
    return None


def reg_dim1_saturated(Q: MonomialIdeal) -> tuple[int, int]:
    """(regularity of Q, multiplicity of R/Q) for saturated Q of dimension 1.

    The Hilbert function of R/Q is non-decreasing and eventually constant;
    the regularity of Q is the first degree where it has stabilised and the
    stable value is the multiplicity.
    """
    if Q.saturate() != Q:
        raise ValueError("ideal is not saturated")
    if Q.dimension() != 1:
        raise ValueError("quotient does not have dimension 1")
    prev = 0
    t = 0
    while t < 10_000:
        cur = Q.hilbert_function(t)
        if cur == prev:
            return t, cur
        prev = cur
        t += 1
    raise RuntimeError("Hilbert function failed to stabilise")
