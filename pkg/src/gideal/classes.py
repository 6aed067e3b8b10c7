"""Contractedness, the saturated-family correspondence, and the classes
C, D, G and G* of finite-colength monomial ideals.

C is the class of ideals reconstructed exactly from their family of
saturated component ideals; D adds integral closedness; G asks every family
member to be an intersection of powers of the minimal primes of the first
one, and G* is the integrally closed part of G.  Members of C factor,
uniquely up to a power of the maximal ideal, into ideals supported on one
coordinate prime each.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from math import comb

from .ideals import (
    CoordinatePrime,
    MonomialIdeal,
    localize_power,
    reg_dim1_saturated,
)
from .newton import is_integrally_closed, newton_closure
from .staircases import (
    SimpleFactorization,
    Staircase,
    closure_seq,
    factor_simple,
    jdt_seq,
    minplus_product,
)


@dataclass(frozen=True)
class Membership:
    """Boolean with the reason for a negative answer."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class FamilyError(ValueError):
    def __init__(self, j: int, message: str):
        super().__init__(message)
        self.j = j


@dataclass(frozen=True)
class QFamily:
    """Increasing family of saturated dimension-1 ideals, unit from s on."""

    n: int
    members: tuple[MonomialIdeal, ...]

    @property
    def s(self) -> int:
        return len(self.members)

    def q(self, j: int) -> MonomialIdeal:
        if j < 0:
            raise ValueError("negative family index")
        if j < self.s:
            return self.members[j]
        return MonomialIdeal.unit(self.n)

    @classmethod
    def of(cls, n: int, members) -> "QFamily":
        members = tuple(members)
        for j, m in enumerate(members):
            if m.is_unit() or m.is_zero():
                raise FamilyError(j, f"member {j} is not a proper nonzero ideal")
            if m.saturate() != m:
                raise FamilyError(j, f"member {j} is not saturated")
            if m.dimension() != 1:
                raise FamilyError(
                    j, f"member {j} has dimension {m.dimension()} (expected 1)"
                )
            if j and not members[j - 1] <= m:
                raise FamilyError(j, f"member {j} does not contain member {j - 1}")
        return cls(n, members)


def q_family(I: MonomialIdeal) -> QFamily:
    """Saturations of the component ideals of I from its order upward.

    Stops at the first unit saturation; for finite-colength input this
    always happens.  Fails when some member is not one-dimensional.
    """
    if I.colength() is None:
        raise ValueError("ideal does not have finite colength")
    d = I.order
    members = []
    j = 0
    while True:
        Q = I.component(d + j).saturate()
        if Q.is_unit():
            break
        if Q.dimension() != 1:
            raise FamilyError(
                j, f"member {j} has dimension {Q.dimension()} (expected 1)"
            )
        if members and not members[-1] <= Q:
            raise FamilyError(j, f"member {j} does not contain member {j - 1}")
        members.append(Q)
        j += 1
    return QFamily(I.n, tuple(members))


def ideal_of_family(fam: QFamily, k: int) -> MonomialIdeal:
    """The ideal whose degree-(d0+k+j) piece is that of the j-th member.

    d0 is the regularity of the first member (0 for the all-unit family,
    which yields M^k).
    """
    if k < 0:
        raise ValueError("negative offset")
    d0 = reg_dim1_saturated(fam.members[0])[0] if fam.s else 0
    out = MonomialIdeal.zero(fam.n)
    for j in range(fam.s + 1):
        out = out + fam.q(j).component(d0 + k + j)
    return out


# -- contracted ideals ------------------------------------------------------


def is_contracted(I: MonomialIdeal) -> bool:
    """Degreewise saturation test for contractedness.

    For each generator degree d_k the saturation T of the d_k-th component
    ideal must agree with I in all degrees up to the next generator degree;
    past the top degree the comparison T ∩ M^top = component(top) settles
    every remaining degree at once, because components gain no new
    generators there and saturation is unchanged.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("contractedness needs a nonzero proper ideal")
    degs = sorted({sum(g) for g in I.gens})
    for k, dk in enumerate(degs):
        comp = I.component(dk)
        T = comp.saturate()
        if k + 1 < len(degs):
            for j in range(dk, degs[k + 1]):
                if T.hilbert_function(j) != I.hilbert_function(j):
                    return False
        else:
            if (T & MonomialIdeal.max_power(I.n, dk)) != comp:
                return False
    return True


# -- class membership -------------------------------------------------------


def is_in_C(I: MonomialIdeal) -> Membership:
    """Roundtrip test: I belongs to C when its family reconstructs it."""
    if I.colength() is None:
        return Membership(False, "colength is infinite")
    try:
        fam = q_family(I)
    except FamilyError as err:
        return Membership(False, str(err))
    d = I.order
    d0 = reg_dim1_saturated(fam.members[0])[0] if fam.s else 0
    if d < d0:
        return Membership(
            False, f"order {d} is below the characteristic regularity {d0}"
        )
    if ideal_of_family(fam, d - d0) != I:
        return Membership(False, "family reconstruction differs from the ideal")
    return Membership(True)


def is_in_D(I: MonomialIdeal) -> Membership:
    mem = is_in_C(I)
    if not mem:
        return mem
    if not is_integrally_closed(I):
        return Membership(False, "not integrally closed")
    return Membership(True)


def mu_class_check(I: MonomialIdeal) -> bool:
    """Whether I has as many minimal generators as M^order."""
    if I.colength() is None:
        raise ValueError("ideal does not have finite colength")
    d = I.order
    return I.mu == comb(d + I.n - 1, I.n - 1)


def equiv(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality up to a factor M^r, for members of C."""
    for X in (I, J):
        mem = is_in_C(X)
        if not mem:
            raise ValueError(f"equivalence is defined on C only: {mem.reason}")
    if I.order == J.order:
        return I == J
    hi, lo = (I, J) if I.order > J.order else (J, I)
    r = hi.order - lo.order
    return hi == lo * MonomialIdeal.max_power(I.n, r)


# -- factorization in C -----------------------------------------------------


@dataclass(frozen=True)
class CFactorization:
    """Factors supported on one coordinate prime each, with the exact
    balance identity I * M^s == product(factors) * M^r."""

    factors: tuple[MonomialIdeal, ...]
    balance: tuple[int, int]


def factor_C(I: MonomialIdeal) -> CFactorization:
    """Split a member of C along the minimal primes of its first member.

    Each factor is the ideal of the family localized at one minimal prime;
    the balance exponents make the product identity exact, and the
    defining property of the localized families is re-verified.
    """
    mem = is_in_C(I)
    if not mem:
        raise ValueError(f"not in C: {mem.reason}")
    fam = q_family(I)
    d = I.order
    n = I.n
    if fam.s == 0:
        return CFactorization((), (0, d))
    covers = fam.members[0].minimal_primes()
    omegas = []
    for cover in covers:
        if len(cover) != n - 1:
            raise RuntimeError("family member has a minimal prime of bad height")
        (omega,) = set(range(n)) - cover
        omegas.append(omega)
    omegas.sort()
    local_fams = []
    factors = []
    for omega in omegas:
        members = []
        for m in fam.members:
            loc = m.saturate_var(omega)
            if loc.is_unit():
                break
            members.append(loc)
        loc_fam = QFamily.of(n, members)
        local_fams.append(loc_fam)
        factors.append(ideal_of_family(loc_fam, 0))
    total = sum(f.order for f in factors)
    s, r = max(0, total - d), max(0, d - total)
    left = I * MonomialIdeal.max_power(n, s)
    right = MonomialIdeal.max_power(n, r)
    for f in factors:
        right = right * f
    if left != right:
        raise RuntimeError("factorization balance identity failed")
    for j in range(fam.s):
        acc = MonomialIdeal.zero(n)
        for split in cartesian(range(j + 1), repeat=len(factors)):
            if sum(split) != j:
                continue
            term = MonomialIdeal.unit(n)
            for lf, jk in zip(local_fams, split):
                term = term * lf.q(jk)
            acc = acc + term
        if acc.saturate() != fam.q(j):
            raise RuntimeError(f"localized families do not recover member {j}")
    return CFactorization(tuple(factors), (s, r))


def closure_in_class(I: MonomialIdeal) -> MonomialIdeal:
    """Integral closure of a member of C, with the class checks asserted.

    The closure must land in D, and closing must commute with multiplying
    by the maximal ideal.
    """
    mem = is_in_C(I)
    if not mem:
        raise ValueError(f"not in C: {mem.reason}")
    closed = newton_closure(I)
    dm = is_in_D(closed)
    if not dm:
        raise RuntimeError(f"closure left the class: {dm.reason}")
    M = MonomialIdeal.maximal(I.n)
    if newton_closure(M * I) != M * closed:
        raise RuntimeError("closure does not commute with the maximal ideal")
    return closed


# -- Goto forms -------------------------------------------------------------


def _label_key(label):
    return (0, label, "") if isinstance(label, int) else (1, 0, str(label))


def _strip_unit_prefix(a: Staircase) -> Staircase | None:
    """Canonical form: a staircase starting with unit steps encodes the
    same family columns as its shifted tail, so the prefix is dropped.
    Returns None for the trivial staircase."""
    p = 0
    while p < a.d and a[p + 1] == p + 1:
        p += 1
    if p == a.d:
        return None
    rest = tuple(a[p + i] - p for i in range(len(a.steps) - p))
    return Staircase(rest)


@dataclass(frozen=True)
class GForm:
    """Order plus one staircase per (opaque) prime label.

    Abstract: labels only need to be distinct.  Realization in a concrete
    ring assigns labels injectively to coordinate primes and is where
    validity (order at least the regularity of the first member) is
    checked.
    """

    order: int
    components: tuple[tuple[object, Staircase], ...]

    @classmethod
    def of(cls, order: int, mapping) -> "GForm":
        if order < 0:
            raise ValueError("negative order")
        items = []
        seen = set()
        for label, stair in dict(mapping).items():
            if label in seen:
                raise ValueError(f"duplicate prime label {label!r}")
            seen.add(label)
            canonical = _strip_unit_prefix(stair)
            if canonical is not None:
                items.append((label, canonical))
        items.sort(key=lambda it: _label_key(it[0]))
        return cls(order, tuple(items))

    @classmethod
    def m_power(cls, k: int) -> "GForm":
        return cls.of(k, {})

    @property
    def mapping(self) -> dict:
        return dict(self.components)

    @property
    def labels(self) -> tuple:
        return tuple(label for label, _ in self.components)


def staircase_alphas(a: Staircase) -> tuple[int, ...]:
    """Per-degree prime powers of the staircase ideal's family.

    alpha_j = d - max{i : a_i - i <= j}; entries are returned until they
    reach 0 and are 0 from there on.
    """
    d = a.d
    b = [a[i] - i for i in range(d + 1)]
    out = []
    for j in range(b[d]):
        top = max(i for i in range(d + 1) if b[i] <= j)
        out.append(d - top)
    return tuple(out)


def alphas_to_staircase(alphas) -> Staircase:
    """Inverse of staircase_alphas: a_i = i + min{j : alpha_j <= d - i}."""
    col = list(alphas)
    while col and col[-1] == 0:
        col.pop()
    if not col:
        return Staircase((0,))
    if any(y > x for x, y in zip(col, col[1:])):
        raise ValueError("prime powers must be weakly decreasing")
    d = col[0]
    col.append(0)
    steps = []
    for i in range(d + 1):
        j = next(j for j, a in enumerate(col) if a <= d - i)
        steps.append(i + j)
    return Staircase(tuple(steps))


def goto_form(I: MonomialIdeal) -> tuple[GForm | None, str]:
    """The GForm of a member of C, or (None, reason).

    Every family member must be the intersection of powers of the minimal
    primes of the first member.
    """
    mem = is_in_C(I)
    if not mem:
        raise ValueError(f"not in C: {mem.reason}")
    fam = q_family(I)
    n = I.n
    if fam.s == 0:
        return GForm.of(I.order, {}), ""
    covers = fam.members[0].minimal_primes()
    omegas = []
    for cover in covers:
        if len(cover) != n - 1:
            raise RuntimeError("family member has a minimal prime of bad height")
        (omega,) = set(range(n)) - cover
        omegas.append(omega)
    omegas.sort()
    columns = {omega: [] for omega in omegas}
    for j in range(fam.s):
        Q = fam.q(j)
        meet = MonomialIdeal.unit(n)
        for omega in omegas:
            a = localize_power(Q, CoordinatePrime(omega))
            if a is None:
                return (
                    None,
                    f"localization of member {j} at the prime omitting variable "
                    f"{omega} is not a prime power",
                )
            columns[omega].append(a)
            meet = meet & CoordinatePrime(omega).power(n, a)
        if meet != Q:
            return (
                None,
                f"member {j} is not an intersection of minimal-prime powers",
            )
    mapping = {}
    for omega in omegas:
        col = columns[omega]
        if any(y > x for x, y in zip(col, col[1:])):
            raise RuntimeError("prime powers failed to decrease along the family")
        mapping[omega] = alphas_to_staircase(col)
    form = GForm.of(I.order, mapping)
    if gform_to_monomial(form, n) != I:
        raise RuntimeError("Goto form failed to reconstruct the ideal")
    return form, ""


def is_in_G(I: MonomialIdeal) -> GForm | None:
    return goto_form(I)[0]


def gform_to_monomial(form: GForm, n: int, assignment=None) -> MonomialIdeal:
    """Realize a GForm in n variables.

    assignment maps prime labels injectively to CoordinatePrime; by default
    integer labels in range are taken as omitted indices and other labels
    are assigned in sorted order.
    """
    labels = form.labels
    if len(labels) > n:
        raise ValueError(f"{len(labels)} primes cannot be realized in {n} variables")
    if assignment is None:
        if all(isinstance(l, int) and 0 <= l < n for l in labels):
            assignment = {l: CoordinatePrime(l) for l in labels}
        else:
            assignment = {
                l: CoordinatePrime(i) for i, l in enumerate(labels)
            }
    omitted = [assignment[l].omitted for l in labels]
    if len(set(omitted)) != len(omitted) or not all(0 <= w < n for w in omitted):
        raise ValueError("assignment must map labels to distinct coordinate primes")
    columns = [staircase_alphas(stair) for _, stair in form.components]
    s = max((len(c) for c in columns), default=0)
    members = []
    for j in range(s):
        Q = MonomialIdeal.unit(n)
        for w, col in zip(omitted, columns):
            a = col[j] if j < len(col) else 0
            if a:
                Q = Q & CoordinatePrime(w).power(n, a)
        members.append(Q)
    fam = QFamily.of(n, members)
    d0 = reg_dim1_saturated(fam.members[0])[0] if fam.s else 0
    if form.order < d0:
        raise ValueError(
            f"order {form.order} is below the regularity {d0} of the first member"
        )
    return ideal_of_family(fam, form.order - d0)


def gform_product(a: GForm, b: GForm) -> GForm:
    """Orders add; staircases at shared labels multiply in min-plus."""
    mapping = a.mapping
    for label, stair in b.components:
        if label in mapping:
            mapping[label] = minplus_product(mapping[label], stair)
        else:
            mapping[label] = stair
    return GForm.of(a.order + b.order, mapping)


def gform_closure(form: GForm) -> GForm:
    """Componentwise staircase closure; the order is unchanged."""
    return GForm.of(
        form.order, {label: closure_seq(stair) for label, stair in form.components}
    )


@dataclass(frozen=True)
class GSimpleFactorization:
    """Per-prime simple factors (label, d, t, multiplicity) together with
    the net maximal-ideal exponents: G * M^balance == M^m_power * product."""

    factors: tuple[tuple[object, int, int, int], ...]
    m_power: int
    balance: int


def gform_simple_factorization(form: GForm) -> GSimpleFactorization:
    """Unique simple factorization of an integrally closed GForm."""
    if gform_closure(form) != form:
        raise ValueError("GForm is not integrally closed")
    factors = []
    unit_power = 0
    total_d = 0
    for label, stair in form.components:
        sf: SimpleFactorization = factor_simple(stair)
        unit_power += sf.m_power
        total_d += stair.d
        for d, t, mult in sf.factors:
            factors.append((label, d, t, mult))
    net = unit_power + form.order - total_d
    m_power, balance = max(0, net), max(0, -net)
    recon = GForm.m_power(m_power)
    for label, d, t, mult in factors:
        piece = GForm.of(d, {label: jdt_seq(d, t)})
        for _ in range(mult):
            recon = gform_product(recon, piece)
    if recon != gform_product(form, GForm.m_power(balance)):
        raise RuntimeError("simple factorization failed to reconstruct the form")
    factors.sort(key=lambda f: (_label_key(f[0]), f[1], f[2]))
    return GSimpleFactorization(tuple(factors), m_power, balance)
