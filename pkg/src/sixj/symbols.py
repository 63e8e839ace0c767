"""Exact evaluation of standard SU(2) 6j and supersymmetric OSP(1|2) symbols.

The standard symbol is the single sum

    sqrt(R) * sum_t (-1)^t (t+1)! / [prod_i (t-v_i)! prod_j (p_j-t)!]

with R = prod(p_j-v_i)! / prod(v_i+1)! and t running from max(v_i) to
min(p_j).  The supersymmetric symbol replaces (t+1)! by t! times a
parity-dependent monomial, applies integer-part brackets to the factorial
arguments, uses a parity prefactor built from the same brackets and carries
a global frontal sign (-1)^(4 sum j*J).  One generic code path covers all
three parities; the per-parity forms fall out of the brackets.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .errors import EmptySumWarning, ShiftViolation
from .exact import (
    ExactSymbol,
    factorial,
    factorial_table,
    prime_exponent_in_factorial,
    primes_up_to,
)
from .triangles import (
    BetaDecomposition,
    Parity,
    SpinSextuple,
    TriangleData,
    beta_decompose,
    check_admissible,
    classify_parity,
    triangle_sums,
)


def frontal_sign(s: SpinSextuple, t: TriangleData, k: int = 1) -> int:
    """The global sign (-1)^(4 k^2 sum j*J) of a rescaled supersymmetric symbol.

    Computed exactly from doubled spins: 4 sum j*J = sum (2j)(2J).  Even k
    always gives +1; odd k reduces to the k = 1 sign.
    """
    if k % 2 == 0:
        return 1
    four_sum = (
        s.j1.twice * s.J1.twice + s.j2.twice * s.J2.twice + s.j3.twice * s.J3.twice
    )
    return -1 if four_sum % 2 else 1


def frontal_sign_closed_form(parity: Parity, t: TriangleData, bd: BetaDecomposition | None = None) -> int:
    """Odd-k frontal sign from the parity-specific closed forms.

    alpha: +1; gamma: (-1)^(1 + sum p_j); beta: (-1)^(v + v' - p).
    """
    if parity is Parity.ALPHA:
        return 1
    if parity is Parity.GAMMA:
        total = t.p_sum
        if not total.is_integer:
            raise ValueError("gamma parity implies an integer quadrangle sum")
        return -1 if (1 + int(total)) % 2 else 1
    if bd is None:
        raise ValueError("beta closed form needs a BetaDecomposition")
    exponent = bd.v + bd.v_prime - bd.p
    return -1 if int(exponent) % 2 else 1


def monomial(
    parity: Parity,
    t_index: int,
    s: SpinSextuple,
    bd: BetaDecomposition | None = None,
) -> Fraction:
    """The degree <= 1 weight multiplying t! in the supersymmetric sum.

    alpha: 1
    beta:  -t (2 jstar + 1) + (pbar + 1/2)(pbar' + 1/2) - v v'
    gamma: -t + 2 sum j*J + (sum of all six spins) + 1/2
    """
    c0, c1 = monomial_coefficients(parity, s, bd)
    return c0 + c1 * t_index


def monomial_coefficients(
    parity: Parity,
    s: SpinSextuple,
    bd: BetaDecomposition | None = None,
) -> tuple[Fraction, Fraction]:
    """(constant, linear) coefficients of the parity monomial in t."""
    if parity is Parity.ALPHA:
        return Fraction(1), Fraction(0)
    if parity is Parity.BETA:
        if bd is None:
            raise ValueError("beta monomial needs a BetaDecomposition")
        two_jstar_plus1 = bd.jstar.as_fraction() * 2 + 1
        c0 = (bd.pbar.as_fraction() + Fraction(1, 2)) * (
            bd.pbar_prime.as_fraction() + Fraction(1, 2)
        ) - bd.v.as_fraction() * bd.v_prime.as_fraction()
        return c0, -two_jstar_plus1
    # gamma: the spin sum equals half the quadrangle total
    jj = (
        s.j1.as_fraction() * s.J1.as_fraction()
        + s.j2.as_fraction() * s.J2.as_fraction()
        + s.j3.as_fraction() * s.J3.as_fraction()
    )
    spin_sum = sum((x.as_fraction() for x in s.spins), Fraction(0))
    return 2 * jj + spin_sum + Fraction(1, 2), Fraction(-1)


def prefactor_standard(t: TriangleData) -> Fraction:
    """Exact R = prod_{j,i} (p_j - v_i)! / prod_i (v_i + 1)! for integer data."""
    num = 1
    for pj in t.p:
        for vi in t.v:
            d = pj - vi
            if not d.is_integer or d.twice < 0:
                raise ShiftViolation(f"standard prefactor needs integer p-v >= 0, got {d}")
            num *= factorial(int(d))
    den = 1
    for vi in t.v:
        if not vi.is_integer:
            raise ShiftViolation(f"standard prefactor needs integer v, got {vi}")
        den *= factorial(int(vi) + 1)
    return Fraction(num, den)


def _super_prefactor_args(t: TriangleData) -> tuple[list[int], list[int]]:
    """Numerator and denominator factorial arguments of the parity prefactor.

    Numerator: floor(p_j - v_i) over the twelve pairs; denominator:
    floor(v_i + 1/2) over the four triangles.  Every argument must be a
    non-negative integer, otherwise the parity data is inconsistent.
    """
    nums = []
    for pj in t.p:
        for vi in t.v:
            d = pj - vi
            if d.twice < 0:
                raise ShiftViolation(f"prefactor argument p - v = {d} is negative")
            nums.append(d.twice // 2)
    dens = [vi.floor_plus_half() for vi in t.v]
    return nums, dens


def prefactor_super(
    parity: Parity,
    s: SpinSextuple,
    t: TriangleData,
    bd: BetaDecomposition | None = None,
) -> Fraction:
    """Exact parity prefactor as a single rational number.

    The integer-part brackets resolve per parity to: all (p_j - v_i)! over
    v_i! (alpha); all (p_j - v_i - 1/2)! over (v_i + 1/2)! (gamma); and the
    mixed twelve-factorial product over v! v'! (vbar + 1/2)! (vbar' + 1/2)!
    (beta).
    """
    if parity is Parity.BETA and bd is None:
        raise ValueError("beta prefactor needs a BetaDecomposition")
    actual = classify_parity(t)
    if actual is not parity:
        raise ShiftViolation(f"prefactor for {parity.value} requested on {actual.value} data")
    nums, dens = _super_prefactor_args(t)
    top = 1
    bottom = 1
    for n in nums:
        top *= factorial(n)
    for d in dens:
        bottom *= factorial(d)
    return Fraction(top, bottom)


def _sum_standard(v_ints: list[int], p_ints: list[int]) -> Fraction:
    tmin = max(v_ints)
    tmax = min(p_ints)
    fact = factorial_table(tmax + 1)
    total = Fraction(0)
    for t in range(tmin, tmax + 1):
        den = 1
        for vi in v_ints:
            den *= fact[t - vi]
        for pj in p_ints:
            den *= fact[pj - t]
        term = Fraction(fact[t + 1], den)
        total += -term if t % 2 else term
    return total


def _sum_super(
    w: list[int], m: list[int], c0: Fraction, c1: Fraction
) -> Fraction:
    """sum over integer t of (-1)^t t! (c0 + c1 t) / [prod (t-w_i)! prod (m_j-t)!]."""
    tmin = max(w)
    tmax = min(m)
    if tmin > tmax:
        return Fraction(0)
    fact = factorial_table(tmax)
    total = Fraction(0)
    for t in range(tmin, tmax + 1):
        den = 1
        for wi in w:
            den *= fact[t - wi]
        for mj in m:
            den *= fact[mj - t]
        term = Fraction(fact[t], den) * (c0 + c1 * t)
        total += -term if t % 2 else term
    return total


def _prefactor_symbol(nums: list[int], dens: list[int], coeff: Fraction) -> ExactSymbol:
    """coeff * sqrt(prod nums! / prod dens!) built from prime-exponent vectors.

    The radicand is never multiplied out, so square extraction stays cheap
    however large the factorial arguments grow under spin rescaling.
    """
    top = max(nums + dens, default=0)
    exps: dict[int, int] = {}
    for p in primes_up_to(top):
        e = 0
        for n in nums:
            e += prime_exponent_in_factorial(n, p)
        for d in dens:
            e -= prime_exponent_in_factorial(d, p)
        if e:
            exps[p] = e
    return ExactSymbol.from_prime_exponents(coeff, exps)


def sixj_exact(s: SpinSextuple) -> ExactSymbol:
    """Exact SU(2) 6j symbol as a canonical (coeff, radicand) pair."""
    t = triangle_sums(s)
    check_admissible(t, "su2")
    v_ints = [int(vi) for vi in t.v]
    p_ints = [int(pj) for pj in t.p]
    total = _sum_standard(v_ints, p_ints)
    if total == 0:
        return ExactSymbol.zero()
    nums = [pj - vi for pj in p_ints for vi in v_ints]
    dens = [vi + 1 for vi in v_ints]
    return _prefactor_symbol(nums, dens, total)


def sixj_super_exact(s: SpinSextuple) -> ExactSymbol:
    """Exact OSP(1|2) supersymmetric 6j symbol of any parity.

    Implements the single-sum form with integer-part brackets literally:
    t runs over the integers with floor(v_i + 1/2) <= t <= floor(p_j + 1/2)
    for every i, j.  The range is never empty for admissible data; if a
    hand-built input produces one, the exact value is zero and an
    EmptySumWarning is emitted.
    """
    t = triangle_sums(s)
    check_admissible(t, "osp12")
    parity = classify_parity(t)
    bd = beta_decompose(s, t) if parity is Parity.BETA else None
    c0, c1 = monomial_coefficients(parity, s, bd)
    w = [vi.floor_plus_half() for vi in t.v]
    m = [pj.floor_plus_half() for pj in t.p]
    if max(w) > min(m):
        warnings.warn("empty summation range; exact value is 0", EmptySumWarning)
        return ExactSymbol.zero()
    total = _sum_super(w, m, c0, c1)
    if total == 0:
        return ExactSymbol.zero()
    sign = frontal_sign(s, t, 1)
    nums, dens = _super_prefactor_args(t)
    return _prefactor_symbol(nums, dens, sign * total)
