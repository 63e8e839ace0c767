"""Spin sextuples, triangle/quadrangle sums, parity and admissibility.

A symbol couples six spins laid out as two rows (j1 j2 j3 / J1 J2 J3).  The
four triads

    v1 = j1+j2+j3   v2 = J1+j2+J3   v3 = J1+J2+j3   v4 = j1+J2+J3

and the three column pair sums

    p1 = j2+J2+j3+J3   p2 = j3+J3+j1+J1   p3 = j1+J1+j2+J2

drive everything downstream: admissibility is the non-negativity of all
twelve differences p_j - v_i, and the parity of a supersymmetric symbol is
the count of integer v_i (4 -> alpha, 2 -> beta, 0 -> gamma).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal

from .errors import IntegralityViolation, ParityViolation, TriangleViolation
from .halfint import HalfInt

Algebra = Literal["su2", "osp12"]


class Parity(str, enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True, slots=True)
class SpinSextuple:
    """The six spins (j1, j2, j3, J1, J2, J3), each a non-negative half-integer."""

    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    J1: HalfInt
    J2: HalfInt
    J3: HalfInt

    def __post_init__(self):
        for name, s in zip(self.field_names(), self.spins):
            if s.twice < 0:
                raise ValueError(f"spin {name} must be non-negative, got {s}")

    @staticmethod
    def field_names() -> tuple[str, ...]:
        return ("j1", "j2", "j3", "J1", "J2", "J3")

    @property
    def spins(self) -> tuple[HalfInt, ...]:
        return (self.j1, self.j2, self.j3, self.J1, self.J2, self.J3)

    @classmethod
    def of(cls, *values) -> "SpinSextuple":
        if len(values) != 6:
            raise ValueError("a sextuple needs exactly six spins")
        return cls(*(HalfInt.of(v) for v in values))

    @classmethod
    def parse(cls, texts) -> "SpinSextuple":
        vals = list(texts)
        if len(vals) != 6:
            raise ValueError("a sextuple needs exactly six spins")
        return cls(*(HalfInt.parse(t) for t in vals))

    def scaled(self, k: int) -> "SpinSextuple":
        """The sextuple with every spin multiplied by a positive integer k."""
        if k < 1:
            raise ValueError(f"scale factor must be a positive integer, got {k}")
        return SpinSextuple(*(s * k for s in self.spins))

    def __str__(self) -> str:
        j = " ".join(str(s) for s in self.spins[:3])
        J = " ".join(str(s) for s in self.spins[3:])
        return f"{{{j}; {J}}}"


@dataclass(frozen=True, slots=True)
class TriangleData:
    """The four triangle sums v and three quadrangle sums p of a sextuple."""

    v: tuple[HalfInt, HalfInt, HalfInt, HalfInt]
    p: tuple[HalfInt, HalfInt, HalfInt]

    @property
    def v_sum(self) -> HalfInt:
        return self.v[0] + self.v[1] + self.v[2] + self.v[3]

    @property
    def p_sum(self) -> HalfInt:
        return self.p[0] + self.p[1] + self.p[2]

    def integer_v_count(self) -> int:
        return sum(1 for vi in self.v if vi.is_integer)

    def doubled_spins(self) -> tuple[int, ...]:
        """The six doubled spins recovered from (v, p), in sextuple order.

        2*j1 = v1+v4-p1, 2*j2 = v1+v2-p2, 2*j3 = v1+v3-p3,
        2*J1 = v2+v3-p1, 2*J2 = v3+v4-p2, 2*J3 = v2+v4-p3.
        """
        v1, v2, v3, v4 = self.v
        p1, p2, p3 = self.p
        pairs = (
            (v1 + v4, p1), (v1 + v2, p2), (v1 + v3, p3),
            (v2 + v3, p1), (v3 + v4, p2), (v2 + v4, p3),
        )
        return tuple((a - b).twice for a, b in pairs)


def triangle_sums(s: SpinSextuple) -> TriangleData:
    """Triangle and quadrangle sums of a sextuple; p_sum == v_sum always."""
    j1, j2, j3, J1, J2, J3 = s.spins
    v = (j1 + j2 + j3, J1 + j2 + J3, J1 + J2 + j3, j1 + J2 + J3)
    p = (j2 + J2 + j3 + J3, j3 + J3 + j1 + J1, j1 + J1 + j2 + J2)
    return TriangleData(v, p)


def check_admissible(t: TriangleData, algebra: Algebra) -> None:
    """Raise unless the triangle data is admissible for the given algebra.

    Checks, in order: the twelve triangular inequalities p_j - v_i >= 0, the
    parity constraint on the count of integer v_i (all four for su2; 0, 2 or 4
    for osp12), and the integrality of the six recovered doubled spins.
    """
    for pj in t.p:
        for vi in t.v:
            if (pj - vi).twice < 0:
                raise TriangleViolation(
                    f"triangular inequality fails: p={pj} < v={vi}"
                )
    n_int = t.integer_v_count()
    if algebra == "su2":
        if n_int != 4:
            raise IntegralityViolation(
                f"su2 requires integer triangle sums, got v={tuple(map(str, t.v))}"
            )
    elif algebra == "osp12":
        if n_int % 2:
            raise ParityViolation(
                f"integer triangle-sum count must be 0, 2 or 4, got {n_int}"
            )
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    for twice, name in zip(t.doubled_spins(), SpinSextuple.field_names()):
        if twice % 2:
            raise IntegralityViolation(f"recovered 2*{name} = {twice}/2 is not an integer")
        if twice < 0:
            raise IntegralityViolation(f"recovered spin {name} is negative")


def is_admissible(s: SpinSextuple, algebra: Algebra) -> bool:
    """Non-throwing admissibility test for a sextuple."""
    try:
        check_admissible(triangle_sums(s), algebra)
    except (TriangleViolation, IntegralityViolation, ParityViolation):
        return False
    return True


def classify_parity(t: TriangleData) -> Parity:
    """alpha / beta / gamma by the count of integer triangle sums (4 / 2 / 0)."""
    n_int = t.integer_v_count()
    if n_int == 4:
        return Parity.ALPHA
    if n_int == 2:
        return Parity.BETA
    if n_int == 0:
        return Parity.GAMMA
    raise ParityViolation(f"integer triangle-sum count must be 0, 2 or 4, got {n_int}")


@dataclass(frozen=True, slots=True)
class BetaDecomposition:
    """Beta-parity bookkeeping: integer/half-integer split of the v and p sums.

    ``jstar`` is the spin at the vertex shared by the two half-integer
    triangles and ``jstar_companion`` the spin in the same column of the
    symbol; ``jstar_slot`` locates jstar in (j1, j2, j3, J1, J2, J3) order.
    """

    v: HalfInt
    v_prime: HalfInt
    vbar: HalfInt
    vbar_prime: HalfInt
    p: HalfInt
    pbar: HalfInt
    pbar_prime: HalfInt
    jstar: HalfInt
    jstar_companion: HalfInt
    jstar_slot: int


# Correlation table rows keyed by the pair of half-integer triangle indices:
# (vbar indices, jstar slot, integer quadrangle index, integer triangle
# indices, half-integer quadrangle indices), all 0-based into the v / p /
# spin tuples.  Within-pair order follows the table; every downstream formula
# is symmetric under swapping a pair.
_BETA_TABLE: dict[frozenset[int], tuple[tuple[int, int], int, int, tuple[int, int], tuple[int, int]]] = {
    frozenset({3, 0}): ((3, 0), 0, 0, (1, 2), (1, 2)),  # vbar = v4,v1 -> jstar j1, p1
    frozenset({1, 0}): ((1, 0), 1, 1, (2, 3), (2, 0)),  # vbar = v2,v1 -> jstar j2, p2
    frozenset({2, 0}): ((2, 0), 2, 2, (3, 1), (0, 1)),  # vbar = v3,v1 -> jstar j3, p3
    frozenset({1, 2}): ((1, 2), 3, 0, (3, 0), (1, 2)),  # vbar = v2,v3 -> jstar J1, p1
    frozenset({2, 3}): ((2, 3), 4, 1, (1, 0), (2, 0)),  # vbar = v3,v4 -> jstar J2, p2
    frozenset({3, 1}): ((3, 1), 5, 2, (2, 0), (0, 1)),  # vbar = v4,v2 -> jstar J3, p3
}

_COMPANION_SLOT = {0: 3, 1: 4, 2: 5, 3: 0, 4: 1, 5: 2}


def beta_decompose(s: SpinSextuple, t: TriangleData) -> BetaDecomposition:
    """Resolve a beta-parity sextuple into its integer/half-integer split.

    Both identities 2*jstar = pbar + pbar' - v - v' = vbar + vbar' - p must
    agree; a mismatch indicates inconsistent inputs and raises ValueError.
    """
    half_idx = frozenset(i for i, vi in enumerate(t.v) if not vi.is_integer)
    if len(half_idx) != 2:
        raise ParityViolation(
            f"beta decomposition needs exactly two half-integer triangles, got {len(half_idx)}"
        )
    (vb0, vb1), slot, p_idx, (vi0, vi1), (pb0, pb1) = _BETA_TABLE[half_idx]
    spins = s.spins
    jstar = spins[slot]
    companion = spins[_COMPANION_SLOT[slot]]
    decomp = BetaDecomposition(
        v=t.v[vi0],
        v_prime=t.v[vi1],
        vbar=t.v[vb0],
        vbar_prime=t.v[vb1],
        p=t.p[p_idx],
        pbar=t.p[pb0],
        pbar_prime=t.p[pb1],
        jstar=jstar,
        jstar_companion=companion,
        jstar_slot=slot,
    )
    lhs = decomp.pbar + decomp.pbar_prime - decomp.v - decomp.v_prime
    rhs = decomp.vbar + decomp.vbar_prime - decomp.p
    if lhs != rhs or lhs.twice != 2 * jstar.twice:
        raise ValueError(
            "inconsistent beta decomposition: the two doubled-jstar formulas disagree "
            f"({lhs} vs {rhs} vs 2*{jstar})"
        )
    if not decomp.p.is_integer or not (decomp.v.is_integer and decomp.v_prime.is_integer):
        raise ValueError("beta decomposition produced a non-integer p or v; caller bug")
    return decomp


def rescale(s: SpinSextuple, k: int) -> tuple[SpinSextuple, Parity]:
    """Scale every spin by k and classify the parity of the result.

    Transitions: alpha stays alpha for every k; beta and gamma collapse to
    alpha for even k and are preserved for odd k.
    """
    scaled = s.scaled(k)
    return scaled, classify_parity(triangle_sums(scaled))
