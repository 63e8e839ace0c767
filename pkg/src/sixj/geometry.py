"""Euclidean tetrahedron geometry from the six spin labels.

Edge lengths are the spin values themselves, with opposite-edge pairing
(j1|J1, j2|J2, j3|J3): the faces are then exactly the four triangle sums of
the symbol.  The squared-distance (Cayley-Menger) determinant is evaluated in
exact rational arithmetic, so flatness tests never suffer cancellation; the
dihedral angles come from an explicit floating-point embedding (base face in
the plane, apex solved from the three remaining lengths).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonEuclideanError
from .triangles import SpinSextuple, triangle_sums

# CM determinants below DEGENERACY_RTOL * (max edge)^6 count as flat
DEGENERACY_RTOL = Fraction(1, 10**12)


@dataclass(frozen=True, slots=True)
class TetGeometry:
    """Embedded tetrahedron: edge lengths, volume, exterior dihedral angles.

    ``lengths`` and ``theta_ext`` are ordered (j1, j2, j3, J1, J2, J3); the
    angle at index i is the exterior dihedral along edge i.  ``cayley_menger``
    is the exact determinant, equal to 288 * volume**2.
    """

    lengths: tuple[float, float, float, float, float, float]
    volume: float
    theta_ext: tuple[float, float, float, float, float, float]
    euclidean: bool
    cayley_menger: Fraction

    def theta_int(self, i: int) -> float:
        return math.pi - self.theta_ext[i]


def _det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    a = [row[:] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def cayley_menger(s: SpinSextuple) -> Fraction:
    """Exact Cayley-Menger determinant (= 288 V^2) for edge lengths = spins.

    Vertices A, B, C, D carry AB = j3, AC = j2, AD = J1, BC = j1, BD = J2,
    CD = J3, so face ABC is the (j1, j2, j3) triangle and each edge pair
    (j_i, J_i) is opposite.
    """
    j1, j2, j3, J1, J2, J3 = (x.as_fraction() for x in s.spins)
    ab, ac, ad = j3 * j3, j2 * j2, J1 * J1
    bc, bd = j1 * j1, J2 * J2
    cd = J3 * J3
    one = Fraction(1)
    zero = Fraction(0)
    m = [
        [zero, one, one, one, one],
        [one, zero, ab, ac, ad],
        [one, ab, zero, bc, bd],
        [one, ac, bc, zero, cd],
        [one, ad, bd, cd, zero],
    ]
    return _det(m)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _norm(a):
    return math.sqrt(_dot(a, a))


def _embed(s: SpinSextuple) -> tuple[tuple[float, float, float], ...]:
    """Coordinates (A, B, C, D) realising the six lengths; assumes CM > 0."""
    j1, j2, j3, J1, J2, J3 = (float(x) for x in s.spins)
    a = (0.0, 0.0, 0.0)
    b = (j3, 0.0, 0.0)
    cx = (j2 * j2 + j3 * j3 - j1 * j1) / (2.0 * j3)
    cy2 = j2 * j2 - cx * cx
    cy = math.sqrt(max(cy2, 0.0))
    c = (cx, cy, 0.0)
    dx = (J1 * J1 + j3 * j3 - J2 * J2) / (2.0 * j3)
    dy = (J1 * J1 - J3 * J3 + j2 * j2 - 2.0 * dx * cx) / (2.0 * cy)
    dz2 = J1 * J1 - dx * dx - dy * dy
    dz = math.sqrt(max(dz2, 0.0))
    d = (dx, dy, dz)
    return a, b, c, d


def _dihedral(p, q, r, t) -> float:
    """Interior dihedral angle along edge pq between faces pqr and pqt."""
    u = _sub(q, p)
    uu = _dot(u, u)
    w1 = _sub(r, p)
    w2 = _sub(t, p)
    w1 = _sub(w1, tuple(ci * (_dot(w1, u) / uu) for ci in u))
    w2 = _sub(w2, tuple(ci * (_dot(w2, u) / uu) for ci in u))
    return math.atan2(_norm(_cross(w1, w2)), _dot(w1, w2))


def tet_from_spins(s: SpinSextuple) -> TetGeometry:
    """Geometry of the tetrahedron with edge lengths equal to the spins.

    Raises NonEuclideanError when the Cayley-Menger determinant is not
    positive beyond the degeneracy tolerance (the lengths do not embed, or
    embed flat).
    """
    cm = cayley_menger(s)
    scale = max(x.as_fraction() for x in s.spins)
    if cm <= DEGENERACY_RTOL * scale**6:
        raise NonEuclideanError(
            f"no Euclidean tetrahedron for {s}: Cayley-Menger determinant {float(cm):.6g}"
        )
    volume = math.sqrt(float(cm / 288))
    a, b, c, d = _embed(s)
    theta_int = (
        _dihedral(b, c, a, d),  # edge j1 = BC
        _dihedral(c, a, b, d),  # edge j2 = CA
        _dihedral(a, b, c, d),  # edge j3 = AB
        _dihedral(a, d, b, c),  # edge J1 = AD
        _dihedral(b, d, a, c),  # edge J2 = BD
        _dihedral(c, d, a, b),  # edge J3 = CD
    )
    theta_ext = tuple(math.pi - th for th in theta_int)
    lengths = tuple(float(x) for x in s.spins)
    return TetGeometry(lengths, volume, theta_ext, True, cm)


def discriminant_check(s: SpinSextuple) -> tuple[float, float]:
    """(4AC - B^2, 576 V^2) for comparison; no Euclidean requirement.

    The algebraic side uses the saddle coefficients, the geometric side the
    exact Cayley-Menger determinant (576 V^2 = 2 CM, defined for any input
    even when no tetrahedron exists and the common value is <= 0).
    """
    from .asymptotics import saddle_coeff_a, saddle_coeff_b, saddle_coeff_c

    t = triangle_sums(s)
    a = saddle_coeff_a(s)
    b = saddle_coeff_b(s)
    c = saddle_coeff_c(t)
    delta_alg = 4 * a * c - b * b
    delta_geo = 2 * cayley_menger(s)
    return float(delta_alg), float(delta_geo)
