"""k-scan harness: exact vs asymptotic values, envelopes, decay-slope fits.

A scan rescales a sextuple by each k in an ascending list, evaluates the
symbol exactly (carried as a ScaledFloat so magnitudes never overflow) and
the matching asymptotic formula, and records both with error measures.
Envelope slopes are least-squares fits of log|exact| against log k over the
strict local maxima of |exact| on the scanned grid.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .asymptotics import asym_for_scaled, asym_standard
from .errors import InsufficientExtremaError, SixjError
from .exact import ScaledFloat
from .geometry import tet_from_spins
from .symbols import sixj_exact, sixj_super_exact
from .triangles import Parity, SpinSextuple, classify_parity, triangle_sums

CSV_COLUMNS = (
    "k",
    "parity",
    "exact_mantissa",
    "exact_exp2",
    "exact_float",
    "asym",
    "abs_err",
    "amplitude",
    "angle",
)


@dataclass(frozen=True, slots=True)
class ScanRecord:
    """One row of a k-scan."""

    k: int
    parity: str
    exact: ScaledFloat
    asym: float
    abs_err: float
    amplitude: float
    angle: float

    def row(self) -> dict:
        return {
            "k": self.k,
            "parity": self.parity,
            "exact_mantissa": self.exact.mantissa,
            "exact_exp2": self.exact.exp2,
            "exact_float": self.exact.to_float(),
            "asym": self.asym,
            "abs_err": self.abs_err,
            "amplitude": self.amplitude,
            "angle": self.angle,
        }


@dataclass(frozen=True, slots=True)
class SlopeFit:
    """Least-squares fit of log|envelope| against log k."""

    slope: float
    intercept: float
    r_squared: float
    n_points: int


def scan(s: SpinSextuple, kind: str, k_list: list[int]) -> list[ScanRecord]:
    """Evaluate the exact and asymptotic symbol at every k in ascending order.

    kind "su2" uses the standard symbol and its k**-1.5 asymptotic; "super"
    evaluates the supersymmetric symbol and routes each k to the formula
    matching the parity of the rescaled sextuple (even k always alpha).
    """
    if kind not in ("su2", "super"):
        raise ValueError(f"kind must be 'su2' or 'super', got {kind!r}")
    ks = list(k_list)
    if any(k < 1 for k in ks):
        raise ValueError("scan k values must be positive integers")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("scan k values must be strictly ascending")
    if not ks:
        return []
    geo = tet_from_spins(s)
    base_parity = classify_parity(triangle_sums(s)) if kind == "super" else None
    records = []
    for k in ks:
        scaled = s.scaled(k)
        try:
            if kind == "su2":
                exact = sixj_exact(scaled).to_scaled()
                res = asym_standard(s, k, geo)
                parity = "su2"
            else:
                exact = sixj_super_exact(scaled).to_scaled()
                res = asym_for_scaled(s, k, geo)
                parity = (base_parity if k % 2 else Parity.ALPHA).value
        except SixjError as exc:
            raise type(exc)(f"k={k}: {exc}") from exc
        records.append(
            ScanRecord(
                k=k,
                parity=parity,
                exact=exact,
                asym=res.value,
                abs_err=abs(exact.to_float() - res.value),
                amplitude=res.amplitude,
                angle=res.angle,
            )
        )
    return records


def k_range(k_from: int, k_to: int, k_step: int = 1) -> list[int]:
    """Ascending inclusive k grid."""
    if k_step < 1:
        raise ValueError("k step must be a positive integer")
    return list(range(k_from, k_to + 1, k_step))


def local_maxima(records: list[ScanRecord]) -> list[ScanRecord]:
    """Records whose |exact| strictly exceeds both neighbours on the grid."""
    out = []
    for prev, here, nxt in zip(records, records[1:], records[2:]):
        a, b, c = prev.exact.abs_log2(), here.exact.abs_log2(), nxt.exact.abs_log2()
        if b > a and b > c:
            out.append(here)
    return out


def envelope_slope(records: list[ScanRecord]) -> SlopeFit:
    """Fit log|exact| vs log k through the local maxima of |exact|.

    Needs at least three maxima; fewer raise InsufficientExtremaError.
    """
    peaks = local_maxima(records)
    if len(peaks) < 3:
        raise InsufficientExtremaError(
            f"envelope fit needs >= 3 local maxima, found {len(peaks)}"
        )
    xs = [math.log(r.k) for r in peaks]
    ys = [r.exact.abs_ln() for r in peaks]
    n = len(xs)
    xbar = sum(xs) / n
    ybar = sum(ys) / n
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    ss_res = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - ybar) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return SlopeFit(slope, intercept, r2, n)


def write_csv(records: list[ScanRecord], fh) -> None:
    """Emit the fixed-column CSV; float cells use shortest round-trip repr."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        row = r.row()
        writer.writerow([_cell(row[c]) for c in CSV_COLUMNS])


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_csv(fh) -> list[ScanRecord]:
    """Parse a scan CSV back into records (exact values from mantissa/exp2)."""
    reader = csv.DictReader(fh)
    missing = set(CSV_COLUMNS) - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"scan CSV missing columns: {sorted(missing)}")
    records = []
    for row in reader:
        exact = ScaledFloat(float(row["exact_mantissa"]), int(row["exact_exp2"]))
        records.append(
            ScanRecord(
                k=int(row["k"]),
                parity=row["parity"],
                exact=exact,
                asym=float(row["asym"]),
                abs_err=float(row["abs_err"]),
                amplitude=float(row["amplitude"]),
                angle=float(row["angle"]),
            )
        )
    return records


def write_json(records: list[ScanRecord], fh) -> None:
    """JSON mirror of the CSV: an array of objects with identical field names."""
    json.dump([r.row() for r in records], fh, indent=2)
    fh.write("\n")


def csv_text(records: list[ScanRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
