"""Growth analysis of S_{3,0}: normalized ratios, sharp bounds, extremal
sequences, and the half-integer consistency check for Coquet's correction
term.

Everything involving the growth exponent lam = ln3/ln4 is evaluated with
mpmath at 40 significant digits.  Floor/ceil results whose argument lands
within the near-integer guard are recomputed at doubled precision and
snapped when genuinely integral; the extremal families (N = 6*4^k for the
lower bound, N = 260*4^k for the upper) sit exactly on integer boundaries,
so naive rounding there would be off by one.

The sharp constants are never hard-coded as decimals; they are evaluated
on demand from their closed forms:

    liminf  of S(N)/N^lam over N           : 2/6^lam
    limsup  of S(N)/N^lam over N >= 2      : 55/(3*65^lam)
    liminf  of S(3x)/x^lam over x          : 2/sqrt(3)
    limsup  of S(3x)/x^lam over x          : (55/3)*(3/65)^lam
"""

import math
from dataclasses import dataclass

from mpmath import mp

from .core import newman_sum_recursive, thue_morse_sign

__all__ = [
    "LAMBDA",
    "growth_exponent",
    "delta_liminf",
    "delta_limsup",
    "ratio_liminf",
    "ratio_limsup",
    "delta",
    "lower_bound",
    "upper_bound",
    "coquet_ratio",
    "newman_inequality_check",
    "eta_defined",
    "eta_derived",
    "eta_half",
    "DeltaRecord",
    "delta_record",
    "extremal_sequences",
    "scan",
    "EtaRow",
    "eta_rows",
    "format_significant",
]

_DPS = 40          # working precision, comfortably past the required 30
_GUARD = 1e-9      # distance to an integer that triggers recomputation

#: Float approximation of the growth exponent ln3/ln4.
LAMBDA = math.log(3) / math.log(4)


def growth_exponent():
    """ln3/ln4 as an mpf at the working precision (4^lam = 3 exactly)."""
    with mp.workdps(_DPS):
        return mp.ln(3) / mp.ln(4)


def _lam():
    # at ambient precision, so guarded recomputation sharpens it too
    return mp.ln(3) / mp.ln(4)


def delta_liminf():
    """liminf of S_{3,0}(N)/N^lam: 2/6^lam, realized along N = 6*4^k."""
    with mp.workdps(_DPS):
        return 2 / mp.mpf(6) ** _lam()


def delta_limsup():
    """limsup of S_{3,0}(N)/N^lam: 55/(3*65^lam), realized along N = 260*4^k."""
    with mp.workdps(_DPS):
        return 55 / (3 * mp.mpf(65) ** _lam())


def ratio_liminf():
    """liminf of S_{3,0}(3x)/x^lam: 2/sqrt(3), attained at every x = 2*4^k."""
    with mp.workdps(_DPS):
        return 2 / mp.sqrt(3)


def ratio_limsup():
    """limsup of S_{3,0}(3x)/x^lam: (55/3)*(3/65)^lam."""
    with mp.workdps(_DPS):
        return mp.mpf(55) / 3 * (mp.mpf(3) / 65) ** _lam()


def _guarded_round(expr, rounder):
    """floor/ceil of expr() with the near-integer escape hatch.

    expr is recomputed at whatever precision is ambient.  The guard is
    widened proportionally for huge values, where a fixed 1e-9 would fall
    below the representation error itself; the recomputation precision
    scales with the value's magnitude so the fractional part is always
    resolved to 40 digits before rounding or snapping.
    """
    with mp.workdps(_DPS):
        v = expr()
        guard = max(mp.mpf(_GUARD), abs(v) * mp.mpf(10) ** (-(_DPS - 15)))
        if abs(v - mp.nint(v)) >= guard:
            return int(rounder(v))
        int_digits = max(0, int(mp.mag(v) * 0.30103) + 1)
    with mp.workdps(2 * _DPS + int_digits):
        v = expr()
        if abs(v - mp.nint(v)) < mp.mpf(10) ** (-20):
            return int(mp.nint(v))
        return int(rounder(v))


def delta(N: int, S: int | None = None):
    """S_{3,0}(N) / N^lam as an mpf (>= 30 significant digits).

    S may be passed in when already known; otherwise it is computed with
    the divide-by-four recursion.
    """
    if N < 1:
        raise ValueError("delta needs N >= 1")
    if S is None:
        S = newman_sum_recursive(N)
    with mp.workdps(_DPS):
        return S / mp.mpf(N) ** _lam()


def lower_bound(N: int) -> int:
    """floor(2*(N/6)^lam), a sharp lower bound for S_{3,0}(N), N >= 1."""
    if N < 1:
        raise ValueError("lower_bound needs N >= 1")
    return _guarded_round(lambda: 2 * (mp.mpf(N) / 6) ** _lam(), mp.floor)


def upper_bound(N: int) -> int:
    """ceil((55/3)*(N/65)^lam), a sharp upper bound for S_{3,0}(N), N >= 2."""
    if N < 2:
        raise ValueError("upper_bound needs N >= 2")
    return _guarded_round(lambda: mp.mpf(55) / 3 * (mp.mpf(N) / 65) ** _lam(), mp.ceil)


def coquet_ratio(x: int, S3x: int | None = None):
    """S_{3,0}(3x) * x^(-lam) for x >= 2; stays inside
    [2/sqrt(3), (55/3)*(3/65)^lam]."""
    if x < 2:
        raise ValueError("coquet_ratio needs x >= 2")
    if S3x is None:
        S3x = newman_sum_recursive(3 * x)
    with mp.workdps(_DPS):
        return S3x / mp.mpf(x) ** _lam()


def newman_inequality_check(x: int) -> bool:
    """Whether 1/20 < S_{3,0}(x) * x^(-lam) < 5 (Newman's inequality)."""
    if x < 1:
        raise ValueError("newman_inequality_check needs x >= 1")
    r = delta(x)
    with mp.workdps(_DPS):
        return bool(mp.mpf(1) / 20 < r < 5)


def eta_defined(x: int) -> int:
    """Coquet's piecewise correction term: 0 for even x, the Thue-Morse
    sign of 3x-3 for odd x."""
    if x < 1:
        raise ValueError("eta_defined needs x >= 1")
    if x % 2 == 0:
        return 0
    return thue_morse_sign(3 * x - 3)


def eta_derived(x: int, memo: dict | None = None) -> int:
    """The correction term that 1-periodicity of Coquet's F would force:
    3*S_{3,0}(3x) - S_{3,0}(12x).

    Disagrees with ``eta_defined`` already at x = 1, 3, 5, 9; that
    contradiction is the point of the checker.
    """
    if x < 1:
        raise ValueError("eta_derived needs x >= 1")
    return (3 * newman_sum_recursive(3 * x, memo)
            - newman_sum_recursive(12 * x, memo))


def eta_half(k: int, memo: dict | None = None) -> int:
    """The half-integer extension eta(k + 1/2) that periodicity of F would
    force: 3*S(3k) - S(3*(4k+2)) + 3*(-1)^sigma(3k), for k >= 0."""
    if k < 0:
        raise ValueError("eta_half needs k >= 0")
    return (3 * newman_sum_recursive(3 * k, memo)
            - newman_sum_recursive(3 * (4 * k + 2), memo)
            + 3 * thue_morse_sign(3 * k))


@dataclass
class DeltaRecord:
    """One scan row: N, S = S_{3,0}(N), delta = S/N^lam, the two sharp
    bounds (upper is None for N < 2 where it is not defined), and whether
    S sits inside them."""

    N: int
    S: int
    delta: object  # mpf
    lower: int
    upper: int | None
    in_bounds: bool


def delta_record(N: int, S: int | None = None, memo: dict | None = None) -> DeltaRecord:
    """Assemble the DeltaRecord for one N >= 1."""
    if N < 1:
        raise ValueError("delta_record needs N >= 1")
    if S is None:
        S = newman_sum_recursive(N, memo)
    d = delta(N, S)
    lo = lower_bound(N)
    hi = upper_bound(N) if N >= 2 else None
    ok = lo <= S and (hi is None or S <= hi)
    return DeltaRecord(N, S, d, lo, hi, ok)


def extremal_sequences(n_max: int) -> list:
    """DeltaRecords of both extremal families up to exponent n_max >= 8.

    For even n: N = 2^n + 2^(n-1) realizes the liminf plateau 2/6^lam
    exactly, and (for n >= 8) N = 2^n + 2^(n-6) realizes the limsup
    plateau 55/(3*65^lam) exactly.  Records are returned in ascending N.
    """
    if n_max < 8:
        raise ValueError("extremal_sequences needs n_max >= 8")
    ns = []
    for n in range(2, n_max + 1, 2):
        ns.append(2 ** n + 2 ** (n - 1))
        if n >= 8:
            ns.append(2 ** n + 2 ** (n - 6))
    return [delta_record(N) for N in sorted(ns)]


def scan(start: int, stop: int, step: int = 1):
    """Yield DeltaRecords for N = start, start+step, ... below stop.

    Requires 1 <= start < stop and step >= 1; rows come out in ascending N.
    """
    if not 1 <= start < stop:
        raise ValueError("scan needs 1 <= start < stop")
    if step < 1:
        raise ValueError("scan needs step >= 1")
    memo: dict = {}
    for N in range(start, stop, step):
        yield delta_record(N, memo=memo)


@dataclass
class EtaRow:
    """One row of the correction-term comparison table (odd x only)."""

    x: int
    eta_defined: int
    eta_derived: int
    agree: bool


def eta_rows(x_max: int) -> list:
    """EtaRows for all odd x up to x_max."""
    if x_max < 1:
        raise ValueError("eta_rows needs x_max >= 1")
    memo: dict = {}
    rows = []
    for x in range(1, x_max + 1, 2):
        d = eta_defined(x)
        e = eta_derived(x, memo)
        rows.append(EtaRow(x, d, e, d == e))
    return rows


def format_significant(value, digits: int = 12) -> str:
    """Decimal string of an mpf with the given significant digits, no
    exponent notation for the magnitudes a scan produces."""
    with mp.workdps(_DPS):
        return mp.nstr(mp.mpf(value), digits)
