"""Pure-Python enumeration kernels.

Fallback for :mod:`newmansum._speedups`; same signatures, same results,
roughly two orders of magnitude slower.  Unlike the compiled kernel these
accept arguments beyond 64-bit range.
"""

from array import array


def range_sum(modulus: int, residue: int, start: int, stop: int) -> int:
    """Sum of (-1)^popcount(n) over start <= n < stop with n % modulus == residue."""
    if stop <= start:
        return 0
    first = start + (residue - start) % modulus
    total = 0
    for n in range(first, stop, modulus):
        total += 1 - 2 * (n.bit_count() & 1)
    return total


def prefix_sums(modulus: int, residue: int, limit: int) -> array:
    """array('q') holding S_{modulus,residue}(x) for every x = 0..limit."""
    out = array("q", bytes(8 * (limit + 1)))
    s = 0
    for n in range(limit):
        if n % modulus == residue:
            s += 1 - 2 * (n.bit_count() & 1)
        out[n + 1] = s
    return out
