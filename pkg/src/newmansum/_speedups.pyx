# cython: language_level=3
"""Compiled enumeration kernels behind the brute-force oracle.

Same contract as :mod:`newmansum._pykernel`; arguments must fit in 64
bits (the dispatcher in :mod:`newmansum.oracle` checks this).
"""

from array import array


cdef extern from *:
    """
    static inline int nm_parity64(unsigned long long v) {
        return __builtin_parityll(v);
    }
    """
    int nm_parity64(unsigned long long v) nogil


def range_sum(unsigned long long modulus, unsigned long long residue,
              unsigned long long start, unsigned long long stop):
    """Sum of (-1)^popcount(n) over start <= n < stop with n % modulus == residue."""
    cdef long long total = 0
    cdef unsigned long long n
    if stop <= start:
        return 0
    n = start + (residue + modulus - start % modulus) % modulus
    with nogil:
        while n < stop:
            total += 1 - 2 * nm_parity64(n)
            n += modulus
    return total


def prefix_sums(unsigned long long modulus, unsigned long long residue, Py_ssize_t limit):
    """array('q') holding S_{modulus,residue}(x) for every x = 0..limit."""
    out = array("q", bytes(8 * (limit + 1)))
    cdef long long[::1] view = out
    cdef long long s = 0
    cdef unsigned long long n, lim = limit
    with nogil:
        for n in range(lim):
            if n % modulus == residue:
                s += 1 - 2 * nm_parity64(n)
            view[n + 1] = s
    return out
