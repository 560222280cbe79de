"""Exact evaluation of Newman digit sums.

The central object is

    S_{m,l}(x) = sum of (-1)^sigma(n) over 0 <= n < x with n = l (mod m),

where sigma(n) is the number of ones in the binary expansion of n, so
(-1)^sigma(n) is the Thue-Morse sign of n.  For m = 3, l = 0 this sum is
always positive (Newman's phenomenon) and grows like x^(ln3/ln4).

Two exact evaluators for S_{3,0} are provided, both far faster than the
O(x) enumeration in :mod:`newmansum.oracle`:

* ``newman_sum_decomposition`` walks the binary expansion of x and reduces
  each interval between set bits to a closed-form primitive (a power
  interval [0, 2^m) or a dyadic interval [2^n, 2^n + 2^m)), selected by a
  six-way case split on the alternating exponent sum of the prefix.
* ``newman_sum_recursive`` applies the divide-by-four recursion
  S(N) = 3*S(N//4) + c(N) whose correction term c(N) depends only on
  N mod 24 and the Thue-Morse sign of N.

Sums over the other residue classes mod 3, mod 6 and mod 3*2^m reduce to
S_{3,0} by fixed linear combinations and are exposed as ``residue_sum``,
``six_residue_sum`` and ``scaled_residue_sum``.

Everything operates on arbitrary-precision integers; no operation here is
limited to machine-word range.
"""

from dataclasses import dataclass

__all__ = [
    "digit_sum",
    "thue_morse_sign",
    "bit_exponents",
    "alt_exponent_sum",
    "classify_prefix",
    "ReductionOutcome",
    "reduce_interval",
    "power_sum",
    "dyadic_sum",
    "boundary_term",
    "newman_sum_decomposition",
    "decomposition_terms",
    "recursion_correction",
    "newman_sum_recursive",
    "recursion_trace",
    "residue_sum",
    "six_residue_sum",
    "scaled_residue_sum",
]


def digit_sum(n: int) -> int:
    """Number of ones in the binary expansion of n (the binary digit sum)."""
    if n < 0:
        raise ValueError("digit_sum needs n >= 0")
    return n.bit_count()


def thue_morse_sign(n: int) -> int:
    """(-1)^digit_sum(n): +1 when n has evenly many binary ones, else -1."""
    if n < 0:
        raise ValueError("thue_morse_sign needs n >= 0")
    return -1 if n.bit_count() & 1 else 1


def bit_exponents(x: int) -> list:
    """Exponents of the set bits of x, largest first.

    The powers 2^k over the returned exponents sum back to x exactly.
    """
    if x < 0:
        raise ValueError("bit_exponents needs x >= 0")
    exps = []
    while x:
        low = x & -x
        exps.append(low.bit_length() - 1)
        x ^= low
    exps.reverse()
    return exps


# Mask with ones in all even bit positions, grown on demand so that
# alt_exponent_sum stays O(1) big-int operations for huge arguments.
_EVEN_MASK = 0x5555555555555555
_EVEN_MASK_BITS = 64


def _even_bits_mask(nbits: int) -> int:
    global _EVEN_MASK, _EVEN_MASK_BITS
    while _EVEN_MASK_BITS < nbits:
        _EVEN_MASK |= _EVEN_MASK << _EVEN_MASK_BITS
        _EVEN_MASK_BITS *= 2
    return _EVEN_MASK


def alt_exponent_sum(y: int) -> int:
    """Alternating sum of (-1)^k over the set-bit exponents k of y.

    Congruent to y mod 3, which is what makes it drive the six-way
    interval reduction.  Undefined for y = 0 (empty expansion).
    """
    if y < 1:
        raise ValueError("alt_exponent_sum needs y >= 1")
    even = (y & _even_bits_mask(y.bit_length())).bit_count()
    return 2 * even - y.bit_count()


def classify_prefix(y: int) -> int:
    """The class alt_exponent_sum(y) mod 6, normalized into 0..5."""
    return alt_exponent_sum(y) % 6


def power_sum(m: int) -> int:
    """S_{3,0}(2^m): 2*3^(m/2 - 1) for even m >= 2, 3^((m-1)/2) for odd m.

    m = 0 is the single summand n = 0, so S_{3,0}(1) = 1.
    """
    if m < 0:
        raise ValueError("power_sum needs m >= 0")
    if m == 0:
        return 1
    if m % 2 == 0:
        return 2 * 3 ** (m // 2 - 1)
    return 3 ** ((m - 1) // 2)


def dyadic_sum(n_parity: str, m: int) -> int:
    """S_{3,0}([2^n, 2^n + 2^m)) for any n > m of the given parity.

    The value depends only on the parities: 3^(m/2 - 1) for even m,
    3^((m-1)/2) for odd m with odd n, and 0 for odd m with even n.
    m = 0 is outside this closed form; single-point intervals are handled
    by ``boundary_term``.
    """
    if m < 1:
        raise ValueError("dyadic_sum needs m >= 1")
    if n_parity not in ("even", "odd"):
        raise ValueError("n_parity must be 'even' or 'odd'")
    if m % 2 == 0:
        return 3 ** (m // 2 - 1)
    if n_parity == "odd":
        return 3 ** ((m - 1) // 2)
    return 0


@dataclass(frozen=True)
class ReductionOutcome:
    """A signed reference to a closed-form primitive interval sum.

    ``sign * value-of-form`` equals S_{3,0}([y, y + 2^m)) for any prefix y
    in the class that produced this outcome.
    """

    sign: int          # +1 or -1
    form: str          # 'power' for [0, 2^m), 'dyadic' for [2^n, 2^n + 2^m)
    n_parity: str | None  # parity of n for the dyadic form, else None
    m: int

    def value(self) -> int:
        base = power_sum(self.m) if self.form == "power" else dyadic_sum(self.n_parity, self.m)
        return self.sign * base


_REDUCTION_TABLE = {
    0: (1, "power", None),
    1: (1, "dyadic", "even"),
    2: (-1, "dyadic", "odd"),
    3: (-1, "power", None),
    4: (-1, "dyadic", "even"),
    5: (1, "dyadic", "odd"),
}


def reduce_interval(tc: int, m: int) -> ReductionOutcome:
    """Reduce S_{3,0}([y, y+2^m)) to a signed primitive, keyed by the class
    of the prefix y (``classify_prefix(y)``).

    Requires m >= 1 and m below the lowest set bit of y; the decomposition
    driver guarantees both.
    """
    if tc not in _REDUCTION_TABLE:
        raise ValueError("class must be in 0..5")
    if m < 1:
        raise ValueError("reduce_interval needs m >= 1")
    sign, form, parity = _REDUCTION_TABLE[tc]
    return ReductionOutcome(sign, form, parity, m)


def boundary_term(N: int) -> int:
    """S_{3,0}([N-1, N)) for odd N: the Thue-Morse sign of N-1 when
    N = 1 (mod 3), else 0."""
    if N < 1 or N % 2 == 0:
        raise ValueError("boundary_term needs odd N >= 1")
    if N % 3 == 1:
        return thue_morse_sign(N - 1)
    return 0


def newman_sum_decomposition(x: int) -> int:
    """S_{3,0}(x) by binary decomposition.

    Splits [0, x) at the set bits of x, takes the leading power interval
    in closed form, reduces every later interval through the six-way case
    split on the running alternating exponent sum of the prefix, and
    closes an odd x with the one-point boundary term.  O(sigma(x)) closed
    forms overall.
    """
    if x < 0:
        raise ValueError("newman_sum_decomposition needs x >= 0")
    total = 0
    t = 0
    for i, k in enumerate(bit_exponents(x)):
        if i == 0:
            total += power_sum(k)
        elif k == 0:
            total += boundary_term(x)
        else:
            sign, form, parity = _REDUCTION_TABLE[t % 6]
            base = power_sum(k) if form == "power" else dyadic_sum(parity, k)
            total += sign * base
        t += 1 if k % 2 == 0 else -1
    return total


def decomposition_terms(x: int) -> list:
    """The (description, signed term) pairs summed by
    ``newman_sum_decomposition``, in processing order (descending bits)."""
    if x < 0:
        raise ValueError("decomposition_terms needs x >= 0")
    terms = []
    t = 0
    for i, k in enumerate(bit_exponents(x)):
        if i == 0:
            terms.append((f"S(2^{k})", power_sum(k)))
        elif k == 0:
            terms.append((f"S([{x - 1},{x}))", boundary_term(x)))
        else:
            out = reduce_interval(t % 6, k)
            s = "+" if out.sign > 0 else "-"
            if out.form == "power":
                desc = f"{s}S(2^{k})"
            else:
                desc = f"{s}S([2^n,2^n+2^{k})) n {out.n_parity}"
            terms.append((desc, out.value()))
        t += 1 if k % 2 == 0 else -1
    return terms


# Correction term of the divide-by-four recursion, keyed by N mod 24.
# The five classes below partition 0..23; the sign factor is the
# Thue-Morse sign of N itself.
_CORR_ZERO = frozenset((0, 7, 8, 9, 16, 17, 18, 22, 23))
_CORR_PLUS = frozenset((3, 4, 10, 12, 20))
_CORR_MINUS = frozenset((1, 2, 5, 6, 11, 19, 21))


def recursion_correction(N: int) -> int:
    """c(N) in S_{3,0}(N) = 3*S_{3,0}(N//4) + c(N), for N >= 1."""
    if N < 1:
        raise ValueError("recursion_correction needs N >= 1")
    r = N % 24
    if r in _CORR_ZERO:
        return 0
    s = -1 if N.bit_count() & 1 else 1
    if r in _CORR_PLUS:
        return s
    if r in _CORR_MINUS:
        return -s
    if r == 15:
        return 2 * s
    return -2 * s  # r in {13, 14}


def newman_sum_recursive(N: int, memo: dict | None = None) -> int:
    """S_{3,0}(N) by the divide-by-four recursion, iteratively.

    Depth is log4(N); each level costs one floor division and one
    correction lookup.  Pass a dict as ``memo`` to share previously
    computed values across a batch of calls (the dict is updated in
    place and must not be shared between concurrent workers).
    """
    if N < 0:
        raise ValueError("newman_sum_recursive needs N >= 0")
    if memo is None:
        s = 0
        w = 1
        while N:
            s += w * recursion_correction(N)
            N //= 4
            w *= 3
        return s
    chain = []
    while N and N not in memo:
        chain.append(N)
        N //= 4
    s = memo[N] if N else 0
    for n in reversed(chain):
        s = 3 * s + recursion_correction(n)
        memo[n] = s
    return s


def recursion_trace(N: int) -> list:
    """The (N_k, c(N_k)) pairs visited by the recursion, outermost first.

    S_{3,0}(N) = sum of 3^k * c(N_k) over the returned pairs.
    """
    if N < 0:
        raise ValueError("recursion_trace needs N >= 0")
    pairs = []
    while N:
        pairs.append((N, recursion_correction(N)))
        N //= 4
    return pairs


def residue_sum(l: int, N: int, memo: dict | None = None) -> int:
    """S_{3,l}(N) for l in {0, 1, 2}, via S_{3,0} at N, 2N and 4N:

        S_{3,1}(N) = S(N) - S(2N)
        S_{3,2}(N) = S(N) + S(2N) - S(4N)
    """
    if N < 0:
        raise ValueError("residue_sum needs N >= 0")
    if l == 0:
        return newman_sum_recursive(N, memo)
    if l == 1:
        return newman_sum_recursive(N, memo) - newman_sum_recursive(2 * N, memo)
    if l == 2:
        return (newman_sum_recursive(N, memo) + newman_sum_recursive(2 * N, memo)
                - newman_sum_recursive(4 * N, memo))
    raise ValueError("residue must be 0, 1 or 2")


def six_residue_sum(j: int, x: int, y: int, memo: dict | None = None) -> int:
    """S_{6,j}([2x, 2y)) for j in 0..5, from S_{3,0} interval sums.

    Doubling maps the multiples of 3 in [x, y) onto the multiples of 6 in
    [2x, 2y) with one extra binary one, which pins each class down to a
    fixed combination of S_{3,0} over [x,y), [2x,2y), [4x,4y) and [8x,8y).
    """
    if j not in range(6):
        raise ValueError("j must be in 0..5")
    if x < 0 or x > y:
        raise ValueError("need 0 <= x <= y")
    if x == y:
        return 0

    def iv(a, b):
        return newman_sum_recursive(b, memo) - newman_sum_recursive(a, memo)

    if j == 0:
        return iv(x, y)
    if j == 1:
        return -iv(x, y)
    if j == 2:
        return iv(x, y) - iv(2 * x, 2 * y)
    if j == 3:
        return iv(2 * x, 2 * y) - iv(x, y)
    if j == 4:
        return iv(2 * x, 2 * y) - iv(4 * x, 4 * y) + iv(x, y)
    # j == 5: complement of S_{6,2} inside S_{3,2} over [2x, 2y)
    return 2 * iv(2 * x, 2 * y) + iv(4 * x, 4 * y) - iv(8 * x, 8 * y) - iv(x, y)


def scaled_residue_sum(m: int, k: int, r: int, n: int, memo: dict | None = None) -> int:
    """S_{3*2^m, k*2^m + r}(2^n) for 0 <= r < 2^m and n > m.

    Dropping the low m bits maps the class onto S_{3,k}(2^(n-m)), with the
    Thue-Morse sign of the fixed low part r as a global factor.
    """
    if m < 0:
        raise ValueError("scaled_residue_sum needs m >= 0")
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    if not 0 <= r < 2 ** m:
        raise ValueError("r must satisfy 0 <= r < 2^m")
    if n <= m:
        raise ValueError("scaled_residue_sum needs n > m")
    return thue_morse_sign(r) * residue_sum(k, 2 ** (n - m), memo)
