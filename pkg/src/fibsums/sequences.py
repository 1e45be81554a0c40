"""Arbitrary-precision Fibonacci/Lucas values and the direct-summation oracle.

Everything here is exact: indices are plain Python ints (any magnitude),
values are Python ints, and weighted sums are `fractions.Fraction`.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache

# Exact rationals are stdlib fractions: always normalized, denominator > 0,
# gcd(|num|, den) = 1, and Fraction(0) is canonically 0/1.
ExactRational = Fraction


class SequenceKind(Enum):
    """Which of the two companion sequences a sum is taken over."""

    FIB = "F"
    LUCAS = "L"


@lru_cache(maxsize=None)
def _fib_pair(n: int) -> tuple[int, int]:
    # (F_n, F_{n+1}) for n >= 0 by fast doubling:
    #   F_{2k}   = F_k (2 F_{k+1} - F_k)
    #   F_{2k+1} = F_k^2 + F_{k+1}^2
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """F_n for any integer n, with F_{-n} = (-1)^(n-1) F_n.

    O(log |n|) big-integer multiplications.
    """
    if n >= 0:
        return _fib_pair(n)[0]
    f = _fib_pair(-n)[0]
    return f if n & 1 else -f


def lucas(n: int) -> int:
    """L_n for any integer n, with L_{-n} = (-1)^n L_n."""
    k = abs(n)
    a, b = _fib_pair(k)
    value = 2 * b - a
    if n < 0 and k & 1:
        return -value
    return value


def binomial(n: int, k: int) -> int:
    """C(n, k), exactly; 0 when k is outside [0, n].  Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def clear_caches() -> None:
    """Drop memoized sequence values.  Used by cold-start benchmarks."""
    _fib_pair.cache_clear()


def _as_int(q: int | Fraction) -> int | None:
    if isinstance(q, int):
        return q
    if q.denominator == 1:
        return q.numerator
    return None


def direct_sum(
    n: int,
    x: int | Fraction,
    z: int | Fraction,
    j: int,
    r: int,
    s: int,
    m: int,
    kind: SequenceKind,
) -> Fraction:
    """Sum of C(n,k) x^(n-k) z^k W_{j(rk+s)}^m over k = 0..n, term by term.

    W is F or L per `kind`.  0^0 = 1 throughout: for the x and z weight
    powers and for W^m when W = 0, m = 0.  This is the brute-force oracle
    every closed form is checked against; it never consults any identity.
    """
    if n < 0:
        raise ValueError(f"direct_sum requires n >= 0, got n={n}")
    if m < 0:
        raise ValueError(f"direct_sum requires m >= 0, got m={m}")
    seq = fib if kind is SequenceKind.FIB else lucas

    xi = _as_int(x)
    zi = _as_int(z)
    if xi is not None and zi is not None:
        # All-integer path (the common case on verification grids).
        xpow = [1] * (n + 1)
        zpow = [1] * (n + 1)
        for i in range(1, n + 1):
            xpow[i] = xpow[i - 1] * xi
            zpow[i] = zpow[i - 1] * zi
        total = 0
        c = 1
        for k in range(n + 1):
            total += c * xpow[n - k] * zpow[k] * seq(j * (r * k + s)) ** m
            c = c * (n - k) // (k + 1)
        return Fraction(total)

    xq = Fraction(x)
    zq = Fraction(z)
    total = Fraction(0)
    for k in range(n + 1):
        w = Fraction(seq(j * (r * k + s))) ** m
        total += binomial(n, k) * xq ** (n - k) * zq**k * w
    return total
