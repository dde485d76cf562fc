"""Dimension combinatorics for hom spaces between exterior and divided powers.

Everything here is integer counting; no field arithmetic.  These counts give
an independent path to the dimensions of the standard comodules:

* ``count_hom(p, n, a, b)`` counts pairs of a sequence of distinct p-powers
  (a of them) and a multiset of p-powers (b of them) with total sum n; this
  is dim Hom(Gamma^n, Lambda^a (x) Gamma^b).
* ``eval_dims`` is the elementary count of a bi-homogeneous component of an
  n-fold tensor power of one exterior and one polynomial generator.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def count_distinct_powers(p: int, s: int, a: int) -> int:
    """Number of a-element subsets of {1, p, p^2, ...} with sum s."""
    if a == 0:
        return 1 if s == 0 else 0
    if s <= 0:
        return 0

    @lru_cache(maxsize=None)
    def rec(rem: int, k: int, max_i: int) -> int:
        # k powers, all with exponent < max_i, summing to rem
        if k == 0:
            return 1 if rem == 0 else 0
        total = 0
        for i in range(max_i):
            pw = p**i
            if pw > rem:
                break
            total += rec(rem - pw, k - 1, i)
        return total

    top = 0
    while p**top <= s:
        top += 1
    return rec(s, a, top)


@lru_cache(maxsize=None)
def count_power_multisets(p: int, m: int, b: int) -> int:
    """Number of multisets of b powers of p (repeats allowed) with sum m."""
    if b == 0:
        return 1 if m == 0 else 0
    if m < b:  # smallest power is 1
        return 0

    @lru_cache(maxsize=None)
    def rec(rem: int, k: int, i: int) -> int:
        # multisets of k powers with exponents <= i summing to rem
        if k == 0:
            return 1 if rem == 0 else 0
        if i < 0 or rem < k:
            return 0
        pw = p**i
        total = 0
        j = 0
        while j <= k and pw * j <= rem:
            total += rec(rem - pw * j, k - j, i - 1)
            j += 1
        return total

    top = 0
    while p ** (top + 1) <= m:
        top += 1
    return rec(m, b, top)


@lru_cache(maxsize=None)
def count_hom(p: int, n: int, a: int, b: int) -> int:
    """dim Hom(Gamma^n, Lambda^a (x) Gamma^b) over F_p.

    Counts pairs (S, N) where S is an a-subset of p-powers, N a b-multiset
    of p-powers, and sum(S) + sum(N) = n.
    """
    if n < 0 or a < 0 or b < 0:
        return 0
    total = 0
    for s in range(n + 1):
        ds = count_distinct_powers(p, s, a)
        if ds:
            total += ds * count_power_multisets(p, n - s, b)
    return total


def count_hom_gamma_gamma(p: int, m: int, n: int) -> int:
    """dim Hom(Gamma^m, Gamma^n): multisets of n p-powers summing to m."""
    return count_power_multisets(p, m, n)


def hom_lambda_gamma(a: int, b: int) -> int:
    """dim Hom(Lambda^a, Gamma^b): one-dimensional iff a = b in {0, 1}."""
    return 1 if a == b and a in (0, 1) else 0


def hom_gamma_lambda(p: int, n: int, a: int) -> int:
    """dim Hom(Gamma^n, Lambda^a): 1 iff n is a sum of a distinct p-powers."""
    return count_distinct_powers(p, n, a)


def eval_dims(n: int, a: int, b: int) -> int:
    """Dimension of the (a, b) component of (Lambda(y) (x) F[x])^(x) n."""
    if a < 0 or a > n or b < 0:
        return 0
    if n == 0:
        return 1 if b == 0 else 0
    return comb(n, a) * comb(b + n - 1, n - 1)


def poincare_r_prime(p: int, a: int, b: int, nmax: int) -> dict[int, int]:
    """Weight table {n: dim} of Hom(Gamma^n, Lambda^a (x) Gamma^b), n <= nmax."""
    table = {}
    for n in range(nmax + 1):
        d = count_hom(p, n, a, b)
        if d:
            table[n] = d
    return table
