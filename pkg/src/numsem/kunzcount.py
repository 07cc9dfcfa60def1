"""Closed-form counting of semigroups with large multiplicity / embedding dimension.

The Kunz coordinates of a semigroup with m(S) = g - k have a short prefix
x_bar = (x_1, ..., x_{2k+1}) over {1,2,3} that determines everything except
which of the remaining coordinates equal 2; counting the qualifying prefixes
(the set Y(k)) and the placements gives exact binomial formulas for
#{m(S) = g - k} and #{e(S) = g - l}, polynomial in g for fixed deficit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import (
    BadAlphabet,
    KTooLarge,
    LTooLarge,
    OutOfValidityRangeWarning,
    PrefixConditionViolated,
)

__all__ = [
    "PrefixTuple",
    "RationalPolynomial",
    "abc_stats",
    "generate_Y",
    "count_fixed_prefix",
    "count_multiplicity_deficit",
    "count_embedding_deficit",
    "H_polynomial",
    "f_polynomial",
]

MAX_K = 8


def abc_stats(entries):
    """(a, b, c): counts of 2s, 3s, and forced 2s (those with a (1,1,2) pattern)."""
    entries = tuple(entries)
    if any(x not in (1, 2, 3) for x in entries):
        raise BadAlphabet(f"entries must lie in {{1,2,3}}: {entries}")
    a = sum(1 for x in entries if x == 2)
    b = sum(1 for x in entries if x == 3)
    t = len(entries)
    c = 0
    for i in range(1, t + 1):
        if entries[i - 1] == 2 and any(
            entries[j - 1] == 1 and entries[i - j - 1] == 1
            for j in range(1, i)
        ):
            c += 1
    return (a, b, c)


@dataclass(frozen=True)
class PrefixTuple:
    """A {1,2,3}-tuple of odd length 2k+1 with its (a, b, c) statistics."""

    k: int
    entries: tuple
    a: int
    b: int
    c: int

    @classmethod
    def make(cls, entries):
        entries = tuple(entries)
        if len(entries) % 2 == 0 and entries:
            raise ValueError("entries must have odd length (or be empty)")
        k = (len(entries) - 1) // 2  # -1 for the empty tuple
        a, b, c = abc_stats(entries)
        return cls(k, entries, a, b, c)


def _no_113(entries):
    t = len(entries)
    for i3 in range(2, t + 1):
        if entries[i3 - 1] == 3:
            for i1 in range(1, i3 // 2 + 1):
                if entries[i1 - 1] == 1 and entries[i3 - i1 - 1] == 1:
                    return False
    return True


def generate_Y(k):
    """All of Y(k): {1,2,3}-tuples of length 2k+1 with no (1,1,3) pattern and
    a + 2b <= k + 1, in lexicographic order."""
    if k < -1:
        raise ValueError("k must be at least -1")
    if k > MAX_K:
        raise KTooLarge(f"k={k} exceeds the guard {MAX_K}")
    if k == -1:
        return [PrefixTuple.make(())]
    n = 2 * k + 1
    out = []
    cur = []

    def extend(a, b):
        pos = len(cur)
        if pos == n:
            out.append(PrefixTuple.make(tuple(cur)))
            return
        i3 = pos + 1
        for v in (1, 2, 3):
            a2, b2 = a + (v == 2), b + (v == 3)
            if a2 + 2 * b2 > k + 1:
                continue
            if v == 3 and any(
                cur[i1 - 1] == 1 and cur[i3 - i1 - 1] == 1
                for i1 in range(1, i3 // 2 + 1)
            ):
                continue
            cur.append(v)
            extend(a2, b2)
            cur.pop()

    extend(0, 0)
    return out


def count_fixed_prefix(g, k1, k2, prefix):
    """Semigroups with g(S)=g, m(S)=g-k1, e(S)=g-k2 whose Kunz prefix is ``prefix``."""
    if not -1 <= k1 <= k2:
        raise ValueError("need -1 <= k1 <= k2")
    p = prefix if isinstance(prefix, PrefixTuple) else PrefixTuple.make(prefix)
    if p.k != k1:
        raise PrefixConditionViolated(f"prefix length {len(p.entries)} != 2*{k1}+1")
    if not _no_113(p.entries):
        raise PrefixConditionViolated("prefix contains a (1,1,3) pattern")
    if p.a + 2 * p.b > k1 + 1:
        raise PrefixConditionViolated(f"a+2b = {p.a + 2 * p.b} > k1+1 = {k1 + 1}")
    if p.a + p.b - p.c != 2 * k1 + 1 - k2:
        raise PrefixConditionViolated(
            f"a+b-c = {p.a + p.b - p.c} != 2*k1+1-k2 = {2 * k1 + 1 - k2}"
        )
    if g < 4 * k1 + 3:
        warnings.warn(
            f"g={g} is below the proven threshold 4*k1+3={4 * k1 + 3}",
            OutOfValidityRangeWarning,
            stacklevel=2,
        )
    d = k1 + 1 - p.a - 2 * p.b
    n = g - 3 * k1 - 2
    return comb(n, d) if 0 <= d <= n else 0


def count_multiplicity_deficit(g, k):
    """#{S of genus g with m(S) = g - k}; proven exact for g >= 4k+3."""
    if g < 4 * k + 3:
        warnings.warn(
            f"g={g} is below the proven threshold 4k+3={4 * k + 3}",
            OutOfValidityRangeWarning,
            stacklevel=2,
        )
    total = 0
    for p in generate_Y(k):
        d = p.k + 1 - p.a - 2 * p.b
        n = g - 3 * k - 2
        total += comb(n, d) if 0 <= d <= n else 0
    return total


def count_embedding_deficit(g, l):
    """#{S of genus g with e(S) = g - l}; proven exact for g >= 4l+3
    (a second published threshold is g >= (9l+7)/2; both are surfaced)."""
    if 2 * g < 9 * l + 7 or g < 4 * l + 3:
        warnings.warn(
            f"g={g} is below a proven threshold (4l+3={4 * l + 3}, "
            f"(9l+7)/2={(9 * l + 7) / 2})",
            OutOfValidityRangeWarning,
            stacklevel=2,
        )
    total = 0
    for k in range(-1, l + 1):
        for p in generate_Y(k):
            if p.a + p.b - p.c != 2 * k + 1 - l:
                continue
            d = k + 1 - p.a - 2 * p.b
            n = g - 3 * k - 2
            total += comb(n, d) if 0 <= d <= n else 0
    return total


class RationalPolynomial:
    """Dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, RationalPolynomial) and self.coeffs == other.coeffs

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(tuple(x * other for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"


def _binom_poly(shift, d):
    """binom(x - shift, d) as a polynomial in x: prod_{i<d} (x - shift - i) / d!."""
    p = RationalPolynomial((Fraction(1, factorial(d)),))
    for i in range(d):
        p = p * RationalPolynomial((-shift - i, 1))
    return p


def H_polynomial(l):
    """H_l(x) = sum over k <= l and qualifying prefixes of binom(x-3k-2, k+1-a-2b).

    H_l(g) = #{S of genus g with e(S) = g - l} on the validity range; the
    degree is floor((l+1)/2) and floor((l+1)/2)! * H_l is monic with integer
    coefficients.
    """
    if l < -1:
        raise ValueError("l must be at least -1")
    if l > MAX_K:
        raise LTooLarge(f"l={l} exceeds the guard {MAX_K}")
    total = RationalPolynomial()
    for k in range(-1, l + 1):
        for p in generate_Y(k):
            if p.a + p.b - p.c != 2 * k + 1 - l:
                continue
            total = total + _binom_poly(3 * k + 2, k + 1 - p.a - 2 * p.b)
    return total


def f_polynomial(k):
    """f_k(x) = (k+1)! * sum over Y(k) of binom(x-3k-2, k+1-a-2b).

    f_k(g)/(k+1)! counts genus-g semigroups with m(S) = g - k; f_k is monic of
    degree k+1 with integer coefficients.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_K:
        raise KTooLarge(f"k={k} exceeds the guard {MAX_K}")
    total = RationalPolynomial()
    for p in generate_Y(k):
        total = total + _binom_poly(3 * k + 2, k + 1 - p.a - 2 * p.b)
    return factorial(k + 1) * total
