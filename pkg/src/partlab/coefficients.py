"""Coefficient sequences for partition recurrences, in exact arithmetic.

Three sequences share the vocabulary of this package:

  e_n  pentagonal sign sequence: e_n = (-1)^(|k|+1) when n = k(3k+-1)/2 for
       some integer k (so e_0 = -1 with k = 0), else 0.
  f_n  the integrated sequence, f_n = sum of e_0..e_n. Always in {-1, 0, 1}.
  c_n  series coefficients of -prod_{j>=2} (1 - x^j). Equals f_n everywhere.

Each sequence is also computable through an independent second route (product
expansion or a divisor-sum recurrence with exact division), which the test
suite plays against the definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .errors import NonIntegralDivision

_KIND_NAMES = ("e", "f", "c")


@dataclass(frozen=True)
class CoeffSeq:
    """Finite prefix of one of the coefficient sequences.

    values[i] is the coefficient at index i. Kind "e" and "f" enforce values
    in {-1, 0, 1}; kind "c" additionally pins c_0 = -1 and c_1 = 0.
    """

    kind: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _KIND_NAMES:
            raise ValueError(f"kind must be one of {_KIND_NAMES}, got {self.kind!r}")
        bad = [v for v in self.values if v not in (-1, 0, 1)]
        if bad:
            raise ValueError(f"{self.kind}-sequence values outside -1..1: {bad[:4]}")
        if self.kind == "c":
            if self.values and self.values[0] != -1:
                raise ValueError("c-sequence must start with -1")
            if len(self.values) > 1 and self.values[1] != 0:
                raise ValueError("c-sequence must have 0 at index 1")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


def pentagonal_index(n: int) -> int | None:
    """Inverse of k -> k(3k-1)/2 over all integers k, or None.

    Positive k answers n = (3k^2 - k)/2, negative k answers n = (3|k|^2 + |k|)/2,
    and 0 answers n = 0. At most one k exists for a given n.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 0
    root = isqrt(24 * n + 1)
    if root * root != 24 * n + 1:
        return None
    if root % 6 == 5:
        return (root + 1) // 6
    if root % 6 == 1:
        return -((root - 1) // 6)
    return None


def euler_e(n: int) -> int:
    """e_n: signed indicator of the generalized pentagonal numbers."""
    k = pentagonal_index(n)
    if k is None:
        return 0
    return 1 if abs(k) % 2 == 1 else -1


def pentagonal_pairs() -> Iterator[tuple[int, int]]:
    """Yield (m, e_m) for m = 1, 2, 5, 7, 12, 15, ... in increasing order."""
    k = 1
    while True:
        sign = 1 if k % 2 == 1 else -1
        yield k * (3 * k - 1) // 2, sign
        yield k * (3 * k + 1) // 2, sign
        k += 1


def euler_seq(upto: int) -> CoeffSeq:
    """e_0 .. e_upto."""
    values = [0] * (upto + 1)
    values[0] = -1
    for m, sign in pentagonal_pairs():
        if m > upto:
            break
        values[m] = sign
    return CoeffSeq("e", tuple(values))


def integrated_f(upto: int) -> CoeffSeq:
    """f_0 .. f_upto, the running sums of e."""
    e = euler_seq(upto)
    values = []
    acc = 0
    for v in e.values:
        acc += v
        values.append(acc)
    return CoeffSeq("f", tuple(values))


def sigma(k: int) -> int:
    """Divisor sum of k >= 1."""
    if k < 1:
        raise ValueError(f"sigma needs k >= 1, got {k}")
    total = 0
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            total += d
            other = k // d
            if other != d:
                total += other
    return total


def sigma_table(upto: int) -> list[int]:
    """sigma(1..upto) by a divisor sieve; index 0 is a 0 filler."""
    table = [0] * (upto + 1)
    for d in range(1, upto + 1):
        for m in range(d, upto + 1, d):
            table[m] += d
    return table


def _shrink_by_factor(coeffs: list[int], j: int) -> None:
    # multiply a truncated series by (1 - x^j), in place
    for d in range(len(coeffs) - 1, j - 1, -1):
        coeffs[d] -= coeffs[d - j]


def euler_product(upto: int) -> CoeffSeq:
    """Coefficients of prod_{1<=j<=upto} (1 - x^j), truncated at degree upto.

    Equals -e_n termwise; returned with kind "e" since the same value range
    applies. Degree 0 coefficient is +1.
    """
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for j in range(1, upto + 1):
        _shrink_by_factor(coeffs, j)
    return CoeffSeq("e", tuple(coeffs))


def c_from_product(upto: int) -> CoeffSeq:
    """Coefficients of -prod_{2<=j<=upto} (1 - x^j), truncated at degree upto."""
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for j in range(2, upto + 1):
        _shrink_by_factor(coeffs, j)
    return CoeffSeq("c", tuple(-v for v in coeffs))


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise NonIntegralDivision(f"{what}: {num} not divisible by {den}")
    return q


def c_from_recurrence(upto: int) -> CoeffSeq:
    """c via its divisor-sum recurrence.

    c_0 = -1 and, for n >= 1,
        c_n = -(1/n) * sum_{0<=i<=n-2} (sigma(n-i) - 1) * c_i
    with the division required to be exact.
    """
    sig = sigma_table(upto)
    values = [-1]
    for n in range(1, upto + 1):
        total = sum((sig[n - i] - 1) * values[i] for i in range(0, n - 1))
        values.append(_exact_div(-total, n, f"c_{n}"))
    return CoeffSeq("c", tuple(values[: upto + 1]))


def e_from_recurrence(upto: int) -> CoeffSeq:
    """e via its divisor-sum recurrence.

    e_0 = -1 and, for n >= 1,
        e_n = -(1/n) * sum_{0<=i<=n-1} sigma(n-i) * e_i
    with the division required to be exact.
    """
    sig = sigma_table(upto)
    values = [-1]
    for n in range(1, upto + 1):
        total = sum(sig[n - i] * values[i] for i in range(0, n))
        values.append(_exact_div(-total, n, f"e_{n}"))
    return CoeffSeq("e", tuple(values[: upto + 1]))


def f_equals_e_predicate(n: int) -> bool:
    """True exactly when f_n = e_n: at n = 0 and on the closed-open bands
    k(3k-1)/2 < n <= k(3k+1)/2 for positive k."""
    if n == 0:
        return True
    k = 1
    while k * (3 * k - 1) // 2 < n:
        if n <= k * (3 * k + 1) // 2:
            return True
        k += 1
    return False
