"""Brute-force partition oracle.

Partitions are represented as nonincreasing tuples of positive ints; strict
partitions as strictly decreasing tuples. Everything here counts by explicit
enumeration, so it is slow and trusted. Enumeration refuses n > ORACLE_CAP
(p(80) is around 1.6e7 partitions, the practical desk limit).

Constraint vocabulary for count_constrained:

    "none"        no restriction
    "parts_below" every part strictly less than k
    "parts_above" every part strictly greater than k
    "max_part"    largest part equal to k
    "min_part"    smallest part equal to k
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InvalidPartition, OracleLimitError

ORACLE_CAP = 80

CONSTRAINTS = ("none", "parts_below", "parts_above", "max_part", "min_part")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > ORACLE_CAP:
        raise OracleLimitError(
            f"oracle enumeration capped at n <= {ORACLE_CAP}, got {n}"
        )


def validate_partition(parts: Iterable[int], strict: bool = False) -> tuple[int, ...]:
    """Return parts as a canonical tuple, or raise InvalidPartition."""
    t = tuple(parts)
    for p in t:
        if not isinstance(p, int) or p < 1:
            raise InvalidPartition(f"parts must be positive ints, got {t!r}")
    for a, b in zip(t, t[1:]):
        if strict and a <= b:
            raise InvalidPartition(f"not strictly decreasing: {t!r}")
        if not strict and a < b:
            raise InvalidPartition(f"not nonincreasing: {t!r}")
    return t


def enumerate_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n in descending lexicographic order.

    enumerate_partitions(4) gives (4,), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    _check_n(n)
    yield from _descend(n, n)


def _descend(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _descend(remaining - first, first):
            yield (first,) + rest


def enumerate_strict(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n into distinct parts, descending lexicographic."""
    _check_n(n)
    yield from _descend_strict(n, n)


def _descend_strict(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _descend_strict(remaining - first, first - 1):
            yield (first,) + rest


def _matches(parts: tuple[int, ...], constraint: str, k: int | None) -> bool:
    if constraint == "none":
        return True
    if k is None:
        raise ValueError(f"constraint {constraint!r} needs k")
    if constraint == "parts_below":
        return not parts or parts[0] < k
    if constraint == "parts_above":
        return not parts or parts[-1] > k
    if constraint == "max_part":
        return bool(parts) and parts[0] == k
    if constraint == "min_part":
        return bool(parts) and parts[-1] == k
    raise ValueError(f"unknown constraint {constraint!r}")


def count_constrained(
    n: int, family: str = "P", constraint: str = "none", k: int | None = None
) -> int:
    """Count partitions of n in family "P" (all) or "S" (strict) under a constraint.

    The empty partition of 0 satisfies "none", "parts_below" and "parts_above"
    vacuously, and never satisfies "max_part" or "min_part".
    """
    if family == "P":
        source = enumerate_partitions(n)
    elif family == "S":
        source = enumerate_strict(n)
    else:
        raise ValueError(f"family must be 'P' or 'S', got {family!r}")
    if constraint not in CONSTRAINTS:
        raise ValueError(f"unknown constraint {constraint!r}")
    return sum(1 for parts in source if _matches(parts, constraint, k))


def p_oracle(n: int) -> int:
    """p(n) by enumeration."""
    return count_constrained(n, "P", "none")


def s_oracle(n: int) -> int:
    """Number of strict partitions of n, by enumeration."""
    return count_constrained(n, "S", "none")


def max_part_histogram(n: int, family: str = "P") -> dict[int, int]:
    """Map largest part -> count, over all nonempty partitions of n.

    One enumeration pass; cheaper than calling count_constrained per k when a
    whole profile is needed.
    """
    source = enumerate_partitions(n) if family == "P" else enumerate_strict(n)
    hist: dict[int, int] = {}
    for parts in source:
        if parts:
            hist[parts[0]] = hist.get(parts[0], 0) + 1
    return hist
