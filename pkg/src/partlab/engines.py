"""Six independent exact evaluators for the partition count p(n).

Every engine memoizes into per-instance tables, grows them monotonically, and
counts recurrent-term reads in .recurrent_terms: each time a recurrence body
reads one previously computed table value, the counter increases by one.
Constants do not count. The counter is what makes the cost claims testable:
the euler engine touches O(sqrt n) terms per step, the integral engine
Theta(n), so euler's cumulative counter stays strictly below integral's from
n = 20 on.

Engines:

  euler     p(n) = sum_{k>0} e_k p(n-k)
  integral  p(n) = 1 + sum_{k>0} f_k p(n-k)
  sigma     p(n) = (1/n) sum_{k=1..n} sigma(k) p(n-k), division exact
  minpart   composite recurrence over counts by smallest part
  bounded   composite recurrence over counts with bounded parts
  maxpart   composite recurrence over counts by largest part; auxiliary
            steps increase both arguments and terminate within n - 2k steps

All engines agree with each other and with the enumeration oracle; the test
suite enforces this. Instances are single-threaded; share nothing between
threads.
"""

from __future__ import annotations

from enum import Enum

from . import budget
from .coefficients import integrated_f, pentagonal_pairs, sigma_table
from .errors import BudgetExceeded, NonIntegralDivision


class EngineKind(str, Enum):
    EULER = "euler"
    INTEGRAL = "integral"
    SIGMA = "sigma"
    MINPART = "minpart"
    BOUNDED = "bounded"
    MAXPART = "maxpart"

    def __str__(self) -> str:  # argparse-friendly
        return self.value


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


class EulerEngine:
    """Pentagonal recurrence; only pentagonal offsets contribute."""

    kind = EngineKind.EULER

    def __init__(self) -> None:
        self._p = [1]
        self.recurrent_terms = 0

    def p(self, n: int) -> int:
        _check_n(n)
        while len(self._p) <= n:
            m = len(self._p)
            total = 0
            for g, sign in pentagonal_pairs():
                if g > m:
                    break
                total += sign * self._p[m - g]
                self.recurrent_terms += 1
            self._p.append(total)
        return self._p[n]


class IntegralEngine:
    """Integrated recurrence p(n) = 1 + sum f_k p(n-k); skips zero f_k."""

    kind = EngineKind.INTEGRAL

    def __init__(self) -> None:
        self._p = [1]
        self._f: tuple[int, ...] = (-1,)
        self.recurrent_terms = 0

    def _f_upto(self, n: int) -> tuple[int, ...]:
        if len(self._f) <= n:
            self._f = integrated_f(max(n, 2 * len(self._f))).values
        return self._f

    def p(self, n: int) -> int:
        _check_n(n)
        f = self._f_upto(n)
        while len(self._p) <= n:
            m = len(self._p)
            total = 1
            for k in range(1, m + 1):
                if f[k] != 0:
                    total += f[k] * self._p[m - k]
                    self.recurrent_terms += 1
            self._p.append(total)
        return self._p[n]


class SigmaEngine:
    """Divisor-sum recurrence with checked exact division."""

    kind = EngineKind.SIGMA

    def __init__(self) -> None:
        self._p = [1]
        self._sigma = [0]
        self.recurrent_terms = 0

    def _sigma_upto(self, n: int) -> list[int]:
        if len(self._sigma) <= n:
            self._sigma = sigma_table(max(n, 2 * len(self._sigma)))
        return self._sigma

    def p(self, n: int) -> int:
        _check_n(n)
        sig = self._sigma_upto(n)
        while len(self._p) <= n:
            m = len(self._p)
            total = 0
            for k in range(1, m + 1):
                total += sig[k] * self._p[m - k]
                self.recurrent_terms += 1
            q, r = divmod(total, m)
            if r != 0:
                raise NonIntegralDivision(f"p({m}): {total} not divisible by {m}")
            self._p.append(q)
        return self._p[n]


class MinPartEngine:
    """Counts by smallest part.

    row_m[k] holds the number of partitions of m with smallest part k:
    row_m[1] = p(m-1), row_m[k] = row_{m-1}[k-1] - row_{m-k}[k-1], and the
    count is zero once k exceeds the argument. p(m) sums the row.
    """

    kind = EngineKind.MINPART

    def __init__(self) -> None:
        self._p = [1]
        self._rows: list[list[int]] = [[]]
        self.recurrent_terms = 0

    def p(self, n: int) -> int:
        _check_n(n)
        while len(self._p) <= n:
            m = len(self._p)
            row = [0, self._p[m - 1]]  # index 0 unused
            self.recurrent_terms += 1
            for k in range(2, m + 1):
                first = self._rows[m - 1][k - 1] if k - 1 <= m - 1 else 0
                second = self._rows[m - k][k - 1] if k - 1 <= m - k else 0
                self.recurrent_terms += 2
                row.append(first - second)
            self._rows.append(row)
            total = 0
            for k in range(1, m + 1):
                total += row[k]
                self.recurrent_terms += 1
            self._p.append(total)
        return self._p[n]


class BoundedEngine:
    """Counts with all parts below a bound.

    blt[k][j] holds the number of partitions of j with every part < k, for
    k >= 2. The table fills row-by-row in k; p(j) = 1 + blt[j][j] closes as
    soon as row j completes.
    """

    kind = EngineKind.BOUNDED

    def __init__(self) -> None:
        self._p = [1, 1]
        self._blt: dict[int, list[int]] = {}
        self._built = 1
        self.recurrent_terms = 0

    def _cell(self, k: int, j: int) -> int:
        if k > j:
            self.recurrent_terms += 1
            return self._p[j]
        if k == 2:
            return 1
        step = k - 1
        total = 0
        prev = self._blt[step]
        for m in range(0, j // step + 1):
            total += prev[j - m * step]
            self.recurrent_terms += 1
        return total

    def p(self, n: int) -> int:
        _check_n(n)
        if n <= 1:
            return 1
        if n > self._built:
            for k in range(2, n + 1):
                row = self._blt.setdefault(k, [])
                for j in range(len(row), n + 1):
                    row.append(self._cell(k, j))
                if len(self._p) == k:
                    self._p.append(1 + row[k])
                    self.recurrent_terms += 1
            self._built = n
        return self._p[n]


class MaxPartEngine:
    """Counts by largest part.

    aux(n, k) counts partitions of n with largest part exactly k. Outside the
    terminal wedge (n > 2k) the step aux(n, k) = aux(n+1, k+1) - aux(n-k, k+1)
    grows both arguments; n - 2k shrinks every step, so a chain from (n0, k0)
    terminates within n0 - 2k0 steps. The budget guard allows that plus a
    small slack and raises BudgetExceeded instead of looping.
    """

    kind = EngineKind.MAXPART

    def __init__(self, chain_slack: int = budget.MAXPART_CHAIN_SLACK) -> None:
        self._p = [1, 1]
        self._aux: dict[tuple[int, int], int] = {}
        self.chain_slack = chain_slack
        self.recurrent_terms = 0

    def _pmax(self, n0: int, k0: int) -> int:
        memo = self._aux
        if (n0, k0) in memo:
            return memo[(n0, k0)]
        override = budget.env_budget()
        limit = override if override is not None else max(0, n0 - 2 * k0) + self.chain_slack
        stack = [(n0, k0, 0)]
        while stack:
            n, k, depth = stack[-1]
            if depth > limit:
                raise BudgetExceeded(
                    f"maxpart chain from ({n0},{k0}) exceeded {limit} steps"
                )
            if (n, k) in memo:
                stack.pop()
                continue
            if n <= 2 * k:
                self.recurrent_terms += 1
                memo[(n, k)] = self._p[n - k]
                stack.pop()
                continue
            first, second = (n + 1, k + 1), (n - k, k + 1)
            pending = [c for c in (first, second) if c not in memo]
            if pending:
                for child in pending:
                    stack.append((child[0], child[1], depth + 1))
                continue
            self.recurrent_terms += 2
            memo[(n, k)] = memo[first] - memo[second]
            stack.pop()
        return memo[(n0, k0)]

    def p(self, n: int) -> int:
        _check_n(n)
        while len(self._p) <= n:
            m = len(self._p)
            total = 1
            for k in range(2, m + 1):
                total += self._pmax(m, k)
                self.recurrent_terms += 1
            self._p.append(total)
        return self._p[n]


_ENGINE_CLASSES = {
    EngineKind.EULER: EulerEngine,
    EngineKind.INTEGRAL: IntegralEngine,
    EngineKind.SIGMA: SigmaEngine,
    EngineKind.MINPART: MinPartEngine,
    EngineKind.BOUNDED: BoundedEngine,
    EngineKind.MAXPART: MaxPartEngine,
}


def make_engine(kind: EngineKind | str):
    return _ENGINE_CLASSES[EngineKind(kind)]()


def p_euler(n: int) -> int:
    return EulerEngine().p(n)


def p_integral(n: int) -> int:
    return IntegralEngine().p(n)


def p_sigma(n: int) -> int:
    return SigmaEngine().p(n)


def p_minpart(n: int) -> int:
    return MinPartEngine().p(n)


def p_bounded(n: int) -> int:
    return BoundedEngine().p(n)


def p_maxpart(n: int) -> int:
    return MaxPartEngine().p(n)


def p_all(n: int) -> dict[EngineKind, int]:
    """p(n) from every engine, keyed by kind."""
    return {kind: make_engine(kind).p(n) for kind in EngineKind}
