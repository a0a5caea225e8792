"""Recurrence systems as guarded rewrite rules.

A recurrence atom is either Primary(n), the count being defined, or
Auxiliary(n, k), a helper count with one extra argument. A rule rewrites one
atom family into a constant plus a signed fan of atoms, guarded by a domain
predicate over the atom's arguments:

  primary      Primary(n)      -> constant + signed Primary atoms
  startup      Primary(n)      -> constant + signed Auxiliary atoms
  auxiliary    Auxiliary(n, k) -> constant + signed Auxiliary atoms
  termination  Auxiliary(n, k) -> constant + signed Primary atoms

Rules split into two groups: R1 = primary + startup rules (they fire on
primary atoms) and R2 = auxiliary + termination rules (on auxiliary atoms).
A system is orthogonal on a region when at most one rule of the owning group
applies to each ground atom there, and unitary when every ground fan uses
coefficients in {-1, 0, 1} with pairwise distinct targets. check_orthogonal
and check_unitary report violations as data; eval_atom and the DAG builder
assume both properties and raise AmbiguousRule when orthogonality breaks.

A startup rule may degenerate at particular arguments to an empty fan; such a
ground instance behaves exactly like a primary one (constant only).

Domain predicates and fan bodies are plain Python callables taking n (for
primary-family rules) or n, k (for auxiliary-family ones). There is no
pattern language; a rule family is one callable pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Union

from . import budget
from .errors import AmbiguousRule, BudgetExceeded, NoRuleApplies


@dataclass(frozen=True)
class Primary:
    n: int

    def __repr__(self) -> str:
        return f"P({self.n})"


@dataclass(frozen=True)
class Auxiliary:
    n: int
    k: int

    def __repr__(self) -> str:
        return f"A({self.n},{self.k})"


Atom = Union[Primary, Auxiliary]
Fan = tuple[tuple[int, Atom], ...]
MemoTable = dict[Atom, int]  # write-once per key


class RuleKind(str, Enum):
    PRIMARY = "primary"
    STARTUP = "startup"
    AUXILIARY = "auxiliary"
    TERMINATION = "termination"


_LHS_PRIMARY = (RuleKind.PRIMARY, RuleKind.STARTUP)
_RHS_FAMILY = {
    RuleKind.PRIMARY: Primary,
    RuleKind.STARTUP: Auxiliary,
    RuleKind.AUXILIARY: Auxiliary,
    RuleKind.TERMINATION: Primary,
}


@dataclass(frozen=True)
class Rule:
    """One parameterized rule family.

    domain and body receive the atom arguments: (n,) when the left side is a
    primary atom, (n, k) when auxiliary. body returns (constant, fan).
    """

    name: str
    kind: RuleKind
    domain: Callable[..., bool]
    body: Callable[..., tuple[int, Fan]]

    @property
    def lhs_primary(self) -> bool:
        return self.kind in _LHS_PRIMARY

    def matches(self, atom: Atom) -> bool:
        if isinstance(atom, Primary):
            return self.lhs_primary and bool(self.domain(atom.n))
        return not self.lhs_primary and bool(self.domain(atom.n, atom.k))


@dataclass(frozen=True)
class GroundRule:
    rule_name: str
    kind: RuleKind
    source: Atom
    constant: int
    fan: Fan


@dataclass(frozen=True)
class RewriteSystem:
    name: str
    rules: tuple[Rule, ...]

    def group(self, atom: Atom) -> tuple[Rule, ...]:
        """The rules whose group owns this atom family (R1 or R2)."""
        primary = isinstance(atom, Primary)
        return tuple(r for r in self.rules if r.lhs_primary == primary)

    def rules_of_kind(self, kind: RuleKind) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.kind == kind)


def _ground(rule: Rule, atom: Atom) -> GroundRule:
    args = (atom.n,) if isinstance(atom, Primary) else (atom.n, atom.k)
    constant, fan = rule.body(*args)
    family = _RHS_FAMILY[rule.kind]
    for sign, target in fan:
        if not isinstance(target, family):
            raise ValueError(
                f"rule {rule.name!r} ({rule.kind.value}) produced a "
                f"{type(target).__name__} target at {atom!r}"
            )
    return GroundRule(rule.name, rule.kind, atom, constant, tuple(fan))


def ground_rule(system: RewriteSystem, atom: Atom) -> GroundRule | None:
    """Instantiate the unique applicable rule at atom, or None.

    Raises AmbiguousRule when several rules of the owning group apply.
    """
    matching = [r for r in system.group(atom) if r.matches(atom)]
    if len(matching) > 1:
        names = ", ".join(r.name for r in matching)
        raise AmbiguousRule(f"{system.name}: rules [{names}] all apply at {atom!r}")
    if not matching:
        return None
    return _ground(matching[0], atom)


@dataclass(frozen=True)
class Region:
    """Inclusive argument bounds for the hygiene checks."""

    n_max: int
    k_max: int
    n_min: int = 0
    k_min: int = 0

    def primaries(self) -> Iterator[Primary]:
        for n in range(self.n_min, self.n_max + 1):
            yield Primary(n)

    def auxiliaries(self) -> Iterator[Auxiliary]:
        for n in range(self.n_min, self.n_max + 1):
            for k in range(self.k_min, self.k_max + 1):
                yield Auxiliary(n, k)

    def atoms(self) -> Iterator[Atom]:
        yield from self.primaries()
        yield from self.auxiliaries()


@dataclass
class UnitarityReport:
    system: str
    region: Region
    violations: list[tuple[Atom, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class OrthogonalityReport:
    system: str
    region: Region
    overlaps: list[tuple[Atom, tuple[str, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.overlaps


def check_unitary(system: RewriteSystem, region: Region) -> UnitarityReport:
    """Ground every applicable rule on the region; flag non-unit coefficients
    and repeated fan targets."""
    report = UnitarityReport(system.name, region)
    for atom in region.atoms():
        for rule in system.group(atom):
            if not rule.matches(atom):
                continue
            ground = _ground(rule, atom)
            seen: set[Atom] = set()
            for sign, target in ground.fan:
                if sign not in (-1, 0, 1):
                    report.violations.append(
                        (atom, rule.name, f"coefficient {sign} for {target!r}")
                    )
                if target in seen:
                    report.violations.append(
                        (atom, rule.name, f"repeated target {target!r}")
                    )
                seen.add(target)
    return report


def check_orthogonal(system: RewriteSystem, region: Region) -> OrthogonalityReport:
    """Flag ground atoms where more than one rule of the owning group applies."""
    report = OrthogonalityReport(system.name, region)
    for atom in region.atoms():
        names = tuple(r.name for r in system.group(atom) if r.matches(atom))
        if len(names) > 1:
            report.overlaps.append((atom, names))
    return report


def _chain_limit(atom: Atom, explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    override = budget.env_budget()
    if override is not None:
        return override
    k = atom.k if isinstance(atom, Auxiliary) else 0
    return 10 * (abs(atom.n) + abs(k) + 1)


def eval_atom(
    system: RewriteSystem,
    atom: Atom,
    memo: MemoTable | None = None,
    chain_budget: int | None = None,
) -> int:
    """Exact value of an atom under the system, memoized into memo.

    The recursion is run on an explicit stack. A chain is a run of rule
    applications between primary atoms; primary atoms restart the chain
    (their values memoize whole). Each chain may apply at most
    10 * (|n| + |k| + 1) rules, measured at the atom that started it,
    unless chain_budget or PLAB_BUDGET overrides the bound. Exceeding it, or
    revisiting an atom already under evaluation, raises BudgetExceeded; the
    built-in systems never come near the default bound.
    """
    if memo is None:
        memo = {}
    if atom in memo:
        return memo[atom]

    in_progress: set[Atom] = set()
    stack: list[list] = []  # [atom, ground, fan index, acc, depth, limit]

    def push(target: Atom, depth: int, limit: int) -> None:
        if target in in_progress:
            raise BudgetExceeded(f"{system.name}: cyclic reduction through {target!r}")
        if isinstance(target, Primary):
            depth, limit = 1, _chain_limit(target, chain_budget)
        else:
            depth += 1
        if depth > limit:
            raise BudgetExceeded(
                f"{system.name}: chain exceeded {limit} applications at {target!r}"
            )
        ground = ground_rule(system, target)
        if ground is None:
            raise NoRuleApplies(f"{system.name}: no rule applies at {target!r}")
        in_progress.add(target)
        stack.append([target, ground, 0, ground.constant, depth, limit])

    push(atom, 0, _chain_limit(atom, chain_budget))
    while stack:
        frame = stack[-1]
        ground: GroundRule = frame[1]
        if frame[2] == len(ground.fan):
            memo[frame[0]] = frame[3]
            in_progress.discard(frame[0])
            stack.pop()
            continue
        sign, target = ground.fan[frame[2]]
        if target in memo:
            frame[2] += 1
            frame[3] += sign * memo[target]
        else:
            push(target, frame[4], frame[5])
    return memo[atom]


# ---------------------------------------------------------------------------
# Built-in systems


def _minpart_system() -> RewriteSystem:
    return RewriteSystem(
        "minpart",
        (
            Rule("base", RuleKind.PRIMARY, lambda n: n == 0, lambda n: (1, ())),
            Rule(
                "expand",
                RuleKind.STARTUP,
                lambda n: n > 0,
                lambda n: (0, tuple((1, Auxiliary(n, i)) for i in range(1, n + 1))),
            ),
            Rule(
                "ones",
                RuleKind.TERMINATION,
                lambda n, k: n > 0 and k == 1,
                lambda n, k: (0, ((1, Primary(n - 1)),)),
            ),
            Rule(
                "step",
                RuleKind.AUXILIARY,
                lambda n, k: 2 <= k <= n,
                lambda n, k: (0, ((1, Auxiliary(n - 1, k - 1)), (-1, Auxiliary(n - k, k - 1)))),
            ),
            Rule("void", RuleKind.TERMINATION, lambda n, k: k > n, lambda n, k: (0, ())),
        ),
    )


def _bounded_system() -> RewriteSystem:
    # The two termination guards split (k = 2, n >= 2) from (k > n) so that
    # the small arguments (0, 2) and (1, 2) stay single-ruled.
    return RewriteSystem(
        "bounded",
        (
            Rule("small", RuleKind.PRIMARY, lambda n: 0 <= n <= 1, lambda n: (1, ())),
            Rule(
                "split",
                RuleKind.STARTUP,
                lambda n: n >= 2,
                lambda n: (1, ((1, Auxiliary(n, n)),)),
            ),
            Rule(
                "ones",
                RuleKind.TERMINATION,
                lambda n, k: k == 2 and n >= 2,
                lambda n, k: (1, ()),
            ),
            Rule(
                "tail",
                RuleKind.AUXILIARY,
                lambda n, k: 3 <= k <= n,
                lambda n, k: (
                    0,
                    tuple(
                        (1, Auxiliary(n - m * (k - 1), k - 1))
                        for m in range(0, n // (k - 1) + 1)
                    ),
                ),
            ),
            Rule(
                "all",
                RuleKind.TERMINATION,
                lambda n, k: k > n,
                lambda n, k: (0, ((1, Primary(n)),)),
            ),
        ),
    )


def _maxpart_system(completion: bool) -> RewriteSystem:
    rules = [
        # One startup family; at n <= 1 its fan is empty, a primary instance.
        Rule(
            "expand",
            RuleKind.STARTUP,
            lambda n: n >= 0,
            lambda n: (1, tuple((1, Auxiliary(n, k)) for k in range(2, n + 1))),
        ),
        Rule(
            "single",
            RuleKind.TERMINATION,
            lambda n, k: 2 <= k <= n <= 2 * k,
            lambda n, k: (0, ((1, Primary(n - k)),)),
        ),
        Rule(
            "shift",
            RuleKind.AUXILIARY,
            lambda n, k: k >= 2 and n > 2 * k,
            lambda n, k: (0, ((1, Auxiliary(n + 1, k + 1)), (-1, Auxiliary(n - k, k + 1)))),
        ),
    ]
    if completion:
        rules.append(
            Rule(
                "one",
                RuleKind.TERMINATION,
                lambda n, k: k == 1 and n > 0,
                lambda n, k: (1, ()),
            )
        )
        rules.append(
            Rule("void", RuleKind.TERMINATION, lambda n, k: k > n, lambda n, k: (0, ()))
        )
    name = "maxpart-completed" if completion else "maxpart"
    return RewriteSystem(name, tuple(rules))


BUILTIN_NAMES = ("minpart", "bounded", "maxpart")


def builtin_system(name: str, *, completion: bool = False) -> RewriteSystem:
    """One of the built-in systems: "minpart", "bounded", "maxpart".

    completion=True extends maxpart with the two optional rules that close
    its auxiliary domain (largest part 1, and k beyond n); the reduction
    analysis never needs them, so they default off.
    """
    if completion and name != "maxpart":
        raise ValueError(f"completion rules only exist for maxpart, not {name!r}")
    if name == "minpart":
        return _minpart_system()
    if name == "bounded":
        return _bounded_system()
    if name == "maxpart":
        return _maxpart_system(completion)
    raise ValueError(f"unknown system {name!r}; choose from {BUILTIN_NAMES}")


def overlapping_minpart_rules() -> RewriteSystem:
    """Deliberately non-orthogonal system, for the negative hygiene test.

    Reads the two classic smallest-part identities naively as rewrite rules:
    part removal with a free lower index, and the two-term split. Their
    domains overlap on every atom with 2 <= k < n, which check_orthogonal
    must detect.
    """
    return RewriteSystem(
        "minpart-naive",
        (
            Rule(
                "removal",
                RuleKind.AUXILIARY,
                lambda n, k: 1 <= k < n,
                lambda n, k: (
                    0,
                    tuple((1, Auxiliary(n - k, i)) for i in range(k, n - k + 1)),
                ),
            ),
            Rule(
                "split",
                RuleKind.AUXILIARY,
                lambda n, k: k >= 2,
                lambda n, k: (0, ((1, Auxiliary(n - 1, k - 1)), (-1, Auxiliary(n - k, k - 1)))),
            ),
        ),
    )
