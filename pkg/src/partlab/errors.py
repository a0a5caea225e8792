"""Shared exception types.

Everything raised on purpose by this package derives from PartlabError, so
callers (in particular the CLI) can distinguish our invariant failures from
plain bugs.
"""


class PartlabError(Exception):
    """Base class for all partlab errors."""


class OracleLimitError(PartlabError):
    """Enumeration request beyond the practical desk limit (n > 80)."""


class InvalidPartition(PartlabError):
    """Sequence is not a valid (strict) partition in canonical form."""


class NonIntegralDivision(PartlabError):
    """An exact-division step produced a remainder; the recurrence is broken."""


class AmbiguousRule(PartlabError):
    """More than one rewrite rule applies to a ground atom."""


class NoRuleApplies(PartlabError):
    """No rewrite rule applies to a ground atom that must be reduced."""


class BudgetExceeded(PartlabError):
    """A recursion chain, reachable set, or path enumeration outgrew its budget."""


class CyclicReduction(PartlabError):
    """Reduction graph contains a cycle; coefficient extraction is undefined."""


class InvalidCode(PartlabError):
    """Path code without any 1-bit where one is required."""


class NotInDomain(PartlabError):
    """Code lies outside the domain of the requested involution."""
