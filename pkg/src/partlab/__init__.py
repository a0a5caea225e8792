"""Exact integer-partition arithmetic: six counting engines, the pentagonal
and integrated coefficient series with their divisor-sum recurrences, a small
rewrite-system framework whose reduction graphs turn composite recurrences
into direct ones, and the binary path codes carrying the sign-cancellation
combinatorics underneath.

Everything is exact integer arithmetic end to end; any division is checked
and raises if it would truncate.
"""

from .budget import ENV_VAR as BUDGET_ENV_VAR
from .coefficients import (
    CoeffSeq,
    c_from_product,
    c_from_recurrence,
    e_from_recurrence,
    euler_e,
    euler_product,
    euler_seq,
    f_equals_e_predicate,
    integrated_f,
    pentagonal_index,
    pentagonal_pairs,
    sigma,
    sigma_table,
)
from .codes import (
    Classification,
    DecodedWalk,
    Lemma51Report,
    PathCode,
    classify,
    code_of_path,
    decode_path,
    edge_count,
    enumerate_Bj,
    from_strict_partition,
    involution,
    lemma51,
    pentagonal_codes,
    polarity,
    split_valuation,
    to_strict_partition,
    valuation,
)
from .dag import (
    AuxVertex,
    Dag,
    DagEdge,
    ExtractedRecurrence,
    RootVertex,
    TerminalVertex,
    TerminatingPath,
    build_dag,
    emit_dot,
    enumerate_terminating_paths,
    extract_coefficients,
    extract_from_dag,
    grouped_path_sums,
    signed_multiplicities,
)
from .engines import (
    BoundedEngine,
    EngineKind,
    EulerEngine,
    IntegralEngine,
    MaxPartEngine,
    MinPartEngine,
    SigmaEngine,
    make_engine,
    p_all,
    p_bounded,
    p_euler,
    p_integral,
    p_maxpart,
    p_minpart,
    p_sigma,
)
from .errors import (
    AmbiguousRule,
    BudgetExceeded,
    CyclicReduction,
    InvalidCode,
    InvalidPartition,
    NoRuleApplies,
    NonIntegralDivision,
    NotInDomain,
    OracleLimitError,
    PartlabError,
)
from .oracle import (
    ORACLE_CAP,
    count_constrained,
    enumerate_partitions,
    enumerate_strict,
    max_part_histogram,
    p_oracle,
    s_oracle,
    validate_partition,
)
from .rewrite import (
    Auxiliary,
    BUILTIN_NAMES,
    OrthogonalityReport,
    Primary,
    Region,
    Rule,
    RuleKind,
    RewriteSystem,
    UnitarityReport,
    builtin_system,
    check_orthogonal,
    check_unitary,
    eval_atom,
    ground_rule,
    overlapping_minpart_rules,
)
from .verify import Check, SUITES, VerifyConfig, VerifyReport, run as run_verify

__version__ = "0.1.0"

__all__ = [
    "AmbiguousRule",
    "Auxiliary",
    "AuxVertex",
    "BUILTIN_NAMES",
    "BoundedEngine",
    "BudgetExceeded",
    "BUDGET_ENV_VAR",
    "Check",
    "Classification",
    "CoeffSeq",
    "CyclicReduction",
    "Dag",
    "DagEdge",
    "DecodedWalk",
    "EngineKind",
    "EulerEngine",
    "ExtractedRecurrence",
    "IntegralEngine",
    "InvalidCode",
    "InvalidPartition",
    "Lemma51Report",
    "MaxPartEngine",
    "MinPartEngine",
    "NoRuleApplies",
    "NonIntegralDivision",
    "NotInDomain",
    "ORACLE_CAP",
    "OracleLimitError",
    "OrthogonalityReport",
    "PartlabError",
    "PathCode",
    "Primary",
    "Region",
    "RootVertex",
    "Rule",
    "RuleKind",
    "RewriteSystem",
    "SUITES",
    "SigmaEngine",
    "TerminalVertex",
    "TerminatingPath",
    "UnitarityReport",
    "VerifyConfig",
    "VerifyReport",
    "build_dag",
    "builtin_system",
    "c_from_product",
    "c_from_recurrence",
    "check_orthogonal",
    "check_unitary",
    "classify",
    "code_of_path",
    "count_constrained",
    "decode_path",
    "e_from_recurrence",
    "edge_count",
    "emit_dot",
    "enumerate_Bj",
    "enumerate_partitions",
    "enumerate_strict",
    "enumerate_terminating_paths",
    "euler_e",
    "euler_product",
    "euler_seq",
    "eval_atom",
    "extract_coefficients",
    "extract_from_dag",
    "f_equals_e_predicate",
    "from_strict_partition",
    "ground_rule",
    "grouped_path_sums",
    "integrated_f",
    "involution",
    "lemma51",
    "make_engine",
    "max_part_histogram",
    "overlapping_minpart_rules",
    "p_all",
    "p_bounded",
    "p_euler",
    "p_integral",
    "p_maxpart",
    "p_minpart",
    "p_oracle",
    "p_sigma",
    "pentagonal_codes",
    "pentagonal_index",
    "pentagonal_pairs",
    "polarity",
    "run_verify",
    "s_oracle",
    "sigma",
    "sigma_table",
    "split_valuation",
    "to_strict_partition",
    "validate_partition",
    "valuation",
]
