"""Compact enumeration and exact counting of Horn-formula models.

The model set of a Horn instance is produced as a disjoint union of
{0,1,2,n}-valued rows, from which total counts, per-size counts and the
models themselves follow cheaply.  See the README for a tour.
"""

from .closure import (
    FeasibilityChecker,
    SigmaClosure,
    close,
    extra_feasible_eq_noncover,
    extra_feasible_le,
    feasible,
    satisfiable,
)
from .counting import (
    CountReport,
    StrategyError,
    count,
    f_vector,
    force_violations,
    ie_model_count,
)
from .engine import (
    CollectRows,
    CountSink,
    EngineStats,
    EnumerationCapExceeded,
    FVectorSink,
    KSpec,
    ModelSink,
    PolicyPreconditionError,
    PrunePolicy,
    StackFrame,
    TraceStep,
    collect_rows,
    enumerate_models,
    run,
    trace,
)
from .impose import (
    ImpositionResult,
    Outcome,
    impose,
    impose_implication,
    impose_negative_clause,
    satisfies_all_members,
    satisfies_some_member,
)
from .instance import (
    Constraint,
    HornInstance,
    Implication,
    NegativeClause,
    NotHornError,
    ParseError,
    UnsatisfiableInputError,
    imp,
    merge_premises,
    nc,
    normalize,
    order_by_size,
    parse_dimacs,
    parse_native,
    serialize,
    unit_split,
)
from .oracle import oracle_count, oracle_f_vector, oracle_models
from .rows import Row, canonicalize

__version__ = "0.1.0"

__all__ = [
    "CollectRows",
    "Constraint",
    "CountReport",
    "CountSink",
    "EngineStats",
    "EnumerationCapExceeded",
    "FVectorSink",
    "FeasibilityChecker",
    "HornInstance",
    "Implication",
    "ImpositionResult",
    "KSpec",
    "ModelSink",
    "NegativeClause",
    "NotHornError",
    "Outcome",
    "ParseError",
    "PolicyPreconditionError",
    "PrunePolicy",
    "Row",
    "SigmaClosure",
    "StackFrame",
    "StrategyError",
    "TraceStep",
    "UnsatisfiableInputError",
    "canonicalize",
    "close",
    "collect_rows",
    "count",
    "enumerate_models",
    "extra_feasible_eq_noncover",
    "extra_feasible_le",
    "f_vector",
    "feasible",
    "force_violations",
    "ie_model_count",
    "imp",
    "impose",
    "impose_implication",
    "impose_negative_clause",
    "merge_premises",
    "nc",
    "normalize",
    "oracle_count",
    "oracle_f_vector",
    "oracle_models",
    "order_by_size",
    "parse_dimacs",
    "parse_native",
    "run",
    "satisfiable",
    "satisfies_all_members",
    "satisfies_some_member",
    "serialize",
    "trace",
    "unit_split",
]
