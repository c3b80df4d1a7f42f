"""Depth-first constraint imposition over a LIFO stack of rows.

Starting from the full row (every position free), constraints are imposed
one at a time: the top frame of the working stack is popped, its pending
constraint imposed on its row, and the sons pushed back with the pointer
advanced.  Rows that have absorbed the whole constraint list are *final*;
final rows are pairwise disjoint and their union is exactly the model
set, whatever pruning policy is active.

Pruning policies drop sons that provably contain no model relevant to
the query, before they are pushed:

* ``none``              delete only rows with no satisfying member at all.
* ``weak``              drop sons failing some pending constraint for
                        every member (cheap per-constraint screen).
* ``feasible``          drop infeasible sons; no row is ever deleted after.
* ``extra-le(k)``       keep only sons containing a model of size <= k.
* ``extra-eq-noncover(k)``  pure negative-clause instances with h <= w and
                        k <= w - h: keep sons containing a k-element model.
* ``extra-eq-ie(k)``    unit-implication instances: keep sons whose exact
                        size-k model count (inclusion-exclusion) is > 0.

Sons are pushed in reverse emission order so the first-emitted son is
processed first; finalized rows reach the sink in emission order.  The
answer is policy-independent; only the statistics differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .closure import FeasibilityChecker, extra_feasible_eq_noncover
from .impose import Outcome, impose, satisfies_some_member
from .instance import HornInstance
from .rows import Row, VarSet


class PolicyPreconditionError(ValueError):
    """The instance does not meet the chosen policy's preconditions."""


class EnumerationCapExceeded(RuntimeError):
    """Model enumeration would emit more members than the configured cap."""


IE_CONSTRAINT_LIMIT = 20  # inclusion-exclusion enumerates 2**h subsets

DEFAULT_ENUM_CAP = 10**7


@dataclass(frozen=True)
class PrunePolicy:
    kind: str
    k: int | None = None

    @classmethod
    def none(cls) -> "PrunePolicy":
        return cls("none")

    @classmethod
    def weak(cls) -> "PrunePolicy":
        return cls("weak")

    @classmethod
    def feasible(cls) -> "PrunePolicy":
        return cls("feasible")

    @classmethod
    def extra_le(cls, k: int) -> "PrunePolicy":
        return cls("extra-le", k)

    @classmethod
    def extra_eq_noncover(cls, k: int) -> "PrunePolicy":
        return cls("extra-eq-noncover", k)

    @classmethod
    def extra_eq_ie(cls, k: int) -> "PrunePolicy":
        return cls("extra-eq-ie", k)

    def __str__(self) -> str:
        return self.kind if self.k is None else f"{self.kind}({self.k})"


@dataclass
class EngineStats:
    impositions: int = 0
    deletions: int = 0
    pruned: int = 0
    s_max: int = 0
    max_stack_depth: int = 0
    final_rows: int = 0

    def as_dict(self) -> dict:
        return {
            "impositions": self.impositions,
            "deletions": self.deletions,
            "pruned": self.pruned,
            "s_max": self.s_max,
            "max_stack_depth": self.max_stack_depth,
            "final_rows": self.final_rows,
        }


@dataclass(frozen=True)
class KSpec:
    """Which model sizes a count or enumeration should include."""

    kind: str  # "all" | "le" | "ge" | "eq"
    k: int | None = None

    @classmethod
    def all(cls) -> "KSpec":
        return cls("all")

    @classmethod
    def le(cls, k: int) -> "KSpec":
        return cls("le", k)

    @classmethod
    def ge(cls, k: int) -> "KSpec":
        return cls("ge", k)

    @classmethod
    def eq(cls, k: int) -> "KSpec":
        return cls("eq", k)

    def row_count(self, r: Row) -> int:
        if self.kind == "all":
            return r.cardinality()
        if self.kind == "le":
            return r.card_le_k(self.k)
        if self.kind == "eq":
            return r.card_k(self.k)
        if self.kind == "ge":
            return r.cardinality() - (r.card_le_k(self.k - 1) if self.k > 0 else 0)
        raise ValueError(f"unknown size filter {self.kind!r}")

    def row_members(self, r: Row) -> Iterator[VarSet]:
        if self.kind == "all":
            return r.members()
        if self.kind == "le":
            return r.members_le(self.k)
        if self.kind == "eq":
            return r.members_k(self.k)
        raise ValueError(f"cannot enumerate with size filter {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.k is None else f"{self.kind} {self.k}"


# --- sinks -------------------------------------------------------------------


class CollectRows:
    """Keep every final row, in emission order."""

    def __init__(self):
        self.rows: list[Row] = []

    def accept(self, r: Row) -> None:
        self.rows.append(r)


class CountSink:
    """Accumulate the member count of every final row; rows are dropped."""

    def __init__(self, kspec: KSpec = KSpec.all()):
        self.kspec = kspec
        self.n = 0

    def accept(self, r: Row) -> None:
        self.n += self.kspec.row_count(r)


class FVectorSink:
    """Accumulate per-size counts over all final rows."""

    def __init__(self, w: int):
        self.vector = [0] * (w + 1)

    def accept(self, r: Row) -> None:
        for k, c in enumerate(r.card_profile()):
            self.vector[k] += c

    @property
    def n(self) -> int:
        return sum(self.vector)


class ModelSink:
    """Stream the members of every final row through a callback.

    Refuses to expand a row once the running member count would exceed
    ``cap``; counting is always safe, materializing models is not.
    """

    def __init__(
        self,
        emit: Callable[[VarSet], None],
        kspec: KSpec = KSpec.all(),
        cap: int = DEFAULT_ENUM_CAP,
    ):
        self.emit = emit
        self.kspec = kspec
        self.cap = cap
        self.count = 0

    def accept(self, r: Row) -> None:
        self.count += self.kspec.row_count(r)
        if self.count > self.cap:
            raise EnumerationCapExceeded(
                f"enumeration would exceed the cap of {self.cap} models"
            )
        for x in self.kspec.row_members(r):
            self.emit(x)


# --- the driver --------------------------------------------------------------


@dataclass(frozen=True)
class StackFrame:
    row: Row
    pc: int  # 1-based index of the next constraint to impose; h+1 = final


@dataclass(frozen=True)
class TraceStep:
    step: int
    pc: int  # constraint index that was imposed (0 for a rejected root)
    row: Row
    outcome: Outcome | str
    sons: tuple[Row, ...]
    stack: tuple[StackFrame, ...]  # top frame first


def validate_policy(inst: HornInstance, policy: PrunePolicy) -> None:
    kind, k = policy.kind, policy.k
    if kind in ("none", "weak", "feasible"):
        return
    if k is None or not 0 <= k <= inst.w:
        raise PolicyPreconditionError(f"policy {policy} needs 0 <= k <= {inst.w}")
    if kind == "extra-le":
        return
    if kind == "extra-eq-noncover":
        if inst.sigma:
            raise PolicyPreconditionError(
                "extra-eq-noncover needs an implication-free instance"
            )
        if inst.h > inst.w or k > inst.w - inst.h:
            raise PolicyPreconditionError(
                f"extra-eq-noncover needs h <= w and k <= w - h "
                f"(h={inst.h}, w={inst.w}, k={k})"
            )
        return
    if kind == "extra-eq-ie":
        bad = [c for c in inst.sigma if len(c.conclusion) != 1]
        if bad:
            raise PolicyPreconditionError(
                f"extra-eq-ie needs unit implications; offending: {bad[0]}"
            )
        if inst.h > IE_CONSTRAINT_LIMIT:
            raise PolicyPreconditionError(
                f"extra-eq-ie handles at most {IE_CONSTRAINT_LIMIT} constraints (h={inst.h})"
            )
        return
    raise PolicyPreconditionError(f"unknown policy kind {kind!r}")


def _make_admit(inst: HornInstance, policy: PrunePolicy):
    """A predicate admit(row, next_pc): may this son still serve the query?

    ``next_pc`` is the son's pending-constraint pointer; constraints before
    it are already satisfied by every member of the row.
    """
    kind, k = policy.kind, policy.k
    constraints = inst.constraints
    if kind == "none":
        return lambda r, next_pc: True
    if kind == "weak":
        def admit(r: Row, next_pc: int) -> bool:
            return all(
                satisfies_some_member(r, c) for c in constraints[next_pc - 1 :]
            )
        return admit
    if kind == "feasible":
        checker = FeasibilityChecker(inst)
        return lambda r, next_pc: checker.feasible(r)
    if kind == "extra-le":
        checker = FeasibilityChecker(inst)
        return lambda r, next_pc: checker.extra_feasible_le(r, k)
    if kind == "extra-eq-noncover":
        def admit(r: Row, next_pc: int) -> bool:
            return extra_feasible_eq_noncover(constraints[next_pc - 1 :], r, k)
        return admit
    if kind == "extra-eq-ie":
        from .counting import _ie_count  # deferred: counting drives the engine

        def admit(r: Row, next_pc: int) -> bool:
            return _ie_count(r, constraints[next_pc - 1 :], k) > 0
        return admit
    raise PolicyPreconditionError(f"unknown policy kind {kind!r}")


def run(
    inst: HornInstance,
    sink,
    policy: PrunePolicy = PrunePolicy.none(),
    on_step: Callable[[TraceStep], None] | None = None,
) -> EngineStats:
    """Impose all constraints depth-first, routing final rows to the sink."""
    validate_policy(inst, policy)
    admit = _make_admit(inst, policy)
    stats = EngineStats()
    h = inst.h
    root = Row.all_twos(inst.w)
    if not admit(root, 1):
        stats.pruned += 1
        if on_step is not None:
            on_step(TraceStep(0, 0, root, "pruned-root", (), ()))
        return stats
    stack: list[StackFrame] = []
    if h == 0:
        stats.final_rows += 1
        sink.accept(root)
    else:
        stack.append(StackFrame(root, 1))
        stats.max_stack_depth = 1
    step = 0
    while stack:
        frame = stack.pop()
        row, pc = frame.row, frame.pc
        result = impose(row, inst.constraints[pc - 1])
        step += 1
        stats.impositions += 1
        stats.s_max = max(stats.s_max, len(result.sons))
        if result.outcome is Outcome.DELETED:
            stats.deletions += 1
            kept: tuple[Row, ...] = ()
        else:
            kept = tuple(son for son in result.sons if admit(son, pc + 1))
            stats.pruned += len(result.sons) - len(kept)
        if pc == h:
            for son in kept:
                stats.final_rows += 1
                sink.accept(son)
        else:
            for son in reversed(kept):
                stack.append(StackFrame(son, pc + 1))
            stats.max_stack_depth = max(stats.max_stack_depth, len(stack))
        if on_step is not None:
            on_step(
                TraceStep(step, pc, row, result.outcome, kept, tuple(reversed(stack)))
            )
    # working space stays within the fan-out bound
    assert stats.max_stack_depth <= h * stats.s_max + h
    return stats


def collect_rows(
    inst: HornInstance, policy: PrunePolicy = PrunePolicy.none()
) -> tuple[list[Row], EngineStats]:
    """All final rows plus run statistics."""
    sink = CollectRows()
    stats = run(inst, sink, policy)
    return sink.rows, stats


def trace(
    inst: HornInstance, policy: PrunePolicy = PrunePolicy.none()
) -> list[TraceStep]:
    """Deterministic replay of a run, one snapshot per imposition."""
    steps: list[TraceStep] = []
    run(inst, CollectRows(), policy, on_step=steps.append)
    return steps


def enumerate_models(
    inst: HornInstance,
    kspec: KSpec = KSpec.all(),
    policy: PrunePolicy | None = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> Iterator[VarSet]:
    """Yield every model (optionally size-filtered), each exactly once.

    The engine runs to completion first; members are then streamed per
    final row, so memory stays proportional to the row count, not the
    model count.  Raises :class:`EnumerationCapExceeded` once the running
    member count would pass ``cap``.
    """
    if policy is None:
        policy = (
            PrunePolicy.extra_le(kspec.k) if kspec.kind in ("le", "eq")
            else PrunePolicy.feasible()
        )
    rows = CollectRows()
    run(inst, rows, policy)
    count = 0
    for r in rows.rows:
        count += kspec.row_count(r)
        if count > cap:
            raise EnumerationCapExceeded(
                f"enumeration would exceed the cap of {cap} models"
            )
        yield from kspec.row_members(r)
