"""Exact model counting strategies and the per-size count vector.

All strategies return the same exact integer; they differ in pruning and
cost profile:

* ``direct``       one engine run, summing per-row counts.  Always
                   applicable.
* ``difference``   size-exactly-k as (count <= k) - (count <= k-1); two
                   engine runs with size-bounded pruning.
* ``noncover-eq``  size-exactly-k on implication-free instances with
                   h <= w and k <= w - h, using the cheap noncover test.
* ``ie-eq``        size-exactly-k after splitting implications to unit
                   form, pruning with an exact inclusion-exclusion count
                   per candidate row (2**h terms; h capped).

The inclusion-exclusion machinery rests on *forced-violation rows*: for a
set of unit constraints, the members of a row violating all of them form
a sub-row (or nothing), obtained by forcing premises and clause bodies in
and unit conclusions out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import (
    CountSink,
    EngineStats,
    FVectorSink,
    KSpec,
    PrunePolicy,
    run,
)
from .instance import (
    Constraint,
    HornInstance,
    Implication,
    NegativeClause,
    unit_split,
)
from .rows import Row

STRATEGIES = ("direct", "difference", "noncover-eq", "ie-eq")

IE_CONSTRAINT_LIMIT = 20


class StrategyError(ValueError):
    """Strategy not applicable to this size filter or instance shape."""


@dataclass(frozen=True)
class CountReport:
    n: int
    kspec: KSpec
    stats: EngineStats
    strategy: str
    policy: str
    f_vector: tuple[int, ...] | None = None


def count(
    inst: HornInstance,
    kspec: KSpec = KSpec.all(),
    strategy: str = "direct",
    policy: PrunePolicy | None = None,
    with_f_vector: bool = False,
) -> CountReport:
    """Count the models selected by ``kspec``, exactly.

    ``policy`` overrides the pruning policy for the direct strategy; the
    caller is responsible for choosing one that cannot drop rows holding
    selected models (any of none/weak/feasible is always safe).
    """
    if strategy == "direct":
        return _count_direct(inst, kspec, policy, with_f_vector)
    if with_f_vector:
        raise StrategyError("per-size vectors come from the direct strategy")
    if kspec.kind != "eq":
        raise StrategyError(f"strategy {strategy!r} only answers size-exactly queries")
    if strategy == "difference":
        return _count_difference(inst, kspec.k)
    if strategy == "noncover-eq":
        return _count_noncover_eq(inst, kspec.k)
    if strategy == "ie-eq":
        return _count_ie_eq(inst, kspec.k)
    raise StrategyError(f"unknown strategy {strategy!r}")


def _default_policy(kspec: KSpec, w: int) -> PrunePolicy:
    if kspec.kind == "le":
        # a bound beyond the universe is no bound; below zero nothing counts
        return PrunePolicy.extra_le(min(max(kspec.k, 0), w))
    return PrunePolicy.feasible()


def _count_direct(
    inst: HornInstance,
    kspec: KSpec,
    policy: PrunePolicy | None,
    with_f_vector: bool,
) -> CountReport:
    if policy is None:
        policy = _default_policy(kspec, inst.w)
    if with_f_vector:
        if kspec.kind != "all":
            raise StrategyError("per-size vectors only make sense unfiltered")
        sink = FVectorSink(inst.w)
        stats = run(inst, sink, policy)
        return CountReport(
            sink.n, kspec, stats, "direct", str(policy), tuple(sink.vector)
        )
    sink = CountSink(kspec)
    stats = run(inst, sink, policy)
    return CountReport(sink.n, kspec, stats, "direct", str(policy))


def _count_difference(inst: HornInstance, k: int) -> CountReport:
    upper = _count_direct(inst, KSpec.le(k), None, False)
    if k == 0:
        lower_n, lower_stats = 0, EngineStats()
    else:
        lower = _count_direct(inst, KSpec.le(k - 1), None, False)
        lower_n, lower_stats = lower.n, lower.stats
    stats = _merge_stats(upper.stats, lower_stats)
    return CountReport(
        upper.n - lower_n, KSpec.eq(k), stats, "difference", f"extra-le({k})/({k - 1})"
    )


def _count_noncover_eq(inst: HornInstance, k: int) -> CountReport:
    if inst.sigma:
        raise StrategyError("noncover-eq needs an implication-free instance")
    if inst.h > inst.w or k > inst.w - inst.h:
        raise StrategyError(
            f"noncover-eq needs h <= w and k <= w - h (h={inst.h}, w={inst.w}, k={k})"
        )
    policy = PrunePolicy.extra_eq_noncover(k)
    sink = CountSink(KSpec.eq(k))
    stats = run(inst, sink, policy)
    return CountReport(sink.n, KSpec.eq(k), stats, "noncover-eq", str(policy))


def _count_ie_eq(inst: HornInstance, k: int) -> CountReport:
    split = unit_split(inst)
    if split.h > IE_CONSTRAINT_LIMIT:
        raise StrategyError(
            f"ie-eq is limited to {IE_CONSTRAINT_LIMIT} constraints after unit "
            f"splitting (got {split.h})"
        )
    policy = PrunePolicy.extra_eq_ie(k)
    sink = CountSink(KSpec.eq(k))
    stats = run(split, sink, policy)
    return CountReport(sink.n, KSpec.eq(k), stats, "ie-eq", str(policy))


def _merge_stats(a: EngineStats, b: EngineStats) -> EngineStats:
    return EngineStats(
        impositions=a.impositions + b.impositions,
        deletions=a.deletions + b.deletions,
        pruned=a.pruned + b.pruned,
        s_max=max(a.s_max, b.s_max),
        max_stack_depth=max(a.max_stack_depth, b.max_stack_depth),
        final_rows=a.final_rows + b.final_rows,
    )


def f_vector(inst: HornInstance, policy: PrunePolicy | None = None) -> list[int]:
    """Number of models of each size 0..w; the entries sum to the model count."""
    sink = FVectorSink(inst.w)
    run(inst, sink, policy if policy is not None else PrunePolicy.feasible())
    return sink.vector


# --- forced-violation rows and inclusion-exclusion ---------------------------


def force_violations(r: Row, constraints: Iterable[Constraint]) -> Row | None:
    """The maximal sub-row of r whose members violate every constraint.

    Violating ``A -> {b}`` forces A in and b out; violating ``A*`` forces A
    in.  Only unit implications are allowed (larger conclusions do not
    pin down which variable is missing).  Returns None when the forcings
    contradict each other or the row.
    """
    forced_in: set[int] = set()
    forced_out: set[int] = set()
    for c in constraints:
        if isinstance(c, Implication):
            if len(c.conclusion) != 1:
                raise ValueError(f"implication {c} is not unit")
            forced_in |= c.premise
            forced_out |= c.conclusion
        elif isinstance(c, NegativeClause):
            forced_in |= c.body
        else:
            raise TypeError(f"not a constraint: {c!r}")
    if forced_in & forced_out or forced_in & r.zeros or forced_out & r.ones:
        return None
    zeros = set(r.zeros) | forced_out
    ones = set(r.ones) | forced_in
    twos = set(r.twos) - forced_in - forced_out
    bubbles = []
    for nb in r.bubbles:
        pinned_in = nb & forced_in
        pinned_out = nb & forced_out
        if pinned_in == nb:
            return None  # a whole bubble cannot be forced in
        rest = nb - pinned_in - pinned_out
        if pinned_out:
            twos |= rest  # exclusion satisfied, leftover is free
        elif pinned_in:
            if len(rest) == 1:
                zeros |= rest
            else:
                bubbles.append(rest)
        else:
            bubbles.append(nb)
    return Row(r.w, zeros=zeros, ones=ones, twos=twos, bubbles=bubbles)


def _ie_count(r: Row, constraints: Sequence[Constraint], k: int | None) -> int:
    """Members of r satisfying all constraints, by inclusion-exclusion.

    With an integer ``k`` only members of size exactly k are counted; with
    ``k=None`` all sizes count.  Every subset of violated constraints
    contributes the size of its forced-violation row, so the cost is
    2**len(constraints) row constructions.
    """
    n = len(constraints)
    if n > IE_CONSTRAINT_LIMIT:
        raise ValueError(f"inclusion-exclusion over {n} constraints refused")
    total = 0
    for mask in range(1 << n):
        subset = [constraints[i] for i in range(n) if mask >> i & 1]
        r0 = force_violations(r, subset)
        if r0 is None:
            continue
        sign = -1 if bin(mask).count("1") & 1 else 1
        if k is None:
            total += sign * r0.cardinality()
        else:
            whole = r0.cardinality()
            total += sign * whole  # size property intact
            total -= sign * (whole - r0.card_k(k))  # size property violated too
    return total


def ie_model_count(r: Row, inst: HornInstance, k: int | None) -> int:
    """Exact count of members of r that are models of size k (any size if None).

    Requires all implications unit; split them first via
    :func:`hornrows.instance.unit_split` if needed.
    """
    for c in inst.sigma:
        if len(c.conclusion) != 1:
            raise ValueError(f"implication {c} is not unit; unit-split the instance")
    return _ie_count(r, inst.constraints, k)
