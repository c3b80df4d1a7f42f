"""Brute-force reference answers by scanning all 2**w subsets.

Deliberately independent of the row machinery: constraints are evaluated
straight from their definition on bitmask-encoded subsets.  Everything
here is ground truth for the rest of the package, at exponential cost;
the universe is capped accordingly.
"""

from __future__ import annotations

from typing import Iterator

from .engine import KSpec
from .instance import HornInstance, Implication, VarSet

MAX_W = 24


def _compile(inst: HornInstance) -> list[tuple[bool, int, int]]:
    compiled = []
    for c in inst.constraints:
        if isinstance(c, Implication):
            a = sum(1 << (v - 1) for v in c.premise)
            b = sum(1 << (v - 1) for v in c.conclusion)
            compiled.append((True, a, b))
        else:
            compiled.append((False, sum(1 << (v - 1) for v in c.body), 0))
    return compiled


def _check_w(inst: HornInstance) -> None:
    if inst.w > MAX_W:
        raise ValueError(f"brute force capped at w <= {MAX_W}, got {inst.w}")


def _model_masks(inst: HornInstance) -> Iterator[int]:
    compiled = _compile(inst)
    for x in range(1 << inst.w):
        for is_imp, a, b in compiled:
            if is_imp:
                if x & a == a and x & b != b:
                    break
            elif x & a == a:
                break
        else:
            yield x


def _to_set(mask: int) -> VarSet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def oracle_models(inst: HornInstance) -> list[VarSet]:
    """Every model, as index sets, in ascending bitmask order."""
    _check_w(inst)
    return [_to_set(x) for x in _model_masks(inst)]


def oracle_count(inst: HornInstance, kspec: KSpec = KSpec.all()) -> int:
    _check_w(inst)
    if kspec.kind == "all":
        return sum(1 for _ in _model_masks(inst))
    k = kspec.k
    if kspec.kind == "le":
        return sum(1 for x in _model_masks(inst) if x.bit_count() <= k)
    if kspec.kind == "ge":
        return sum(1 for x in _model_masks(inst) if x.bit_count() >= k)
    if kspec.kind == "eq":
        return sum(1 for x in _model_masks(inst) if x.bit_count() == k)
    raise ValueError(f"unknown size filter {kspec.kind!r}")


def oracle_f_vector(inst: HornInstance) -> list[int]:
    _check_w(inst)
    vector = [0] * (inst.w + 1)
    for x in _model_masks(inst):
        vector[x.bit_count()] += 1
    return vector
