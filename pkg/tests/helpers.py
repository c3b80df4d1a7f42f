"""Shared test utilities: brute-force checks and random generators.

The brute-force helpers evaluate definitions directly (no row machinery,
no closure) so the library is always measured against an independent
implementation.
"""

from __future__ import annotations

import random

from hornrows import HornInstance, Implication, Row, imp, nc, normalize


def satisfies(x: frozenset, c) -> bool:
    if isinstance(c, Implication):
        return not c.premise <= x or c.conclusion <= x
    return not c.body <= x


def is_model(x: frozenset, inst: HornInstance) -> bool:
    return all(satisfies(x, c) for c in inst.constraints)


def all_subsets(w: int):
    for mask in range(1 << w):
        yield frozenset(v for v in range(1, w + 1) if mask >> (v - 1) & 1)


def brute_members(r: Row) -> list[frozenset]:
    """Members of a row straight from the definition of the encoding."""
    zeros, ones = set(r.zeros), set(r.ones)
    bubbles = [set(b) for b in r.bubbles]
    out = []
    for x in all_subsets(r.w):
        if x & zeros or not ones <= x:
            continue
        if any(b <= x for b in bubbles):
            continue
        out.append(x)
    return out


def brute_models(inst: HornInstance) -> set[frozenset]:
    return {x for x in all_subsets(inst.w) if is_model(x, inst)}


def random_row(rng: random.Random, w: int) -> Row:
    zeros, ones, twos, pool = [], [], [], []
    for v in range(1, w + 1):
        [zeros, ones, twos, pool][rng.randrange(4)].append(v)
    rng.shuffle(pool)
    bubbles = []
    while len(pool) >= 2:
        size = rng.randint(2, min(4, len(pool)))
        if len(pool) - size == 1:
            size += 1
        bubbles.append(pool[:size])
        pool = pool[size:]
    twos += pool
    return Row(w, zeros=zeros, ones=ones, twos=twos, bubbles=bubbles)


def random_instance(
    rng: random.Random,
    w_max: int = 12,
    h_max: int = 8,
    max_side: int = 4,
    theta_only: bool = False,
) -> HornInstance:
    w = rng.randint(1, w_max)
    h = rng.randint(0, h_max)
    universe = list(range(1, w + 1))
    cs = []
    for _ in range(h):
        if theta_only or rng.random() < 0.4:
            body = rng.sample(universe, rng.randint(1, min(max_side, w)))
            cs.append(nc(body))
        else:
            premise = rng.sample(universe, rng.randint(0, min(max_side, w)))
            rest = [v for v in universe if v not in premise]
            if not rest:
                continue
            conclusion = rng.sample(rest, rng.randint(1, min(max_side, len(rest))))
            cs.append(imp(premise, conclusion))
    return normalize(cs, w)
