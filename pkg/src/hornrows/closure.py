"""Implication closure and row feasibility tests.

The closure of U under a family of implications is the least superset of
U satisfying all of them; it is computed with the usual counter-per-
implication propagation in time linear in the total size of the family
plus the universe.

A row is *feasible* for an instance when it contains at least one model.
For Horn instances this reduces to one closure computation: the closure
of the row's forced-in positions is the minimum candidate model, and the
row contains a model iff that closure avoids every negative clause, the
row's zeros, and every whole bubble.  The bounded variants below decide
whether the row contains a model of size <= k, and (for pure negative-
clause instances under the documented preconditions) of size exactly k.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .instance import HornInstance, Implication, NegativeClause, VarSet
from .rows import Row


class SigmaClosure:
    """Reusable closure evaluator over a fixed implication family."""

    def __init__(self, sigma: Iterable[Implication], w: int):
        self.w = w
        self.premise_sizes: list[int] = []
        self.conclusions: list[tuple[int, ...]] = []
        self.watching: list[list[int]] = [[] for _ in range(w + 1)]
        for i, c in enumerate(sigma):
            self.premise_sizes.append(len(c.premise))
            self.conclusions.append(tuple(c.conclusion))
            for v in c.premise:
                self.watching[v].append(i)

    def close(self, base: Iterable[int]) -> VarSet:
        counts = self.premise_sizes.copy()
        member = bytearray(self.w + 1)
        stack: list[int] = []
        for v in base:
            if not member[v]:
                member[v] = 1
                stack.append(v)
        for i, n in enumerate(counts):
            if n == 0:
                for b in self.conclusions[i]:
                    if not member[b]:
                        member[b] = 1
                        stack.append(b)
        out = list(stack)
        while stack:
            v = stack.pop()
            for i in self.watching[v]:
                counts[i] -= 1
                if counts[i] == 0:
                    for b in self.conclusions[i]:
                        if not member[b]:
                            member[b] = 1
                            stack.append(b)
                            out.append(b)
        return frozenset(out)


def close(sigma: Iterable[Implication], base: Iterable[int], w: int) -> VarSet:
    """One-shot closure of ``base`` under ``sigma`` over {1..w}."""
    return SigmaClosure(sigma, w).close(base)


class FeasibilityChecker:
    """Feasibility tests for one instance, reusing the closure evaluator."""

    def __init__(self, inst: HornInstance):
        self.inst = inst
        self._closure = SigmaClosure(inst.sigma, inst.w)
        self._bodies = tuple(c.body for c in inst.theta)

    def witness(self, r: Row) -> VarSet | None:
        """The minimum model contained in the row, or None if there is none."""
        y = self._closure.close(r.ones)
        if y & r.zeros:
            return None
        for body in self._bodies:
            if body <= y:
                return None
        for b in r.bubbles:
            if b <= y:
                return None
        return y

    def feasible(self, r: Row) -> bool:
        return self.witness(r) is not None

    def extra_feasible_le(self, r: Row, k: int) -> bool:
        """Does the row contain a model of size at most k?

        Every model of the row contains the closure of its forced-in
        positions, so the minimum model decides the question.
        """
        y = self.witness(r)
        return y is not None and len(y) <= k


def satisfiable(inst: HornInstance) -> bool:
    """Has the instance any model at all?  (Feasibility of the full row.)"""
    return FeasibilityChecker(inst).feasible(Row.all_twos(inst.w))


def feasible(inst: HornInstance, r: Row) -> bool:
    """Does the row contain a model of the instance?"""
    return FeasibilityChecker(inst).feasible(r)


def extra_feasible_le(inst: HornInstance, r: Row, k: int) -> bool:
    return FeasibilityChecker(inst).extra_feasible_le(r, k)


def extra_feasible_eq_noncover(
    pending: Sequence[NegativeClause | VarSet], r: Row, k: int
) -> bool:
    """Does the row contain a k-element noncover of a pure clause system?

    ``pending`` holds the negative clauses not yet imposed on the row.
    Exact only under the caller-checked preconditions: no implications,
    h <= w and k <= w - h.  Within those bounds the test is just: no
    pending body inside the forced-in positions, and at most k of them.
    """
    if len(r.ones) > k:
        return False
    ones = r.ones
    for c in pending:
        body = c.body if isinstance(c, NegativeClause) else c
        if body <= ones:
            return False
    return True
