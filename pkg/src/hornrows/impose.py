"""Impose a single constraint on a single row.

Imposing a constraint on a row r yields zero or more *sons*: pairwise
disjoint rows whose union is exactly the set of members of r satisfying
the constraint.  Four outcomes arise:

* UNCHANGED    every member already satisfies it; the son is r itself.
* DELETED      no member satisfies it; there are no sons.
* TRIVIAL_SON  the satisfying members again form a single row.
* SPLIT        the satisfying members split into >= 1 disjoint rows.

For an implication A -> B the satisfying members are those missing part
of A plus those containing all of A u B.  The first group is carved up
bubble by bubble: for the bubbles meeting A in canonical order, the q-th
son forces the earlier intersections in and forbids the q-th; a further
son forbids the free-position part of A once every bubble intersection is
forced in; a final "easy" son forces A u B in wholesale.  A negative
clause is the same construction on its body, without the easy son.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .instance import Constraint, Implication, NegativeClause, VarSet
from .rows import Row


class Outcome(enum.Enum):
    UNCHANGED = "unchanged"
    TRIVIAL_SON = "trivial-son"
    SPLIT = "split"
    DELETED = "deleted"


@dataclass(frozen=True)
class ImpositionResult:
    outcome: Outcome
    sons: tuple[Row, ...]


def impose(r: Row, c: Constraint) -> ImpositionResult:
    if isinstance(c, Implication):
        result = impose_implication(r, c)
    else:
        result = impose_negative_clause(r, c)
    # a son gains at most one bubble over its parent
    assert all(len(son.bubbles) <= len(r.bubbles) + 1 for son in result.sons)
    return result


def impose_implication(r: Row, c: Implication) -> ImpositionResult:
    a, b = c.premise, c.conclusion
    if a & r.zeros or _traps_bubble(r, a) or b <= r.ones:
        return ImpositionResult(Outcome.UNCHANGED, (r,))
    if a <= r.ones:
        if b & r.zeros or _traps_bubble(r, b):
            return ImpositionResult(Outcome.DELETED, ())
        return ImpositionResult(Outcome.TRIVIAL_SON, (_fix_in(r, b),))
    sons = _split_excluding(r, a)
    easy = _easy_son(r, a | b)
    if easy is not None:
        sons.append(easy)
    return ImpositionResult(Outcome.SPLIT, tuple(sons))


def impose_negative_clause(r: Row, c: NegativeClause) -> ImpositionResult:
    body = c.body
    if body & r.zeros or _traps_bubble(r, body):
        return ImpositionResult(Outcome.UNCHANGED, (r,))
    if body <= r.ones:
        return ImpositionResult(Outcome.DELETED, ())
    return ImpositionResult(Outcome.SPLIT, tuple(_split_excluding(r, body)))


def _traps_bubble(r: Row, s: VarSet) -> bool:
    return any(nb <= s for nb in r.bubbles)


def _fix_in(r: Row, s: VarSet) -> Row:
    """Force every position of s to 1; bubble leftovers shrink or pin to 0.

    Caller guarantees s avoids the zeros and contains no whole bubble, so
    every touched bubble keeps a nonempty leftover that must still carry
    the excluded position: a single leftover position becomes a 0, two or
    more stay a bubble.
    """
    zeros = set(r.zeros)
    bubbles = []
    for nb in r.bubbles:
        if nb & s:
            rest = nb - s
            if len(rest) == 1:
                zeros |= rest
            else:
                bubbles.append(rest)
        else:
            bubbles.append(nb)
    return Row(r.w, zeros=zeros, ones=r.ones | s, twos=r.twos - s, bubbles=bubbles)


def _split_excluding(r: Row, a: VarSet) -> list[Row]:
    """Disjoint rows covering exactly the members of r missing part of a.

    Caller guarantees a avoids the zeros, contains no whole bubble and is
    not inside the ones, so at least one son is produced.
    """
    hits = [(nb, nb & a) for nb in r.bubbles if nb & a]
    untouched = [nb for nb in r.bubbles if not nb & a]
    a_free = a & r.twos
    sons = []
    for q in range(len(hits)):
        zeros, ones, twos = set(r.zeros), set(r.ones), set(r.twos)
        bubbles = list(untouched)
        for j, (nb, inter) in enumerate(hits):
            if j < q:  # earlier intersections forced in
                ones |= inter
                rest = nb - inter
                if len(rest) == 1:
                    zeros |= rest
                else:
                    bubbles.append(rest)
            elif j == q:  # this intersection forbidden, leftover freed
                twos |= nb - inter
                if len(inter) == 1:
                    zeros |= inter
                else:
                    bubbles.append(inter)
            else:
                bubbles.append(nb)
        sons.append(Row(r.w, zeros=zeros, ones=ones, twos=twos, bubbles=bubbles))
    if a_free:
        # all bubble intersections forced in, the free part forbidden
        zeros, ones, twos = set(r.zeros), set(r.ones), set(r.twos)
        bubbles = list(untouched)
        for nb, inter in hits:
            ones |= inter
            rest = nb - inter
            if len(rest) == 1:
                zeros |= rest
            else:
                bubbles.append(rest)
        twos -= a_free
        if len(a_free) == 1:
            zeros |= a_free
        else:
            bubbles.append(a_free)
        sons.append(Row(r.w, zeros=zeros, ones=ones, twos=twos, bubbles=bubbles))
    return sons


def _easy_son(r: Row, ab: VarSet) -> Row | None:
    """The row forcing all of ab in, or None when that family is empty."""
    if ab & r.zeros or _traps_bubble(r, ab):
        return None
    return _fix_in(r, ab)


def satisfies_all_members(r: Row, c: Constraint) -> bool:
    """True iff every member of the row satisfies the constraint."""
    if isinstance(c, Implication):
        return bool(
            c.premise & r.zeros
            or _traps_bubble(r, c.premise)
            or c.conclusion <= r.ones
        )
    return bool(c.body & r.zeros or _traps_bubble(r, c.body))


def satisfies_some_member(r: Row, c: Constraint) -> bool:
    """True iff at least one member of the row satisfies the constraint."""
    if isinstance(c, Implication):
        if not c.premise <= r.ones:
            return True
        both = c.premise | c.conclusion
        return not (both & r.zeros or _traps_bubble(r, both))
    return not c.body <= r.ones
