"""Set families encoded as {0,1,2,n}-valued rows.

A row partitions the positions {1..w} into four kinds:

* ``0``  excluded from every member,
* ``1``  included in every member,
* ``2``  free,
* ``n``  grouped into *bubbles* of size >= 2; from each bubble at least
         one position must stay out (all-in is forbidden).

The row stands for the family of all X with ``X & zeros == {}``,
``ones <= X`` and ``not bubble <= X`` for every bubble.  One row covers
``2**|twos| * prod(2**|bubble| - 1)`` sets, so a handful of disjoint rows
can describe an exponentially large family.  Rows are immutable; all
counts are exact Python integers.

Canonical form orders bubbles by their minimum element, which makes row
equality structural and the rendered form (`"0 2 1 n1 n1 2"`) unique.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

VarSet = frozenset


def _freeze(xs: Iterable[int]) -> VarSet:
    return xs if isinstance(xs, frozenset) else frozenset(xs)


class Row:
    __slots__ = ("w", "zeros", "ones", "twos", "bubbles", "_hash")

    def __init__(
        self,
        w: int,
        zeros: Iterable[int] = (),
        ones: Iterable[int] = (),
        bubbles: Iterable[Iterable[int]] = (),
        twos: Iterable[int] | None = None,
    ):
        """Validate and canonicalize; ``twos=None`` means "the rest".

        Raises ValueError if the parts do not partition {1..w} or a bubble
        has fewer than two positions.
        """
        if not isinstance(w, int) or w < 1:
            raise ValueError(f"row width must be a positive integer, got {w!r}")
        zeros = _freeze(zeros)
        ones = _freeze(ones)
        bubble_list = sorted((_freeze(b) for b in bubbles), key=min)
        covered = zeros | ones
        n_covered = len(zeros) + len(ones)
        for b in bubble_list:
            if len(b) < 2:
                raise ValueError(f"bubble {sorted(b)} has fewer than two positions")
            covered |= b
            n_covered += len(b)
        universe = frozenset(range(1, w + 1))
        if twos is None:
            if n_covered != len(covered) or not covered <= universe:
                raise ValueError("row parts overlap or leave 1..w")
            twos = universe - covered
        else:
            twos = _freeze(twos)
            covered |= twos
            n_covered += len(twos)
            if n_covered != len(covered) or covered != universe:
                raise ValueError("row parts do not partition 1..w")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "ones", ones)
        object.__setattr__(self, "twos", twos)
        object.__setattr__(self, "bubbles", tuple(bubble_list))
        object.__setattr__(
            self, "_hash", hash((w, zeros, ones, twos, self.bubbles))
        )

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Row is immutable")

    @classmethod
    def all_twos(cls, w: int) -> "Row":
        """The row covering the whole powerset of {1..w}."""
        return cls(w)

    @classmethod
    def from_tokens(cls, text: str) -> "Row":
        """Parse the rendered form, e.g. ``"0 2 1 n1 n1 2"``."""
        zeros, ones, twos = [], [], []
        groups: dict[str, list[int]] = {}
        tokens = text.split()
        for pos, tok in enumerate(tokens, start=1):
            if tok == "0":
                zeros.append(pos)
            elif tok == "1":
                ones.append(pos)
            elif tok == "2":
                twos.append(pos)
            elif tok.startswith("n") and tok[1:].isdigit():
                groups.setdefault(tok, []).append(pos)
            else:
                raise ValueError(f"bad row token {tok!r} at position {pos}")
        return cls(len(tokens), zeros=zeros, ones=ones, twos=twos, bubbles=groups.values())

    def render(self) -> str:
        """One token per position: 0, 1, 2 or n<i> with canonical bubble index i."""
        tok = {}
        for v in self.zeros:
            tok[v] = "0"
        for v in self.ones:
            tok[v] = "1"
        for v in self.twos:
            tok[v] = "2"
        for i, b in enumerate(self.bubbles, start=1):
            for v in b:
                tok[v] = f"n{i}"
        return " ".join(tok[v] for v in range(1, self.w + 1))

    def __repr__(self) -> str:
        return f"Row.from_tokens({self.render()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Row):
            return NotImplemented
        return (
            self.w == other.w
            and self.zeros == other.zeros
            and self.ones == other.ones
            and self.twos == other.twos
            and self.bubbles == other.bubbles
        )

    def __hash__(self) -> int:
        return self._hash

    # --- membership and counting ------------------------------------------

    def contains(self, x: Iterable[int]) -> bool:
        """Is X a member of the family?"""
        x = _freeze(x)
        if x & self.zeros or not self.ones <= x:
            return False
        return not any(b <= x for b in self.bubbles)

    def cardinality(self) -> int:
        n = 1 << len(self.twos)
        for b in self.bubbles:
            n *= (1 << len(b)) - 1
        return n

    def _size_poly(self, dmax: int) -> list[int]:
        # coefficient j = number of members with |X| = |ones| + j, up to j = dmax
        gamma = len(self.twos)
        coeffs = [math.comb(gamma, j) for j in range(min(dmax, gamma) + 1)]
        for b in self.bubbles:
            v = len(b)
            factor = [math.comb(v, j) for j in range(min(dmax, v) + 1)]
            if v <= dmax:
                factor[v] -= 1  # the all-in choice is forbidden
            coeffs = _mul_trunc(coeffs, factor, dmax)
        return coeffs

    def card_k(self, k: int) -> int:
        """Number of members of size exactly k."""
        j = k - len(self.ones)
        if j < 0 or k > self.w:
            return 0
        poly = self._size_poly(j)
        return poly[j] if j < len(poly) else 0

    def card_le_k(self, k: int) -> int:
        """Number of members of size at most k."""
        j = min(k, self.w) - len(self.ones)
        if j < 0:
            return 0
        return sum(self._size_poly(j)[: j + 1])

    def card_profile(self) -> list[int]:
        """card_k for every k in 0..w, as one list."""
        beta = len(self.ones)
        poly = self._size_poly(self.w - beta)
        out = [0] * (self.w + 1)
        for j, c in enumerate(poly):
            out[beta + j] = c
        return out

    # --- member enumeration -------------------------------------------------

    def members(self) -> Iterator[VarSet]:
        """All members, each exactly once, in the documented counter order.

        The free positions and the bubbles form a mixed-radix counter: the
        twos block is most significant and steps as a binary counter (bit j
        = j-th smallest free position), then the bubbles from last to first
        in canonical order, each running through its proper subsets the
        same way.  The first canonical bubble therefore varies fastest.
        """
        return self._iter_added(0, self.w)

    def members_k(self, k: int) -> Iterator[VarSet]:
        """The members of size exactly k, in members() order."""
        j = k - len(self.ones)
        if j < 0 or k > self.w:
            return iter(())
        return self._iter_added(j, j)

    def members_le(self, k: int) -> Iterator[VarSet]:
        """The members of size at most k, in members() order."""
        return self._iter_added(0, k - len(self.ones))

    def _iter_added(self, lo: int, hi: int) -> Iterator[VarSet]:
        if hi < 0:
            return
        blocks: list[tuple[list[int], int]] = []  # (positions msb-first, max take)
        if self.twos:
            blocks.append((sorted(self.twos, reverse=True), len(self.twos)))
        for b in reversed(self.bubbles):
            blocks.append((sorted(b, reverse=True), len(b) - 1))
        suffix = [0] * (len(blocks) + 1)
        for i in range(len(blocks) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + blocks[i][1]
        ones = self.ones
        chosen: list[int] = []

        def per_block(bi: int, size: int) -> Iterator[VarSet]:
            if bi == len(blocks):
                if size >= lo:
                    yield ones | frozenset(chosen)
                return
            els, cap = blocks[bi]
            smin = max(0, lo - size - suffix[bi + 1])
            smax = min(cap, hi - size)
            if smin <= smax:
                yield from pick(bi, 0, 0, smin, smax, size)

        def pick(bi: int, ei: int, taken: int, smin: int, smax: int, size: int) -> Iterator[VarSet]:
            els, _cap = blocks[bi]
            if ei == len(els):
                yield from per_block(bi + 1, size + taken)
                return
            if taken + (len(els) - ei - 1) >= smin:
                yield from pick(bi, ei + 1, taken, smin, smax, size)
            if taken < smax:
                chosen.append(els[ei])
                yield from pick(bi, ei + 1, taken + 1, smin, smax, size)
                chosen.pop()

        yield from per_block(0, 0)


def _mul_trunc(a: list[int], b: list[int], dmax: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, dmax + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > dmax:
            continue
        for j, bj in enumerate(b):
            if i + j > dmax:
                break
            out[i + j] += ai * bj
    return out


def canonicalize(
    w: int,
    zeros: Iterable[int],
    ones: Iterable[int],
    twos: Iterable[int],
    bubbles: Iterable[Iterable[int]],
) -> Row:
    """Assemble a row from raw parts, validating and ordering the bubbles."""
    return Row(w, zeros=zeros, ones=ones, twos=twos, bubbles=bubbles)
