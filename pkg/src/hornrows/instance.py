"""Horn instances: implications, negative clauses, parsing and serialization.

A Horn instance over the universe W = {1..w} is an ordered list of
constraints of two kinds:

* an implication ``A -> B``: every member of A forces every member of B
  (premise A may be empty, conclusion B is nonempty after normalization);
* a negative clause ``A*``: the set A must not be wholly contained in a
  model (A nonempty).

A subset X of W is a model when it satisfies every constraint.  Two text
formats are supported: a line-oriented native format and DIMACS CNF
restricted to Horn clauses (at most one positive literal per clause).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

VarSet = frozenset  # sets of 1-based variable indices


class ParseError(ValueError):
    """Malformed instance text; carries the 1-based line number if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotHornError(ParseError):
    """A DIMACS clause with two or more positive literals."""


class UnsatisfiableInputError(ParseError):
    """Input containing an empty negative clause (no model can exist).

    Rows cannot represent the empty family restriction "exclude nothing",
    so this is rejected at parse time; callers that want an answer rather
    than an error should report zero models over ``w`` variables.
    """

    def __init__(self, message: str, w: int, line: int | None = None):
        self.w = w
        super().__init__(message, line)


@dataclass(frozen=True)
class Implication:
    premise: VarSet
    conclusion: VarSet

    def __str__(self) -> str:
        return f"{_fmt(self.premise)} -> {_fmt(self.conclusion)}"


@dataclass(frozen=True)
class NegativeClause:
    body: VarSet

    def __str__(self) -> str:
        return f"{_fmt(self.body)}*"


Constraint = Union[Implication, NegativeClause]


def imp(premise: Iterable[int], conclusion: Iterable[int]) -> Implication:
    return Implication(frozenset(premise), frozenset(conclusion))


def nc(body: Iterable[int]) -> NegativeClause:
    return NegativeClause(frozenset(body))


def _fmt(s: VarSet) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


@dataclass(frozen=True)
class HornInstance:
    """An ordered constraint list over {1..w}; immutable once built."""

    w: int
    constraints: tuple[Constraint, ...]

    @property
    def h(self) -> int:
        return len(self.constraints)

    @property
    def sigma(self) -> tuple[Implication, ...]:
        return tuple(c for c in self.constraints if isinstance(c, Implication))

    @property
    def theta(self) -> tuple[NegativeClause, ...]:
        return tuple(c for c in self.constraints if isinstance(c, NegativeClause))

    def __str__(self) -> str:
        body = ", ".join(str(c) for c in self.constraints)
        return f"HornInstance(w={self.w}, [{body}])"


def _check_indices(s: VarSet, w: int, what: str) -> None:
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= w:
            raise ValueError(f"{what} contains index {v!r} outside 1..{w}")


def normalize(raw: Iterable[Constraint], w: int) -> HornInstance:
    """Build an instance from raw constraints.

    Removes premise variables from conclusions, drops implications whose
    conclusion thereby empties out, and validates all indices.  Constraint
    order is preserved.  An empty negative clause raises
    :class:`UnsatisfiableInputError` since no model could satisfy it.
    """
    if not isinstance(w, int) or w < 1:
        raise ValueError(f"universe size must be a positive integer, got {w!r}")
    out: list[Constraint] = []
    for c in raw:
        if isinstance(c, Implication):
            _check_indices(c.premise, w, "premise")
            _check_indices(c.conclusion, w, "conclusion")
            conclusion = frozenset(c.conclusion) - frozenset(c.premise)
            if not conclusion:
                continue
            out.append(Implication(frozenset(c.premise), conclusion))
        elif isinstance(c, NegativeClause):
            _check_indices(c.body, w, "negative clause")
            if not c.body:
                raise UnsatisfiableInputError("empty negative clause", w)
            out.append(NegativeClause(frozenset(c.body)))
        else:
            raise TypeError(f"not a constraint: {c!r}")
    return HornInstance(w, tuple(out))


def merge_premises(inst: HornInstance) -> HornInstance:
    """Unite the conclusions of implications sharing a premise.

    The merged implication sits at the position of the premise's first
    occurrence; negative clauses and the relative order of everything else
    are untouched.  The model set is unchanged.
    """
    slot: dict[VarSet, int] = {}
    out: list[Constraint] = []
    for c in inst.constraints:
        if isinstance(c, Implication):
            i = slot.get(c.premise)
            if i is None:
                slot[c.premise] = len(out)
                out.append(c)
            else:
                prev = out[i]
                assert isinstance(prev, Implication)
                out[i] = Implication(c.premise, prev.conclusion | c.conclusion)
        else:
            out.append(c)
    return HornInstance(inst.w, tuple(out))


def order_by_size(inst: HornInstance) -> HornInstance:
    """Stable-sort constraints by ascending premise/body size (a heuristic)."""

    def key(c: Constraint) -> int:
        return len(c.premise) if isinstance(c, Implication) else len(c.body)

    return HornInstance(inst.w, tuple(sorted(inst.constraints, key=key)))


def unit_split(inst: HornInstance) -> HornInstance:
    """Replace each implication A -> B by the |B| implications A -> {b}."""
    out: list[Constraint] = []
    for c in inst.constraints:
        if isinstance(c, Implication):
            out.extend(Implication(c.premise, frozenset((b,))) for b in sorted(c.conclusion))
        else:
            out.append(c)
    return HornInstance(inst.w, tuple(out))


# --- native format ---------------------------------------------------------
#
#   # comment
#   vars 6
#   imp 1 2 3 -> 5 6
#   imp -> 4            (empty premise)
#   nc 1 3 6


def _ints(tokens: Sequence[str], line: int) -> list[int]:
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise ParseError(f"expected an integer, got {t!r}", line) from None
    return out


def parse_native(text: str, *, merge: bool = True) -> HornInstance:
    w = None
    raw: list[Constraint] = []
    for lineno, full in enumerate(text.splitlines(), start=1):
        line = full.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if w is None:
            if tokens[0] != "vars" or len(tokens) != 2:
                raise ParseError("expected header 'vars <w>'", lineno)
            (w,) = _ints(tokens[1:], lineno)
            if w < 1:
                raise ParseError("universe size must be positive", lineno)
            continue
        if tokens[0] == "imp":
            rest = tokens[1:]
            if "->" not in rest:
                raise ParseError("implication needs '->'", lineno)
            cut = rest.index("->")
            premise = _ints(rest[:cut], lineno)
            conclusion = _ints(rest[cut + 1 :], lineno)
            raw.append(imp(premise, conclusion))
        elif tokens[0] == "nc":
            body = _ints(tokens[1:], lineno)
            if not body:
                raise UnsatisfiableInputError("empty negative clause", w, lineno)
            raw.append(nc(body))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno)
        last = raw[-1]
        members = (
            last.premise | last.conclusion if isinstance(last, Implication) else last.body
        )
        for v in members:
            if not 1 <= v <= w:
                raise ParseError(f"variable {v} outside 1..{w}", lineno)
    if w is None:
        raise ParseError("missing 'vars <w>' header")
    inst = normalize(raw, w)
    return merge_premises(inst) if merge else inst


# --- DIMACS CNF ------------------------------------------------------------


def parse_dimacs(text: str, *, merge: bool = True) -> HornInstance:
    """Parse Horn CNF in DIMACS format.

    A clause with one positive literal becomes an implication, one with
    none becomes a negative clause; anything else is rejected.  Clauses
    may span lines; a '%' line ends the clause section.
    """
    w = None
    raw: list[Constraint] = []
    literals: list[int] = []
    clause_line = 1
    for lineno, full in enumerate(text.splitlines(), start=1):
        line = full.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            tokens = line.split()
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("malformed problem line", lineno)
            w, _ = _ints(tokens[2:], lineno)
            if w < 1:
                raise ParseError("variable count must be positive", lineno)
            continue
        if w is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        if not literals:
            clause_line = lineno
        for v in _ints(line.split(), lineno):
            if v == 0:
                raw.append(_horn_clause(literals, w, clause_line))
                literals = []
            else:
                if not 1 <= abs(v) <= w:
                    raise ParseError(f"literal {v} outside +-1..{w}", lineno)
                literals.append(v)
    if w is None:
        raise ParseError("missing 'p cnf' header")
    if literals:
        raw.append(_horn_clause(literals, w, clause_line))
    inst = normalize(raw, w)
    return merge_premises(inst) if merge else inst


def _horn_clause(literals: list[int], w: int, line: int) -> Constraint:
    if not literals:
        raise UnsatisfiableInputError("empty clause", w, line)
    positive = [v for v in literals if v > 0]
    negative = [-v for v in literals if v < 0]
    if len(positive) > 1:
        raise NotHornError(
            f"clause ({' '.join(map(str, literals))}) has {len(positive)} positive literals",
            line,
        )
    if positive:
        return imp(negative, positive)
    return nc(negative)


# --- serialization ---------------------------------------------------------


def serialize(inst: HornInstance, fmt: str = "native") -> str:
    if fmt == "native":
        return _serialize_native(inst)
    if fmt == "dimacs":
        return _serialize_dimacs(inst)
    raise ValueError(f"unknown format {fmt!r}")


def _serialize_native(inst: HornInstance) -> str:
    lines = [f"vars {inst.w}"]
    for c in inst.constraints:
        if isinstance(c, Implication):
            premise = " ".join(map(str, sorted(c.premise)))
            conclusion = " ".join(map(str, sorted(c.conclusion)))
            lines.append(f"imp {premise} -> {conclusion}".replace("imp  ->", "imp ->"))
        else:
            lines.append("nc " + " ".join(map(str, sorted(c.body))))
    return "\n".join(lines) + "\n"


def _serialize_dimacs(inst: HornInstance) -> str:
    # multi-variable conclusions split into one clause per conclusion variable
    clauses: list[list[int]] = []
    for c in inst.constraints:
        if isinstance(c, Implication):
            negs = sorted(-a for a in c.premise)
            clauses.extend(negs + [b] for b in sorted(c.conclusion))
        else:
            clauses.append(sorted(-a for a in c.body))
    lines = [f"p cnf {inst.w} {len(clauses)}"]
    lines.extend(" ".join(map(str, cl)) + " 0" for cl in clauses)
    return "\n".join(lines) + "\n"
