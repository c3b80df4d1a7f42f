import random

import pytest

from helpers import random_instance
from hornrows import (
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


class TestNormalize:
    def test_conclusion_loses_premise(self):
        inst = normalize([imp({1, 2}, {2, 3})], 6)
        assert inst.constraints == (imp({1, 2}, {3}),)

    def test_selfloop_dropped(self):
        assert normalize([imp({1}, {1})], 6).constraints == ()

    def test_order_preserved(self):
        inst = normalize([nc({1}), imp({2}, {3}), nc({4})], 6)
        assert inst.constraints == (nc({1}), imp({2}, {3}), nc({4}))

    def test_idempotent(self):
        rng = random.Random(5)
        for _ in range(50):
            inst = random_instance(rng)
            again = normalize(inst.constraints, inst.w)
            assert again == inst

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            normalize([imp({1}, {7})], 6)
        with pytest.raises(ValueError):
            normalize([nc({0})], 6)

    def test_empty_negative_clause(self):
        with pytest.raises(UnsatisfiableInputError):
            normalize([nc(())], 6)

    def test_bad_w(self):
        with pytest.raises(ValueError):
            normalize([], 0)


class TestMergePremises:
    def test_conclusions_united(self):
        inst = normalize([imp({1, 2, 3}, {5}), imp({1, 2, 3}, {6})], 6)
        assert merge_premises(inst).constraints == (imp({1, 2, 3}, {5, 6}),)

    def test_distinct_premises_untouched(self):
        inst = normalize([imp({1}, {2}), imp({3}, {4})], 6)
        assert merge_premises(inst) == inst

    def test_empty_premises_merge(self):
        inst = normalize([imp((), {1}), imp((), {2})], 6)
        assert merge_premises(inst).constraints == (imp((), {1, 2}),)

    def test_first_occurrence_position(self):
        inst = normalize([imp({1}, {2}), nc({3}), imp({1}, {4})], 6)
        assert merge_premises(inst).constraints == (imp({1}, {2, 4}), nc({3}))

    def test_model_set_preserved(self):
        from hornrows.oracle import oracle_models

        rng = random.Random(17)
        for _ in range(60):
            inst = random_instance(rng, w_max=8, h_max=6)
            assert oracle_models(merge_premises(inst)) == oracle_models(inst)


def test_order_by_size():
    inst = normalize([imp({1, 2, 3}, {4}), nc({5}), imp((), {6})], 6)
    ordered = order_by_size(inst)
    assert ordered.constraints == (imp((), {6}), nc({5}), imp({1, 2, 3}, {4}))


def test_unit_split():
    inst = normalize([imp({1}, {3, 2}), nc({4})], 6)
    assert unit_split(inst).constraints == (imp({1}, {2}), imp({1}, {3}), nc({4}))


class TestParseNative:
    def test_reference(self, ref6_native, ref6):
        assert parse_native(ref6_native) == ref6

    def test_single_implication(self):
        inst = parse_native("vars 6\nimp 1 2 3 -> 5 6\nnc 1 3 6\n")
        assert inst.constraints == (imp({1, 2, 3}, {5, 6}), nc({1, 3, 6}))

    def test_empty_premise(self):
        inst = parse_native("vars 3\nimp -> 2 3\n")
        assert inst.constraints == (imp((), {2, 3}),)

    def test_comments_and_blanks(self):
        inst = parse_native("# hi\n\nvars 2\nimp 1 -> 2  # trailing\n")
        assert inst.constraints == (imp({1}, {2}),)

    @pytest.mark.parametrize(
        "text",
        [
            "imp 1 -> 2\n",          # missing header
            "vars 2\nimp 1 2\n",     # missing arrow
            "vars 2\nfoo 1\n",       # unknown directive
            "vars 2\nimp 1 -> x\n",  # not an integer
            "vars 2\nnc 3\n",        # out of range
            "vars 0\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_native(text)

    def test_empty_nc_distinguished(self):
        with pytest.raises(UnsatisfiableInputError) as err:
            parse_native("vars 4\nnc\n")
        assert err.value.w == 4


class TestParseDimacs:
    def test_reference_with_merge(self, ref6_dimacs, ref6):
        assert parse_dimacs(ref6_dimacs) == ref6

    def test_without_merge(self, ref6_dimacs):
        inst = parse_dimacs(ref6_dimacs, merge=False)
        assert inst.constraints == (
            imp({1, 2, 3}, {5}),
            imp({1, 2, 3}, {6}),
            imp({3, 4, 5}, {6}),
            nc({1, 3, 6}),
        )

    def test_positive_unit_clause(self):
        inst = parse_dimacs("p cnf 6 1\n5 0\n")
        assert inst.constraints == (imp((), {5}),)

    def test_not_horn(self):
        with pytest.raises(NotHornError, match="2 positive"):
            parse_dimacs("p cnf 3 1\n1 2 -3 0\n")

    def test_empty_clause(self):
        with pytest.raises(UnsatisfiableInputError) as err:
            parse_dimacs("p cnf 3 1\n0\n")
        assert err.value.w == 3

    def test_clause_spanning_lines(self):
        inst = parse_dimacs("p cnf 4 1\n-1 -2\n3 0\n")
        assert inst.constraints == (imp({1, 2}, {3}),)

    def test_tautological_clause_dropped(self):
        inst = parse_dimacs("p cnf 2 1\n-1 1 0\n")
        assert inst.constraints == ()

    def test_percent_terminator(self):
        inst = parse_dimacs("p cnf 2 1\n-1 -2 0\n%\n0\n")
        assert inst.constraints == (nc({1, 2}),)


class TestRoundTrip:
    def test_native_unmerged_identity(self):
        rng = random.Random(23)
        for _ in range(60):
            inst = random_instance(rng)
            assert parse_native(serialize(inst, "native"), merge=False) == inst

    def test_both_formats_on_merged(self):
        rng = random.Random(29)
        for _ in range(60):
            inst = merge_premises(random_instance(rng))
            assert parse_native(serialize(inst, "native")) == inst
            assert parse_dimacs(serialize(inst, "dimacs")) == inst

    def test_dimacs_splits_conclusions(self, ref6):
        text = serialize(ref6, "dimacs")
        assert text.splitlines()[0] == "p cnf 6 4"
        assert len(text.strip().splitlines()) == 5


def test_sigma_theta_views(ref6):
    assert len(ref6.sigma) == 2 and len(ref6.theta) == 1
    assert all(isinstance(c, Implication) for c in ref6.sigma)
    assert all(isinstance(c, NegativeClause) for c in ref6.theta)
