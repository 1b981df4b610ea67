import json

import pytest
from hypothesis import given, strategies as st

from lrcommute.tableaux import (EMPTY, SkewShape, SkewTableau, as_partition,
                                companion_word, content, empty_of_shape,
                                enumerate_ballot, enumerate_ssyt,
                                enumerate_with_content, from_json, from_text,
                                glue, is_ballot, is_ballot_tableau,
                                partitions_of, reading_word, restrict_rows,
                                skew_shape, standardize, subpartitions,
                                tableau_content, to_json, to_text,
                                yamanouchi_tableau)

T_BALLOT = SkewTableau((4, 3, 2), (2, 1, 0), [(1, 1), (1, 2), (2, 3)])
H_NOT_BALLOT = SkewTableau((4, 3, 2), (2, 1, 0), [(1, 2), (1, 3), (1, 2)])
U_STD = SkewTableau((5, 4, 3), (3, 2, 0), [(1, 3), (2, 4), (1, 2, 3)])


def all_shapes(max_boxes):
    for lam in (p for k in range(max_boxes + 1) for p in partitions_of(k)):
        for mu in subpartitions(lam):
            yield SkewShape(lam, mu + (0,) * (len(lam) - len(mu)))


def test_partition_normalisation():
    assert as_partition((6, 4, 0, 0)) == (6, 4)
    assert as_partition(()) == ()
    with pytest.raises(ValueError):
        as_partition((1, 2))
    with pytest.raises(ValueError):
        as_partition((2, -1))


def test_reading_word_examples():
    assert reading_word(T_BALLOT) == (2, 3, 1, 2, 1, 1)
    assert reading_word(empty_of_shape((3, 1))) == ()
    assert reading_word(SkewTableau((2,), (), [(3, 5)])) == (3, 5)


def test_content_examples():
    assert content((2, 3, 1, 2, 1, 1)) == (3, 2, 1)
    assert content(()) == ()
    assert content((3, 3)) == (0, 0, 2)


def test_is_ballot_examples():
    assert not is_ballot((1, 2, 1, 3, 1, 2))  # word of H
    assert is_ballot((2, 3, 1, 2, 1, 1))      # word of T
    assert is_ballot(())


@given(st.lists(st.integers(min_value=1, max_value=5), max_size=9))
def test_is_ballot_matches_suffix_definition(letters):
    word = tuple(letters)

    def suffix_ok(k):
        c = content(word[k:])
        return all(a >= b for a, b in zip(c, c[1:]))

    naive = all(suffix_ok(k) for k in range(len(word) + 1))
    assert is_ballot(word) == naive


def test_standardize_examples():
    assert standardize(U_STD).rows == ((2, 6), (4, 7), (1, 3, 5))
    std = SkewTableau((3,), (), [(1, 2, 3)])
    assert standardize(std) == std
    assert standardize(SkewTableau((2,), (), [(1, 1)])).rows == ((1, 2),)


def test_standardize_idempotent():
    for shape in all_shapes(5):
        for t in enumerate_ssyt(shape, max(1, shape.size)):
            assert standardize(standardize(t)) == standardize(t)


def test_companion_word_examples():
    assert companion_word(U_STD) == (2, 1, 3, 2, 3, 1, 3)
    assert companion_word(empty_of_shape((2, 1))) == ()
    assert companion_word(SkewTableau((3,), (), [(1, 2, 3)])) == (1, 1, 1)


def test_companion_word_standardisation_invariant():
    for shape in all_shapes(5):
        for t in enumerate_ssyt(shape, max(1, shape.size)):
            assert companion_word(t) == companion_word(standardize(t))


def test_companion_word_injective_on_standard_tableaux():
    for shape in all_shapes(8):
        n = shape.size
        words = set()
        count = 0
        for t in enumerate_with_content(shape, (1,) * n):
            words.add(companion_word(t))
            count += 1
        assert len(words) == count


def test_yamanouchi_examples():
    assert yamanouchi_tableau((2, 1)).rows == ((1, 1), (2,))
    assert yamanouchi_tableau((0,)) == EMPTY
    assert yamanouchi_tableau((6, 4, 0, 0)).rows == ((1,) * 6, (2,) * 4)


def test_yamanouchi_is_ballot_up_to_8():
    for n in range(9):
        for mu in partitions_of(n):
            y = yamanouchi_tableau(mu)
            assert is_ballot_tableau(y)
            assert tableau_content(y) == mu


def test_restrict_rows():
    t = SkewTableau((9, 7, 6, 5), (6, 4, 0, 0),
                    [(1, 1, 1), (1, 1, 2), (1, 2, 2, 2, 2, 3), (3, 3, 3, 3, 4)])
    bottom, top = restrict_rows(t, 3)
    assert bottom.rows == ((3, 3, 3, 3, 4),)
    assert (bottom.outer, bottom.inner) == ((5,), (0,))
    assert top.outer == (9, 7, 6)
    b0, t0 = restrict_rows(t, 0)
    assert b0 == t and t0 == EMPTY
    b4, t4 = restrict_rows(t, 4)
    assert t4 == t and b4 == EMPTY
    with pytest.raises(ValueError):
        restrict_rows(t, 5)


def test_validation_rejects_bad_fillings():
    with pytest.raises(ValueError):
        SkewTableau((2,), (), [(2, 1)])        # row decreasing
    with pytest.raises(ValueError):
        SkewTableau((1, 1), (), [(1,), (1,)])  # column not strict
    with pytest.raises(ValueError):
        SkewTableau((1,), (2,), [()])          # inner not contained
    with pytest.raises(ValueError):
        SkewTableau((2,), (), [(0, 1)])        # entries below 1


def test_enumerate_ballot_examples():
    only = enumerate_ballot(skew_shape((2, 1), ()), (2, 1))
    assert only == [yamanouchi_tableau((2, 1))]
    assert len(enumerate_ballot(skew_shape((3, 2, 1), (2, 1)), (2, 1))) == 2
    hits = enumerate_ballot(skew_shape((4, 3, 2), (2, 1)), (3, 2, 1))
    assert T_BALLOT in hits


def test_enumerate_ballot_normal_shape_forces_yamanouchi():
    for n in range(7):
        for lam in partitions_of(n):
            for nu in partitions_of(n):
                got = enumerate_ballot(skew_shape(lam, ()), nu)
                if lam == nu:
                    assert got == [yamanouchi_tableau(nu)]
                else:
                    assert got == []


def test_enumerate_ballot_against_filter_oracle():
    # independent oracle: plain fill-and-filter over all semistandard fillings
    for shape in all_shapes(6):
        n = shape.size
        for nu in partitions_of(n, max_len=max(1, len(shape.outer))):
            brute = [t for t in enumerate_ssyt(shape, max(1, len(nu) or 1))
                     if tableau_content(t) == nu and is_ballot_tableau(t)]
            fast = enumerate_ballot(shape, nu)
            assert fast == sorted(brute, key=reading_word)
            for t in fast:
                t._validate()


def test_enumerate_ssyt_examples():
    assert [t.rows for t in enumerate_ssyt(skew_shape((1,), ()), 3)] == \
        [((1,),), ((2,),), ((3,),)]
    assert [t.rows for t in enumerate_ssyt(skew_shape((2,), ()), 2)] == \
        [((1, 1),), ((1, 2),), ((2, 2),)]
    assert len(enumerate_ssyt(skew_shape((2, 1), ()), 2)) == 2


def test_enumerate_ssyt_valid_and_lex_sorted():
    for shape in all_shapes(5):
        ts = enumerate_ssyt(shape, 3)
        words = [reading_word(t) for t in ts]
        assert words == sorted(words)
        for t in ts:
            t._validate()


def test_glue():
    a = yamanouchi_tableau((2, 1))
    b = SkewTableau((3, 2), (2, 1), [(1,), (2,)])
    g = glue(a, b)
    assert g.rows == ((1, 1, 1), (2, 2))
    with pytest.raises(ValueError):
        glue(a, SkewTableau((3, 2), (1, 1), [(1, 1), (2,)]))


def test_json_round_trip_examples():
    for t in (T_BALLOT, EMPTY, empty_of_shape((2, 2)), yamanouchi_tableau((3, 1))):
        assert from_json(to_json(t)) == t
    d = json.loads(to_json(T_BALLOT))
    assert d == {"outer": [4, 3, 2], "inner": [2, 1, 0],
                 "rows": [[1, 1], [1, 2], [2, 3]]}


def test_text_round_trip_exhaustive():
    for shape in all_shapes(5):
        for t in enumerate_ssyt(shape, 2):
            assert from_text(to_text(t)) == t
            assert from_json(to_json(t)) == t


def test_text_format_shape():
    assert to_text(T_BALLOT) == ". . 1 1\n. 1 2\n2 3"
    assert to_text(empty_of_shape((2,))) == ". ."
    assert to_text(EMPTY) == ""


@given(st.integers(min_value=0, max_value=8))
def test_partitions_of_are_partitions(n):
    seen = set()
    for p in partitions_of(n):
        assert sum(p) == n
        assert as_partition(p) == p
        seen.add(p)
    assert len(seen) == len(list(partitions_of(n)))
