import pytest

from lrcommute.insertion import (GluedPair, apply_order_word, extended_insert,
                                 glued_pair, inner_corners, internal_insert,
                                 is_lr_pair, lr_violation, order_word_steps,
                                 skew_rsk_forward, skew_rsk_inverse)
from lrcommute.knuth import p_tableau_rows
from lrcommute.tableaux import (EMPTY, SkewTableau, empty_of_shape,
                                is_ballot_tableau, reading_word,
                                subpartitions, yamanouchi_tableau)
from lrcommute.verify import packed_fillings, partitions_up_to

T_WORDS = SkewTableau((3, 2), (1, 0), [(1, 3), (2, 3)])
RESULT_WORDS = SkewTableau((4, 3, 2, 1), (4, 2, 0, 0), [(), (3,), (1, 3), (2,)])


def small_tableaux(max_boxes):
    for lam in partitions_up_to(max_boxes):
        for mu in subpartitions(lam):
            yield from packed_fillings(lam, mu + (0,) * (len(lam) - len(mu)))


def test_inner_corners_examples():
    assert inner_corners(T_WORDS) == [1, 2]
    assert inner_corners(EMPTY) == [1]
    assert inner_corners(empty_of_shape((2,))) == [1, 2]


def test_inner_corners_match_insertability():
    for t in small_tableaux(5):
        listed = set(inner_corners(t))
        for i in range(1, len(t.outer) + 3):
            try:
                internal_insert(t, i)
                ok = True
            except ValueError:
                ok = False
            assert ok == (i in listed), (t, i)


def test_internal_insert_blank_cases():
    out, tr = internal_insert(EMPTY, 1)
    assert out == empty_of_shape((1,))
    assert tr.route == () and tr.created == tr.vacated == (1, 1)
    # a blank corner needs room under the row above
    t = empty_of_shape((2, 2))
    assert inner_corners(t) == [1, 3]
    assert internal_insert(t, 1)[0] == empty_of_shape((3, 2))
    assert internal_insert(t, 3)[0] == empty_of_shape((2, 2, 1))
    with pytest.raises(ValueError):
        internal_insert(t, 2)


def test_internal_insert_word_steps():
    # the five steps of phi_{12121}, each state frozen
    t1, tr1 = internal_insert(T_WORDS, 1)
    assert (t1.outer, t1.inner, t1.rows) == ((3, 2, 1), (2, 0, 0),
                                             ((3,), (1, 3), (2,)))
    assert tr1.route == ((1, 2), (2, 1), (3, 1)) and tr1.created == (3, 1)
    t2, _ = internal_insert(t1, 2)
    assert (t2.outer, t2.rows) == ((3, 2, 1, 1), ((3,), (3,), (1,), (2,)))
    t3, _ = internal_insert(t2, 1)
    assert (t3.outer, t3.rows) == ((3, 3, 1, 1), ((), (3, 3), (1,), (2,)))
    t4, _ = internal_insert(t3, 2)
    assert (t4.outer, t4.rows) == ((3, 3, 2, 1), ((), (3,), (1, 3), (2,)))
    t5, tr5 = internal_insert(t4, 1)
    assert t5 == RESULT_WORDS
    assert tr5.route == ()  # final step adjoins a blank corner


def test_internal_insert_shape_accounting():
    for t in small_tableaux(5):
        for i in inner_corners(t):
            out, tr = internal_insert(t, i)
            out._validate()
            assert sum(out.inner) == sum(t.inner) + 1
            assert sum(out.outer) == sum(t.outer) + 1
            assert out.size == t.size
            if tr.route:
                rows = [c[0] for c in tr.route]
                assert rows == list(range(tr.vacated[0], tr.vacated[0] + len(rows)))
                assert tr.created == tr.route[-1]
            else:
                assert tr.created == tr.vacated


def test_internal_insert_preserves_knuth_and_ballot():
    for t in small_tableaux(8):
        w = p_tableau_rows(reading_word(t))
        ballot = is_ballot_tableau(t)
        for i in inner_corners(t):
            out, _ = internal_insert(t, i)
            assert p_tableau_rows(reading_word(out)) == w
            if ballot:
                assert is_ballot_tableau(out)


def test_three_letter_commutations():
    # phi_i phi_n phi_k = phi_n phi_i phi_k (i <= k < n) and
    # phi_k phi_i phi_n = phi_k phi_n phi_i (i < k <= n), where defined
    checked = 0
    for t in small_tableaux(5):
        n_rows = len(t.outer) + 1
        for n in range(1, n_rows + 1):
            for k in range(1, n):
                for i in range(1, k + 1):
                    lhs = _try_word(t, (i, n, k))
                    rhs = _try_word(t, (n, i, k))
                    if lhs is not None and rhs is not None:
                        assert lhs == rhs
                        checked += 1
            for k in range(2, n + 1):
                for i in range(1, k):
                    lhs = _try_word(t, (k, i, n))
                    rhs = _try_word(t, (k, n, i))
                    if lhs is not None and rhs is not None:
                        assert lhs == rhs
                        checked += 1
    assert checked > 100


def _try_word(t, word):
    try:
        return apply_order_word(t, word)
    except ValueError:
        return None


def test_apply_order_word_examples():
    assert apply_order_word(T_WORDS, (1, 2, 1, 2, 1)) == RESULT_WORDS
    assert apply_order_word(T_WORDS, (2, 1, 1, 2, 1)) == RESULT_WORDS
    assert apply_order_word(T_WORDS, ()) == T_WORDS
    word = (2, 3, 4, 2, 3, 4, 1, 2, 3, 1, 2, 1, 1)
    assert apply_order_word(EMPTY, word) == empty_of_shape((4, 4, 3, 2))


def test_apply_order_word_reports_step():
    with pytest.raises(ValueError, match="step 2"):
        apply_order_word(EMPTY, (9, 1))


def test_order_word_steps_traces():
    result, traces = order_word_steps(T_WORDS, (1, 2, 1, 2, 1))
    assert result == RESULT_WORDS
    assert len(traces) == 5
    assert traces[0].created == (3, 1)


def test_extended_insert_level2_frames():
    # first-level state of the running example, then phibar_2, phibar_1
    state = GluedPair(yamanouchi_tableau((2,)),
                      SkewTableau((6,), (2,), [(1, 1, 1, 1)]))
    after2 = extended_insert(state, 2)
    assert after2.yam == yamanouchi_tableau((2, 1))
    assert (after2.skew.outer, after2.skew.inner) == ((6, 1), (2, 1))
    after1 = extended_insert(after2, 1)
    assert after1.yam == yamanouchi_tableau((3, 1))
    assert after1.skew.rows == ((1, 1, 1), (1,))


def test_extended_insert_blank_and_errors():
    p = GluedPair(yamanouchi_tableau((2,)), empty_of_shape((2,)))
    q = extended_insert(p, 1)
    assert q.yam == yamanouchi_tableau((3,))
    assert q.skew == empty_of_shape((3,))
    with pytest.raises(ValueError):
        extended_insert(p, 3)  # only one row in the Yamanouchi factor
    bad = GluedPair(yamanouchi_tableau((1,)),
                    SkewTableau((2, 1), (1, 0), [(1,), (1,)]))
    with pytest.raises(ValueError):
        extended_insert(bad, 3)


def test_skew_rsk_forward_example():
    u = SkewTableau((4, 2), (1, 0), [(1, 3, 5), (2, 4)])
    p, q = skew_rsk_forward(T_WORDS, u)
    assert p == RESULT_WORDS
    assert q == SkewTableau((4, 3, 2, 1), (3, 2, 0, 0),
                            [(5,), (3,), (1, 4), (2,)])
    q._validate()


def test_skew_rsk_trivial_cases():
    mu = (2, 1)
    t = SkewTableau((3, 2), (2, 1), [(1,), (1,)])
    p, q = skew_rsk_forward(t, empty_of_shape(mu))
    assert p == t
    assert q.size == 0 and q.outer == t.outer
    t2, u2 = skew_rsk_inverse(p, q)
    assert t2 == t and u2 == empty_of_shape(mu)
    with pytest.raises(ValueError):
        skew_rsk_forward(t, empty_of_shape((3,)))


def test_skew_rsk_round_trip_small():
    for mu in partitions_up_to(2):
        shapes = [lam for lam in partitions_up_to(4)
                  if all(a >= b for a, b in zip(lam + (0,) * 9, mu + (0,) * 9))
                  and len(lam) >= len(mu)]
        pool = []
        for lam in shapes:
            pool.extend(packed_fillings(lam, mu + (0,) * (len(lam) - len(mu))))
        for t in pool:
            for u in pool:
                p, q = skew_rsk_forward(t, u)
                p._validate()
                q._validate()
                assert skew_rsk_inverse(p, q) == (t, u)


def test_skew_rsk_inverse_rejects_malformed():
    with pytest.raises(ValueError):
        skew_rsk_inverse(SkewTableau((2,), (), [(1, 2)]),
                         SkewTableau((2,), (1,), [(1,)]))


def test_lr_pair_validation():
    good = glued_pair(SkewTableau((2, 1), (1, 0), [(1,), (1,)]))
    assert is_lr_pair(good)
    assert lr_violation(good) is None
    bad = GluedPair(yamanouchi_tableau((2,)),
                    SkewTableau((2, 1), (1, 0), [(1,), (1,)]))
    assert not is_lr_pair(bad)
    assert "Yamanouchi" in lr_violation(bad)
    not_ballot = glued_pair(SkewTableau((2,), (1,), [(2,)]))
    assert "ballot" in lr_violation(not_ballot)
