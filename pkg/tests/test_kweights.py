import pytest

from qlrinv.kweights import (
    HIGHEST,
    LOWEST,
    TYPE1,
    TYPE2,
    KWeight,
    classify_n2,
    extremal_symplectic,
    generate_khw_entries,
    generate_khw_set,
    hook_rows,
    hook_shape,
    k_weight,
    khw_vertical_strip,
    uv_sequences,
)
from qlrinv.oracle import audit_bijection
from qlrinv.shapes import SkewTableau, partitions_up_to
from qlrinv.slack import slack_profile

from worked import KHW_STRIP, N2_ITEM1_CHAIN, N2_ITEM2_CHAIN, N2_ITEM3_CASES


@pytest.mark.parametrize("n, u, v", [
    (1, (2,), (1,)),
    (6, (2, 3, 6, 7, 10, 11), (1, 4, 5, 8, 9, 12)),
    (7, (2, 3, 6, 7, 10, 11, 14), (1, 4, 5, 8, 9, 12, 13)),
])
def test_uv_sequences(n, u, v):
    assert uv_sequences(n) == (u, v)


def test_uv_sequences_partition_the_alphabet():
    for n in range(1, 10):
        u, v = uv_sequences(n)
        assert sorted(u + v) == list(range(1, 2 * n + 1))


def test_k_weight_of_empty_tableau():
    assert k_weight(SkewTableau.empty(), 3) == KWeight((0, 0, 0))


def test_extremal_examples():
    assert extremal_symplectic((6, 4, 2), 3).rows == ((2,) * 6, (3,) * 4, (6,) * 2)
    assert extremal_symplectic((3, 1), 2, LOWEST).rows == ((1, 1, 1), (4,))
    assert extremal_symplectic((), 2) == SkewTableau.empty()
    with pytest.raises(ValueError):
        extremal_symplectic((1, 1, 1), 2)


def test_extremal_weights_are_plus_minus_mu():
    for mu in partitions_up_to(8, max_length=3):
        for n in range(max(len(mu), 1), 4):
            padded = tuple(mu) + (0,) * (n - len(mu))
            H = extremal_symplectic(mu, n, HIGHEST)
            L = extremal_symplectic(mu, n, LOWEST)
            assert k_weight(H, n) == KWeight(padded)
            assert k_weight(L, n) == -KWeight(padded)
            assert k_weight(H, n).is_dominant


def test_khw_vertical_strip_example():
    T = khw_vertical_strip((4, 2), (6,), 5, 3)
    assert T == KHW_STRIP
    assert T.columns()[0] == (1, 2, 3, 4, 6)
    assert k_weight(T, 3) == KWeight((4, 2, 1))


def test_khw_vertical_strip_null_slack():
    T = khw_vertical_strip((4, 2), (), 4, 3)
    assert T.columns()[0] == (1, 2, 3, 4)
    assert k_weight(T, 3) == KWeight((4, 2, 0))


def test_khw_vertical_strip_rejects_bad_subsets():
    with pytest.raises(ValueError):
        khw_vertical_strip((4, 2), (5,), 5, 3)      # 5 is a v value
    with pytest.raises(ValueError):
        khw_vertical_strip((2, 2), (3,), 5, 3)      # (2, 3) is not a partition


def test_generation_trivial_and_n1():
    assert generate_khw_set((), 1) == [SkewTableau.empty()]
    highs = generate_khw_set((2, 1), 1, HIGHEST)
    lows = generate_khw_set((2, 1), 1, LOWEST)
    assert [T.rows for T in highs] == [((1, 2), (2,))]
    assert [T.rows for T in lows] == [((1, 1), (2,))]


@pytest.mark.parametrize("kind", [HIGHEST, LOWEST])
def test_n1_outputs_are_the_hook_tableaux(kind):
    count = 0
    for lam in partitions_up_to(12, max_length=2):
        for e in generate_khw_entries(lam, 1, kind):
            u = e.mu[0] if e.mu else 0
            N = e.Q.length
            assert e.T.outer == hook_shape(N, u)
            rows = tuple(r for r in hook_rows(kind, N, u) if r)
            assert e.T.rows == rows
            count += 1
    assert count > 0


@pytest.mark.parametrize("kind", [HIGHEST, LOWEST])
def test_generated_weights_match_generating_shape(kind):
    for n, size in ((1, 8), (2, 8), (3, 6)):
        for lam in partitions_up_to(size, max_length=2 * n):
            for e in generate_khw_entries(lam, n, kind):
                padded = tuple(e.mu) + (0,) * (n - len(e.mu))
                expected = KWeight(padded) if kind == HIGHEST else -KWeight(padded)
                assert k_weight(e.T, n) == expected


def test_generated_count_matches_recording_count():
    for n, size in ((1, 8), (2, 8), (3, 6)):
        for lam in partitions_up_to(size, max_length=2 * n):
            report = audit_bijection(lam, n)
            entries = generate_khw_entries(lam, n)
            assert len(entries) == sum(m.rec_count for m in report.per_mu)


def test_n2_classification_examples():
    assert classify_n2(N2_ITEM2_CHAIN[-1]).label == TYPE1
    assert classify_n2(N2_ITEM3_CASES[0][2]).label == TYPE2
    assert classify_n2(N2_ITEM1_CHAIN[-1]).label == TYPE1


def test_n2_classification_tie():
    S = extremal_symplectic((2, 1), 2)
    c = classify_n2(S)
    assert c.ambiguous and c.label == TYPE2
    assert classify_n2(S, tie=TYPE1).label == TYPE1
    assert classify_n2(SkewTableau.from_rows([(1, 1), (3,)])).label == "reject"


def test_n2_every_highest_weight_tableau_classifies():
    total = 0
    for lam in partitions_up_to(10, max_length=4):
        for e in generate_khw_entries(lam, 2):
            c = classify_n2(e.T)
            assert c.label in (TYPE1, TYPE2)
            assert c.inequalities_hold
            total += 1
    assert total >= 200


def test_n2_slack_vectors_have_the_stated_form():
    """Slack 1 strips come first, with vectors of the form (1..1, 2..2, 3..3, (), ...)."""
    for lam in partitions_up_to(10, max_length=4):
        for e in generate_khw_entries(lam, 2):
            p = slack_profile(e.Q)
            t = p.slack_sequence
            assert all(x in (0, 1) for x in t)
            assert list(t) == sorted(t, reverse=True)
            flat = [r[0] for r in p.vector_sequence if r]
            assert flat == sorted(flat) and set(flat) <= {1, 2, 3}


def test_n2_worked_tableau_is_generated():
    assert N2_ITEM2_CHAIN[-1] in generate_khw_set((10, 8, 5, 1), 2)
