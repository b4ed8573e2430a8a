import pytest
from hypothesis import given

from qlrinv.shapes import (
    SkewShape,
    SkewTableau,
    add,
    conjugate,
    is_even_partition,
    is_vertical_strip,
    is_yamanouchi,
    parse_text,
    partition,
    partitions_of,
    partitions_up_to,
    removable_rows,
    render,
    reverse_column_word,
    subpartitions,
    words,
    yamanouchi_tableau,
)

from strategies import semistandard
from worked import LRS_T


def test_partition_canonical_form():
    assert partition((3, 1, 0, 0)) == (3, 1)
    assert partition(()) == ()
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


@pytest.mark.parametrize("inner, outer, expected", [
    ((3, 1), (4, 3, 2, 2, 1), False),
    ((3, 2, 2, 1), (4, 3, 2, 2, 1), True),
    ((), (), True),
    ((2,), (1,), False),
])
def test_is_vertical_strip(inner, outer, expected):
    assert is_vertical_strip(inner, outer) is expected


def test_words_single_row():
    rev_row, col, rev_col = words(SkewTableau.from_rows([(1, 1, 2)]))
    assert rev_row == (2, 1, 1)
    assert col == (1, 1, 2)
    assert rev_col == (2, 1, 1)


def test_words_empty():
    assert words(SkewTableau.empty()) == ((), (), ())
    assert words(SkewTableau.empty((2, 1))) == ((), (), ())


def test_words_skew_skip_inner_cells():
    T = SkewTableau.from_rows([(1,), (1, 2)], inner=(2, 1))
    assert words(T) == ((1, 2, 1), (1, 2, 1), (1, 2, 1))


def test_lrs_example_reverse_column_word_is_yamanouchi():
    w = reverse_column_word(LRS_T)
    assert w == (1, 2, 1, 2, 3, 1, 2, 4)
    assert is_yamanouchi(w)


@pytest.mark.parametrize("word, expected", [
    ((1, 1, 2, 1), True), ((2, 1), False), ((), True), ((1, 2, 1, 3, 2, 1), True), ((1, 2, 3, 2), False), ((1, 2, 2), False),
])
def test_is_yamanouchi(word, expected):
    assert is_yamanouchi(word) is expected


def test_yamanouchi_tableau():
    assert yamanouchi_tableau((3, 3, 1, 1)).rows == ((1, 1, 1), (2, 2, 2), (3,), (4,))
    assert yamanouchi_tableau(()) == SkewTableau.empty()
    assert yamanouchi_tableau((2,)).rows == ((1, 1),)


def test_conjugate_examples():
    assert conjugate((3, 3, 1, 1)) == (4, 2, 2)
    assert conjugate(()) == ()
    assert conjugate((1,)) == (1,)


def test_is_even_partition_examples():
    assert is_even_partition((3, 3, 1, 1))
    assert not is_even_partition((2, 1))
    assert is_even_partition(())
    assert not is_even_partition((1,))


def test_conjugate_involution_and_evenness_exhaustive():
    count = 0
    for gamma in partitions_up_to(12):
        assert conjugate(conjugate(gamma)) == gamma
        assert is_even_partition(gamma) == all(p % 2 == 0 for p in conjugate(gamma))
        count += 1
    assert count == sum(1 for s in range(13) for _ in partitions_of(s))
    assert count >= 200


def test_yamanouchi_tableau_words_exhaustive():
    for nu in partitions_up_to(10):
        Y = yamanouchi_tableau(nu)
        assert is_yamanouchi(reverse_column_word(Y))
        assert Y.weight() == nu


@given(semistandard(max_size=12, max_entry=6))
def test_word_weights_match_tableau_weight(T):
    for w in words(T):
        assert sorted(w) == sorted(x for r in T.rows for x in r)


@given(semistandard(max_size=12, max_entry=6))
def test_render_parse_round_trip(T):
    assert parse_text(render(T)) == T


def test_render_skew():
    T = SkewTableau.from_rows([(1,), (1, 2)], inner=(2, 1))
    assert render(T) == ". . 1\n. 1 2"
    assert parse_text(render(T)) == T
    E = SkewTableau.empty((2, 1))
    assert parse_text(render(E)) == E


def test_tableau_validation():
    with pytest.raises(ValueError):
        SkewTableau((2,), (), ((1,),))
    with pytest.raises(ValueError):
        SkewTableau((1,), (), ((0,),))
    assert not SkewTableau.from_rows([(2,), (2,)]).is_semistandard()
    assert not SkewTableau.from_rows([(2, 1)]).is_semistandard()


def test_tableau_accessors():
    T = SkewTableau.from_rows([(1, 1, 2), (2, 3)])
    assert T.columns() == ((1, 2), (1, 3), (2,))
    assert SkewTableau.from_columns(T.columns()) == T
    assert T.entry(2, 2) == 3 and T.entry(2, 3) is None and T.entry(0, 1) is None
    assert T.weight() == (2, 2, 1)
    assert T.weight(4) == (2, 2, 1, 0)
    assert T.restrict((2, 1)).rows == ((1, 1), (2,))
    assert SkewShape((3, 2), (1,)).size == 4
    assert list(SkewShape((2, 1), (1,)).cells()) == [(1, 2), (2, 1)]


def test_partition_helpers():
    assert add((3, 1), (1, 1, 1)) == (4, 2, 1)
    assert removable_rows((3, 3, 1)) == (2, 3)
    assert sorted(subpartitions((2, 1))) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert sorted(subpartitions((2, 1), max_length=1)) == [(), (1,), (2,)]
    assert list(partitions_of(4, max_length=2)) == [(4,), (3, 1), (2, 2)]

