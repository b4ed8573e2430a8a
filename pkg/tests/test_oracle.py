import json
import logging
from fractions import Fraction

import pytest

from qlrinv.errors import NotFound
from qlrinv.inverse import lr_aii_inverse
from qlrinv.oracle import (
    audit_bijection,
    audit_table,
    cache_path,
    enumerate_spt,
    enumerate_sst,
    forward_by_search,
    is_symplectic,
    load_cached,
)
from qlrinv.shapes import SkewShape, SkewTableau, conjugate, partitions_up_to

AUDIT_RANGES = [(1, 8), (2, 8), (3, 6)]


def hook_content(lam, m):
    """Number of semistandard tableaux of shape ``λ`` over ``[1, m]``."""
    cols = conjugate(lam)
    out = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + cols[j] - i - 1
            out *= Fraction(m + j - i, hook)
    return int(out)


def test_sst_counts_match_hook_content():
    for lam in partitions_up_to(7):
        for m in range(1, 5):
            assert len(enumerate_sst(SkewShape(lam), m)) == hook_content(lam, m)


def test_sst_skew_and_trivial():
    assert [T.rows for T in enumerate_sst(SkewShape((2, 1), (1,)), 2)] == \
        [((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((2,), (2,))]
    assert enumerate_sst(SkewShape(()), 3) == [SkewTableau.empty()]
    assert enumerate_sst(SkewShape((1, 1)), 1) == []


@pytest.mark.parametrize("mu, n, count", [
    ((), 1, 1), ((3,), 1, 4), ((1,), 2, 4), ((1, 1), 2, 5), ((2,), 2, 10),
    ((2, 1), 2, 16), ((2, 2), 2, 14), ((3,), 2, 20), ((1, 1, 1), 3, 14), ((1, 1), 1, 0),
])
def test_spt_counts_match_symplectic_dimensions(mu, n, count):
    found = enumerate_spt(mu, n)
    assert len(found) == count
    assert all(is_symplectic(T, n) for T in found)


def test_is_symplectic():
    assert is_symplectic(SkewTableau.from_rows([(1, 2), (3,)]), 2)
    assert not is_symplectic(SkewTableau.from_rows([(1, 2), (2,)]))
    assert not is_symplectic(SkewTableau.from_rows([(1,), (3,)]), 1)


@pytest.mark.parametrize("n, size", AUDIT_RANGES)
def test_audit_covers_every_shape(n, size):
    for lam in partitions_up_to(size):
        rep = audit_bijection(lam, n)
        assert rep.covered and rep.injective
        assert rep.errors == 0 and rep.outside == 0
        assert rep.image_count == rep.sst_count == rep.pair_count


def test_audit_of_too_long_shape_is_empty():
    rep = audit_bijection((1, 1, 1), 1)
    assert rep.sst_count == 0 and rep.per_mu == () and rep.covered


def test_cache_round_trip(tmp_path):
    first = audit_table((3, 2, 1), 2, tmp_path)
    path = cache_path(tmp_path, (3, 2, 1), 2)
    assert path.exists()
    again = load_cached(tmp_path, (3, 2, 1), 2)
    assert again.report == first.report
    assert again.preimage == first.preimage
    assert cache_path(tmp_path, (), 1).name == "empty.json"


def test_corrupt_cache_is_regenerated(tmp_path, caplog):
    table = audit_table((2, 2), 2, tmp_path)
    path = cache_path(tmp_path, (2, 2), 2)
    record = json.loads(path.read_text())
    record["payload"]["image_count"] += 1
    path.write_text(json.dumps(record))
    with caplog.at_level(logging.WARNING):
        assert load_cached(tmp_path, (2, 2), 2) is None
    assert "checksum" in caplog.text
    assert audit_table((2, 2), 2, tmp_path).report == table.report
    assert load_cached(tmp_path, (2, 2), 2) is not None


def test_unreadable_or_foreign_cache_is_ignored(tmp_path):
    audit_table((2,), 1, tmp_path)
    path = cache_path(tmp_path, (2,), 1)
    path.write_text("{not json")
    assert load_cached(tmp_path, (2,), 1) is None
    path.write_text(json.dumps({"format": "other", "version": 1}))
    assert load_cached(tmp_path, (2,), 1) is None
    assert load_cached(tmp_path, (5,), 1) is None


def test_forward_by_search_round_trip(tmp_path):
    for lam in partitions_up_to(5, max_length=4):
        for T in enumerate_sst(SkewShape(lam), 4):
            S, Q = forward_by_search(T, 2, tmp_path)
            assert lr_aii_inverse(S, Q) == T


def test_forward_by_search_rejects():
    with pytest.raises(NotFound):
        forward_by_search(SkewTableau.from_rows([(2, 1)]), 2)
    with pytest.raises(NotFound):
        forward_by_search(SkewTableau.from_rows([(5,)]), 2)
