"""Cached enumeration of small recording tableaux shared by several test modules."""

from functools import lru_cache

from qlrinv.recording import enumerate_rec
from qlrinv.shapes import partitions_up_to, subpartitions


@lru_cache(maxsize=None)
def all_recs(n, max_size):
    out = []
    for lam in partitions_up_to(max_size, max_length=2 * n):
        for mu in subpartitions(lam, n):
            out.extend(enumerate_rec(lam, mu, n))
    return tuple(out)
