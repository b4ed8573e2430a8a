"""Brute-force enumerators and the bijectivity audit.

The audit applies the inverse map to every pair ``(S, Q)`` with ``S`` a
symplectic tableau of shape ``μ`` and ``Q`` in ``Rec_{2n}(λ/μ)``, and checks
that the images are exactly ``SST_{2n}(λ)``, each hit once.  The resulting
table (image -> pair) doubles as a forward map by lookup.

Tables can be cached on disk, one JSON file per ``(n, λ)``.  Each file records
a format version and a SHA-256 checksum of its payload; a file that fails
either check is ignored and regenerated.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from . import _kernels
from .errors import InvariantViolation, NotFound
from .inverse import lr_aii_inverse
from .recording import RecordingTableau, enumerate_rec
from .shapes import Partition, SkewShape, SkewTableau, partition, subpartitions

log = logging.getLogger(__name__)

CACHE_FORMAT = "qlrinv-audit"
CACHE_VERSION = 1

Rows = Tuple[Tuple[int, ...], ...]


def enumerate_sst(shape: SkewShape, bound: int) -> List[SkewTableau]:
    """Every semistandard filling of ``shape`` with entries in ``[1, bound]``, lexicographically."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    return [SkewTableau(shape.outer, shape.inner, rows)
            for rows in _kernels.sst_rows(shape.outer, shape.inner, bound)]


def is_symplectic(T: SkewTableau, n: Optional[int] = None) -> bool:
    """Semistandard, straight, with ``T(k, 1) >= 2k - 1``."""
    if not T.is_straight or not T.is_semistandard():
        return False
    if n is not None and (len(T.rows) > n or T.max_entry() > 2 * n):
        return False
    return all(r[0] >= 2 * k - 1 for k, r in enumerate(T.rows, start=1))


def enumerate_spt(mu: Sequence[int], n: int) -> List[SkewTableau]:
    """Symplectic tableaux of shape ``μ`` over ``[1, 2n]``; empty when ``ℓ(μ) > n``."""
    mu = partition(mu)
    if len(mu) > n:
        return []
    return [T for T in enumerate_sst(SkewShape(mu), 2 * n)
            if all(r[0] >= 2 * k - 1 for k, r in enumerate(T.rows, start=1))]


@dataclass(frozen=True)
class MuCount:
    mu: Partition
    spt_count: int
    rec_count: int


@dataclass(frozen=True)
class AuditReport:
    """Counts of one audit; ``per_mu`` lists the ``μ`` with a nonempty ``Rec_{2n}(λ/μ)``."""

    lam: Partition
    n: int
    sst_count: int
    per_mu: Tuple[MuCount, ...]
    image_count: int
    injective: bool
    covered: bool
    errors: int = 0
    outside: int = 0

    @property
    def pair_count(self) -> int:
        return sum(m.spt_count * m.rec_count for m in self.per_mu)


@dataclass(frozen=True)
class AuditTable:
    report: AuditReport
    preimage: Dict[SkewTableau, Tuple[SkewTableau, RecordingTableau]]


# ---------------------------------------------------------------------------
# cache records


def _payload(table: AuditTable) -> dict:
    rep = table.report
    entries = []
    for T, (S, Q) in sorted(table.preimage.items(), key=lambda kv: kv[0].rows):
        entries.append([[list(r) for r in T.rows], [list(r) for r in S.rows],
                        [list(r) for r in Q.tableau.rows]])
    return {
        "lambda": list(rep.lam),
        "n": rep.n,
        "sst_count": rep.sst_count,
        "per_mu": [[list(m.mu), m.spt_count, m.rec_count] for m in rep.per_mu],
        "image_count": rep.image_count,
        "injective": rep.injective,
        "covered": rep.covered,
        "errors": rep.errors,
        "outside": rep.outside,
        "entries": entries,
    }


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _from_payload(payload: dict) -> AuditTable:
    lam = partition(payload["lambda"])
    n = int(payload["n"])
    report = AuditReport(
        lam, n, payload["sst_count"],
        tuple(MuCount(partition(m), s, r) for m, s, r in payload["per_mu"]),
        payload["image_count"], payload["injective"], payload["covered"],
        payload["errors"], payload["outside"])
    preimage = {}
    for t_rows, s_rows, q_rows in payload["entries"]:
        T = SkewTableau(lam, (), tuple(tuple(r) for r in t_rows))
        S = SkewTableau.from_rows(s_rows)
        Q = RecordingTableau(SkewTableau(lam, S.outer, tuple(tuple(r) for r in q_rows)), n)
        preimage[T] = (S, Q)
    return AuditTable(report, preimage)


def cache_path(cache_dir: os.PathLike, lam: Sequence[int], n: int) -> Path:
    name = "_".join(str(p) for p in lam) or "empty"
    return Path(cache_dir) / f"n{n}" / f"{name}.json"


def load_cached(cache_dir: os.PathLike, lam: Sequence[int], n: int) -> Optional[AuditTable]:
    """The cached table, or ``None`` if absent, stale or corrupt."""
    path = cache_path(cache_dir, lam, n)
    try:
        record = json.loads(path.read_text())
        if record.get("format") != CACHE_FORMAT or record.get("version") != CACHE_VERSION:
            log.info("ignoring cache %s: unknown format or version", path)
            return None
        payload = record["payload"]
        if _checksum(payload) != record.get("sha256"):
            log.warning("ignoring cache %s: checksum mismatch", path)
            return None
        table = _from_payload(payload)
    except FileNotFoundError:
        return None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring cache %s: %s", path, exc)
        return None
    if table.report.lam != partition(lam) or table.report.n != n:
        return None
    return table


def store_cached(cache_dir: os.PathLike, table: AuditTable) -> Path:
    path = cache_path(cache_dir, table.report.lam, table.report.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = _payload(table)
    record = {"format": CACHE_FORMAT, "version": CACHE_VERSION,
              "sha256": _checksum(payload), "payload": payload}
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(record, sort_keys=True))
    os.replace(tmp, path)
    return path


# ---------------------------------------------------------------------------
# audit


def build_table(lam: Sequence[int], n: int) -> AuditTable:
    lam = partition(lam)
    targets = set(enumerate_sst(SkewShape(lam), 2 * n))
    preimage: Dict[SkewTableau, Tuple[SkewTableau, RecordingTableau]] = {}
    per_mu: List[MuCount] = []
    collisions = errors = outside = 0
    if len(lam) <= 2 * n:
        for mu in sorted(subpartitions(lam, n)):
            recs = enumerate_rec(lam, mu, n)
            if not recs:
                continue
            spts = enumerate_spt(mu, n)
            per_mu.append(MuCount(mu, len(spts), len(recs)))
            for S in spts:
                for Q in recs:
                    try:
                        T = lr_aii_inverse(S, Q)
                    except InvariantViolation as exc:
                        log.debug("inverse failed on %s, %s: %s", S.rows, Q.tableau.rows, exc)
                        errors += 1
                        continue
                    if T not in targets:
                        outside += 1
                    if T in preimage:
                        collisions += 1
                    else:
                        preimage[T] = (S, Q)
    injective = collisions == 0
    image_count = len(preimage)
    covered = (injective and errors == 0 and outside == 0
               and image_count == len(targets))
    report = AuditReport(lam, n, len(targets), tuple(per_mu), image_count,
                         injective, covered, errors, outside)
    return AuditTable(report, preimage)


def audit_table(lam: Sequence[int], n: int,
                cache_dir: Optional[os.PathLike] = None) -> AuditTable:
    """The audit table for ``(n, λ)``, read from or written to ``cache_dir`` if given."""
    lam = partition(lam)
    if cache_dir is not None:
        cached = load_cached(cache_dir, lam, n)
        if cached is not None:
            return cached
    table = build_table(lam, n)
    if cache_dir is not None:
        store_cached(cache_dir, table)
    return table


def audit_bijection(lam: Sequence[int], n: int,
                    cache_dir: Optional[os.PathLike] = None) -> AuditReport:
    """Run (or load) the audit for ``SST_{2n}(λ)``; failures are recorded, not raised."""
    return audit_table(lam, n, cache_dir).report


def forward_by_search(T: SkewTableau, n: int,
                      cache_dir: Optional[os.PathLike] = None) -> Tuple[SkewTableau, RecordingTableau]:
    """The pair ``(S, Q)`` whose inverse image is ``T``.

    Raises:
        NotFound: if ``T`` is not semistandard over ``[1, 2n]``, the audit for
            its shape failed, or ``T`` has no preimage.
    """
    if not T.is_straight or not T.is_semistandard() or T.max_entry() > 2 * n:
        raise NotFound(f"not a semistandard tableau over [1, {2 * n}]:\n{T}")
    table = audit_table(T.outer, n, cache_dir)
    if not table.report.covered:
        raise NotFound(f"audit for λ={T.outer}, n={n} is not covered")
    try:
        return table.preimage[T]
    except KeyError:
        raise NotFound(f"no preimage for\n{T}") from None
