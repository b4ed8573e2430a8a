"""Both kernel backends must agree exactly, including on errors."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from qlrinv import _kernels
from qlrinv._kernels import _pykernels
from qlrinv.errors import DominanceViolation, NotACorner
from qlrinv.shapes import partitions_up_to, subpartitions

from strategies import semistandard

BACKENDS = _kernels.available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def test_python_backend_always_available():
    assert BACKENDS["python"] is _pykernels
    assert _kernels.BACKEND in BACKENDS


def test_environment_override_selects_python():
    code = "import qlrinv._kernels as k; print(k.BACKEND)"
    env = dict(os.environ, QLRINV_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@compiled
def test_compiled_is_default_when_built():
    env = {k: v for k, v in os.environ.items() if k != "QLRINV_PURE_PYTHON"}
    code = "import qlrinv._kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "cython"


@compiled
def test_sst_rows_agree_exhaustively():
    c = BACKENDS["cython"]
    for lam in partitions_up_to(6):
        for mu in subpartitions(lam):
            for m in (1, 2, 3, 4):
                assert c.sst_rows(lam, mu, m) == _pykernels.sst_rows(lam, mu, m)


def _outcome(fn, *args):
    try:
        return ("ok", fn(*args))
    except (NotACorner, DominanceViolation) as exc:
        return (type(exc).__name__, None)


@compiled
@given(semistandard(max_size=10, max_entry=7), st.integers(1, 8))
def test_column_insert_agrees(T, x):
    c = BACKENDS["cython"]
    assert c.column_insert(T.columns(), x) == _pykernels.column_insert(T.columns(), x)


@compiled
@given(semistandard(max_size=10, max_entry=7),
       st.lists(st.integers(1, 7), max_size=4, unique=True))
def test_reverse_extract_agrees(T, rows):
    c = BACKENDS["cython"]
    cols = T.columns()
    assert _outcome(c.reverse_extract, cols, tuple(rows)) == \
        _outcome(_pykernels.reverse_extract, cols, tuple(rows))


@compiled
@given(semistandard(max_size=8, max_entry=6),
       st.lists(st.integers(1, 8), min_size=0, max_size=7, unique=True))
def test_prepend_column_agrees(T, column):
    c = BACKENDS["cython"]
    column = tuple(sorted(column))
    assert _outcome(c.prepend_column, column, T.columns()) == \
        _outcome(_pykernels.prepend_column, column, T.columns())


def test_reload_is_stable():
    mod = importlib.reload(_kernels)
    assert mod.BACKEND in ("python", "cython")
