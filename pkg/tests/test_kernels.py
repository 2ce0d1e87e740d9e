"""Compiled and fallback kernels must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dccodes import kernels
from dccodes.codes import generator_rows_over_prime_field, make_code
from dccodes.finite_field import field_from_order
from dccodes.polyring import Poly

HAVE_CYTHON = "cython" in kernels.backends()
needs_cython = pytest.mark.skipif(not HAVE_CYTHON, reason="extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.get_backend("python") is not None
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_tables_limit():
    with pytest.raises(ValueError):
        kernels.tables(field_from_order(2048))


@needs_cython
@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 8, 9]), st.integers(1, 6), st.data())
def test_weight_counts_backends_agree(q, n, data):
    F = field_from_order(q)
    if n % F.p == 0 or q**n > 5**6:
        return
    a = data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))
    rows = generator_rows_over_prime_field(make_code(F, n, Poly(F, tuple(a))))
    base = data.draw(st.lists(st.integers(0, q - 1), min_size=2 * n, max_size=2 * n))
    c = kernels.weight_counts(rows, base, F, backend="cython")
    p = kernels.weight_counts(rows, base, F, backend="python")
    assert np.array_equal(c, p)
    assert c.sum() == q**n


@needs_cython
@pytest.mark.parametrize("q, n", [(2, 7), (2, 9), (5, 3), (5, 4), (13, 3), (9, 3), (4, 5)])
def test_self_dual_scan_backends_agree(q, n):
    F = field_from_order(q)
    c = kernels.self_dual_scan(n, F, backend="cython")
    p = kernels.self_dual_scan(n, F, backend="python")
    assert c.tolist() == p.tolist()


def test_self_dual_scan_sorted():
    hits = kernels.self_dual_scan(3, field_from_order(5))
    assert hits.tolist() == sorted(hits.tolist())
    assert len(hits) == 12
