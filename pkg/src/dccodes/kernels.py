"""Backend selection for the exhaustive-search kernels.

The compiled extension is used when importable; ``DCCODES_BACKEND=python``
forces the numpy fallback.  ``BACKEND`` names the active one.
"""

import os

import numpy as np

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

# table sizes grow as q^2
KERNEL_Q_LIMIT = 1024

if _compiled is not None and os.environ.get("DCCODES_BACKEND", "").lower() != "python":
    _active = _compiled
    BACKEND = "cython"
else:
    _active = _fallback
    BACKEND = "python"


def backends() -> dict:
    """Every available backend module, keyed by name."""
    out = {"python": _fallback}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def get_backend(name: str | None = None):
    if name is None:
        return _active
    try:
        return backends()[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available") from None


_table_cache: dict = {}


def tables(field) -> tuple[np.ndarray, np.ndarray]:
    """(add, mul) lookup tables as contiguous int32 arrays."""
    if field.q > KERNEL_Q_LIMIT:
        raise ValueError(f"kernels support q <= {KERNEL_Q_LIMIT}, got {field.q}")
    if field not in _table_cache:
        q = field.q
        add = np.array([[field.add(x, y) for y in range(q)] for x in range(q)], dtype=np.int32)
        mul = np.array([[field.mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int32)
        _table_cache[field] = (add, mul)
    return _table_cache[field]


def weight_counts(rows, base, field, backend=None) -> np.ndarray:
    """Weight histogram of ``base`` plus every GF(p)-combination of ``rows``."""
    add, _ = tables(field)
    indptr = [0]
    indices, values = [], []
    for row in rows:
        for c, v in enumerate(row):
            if v:
                indices.append(c)
                values.append(v)
        indptr.append(len(indices))
    return get_backend(backend).weight_counts(
        np.asarray(indptr, dtype=np.int32),
        np.asarray(indices, dtype=np.int32),
        np.asarray(values, dtype=np.int32),
        np.ascontiguousarray(base, dtype=np.int32),
        add,
        field.p,
    )


def self_dual_scan(n: int, field, backend=None) -> np.ndarray:
    add, mul = tables(field)
    return get_backend(backend).self_dual_scan(n, field.q, mul, add, field.neg(1))
