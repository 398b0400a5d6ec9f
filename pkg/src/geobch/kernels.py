"""Hot inner loops.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy version.
The public names (``geometric_product``, ``geometric_product_batch``,
``pauli_bch_batch``) point at the numba variants unless numba is missing or
``GEOBCH_DISABLE_NUMBA=1`` was set before import.  Both variants are always
importable as ``*_numpy`` / ``*_numba`` (the latter is ``None`` without numba)
so tests and the benchmark can compare them directly.

Blade products use the bitmask basis: the product of blades ``i`` and ``j`` is
``sign[i, j]`` times blade ``i ^ j``.
"""

import cmath

import numpy as np

from ._config import USE_NUMBA, HAVE_NUMBA

# status codes returned by the batched Pauli BCH kernel
OK = 0
SINGULAR_DENOMINATOR = 1
POLE = 2

# |lambda| below this switches tanh(l)/l and atanh(l)/l to their Taylor series
NEAR_NULL = 1e-8
SINGULAR_TOL = 1e-12
POLE_TOL = 1e-14


# --------------------------------------------------------------------------
# numpy implementations
# --------------------------------------------------------------------------

def geometric_product_numpy(a, b, sign):
    dim = a.shape[0]
    idx = np.bitwise_xor.outer(np.arange(dim), np.arange(dim))
    return np.bincount(idx.ravel(), weights=(sign * np.multiply.outer(a, b)).ravel(), minlength=dim)


def _scatter_matrix(dim):
    # one-hot (dim*dim, dim) map from the (i, j) pair to blade i ^ j
    idx = np.bitwise_xor.outer(np.arange(dim), np.arange(dim)).ravel()
    return np.eye(dim)[idx]


def geometric_product_batch_numpy(a, b, sign):
    """Row-wise product of two ``(N, dim)`` coefficient arrays."""
    n, dim = a.shape
    pairs = (a[:, :, None] * b[:, None, :] * sign).reshape(n, dim * dim)
    return pairs @ _scatter_matrix(dim)


def _tanh_ratio_numpy(z):
    small = np.abs(z) < NEAR_NULL ** 2
    s = np.sqrt(np.where(small, 1.0, z))
    with np.errstate(all="ignore"):
        big = np.tanh(s) / s
    return np.where(small, 1.0 - z / 3.0 + 2.0 * z * z / 15.0, big)


def _atanh_ratio_numpy(z):
    small = np.abs(z) < NEAR_NULL ** 2
    s = np.sqrt(np.where(small, 0.25, z))
    with np.errstate(all="ignore"):
        big = np.arctanh(s) / s
    return np.where(small, 1.0 + z / 3.0 + z * z / 5.0, big)


def pauli_bch_batch_numpy(s1, s2):
    """Batched 2x2 BCH on ``(N, 2, 2)`` traceless complex arrays.

    Returns ``(out, status)``; rows with a non-zero status hold NaN.
    """
    s1 = np.asarray(s1, dtype=np.complex128)
    s2 = np.asarray(s2, dtype=np.complex128)
    z1 = s1[:, 0, 0] ** 2 + s1[:, 0, 1] * s1[:, 1, 0]
    z2 = s2[:, 0, 0] ** 2 + s2[:, 0, 1] * s2[:, 1, 0]
    t1 = _tanh_ratio_numpy(z1)[:, None, None] * s1
    t2 = _tanh_ratio_numpy(z2)[:, None, None] * s2
    status = np.zeros(s1.shape[0], dtype=np.int8)
    status[~(np.isfinite(t1).all(axis=(1, 2)) & np.isfinite(t2).all(axis=(1, 2)))] = POLE

    prod = t1 @ t2
    half_trace = 0.5 * (prod[:, 0, 0] + prod[:, 1, 1])
    num = t1 + t2 + prod
    num[:, 0, 0] -= half_trace
    num[:, 1, 1] -= half_trace
    den = 1.0 + half_trace
    status[(status == OK) & (np.abs(den) < SINGULAR_TOL)] = SINGULAR_DENOMINATOR
    with np.errstate(all="ignore"):
        m = num / den[:, None, None]
    zm = m[:, 0, 0] ** 2 + m[:, 0, 1] * m[:, 1, 0]
    status[(status == OK) & (np.abs(zm - 1.0) < POLE_TOL)] = POLE
    out = _atanh_ratio_numpy(zm)[:, None, None] * m
    out[status != OK] = np.nan
    return out, status


# --------------------------------------------------------------------------
# numba implementations
# --------------------------------------------------------------------------

geometric_product_numba = None
geometric_product_batch_numba = None
pauli_bch_batch_numba = None

if HAVE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def geometric_product_numba(a, b, sign):
        dim = a.shape[0]
        out = np.zeros(dim)
        for i in range(dim):
            ai = a[i]
            if ai == 0.0:
                continue
            for j in range(dim):
                bj = b[j]
                if bj == 0.0:
                    continue
                out[i ^ j] += sign[i, j] * ai * bj
        return out

    @njit(cache=True)
    def geometric_product_batch_numba(a, b, sign):
        n, dim = a.shape
        out = np.zeros((n, dim))
        for r in range(n):
            for i in range(dim):
                ai = a[r, i]
                if ai == 0.0:
                    continue
                for j in range(dim):
                    out[r, i ^ j] += sign[i, j] * ai * b[r, j]
        return out

    @njit(cache=True)
    def _tanh_ratio_nb(z):
        if abs(z) < NEAR_NULL * NEAR_NULL:
            return 1.0 - z / 3.0 + 2.0 * z * z / 15.0
        s = cmath.sqrt(z)
        return cmath.tanh(s) / s

    @njit(cache=True)
    def _atanh_ratio_nb(z):
        if abs(z) < NEAR_NULL * NEAR_NULL:
            return 1.0 + z / 3.0 + z * z / 5.0
        s = cmath.sqrt(z)
        return cmath.atanh(s) / s

    @njit(cache=True)
    def pauli_bch_batch_numba(s1, s2):
        n = s1.shape[0]
        out = np.empty((n, 2, 2), dtype=np.complex128)
        status = np.zeros(n, dtype=np.int8)
        for r in range(n):
            a1, b1, c1 = s1[r, 0, 0], s1[r, 0, 1], s1[r, 1, 0]
            a2, b2, c2 = s2[r, 0, 0], s2[r, 0, 1], s2[r, 1, 0]
            f1 = _tanh_ratio_nb(a1 * a1 + b1 * c1)
            f2 = _tanh_ratio_nb(a2 * a2 + b2 * c2)
            if not (np.isfinite(f1.real) and np.isfinite(f1.imag)
                    and np.isfinite(f2.real) and np.isfinite(f2.imag)):
                status[r] = POLE
                out[r, :, :] = np.nan
                continue
            a1, b1, c1 = f1 * a1, f1 * b1, f1 * c1
            a2, b2, c2 = f2 * a2, f2 * b2, f2 * c2
            # T1 T2 = s I + (traceless part); both T are traceless
            p00 = a1 * a2 + b1 * c2
            p11 = c1 * b2 + a1 * a2
            p01 = a1 * b2 - b1 * a2
            p10 = c1 * a2 - a1 * c2
            s = 0.5 * (p00 + p11)
            den = 1.0 + s
            if abs(den) < SINGULAR_TOL:
                status[r] = SINGULAR_DENOMINATOR
                out[r, :, :] = np.nan
                continue
            ma = (a1 + a2 + p00 - s) / den
            mb = (b1 + b2 + p01) / den
            mc = (c1 + c2 + p10) / den
            zm = ma * ma + mb * mc
            if abs(zm - 1.0) < POLE_TOL:
                status[r] = POLE
                out[r, :, :] = np.nan
                continue
            g = _atanh_ratio_nb(zm)
            out[r, 0, 0] = g * ma
            out[r, 0, 1] = g * mb
            out[r, 1, 0] = g * mc
            out[r, 1, 1] = -g * ma
        return out, status


if USE_NUMBA:
    geometric_product = geometric_product_numba
    geometric_product_batch = geometric_product_batch_numba
    pauli_bch_batch = pauli_bch_batch_numba
else:
    geometric_product = geometric_product_numpy
    geometric_product_batch = geometric_product_batch_numpy
    pauli_bch_batch = pauli_bch_batch_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"
