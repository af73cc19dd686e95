# cython: boundscheck=False, wraparound=False, cdivision=True
"""Fused single-pass kernels for the memory-bound ops of the tensor engine.

Same contracts as ``kernels_ref``; each row is processed by one sequential
loop, so reduction order is fixed and results are bitwise reproducible for
identical inputs.  GEMM is intentionally absent: BLAS already owns it.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, sqrt, tanh

cnp.import_array()

ctypedef fused floating:
    float
    double

DEF GELU_CUBIC = 0.044715
DEF GELU_SCALE = 0.7978845608028654


def gelu_fwd(floating[::1] x):
    cdef Py_ssize_t i, n = x.shape[0]
    out_np = np.empty(n, dtype=np.asarray(x).dtype)
    cdef floating[::1] out = out_np
    cdef floating v, u
    with nogil:
        for i in range(n):
            v = x[i]
            u = GELU_SCALE * (v + GELU_CUBIC * v * v * v)
            out[i] = <floating>(0.5 * v * (1.0 + tanh(u)))
    return out_np


def gelu_bwd(floating[::1] x, floating[::1] g):
    cdef Py_ssize_t i, n = x.shape[0]
    out_np = np.empty(n, dtype=np.asarray(x).dtype)
    cdef floating[::1] out = out_np
    cdef floating v, u, t, du
    with nogil:
        for i in range(n):
            v = x[i]
            u = GELU_SCALE * (v + GELU_CUBIC * v * v * v)
            t = tanh(u)
            du = GELU_SCALE * (1.0 + 3.0 * GELU_CUBIC * v * v)
            out[i] = <floating>(g[i] * (0.5 * (1.0 + t) + 0.5 * v * (1.0 - t * t) * du))
    return out_np


def softmax2d_fwd(floating[:, ::1] x):
    cdef Py_ssize_t r, c, rows = x.shape[0], cols = x.shape[1]
    out_np = np.empty((rows, cols), dtype=np.asarray(x).dtype)
    cdef floating[:, ::1] out = out_np
    cdef floating m, s, e
    with nogil:
        for r in range(rows):
            m = x[r, 0]
            for c in range(1, cols):
                if x[r, c] > m:
                    m = x[r, c]
            s = 0.0
            for c in range(cols):
                e = <floating>exp(x[r, c] - m)
                out[r, c] = e
                s += e
            for c in range(cols):
                out[r, c] /= s
    return out_np


def softmax2d_bwd(floating[:, ::1] y, floating[:, ::1] g):
    cdef Py_ssize_t r, c, rows = y.shape[0], cols = y.shape[1]
    out_np = np.empty((rows, cols), dtype=np.asarray(y).dtype)
    cdef floating[:, ::1] out = out_np
    cdef floating dot
    with nogil:
        for r in range(rows):
            dot = 0.0
            for c in range(cols):
                dot += g[r, c] * y[r, c]
            for c in range(cols):
                out[r, c] = y[r, c] * (g[r, c] - dot)
    return out_np


def layernorm2d_fwd(floating[:, ::1] x, floating[::1] gamma, floating[::1] beta,
                    double eps):
    cdef Py_ssize_t r, c, rows = x.shape[0], cols = x.shape[1]
    dtype = np.asarray(x).dtype
    out_np = np.empty((rows, cols), dtype=dtype)
    mean_np = np.empty(rows, dtype=dtype)
    rstd_np = np.empty(rows, dtype=dtype)
    cdef floating[:, ::1] out = out_np
    cdef floating[::1] mean = mean_np
    cdef floating[::1] rstd = rstd_np
    cdef floating mu, var, rs, d
    with nogil:
        for r in range(rows):
            mu = 0.0
            for c in range(cols):
                mu += x[r, c]
            mu /= cols
            var = 0.0
            for c in range(cols):
                d = x[r, c] - mu
                var += d * d
            var /= cols
            rs = <floating>(1.0 / sqrt(var + eps))
            mean[r] = mu
            rstd[r] = rs
            for c in range(cols):
                out[r, c] = (x[r, c] - mu) * rs * gamma[c] + beta[c]
    return out_np, mean_np, rstd_np


def layernorm2d_bwd(floating[:, ::1] x, floating[::1] gamma, floating[::1] mean,
                    floating[::1] rstd, floating[:, ::1] g):
    cdef Py_ssize_t r, c, rows = x.shape[0], cols = x.shape[1]
    dtype = np.asarray(x).dtype
    dx_np = np.empty((rows, cols), dtype=dtype)
    dgamma_np = np.zeros(cols, dtype=dtype)
    dbeta_np = np.zeros(cols, dtype=dtype)
    cdef floating[:, ::1] dx = dx_np
    cdef floating[::1] dgamma = dgamma_np
    cdef floating[::1] dbeta = dbeta_np
    cdef floating mu, rs, a, xh, a_mean, ax_mean
    with nogil:
        for r in range(rows):
            mu = mean[r]
            rs = rstd[r]
            a_mean = 0.0
            ax_mean = 0.0
            for c in range(cols):
                xh = (x[r, c] - mu) * rs
                a = g[r, c] * gamma[c]
                a_mean += a
                ax_mean += a * xh
                dgamma[c] += g[r, c] * xh
                dbeta[c] += g[r, c]
            a_mean /= cols
            ax_mean /= cols
            for c in range(cols):
                xh = (x[r, c] - mu) * rs
                a = g[r, c] * gamma[c]
                dx[r, c] = rs * (a - a_mean - xh * ax_mean)
    return dx_np, dgamma_np, dbeta_np
