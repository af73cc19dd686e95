"""Reference NumPy implementations of the hot pointwise/rowwise kernels.

These are the fallback for the compiled ``trans4trans._fused`` extension and
the ground truth it is tested against.  Matrix products are not here: both
backends delegate GEMM to NumPy/BLAS, which is already compiled code.  What
the fused extension buys is single-pass evaluation of the memory-bound
kernels below (GELU, row softmax, row layer norm), which NumPy evaluates
through several temporaries.

All functions receive contiguous arrays of one float dtype and return arrays
of the same dtype.  Reductions run in a fixed order, so results are
deterministic for identical inputs.
"""

import numpy as np

GELU_CUBIC = 0.044715          # cubic coefficient of the tanh approximation
GELU_SCALE = 0.7978845608028654  # sqrt(2/pi)


def gelu_fwd(x):
    u = GELU_SCALE * (x + GELU_CUBIC * x * x * x)
    return (0.5 * x * (1.0 + np.tanh(u))).astype(x.dtype, copy=False)


def gelu_bwd(x, g):
    u = GELU_SCALE * (x + GELU_CUBIC * x * x * x)
    t = np.tanh(u)
    du = GELU_SCALE * (1.0 + 3.0 * GELU_CUBIC * x * x)
    dydx = 0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du
    return (g * dydx).astype(x.dtype, copy=False)


def softmax2d_fwd(x):
    """Row softmax of a 2-d array, max-subtracted for stability."""
    shifted = x - x.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def softmax2d_bwd(y, g):
    dot = (g * y).sum(axis=1, keepdims=True)
    return y * (g - dot)


def layernorm2d_fwd(x, gamma, beta, eps):
    """Row layer norm. Returns (out, mean, rstd); mean/rstd are per row."""
    mean = x.mean(axis=1, keepdims=True)
    var = np.square(x - mean).mean(axis=1, keepdims=True)
    rstd = 1.0 / np.sqrt(var + eps)
    xhat = (x - mean) * rstd
    return xhat * gamma + beta, mean[:, 0], rstd[:, 0]


def layernorm2d_bwd(x, gamma, mean, rstd, g):
    """Gradients of layernorm2d_fwd. Returns (dx, dgamma, dbeta)."""
    n = x.shape[1]
    xhat = (x - mean[:, None]) * rstd[:, None]
    a = g * gamma
    a_mean = a.mean(axis=1, keepdims=True)
    ax_mean = (a * xhat).mean(axis=1, keepdims=True)
    dx = rstd[:, None] * (a - a_mean - xhat * ax_mean)
    dgamma = (g * xhat).sum(axis=0)
    dbeta = g.sum(axis=0)
    return dx.astype(x.dtype, copy=False), dgamma, dbeta
