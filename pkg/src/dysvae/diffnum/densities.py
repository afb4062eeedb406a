"""Diagonal-Gaussian log density and KL divergence as differentiable ops."""

from __future__ import annotations

import math

from .tensor import _lift, exp, neg, reduce_sum

LOG_2PI = math.log(2.0 * math.pi)


def _check_shapes(*tensors):
    shapes = {t.shape for t in tensors}
    if len(shapes) > 1:
        raise ValueError(f"shape mismatch: {sorted(shapes)}")


def diag_gaussian_logpdf(x, mean, logvar, axis=None):
    """log N(x; mean, diag exp(logvar)), summed over `axis` (default: all dims)."""
    x, mean, logvar = _lift(x), _lift(mean), _lift(logvar)
    _check_shapes(x, mean, logvar)
    diff = x - mean
    per_dim = -0.5 * (LOG_2PI + logvar + diff * diff * exp(neg(logvar)))
    return reduce_sum(per_dim, axis=axis)


def kl_diag_gaussians(q_mean, q_logvar, p_mean, p_logvar, axis=None):
    """KL(q || p) between diagonal Gaussians, summed over `axis` (default: all dims)."""
    q_mean, q_logvar = _lift(q_mean), _lift(q_logvar)
    p_mean, p_logvar = _lift(p_mean), _lift(p_logvar)
    _check_shapes(q_mean, q_logvar, p_mean, p_logvar)
    diff = q_mean - p_mean
    per_dim = 0.5 * (exp(q_logvar - p_logvar) + diff * diff * exp(neg(p_logvar))
                     - 1.0 + p_logvar - q_logvar)
    return reduce_sum(per_dim, axis=axis)
