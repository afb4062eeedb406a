"""Dense and recurrent layers built from tape ops."""

from __future__ import annotations

import numpy as np

from .tensor import Parameter, Tensor, concat, matmul, sigmoid, stack, tanh


def glorot(rng, fan_in, fan_out):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=(fan_in, fan_out))


def dense_params(rng, store, name, d_in, d_out, scale=None):
    """Create weight/bias parameters for a dense layer in `store`."""
    if scale is None:
        w = glorot(rng, d_in, d_out)
    else:
        w = rng.normal(0.0, scale, size=(d_in, d_out))
    return {
        "w": store.param(f"{name}.w", w),
        "b": store.param(f"{name}.b", np.zeros(d_out)),
    }


def linear(x, layer):
    return matmul(x, layer["w"]) + layer["b"]


def lstm_params(rng, store, name, d_in, units, forget_bias=1.0):
    """Fused-gate LSTM parameters: w [(d_in+units) x 4*units], gate order i,f,g,o."""
    w = glorot(rng, d_in + units, 4 * units)
    b = np.zeros(4 * units)
    b[units:2 * units] = forget_bias
    return {
        "w": store.param(f"{name}.w", w),
        "b": store.param(f"{name}.b", b),
    }


def lstm_cell(x, h_prev, c_prev, params):
    """One LSTM step: i,f,o = sigmoid, g = tanh; c = f*c_prev + i*g; h = o*tanh(c)."""
    units = h_prev.shape[-1]
    if params["w"].shape[0] != x.shape[-1] + units:
        raise ValueError(
            f"lstm_cell weight expects input dim {params['w'].shape[0] - units}, "
            f"got {x.shape[-1]}")
    z = matmul(concat([x, h_prev], axis=-1), params["w"]) + params["b"]
    i = sigmoid(z[:, :units])
    f = sigmoid(z[:, units:2 * units])
    g = tanh(z[:, 2 * units:3 * units])
    o = sigmoid(z[:, 3 * units:])
    c = f * c_prev + i * g
    h = o * tanh(c)
    return h, c


def _run_direction(seq, params, reverse):
    n, t_len, _ = seq.shape
    units = params["w"].shape[1] // 4
    h = Tensor(np.zeros((n, units)))
    c = Tensor(np.zeros((n, units)))
    outs = [None] * t_len
    steps = range(t_len - 1, -1, -1) if reverse else range(t_len)
    for t in steps:
        h, c = lstm_cell(seq[:, t, :], h, c, params)
        outs[t] = h
    return stack(outs, axis=1)


def bilstm(seq, layers):
    """Bidirectional LSTM stack over a [batch, time, dim] sequence.

    Each layer is {"fw": lstm params, "bw": lstm params}; output per step is
    the forward hidden state concatenated with the backward one, [B, T, 2*units].
    """
    if seq.shape[1] < 1:
        raise ValueError("bilstm needs sequence length >= 1")
    out = seq
    for layer in layers:
        fw = _run_direction(out, layer["fw"], reverse=False)
        bw = _run_direction(out, layer["bw"], reverse=True)
        out = concat([fw, bw], axis=-1)
    return out


def bilstm_params(rng, store, name, d_in, units, n_layers):
    layers = []
    for k in range(n_layers):
        dim = d_in if k == 0 else 2 * units
        layers.append({
            "fw": lstm_params(rng, store, f"{name}.l{k}.fw", dim, units),
            "bw": lstm_params(rng, store, f"{name}.l{k}.bw", dim, units),
        })
    return layers


def bilstm_ends(out):
    """Final forward state and final backward state of a bilstm output, concatenated."""
    units = out.shape[-1] // 2
    return concat([out[:, -1, :units], out[:, 0, units:]], axis=-1)
