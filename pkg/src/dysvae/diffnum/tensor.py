"""Reverse-mode autodiff on numpy arrays.

A Tensor wraps a float64 ndarray and records the op that produced it on a
dynamic tape. `backward` walks the tape in reverse topological order and
accumulates gradients into every reachable tensor with requires_grad set.
"""

from __future__ import annotations

import contextlib

import numpy as np

_GRAD_ENABLED = True


@contextlib.contextmanager
def no_grad():
    """Disable tape recording inside the block (pure forward evaluation)."""
    global _GRAD_ENABLED
    prev = _GRAD_ENABLED
    _GRAD_ENABLED = False
    try:
        yield
    finally:
        _GRAD_ENABLED = prev


class Tensor:
    __slots__ = ("data", "grad", "requires_grad", "_parents", "_backward")

    def __init__(self, data, requires_grad=False):
        self.data = np.asarray(data, dtype=np.float64)
        self.grad = None
        self.requires_grad = requires_grad
        self._parents = ()
        self._backward = None

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    def __repr__(self):
        return f"Tensor(shape={self.data.shape}, requires_grad={self.requires_grad})"

    # operator sugar; every op lives at module level
    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(_lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), neg(self))

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    def __matmul__(self, other):
        return matmul(self, other)

    def __getitem__(self, key):
        return _getitem(self, key)

    def sum(self, axis=None, keepdims=False):
        return reduce_sum(self, axis, keepdims)

    def mean(self, axis=None, keepdims=False):
        return reduce_mean(self, axis, keepdims)

    def reshape(self, *shape):
        return reshape(self, shape if len(shape) > 1 else shape[0])

    def item(self):
        return float(self.data)


class Parameter(Tensor):
    """Trainable tensor with a stable name for checkpoints and optimizers."""

    __slots__ = ("name",)

    def __init__(self, data, name):
        super().__init__(data, requires_grad=True)
        self.name = name


def _lift(x):
    return x if isinstance(x, Tensor) else Tensor(np.asarray(x, dtype=np.float64))


def _make(data, parents, backward):
    out = Tensor(data)
    if _GRAD_ENABLED and any(p.requires_grad for p in parents):
        out.requires_grad = True
        out._parents = parents
        out._backward = backward
    return out


def _unbroadcast(g, shape):
    # collapse a broadcast gradient back to `shape`
    if g.shape == shape:
        return g
    extra = g.ndim - len(shape)
    if extra > 0:
        g = g.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, s in enumerate(shape) if s == 1 and g.shape[i] != 1)
    if axes:
        g = g.sum(axis=axes, keepdims=True)
    return g.reshape(shape)


def add(a, b):
    a, b = _lift(a), _lift(b)
    data = a.data + b.data

    def bwd(g):
        return _unbroadcast(g, a.data.shape), _unbroadcast(g, b.data.shape)

    return _make(data, (a, b), bwd)


def neg(a):
    a = _lift(a)
    return _make(-a.data, (a,), lambda g: (-g,))


def mul(a, b):
    a, b = _lift(a), _lift(b)
    data = a.data * b.data

    def bwd(g):
        return (_unbroadcast(g * b.data, a.data.shape),
                _unbroadcast(g * a.data, b.data.shape))

    return _make(data, (a, b), bwd)


def matmul(a, b):
    a, b = _lift(a), _lift(b)
    if a.ndim < 2 or b.ndim < 2:
        raise ValueError("matmul expects tensors with ndim >= 2")
    data = np.matmul(a.data, b.data)

    def bwd(g):
        ga = np.matmul(g, np.swapaxes(b.data, -1, -2))
        gb = np.matmul(np.swapaxes(a.data, -1, -2), g)
        return _unbroadcast(ga, a.data.shape), _unbroadcast(gb, b.data.shape)

    return _make(data, (a, b), bwd)


def tanh(a):
    a = _lift(a)
    t = np.tanh(a.data)
    return _make(t, (a,), lambda g: (g * (1.0 - t * t),))


def sigmoid(a):
    a = _lift(a)
    # 0.5*(1+tanh(x/2)) is overflow-free for any finite input
    s = 0.5 * (1.0 + np.tanh(0.5 * a.data))
    return _make(s, (a,), lambda g: (g * s * (1.0 - s),))


def relu(a):
    a = _lift(a)
    data = np.maximum(a.data, 0.0)
    return _make(data, (a,), lambda g: (g * (a.data > 0.0),))


def exp(a):
    a = _lift(a)
    e = np.exp(a.data)
    return _make(e, (a,), lambda g: (g * e,))


def log(a):
    a = _lift(a)
    return _make(np.log(a.data), (a,), lambda g: (g / a.data,))


def clip(a, lo, hi):
    """Clamp values; gradient passes through inside [lo, hi], zero outside."""
    a = _lift(a)
    data = np.clip(a.data, lo, hi)
    inside = (a.data >= lo) & (a.data <= hi)
    return _make(data, (a,), lambda g: (g * inside,))


def softmax(a, axis=-1):
    a = _lift(a)
    shifted = a.data - np.max(a.data, axis=axis, keepdims=True)
    e = np.exp(shifted)
    p = e / np.sum(e, axis=axis, keepdims=True)

    def bwd(g):
        dot = np.sum(g * p, axis=axis, keepdims=True)
        return (p * (g - dot),)

    return _make(p, (a,), bwd)


def log_softmax(a, axis=-1):
    a = _lift(a)
    shifted = a.data - np.max(a.data, axis=axis, keepdims=True)
    lse = np.log(np.sum(np.exp(shifted), axis=axis, keepdims=True))
    logp = shifted - lse

    def bwd(g):
        return (g - np.exp(logp) * np.sum(g, axis=axis, keepdims=True),)

    return _make(logp, (a,), bwd)


def cross_entropy(logits, labels, reduction="mean"):
    """Softmax cross-entropy against integer class labels.

    reduction: "mean", "sum" or "none" (per-row losses).
    """
    logits = _lift(logits)
    labels = np.asarray(labels, dtype=np.int64)
    if logits.ndim != 2 or labels.shape != (logits.shape[0],):
        raise ValueError("cross_entropy expects logits [B,K] and labels [B]")
    if labels.size and (labels.min() < 0 or labels.max() >= logits.shape[1]):
        raise ValueError("label index out of range")
    shifted = logits.data - np.max(logits.data, axis=1, keepdims=True)
    lse = np.log(np.sum(np.exp(shifted), axis=1, keepdims=True))
    logp = shifted - lse
    nll = -logp[np.arange(labels.shape[0]), labels]
    p = np.exp(logp)
    onehot = np.zeros_like(p)
    onehot[np.arange(labels.shape[0]), labels] = 1.0

    if reduction == "none":
        def bwd(g):
            return ((p - onehot) * g[:, None],)
        return _make(nll, (logits,), bwd)
    if reduction == "sum":
        def bwd(g):
            return ((p - onehot) * g,)
        return _make(nll.sum(), (logits,), bwd)
    if reduction == "mean":
        n = max(labels.shape[0], 1)

        def bwd(g):
            return ((p - onehot) * (g / n),)
        return _make(nll.mean() if labels.size else 0.0, (logits,), bwd)
    raise ValueError(f"unknown reduction {reduction!r}")


def concat(tensors, axis=-1):
    tensors = [_lift(t) for t in tensors]
    data = np.concatenate([t.data for t in tensors], axis=axis)
    sizes = [t.data.shape[axis] for t in tensors]
    splits = np.cumsum(sizes)[:-1]

    def bwd(g):
        return tuple(np.split(g, splits, axis=axis))

    return _make(data, tuple(tensors), bwd)


def stack(tensors, axis=0):
    tensors = [_lift(t) for t in tensors]
    data = np.stack([t.data for t in tensors], axis=axis)

    def bwd(g):
        return tuple(np.moveaxis(g, axis, 0))

    return _make(data, tuple(tensors), bwd)


def reshape(a, shape):
    a = _lift(a)
    orig = a.data.shape
    return _make(a.data.reshape(shape), (a,), lambda g: (g.reshape(orig),))


def transpose(a, axes):
    a = _lift(a)
    inverse = np.argsort(axes)
    return _make(np.transpose(a.data, axes), (a,),
                 lambda g: (np.transpose(g, inverse),))


def reduce_sum(a, axis=None, keepdims=False):
    a = _lift(a)
    data = a.data.sum(axis=axis, keepdims=keepdims)

    def bwd(g):
        if axis is None:
            return (np.broadcast_to(g, a.data.shape).copy(),)
        gg = g if keepdims else np.expand_dims(g, axis)
        return (np.broadcast_to(gg, a.data.shape).copy(),)

    return _make(data, (a,), bwd)


def reduce_mean(a, axis=None, keepdims=False):
    a = _lift(a)
    n = a.data.size if axis is None else a.data.shape[axis]
    return mul(reduce_sum(a, axis, keepdims), 1.0 / n)


def take_rows(a, idx):
    """Gather rows along axis 0; gradient scatter-adds back."""
    a = _lift(a)
    idx = np.asarray(idx, dtype=np.int64)
    data = a.data[idx]

    def bwd(g):
        out = np.zeros_like(a.data)
        np.add.at(out, idx, g)
        return (out,)

    return _make(data, (a,), bwd)


def _getitem(a, key):
    data = a.data[key]

    def bwd(g):
        out = np.zeros_like(a.data)
        out[key] = g
        return (out,)

    return _make(data, (a,), bwd)


def _toposort(root):
    order, visited = [], set()
    stack = [(root, False)]
    while stack:
        node, processed = stack.pop()
        if processed:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for p in node._parents:
            if p.requires_grad and id(p) not in visited:
                stack.append((p, False))
    return order


def backward(loss):
    """Accumulate d(loss)/dt into t.grad for every reachable tensor."""
    if loss.data.ndim != 0:
        raise ValueError(f"backward needs a scalar loss, got shape {loss.data.shape}")
    order = _toposort(loss)
    grads = {id(loss): np.ones((), dtype=np.float64)}
    for node in reversed(order):
        g = grads.pop(id(node), None)
        if g is None:
            continue
        if node.grad is None:
            node.grad = np.zeros_like(node.data)
        node.grad += g
        if node._backward is None:
            continue
        for parent, pg in zip(node._parents, node._backward(g)):
            if not parent.requires_grad:
                continue
            if id(parent) in grads:
                grads[id(parent)] = grads[id(parent)] + pg
            else:
                grads[id(parent)] = pg


def grad(loss, params=None):
    """Fresh gradients of a scalar loss for `params` (default: all reachable Parameters)."""
    if params is None:
        params = [t for t in _toposort(loss) if isinstance(t, Parameter)]
    for p in params:
        p.grad = None
    backward(loss)
    return {p.name: (p.grad if p.grad is not None else np.zeros_like(p.data))
            for p in params}
