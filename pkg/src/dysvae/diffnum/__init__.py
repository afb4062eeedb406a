"""Minimal differentiable-computation core used by the model and classifier code."""

import numpy as np

from .archive import ArchiveError, load_archive, save_archive
from .densities import diag_gaussian_logpdf, kl_diag_gaussians
from .layers import (bilstm, bilstm_ends, bilstm_params, dense_params, glorot,
                     linear, lstm_cell, lstm_params)
from .optim import AdamState, NonFiniteGradientError, adam_step, clip_global_norm
from .tensor import (Parameter, Tensor, add, backward, clip, concat,
                     cross_entropy, exp, grad, log, log_softmax, matmul, mul,
                     neg, no_grad, reduce_mean, reduce_sum, relu, reshape,
                     sigmoid, softmax, stack, take_rows, tanh, transpose)


class ParamStore(dict):
    """Flat name -> Parameter registry for a model's trainable state."""

    def param(self, name, data):
        if name in self:
            raise ValueError(f"duplicate parameter name {name!r}")
        p = Parameter(data, name)
        self[name] = p
        return p

    def state_dict(self):
        return {name: p.data.copy() for name, p in self.items()}

    def load_state_dict(self, state):
        if set(state) != set(self):
            missing = set(self) ^ set(state)
            raise ValueError(f"parameter name mismatch: {sorted(missing)}")
        for name, arr in state.items():
            if self[name].data.shape != arr.shape:
                raise ValueError(f"shape mismatch for {name!r}")
            self[name].data = np.asarray(arr, dtype=np.float64).copy()
