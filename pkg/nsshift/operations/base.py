from abc import ABC

import torch
from torch import nn


class Operator(nn.Module, ABC):
    @staticmethod
    def as_probabilities(values):
        """
        Parameters
        ----------
        values: sequence of float or torch.Tensor
            Probabilities of symbol 0.

        Returns
        -------
        p0: torch.Tensor
            float64 tensor checked to lie in [0, 1].
        """
        p0 = torch.as_tensor(values, dtype=torch.float64)
        assert bool(((p0 >= 0) & (p0 <= 1)).all()), "Probabilities must be in [0, 1]."
        return p0
