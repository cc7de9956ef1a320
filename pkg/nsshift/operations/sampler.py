import torch

from nsshift.operations.base import Operator


class BernoulliSampler(Operator):
    def __init__(self, p0):
        """
        Independent draws of a window of coordinates.

        Parameters
        ----------
        p0: torch.Tensor
            Probability of symbol 0 per coordinate.
        """
        super().__init__()
        self.register_buffer("p0", self.as_probabilities(p0))

    def forward(self, count, generator=None):
        """
        ``generator`` is one torch.Generator for the whole window or a
        sequence with one generator per coordinate.
        """
        if isinstance(generator, (list, tuple)):
            width = self.p0.shape[0]
            assert len(generator) == width, "Need one generator per coordinate."
            columns = [
                torch.rand(count, generator=g, dtype=torch.float64) for g in generator
            ]
            uniform = torch.stack(columns, dim=1)
        else:
            uniform = torch.rand(
                count, self.p0.shape[0], generator=generator, dtype=torch.float64
            )
        # symbol 0 with probability p0
        return (uniform >= self.p0).to(torch.uint8)
