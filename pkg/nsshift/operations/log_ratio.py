import torch
from torch import nn

from nsshift.exceptions import ZeroDensity
from nsshift.operations.base import Operator


class LogRatio(Operator):
    def __init__(self, numerator, denominator, lo=0):
        """
        Windowed log Radon-Nikodym derivative of two product measures.

        Parameters
        ----------
        numerator: torch.Tensor
            p0 of the pushed measure per window coordinate (P_{k-n}), shape
            (width,) or (shifts, width) for several shifts at once.
        denominator: torch.Tensor
            p0 of the reference measure per window coordinate (P_k).
        lo: int
            Coordinate of the first window entry, used in error messages.
        """
        super().__init__()
        num = self.as_probabilities(numerator)
        den = self.as_probabilities(denominator)
        assert num.shape[-1] == den.shape[-1], "Window widths differ."
        den = den.expand_as(num)
        self.lo = lo
        with torch.no_grad():
            self.register_buffer("log_ratio0", torch.log(num) - torch.log(den))
            self.register_buffer("log_ratio1", torch.log1p(-num) - torch.log1p(-den))
        # coordinates where both measures agree contribute nothing
        self.register_buffer("mismatch", num != den)

    def forward(self, symbols):
        """
        Parameters
        ----------
        symbols: torch.Tensor
            uint8 tensor of shape (batch, width) with entries in {0, 1}.

        Returns
        -------
        log_rn: torch.Tensor
            float64 tensor of shape (batch,), or (shifts,) for a single path
            against a multi-shift numerator.
        """
        if symbols.dim() == 1:
            symbols = symbols.unsqueeze(0)
        ones = symbols.to(torch.bool)
        values = torch.where(ones, self.log_ratio1, self.log_ratio0)
        values = torch.where(self.mismatch, values, torch.zeros_like(values))
        bad = ~torch.isfinite(values)
        if bool(bad.any()):
            row, col = [int(x) for x in torch.nonzero(bad)[0]]
            symbol = symbols[min(row, symbols.shape[0] - 1), col]
            raise ZeroDensity(self.lo + col, int(symbol))
        return values.sum(dim=1)

    def __str__(self):
        return "LogRatio(lo={}, width={})".format(self.lo, self.log_ratio0.shape[-1])


class PowerLogRatio(Operator):
    def __init__(self, ratios):
        """
        Log derivative of a product transformation: the sum of one LogRatio
        per component.

        Parameters
        ----------
        ratios: list[LogRatio]
        """
        super().__init__()
        self.ratios = nn.ModuleList(ratios)

    def forward(self, *symbols):
        assert len(symbols) == len(
            self.ratios
        ), "Expected {} symbol batches, got {}.".format(len(self.ratios), len(symbols))
        out = None
        for ratio, sym in zip(self.ratios, symbols):
            value = ratio(sym)
            out = value if out is None else out + value
        return out
