import torch

from nsshift.operations.base import Operator


class Affinity(Operator):
    """Coordinate-wise Hellinger affinity sqrt(p0 q0) + sqrt(p1 q1)."""

    def forward(self, p0, q0):
        p0 = self.as_probabilities(p0)
        q0 = self.as_probabilities(q0)
        h = torch.sqrt(p0 * q0) + torch.sqrt((1 - p0) * (1 - q0))
        h = torch.clamp(h, 0.0, 1.0)
        return torch.where(p0 == q0, torch.ones_like(h), h)


class DistanceTerm(Operator):
    """Coordinate-wise (sqrt p0 - sqrt q0)^2 + (sqrt p1 - sqrt q1)^2."""

    def forward(self, p0, q0):
        p0 = self.as_probabilities(p0)
        q0 = self.as_probabilities(q0)
        d = (torch.sqrt(p0) - torch.sqrt(q0)) ** 2 + (
            torch.sqrt(1 - p0) - torch.sqrt(1 - q0)
        ) ** 2
        return torch.where(p0 == q0, torch.zeros_like(d), d)
