import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
import torch


class TailClass(Enum):
    LOG_POWER = "LogPower"
    SUMMABLE = "Summable"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class RenewalFunction:
    """
    p: [0, inf) -> [0, 1] with p(0) = 1 and a declared tail class. For
    LogPower tails p(t) behaves like (log t)**-exponent.
    """

    name: str
    evaluate: Callable[[torch.Tensor], torch.Tensor]
    tail_class: TailClass
    exponent: Optional[float] = None

    def __call__(self, t):
        t = torch.as_tensor(t, dtype=torch.float64)
        return self.evaluate(t)

    def validate(self, horizon):
        """p(0) = 1 and 0 <= p(n) <= 1 for n <= horizon."""
        u = self(torch.arange(horizon + 1, dtype=torch.float64))
        return bool(u[0] == 1.0) and bool(((u >= 0) & (u <= 1)).all())


def log_renewal():
    """p(t) = 1 / log(e + t), exactly 1 at t = 0."""
    return RenewalFunction(
        "log",
        lambda t: 1.0 / (1.0 + torch.log1p(t / math.e)),
        TailClass.LOG_POWER,
        1.0,
    )


def geometric_renewal(q=0.5):
    """p(t) = q**t, summable for 0 < q < 1."""
    if not 0 < q < 1:
        raise ValueError("Geometric renewal needs 0 < q < 1, got {}.".format(q))
    return RenewalFunction(
        "geom:{}".format(q), lambda t: torch.pow(q, t), TailClass.SUMMABLE
    )


def table_renewal(points, name="table"):
    """
    Linear interpolation of (t, value) pairs, constant beyond the last point.

    Parameters
    ----------
    points: sequence of (float, float) or str
        The pairs, or the path of a file with one "t,value" pair per line.
    """
    if isinstance(points, str):
        name = "table:{}".format(points)
        points = np.loadtxt(points, delimiter=",", ndmin=2)
    points = np.asarray(points, dtype=np.float64)
    order = np.argsort(points[:, 0])
    xs, ys = points[order, 0], points[order, 1]
    if xs[0] != 0.0 or ys[0] != 1.0:
        raise ValueError("Renewal table must start with the point (0, 1).")
    if ((ys < 0) | (ys > 1)).any():
        raise ValueError("Renewal table values must lie in [0, 1].")

    def evaluate(t):
        return torch.as_tensor(np.interp(t.numpy(), xs, ys), dtype=torch.float64)

    return RenewalFunction(name, evaluate, TailClass.CUSTOM)


def renewal_by_name(text):
    """``log``, ``geom:q`` or ``table:path``."""
    if text == "log":
        return log_renewal()
    if text.startswith("geom:"):
        return geometric_renewal(float(text[len("geom:") :]))
    if text.startswith("table:"):
        return table_renewal(text[len("table:") :])
    raise ValueError("Unknown renewal function {!r}.".format(text))


def renewal_sequence(p, N):
    """u_n = p(n) for n = 0..N."""
    assert N >= 0, "N must be nonnegative."
    return p(torch.arange(N + 1, dtype=torch.float64))
