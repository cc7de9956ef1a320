import math

import torch

from nsshift.measure.distance import kakutani_distance_truncated, hellinger_affinity
from nsshift.measure.factor import factor_affinity, factor_distance_term


def naive_distance(P, Q, N):
    """d_N(P, Q) by a per-index sweep, the oracle for block evaluation."""
    return math.fsum(
        factor_distance_term(P.factor_at(k), Q.factor_at(k)) for k in range(-N, N + 1)
    )


def naive_log_affinity(P, Q, N):
    total = 0.0
    for k in range(-N, N + 1):
        h = factor_affinity(P.factor_at(k), Q.factor_at(k))
        if h == 0:
            return -math.inf
        total += math.log(h)
    return total


def debug_distance_evaluation(P, Q, N, rtol=1e-12, atol=1e-12):
    """Compare block-intersection distance and affinity with the per-index sweep."""
    if N > 10 ** 6:
        raise ValueError(
            "Naive sweep over {} coordinates is not feasible.".format(2 * N + 1)
        )

    exp_d = torch.tensor(naive_distance(P, Q, N), dtype=torch.float64)
    pred_d = torch.tensor(kakutani_distance_truncated(P, Q, N), dtype=torch.float64)
    assert torch.allclose(exp_d, pred_d, rtol=rtol, atol=atol), (
        "d_N mismatch: naive {} vs blocks {}".format(exp_d.item(), pred_d.item())
    )

    exp_rho = torch.tensor(math.exp(naive_log_affinity(P, Q, N)), dtype=torch.float64)
    pred_rho = torch.tensor(hellinger_affinity(P, Q, N), dtype=torch.float64)
    assert torch.allclose(exp_rho, pred_rho, rtol=rtol, atol=atol), (
        "rho_N mismatch: naive {} vs blocks {}".format(exp_rho.item(), pred_rho.item())
    )
