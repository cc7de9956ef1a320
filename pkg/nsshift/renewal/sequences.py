import torch

from nsshift.exceptions import InvalidRenewalSequence

NEGATIVE_TOLERANCE = 1e-12


def interarrival_from_renewal(u, N=None, tolerance=NEGATIVE_TOLERANCE):
    """
    Return-time law f from a renewal sequence u by
    u_n = sum_{m=1}^{n} f_m u_{n-m}.

    Parameters
    ----------
    u: torch.Tensor
        u_0..u_N with u_0 = 1.
    N: int
        Last index, defaults to len(u) - 1.
    tolerance: float
        f_n below -tolerance raises InvalidRenewalSequence.

    Returns
    -------
    f: torch.Tensor
        f_0..f_N with f_0 = 0.
    """
    u = torch.as_tensor(u, dtype=torch.float64)
    N = u.shape[0] - 1 if N is None else N
    assert u[0].item() == 1.0, "Renewal sequences start with u_0 = 1."
    assert N < u.shape[0], "u has only {} terms.".format(u.shape[0])
    u = u[: N + 1]
    flipped = torch.flip(u, [0])
    f = torch.zeros(N + 1, dtype=torch.float64)
    for n in range(1, N + 1):
        # flipped[N - n + 1 : N] holds u_{n-1} .. u_1
        value = u[n] - torch.dot(f[1:n], flipped[N - n + 1 : N])
        if value < -tolerance:
            raise InvalidRenewalSequence(n, value.item())
        f[n] = value
    return f


def renewal_from_interarrival(f, N=None):
    """u_0 = 1 and u_n = sum_{m=1}^{n} f_m u_{n-m}."""
    f = torch.as_tensor(f, dtype=torch.float64)
    N = f.shape[0] - 1 if N is None else N
    if f.shape[0] < N + 1:
        f = torch.cat([f, torch.zeros(N + 1 - f.shape[0], dtype=torch.float64)])
    assert bool((f[1 : N + 1] >= 0).all()), "Interarrival masses must be nonnegative."
    u = torch.zeros(N + 1, dtype=torch.float64)
    u[0] = 1.0
    for n in range(1, N + 1):
        u[n] = torch.dot(f[1 : n + 1], torch.flip(u[:n], [0]))
    return u


def simulate_renewal(f, horizon, seed, count):
    """
    Empirical u_n: the fraction of ``count`` renewal processes with
    interarrival law f that renew at time n, for n = 0..horizon. Mass
    beyond the horizon is drawn as "no further return".
    """
    f = torch.as_tensor(f, dtype=torch.float64)[1 : horizon + 1]
    if f.shape[0] < horizon:
        f = torch.cat([f, torch.zeros(horizon - f.shape[0], dtype=torch.float64)])
    escape = 1.0 - f.sum().item()
    assert escape >= -1e-12, "Interarrival masses sum to more than 1."
    probs = torch.cat([f, torch.tensor([max(escape, 0.0)], dtype=torch.float64)])

    generator = torch.Generator().manual_seed(seed)
    position = torch.zeros(count, dtype=torch.int64)
    alive = torch.ones(count, dtype=torch.bool)
    hits = torch.zeros(horizon + 1, dtype=torch.float64)
    while bool(alive.any()):
        step = torch.multinomial(probs, count, replacement=True, generator=generator)
        # index horizon is the escape outcome
        alive &= step < horizon
        position = position + step + 1
        alive &= position <= horizon
        hits += torch.bincount(position[alive], minlength=horizon + 1).to(torch.float64)
    u_hat = hits / count
    u_hat[0] = 1.0
    return u_hat
