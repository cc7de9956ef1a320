import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

import mpmath

from nsshift.bigindex import sparse
from nsshift.construction.epsilon import (
    EpsilonPolicy,
    lambda_constraint_holds,
    level_exponent,
)
from nsshift.construction.scaled import (
    ScaledExponent,
    compare_log_forms,
    required_precision,
    sign_of,
)
from nsshift.exceptions import PrecisionExhausted
from nsshift.utils import get_max_precision

DEFAULT_DEPTH = 3
M0 = 1


@dataclass(frozen=True)
class LevelParams:
    """
    One level of the inductive construction.

    ``lam`` is lambda_t as a ScaledExponent, n, N, m and M are int or SparseInt.
    ``metadata`` records how n_t was chosen and the epsilon used.
    """

    t: int
    k: int
    lam: ScaledExponent
    n: object
    N: object
    m: object
    M: object
    metadata: dict = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class LevelCheck:
    t: int
    passed: bool
    witness: object = None
    note: str = ""


@dataclass(frozen=True)
class ConstraintReport:
    name: str
    checks: Tuple[LevelCheck, ...]

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]


def base_level():
    """lambda_1 = 2, n_1 = 2, m_1 = 4, N_1 = 3, M_1 = 7 with M_0 = 1."""
    n, m = 2, 4
    N = M0 + n
    return LevelParams(
        t=1,
        k=0,
        lam=ScaledExponent(1, 0, 0),
        n=n,
        N=N,
        m=m,
        M=N + m,
        metadata=dict(n_choice="base"),
    )


def a_max(levels):
    """max A_{t-1} = prod_u lambda_u**n_u, every lambda_u exceeding 1."""
    result = ScaledExponent.one()
    for level in levels:
        result = result * level.lam ** level.n
    return result


def _to_mpf(form):
    alpha = mpmath.mpf(form.alpha.numerator) / form.alpha.denominator
    beta = mpmath.mpf(form.beta.numerator) / form.beta.denominator
    return alpha * mpmath.ln2 + beta


def _passes(n, lam_form, target_form):
    """lambda**(n/4) >= target, decided on logarithms."""
    comparison = "n/4 * ln(lambda) >= ln(max A^2) at n = {}".format(n)
    lhs = lam_form.scale(Fraction(n, 4))
    return compare_log_forms(lhs, target_form, comparison) >= 0


def choose_n(levels, lam):
    """
    Minimal positive n with lam**(n/4) >= (max A_{t-1})**2.

    Parameters
    ----------
    levels: list[LevelParams]
        Levels 1..t-1.
    lam: ScaledExponent
        lambda_t, must exceed 1.

    Returns
    -------
    n: int
        n passes and n - 1 fails, both decided exactly.
    """
    target = a_max(levels) ** 2
    max_precision = get_max_precision()
    if max(lam.k, target.k) > max_precision:
        raise PrecisionExhausted(
            "n/4 * 2^-k >= ln(max A^2) with k of {} bits".format(lam.k.bit_length()),
            max_precision,
        )
    lam_form = lam.log_form()
    target_form = target.log_form()
    if sign_of(lam_form, "lambda > 1") <= 0:
        raise ValueError("lambda must exceed 1, got {!r}.".format(lam))

    if lam_form.proportional_to(target_form):
        if lam_form.alpha != 0:
            ratio = 4 * target_form.alpha / lam_form.alpha
        else:
            ratio = 4 * target_form.beta / lam_form.beta
        n = max(1, math.ceil(ratio))
    else:
        precision = max(required_precision(lam_form), required_precision(target_form))
        with mpmath.workprec(precision + 64):
            ratio = 4 * _to_mpf(target_form) / _to_mpf(lam_form)
            n = max(1, int(mpmath.ceil(ratio)))

    while not _passes(n, lam_form, target_form):
        n += 1
    while n > 1 and _passes(n - 1, lam_form, target_form):
        n -= 1
    return n


def next_level(levels, eps):
    t = len(levels) + 1
    M_prev = levels[-1].M
    epsilon = eps.epsilon(t)
    k = level_exponent(M_prev, epsilon)
    lam = ScaledExponent(0, 1, k)
    n = choose_n(levels, lam)
    N = M_prev + n
    tN = t * N
    # m_t = t N_t (2 + 2**(t N_t))
    m = sparse([(tN, tN), (0, 2 * tN)])
    return LevelParams(
        t=t,
        k=k,
        lam=lam,
        n=n,
        N=N,
        m=m,
        M=N + m,
        metadata=dict(n_choice="minimal", epsilon=str(epsilon)),
    )


def build_levels(count=DEFAULT_DEPTH, eps=None):
    """
    Levels 1..count of the construction.

    Level 4 needs ln 2 to roughly 2**746 bits and raises PrecisionExhausted
    under any practical NSSHIFT_MAX_PRECISION.
    """
    assert count >= 1, "count must be positive."
    eps = EpsilonPolicy() if eps is None else eps
    levels = [base_level()]
    for _ in range(2, count + 1):
        levels.append(next_level(levels, eps))
    return levels


def verify_identities(levels):
    """N_t = M_{t-1} + n_t, M_t = N_t + m_t and the m_t formula for t >= 2."""
    checks = []
    M_prev = M0
    for level in levels:
        ok = level.N == M_prev + level.n and level.M == level.N + level.m
        if ok and level.t >= 2:
            tN = level.t * level.N
            ok = level.m == sparse([(tN, tN), (0, 2 * tN)])
        checks.append(LevelCheck(level.t, ok))
        M_prev = level.M
    return ConstraintReport("identities", tuple(checks))


def verify_growth(levels):
    """
    m_t / n - N_t > 2**(k N_t) for every k < t and n <= N_t, checked at the
    worst case n = N_t after multiplying through by N_t.
    """
    checks = []
    for level in levels:
        N = level.N
        witness = None
        for k in range(1, level.t):
            if not level.m - N * N > sparse([(k * N, N)]):
                witness = (k, N)
                break
        note = "vacuous" if level.t == 1 else ""
        checks.append(LevelCheck(level.t, witness is None, witness, note))
    return ConstraintReport("growth", tuple(checks))


def verify_lambda_constraint(levels, eps=None):
    """M_{t-1} 2**-k_t < eps_t, lambda_t > 1 and lambda_t < lambda_{t-1}."""
    eps = EpsilonPolicy() if eps is None else eps
    checks = []
    for prev, level in zip(levels, levels[1:]):
        ok = (
            lambda_constraint_holds(prev.M, level.k, eps.epsilon(level.t))
            and ScaledExponent.one() < level.lam
            and level.lam < prev.lam
        )
        checks.append(LevelCheck(level.t, ok))
    return ConstraintReport("lambda", tuple(checks))


def verify_dyadic(levels):
    """lambda_u = lambda_t**(2**(k_t - k_u)) for 2 <= u < t."""
    checks = []
    for i, level in enumerate(levels):
        witness = None
        for lower in levels[1:i]:
            if level.lam ** (2 ** (level.k - lower.k)) != lower.lam:
                witness = lower.t
                break
        checks.append(LevelCheck(level.t, witness is None, witness))
    return ConstraintReport("dyadic", tuple(checks))


def verify_minimal_n(levels):
    """n_t passes the choice inequality and n_t - 1 fails it, for t >= 2."""
    checks = []
    for i, level in enumerate(levels[1:], start=1):
        lam_form = level.lam.log_form()
        target_form = (a_max(levels[:i]) ** 2).log_form()
        ok = _passes(level.n, lam_form, target_form) and (
            level.n == 1 or not _passes(level.n - 1, lam_form, target_form)
        )
        checks.append(LevelCheck(level.t, ok, level.n))
    return ConstraintReport("minimal-n", tuple(checks))


def verify_levels(levels, eps=None):
    return [
        verify_identities(levels),
        verify_growth(levels),
        verify_lambda_constraint(levels, eps),
        verify_dyadic(levels),
        verify_minimal_n(levels),
    ]
