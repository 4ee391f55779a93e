"""Weight thresholds of the subset-rank attack."""
import math
from fractions import Fraction

from .rates import rate_exact


def weight_threshold(params, m=None):
    """Smallest secret weight the subset attack cannot exploit: ⌈m + 1 − f/((f+1)R)⌉."""
    m = params.m if m is None else m
    if params.delta >= params.ns:
        raise ValueError(f"δ={params.delta} must stay below ns={params.ns}")
    rate = rate_exact(params).asymptotic_rate
    ratio = Fraction(params.f, params.f + 1) / rate
    assert ratio == Fraction(params.ns, params.delta)
    return math.ceil(m + 1 - ratio)


def m_zero_increment(params):
    """⌈(δ+1)(ns−2δ)/δ²⌉, or 0 once ns <= 2δ."""
    delta, ns = params.delta, params.ns
    if ns <= 2 * delta:
        return 0
    return math.ceil(Fraction((delta + 1) * (ns - 2 * delta), delta ** 2))


def m_zero(params, weight):
    return weight + m_zero_increment(params)


def success_floor(params, weight, m=None):
    """log_q of the failure term q^{−(m−m₀)δ²}; success probability is at least 1 − q^this."""
    m = params.m if m is None else m
    return -(m - m_zero(params, weight)) * params.delta ** 2
