"""Failure-probability bounds for the subset-rank attack, in log_q space."""
import functools
import math
from fractions import Fraction

# exact evaluation stays below roughly 10^600
EXACT_LOG2_CUTOFF = 2000


def gaussian_binomial(a, b, q):
    """Number of b-dimensional subspaces of F_q^a, as an exact integer."""
    if not 0 <= b <= a:
        return 0
    numerator, denominator = 1, 1
    for i in range(b):
        numerator *= q ** (a - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def _logq_q_power_minus_one(x, q):
    # log_q(q^x - 1) = x + log_q(1 - q^-x)
    return x + math.log1p(-float(q) ** -x) / math.log(q)


@functools.lru_cache(maxsize=None)
def log_gaussian_binomial(a, b, q):
    if not 0 <= b <= a:
        return -math.inf
    if b * (a - b) * math.log2(q) <= EXACT_LOG2_CUTOFF:
        return math.log(gaussian_binomial(a, b, q)) / math.log(q)
    return sum(_logq_q_power_minus_one(a - i, q) - _logq_q_power_minus_one(i + 1, q) for i in range(b))


def break_threshold(params):
    """The single-block attack succeeds w.h.p. once m exceeds 1 + (δ+1)(ns−2δ)/δ²."""
    delta, ns = params.delta, params.ns
    return 1 + Fraction((delta + 1) * (ns - 2 * delta), delta ** 2)


def failure_probability_bound(params, weight, m=None):
    """(tight, loose) log_q bounds on the probability that the subset attack fails.

    tight = log_q [ns−δ choose ns−2δ]_q − δ²(m − wt)
    loose = (δ+1)(ns−2δ) − δ²(m − wt)
    """
    m = params.m if m is None else m
    delta, ns = params.delta, params.ns
    if 2 * delta > ns:
        raise ValueError(f"bound needs δ <= ns/2, got δ={delta}, ns={ns}")
    if not 0 <= weight <= m:
        raise ValueError(f"weight must lie in [0, {m}], got {weight}")
    tail = delta ** 2 * (m - weight)
    tight = log_gaussian_binomial(ns - delta, ns - 2 * delta, params.q) - tail
    loose = (delta + 1) * (ns - 2 * delta) - tail
    return tight, loose
