"""Attack cost and query-generation cost."""
import math
from typing import NamedTuple

from django.conf import settings

from .thresholds import weight_threshold

GREEN, GRAY, RED = 'green', 'gray', 'red'


def _infeasible_log2():
    return settings.CBPIR.get('INFEASIBLE_LOG2_COST', 100)


class ComplexityPoint(NamedTuple):
    m: int
    wt: int
    log2_cost: float
    region: str


class QueryGenCost(NamedTuple):
    unique_multiples: int
    field_multiplications: int


def log2_attack_cost(params, m, weight):
    """log2 of C(m, wt)·(m − wt)·(ns)³; −inf when nothing is left to enumerate."""
    if not 0 <= weight <= m:
        raise ValueError(f"weight must lie in [0, {m}], got {weight}")
    if weight == m:
        return -math.inf
    log_comb = math.lgamma(m + 1) - math.lgamma(weight + 1) - math.lgamma(m - weight + 1)
    return log_comb / math.log(2) + math.log2(m - weight) + 3 * math.log2(params.ns)


def attack_complexity(params, m, weight):
    """Cost of the subset attack and its region: green (impossible), gray (over the cutoff), red."""
    cost = log2_attack_cost(params, m, weight)
    if weight >= weight_threshold(params, m):
        region = GREEN
    elif cost > _infeasible_log2():
        region = GRAY
    else:
        region = RED
    return ComplexityPoint(m, weight, cost, region)


def query_gen_cost(params, weight):
    """Distinct multiples c·Δ a query of secret weight `weight` needs; at most q−1 by pigeonhole.

    This is the count gen_query performs for rows from spread_weight_row, which
    use min(weight, q−1) distinct scalars. Other rows may need fewer.
    """
    unique = min(weight, params.q - 1)
    delta_entries = params.delta * (params.n - params.k) * (params.s - params.v)
    return QueryGenCost(unique, unique * delta_entries)
