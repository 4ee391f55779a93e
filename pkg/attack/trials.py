"""Monte-Carlo harness: fresh queries, attacked one at a time."""
import dataclasses
import logging

from scheme.batch import spread_weight_row
from scheme.plan import build_secret_plan
from scheme.query import gen_query, gen_query_original

from .subquery import attack_modified, attack_original

logger = logging.getLogger(__name__)

SCHEMES = ('original', 'modified')
ATTACKS = ('single', 'subset')
DEFAULT_ATTACK = {'original': 'single', 'modified': 'subset'}


def attack_trial(params, tower, scheme, rng, weight=None, workers=None, cap=None, attack=None):
    """One query against one attack; the truth is used only to score the report.

    `original` targets e^i queries. `modified` targets the first secret row
    of a plan, or a spread row of `weight` when given. The `single` attack
    is the argmin over single-block deletions, scored against the first
    requested file. The `subset` attack enumerates sets of the row's true
    weight and is scored against its support.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    attack = attack or DEFAULT_ATTACK[scheme]
    if attack not in ATTACKS:
        raise ValueError(f"unknown attack {attack!r}; expected one of {ATTACKS}")
    if scheme == 'original':
        index = int(rng.integers(params.m))
        _, query = gen_query_original(params, tower, index, rng)
        if attack == 'single':
            return attack_original(query, params, truth=index, workers=workers)
        report = attack_modified(query, params, 1, truth=(index,), workers=workers, cap=cap)
        return dataclasses.replace(report, target_kind='original')
    if weight is None:
        indices = rng.choice(params.m, size=params.f, replace=False)
        row = build_secret_plan(params, tower.field, indices, rng).secret_rows()[0]
        target = int(indices[0])
    elif attack == 'single':
        raise ValueError("the single-block attack is scored against a plan's file; drop the weight override")
    else:
        row = spread_weight_row(tower.field, params.m, weight, rng)
    _, query = gen_query(params, tower, row, rng)
    if attack == 'single':
        report = attack_original(query, params, truth=target, workers=workers)
        return dataclasses.replace(report, target_kind='modified')
    return attack_modified(query, params, row.weight(), truth=row.support(), workers=workers, cap=cap)


def run_trials(params, tower, scheme, trials, rng, weight=None, workers=None, cap=None, attack=None):
    reports = [attack_trial(params, tower, scheme, rng, weight=weight, workers=workers, cap=cap, attack=attack)
               for _ in range(trials)]
    wins = sum(1 for report in reports if report.success)
    logger.info("%s attack on %s queries: %d/%d successes",
                attack or DEFAULT_ATTACK[scheme], scheme, wins, trials)
    return reports
