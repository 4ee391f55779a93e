"""Sub-query rank attacks.

Deleting the δ-row blocks that carry the secret payload Δ⊗w drops the
F_q-rank of the flattened query by δ. The original single-file query
betrays its index through one block; a lower-weight combined query
betrays its support through one subset of blocks.
"""
import functools
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

from cbpir_lab.exceptions import EnumerationCapExceeded
from matfq.algebra import delete_row_blocks, flatten_fq
from matfq.elimination import eliminate

from .reports import AttackReport

logger = logging.getLogger(__name__)


def _enumeration_cap():
    return settings.CBPIR.get('ENUMERATION_CAP', 10 ** 6)


def _default_workers():
    return settings.CBPIR.get('ATTACK_WORKERS', 1)


def _rank_without(flat, blocks, delta):
    return eliminate(delete_row_blocks(flat, blocks, delta))


def _profile(query, params, subsets, workers):
    """Ranks and op counts for each deleted set, in enumeration order."""
    flat = flatten_fq(query)
    work = functools.partial(_rank_without, flat, delta=params.delta)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, subsets))
    else:
        results = [work(blocks) for blocks in subsets]
    return results


def subquery_ranks_single(query, params):
    """rank[j] = F_q-rank of the query with block j deleted."""
    results = _profile(query, params, [(j,) for j in range(params.m)], workers=None)
    return [result.rank for result in results]


def _minimal(ranks):
    lowest = min(ranks.values())
    return [subset for subset, rank in ranks.items() if rank == lowest]


def attack_original(query, params, truth=None, workers=None):
    """Argmin over single-block deletions; a tie is a failure."""
    subsets = [(j,) for j in range(params.m)]
    results = _profile(query, params, subsets, workers or _default_workers())
    ranks = {subset: result.rank for subset, result in zip(subsets, results)}
    candidates = _minimal(ranks)
    inferred = candidates[0][0] if len(candidates) == 1 else None
    report = AttackReport(
        target_kind='original',
        ranks=ranks,
        inferred=inferred,
        candidates=candidates,
        success=inferred is not None and inferred == truth,
        elimination_ops=sum(result.ops for result in results),
        predicted_ops=params.m * params.ns ** 3,
        weight=1,
    )
    logger.debug("single-block attack: min rank %d, %d candidates", min(ranks.values()), len(candidates))
    return report


def attack_modified(query, params, weight, truth=None, workers=None, cap=None):
    """Enumerate every set of `weight` blocks; the unique minimal-rank set is the inferred support.

    The attacker is assumed to know the weight of the secret row.
    """
    m = params.m
    if weight >= m:
        return AttackReport(target_kind='modified', weight=weight)
    count = math.comb(m, weight)
    cap = cap or _enumeration_cap()
    if count > cap:
        raise EnumerationCapExceeded(f"C({m}, {weight}) = {count} subsets exceed the cap of {cap}")
    subsets = list(itertools.combinations(range(m), weight))
    results = _profile(query, params, subsets, workers or _default_workers())
    ranks = {subset: result.rank for subset, result in zip(subsets, results)}
    candidates = _minimal(ranks)
    inferred = candidates[0] if len(candidates) == 1 else None
    truth = tuple(sorted(truth)) if truth is not None else None
    logger.debug("subset attack over %d subsets: %d candidates", count, len(candidates))
    return AttackReport(
        target_kind='modified',
        ranks=ranks,
        inferred=inferred,
        candidates=candidates,
        success=inferred is not None and inferred == truth,
        elimination_ops=sum(result.ops for result in results),
        predicted_ops=count * params.ns ** 3,
        weight=weight,
    )
