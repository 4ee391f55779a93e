"""Data behind the rate table, the attack-complexity figure and the bounds."""
import csv
import logging
from fractions import Fraction

from attack.bounds import failure_probability_bound
from scheme.params import SchemeParams

from .complexity import attack_complexity
from .rates import rate_exact

logger = logging.getLogger(__name__)

# (b, s, v, n, k, [f, ...]) for each parameter family of the rate table
RATE_TABLE = (
    (4, 32, 31, 100, 50, (1, 4, 32)),
    (4, 32, 16, 100, 50, (1, 4, 32)),
    (5, 32, 31, 100, 50, (1, 64)),
    (5, 32, 26, 100, 50, (1, 32)),
    (5, 32, 24, 100, 50, (1, 8)),
)

REFERENCE = {'b': 5, 's': 32, 'v': 24, 'n': 100, 'k': 50, 'L': 1, 'f': 1}
FIGURE_FILE_COUNTS = (100, 10_000)

RATES_HEADER = ('q', 's', 'v', 'n', 'k', 'delta', 'f', 'rate_num', 'rate_den')
FIG3_HEADER = ('m', 'wt', 'log2_cost', 'region')
BOUNDS_HEADER = ('m', 'wt', 'logq_p_tight', 'logq_p_loose')


def reference_params(m=100):
    return SchemeParams(m=m, **REFERENCE)


def table1_rows():
    rows = []
    for b, s, v, n, k, batch_sizes in RATE_TABLE:
        for f in batch_sizes:
            # m does not enter the asymptotic rate
            params = SchemeParams(b=b, s=s, v=v, n=n, k=k, m=f + 1, L=1, f=f)
            rate = rate_exact(params).asymptotic_rate
            rows.append({
                'q': params.q, 's': s, 'v': v, 'n': n, 'k': k, 'delta': params.delta, 'f': f,
                'rate': rate,
            })
    return rows


def fig3_points(params, m):
    return [attack_complexity(params, m, wt) for wt in range(m + 1)]


def bounds_rows(params, m):
    rows = []
    for wt in range(m + 1):
        tight, loose = failure_probability_bound(params, wt, m=m)
        rows.append((m, wt, tight, loose))
    return rows


def write_rates(stream):
    writer = csv.writer(stream)
    writer.writerow(RATES_HEADER)
    for row in table1_rows():
        rate = Fraction(row['rate'])
        writer.writerow([row[key] for key in RATES_HEADER[:7]] + [rate.numerator, rate.denominator])


def write_fig3(stream, params=None, file_counts=FIGURE_FILE_COUNTS):
    writer = csv.writer(stream)
    writer.writerow(FIG3_HEADER)
    for m in file_counts:
        for point in fig3_points(params or reference_params(m), m):
            writer.writerow([point.m, point.wt, f"{point.log2_cost:.6f}", point.region])


def write_bounds(stream, params=None, file_counts=FIGURE_FILE_COUNTS):
    writer = csv.writer(stream)
    writer.writerow(BOUNDS_HEADER)
    for m in file_counts:
        for row in bounds_rows(params or reference_params(m), m):
            writer.writerow([row[0], row[1], f"{row[2]:.6f}", f"{row[3]}"])
    logger.debug("bounds written for m in %s", file_counts)
