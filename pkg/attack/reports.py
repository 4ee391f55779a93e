"""Attack outcomes and their CSV form."""
import csv
from dataclasses import dataclass, field
from fractions import Fraction

CSV_HEADER = ('subset', 'rank')


def format_subset(subset):
    return ' '.join(str(j) for j in subset)


@dataclass
class AttackReport:
    target_kind: str
    ranks: dict = field(default_factory=dict)
    inferred: object = None
    candidates: list = field(default_factory=list)
    success: bool = False
    elimination_ops: int = 0
    predicted_ops: int = 0
    weight: int = None

    @property
    def subsets_enumerated(self):
        return len(self.ranks)

    def summary(self):
        inferred = self.inferred
        if isinstance(inferred, tuple):
            inferred = format_subset(inferred)
        return {
            'target_kind': self.target_kind,
            'weight': self.weight,
            'subsets': self.subsets_enumerated,
            'inferred': '' if inferred is None else inferred,
            'candidates': len(self.candidates),
            'success': int(bool(self.success)),
            'elimination_ops': self.elimination_ops,
            'predicted_ops': self.predicted_ops,
        }

    def to_csv_rows(self):
        """One (subset, rank) row per deleted block set, then a summary row."""
        rows = [CSV_HEADER]
        rows.extend((format_subset(subset), rank) for subset, rank in self.ranks.items())
        summary = self.summary()
        rows.append(('summary', ';'.join(f"{key}={value}" for key, value in summary.items())))
        return rows


def write_reports(stream, reports):
    """Per-trial summaries as CSV, one line per report."""
    writer = None
    for trial, report in enumerate(reports):
        row = {'trial': trial, **report.summary()}
        if writer is None:
            writer = csv.DictWriter(stream, fieldnames=list(row))
            writer.writeheader()
        writer.writerow(row)


def success_rate(reports):
    reports = list(reports)
    if not reports:
        return Fraction(0)
    return Fraction(sum(1 for r in reports if r.success), len(reports))
