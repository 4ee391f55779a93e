import csv
import math
from contextlib import ExitStack

from django.core.management.base import BaseCommand, CommandError

from attack.reports import success_rate, write_reports
from attack.trials import ATTACKS, DEFAULT_ATTACK, SCHEMES, run_trials
from cli.common import add_params_argument, add_seed_argument, domain_failures, load_params, resolve_seed
from scheme.randomness import stream


class Command(BaseCommand):
    help = "Monte-Carlo run of the sub-query rank attack"

    def add_arguments(self, parser):
        add_params_argument(parser)
        add_seed_argument(parser)
        parser.add_argument('--scheme', choices=SCHEMES, default='original')
        parser.add_argument('--attack', choices=ATTACKS, default=None,
                            help="single-block argmin or subset enumeration (default: by scheme)")
        parser.add_argument('--trials', type=int, default=50)
        parser.add_argument('--weight', type=int, default=None,
                            help="secret row weight for the modified scheme (default: the plan's rows)")
        parser.add_argument('--workers', type=int, default=None, help="threads for rank computations")
        parser.add_argument('--allow-large', action='store_true',
                            help="lift the subset enumeration cap")
        parser.add_argument('--out', help="per-trial CSV path (default: stdout)")
        parser.add_argument('--ranks', help="CSV path for every trial's rank profile")

    def handle(self, *args, **options):
        params_file = load_params(options['params'])
        params = params_file.params
        if options['trials'] < 1:
            raise CommandError("--trials must be positive", returncode=2)
        weight = options['weight']
        if weight is not None and not 0 <= weight <= params.m:
            raise CommandError(f"--weight must lie in [0, {params.m}]", returncode=2)
        attack = options['attack'] or DEFAULT_ATTACK[options['scheme']]
        if attack == 'single' and options['scheme'] == 'modified' and weight is not None:
            raise CommandError("--weight applies to the subset attack only", returncode=2)
        seed = resolve_seed(options, params_file)
        with domain_failures():
            reports = run_trials(
                params, params_file.tower(), options['scheme'], options['trials'], stream(seed, 'attack'),
                weight=weight, workers=options['workers'], cap=math.inf if options['allow_large'] else None,
                attack=attack,
            )

        with ExitStack() as stack:
            target = stack.enter_context(open(options['out'], 'w', newline='')) if options['out'] else self.stdout
            write_reports(target, reports)
        if options['ranks']:
            with open(options['ranks'], 'w', newline='') as handle:
                writer = csv.writer(handle)
                for trial, report in enumerate(reports):
                    writer.writerow(('trial', trial))
                    writer.writerows(report.to_csv_rows())

        rate = success_rate(reports)
        self.stdout.write(self.style.SUCCESS(
            f"{attack} attack on {options['scheme']} queries: success rate {rate.numerator}/{rate.denominator} "
            f"({float(rate):.3f}) over {len(reports)} trials, seed {seed}"
        ))
