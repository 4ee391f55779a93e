from django.core.management.base import BaseCommand

from analysis.rates import rate_exact, rate_original, rate_reusing_beta
from analysis.thresholds import m_zero, m_zero_increment, weight_threshold
from attack.bounds import break_threshold
from cli.common import add_params_argument, load_params, params_hash


class Command(BaseCommand):
    help = "Validate a ParamsFile and print its derived quantities"

    def add_arguments(self, parser):
        add_params_argument(parser)

    def handle(self, *args, **options):
        params_file = load_params(options['params'])
        params = params_file.params
        exact = rate_exact(params)
        report = [
            ('q', params.q),
            ('delta', params.delta),
            ('ns', params.ns),
            ('rate_exact', exact.exact_rate),
            ('rate_asymptotic', exact.asymptotic_rate),
            ('rate_original', rate_original(params).asymptotic_rate),
            ('rate_reusing_beta', rate_reusing_beta(params).exact_rate),
            ('weight_goal', params.weight_goal),
            ('weight_threshold', weight_threshold(params)),
            ('m0_increment', m_zero_increment(params)),
            ('m0', m_zero(params, params.weight_goal)),
            ('single_block_break_m', break_threshold(params)),
            ('params_hash', params_hash(params_file)),
        ]
        for key, value in report:
            self.stdout.write(f"{key}: {value}")
        self.stdout.write(self.style.SUCCESS("parameters are valid"))
