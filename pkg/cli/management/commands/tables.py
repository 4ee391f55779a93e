from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from analysis.tables import write_bounds, write_fig3, write_rates

WRITERS = (
    ('rates.csv', write_rates),
    ('fig3.csv', write_fig3),
    ('bounds.csv', write_bounds),
)


class Command(BaseCommand):
    help = "Write the rate table, attack-complexity points and failure bounds as CSV"

    def add_arguments(self, parser):
        parser.add_argument('--out', default='.', help="output directory")

    def handle(self, *args, **options):
        out = Path(options['out'])
        try:
            out.mkdir(parents=True, exist_ok=True)
            for name, writer in WRITERS:
                with open(out / name, 'w', newline='') as handle:
                    writer(handle)
                self.stdout.write(f"wrote {out / name}")
        except OSError as e:
            raise CommandError(f"cannot write to {out}: {e.strerror}", returncode=1)
        self.stdout.write(self.style.SUCCESS("tables written"))
