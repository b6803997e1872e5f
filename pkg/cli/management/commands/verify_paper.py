from django.conf import settings
from django.core.management.base import CommandError

from cli.base import FreenessCommand
from cli.verification import groups, run_verification


class Command(FreenessCommand):
    help = 'verify-paper: run every reproduced result as a PASS/FAIL item; exits 0 iff all pass'
    takes_arrangement = False
    solver = None

    def add_command_arguments(self, parser):
        parser.add_argument('--only', nargs='+', choices=groups(), help='run these groups only')
        parser.add_argument('--quick', action='store_true', help='reduced sweeps and grids')
        parser.add_argument('--exploratory', action='store_true', help='include finite-field exploration')
        parser.add_argument('--workers', type=int, default=settings.FREENESS_WORKERS)
        parser.add_argument('--height', type=int, default=settings.FREENESS_SEARCH_HEIGHT)

    def run(self, **options):
        results = run_verification(
            only=options['only'], quick=options['quick'], exploratory=options['exploratory'],
            solver=self.solver, workers=options['workers'], height=options['height'],
        )
        failed = sum(1 for result in results if not result.passed)
        lines = [str(result) for result in results]
        lines.append(f'{len(results) - failed} passed, {failed} failed')
        self.failed = failed
        return '\n'.join(lines), dict(results=[r.as_dict() for r in results], failed=failed)

    def handle(self, *args, **options):
        super().handle(*args, **options)
        if self.failed:
            raise CommandError(f'{self.failed} verification items failed', returncode=1)
