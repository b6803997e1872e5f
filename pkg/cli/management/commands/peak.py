from classify.services import peak_report
from cli.base import FreenessCommand


class Command(FreenessCommand):
    help = 'Peak-point verdicts for a balanced B2 multiplicity, cross-checked with the solver'
    takes_arrangement = False

    def add_command_arguments(self, parser):
        parser.add_argument('multiplicity', type=int, nargs=4, metavar='M', help='m(x) m(y) m(x-y) m(x+y)')

    def run(self, **options):
        report = peak_report(options['multiplicity'])
        d1, d2 = report['exponents']
        verdict = 'peak point' if report['peak'] else 'not a peak point'
        return f'{tuple(report["multiplicity"])}: exp ({d1}, {d2}), {verdict}', report
