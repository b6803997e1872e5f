from arrangement.parsers import arrangement_load
from arrangement.selectors import b2_multiplicity_get
from cli.base import FreenessCommand
from extend.services import restriction_bounds

CLASSES = ('x', 'y', 'x-y', 'x+y')


class Command(FreenessCommand):
    help = 'Bounds on |E^H| over free extensions of a balanced B2 multiarrangement'
    takes_arrangement = False

    def add_command_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--base', help='B2 arrangement file')
        source.add_argument('--multiplicity', type=int, nargs=4, metavar='M', help='m(x) m(y) m(x-y) m(x+y)')

    def run(self, **options):
        m = tuple(options['multiplicity'] or b2_multiplicity_get(arrangement_load(options['base'])))
        rows = []
        for cls, name in enumerate(CLASSES):
            if not m[cls]:
                continue
            bounds = restriction_bounds(m, cls)
            rows.append(dict(hyperplane=name, lower=bounds.lower, upper=bounds.upper, case=bounds.case))
        text = '\n'.join(f'{r["hyperplane"]}: {r["lower"]} <= |E^H| <= {r["upper"]} (case {r["case"]})' for r in rows)
        return text, dict(multiplicity=list(m), bounds=rows)
