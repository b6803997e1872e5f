import os

from django.conf import settings

from arrangement.parsers import arrangement_dump, arrangement_load, arrangement_to_json
from cli.base import FreenessCommand
from exactalg.fields import FieldSpec, field_make
from extend.models import SearchDomain
from extend.search import COUNTERS, search_free_extensions


class Command(FreenessCommand):
    help = 'Search free extensions of an A2 or B2 multiarrangement'
    takes_arrangement = False

    def add_command_arguments(self, parser):
        parser.add_argument('--base', required=True, help='rank-2 arrangement file')
        parser.add_argument('--field', default='Q', help='Q for a rational grid, or gf:p[:e]')
        parser.add_argument('--height', type=int, default=settings.FREENESS_SEARCH_HEIGHT)
        parser.add_argument('--limit', type=int, default=settings.FREENESS_SEARCH_LIMIT)
        parser.add_argument('--workers', type=int, default=settings.FREENESS_WORKERS)
        parser.add_argument('--out', help='directory for one arrangement file per candidate')
        parser.add_argument('--no-restriction-prune', action='store_true')
        parser.add_argument('--no-lmp-prune', action='store_true')

    def run(self, **options):
        spec = FieldSpec.parse(options['field'])
        toggles = dict(restriction_prune=not options['no_restriction_prune'], lmp_prune=not options['no_lmp_prune'])
        if spec.kind == 'rationals':
            domain = SearchDomain.rational_grid(options['height'], **toggles)
        else:
            domain = SearchDomain.finite(field_make(spec), **toggles)
        base = arrangement_load(options['base'], spec)
        result = search_free_extensions(base, domain, options['limit'], options['workers'])
        blocks = []
        for number, (candidate, report) in enumerate(result.found, start=1):
            E = candidate.to_arrangement()
            if options['out']:
                os.makedirs(options['out'], exist_ok=True)
                with open(os.path.join(options['out'], f'candidate_{number:03d}.arr'), 'w') as handle:
                    handle.write(arrangement_dump(E))
            blocks.append(f'# candidate {number}: {report}\n{arrangement_dump(E)}')
        summary = [f'domain: {domain.description}'] + [f'{name}: {result.counters[name]}' for name in COUNTERS]
        data = dict(
            domain=domain.description, counters=result.counters,
            candidates=[dict(arrangement=arrangement_to_json(c.to_arrangement()), offsets=c.describe(),
                             report=r.as_dict()) for c, r in result.found],
        )
        return '\n'.join(blocks + summary), data
