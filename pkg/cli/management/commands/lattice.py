from cli.base import FreenessCommand
from lattice.selectors import flats_describe
from lattice.services import intersection_lattice


class Command(FreenessCommand):
    help = 'Flats of the intersection lattice with their Moebius values'

    def add_command_arguments(self, parser):
        parser.add_argument('--max-rank', type=int, help='build flats up to this rank only')

    def run(self, **options):
        lattice = intersection_lattice(self.load(options), options['max_rank'])
        ranks = flats_describe(lattice)
        lines = []
        for rank, flats in enumerate(ranks):
            lines.append(f'rank {rank}: {len(flats)} flats')
            for flat in flats:
                lines.append(f'  mu = {flat["mobius"]}: {", ".join(flat["members"]) or "(whole space)"}')
        return '\n'.join(lines), dict(complete=lattice.complete, ranks=ranks)
