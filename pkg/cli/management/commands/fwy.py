from cli.base import FreenessCommand
from derivations.appendix import fwy_generators, fwy_parameters


class Command(FreenessCommand):
    help = 'Explicit basis of D(A2, (p, q, r)) for a balanced multiplicity'
    takes_arrangement = False

    def add_command_arguments(self, parser):
        parser.add_argument('p', type=int)
        parser.add_argument('q', type=int)
        parser.add_argument('r', type=int)

    def run(self, **options):
        p, q, r = options['p'], options['q'], options['r']
        generators = fwy_generators(p, q, r)
        lines = [f'(a, b, c) = {fwy_parameters(p, q, r)}']
        lines += [f'theta_{i} = {theta}' for i, theta in enumerate(generators, start=1)]
        return '\n'.join(lines), dict(parameters=list(fwy_parameters(p, q, r)),
                                      generators=[[str(c) for c in theta.components] for theta in generators])
