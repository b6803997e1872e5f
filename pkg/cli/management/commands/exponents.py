from classify.services import exponents
from cli.base import FreenessCommand
from derivations.services import rank2_exponents_solver
from lattice.services import essentialize
from utils.exceptions import NotAllowed


class Command(FreenessCommand):
    help = 'Exponents of a rank-2 multiarrangement'

    def add_command_arguments(self, parser):
        parser.add_argument('--verify', action='store_true', help='cross-check closed-form rules with the solver')
        parser.add_argument('--basis', action='store_true', help='print a basis of D(A, m) from the solver')

    def run(self, **options):
        A = self.load(options)
        pair = exponents(A, verify=options['verify'])
        text, data = str(pair), dict(exponents=list(pair.as_tuple()), provenance=pair.provenance)
        if options['basis']:
            if A.dim != 2:
                A = essentialize(A)
            if A.dim != 2 or A.total < 1:
                raise NotAllowed('A basis is computed for essential rank-2 multiarrangements with |m| >= 1')
            solution = rank2_exponents_solver(A)
            lines = [text]
            for i, theta in enumerate(solution.basis, start=1):
                lines.append(f'theta_{i} = {theta}')
            text = '\n'.join(lines)
            data['basis'] = [dict(degree=theta.degree, components=[str(c) for c in theta.components])
                             for theta in solution.basis]
        return text, data
