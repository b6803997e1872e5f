from cli.base import FreenessCommand
from lattice.services import characteristic_polynomial


class Command(FreenessCommand):
    help = 'Characteristic polynomial'

    def run(self, **options):
        chi = characteristic_polynomial(self.load(options))
        return str(chi), dict(coefficients=list(chi.coefficients), b1=chi.b1, b2=chi.b2)
