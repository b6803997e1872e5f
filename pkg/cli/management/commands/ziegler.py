from arrangement.parsers import arrangement_dump, arrangement_to_json
from cli.base import FreenessCommand
from cli.services import pivot_parse
from extend.services import ziegler_restriction


class Command(FreenessCommand):
    help = 'Ziegler restriction of a simple arrangement to one of its hyperplanes'

    def add_command_arguments(self, parser):
        parser.add_argument('--pivot', default='z', help='variable name or coefficients of the hyperplane')

    def run(self, **options):
        E = self.load(options)
        restricted = ziegler_restriction(E, pivot_parse(E, options['pivot']))
        return arrangement_dump(restricted), arrangement_to_json(restricted)
