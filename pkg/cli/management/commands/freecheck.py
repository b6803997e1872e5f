from cli.base import FreenessCommand
from cli.services import pivot_parse
from extend.services import yoshinaga_freeness


class Command(FreenessCommand):
    help = 'Freeness of a simple rank-3 arrangement by comparing LMP with VGMP'

    def add_command_arguments(self, parser):
        parser.add_argument('--pivot', default='z', help='variable name or coefficients of the hyperplane')

    def run(self, **options):
        E = self.load(options)
        report = yoshinaga_freeness(E, pivot_parse(E, options['pivot']))
        return str(report), report.as_dict()
