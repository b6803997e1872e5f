from fractions import Fraction

from cli.base import FreenessCommand
from cli.services import decone_figure, decone_svg, pivot_parse


class Command(FreenessCommand):
    help = 'decone-svg: SVG picture of a rank-3 arrangement in the chart where the pivot coordinate is 1'

    def add_command_arguments(self, parser):
        parser.add_argument('--pivot', default='z', help='coordinate hyperplane sent to infinity')
        parser.add_argument('--viewport', nargs=4, type=Fraction, metavar=('X0', 'Y0', 'X1', 'Y1'))
        parser.add_argument('--output', help='write the SVG to this file')

    def run(self, **options):
        E = self.load(options)
        figure = decone_figure(E, pivot_parse(E, options['pivot']), options['viewport'])
        svg = decone_svg(figure)
        if options['output']:
            with open(options['output'], 'w') as handle:
                handle.write(svg)
        data = dict(lines=len(figure.lines), marked_points=len(figure.marked_points),
                    viewport=[str(v) for v in figure.viewport], svg=svg)
        return svg, data
