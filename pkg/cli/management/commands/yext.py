from arrangement.parsers import arrangement_dump, arrangement_to_json
from cli.base import FreenessCommand
from extend.services import yoshinaga_extension


class Command(FreenessCommand):
    help = 'Yoshinaga extension of a rank-2 multiarrangement'

    def run(self, **options):
        E = yoshinaga_extension(self.load(options)).to_arrangement()
        return arrangement_dump(E), arrangement_to_json(E)
