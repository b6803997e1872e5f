import json
import logging

from django.core.management.base import BaseCommand, CommandError

from arrangement.parsers import arrangement_load
from exactalg.fields import FieldSpec
from utils.exceptions import ConsistencyError, CustomBaseException

logger = logging.getLogger(__name__)


class FreenessCommand(BaseCommand):
    """Base for the toolkit's commands.

    Subclasses implement ``run(**options)`` returning ``(text, data)``; the base prints
    ``text`` or, with ``--json``, ``data``. Project exceptions become exit codes: 1 for
    bad input, 2 for failed internal cross-checks.
    """
    requires_system_checks = []
    takes_arrangement = True

    def add_arguments(self, parser):
        if self.takes_arrangement:
            parser.add_argument('path', help='arrangement file (.arr text or .json)')
            parser.add_argument('--field', help='override the file\'s field, e.g. Q or gf:3:2')
        parser.add_argument('--json', action='store_true', help='machine-readable output')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def load(self, options):
        spec = FieldSpec.parse(options['field']) if options.get('field') else None
        return arrangement_load(options['path'], spec)

    def run(self, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            text, data = self.run(**options)
        except ConsistencyError as e:
            logger.error('%s: %s', e.message, e.diagnostics)
            detail = json.dumps(e.diagnostics, default=str, sort_keys=True)
            raise CommandError(f'{e.message} {detail}', returncode=e.exit_code)
        except CustomBaseException as e:
            raise CommandError(e.message, returncode=e.exit_code)
        if options['json']:
            self.stdout.write(json.dumps(data, indent=4, default=str))
        else:
            self.stdout.write(text)
