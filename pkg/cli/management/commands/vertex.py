from cli.base import FreenessCommand
from extend.supersolvable import b3_filtration, free_vertex_check, non_extendable_by_localization


class Command(FreenessCommand):
    help = 'Free vertex condition along {x} < {x, y, x-y, x+y} < B3, and the localization obstruction'

    def run(self, **options):
        A = self.load(options)
        report = free_vertex_check(A, b3_filtration(A))
        witness = non_extendable_by_localization(A) if not A.field.characteristic else None
        lines = [str(check) for check in report.checks]
        if report.satisfied:
            lines.append(f'satisfied, inductively free with exp ({", ".join(map(str, report.exponents))})')
        else:
            lines.append('violated')
        if witness:
            lines.append(f'no free extension: localization at {", ".join(map(str, witness.hyperplanes))} '
                         f'is B2 with {witness.multiplicity}')
        elif A.field.characteristic:
            lines.append('localization obstruction skipped in positive characteristic')
        else:
            lines.append('no localization witness')
        return '\n'.join(lines), dict(
            satisfied=report.satisfied,
            exponents=list(report.exponents) if report.satisfied else None,
            checks=[dict(hyperplane=str(c.hyperplane), multiplicity=c.multiplicity, required=c.required,
                         satisfied=c.satisfied) for c in report.checks],
            witness=dict(hyperplanes=[str(h) for h in witness.hyperplanes], multiplicity=list(witness.multiplicity))
            if witness else None,
        )
