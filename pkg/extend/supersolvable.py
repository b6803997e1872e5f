import logging

from arrangement.models import Hyperplane, Multiarrangement
from arrangement.services import b2_canonical_permutation
from classify.services import exponents, harmonic_pairing
from exactalg.matrices import Matrix
from lattice.services import essentialize, flat_span, intersection_lattice, localization
from utils.exceptions import NotAllowed
from .models import FreeVertexReport, LocalizationWitness, VertexCheck

logger = logging.getLogger(__name__)

MIN_WITNESS_K = 4


def b3_filtration(A):
    """{x} < {x, y, x-y, x+y} < B3."""
    plane = [A.hyperplane(form) for form in ((1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 1, 0))]
    return [plane[:1], plane, list(A.hyperplanes)]


def _levels(A, filtration):
    levels = []
    for level in filtration:
        hyperplanes = [h if isinstance(h, Hyperplane) else A.hyperplane(h) for h in level]
        if any(h not in A for h in hyperplanes):
            raise NotAllowed('Every hyperplane of a filtration must belong to the arrangement')
        levels.append(frozenset(hyperplanes))
    if len(levels) < 2:
        raise NotAllowed('A filtration needs at least two levels')
    if levels[-1] != frozenset(A.hyperplanes):
        raise NotAllowed('The last level of a filtration is the whole arrangement')
    for i, level in enumerate(levels, start=1):
        if i > 1 and not levels[i - 2] < level:
            raise NotAllowed(f'Level {i} does not strictly contain level {i - 1}')
        rank = Matrix(A.field, [h.coefficients for h in level]).rank()
        if rank != i:
            raise NotAllowed(f'Level {i} has rank {rank}')
    return levels


def free_vertex_check(A, filtration):
    """Multiplicity inequalities along a supersolvable filtration; when all hold the
    multiarrangement is inductively free with the returned exponents."""
    levels = _levels(A, filtration)
    checks = {}
    for d in range(3, len(levels) + 1):
        current, previous = levels[d - 1], levels[d - 2]
        new = current - previous
        for upper in sorted(new, key=Hyperplane.sort_key):
            for lower in sorted(previous, key=Hyperplane.sort_key):
                flat = flat_span(A, [upper, lower])
                through = [h for h in current if flat.contains(h.coefficients)]
                key = (flat.basis, lower)
                if key in checks or len(through) == 2:
                    continue
                required = sum(A.multiplicity(h) for h in through if h in new) - 1
                have = A.multiplicity(lower)
                checks[key] = VertexCheck(flat, lower, have, required, have >= required)
    plane = Multiarrangement(A.field, A.dim, [(h, A.multiplicity(h)) for h in levels[1]])
    pair = exponents(plane)
    sizes = [sum(A.multiplicity(h) for h in level) for level in levels]
    exps = tuple(sorted((pair.d1, pair.d2) + tuple(sizes[d] - sizes[d - 1] for d in range(2, len(levels)))))
    report = FreeVertexReport(tuple(checks.values()), exps)
    for check in report.violations:
        logger.info('free vertex condition violated: %s', check)
    return report


def non_extendable_by_localization(A):
    """First rank-2 flat whose localization rules out any free extension of A, or None."""
    if A.field.characteristic:
        raise NotAllowed('The localization obstruction holds in characteristic zero only')
    if A.rank() < 3:
        raise NotAllowed('Localizations are searched in arrangements of rank at least 3')
    lattice = intersection_lattice(A, max_rank=2)
    for flat in lattice.flats(2):
        if len(flat.members) != 4:
            continue
        local = localization(A, flat)
        plane = essentialize(local)
        pairing = harmonic_pairing(plane)
        if pairing is None:
            continue
        (i, j), (k, l) = pairing
        m = tuple(plane.mult[t] for t in (i, j, k, l))
        first, k_value, second, again = b2_canonical_permutation(m)
        if (first, second) == (1, 2) and k_value == again >= MIN_WITNESS_K:
            return LocalizationWitness(flat, local.hyperplanes, m, k_value)
    return None
