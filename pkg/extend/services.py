import logging

from arrangement.models import Hyperplane, Multiarrangement
from arrangement.services import deletion, multiplicity_is_balanced
from classify.services import b2_exponents, exponents
from lattice.selectors import restriction_sizes, simple_lmp_get
from lattice.services import characteristic_polynomial, flat_span, intersection_lattice, localization
from utils.exceptions import ConsistencyError, NotAllowed
from utils.timing import timed
from .models import FREE, NOT_FREE, ExtensionCandidate, FreenessReport, RestrictionBounds

logger = logging.getLogger(__name__)


def default_pivot(E):
    """ker of the last coordinate, the hyperplane a Yoshinaga extension adds."""
    return Hyperplane(E.field, (0,) * (E.dim - 1) + (1,))


def ziegler_restriction(E, H0):
    """(E^H0, m^H0): every other hyperplane cut down to H0, counted with multiplicity."""
    if not E.is_simple:
        raise NotAllowed('Ziegler restrictions are taken of simple arrangements')
    flat = flat_span(E, [H0])
    counts = {}
    for hyperplane in E.hyperplanes:
        if hyperplane == H0:
            continue
        restricted = Hyperplane(E.field, flat.restrict_form(hyperplane.coefficients))
        counts[restricted] = counts.get(restricted, 0) + 1
    return Multiarrangement(E.field, E.dim - 1, list(counts.items()))


def yoshinaga_offsets(m):
    return tuple(range(-((m - 1) // 2), m // 2 + 1))


def yoshinaga_extension(A):
    return ExtensionCandidate(A, [yoshinaga_offsets(m) for m in A.mult])


def _lattice2(A):
    if A.rank() < 3:
        raise NotAllowed('LMP is taken of arrangements of rank at least 3')
    return intersection_lattice(A, max_rank=2)


def lmp(A, lattice=None):
    """Local mixed product: sum over rank-2 flats of d1*d2 of the localization."""
    lattice = lattice or _lattice2(A)
    if A.is_simple:
        return simple_lmp_get(lattice)
    total = 0
    for flat in lattice.flats(2):
        pair = exponents(localization(A, flat))
        total += pair.d1 * pair.d2
    return total


def gmp(exponents_):
    values = list(exponents_)
    return sum(values[i] * values[j] for i in range(len(values)) for j in range(i + 1, len(values)))


def restriction_exponents(E, H0):
    return exponents(ziegler_restriction(E, H0))


def vgmp(E, H0):
    pair = restriction_exponents(E, H0)
    return pair.d1 + pair.d2 + pair.d1 * pair.d2


def _require_simple_rank3(E):
    if E.dim != 3 or not E.is_simple:
        raise NotAllowed('The freeness criterion applies to simple arrangements in 3-space')
    if E.rank() != 3:
        raise NotAllowed('The freeness criterion applies to essential arrangements of rank 3')


@timed
def yoshinaga_freeness(E, H0=None):
    """Free iff LMP(E) equals VGMP(E, H0), i.e. b2 = d1*d2 for the restriction exponents."""
    _require_simple_rank3(E)
    H0 = H0 or default_pivot(E)
    E.index(H0)
    lattice = intersection_lattice(E)
    chi = characteristic_polynomial(lattice)
    local = simple_lmp_get(lattice)
    pair = restriction_exponents(E, H0)
    target = pair.d1 + pair.d2 + pair.d1 * pair.d2
    diagnostics = dict(arrangement=repr(E), pivot=str(H0), chi=str(chi), lmp=local, vgmp=target,
                       exponents_on_restriction=pair.as_tuple())
    if chi.coefficients[2] != local:
        raise ConsistencyError('Rank-2 Moebius values disagree with the flat sizes', diagnostics)
    if chi.b1 != pair.d1 + pair.d2:
        raise ConsistencyError('b1 differs from the size of the Ziegler restriction', diagnostics)
    if local < target:
        raise ConsistencyError('LMP fell below VGMP', diagnostics)
    report = FreenessReport(
        b1=chi.b1, b2=chi.b2, lmp=local, vgmp=target, exponents_on_restriction=pair.as_tuple(),
        verdict=FREE if local == target else NOT_FREE,
    )
    logger.debug('%s at %s: %s', E, H0, report)
    return report


def candidate_freeness(candidate):
    E = candidate.to_arrangement()
    return E, yoshinaga_freeness(E, candidate.pivot)


def freeness_all_pivots(E):
    """VGMP(E, H) for every H of E; for free E each value equals GMP(E)."""
    return [(H, vgmp(E, H)) for H in E.hyperplanes]


def lmp_deletion_identity(E, H):
    """Returns (LMP(E - H), LMP(E) - |E^H|)."""
    if not E.is_simple:
        raise NotAllowed('The deletion identity holds for simple arrangements')
    lattice = _lattice2(E)
    size = restriction_sizes(lattice)[E.index(H)]
    return lmp(deletion(E, H)), simple_lmp_get(lattice) - size


def _class_lower(m, cls):
    others = [v for j, v in enumerate(m) if j != cls]
    if m[cls] >= 2:
        others.append(m[cls])
    return 1 + max(others, default=0)


def restriction_bounds(m, cls):
    """Interval for |E^H| over a free extension of (B2, m), H a hyperplane over class ``cls``.

    ``m`` is ordered (x, y, x-y, x+y). The upper bound is attained exactly when the
    deletion of H from E is free.
    """
    m = tuple(m)
    if len(m) != 4:
        raise NotAllowed('A B2 multiplicity has four entries (x, y, x-y, x+y)')
    if not multiplicity_is_balanced(m):
        raise NotAllowed(f'{m} is not balanced')
    if not 0 <= cls < 4 or m[cls] == 0:
        raise NotAllowed(f'Class {cls} carries no hyperplane of {m}')
    r = sum(m)
    lower = _class_lower(m, cls)
    if r % 2:
        deleted = tuple(v - 1 if j == cls else v for j, v in enumerate(m))
        if b2_exponents(deleted).delta == 2:
            upper, case = (r + 3) // 2, '1a'
        else:
            upper, case = (r + 1) // 2, '1b'
    elif b2_exponents(m).delta == 2:
        upper, case = r // 2, '2a'
    else:
        upper, case = (r + 2) // 2, '2b'
    return RestrictionBounds(lower, upper, case)
