import logging

from arrangement.models import Hyperplane, Multiarrangement
from exactalg.matrices import in_row_space, row_reduce
from utils.exceptions import NotAllowed, NotFound
from utils.timing import timed
from .models import CharPoly, Flat, IntersectionLattice

logger = logging.getLogger(__name__)

MAX_LATTICE_RANK = 3


@timed
def intersection_lattice(A, max_rank=None):
    """Flats of A rank by rank, each keyed by its RREF basis, with Moebius values.

    Without ``max_rank`` the whole lattice is built and A must have rank at most 3;
    with it only the flats up to that rank are built, for arrangements of any rank.
    """
    rank = A.rank()
    if max_rank is None:
        if rank > MAX_LATTICE_RANK:
            raise NotAllowed(f'Intersection lattices are built up to rank {MAX_LATTICE_RANK}, '
                             f'the arrangement has rank {rank}')
        top = rank
    else:
        if max_rank > MAX_LATTICE_RANK:
            raise NotAllowed(f'Flats are built up to rank {MAX_LATTICE_RANK}')
        top = min(max_rank, rank)
    forms = [h.coefficients for h in A.hyperplanes]
    levels = [[Flat(basis=(), pivots=(), members=frozenset(), mobius=1)]]
    for r in range(1, top + 1):
        found = {}
        for lower in levels[-1]:
            for k, form in enumerate(forms):
                if k in lower.members:
                    continue
                basis, pivots = row_reduce(A.field, lower.basis + (form,))
                basis = tuple(basis)
                if basis in found:
                    continue
                members = frozenset(j for j, f in enumerate(forms) if in_row_space(basis, pivots, f))
                found[basis] = (pivots, members)
        below = [flat for level in levels for flat in level]
        level = []
        for basis, (pivots, members) in sorted(found.items(), key=lambda item: sorted(item[1][1])):
            mobius = -sum(flat.mobius for flat in below if flat.members <= members)
            level.append(Flat(basis=basis, pivots=pivots, members=members, mobius=mobius))
        levels.append(level)
        logger.debug('rank %d: %d flats', r, len(level))
    return IntersectionLattice(A, levels, complete=top == rank)


def characteristic_polynomial(A_or_lattice):
    lattice = _lattice(A_or_lattice)
    if not lattice.complete:
        raise NotAllowed('The characteristic polynomial needs the complete lattice')
    dim = lattice.arrangement.dim
    coefficients = [0] * (dim + 1)
    for flat in lattice:
        coefficients[flat.rank] += flat.mobius
    return CharPoly(tuple(coefficients))


def _lattice(A_or_lattice):
    if isinstance(A_or_lattice, IntersectionLattice):
        return A_or_lattice
    return intersection_lattice(A_or_lattice)


def flat_span(A, hyperplanes):
    """The flat cut out by the given hyperplanes of A."""
    indices = [A.index(h) for h in hyperplanes]
    basis, pivots = row_reduce(A.field, [A.hyperplanes[i].coefficients for i in indices], A.dim)
    members = frozenset(j for j, h in enumerate(A.hyperplanes) if in_row_space(basis, pivots, h.coefficients))
    return Flat(basis=tuple(basis), pivots=pivots, members=members)


def _check_flat(A, X):
    members = frozenset(j for j, h in enumerate(A.hyperplanes) if X.contains(h.coefficients))
    if members != X.members:
        raise NotFound('The flat does not belong to this arrangement')
    if X.rank and row_reduce(A.field, [A.hyperplanes[j].coefficients for j in members])[0] != list(X.basis):
        raise NotFound('The flat is not an intersection of hyperplanes of the arrangement')


def localization(A, X):
    _check_flat(A, X)
    return Multiarrangement(A.field, A.dim, [(A.hyperplanes[j], A.mult[j]) for j in sorted(X.members)])


def restriction(A, X):
    if not A.is_simple:
        raise NotAllowed('Restrictions are taken of simple arrangements')
    _check_flat(A, X)
    restricted = set()
    for j, h in enumerate(A.hyperplanes):
        if j in X.members:
            continue
        restricted.add(Hyperplane(A.field, X.restrict_form(h.coefficients)))
    return Multiarrangement(A.field, A.dim - X.rank, [(h, 1) for h in restricted])


def essentialize(A):
    """A rewritten in coordinates of its row space, so that its dimension equals its rank."""
    if not A.hyperplanes:
        return Multiarrangement(A.field, 0)
    basis, pivots = row_reduce(A.field, [h.coefficients for h in A.hyperplanes])
    return Multiarrangement(A.field, len(pivots), [
        (Hyperplane(A.field, tuple(h.coefficients[p] for p in pivots)), m) for h, m in A
    ])
