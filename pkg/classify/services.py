import logging

from arrangement.selectors import b2_multiplicity_get
from arrangement.services import b2_orbit, coxeter_b2, deletion, multiplicity_is_balanced
from derivations.appendix import peak_point_b2_min1
from derivations.services import rank2_exponents_solver
from lattice.services import essentialize
from utils.exceptions import ConsistencyError, NotAllowed
from .models import A2_RULE, B2_PEAK_RULE, SOLVER, UNBALANCED_RULE, ExponentPair

logger = logging.getLogger(__name__)


def unbalanced_exponents(m):
    m = tuple(m)
    total = sum(m)
    top = max(m, default=0)
    if 2 * top < total:
        raise NotAllowed(f'{m} is balanced')
    return ExponentPair(total - top, top, UNBALANCED_RULE)


def a2_exponents(m):
    m = tuple(v for v in m if v)
    if len(m) < 3 or not multiplicity_is_balanced(m):
        return unbalanced_exponents(m)
    total = sum(m)
    return ExponentPair(total // 2, total - total // 2, A2_RULE)


def b2_delta_candidates(m):
    if not multiplicity_is_balanced(m):
        raise NotAllowed(f'{tuple(m)} is not balanced')
    return {1} if sum(m) % 2 else {0, 2}


def solved_exponents(A, solver=None):
    solution = (solver or rank2_exponents_solver)(A)
    return ExponentPair(solution.d1, solution.d2, SOLVER)


def b2_exponents(m, verify=False, solver=None):
    m = tuple(m)
    if len(m) != 4:
        raise NotAllowed('A B2 multiplicity has four entries (x, y, x-y, x+y)')
    total = sum(m)
    if not multiplicity_is_balanced(m):
        pair = unbalanced_exponents(m)
    elif 0 in m:
        pair = a2_exponents(m)
    elif total % 2:
        pair = ExponentPair((total - 1) // 2, (total + 1) // 2, B2_PEAK_RULE)
    elif min(m) == 1:
        gap = 2 if peak_point_b2_min1(m) else 0
        pair = ExponentPair((total - gap) // 2, (total + gap) // 2, B2_PEAK_RULE)
    else:
        pair = solved_exponents(coxeter_b2(m), solver)
    if verify and pair.provenance != SOLVER and total:
        check = solved_exponents(coxeter_b2(m), solver)
        if check.as_tuple() != pair.as_tuple():
            raise ConsistencyError('Closed-form rule and solver disagree', dict(
                multiplicity=m, rule=pair.provenance, rule_exponents=pair.as_tuple(),
                solver_exponents=check.as_tuple(),
            ))
    logger.debug('exp(B2, %s) = %s by %s', m, pair, pair.provenance)
    return pair


def harmonic_pairing(A):
    """Split four lines of the plane into two pairs with cross-ratio -1, if possible."""
    if A.dim != 2 or A.size != 4 or A.field.characteristic == 2:
        return None
    forms = [h.coefficients for h in A.hyperplanes]

    def det(i, j):
        return forms[i][0] * forms[j][1] - forms[i][1] * forms[j][0]

    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        denominator = det(i, l) * det(j, k)
        if denominator != 0 and det(i, k) * det(j, l) == -denominator:
            return (i, j), (k, l)
    return None


def exponents(A, verify=False, solver=None):
    """Exponents of a rank-2 multiarrangement, from closed-form rules where they apply."""
    if A.dim != 2:
        if A.rank() > 2:
            raise NotAllowed('Exponent pairs are defined for rank-2 multiarrangements')
        A = essentialize(A)
    if A.total == 0:
        return ExponentPair(0, 0, UNBALANCED_RULE)
    if A.dim < 2:
        return ExponentPair(0, A.total, UNBALANCED_RULE)
    if A.field.characteristic:
        return solved_exponents(A, solver)
    if A.size <= 2 or not multiplicity_is_balanced(A.mult):
        pair = unbalanced_exponents(A.mult)
    elif A.size == 3:
        pair = a2_exponents(A.mult)
    else:
        pairing = harmonic_pairing(A)
        if pairing is None:
            return solved_exponents(A, solver)
        (i, j), (k, l) = pairing
        return b2_exponents(tuple(A.mult[t] for t in (i, j, k, l)), verify, solver)
    if verify:
        check = solved_exponents(A, solver)
        if check.as_tuple() != pair.as_tuple():
            raise ConsistencyError('Closed-form rule and solver disagree', dict(
                arrangement=repr(A), rule=pair.provenance, rule_exponents=pair.as_tuple(),
                solver_exponents=check.as_tuple(),
            ))
    return pair


def peak_point_b2_mn(m):
    """Peak verdict from the odd-entries criterion, or None when no orbit element fits its hypothesis."""
    m = tuple(m)
    if len(m) != 4 or not multiplicity_is_balanced(m):
        raise NotAllowed(f'{m} is not a balanced B2 multiplicity')
    for m1, m2, m3, m4 in b2_orbit(m):
        gap = abs(m4 - m3)
        if gap <= 1 or (gap == 2 and m1 % 2 and m2 % 2):
            return m4 == m3 and m1 % 2 == 1 and m2 % 2 == 1 and sum(m) % 4 == 0
    return None


def deletion_unbalanced_exponents(A, hyperplane):
    """Exponents of a deletion that tips a balanced B2 multiplicity out of balance, else None."""
    m = b2_multiplicity_get(A)
    if not multiplicity_is_balanced(m):
        raise NotAllowed(f'{m} is not balanced')
    deleted = b2_multiplicity_get(deletion(A, hyperplane))
    if multiplicity_is_balanced(deleted):
        return None
    total = sum(m)
    pair = unbalanced_exponents(deleted)
    if total % 2 == 0 or pair.as_tuple() != ((total - 1) // 2, (total - 1) // 2):
        raise ConsistencyError('Unbalanced deletion of a balanced multiplicity has unexpected exponents',
                               dict(multiplicity=m, deleted=deleted, exponents=pair.as_tuple()))
    return pair


def peak_report(m):
    """Exponents of a balanced B2 multiplicity with every applicable peak verdict, checked against the solver."""
    m = tuple(m)
    if len(m) != 4 or not multiplicity_is_balanced(m):
        raise NotAllowed(f'{m} is not a balanced B2 multiplicity')
    pair = b2_exponents(m)
    measured = solved_exponents(coxeter_b2(m)).delta == 2
    rules = dict(min1=peak_point_b2_min1(m) if min(m) == 1 else None, mn=peak_point_b2_mn(m))
    for rule, verdict in rules.items():
        if verdict is not None and verdict != measured:
            raise ConsistencyError('Peak rule and solver disagree', dict(
                multiplicity=m, rule=rule, verdict=verdict, solver=measured))
    return dict(multiplicity=list(m), exponents=list(pair.as_tuple()), peak=measured, rules=rules)
