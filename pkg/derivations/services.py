import logging

from arrangement.services import defining_polynomial
from exactalg.matrices import Matrix, polynomial_determinant
from exactalg.polynomials import Polynomial, monomials
from utils.exceptions import ConsistencyError, NotAllowed
from utils.timing import timed
from .models import DegreeDimensionTable, Derivation, Rank2Solution

logger = logging.getLogger(__name__)


def condition_matrix(A, d):
    """Linear conditions on the coefficients of degree-d derivations for membership in D(A, m).

    Unknowns are the coefficients of every degree-d monomial in every component. For
    each hyperplane with pivot coordinate k, theta(alpha) is rewritten with
    x_k = u - sum(a_j x_j), making alpha the coordinate u; the coefficients of all
    monomials with u-degree below m(H) must vanish.
    """
    field, n, variables = A.field, A.dim, A.variables
    monos = monomials(n, d)
    size = len(monos)
    entries = {}
    row_index = {}
    for hyperplane, m in A:
        coefficients = hyperplane.coefficients
        k = hyperplane.pivot
        u = Polynomial.variable(field, variables, k)
        images = []
        for j in range(n):
            image = Polynomial.variable(field, variables, j)
            if j == k:
                image = u
                for i in range(n):
                    if i != k and coefficients[i] != 0:
                        image = image - Polynomial.variable(field, variables, i) * coefficients[i]
            images.append(image)
        substituted = [Polynomial.monomial(field, variables, e).substitute(images) for e in monos]
        for i, a in enumerate(coefficients):
            if a == 0:
                continue
            for s, image in enumerate(substituted):
                for mono, c in image.terms.items():
                    if mono[k] >= m:
                        continue
                    r = row_index.setdefault((hyperplane, mono), len(row_index))
                    key = (r, i * size + s)
                    entries[key] = entries.get(key, field.zero) + a * c
    rows = [[field.zero] * (n * size) for _ in range(len(row_index))]
    for (r, c), value in entries.items():
        rows[r][c] = value
    return Matrix(field, rows, n * size), monos


def degree_piece_basis(A, d):
    if d < 0:
        return []
    matrix, monos = condition_matrix(A, d)
    return [Derivation.from_vector(A.field, A.variables, monos, v) for v in matrix.kernel_basis()]


def derivation_space_dim(A, d):
    if d < 0:
        return 0
    matrix, _ = condition_matrix(A, d)
    dim = matrix.shape[1] - matrix.rank()
    logger.debug('dim D(A,m)_%d = %d', d, dim)
    return dim


@timed
def rank2_exponents_solver(A):
    """Exponents of a multiarrangement in the plane, read off the degree-dimension table."""
    if A.dim != 2:
        raise NotAllowed('The rank-2 solver works in two variables; essentialize first')
    total = A.total
    if total < 1:
        raise NotAllowed('The rank-2 solver needs |m| >= 1')
    table = DegreeDimensionTable({d: derivation_space_dim(A, d) for d in range(total + 1)})
    d1 = next((d for d, dim in table.dims.items() if dim > 0), None)
    if d1 is None or 2 * d1 > total:
        raise ConsistencyError('No generator found below |m|/2', dict(arrangement=repr(A), dims=table.dims))
    d2 = total - d1
    mismatches = table.mismatches(d1, d2)
    if mismatches:
        raise ConsistencyError('Degree dimensions do not match a free module',
                               dict(arrangement=repr(A), exponents=(d1, d2), mismatches=mismatches))
    basis = _generators(A, d1, d2)
    if not saito_check(basis, A):
        raise ConsistencyError('Extracted generators fail the Saito criterion',
                               dict(arrangement=repr(A), basis=[str(t) for t in basis]))
    return Rank2Solution(d1, d2, table, tuple(basis))


def _generators(A, d1, d2):
    low = degree_piece_basis(A, d1)
    if d1 == d2:
        return low[:2]
    first = low[0]
    high = degree_piece_basis(A, d2)
    monos = monomials(A.dim, d2)
    multiples = [
        (first * Polynomial.monomial(A.field, A.variables, e)).vector(monos)
        for e in monomials(A.dim, d2 - d1)
    ]
    base_rank = Matrix(A.field, multiples).rank()
    for theta in high:
        if Matrix(A.field, multiples + [theta.vector(monos)]).rank() > base_rank:
            return [first, theta]
    raise ConsistencyError('No second generator outside the multiples of the first', dict(arrangement=repr(A)))


def saito_check(thetas, A):
    """True iff the coefficient determinant of ``thetas`` is a nonzero multiple of Q(A, m)."""
    thetas = list(thetas)
    if len(thetas) != A.dim:
        raise NotAllowed(f'The Saito criterion needs {A.dim} derivations, got {len(thetas)}')
    for theta in thetas:
        if theta.variables != A.variables:
            raise NotAllowed('Derivations and arrangement live in different rings')
        if not theta.is_member(A):
            raise NotAllowed(f'{theta} does not lie in D(A,m)')
    determinant = polynomial_determinant([list(theta.components) for theta in thetas])
    if determinant.is_zero():
        return False
    q = defining_polynomial(A)
    e, c = determinant.leading_term()
    e_q, c_q = q.leading_term()
    if e != e_q:
        return False
    return determinant == q * (c / c_q)
