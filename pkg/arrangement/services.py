import itertools
import logging

from exactalg.fields import Rationals
from exactalg.polynomials import Polynomial
from utils.exceptions import NotAllowed, NotFound
from .models import Hyperplane, Multiarrangement

logger = logging.getLogger(__name__)

# Class order of B2 multiplicity tuples: x, y, x-y, x+y.
B2_FORMS = ((1, 0), (0, 1), (1, -1), (1, 1))
A2_FORMS = ((1, 0), (0, 1), (1, -1))
# B3 order a..i: x, y, x-y, x+y, z, x-z, x+z, y-z, y+z.
B3_FORMS = (
    (1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 1, 0),
    (0, 0, 1), (1, 0, -1), (1, 0, 1), (0, 1, -1), (0, 1, 1),
)

# The dihedral group acting on B2 multiplicities, generated by
# (m1,m2,m4,m3), (m2,m1,m3,m4) and (m3,m4,m1,m2).
B2_GENERATORS = ((0, 1, 3, 2), (1, 0, 2, 3), (2, 3, 0, 1))


def defining_polynomial(A):
    q = Polynomial.constant(A.field, A.variables, 1)
    for hyperplane, m in A:
        q = q * hyperplane.linear_form(A.variables) ** m
    return q


def deletion(A, hyperplane):
    if hyperplane not in A:
        raise NotFound(f'{hyperplane} is not a hyperplane of the arrangement')
    return Multiarrangement(A.field, A.dim, [(h, m - 1 if h == hyperplane else m) for h, m in A])


def addition(A, hyperplane):
    if hyperplane.dim != A.dim:
        raise NotAllowed(f'{hyperplane} does not live in dimension {A.dim}')
    return Multiarrangement(A.field, A.dim, list(A) + [(hyperplane, 1)])


def multiplicity_is_balanced(m):
    total = sum(m)
    return all(2 * v < total for v in m)


def is_balanced(A):
    return multiplicity_is_balanced(A.mult)


def b2_orbit(m):
    m = _b2_tuple(m)
    orbit = [m]
    for element in orbit:
        for g in B2_GENERATORS:
            image = tuple(element[i] for i in g)
            if image not in orbit:
                orbit.append(image)
    return orbit


def b2_canonical_permutation(m):
    candidates = [p for p in b2_orbit(m) if p[1] - p[0] >= p[3] - p[2] >= 0]
    return min(candidates)


def _b2_tuple(m):
    m = tuple(m)
    if len(m) != 4:
        raise NotAllowed('A B2 multiplicity has four entries (x, y, x-y, x+y)')
    return m


def coxeter_arrangement(forms, mult=None, field=None):
    field = field or Rationals()
    mult = tuple(mult) if mult is not None else (1,) * len(forms)
    if len(mult) != len(forms):
        raise NotAllowed(f'Expected {len(forms)} multiplicities, got {len(mult)}')
    return Multiarrangement(field, len(forms[0]), [(Hyperplane(field, f), m) for f, m in zip(forms, mult)])


def coxeter_a2(mult=None, field=None):
    return coxeter_arrangement(A2_FORMS, mult, field)


def coxeter_b2(mult=None, field=None):
    return coxeter_arrangement(B2_FORMS, _b2_tuple(mult) if mult is not None else None, field)


def coxeter_b3(mult=None, field=None):
    return coxeter_arrangement(B3_FORMS, mult, field)


def b3_n_k(k, e=1, f=1, g=1, h=1, i=1, field=None):
    """The B3 multiplicity with (2, k, 1, k) on the x,y-plane and e..i on the planes through z."""
    return coxeter_b3((2, k, 1, k, e, f, g, h, i), field)


def coxeter_bn_forms(n):
    forms = []
    for i in range(n):
        forms.append(tuple(1 if t == i else 0 for t in range(n)))
    for i, j in itertools.combinations(range(n), 2):
        for sign in (-1, 1):
            forms.append(tuple(1 if t == i else sign if t == j else 0 for t in range(n)))
    return forms


def coxeter_bn(n, mult=None, field=None):
    """B_n with multiplicities given as a map from linear form to multiplicity (default 1)."""
    if n < 2:
        raise NotAllowed('B_n needs n >= 2')
    field = field or Rationals()
    mult = {Hyperplane(field, f): m for f, m in (mult or {}).items()}
    hyperplanes = [Hyperplane(field, f) for f in coxeter_bn_forms(n)]
    return Multiarrangement(field, n, [(h, mult.get(h, 1)) for h in hyperplanes])


def boolean(dim, field=None):
    return coxeter_arrangement([tuple(1 if t == i else 0 for t in range(dim)) for i in range(dim)], field=field)
