from utils.exceptions import NotAllowed
from .models import Hyperplane
from .services import A2_FORMS, B2_FORMS


def b2_multiplicity_get(A):
    """The (x, y, x-y, x+y) multiplicity tuple of a B2-shaped arrangement in the plane."""
    return _classes_get(A, B2_FORMS)


def a2_multiplicity_get(A):
    return _classes_get(A, A2_FORMS)


def _classes_get(A, forms):
    if A.dim != 2:
        raise NotAllowed('Coxeter class multiplicities are read in the plane')
    hyperplanes = [Hyperplane(A.field, f) for f in forms]
    if any(h not in hyperplanes for h in A.hyperplanes):
        raise NotAllowed(f'{A} is not supported on {len(forms)} Coxeter lines')
    return tuple(A.multiplicity(h) for h in hyperplanes)


def hyperplanes_describe(A):
    return [dict(form=str(h), coefficients=[A.field.format(c) for c in h.coefficients], m=m) for h, m in A]
