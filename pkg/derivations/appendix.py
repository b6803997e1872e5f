"""Explicit generators for A2 multiarrangements and the integral test for B2 peak points."""
from fractions import Fraction

from arrangement.services import b2_orbit, coxeter_a2, multiplicity_is_balanced
from exactalg.fields import Rationals
from exactalg.polynomials import Polynomial
from utils.exceptions import ConsistencyError, NotAllowed
from .models import Derivation
from .services import saito_check

PLANE = ('x', 'y')
WITH_T = ('x', 'y', 't')


def theta_abc(a, b, c):
    """Integrate t^c (t-x)^b (t-y)^a in t from 0, then evaluate at t=x and t=y."""
    if min(a, b, c) < 0:
        raise NotAllowed('theta_abc takes nonnegative integers')
    field = Rationals()
    x, y, t = (Polynomial.variable(field, WITH_T, i) for i in range(3))
    antiderivative = (t ** c * (t - x) ** b * (t - y) ** a).integrate(2)
    X, Y = (Polynomial.variable(field, PLANE, i) for i in range(2))
    return Derivation((antiderivative.substitute([X, Y, X]), antiderivative.substitute([X, Y, Y])))


def fwy_parameters(p, q, r):
    if (p + q + r) % 2:
        return (-p + q + r - 1) // 2, (p - q + r - 1) // 2, (p + q - r - 1) // 2
    return (-p + q + r) // 2, (p - q + r - 2) // 2, (p + q - r - 2) // 2


def fwy_generators(p, q, r):
    """Basis of D(A2, (p, q, r)) for Q = x^p y^q (x-y)^r, balanced (p, q, r)."""
    if not multiplicity_is_balanced((p, q, r)):
        raise NotAllowed(f'({p}, {q}, {r}) is not balanced')
    a, b, c = fwy_parameters(p, q, r)
    if (p + q + r) % 2:
        generators = [theta_abc(a, b, c), theta_abc(a, b, c + 1)]
    else:
        x, y = (Polynomial.variable(Rationals(), PLANE, i) for i in range(2))
        generators = [theta_abc(a, b, c) * x, theta_abc(a - 1, b + 1, c) * y]
    A = coxeter_a2((p, q, r))
    for theta in generators:
        if not theta.is_member(A):
            raise ConsistencyError(f'{theta} is not in D(A2, ({p}, {q}, {r}))')
    if not saito_check(generators, A):
        raise ConsistencyError(f'Generators of D(A2, ({p}, {q}, {r})) fail the Saito criterion')
    return tuple(generators)


def _expand(a, b, c):
    """Coefficients, lowest degree first, of t^c (t-1)^b (t+1)^a."""
    coefficients = [Fraction(0)] * c + [Fraction(1)]
    for root, power in ((1, b), (-1, a)):
        for _ in range(power):
            shifted = [Fraction(0)] + coefficients
            coefficients = [s - root * v for s, v in zip(shifted, coefficients + [Fraction(0)])]
    return coefficients


def integral_I(a, b, c):
    if min(a, b, c) < 0:
        raise NotAllowed('integral_I takes nonnegative integers')
    coefficients = _expand(a, b, c)

    def antiderivative(s):
        return sum(v * Fraction(s) ** (k + 1) / (k + 1) for k, v in enumerate(coefficients))

    return antiderivative(1) + antiderivative(-1)


def peak_point_b2_min1(m):
    m = tuple(m)
    if len(m) != 4 or not multiplicity_is_balanced(m):
        raise NotAllowed(f'{m} is not a balanced B2 multiplicity')
    if min(m) != 1:
        raise NotAllowed(f'{m} has minimum {min(m)}, not 1')
    m1, m2, m3, _ = next(p for p in b2_orbit(m) if p[3] == 1)
    total = sum(m)
    verdict = m1 == m2 and m3 % 2 == 1 and total % 4 == 0
    if total % 2 == 0:
        a, b, c = (-m1 + m2 + m3 - 1) // 2, (m1 - m2 + m3 - 1) // 2, (m1 + m2 - m3 - 1) // 2
        if (integral_I(a, b, c) == 0) != verdict:
            raise ConsistencyError('Peak rule and integral test disagree',
                                   dict(multiplicity=m, placed=(m1, m2, m3, 1), abc=(a, b, c)))
    return verdict
