"""Polynomials over a coefficient field, backed by sympy sparse polynomial rings.

A :class:`Polynomial` wraps a ``PolyElement`` of the ring ``field.domain[variables]``
ordered by graded lex. Coefficients go in and come out as the field's own
elements; the ring only ever sees domain elements.
"""
from functools import lru_cache

from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from utils.exceptions import NotAllowed


def monomials(nvars, degree):
    """Exponent vectors of total degree ``degree`` in lex-descending order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            result.append((first,) + rest)
    return result


def _grlex(exponents):
    return sum(exponents), exponents


@lru_cache(maxsize=None)
def polynomial_ring(field, variables):
    return PolyRing(variables, field.domain, grlex)


class Polynomial:
    __slots__ = ('field', 'variables', 'ring', 'element')

    def __init__(self, field, variables, terms=None):
        self.field = field
        self.variables = tuple(variables)
        self.ring = polynomial_ring(field, self.variables)
        self.element = self.ring.from_dict(
            {tuple(e): field.to_domain(field(c)) for e, c in (terms or {}).items()})

    def _wrap(self, element):
        result = object.__new__(Polynomial)
        result.field = self.field
        result.variables = self.variables
        result.ring = self.ring
        result.element = element
        return result

    def __reduce__(self):
        return Polynomial, (self.field, self.variables, self.terms)

    @classmethod
    def constant(cls, field, variables, value):
        return cls(field, variables, {(0,) * len(variables): field(value)})

    @classmethod
    def variable(cls, field, variables, index):
        zero = cls(field, variables)
        return zero._wrap(zero.ring.gens[index])

    @classmethod
    def monomial(cls, field, variables, exponents, coefficient=1):
        return cls(field, variables, {tuple(exponents): field(coefficient)})

    @classmethod
    def linear_form(cls, field, variables, coefficients):
        n = len(variables)
        return cls(field, variables, {
            tuple(1 if j == i else 0 for j in range(n)): field(c) for i, c in enumerate(coefficients)})

    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise NotAllowed(f'Polynomials live in different rings {self.variables} and {other.variables}')
            if other.field != self.field:
                raise NotAllowed(f'Polynomials have different coefficient fields {self.field!r} and {other.field!r}')
            return other
        return Polynomial.constant(self.field, self.variables, other)

    @property
    def terms(self):
        return {e: self.field.from_domain(c) for e, c in self.element.iterterms()}

    def is_zero(self):
        return not self.element

    def degree(self):
        if not self.element:
            return -1
        return max(sum(e) for e in self.element.itermonoms())

    def is_homogeneous(self):
        return len({sum(e) for e in self.element.itermonoms()}) <= 1

    def leading_term(self):
        if not self.element:
            raise NotAllowed('The zero polynomial has no leading term')
        exponents, c = self.element.LT
        return exponents, self.field.from_domain(c)

    def coefficient(self, exponents):
        return self.field.from_domain(self.element.get(tuple(exponents), self.ring.domain.zero))

    def __add__(self, other):
        return self._wrap(self.element + self._lift(other).element)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.element)

    def __sub__(self, other):
        return self._wrap(self.element - self._lift(other).element)

    def __rsub__(self, other):
        return self._wrap(self._lift(other).element - self.element)

    def __mul__(self, other):
        return self._wrap(self.element * self._lift(other).element)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise NotAllowed('Negative powers of polynomials are not polynomials')
        if n == 0:
            return Polynomial.constant(self.field, self.variables, 1)
        return self._wrap(self.element ** n)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.degree() <= 0:
                return self.coefficient((0,) * len(self.variables)) == other
            return False
        return self.variables == other.variables and self.field == other.field and self.element == other.element

    __hash__ = None

    def exact_div(self, divisor):
        """Quotient of an exact division, or None when ``divisor`` does not divide."""
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('Polynomial division by zero')
        try:
            return self._wrap(self.element.exquo(divisor.element))
        except ExactQuotientFailed:
            return None

    def divisible_by(self, divisor):
        return self.exact_div(divisor) is not None

    def evaluate(self, point):
        if len(point) != len(self.variables):
            raise NotAllowed('One value per variable is required')
        values = [self.field.to_domain(self.field(x)) for x in point]
        return self.field.from_domain(self.element.evaluate(list(zip(self.ring.gens, values))))

    def substitute(self, images):
        """Replaces variable i by ``images[i]``; all images share one target ring."""
        if len(images) != len(self.variables):
            raise NotAllowed('One image per variable is required')
        target = images[0]
        for image in images:
            target._lift(image)
        ring = target.ring
        result = ring.zero
        powers = [{0: ring.one} for _ in images]
        for e, c in self.element.iterterms():
            term = ring.ground_new(c)
            for i, k in enumerate(e):
                if k:
                    if k not in powers[i]:
                        powers[i][k] = images[i].element ** k
                    term = term * powers[i][k]
            result = result + term
        return target._wrap(result)

    def integrate(self, index):
        if self.field.characteristic:
            raise NotAllowed('Integration needs characteristic zero')
        domain = self.ring.domain
        terms = {}
        for e, c in self.element.iterterms():
            k = e[index] + 1
            terms[e[:index] + (k,) + e[index + 1:]] = domain.quo(c, domain(k))
        return self._wrap(self.ring.from_dict(terms))

    def __str__(self):
        terms = self.terms
        if not terms:
            return '0'
        pieces = []
        for e in sorted(terms, key=_grlex, reverse=True):
            mono = '*'.join(v if k == 1 else f'{v}^{k}' for v, k in zip(self.variables, e) if k)
            pieces.append(self._format_term(terms[e], mono))
        return ' + '.join(pieces).replace('+ -', '- ')

    def _format_term(self, c, mono):
        if not mono:
            return self.field.format(c)
        if c == 1:
            return mono
        if self.field.characteristic == 0:
            if c == -1:
                return '-' + mono
            return f'{c}*{mono}'
        text = self.field.format(c)
        return f'({text})*{mono}' if '+' in text else f'{text}*{mono}'

    def __repr__(self):
        return f'Polynomial({self})'
