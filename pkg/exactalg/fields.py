"""Coefficient fields: the rationals and GF(p^e) for e <= 2.

Each field exposes a sympy ground domain (``QQ``, ``GF(p)``, or
:class:`QuadraticExtension` for GF(p^2)) through ``field.domain``, with
``to_domain`` / ``from_domain`` converting between the field's own elements and
the domain's. Polynomials and matrices compute in that domain.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import GF, QQ, Integer, Poly, Symbol, isprime
from sympy.polys.domains.field import Field
from sympy.polys.domains.simpledomain import SimpleDomain
from sympy.polys.polyerrors import CoercionFailed

from utils.exceptions import NotAllowed

logger = logging.getLogger(__name__)

T = Symbol('t')


def is_irreducible_quadratic(p, modulus):
    c0, c1 = modulus
    return Poly([1, c1, c0], T, modulus=p).is_irreducible


def default_modulus(p):
    for c1 in range(p):
        for c0 in range(1, p):
            if is_irreducible_quadratic(p, (c0, c1)):
                return c0, c1
    raise NotAllowed(f'No irreducible quadratic over GF({p})')


def format_modulus(modulus):
    c0, c1 = modulus
    text = 't^2'
    if c1:
        text += '+t' if c1 == 1 else f'+{c1}*t'
    if c0:
        text += f'+{c0}'
    return text


@dataclass(frozen=True)
class FieldSpec:
    kind: str = 'rationals'
    p: int = 0
    e: int = 1
    modulus: tuple = ()

    @classmethod
    def rationals(cls):
        return cls()

    @classmethod
    def finite(cls, p, e=1, modulus=()):
        return cls('finite', p, e, tuple(modulus or ()))

    @classmethod
    def parse(cls, text):
        """Accepts ``Q``, ``gf 3``, ``gf 3 2``, ``gf 3 2 t^2+1`` and the colon form ``gf:3:2``."""
        tokens = text.replace(':', ' ').split()
        if not tokens:
            raise NotAllowed('Empty field description')
        if tokens[0].lower() in ('q', 'rationals', 'qq'):
            if len(tokens) > 1:
                raise NotAllowed(f"Unexpected tokens after '{tokens[0]}'")
            return cls.rationals()
        if tokens[0].lower() != 'gf' or len(tokens) not in (2, 3, 4):
            raise NotAllowed(f"Unknown field '{text.strip()}'")
        try:
            p = int(tokens[1])
            e = int(tokens[2]) if len(tokens) > 2 else 1
        except ValueError:
            raise NotAllowed(f"Unknown field '{text.strip()}'")
        modulus = parse_modulus(tokens[3], p) if len(tokens) == 4 else ()
        return cls.finite(p, e, modulus)

    def describe(self):
        if self.kind == 'rationals':
            return 'Q'
        text = f'gf {self.p} {self.e}'
        if self.modulus:
            text += f' {format_modulus(self.modulus)}'
        return text


def parse_modulus(text, p):
    text = text.replace(' ', '')
    if not text.startswith('t^2'):
        raise NotAllowed(f"Modulus '{text}' must be a monic quadratic in t")
    rest = text[3:]
    c0, c1 = _parse_terms(rest, p) if rest else (0, 0)
    return c0 % p, c1 % p


def _parse_terms(text, p):
    """Parses ``a+b*t`` (or ``a+b*w``) into the integer pair (a, b)."""
    text = text.replace(' ', '').replace('w', 't').replace('-', '+-')
    constant, linear = 0, 0
    for term in text.split('+'):
        if not term:
            continue
        if 't' in term:
            head = term.replace('*t', '').replace('t', '')
            if head in ('', '+'):
                coefficient = 1
            elif head == '-':
                coefficient = -1
            else:
                coefficient = _integer_mod(head, p)
            linear += coefficient
        else:
            constant += _integer_mod(term, p)
    return constant, linear


def _integer_mod(text, p):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise NotAllowed(f"'{text}' is not a field element")
    if value.denominator % p == 0:
        raise NotAllowed(f"'{text}' has a denominator divisible by {p}")
    return value.numerator * pow(value.denominator, -1, p) % p


class Rationals:
    characteristic = 0
    is_finite = False
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self):
        self.spec = FieldSpec.rationals()

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise NotAllowed(f'{value!r} is not a rational number')

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash('Q')

    def __repr__(self):
        return 'Q'

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise NotAllowed(f"'{text}' is not a rational number")

    @property
    def domain(self):
        return QQ

    def to_domain(self, a):
        return QQ(a.numerator, a.denominator)

    def from_domain(self, v):
        return Fraction(int(v.numerator), int(v.denominator))

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def elements(self):
        raise NotAllowed('The rationals cannot be enumerated')


class GFElement:
    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise NotAllowed('Elements belong to different fields')
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return GFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError('Division by zero in ' + repr(self.field))
        return self ** (self.field.order - 2)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.field.format(self)


class FiniteField:
    is_finite = True

    def __init__(self, p, e=1, modulus=None):
        if not isprime(p):
            raise NotAllowed(f'{p} is not a prime')
        if e not in (1, 2):
            raise NotAllowed('Only extension degrees 1 and 2 are supported')
        if e == 2:
            modulus = tuple(c % p for c in modulus) if modulus else default_modulus(p)
            if len(modulus) != 2:
                raise NotAllowed('A degree-2 modulus has two lower coefficients')
            if not is_irreducible_quadratic(p, modulus):
                raise NotAllowed(f'{format_modulus(modulus)} is reducible over GF({p})')
        else:
            modulus = ()
        self.p = p
        self.e = e
        self.modulus = modulus
        self.characteristic = p
        self.order = p ** e
        self.spec = FieldSpec.finite(p, e, modulus)
        self.zero = GFElement(self, (0,) * e)
        self.one = GFElement(self, (1,) + (0,) * (e - 1))
        logger.debug('Constructed %r', self)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        if self.e == 1:
            return f'GF({self.p})'
        return f'GF({self.p}^2) mod {format_modulus(self.modulus)}'

    def __call__(self, value):
        if isinstance(value, GFElement):
            if value.field != self:
                raise NotAllowed('Elements belong to different fields')
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self(value.numerator) / self(value.denominator)
        if isinstance(value, int):
            return GFElement(self, (value % self.p,) + (0,) * (self.e - 1))
        raise NotAllowed(f'{value!r} is not an element of {self!r}')

    @property
    def domain(self):
        return ground_domain(self)

    def to_domain(self, a):
        if self.e == 2:
            return a
        return self.domain(a.coeffs[0])

    def from_domain(self, v):
        if self.e == 2:
            return v
        return GFElement(self, (int(v) % self.p,))

    @property
    def generator(self):
        if self.e == 1:
            raise NotAllowed('Prime fields have no adjoined root')
        return GFElement(self, (0, 1))

    def multiply(self, a, b):
        p = self.p
        if self.e == 1:
            return GFElement(self, ((a.coeffs[0] * b.coeffs[0]) % p,))
        a0, a1 = a.coeffs
        b0, b1 = b.coeffs
        c0, c1 = self.modulus
        # t^2 = -c1*t - c0
        return GFElement(self, (
            (a0 * b0 - a1 * b1 * c0) % p,
            (a0 * b1 + a1 * b0 - a1 * b1 * c1) % p,
        ))

    def parse(self, text):
        constant, linear = _parse_terms(text, self.p)
        if linear and self.e == 1:
            raise NotAllowed(f"'{text}' uses t in the prime field GF({self.p})")
        if self.e == 1:
            return GFElement(self, (constant % self.p,))
        return GFElement(self, (constant % self.p, linear % self.p))

    def format(self, a):
        if self.e == 1:
            return str(a.coeffs[0])
        a0, a1 = a.coeffs
        if not a1:
            return str(a0)
        linear = 't' if a1 == 1 else f'{a1}*t'
        return linear if not a0 else f'{a0}+{linear}'

    def sort_key(self, a):
        return tuple(reversed(a.coeffs))

    def elements(self):
        if self.e == 1:
            return [GFElement(self, (a,)) for a in range(self.p)]
        return [GFElement(self, (a, b)) for b in range(self.p) for a in range(self.p)]


class QuadraticExtension(Field, SimpleDomain):
    """GF(p^2) as a sympy domain whose elements are :class:`GFElement` values."""

    dtype = GFElement
    is_Numerical = True
    has_assoc_Ring = False
    has_assoc_Field = True

    def __init__(self, field):
        self.field = field
        self.zero = field.zero
        self.one = field.one
        self.rep = repr(field)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and self.field == other.field

    def __hash__(self):
        return hash(('QuadraticExtension', self.field))

    def new(self, *args):
        return self.field(*args)

    def characteristic(self):
        return self.field.p

    def get_field(self):
        return self

    def is_positive(self, a):
        return bool(a)

    def is_negative(self, a):
        return False

    def is_nonnegative(self, a):
        return True

    def is_nonpositive(self, a):
        return not a

    def to_sympy(self, a):
        a0, a1 = a.coeffs
        return Integer(a0) + Integer(a1) * T

    def from_sympy(self, a):
        if a.is_Integer:
            return self.field(int(a))
        raise CoercionFailed(f'{a} is not an element of {self.rep}')

    def from_ZZ(self, a, K0):
        return self.field(int(a))

    from_ZZ_python = from_ZZ_gmpy = from_ZZ

    def from_QQ(self, a, K0):
        return self.field(Fraction(int(a.numerator), int(a.denominator)))

    from_QQ_python = from_QQ_gmpy = from_QQ


@lru_cache(maxsize=None)
def ground_domain(field):
    if field.e == 1:
        return GF(field.p)
    return QuadraticExtension(field)


def field_make(spec):
    if spec.kind == 'rationals':
        return Rationals()
    if spec.kind == 'finite':
        return FiniteField(spec.p, spec.e, spec.modulus or None)
    raise NotAllowed(f"Unknown field kind '{spec.kind}'")
