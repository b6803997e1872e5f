from dataclasses import dataclass, field

from exactalg.polynomials import Polynomial
from utils.exceptions import NotAllowed


class Derivation:
    """theta = sum of components[i] * d/dx_i, homogeneous."""

    def __init__(self, components):
        self.components = tuple(components)
        if not self.components:
            raise NotAllowed('A derivation needs at least one component')
        rings = {c.variables for c in self.components}
        if len(rings) != 1 or len(self.components) != len(self.components[0].variables):
            raise NotAllowed('Derivation components must share a ring with one variable per component')
        degrees = {c.degree() for c in self.components if not c.is_zero()}
        if len(degrees) > 1 or not all(c.is_homogeneous() for c in self.components):
            raise NotAllowed('Derivations are homogeneous')
        self.degree = degrees.pop() if degrees else None

    @classmethod
    def from_vector(cls, field, variables, monomials, vector):
        size = len(monomials)
        return cls(
            Polynomial(field, variables, {e: vector[i * size + s] for s, e in enumerate(monomials)})
            for i in range(len(variables))
        )

    @property
    def field(self):
        return self.components[0].field

    @property
    def variables(self):
        return self.components[0].variables

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def apply(self, coefficients):
        result = Polynomial(self.field, self.variables)
        for c, f in zip(coefficients, self.components):
            if c != 0:
                result = result + f * c
        return result

    def is_member(self, A):
        for hyperplane, m in A:
            image = self.apply(hyperplane.coefficients)
            if not image.divisible_by(hyperplane.linear_form(self.variables) ** m):
                return False
        return True

    def vector(self, monomials):
        return tuple(c.coefficient(e) for c in self.components for e in monomials)

    def __mul__(self, polynomial):
        return Derivation(c * polynomial for c in self.components)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.components == other.components

    __hash__ = None

    def __str__(self):
        return ' + '.join(f'({c})*D{v}' for c, v in zip(self.components, self.variables) if not c.is_zero()) or '0'

    def __repr__(self):
        return f'Derivation({self})'


@dataclass
class DegreeDimensionTable:
    dims: dict = field(default_factory=dict)

    @staticmethod
    def predicted(d, d1, d2):
        return max(0, d - d1 + 1) + max(0, d - d2 + 1)

    def mismatches(self, d1, d2):
        return {d: (dim, self.predicted(d, d1, d2)) for d, dim in self.dims.items()
                if dim != self.predicted(d, d1, d2)}


@dataclass
class Rank2Solution:
    d1: int
    d2: int
    table: DegreeDimensionTable
    basis: tuple

    @property
    def exponents(self):
        return self.d1, self.d2
