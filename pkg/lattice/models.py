from dataclasses import dataclass

from exactalg.fields import Rationals
from exactalg.matrices import in_row_space
from exactalg.polynomials import Polynomial


@dataclass(frozen=True)
class Flat:
    """An intersection of hyperplanes, kept as the RREF basis of the forms vanishing on it."""
    basis: tuple
    pivots: tuple
    members: frozenset
    mobius: int = 0

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, coefficients):
        """True when the hyperplane with these coefficients contains the flat."""
        return in_row_space(self.basis, self.pivots, coefficients)

    def free_columns(self, dim):
        return tuple(c for c in range(dim) if c not in self.pivots)

    def restrict_form(self, coefficients):
        """Coordinates of a linear form on the flat, one per free column of the basis."""
        restricted = []
        for f in self.free_columns(len(coefficients)):
            value = coefficients[f]
            for row, p in zip(self.basis, self.pivots):
                value = value - coefficients[p] * row[f]
            restricted.append(value)
        return tuple(restricted)


class IntersectionLattice:
    def __init__(self, arrangement, levels, complete):
        self.arrangement = arrangement
        self.levels = tuple(tuple(level) for level in levels)
        self.complete = complete
        self.pair_flats = {}
        if len(self.levels) > 2:
            for flat in self.levels[2]:
                members = sorted(flat.members)
                for a in range(len(members)):
                    for b in range(a + 1, len(members)):
                        self.pair_flats[(members[a], members[b])] = flat

    @property
    def rank(self):
        return len(self.levels) - 1

    def flats(self, rank):
        if rank >= len(self.levels):
            return ()
        return self.levels[rank]

    def pair_flat(self, i, j):
        return self.pair_flats[(min(i, j), max(i, j))]

    def __iter__(self):
        for level in self.levels:
            yield from level


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of chi(A; t), highest degree first."""
    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def evaluate(self, t):
        value = 0
        for c in self.coefficients:
            value = value * t + c
        return value

    @property
    def b1(self):
        return self._quotient()[1] if self._quotient() else None

    @property
    def b2(self):
        return self._quotient()[2] if self._quotient() else None

    def _quotient(self):
        """(1, b1, b2) with chi = (t - 1)(t^2 - b1*t + b2), for degree-3 chi with root 1."""
        if self.degree != 3 or self.evaluate(1) != 0:
            return None
        _, c1, _, c3 = self.coefficients
        return 1, -c1 - 1, -c3

    def as_polynomial(self):
        field = Rationals()
        return Polynomial(field, ('t',), {(self.degree - i,): field(c) for i, c in enumerate(self.coefficients)})

    def __str__(self):
        return str(self.as_polynomial())
