from exactalg.fields import Rationals
from exactalg.matrices import Matrix
from exactalg.polynomials import Polynomial
from utils.exceptions import NotAllowed, NotFound


def variable_names(dim):
    if dim <= 3:
        return ('x', 'y', 'z')[:dim]
    return tuple(f'x{i}' for i in range(1, dim + 1))


class Hyperplane:
    """Kernel of a linear form, stored with its first nonzero coefficient scaled to 1."""
    __slots__ = ('field', 'coefficients')

    def __init__(self, field, coefficients):
        coefficients = tuple(field(c) for c in coefficients)
        lead = next((c for c in coefficients if c != 0), None)
        if lead is None:
            raise NotAllowed('A hyperplane needs a nonzero linear form')
        inverse = field.one / lead
        self.field = field
        self.coefficients = tuple(c * inverse for c in coefficients)

    @property
    def dim(self):
        return len(self.coefficients)

    @property
    def pivot(self):
        return next(i for i, c in enumerate(self.coefficients) if c != 0)

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.coefficients)

    def linear_form(self, variables=None):
        return Polynomial.linear_form(self.field, variables or variable_names(self.dim), self.coefficients)

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        return str(self.linear_form())

    def __repr__(self):
        return f'Hyperplane({self})'


class Multiarrangement:
    def __init__(self, field, dim, multiplicities=()):
        merged = {}
        for hyperplane, m in multiplicities:
            if hyperplane.dim != dim:
                raise NotAllowed(f'{hyperplane} does not live in dimension {dim}')
            if not isinstance(m, int) or m < 0:
                raise NotAllowed(f'Multiplicity of {hyperplane} must be a nonnegative integer')
            merged[hyperplane] = merged.get(hyperplane, 0) + m
        kept = sorted((h for h, m in merged.items() if m > 0), key=lambda h: h.sort_key())
        self.field = field
        self.dim = dim
        self.hyperplanes = tuple(kept)
        self.mult = tuple(merged[h] for h in kept)
        self._index = {h: i for i, h in enumerate(kept)}

    @classmethod
    def from_forms(cls, forms, mult=None, field=None, dim=None):
        field = field or Rationals()
        forms = list(forms)
        mult = list(mult) if mult is not None else [1] * len(forms)
        if len(mult) != len(forms):
            raise NotAllowed('One multiplicity per linear form is required')
        if dim is None:
            if not forms:
                raise NotAllowed('The dimension of an empty arrangement must be given')
            dim = len(forms[0])
        return cls(field, dim, [(Hyperplane(field, f), m) for f, m in zip(forms, mult)])

    @property
    def variables(self):
        return variable_names(self.dim)

    @property
    def size(self):
        return len(self.hyperplanes)

    @property
    def total(self):
        return sum(self.mult)

    @property
    def is_simple(self):
        return all(m == 1 for m in self.mult)

    def multiplicity(self, hyperplane):
        index = self._index.get(hyperplane)
        return 0 if index is None else self.mult[index]

    def index(self, hyperplane):
        if hyperplane not in self._index:
            raise NotFound(f'{hyperplane} is not a hyperplane of the arrangement')
        return self._index[hyperplane]

    def rank(self):
        if not self.hyperplanes:
            return 0
        return Matrix(self.field, [h.coefficients for h in self.hyperplanes]).rank()

    def simple(self):
        return Multiarrangement(self.field, self.dim, [(h, 1) for h in self.hyperplanes])

    def with_multiplicities(self, mult):
        return Multiarrangement(self.field, self.dim, list(zip(self.hyperplanes, mult)))

    def hyperplane(self, coefficients):
        return Hyperplane(self.field, coefficients)

    def __contains__(self, hyperplane):
        return hyperplane in self._index

    def __iter__(self):
        return iter(zip(self.hyperplanes, self.mult))

    def __len__(self):
        return len(self.hyperplanes)

    def __eq__(self, other):
        return (isinstance(other, Multiarrangement) and self.field == other.field and self.dim == other.dim
                and self.hyperplanes == other.hyperplanes and self.mult == other.mult)

    __hash__ = None

    def __repr__(self):
        body = ', '.join(f'{h}^{m}' if m > 1 else str(h) for h, m in self)
        return f'Multiarrangement({body})'
