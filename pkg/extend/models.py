from dataclasses import dataclass, field
from fractions import Fraction

from arrangement.models import Hyperplane, Multiarrangement
from utils.exceptions import NotAllowed

FREE = 'free'
NOT_FREE = 'not-free'


class ExtensionCandidate:
    """A base multiarrangement with one offset set per line; offset t gives ker(alpha - t*z)."""

    def __init__(self, base, offsets):
        offsets = tuple(tuple(sorted((base.field(t) for t in ts), key=base.field.sort_key)) for ts in offsets)
        if len(offsets) != base.size:
            raise NotAllowed('One offset set per base hyperplane is required')
        for hyperplane, m, ts in zip(base.hyperplanes, base.mult, offsets):
            if len(ts) != m:
                raise NotAllowed(f'{hyperplane} has multiplicity {m} but {len(ts)} offsets')
            if len(set(ts)) != len(ts):
                raise NotAllowed(f'Offsets of {hyperplane} repeat')
        self.base = base
        self.offsets = offsets

    @property
    def pivot(self):
        """H0, the kernel of the added coordinate."""
        return Hyperplane(self.base.field, (0,) * self.base.dim + (1,))

    def to_arrangement(self):
        field = self.base.field
        hyperplanes = [(self.pivot, 1)]
        for hyperplane, ts in zip(self.base.hyperplanes, self.offsets):
            for t in ts:
                hyperplanes.append((Hyperplane(field, hyperplane.coefficients + (-t,)), 1))
        return Multiarrangement(field, self.base.dim + 1, hyperplanes)

    def describe(self):
        return {str(h): [self.base.field.format(t) for t in ts] for h, ts in zip(self.base.hyperplanes, self.offsets)}

    def __eq__(self, other):
        return isinstance(other, ExtensionCandidate) and self.base == other.base and self.offsets == other.offsets

    __hash__ = None

    def __repr__(self):
        body = '; '.join(f'{h}: {", ".join(ts)}' for h, ts in self.describe().items())
        return f'ExtensionCandidate({body})'


@dataclass(frozen=True)
class FreenessReport:
    b1: int
    b2: int
    lmp: int
    vgmp: int
    exponents_on_restriction: tuple
    verdict: str

    @property
    def slack(self):
        return self.lmp - self.vgmp

    @property
    def is_free(self):
        return self.verdict == FREE

    @property
    def exponents(self):
        if not self.is_free:
            return None
        return (1,) + tuple(self.exponents_on_restriction)

    def as_dict(self):
        return dict(
            verdict=self.verdict, b1=self.b1, b2=self.b2, lmp=self.lmp, vgmp=self.vgmp, slack=self.slack,
            exponents_on_restriction=list(self.exponents_on_restriction),
            exponents=list(self.exponents) if self.exponents else None,
        )

    def __str__(self):
        if self.is_free:
            return f'free, exp ({", ".join(map(str, self.exponents))}), b2 = {self.b2}'
        return f'not free, slack {self.slack} (LMP {self.lmp}, VGMP {self.vgmp})'


@dataclass(frozen=True)
class RestrictionBounds:
    lower: int
    upper: int
    case: str

    def deletion_is_free(self, size):
        """A restriction attaining the upper bound means the matching deletion is free."""
        return size == self.upper

    def __contains__(self, size):
        return self.lower <= size <= self.upper


@dataclass
class SearchDomain:
    field: object
    universe: tuple
    description: str
    restriction_prune: bool = True
    lmp_prune: bool = True

    @classmethod
    def rational_grid(cls, height, **toggles):
        if height < 1:
            raise NotAllowed('The rational grid needs height >= 1')
        from exactalg.fields import Rationals
        values = sorted({Fraction(p, q) for p in range(-height, height + 1) for q in range(1, height + 1)})
        return cls(Rationals(), tuple(values), f'rational grid height <= {height} ({len(values)} offsets)', **toggles)

    @classmethod
    def finite(cls, finite_field, **toggles):
        toggles.setdefault('restriction_prune', False)
        elements = tuple(finite_field.elements())
        return cls(finite_field, elements, f'{finite_field!r} ({len(elements)} offsets)', **toggles)


@dataclass
class SearchResult:
    domain: SearchDomain
    found: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)

    @property
    def candidates(self):
        return [candidate for candidate, _ in self.found]


@dataclass(frozen=True)
class VertexCheck:
    flat: object
    hyperplane: Hyperplane
    multiplicity: int
    required: int
    satisfied: bool

    def __str__(self):
        mark = 'ok' if self.satisfied else 'violated'
        return f'm({self.hyperplane}) = {self.multiplicity} >= {self.required}: {mark}'


@dataclass(frozen=True)
class FreeVertexReport:
    checks: tuple
    exponents: tuple

    @property
    def satisfied(self):
        return all(check.satisfied for check in self.checks)

    @property
    def violations(self):
        return [check for check in self.checks if not check.satisfied]


@dataclass(frozen=True)
class LocalizationWitness:
    """A rank-2 flat whose localization is (B2, (2, k, 1, k)), k >= 4, up to symmetry."""
    flat: object
    hyperplanes: tuple
    multiplicity: tuple
    k: int
