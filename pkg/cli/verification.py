"""Acceptance harness: every published claim the toolkit reproduces, as PASS/FAIL items."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from arrangement.models import Multiarrangement
from arrangement.services import b2_canonical_permutation, b2_orbit, b3_n_k, coxeter_a2, coxeter_b2, \
    multiplicity_is_balanced
from classify.services import b2_exponents, exponents, solved_exponents
from derivations.appendix import fwy_generators, integral_I, peak_point_b2_min1
from exactalg.fields import FiniteField, Rationals
from extend.models import ExtensionCandidate, SearchDomain
from extend.search import search_free_extensions
from extend.services import lmp_deletion_identity, yoshinaga_extension, yoshinaga_freeness
from extend.supersolvable import b3_filtration, free_vertex_check, non_extendable_by_localization
from lattice.isomorphism import lattice_isomorphic
from lattice.selectors import rank2_profile
from lattice.services import characteristic_polynomial, intersection_lattice
from utils.exceptions import CustomBaseException
from utils.fakers import PROPERTY_CASES, random_multiplicity, random_offsets

logger = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'
ITEMS = []


@dataclass
class VerifyContext:
    quick: bool = False
    solver: object = None
    workers: int = 1
    height: int = 4


@dataclass
class ItemResult:
    group: str
    name: str
    passed: bool
    detail: str = ''
    diagnostics: dict = field(default_factory=dict)

    @property
    def status(self):
        return PASS if self.passed else FAIL

    def as_dict(self):
        return dict(group=self.group, name=self.name, status=self.status, detail=self.detail,
                    diagnostics=self.diagnostics)

    def __str__(self):
        line = f'{self.status} {self.group}: {self.name}'
        if self.detail:
            line += f' ({self.detail})'
        if self.diagnostics:
            line += f' {self.diagnostics}'
        return line


def item(group, name, exploratory=False):
    def register(func):
        ITEMS.append((group, name, exploratory, func))
        return func
    return register


def groups():
    return sorted({group for group, _, _, _ in ITEMS})


def balanced_b2(limit):
    for total in range(1, limit + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                for c in range(total - a - b + 1):
                    m = (a, b, c, total - a - b - c)
                    if multiplicity_is_balanced(m):
                        yield m


def gf9_extension():
    field_ = FiniteField(3, 2)
    w = field_.generator
    forms = [(0, 0, 1), (1, -1, 0), (1, -1, 1)]
    forms += [(1, 0, c) for c in (0, 1, 2, w)]
    forms += [(0, 1, c) for c in (0, 1, 2, w)]
    return Multiarrangement.from_forms(forms, field=field_)


def _compare(cases, compute):
    wrong = {}
    for key, want in cases.items():
        got = compute(key)
        if got != want:
            wrong[str(key)] = dict(got=got, expected=want)
    return not wrong, f'{len(cases)} cases', dict(mismatches=wrong) if wrong else {}


@item('exponents', 'B2 exponent table')
def b2_table(ctx):
    cases = {(2, 2, 1, 3): (3, 5), (1, 3, 1, 3): (4, 4), (2, 3, 1, 2): (4, 4), (3, 5, 2, 2): (5, 7)}
    cases.update({(2, k, 1, k): (k + 1, k + 2) for k in (4, 5, 6)})
    return _compare(cases, lambda m: b2_exponents(m, verify=True, solver=ctx.solver).as_tuple())


@item('exponents', 'A2 exponent table')
def a2_table(ctx):
    cases = {(2, k, k): (k + 1, k + 1) for k in range(1, 6)}
    cases.update({(k, k, 2): (k + 1, k + 1) for k in range(1, 6)})
    return _compare(cases, lambda m: exponents(coxeter_a2(m), verify=True, solver=ctx.solver).as_tuple())


@item('oracle', 'closed-form rules agree with the solver')
def rule_oracle(ctx):
    limit = 8 if ctx.quick else 14
    representatives = sorted({b2_canonical_permutation(m) for m in balanced_b2(limit)})
    for m in representatives:
        b2_exponents(m, verify=True, solver=ctx.solver)
    return True, f'{len(representatives)} orbits with |m| <= {limit}', {}


@item('yoshinaga', 'Yoshinaga extension of (3,5,2,2) is not free')
def yoshinaga_3522(ctx):
    E = yoshinaga_extension(coxeter_b2((3, 5, 2, 2))).to_arrangement()
    report = yoshinaga_freeness(E)
    values = dict(lmp=report.lmp, vgmp=report.vgmp, verdict=report.verdict)
    ok = values == dict(lmp=49, vgmp=47, verdict='not-free')
    return ok, str(report), {} if ok else values


@item('gf9', 'extension over GF(9) is free')
def gf9(ctx):
    report = yoshinaga_freeness(gf9_extension())
    ok = report.is_free and report.b2 == 25 and report.exponents == (1, 5, 5)
    return ok, str(report), {} if ok else report.as_dict()


@item('peak', 'min-1 peak rule agrees with the solver')
def peak_min1(ctx):
    limit = 8 if ctx.quick else 14
    cases = [m for m in balanced_b2(limit) if min(m) == 1]
    wrong = {}
    for m in cases:
        verdict = peak_point_b2_min1(m)
        measured = solved_exponents(coxeter_b2(m), ctx.solver).delta == 2
        if verdict != measured:
            wrong[str(m)] = dict(rule=verdict, solver=measured)
    return not wrong, f'{len(cases)} multiplicities with |m| <= {limit}', dict(mismatches=wrong) if wrong else {}


@item('appendix', 'zeros of the integral')
def integral_zeros(ctx):
    wrong = [(a, b, c) for a in range(7) for b in range(7) for c in range(7)
             if (integral_I(a, b, c) == 0) != (a == b and (a + b + c) % 2 == 0)]
    ok = not wrong and integral_I(1, 1, 1) == Fraction(-1, 2)
    return ok, '0 <= a, b, c <= 6', dict(mismatches=wrong) if wrong else {}


@item('appendix', 'A2 generators pass membership and Saito checks')
def fwy(ctx):
    limit = 7 if ctx.quick else 13
    triples = [(p, q, r) for p in range(1, limit) for q in range(1, limit) for r in range(1, limit)
               if p + q + r <= limit and multiplicity_is_balanced((p, q, r))]
    for triple in triples:
        fwy_generators(*triple)
    return True, f'{len(triples)} balanced triples with p+q+r <= {limit}', {}


def _height(ctx):
    return 2 if ctx.quick else ctx.height


@item('search', 'free extension of (2,3,1,3) exists')
def existence_2313(ctx):
    domain = SearchDomain.rational_grid(_height(ctx))
    result = search_free_extensions(coxeter_b2((2, 3, 1, 3)), domain, limit=1, workers=ctx.workers)
    if not result.found:
        return False, f'none over {domain.description}', result.counters
    candidate, report = result.found[0]
    ok = report.exponents == (1, 4, 5) and report.lmp == report.vgmp == 29
    return ok, f'{candidate!r} over {domain.description}', {} if ok else report.as_dict()


@item('search', 'no free extension of (2,4,1,4)')
def nonexistence_2414(ctx):
    domain = SearchDomain.rational_grid(_height(ctx))
    result = search_free_extensions(coxeter_b2((2, 4, 1, 4)), domain, workers=ctx.workers)
    counters = result.counters
    detail = (f'{domain.description}: tested {counters["tested"]}, pruned by bounds {counters["pruned_restriction"]}, '
              f'by LMP {counters["pruned_lmp"]}')
    return not result.found, detail, {} if not result.found else dict(found=[repr(c) for c in result.candidates])


@item('search', 'non-isomorphic free extensions of (3,5,2,2)')
def nonisomorphic_3522(ctx):
    if ctx.quick:
        values = tuple(Fraction(v) for v in (-2, -1, 0, 1, Fraction(3, 2), 2, 3, 4))
        domain = SearchDomain(Rationals(), values, 'offsets -2..4 and 3/2')
    else:
        domain = SearchDomain.rational_grid(ctx.height)
    result = search_free_extensions(coxeter_b2((3, 5, 2, 2)), domain, workers=ctx.workers)
    lattices = [intersection_lattice(c.to_arrangement()) for c in result.candidates]
    classes = []
    for lattice in lattices:
        if not any(lattice_isomorphic(lattice, other) for other in classes):
            classes.append(lattice)
    detail = f'{len(result.found)} free over {domain.description}, {len(classes)} lattice classes'
    return len(classes) >= 2, detail, {}


@item('b3', 'free vertex condition on the B3 family')
def b3_vertex(ctx):
    wrong = {}
    for k in (4, 5):
        for changes in ({}, dict(e=2), dict(h=2), dict(f=2), dict(g=2), dict(i=2)):
            A = b3_n_k(k, **changes)
            report = free_vertex_check(A, b3_filtration(A))
            expected = not changes
            if report.satisfied != expected or (expected and report.exponents != (5, k + 1, k + 2)):
                wrong[f'k={k} {changes}'] = dict(satisfied=report.satisfied, exponents=report.exponents)
    return not wrong, 'k in 4, 5', wrong


@item('b3', 'localization witness for the B3 family')
def b3_witness(ctx):
    found = {k: non_extendable_by_localization(b3_n_k(k)) is not None for k in (3, 4, 5)}
    return found == {3: False, 4: True, 5: True}, str(found), {}


@item('properties', 'randomized extension invariants')
def properties(ctx):
    cases = 50 if ctx.quick else PROPERTY_CASES
    universe = SearchDomain.rational_grid(3).universe
    for _ in range(cases):
        A = coxeter_b2(random_multiplicity(4, 1, 3))
        E = ExtensionCandidate(A, [random_offsets(universe, m) for m in A.mult]).to_arrangement()
        report = yoshinaga_freeness(E)
        failures = {}
        if report.slack < 0:
            failures['lmp_ge_vgmp'] = report.as_dict()
        if characteristic_polynomial(E).evaluate(1) != 0:
            failures['chi_at_1'] = repr(E)
        left, right = lmp_deletion_identity(E, E.hyperplanes[-1])
        if left != right:
            failures['deletion'] = (left, right)
        profile = rank2_profile(intersection_lattice(E))
        pairs = E.size * (E.size - 1) // 2
        if profile.get(2, 0) != pairs - sum(i * (i - 1) // 2 * n for i, n in profile.items() if i > 2):
            failures['profile'] = profile
        m = random_multiplicity(4, 1, 5)
        if multiplicity_is_balanced(m):
            if len({b2_exponents(p).as_tuple() for p in b2_orbit(m)}) != 1:
                failures['orbit'] = m
        if failures:
            return False, repr(E), failures
    return True, f'{cases} random candidates', {}


@item('exploratory', '(2,4,1,4) over small prime fields', exploratory=True)
def finite_2414(ctx):
    counts = {}
    for p in (5, 7, 11, 13):
        result = search_free_extensions(coxeter_b2((2, 4, 1, 4)), SearchDomain.finite(FiniteField(p)),
                                        workers=ctx.workers)
        counts[f'GF({p})'] = len(result.found)
    return True, f'free extensions found {counts} (not a proof)', {}


@item('exploratory', 'rediscover the GF(9) extension', exploratory=True)
def gf9_rediscovery(ctx):
    field_ = FiniteField(3, 2)
    base = coxeter_a2((4, 4, 2), field_)
    result = search_free_extensions(base, SearchDomain.finite(field_), workers=ctx.workers)
    target = gf9_extension()
    ok = any(c.to_arrangement() == target for c in result.candidates)
    return ok, f'{len(result.found)} free extensions over GF(9)', {}


def run_verification(only=None, quick=False, exploratory=False, solver=None, workers=1, height=4):
    ctx = VerifyContext(quick=quick, solver=solver, workers=workers, height=height)
    results = []
    for group, name, is_exploratory, check in ITEMS:
        if only and group not in only:
            continue
        if is_exploratory and not exploratory:
            continue
        try:
            passed, detail, diagnostics = check(ctx)
        except CustomBaseException as e:
            passed, detail, diagnostics = False, e.message, getattr(e, 'diagnostics', {})
        result = ItemResult(group, name, passed, detail, diagnostics)
        logger.info('%s', result)
        results.append(result)
    return results
