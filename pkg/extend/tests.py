from fractions import Fraction

from django.test import SimpleTestCase

from arrangement.models import Hyperplane, Multiarrangement
from arrangement.services import b3_n_k, boolean, coxeter_a2, coxeter_b2, coxeter_b3
from exactalg.fields import FiniteField, Rationals
from lattice.isomorphism import lattice_isomorphic
from lattice.selectors import restriction_sizes
from lattice.services import characteristic_polynomial, intersection_lattice
from utils.exceptions import NotAllowed, NotFound
from utils.fakers import PROPERTY_CASES, random_multiplicity, random_offsets
from .models import ExtensionCandidate, SearchDomain
from .search import search_free_extensions
from .services import (
    freeness_all_pivots, gmp, lmp, lmp_deletion_identity, restriction_bounds, vgmp, yoshinaga_extension,
    yoshinaga_freeness, ziegler_restriction,
)
from .supersolvable import b3_filtration, free_vertex_check, non_extendable_by_localization

Q = Rationals()
Z = (0, 0, 1)


def extension(base, offsets):
    """Candidate from offsets keyed by base linear form."""
    return ExtensionCandidate(base, [offsets[h.coefficients] for h in base.hyperplanes])


def gf9_example():
    field = FiniteField(3, 2)
    w = field.generator
    forms = [Z, (1, -1, 0), (1, -1, 1)]
    forms += [(1, 0, c) for c in (0, 1, 2, w)]
    forms += [(0, 1, c) for c in (0, 1, 2, w)]
    return Multiarrangement.from_forms(forms, field=field)


def b2_3522_first():
    return extension(coxeter_b2((3, 5, 2, 2)), {
        (1, 0): (0, 1, 2), (0, 1): (0, 1, 2, 3, 4), (1, -1): (0, -2), (1, 1): (2, 4),
    })


def b2_3522_second():
    return extension(coxeter_b2((3, 5, 2, 2)), {
        (1, 0): (0, 1, 2), (0, 1): (0, 1, Fraction(3, 2), 2, 3), (1, -1): (-1, 0), (1, 1): (2, 3),
    })


def b2_2313_free():
    return extension(coxeter_b2((2, 3, 1, 3)), {
        (1, 0): (0, 1), (0, 1): (0, Fraction(1, 2), 1), (1, -1): (0,), (1, 1): (0, 1, 2),
    })


def a2_244_staircase():
    return extension(coxeter_a2((2, 4, 4)), {
        (1, 0): (0, 1), (0, 1): (0, 1, 2, 3), (1, -1): (-2, -1, 0, 1),
    })


class CandidateTests(SimpleTestCase):
    def test_offsets_must_match_multiplicity(self):
        with self.assertRaises(NotAllowed):
            extension(coxeter_b2((1, 2, 1, 1)), {(1, 0): (0,), (0, 1): (0,), (1, -1): (0,), (1, 1): (0,)})
        with self.assertRaises(NotAllowed):
            extension(coxeter_b2((1, 2, 1, 1)), {(1, 0): (0,), (0, 1): (1, 1), (1, -1): (0,), (1, 1): (0,)})

    def test_to_arrangement(self):
        E = b2_3522_first().to_arrangement()
        self.assertEqual(E.size, 13)
        self.assertTrue(E.is_simple)
        self.assertIn(Hyperplane(Q, (1, -1, 2)), E)


class ZieglerRestrictionTests(SimpleTestCase):
    def test_yoshinaga_round_trip(self):
        for m in [(3, 5, 2, 2), (2, 4, 1, 4), (1, 1, 1, 1)] + [random_multiplicity(4) for _ in range(10)]:
            A = coxeter_b2(m)
            E = yoshinaga_extension(A).to_arrangement()
            self.assertEqual(E.size, sum(m) + 1)
            self.assertEqual(ziegler_restriction(E, Hyperplane(Q, Z)), A)
        A = coxeter_a2((2, 4, 4))
        self.assertEqual(ziegler_restriction(yoshinaga_extension(A).to_arrangement(), Hyperplane(Q, Z)), A)

    def test_gf9_example(self):
        E = gf9_example()
        self.assertEqual(E.size, 11)
        restricted = ziegler_restriction(E, E.hyperplane(Z))
        self.assertEqual(restricted, coxeter_a2((4, 4, 2), E.field))

    def test_boolean(self):
        restricted = ziegler_restriction(boolean(3), Hyperplane(Q, Z))
        self.assertEqual(restricted, boolean(2))

    def test_pivot_must_belong(self):
        with self.assertRaises(NotFound):
            ziegler_restriction(boolean(3), Hyperplane(Q, (1, 1, 1)))


class YoshinagaExtensionTests(SimpleTestCase):
    def test_offset_ranges(self):
        candidate = yoshinaga_extension(coxeter_b2((3, 2, 5, 1)))
        offsets = {h.coefficients: ts for h, ts in zip(candidate.base.hyperplanes, candidate.offsets)}
        self.assertEqual(offsets[(1, 0)], (-1, 0, 1))
        self.assertEqual(offsets[(0, 1)], (0, 1))
        self.assertEqual(offsets[(1, -1)], (-2, -1, 0, 1, 2))
        self.assertEqual(offsets[(1, 1)], (0,))

    def test_3522_is_not_free(self):
        E = yoshinaga_extension(coxeter_b2((3, 5, 2, 2))).to_arrangement()
        self.assertEqual(E.size, 13)
        self.assertEqual(lmp(E), 49)
        self.assertEqual(vgmp(E, Hyperplane(Q, Z)), 47)
        report = yoshinaga_freeness(E)
        self.assertFalse(report.is_free)
        self.assertEqual(report.slack, 2)
        self.assertIsNone(report.exponents)

    def test_constant_multiplicities_are_free(self):
        cases = [
            (coxeter_b2((1, 1, 1, 1)), (1, 1, 3), 7),
            (coxeter_b2((2, 2, 2, 2)), (1, 4, 4), 24),
            (coxeter_a2((2, 2, 2)), (1, 3, 3), 15),
        ]
        for A, exps, target in cases:
            report = yoshinaga_freeness(yoshinaga_extension(A).to_arrangement())
            self.assertTrue(report.is_free)
            self.assertEqual(report.exponents, exps)
            self.assertEqual(report.vgmp, target)


class MixedProductTests(SimpleTestCase):
    def test_gmp(self):
        self.assertEqual(gmp((1, 5, 7)), 47)
        self.assertEqual(gmp((1, 1)), 1)
        self.assertEqual(gmp((1, 4, 5)), 29)

    def test_lmp_simple(self):
        self.assertEqual(lmp(boolean(3)), 3)
        self.assertEqual(lmp(b2_3522_first().to_arrangement()), 47)

    def test_lmp_of_free_multiarrangement_is_gmp(self):
        self.assertEqual(lmp(b3_n_k(4)), gmp((5, 5, 6)))

    def test_vgmp(self):
        self.assertEqual(vgmp(boolean(3), Hyperplane(Q, Z)), 3)
        E = yoshinaga_extension(coxeter_b2((2, 4, 1, 4))).to_arrangement()
        self.assertEqual(vgmp(E, Hyperplane(Q, Z)), 41)

    def test_all_pivots_of_free_arrangement(self):
        for E, exps in ((boolean(3), (1, 1, 1)), (coxeter_b3(), (1, 3, 5))):
            self.assertEqual({value for _, value in freeness_all_pivots(E)}, {gmp(exps)})

    def test_deletion_identity(self):
        E = b2_3522_first().to_arrangement()
        for H in E.hyperplanes:
            left, right = lmp_deletion_identity(E, H)
            self.assertEqual(left, right)

    def test_random_candidates(self):
        universe = SearchDomain.rational_grid(3).universe
        for _ in range(PROPERTY_CASES):
            m = random_multiplicity(4, 1, 3)
            A = coxeter_b2(m)
            candidate = ExtensionCandidate(A, [random_offsets(universe, v) for v in A.mult])
            E = candidate.to_arrangement()
            report = yoshinaga_freeness(E)
            self.assertGreaterEqual(report.slack, 0)
            self.assertEqual(characteristic_polynomial(E).evaluate(1), 0)
            H = E.hyperplanes[-1]
            left, right = lmp_deletion_identity(E, H)
            self.assertEqual(left, right)


class FreenessTests(SimpleTestCase):
    def test_gf9_example_is_free(self):
        report = yoshinaga_freeness(gf9_example())
        self.assertTrue(report.is_free)
        self.assertEqual(report.b2, 25)
        self.assertEqual(report.exponents, (1, 5, 5))
        self.assertEqual(report.lmp, 35)
        self.assertEqual(str(report), 'free, exp (1, 5, 5), b2 = 25')

    def test_boolean(self):
        report = yoshinaga_freeness(boolean(3))
        self.assertTrue(report.is_free)
        self.assertEqual(report.exponents, (1, 1, 1))
        self.assertEqual((report.b1, report.b2), (2, 1))

    def test_known_free_extensions(self):
        for candidate, exps in ((b2_2313_free(), (1, 4, 5)), (b2_3522_first(), (1, 5, 7)),
                                (b2_3522_second(), (1, 5, 7)), (a2_244_staircase(), (1, 5, 5))):
            report = yoshinaga_freeness(candidate.to_arrangement())
            self.assertTrue(report.is_free, candidate)
            self.assertEqual(report.exponents, exps)
            self.assertEqual(report.lmp, report.vgmp)

    def test_free_chi_factors(self):
        E = b2_2313_free().to_arrangement()
        chi = characteristic_polynomial(E)
        for t in range(-3, 8):
            self.assertEqual(chi.evaluate(t), (t - 1) * (t - 4) * (t - 5))

    def test_requires_simple_rank3(self):
        with self.assertRaises(NotAllowed):
            yoshinaga_freeness(coxeter_b3((2, 1, 1, 1, 1, 1, 1, 1, 1)))
        with self.assertRaises(NotAllowed):
            yoshinaga_freeness(coxeter_b2())


class RestrictionBoundsTests(SimpleTestCase):
    def test_2414(self):
        for cls in range(4):
            bounds = restriction_bounds((2, 4, 1, 4), cls)
            self.assertEqual((bounds.lower, bounds.upper), (5, 6))

    def test_3522_is_pinned(self):
        for cls in range(4):
            bounds = restriction_bounds((3, 5, 2, 2), cls)
            self.assertEqual((bounds.lower, bounds.upper, bounds.case), (6, 6, '2a'))

    def test_deletion_to_peak_point(self):
        bounds = restriction_bounds((2, 3, 1, 3), 1)
        self.assertEqual((bounds.lower, bounds.upper, bounds.case), (4, 6, '1a'))
        self.assertIn(5, bounds)
        self.assertTrue(bounds.deletion_is_free(6))

    def test_free_extensions_respect_bounds(self):
        for candidate in (b2_3522_first(), b2_3522_second(), b2_2313_free()):
            E = candidate.to_arrangement()
            sizes = restriction_sizes(intersection_lattice(E))
            m = tuple(candidate.base.multiplicity(Hyperplane(Q, f)) for f in ((1, 0), (0, 1), (1, -1), (1, 1)))
            for cls, form in enumerate(((1, 0), (0, 1), (1, -1), (1, 1))):
                bounds = restriction_bounds(m, cls)
                for j, H in enumerate(E.hyperplanes):
                    if H.coefficients[:2] == form:
                        self.assertIn(sizes[j], bounds)

    def test_unbalanced(self):
        with self.assertRaises(NotAllowed):
            restriction_bounds((1, 1, 5, 1), 0)


class SearchTests(SimpleTestCase):
    def test_2313_finds_free_extension(self):
        result = search_free_extensions(coxeter_b2((2, 3, 1, 3)), SearchDomain.rational_grid(2))
        self.assertIn(b2_2313_free(), result.candidates)
        for _, report in result.found:
            self.assertEqual(report.exponents, (1, 4, 5))
            self.assertEqual((report.lmp, report.vgmp), (29, 29))
        self.assertEqual(result.counters['free_found'], len(result.found))
        self.assertIn('height <= 2', result.domain.description)

    def test_2414_has_no_free_extension(self):
        result = search_free_extensions(coxeter_b2((2, 4, 1, 4)), SearchDomain.rational_grid(2))
        self.assertEqual(result.found, [])
        self.assertGreater(result.counters['pruned_restriction'] + result.counters['pruned_lmp'], 0)

    def test_3522_free_extensions_are_not_isomorphic(self):
        values = (-2, -1, 0, 1, Fraction(3, 2), 2, 3, 4)
        domain = SearchDomain(Q, tuple(Fraction(v) for v in values), 'integers -2..4 and 3/2')
        result = search_free_extensions(coxeter_b2((3, 5, 2, 2)), domain)
        self.assertIn(b2_3522_first(), result.candidates)
        self.assertIn(b2_3522_second(), result.candidates)
        lattices = [intersection_lattice(c.to_arrangement()) for c in (b2_3522_first(), b2_3522_second())]
        self.assertFalse(lattice_isomorphic(*lattices))
        for candidate in result.candidates:
            E = candidate.to_arrangement()
            sizes = restriction_sizes(intersection_lattice(E))
            del sizes[E.index(candidate.pivot)]
            self.assertEqual(set(sizes), {6})

    def test_a2_staircase(self):
        result = search_free_extensions(coxeter_a2((2, 4, 4)), SearchDomain.rational_grid(3), limit=0)
        self.assertIn(a2_244_staircase(), result.candidates)

    def test_limit(self):
        result = search_free_extensions(coxeter_a2((2, 4, 4)), SearchDomain.rational_grid(3), limit=1)
        self.assertEqual(len(result.found), 1)

    def test_workers_merge_in_task_order(self):
        base, domain = coxeter_b2((2, 3, 1, 3)), SearchDomain.rational_grid(2)
        serial = search_free_extensions(base, domain)
        parallel = search_free_extensions(base, domain, workers=2)
        self.assertEqual(serial.candidates, parallel.candidates)
        self.assertEqual(serial.counters, parallel.counters)

    def test_finite_field(self):
        field = FiniteField(5)
        result = search_free_extensions(coxeter_b2((1, 1, 1, 1)), SearchDomain.finite(field))
        self.assertGreater(len(result.found), 0)
        for candidate, report in result.found:
            self.assertEqual(report.exponents, (1, 1, 3))

    def test_errors(self):
        with self.assertRaises(NotAllowed):
            search_free_extensions(coxeter_b2((1, 1, 1, 1)), SearchDomain(Q, (), 'empty'))
        with self.assertRaises(NotAllowed):
            search_free_extensions(boolean(2), SearchDomain.rational_grid(2))


class SupersolvableTests(SimpleTestCase):
    def test_b3_family_passes(self):
        for k in (4, 5):
            A = b3_n_k(k)
            report = free_vertex_check(A, b3_filtration(A))
            self.assertTrue(report.satisfied)
            self.assertEqual(report.exponents, (5, k + 1, k + 2))

    def test_b3_family_violations(self):
        A = b3_n_k(4, e=2)
        report = free_vertex_check(A, b3_filtration(A))
        self.assertFalse(report.satisfied)
        self.assertEqual([(c.hyperplane.coefficients, c.multiplicity, c.required) for c in report.violations],
                         [((1, 0, 0), 2, 3)])
        A = b3_n_k(4, h=2)
        violated = {c.hyperplane.coefficients for c in free_vertex_check(A, b3_filtration(A)).violations}
        self.assertIn((1, -1, 0), violated)

    def test_malformed_filtration(self):
        A = coxeter_b3()
        x, y = A.hyperplane((1, 0, 0)), A.hyperplane((0, 1, 0))
        with self.assertRaises(NotAllowed):
            free_vertex_check(A, [[x], [x, y]])
        with self.assertRaises(NotAllowed):
            free_vertex_check(A, [[x, y], list(A.hyperplanes)])

    def test_localization_witness(self):
        witness = non_extendable_by_localization(b3_n_k(4))
        self.assertIsNotNone(witness)
        self.assertEqual(witness.k, 4)
        self.assertEqual({h.coefficients for h in witness.hyperplanes},
                         {(1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 1, 0)})
        self.assertIsNone(non_extendable_by_localization(b3_n_k(3)))
        self.assertIsNone(non_extendable_by_localization(coxeter_b3()))

    def test_localization_witness_needs_characteristic_zero(self):
        with self.assertRaises(NotAllowed):
            non_extendable_by_localization(b3_n_k(4, field=FiniteField(5)))

