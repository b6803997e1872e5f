from django.test import SimpleTestCase

from arrangement.models import Multiarrangement
from arrangement.services import b2_orbit, coxeter_b2, multiplicity_is_balanced
from derivations.services import rank2_exponents_solver
from exactalg.fields import FiniteField
from utils.exceptions import ConsistencyError, NotAllowed
from utils.fakers import PROPERTY_CASES, random_multiplicity
from .models import A2_RULE, B2_PEAK_RULE, SOLVER, UNBALANCED_RULE
from .services import (
    a2_exponents, b2_delta_candidates, b2_exponents, deletion_unbalanced_exponents, exponents,
    harmonic_pairing, peak_point_b2_mn, unbalanced_exponents,
)


def balanced_b2(limit):
    for total in range(1, limit + 1):
        for a in range(total + 1):
            for b in range(total - a + 1):
                for c in range(total - a - b + 1):
                    m = (a, b, c, total - a - b - c)
                    if multiplicity_is_balanced(m):
                        yield m


class RuleTests(SimpleTestCase):
    def test_unbalanced(self):
        self.assertEqual(unbalanced_exponents((1, 1, 5, 1)).as_tuple(), (3, 5))
        self.assertEqual(unbalanced_exponents((0, 0, 7, 0)).as_tuple(), (0, 7))
        self.assertEqual(unbalanced_exponents((2, 2, 6, 2)).as_tuple(), (6, 6))
        with self.assertRaises(NotAllowed):
            unbalanced_exponents((1, 1, 1, 1))

    def test_a2(self):
        for k in range(1, 6):
            self.assertEqual(a2_exponents((2, k, k)).as_tuple(), (k + 1, k + 1))
        self.assertEqual(a2_exponents((1, 1, 1)).as_tuple(), (1, 2))
        self.assertEqual(a2_exponents((1, 1, 3)).provenance, UNBALANCED_RULE)
        self.assertEqual(a2_exponents((1, 1, 3)).as_tuple(), (2, 3))

    def test_delta_candidates(self):
        self.assertEqual(b2_delta_candidates((2, 4, 1, 4)), {1})
        self.assertEqual(b2_delta_candidates((3, 5, 2, 2)), {0, 2})
        self.assertEqual(b2_delta_candidates((1, 1, 1, 1)), {0, 2})
        self.assertEqual(b2_exponents((1, 1, 1, 1)).as_tuple(), (1, 3))
        with self.assertRaises(NotAllowed):
            b2_delta_candidates((1, 1, 5, 1))


class B2DispatchTests(SimpleTestCase):
    def test_table(self):
        cases = {
            (2, 2, 1, 3): (3, 5),
            (1, 3, 1, 3): (4, 4),
            (2, 3, 1, 2): (4, 4),
            (3, 5, 2, 2): (5, 7),
            (3, 3, 2, 2): (5, 5),
        }
        for k in (4, 5, 6):
            cases[(2, k, 1, k)] = (k + 1, k + 2)
        for m, expected in cases.items():
            self.assertEqual(b2_exponents(m, verify=True).as_tuple(), expected)

    def test_provenance(self):
        self.assertEqual(b2_exponents((2, 2, 1, 3)).provenance, B2_PEAK_RULE)
        self.assertEqual(b2_exponents((2, 4, 1, 4)).provenance, B2_PEAK_RULE)
        self.assertEqual(b2_exponents((3, 3, 2, 2)).provenance, SOLVER)
        self.assertEqual(b2_exponents((2, 4, 0, 4)).provenance, A2_RULE)

    def test_rules_agree_with_solver(self):
        for m in balanced_b2(8):
            pair = b2_exponents(m, verify=True)
            self.assertEqual(pair.d1 + pair.d2, sum(m))

    def test_peak_bound(self):
        for m in balanced_b2(9):
            if 0 not in m:
                self.assertLessEqual(b2_exponents(m).delta, 2)

    def test_permutation_invariance(self):
        for _ in range(PROPERTY_CASES):
            m = random_multiplicity(4, low=1, high=5)
            self.assertEqual({b2_exponents(p).as_tuple() for p in b2_orbit(m)}, {b2_exponents(m).as_tuple()})

    def test_sabotaged_solver_is_caught(self):
        def sabotaged(A):
            solution = rank2_exponents_solver(A)
            solution.d1, solution.d2 = solution.d1 - 1, solution.d2 + 1
            return solution

        with self.assertRaises(ConsistencyError) as raised:
            b2_exponents((2, 2, 1, 3), verify=True, solver=sabotaged)
        self.assertEqual(raised.exception.diagnostics['rule_exponents'], (3, 5))


class GeneralExponentTests(SimpleTestCase):
    def test_harmonic_quadruple_in_other_coordinates(self):
        # x, y, x-2y, x+2y is harmonic with pairs {x, y} and {x-2y, x+2y}
        A = Multiarrangement.from_forms(((1, 0), (0, 1), (1, -2), (1, 2)), (2, 4, 1, 4))
        self.assertIsNotNone(harmonic_pairing(A))
        self.assertEqual(exponents(A, verify=True).as_tuple(), (5, 6))

    def test_generic_quadruple_uses_solver(self):
        A = Multiarrangement.from_forms(((1, 0), (0, 1), (1, -1), (1, 2)), (1, 1, 1, 1))
        self.assertIsNone(harmonic_pairing(A))
        pair = exponents(A)
        self.assertEqual((pair.as_tuple(), pair.provenance), ((1, 3), SOLVER))

    def test_localization_in_three_space(self):
        A = Multiarrangement.from_forms(((1, 0, 0), (0, 1, 0), (1, 1, 0)), (2, 2, 2))
        self.assertEqual(exponents(A).as_tuple(), (3, 3))
        self.assertEqual(exponents(Multiarrangement.from_forms(((1, 0, 0),), (3,))).as_tuple(), (0, 3))

    def test_finite_field_goes_to_solver(self):
        A = Multiarrangement.from_forms(((1, 0), (0, 1), (1, -1)), (4, 4, 2), field=FiniteField(3, 2))
        pair = exponents(A)
        self.assertEqual((pair.as_tuple(), pair.provenance), ((5, 5), SOLVER))


class SupplementedRuleTests(SimpleTestCase):
    def test_peak_criterion_agrees_with_solver(self):
        for m in ((1, 1, 1, 1), (3, 3, 1, 1), (2, 2, 1, 1), (1, 2, 1, 2), (3, 3, 2, 2), (3, 5, 2, 2)):
            verdict = peak_point_b2_mn(m)
            self.assertIsNotNone(verdict)
            self.assertEqual(verdict, b2_exponents(m, verify=True).delta == 2)

    def test_unbalanced_deletion(self):
        A = coxeter_b2((1, 1, 1, 2))
        pair = deletion_unbalanced_exponents(A, A.hyperplane((1, 0)))
        self.assertEqual(pair.as_tuple(), (2, 2))
        self.assertEqual(rank2_exponents_solver(coxeter_b2((0, 1, 1, 2))).exponents, (2, 2))
        self.assertIsNone(deletion_unbalanced_exponents(coxeter_b2((2, 2, 2, 2)), A.hyperplane((1, 0))))
