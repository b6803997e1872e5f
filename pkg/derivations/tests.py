import itertools
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from arrangement.services import coxeter_a2, coxeter_b2, coxeter_b3, b3_n_k, multiplicity_is_balanced
from exactalg.fields import FiniteField, Rationals
from exactalg.polynomials import Polynomial
from utils.exceptions import NotAllowed
from utils.fakers import random_multiplicity
from .appendix import fwy_generators, integral_I, peak_point_b2_min1, theta_abc
from .models import Derivation
from .services import condition_matrix, derivation_space_dim, rank2_exponents_solver, saito_check

Q = Rationals()
XY = ('x', 'y')


def plane_variables():
    return Polynomial.variable(Q, XY, 0), Polynomial.variable(Q, XY, 1)


class DerivationSpaceTests(SimpleTestCase):
    def test_simple_a2(self):
        A = coxeter_a2()
        self.assertEqual(derivation_space_dim(A, 0), 0)
        self.assertEqual(derivation_space_dim(A, 1), 1)
        matrix, _ = condition_matrix(A, 1)
        self.assertEqual(len(matrix.kernel_basis()), 1)

    def test_b2_2414(self):
        A = coxeter_b2((2, 4, 1, 4))
        self.assertEqual(derivation_space_dim(A, 4), 0)
        self.assertEqual(derivation_space_dim(A, 5), 1)

    def test_rank_three(self):
        self.assertEqual([derivation_space_dim(coxeter_b3(), d) for d in (1, 2, 3)], [1, 3, 7])
        n4 = b3_n_k(4)
        self.assertEqual(derivation_space_dim(n4, 4), 0)
        self.assertEqual(derivation_space_dim(n4, 5), 2)


class SolverTests(SimpleTestCase):
    def test_documented_exponents(self):
        cases = {
            (2, 2, 1, 3): (3, 5),
            (1, 3, 1, 3): (4, 4),
            (2, 3, 1, 2): (4, 4),
            (3, 5, 2, 2): (5, 7),
            (1, 1, 1, 1): (1, 3),
            (2, 4, 1, 4): (5, 6),
        }
        for m, expected in cases.items():
            self.assertEqual(rank2_exponents_solver(coxeter_b2(m)).exponents, expected)

    def test_a2_with_squared_third_line(self):
        for k in range(1, 4):
            self.assertEqual(rank2_exponents_solver(coxeter_a2((k, k, 2))).exponents, (k + 1, k + 1))

    def test_tables_on_random_multiplicities(self):
        for _ in range(8):
            m = random_multiplicity(4, low=1, high=3)
            solution = rank2_exponents_solver(coxeter_b2(m))
            self.assertEqual(solution.d1 + solution.d2, sum(m))
            self.assertFalse(solution.table.mismatches(solution.d1, solution.d2))
            self.assertTrue(saito_check(solution.basis, coxeter_b2(m)))

    def test_finite_field(self):
        A = coxeter_a2((4, 4, 2), field=FiniteField(3, 2))
        self.assertEqual(rank2_exponents_solver(A).exponents, (5, 5))

    def test_rank_three_input_is_rejected(self):
        with self.assertRaises(NotAllowed):
            rank2_exponents_solver(coxeter_b3())


class SaitoTests(SimpleTestCase):
    def test_euler_and_squares(self):
        x, y = plane_variables()
        euler = Derivation((x, y))
        squares = Derivation((x ** 2, y ** 2))
        self.assertTrue(saito_check([euler, squares], coxeter_a2()))
        self.assertFalse(saito_check([euler, euler], coxeter_a2()))

    def test_non_member_is_rejected(self):
        x, y = plane_variables()
        with self.assertRaises(NotAllowed):
            saito_check([Derivation((x, y)), Derivation((y, x))], coxeter_a2())

    def test_fwy_333(self):
        generators = fwy_generators(3, 3, 3)
        self.assertEqual([t.degree for t in generators], [4, 5])
        self.assertEqual(generators[0], theta_abc(1, 1, 1))
        self.assertTrue(saito_check(generators, coxeter_a2((3, 3, 3))))


class AppendixTests(SimpleTestCase):
    def test_theta_000_is_euler(self):
        x, y = plane_variables()
        self.assertEqual(theta_abc(0, 0, 0), Derivation((x, y)))
        self.assertEqual(theta_abc(2, 3, 4).degree, 10)

    def test_theta_matches_sympy(self):
        x, y, t = sympy.symbols('x y t')
        antiderivative = sympy.integrate(t ** 2 * (t - x) * (t - y) ** 2, (t, 0, x))
        poly = sympy.Poly(sympy.expand(antiderivative), x, y)
        expected = Polynomial(Q, XY, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})
        self.assertEqual(theta_abc(2, 1, 2).components[0], expected)

    def test_fwy_generators(self):
        self.assertEqual([t.degree for t in fwy_generators(2, 2, 2)], [3, 3])
        x, y = plane_variables()
        self.assertEqual(fwy_generators(2, 2, 2)[0], theta_abc(1, 0, 0) * x)
        for k in range(2, 5):
            self.assertEqual([t.degree for t in fwy_generators(2, k, k)], [k + 1, k + 1])
        for total in range(3, 16):
            for p in range(1, total):
                for q in range(1, total - p):
                    r = total - p - q
                    if not multiplicity_is_balanced((p, q, r)):
                        continue
                    generators = fwy_generators(p, q, r)
                    self.assertEqual(sum(t.degree for t in generators), total)
                    A = coxeter_a2((p, q, r))
                    self.assertTrue(all(theta.is_member(A) for theta in generators), (p, q, r))
                    self.assertTrue(saito_check(generators, A), (p, q, r))

    def test_fwy_rejects_unbalanced(self):
        with self.assertRaises(NotAllowed):
            fwy_generators(1, 1, 3)

    def test_integral_values(self):
        self.assertEqual(integral_I(1, 1, 2), 0)
        self.assertEqual(integral_I(1, 1, 1), Fraction(-1, 2))
        self.assertNotEqual(integral_I(0, 1, 0), 0)

    def test_integral_vanishing_set(self):
        for a in range(7):
            for b in range(7):
                for c in range(7):
                    self.assertEqual(integral_I(a, b, c) == 0, a == b and (a + b + c) % 2 == 0)

    def test_integral_is_theta_of_x_plus_y(self):
        x, y = plane_variables()
        for a, b, c in itertools.product(range(5), repeat=3):
            image = theta_abc(a, b, c).apply((Q(1), Q(1)))
            self.assertEqual(image.evaluate([Q(1), Q(-1)]), integral_I(a, b, c), (a, b, c))
            self.assertEqual(image.divisible_by(x + y), integral_I(a, b, c) == 0, (a, b, c))

    def test_peak_point_min1(self):
        self.assertTrue(peak_point_b2_min1((2, 2, 3, 1)))
        self.assertTrue(peak_point_b2_min1((2, 2, 1, 3)))
        self.assertFalse(peak_point_b2_min1((2, 4, 5, 1)))
        self.assertFalse(peak_point_b2_min1((3, 3, 3, 1)))
        with self.assertRaises(NotAllowed):
            peak_point_b2_min1((2, 2, 2, 2))
        with self.assertRaises(NotAllowed):
            peak_point_b2_min1((1, 1, 5, 1))

    def test_peak_rule_agrees_with_solver(self):
        for m in ((2, 2, 3, 1), (1, 3, 1, 3), (2, 3, 2, 1), (3, 3, 1, 1), (1, 2, 2, 3)):
            solution = rank2_exponents_solver(coxeter_b2(m))
            self.assertEqual(peak_point_b2_min1(m), solution.d2 - solution.d1 == 2)

