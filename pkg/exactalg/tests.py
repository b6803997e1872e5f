import pickle
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from utils.exceptions import NotAllowed
from utils.fakers import fake_data_generator, random_rational
from .fields import FieldSpec, FiniteField, Rationals, field_make
from .matrices import Matrix, polynomial_determinant
from .polynomials import Polynomial, monomials

Q = Rationals()
XY = ('x', 'y')


def poly_from_sympy(expr, variables=XY):
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(variables))
    return Polynomial(Q, variables, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


class FieldTests(SimpleTestCase):
    def test_rational_arithmetic(self):
        self.assertEqual(Q('1/3') + Q('1/6'), Fraction(1, 2))

    def test_prime_field(self):
        field = field_make(FieldSpec.finite(3))
        self.assertEqual(field(2) * field(2), field.one)

    def test_gf9_with_default_modulus(self):
        field = field_make(FieldSpec.finite(3, 2))
        self.assertEqual(field.modulus, (1, 0))
        self.assertEqual(len(field.elements()), 9)
        w = field.generator
        self.assertNotIn(w, [field(0), field(1), field(2)])
        self.assertEqual(w * w, field(-1))

    def test_every_nonzero_element_has_order_dividing_q_minus_one(self):
        for field in (FiniteField(5), FiniteField(3, 2), FiniteField(2, 2), FiniteField(7, 2)):
            for a in field.elements():
                if a:
                    self.assertEqual(a ** (field.order - 1), field.one)
                    self.assertEqual(a * a.inverse(), field.one)

    def test_distributivity_on_random_triples(self):
        field = FiniteField(5, 2)
        elements = field.elements()
        for _ in range(50):
            a, b, c = (fake_data_generator.random_element(elements) for _ in range(3))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_rejects_bad_fields(self):
        with self.assertRaises(NotAllowed):
            FiniteField(9)
        with self.assertRaises(NotAllowed):
            FiniteField(3, 2, (2, 0))  # t^2+2 = (t-1)(t+1) mod 3
        with self.assertRaises(NotAllowed):
            FiniteField(3, 3)

    def test_parse_and_format(self):
        field = FiniteField(3, 2)
        self.assertEqual(field.parse('1+2*t'), field(1) + field.generator * 2)
        self.assertEqual(field.format(field.parse('2+t')), '2+t')
        self.assertEqual(field.parse('-t'), -field.generator)
        self.assertEqual(field.parse('2*w+1'), field.parse('1+2*t'))
        self.assertEqual(FieldSpec.parse('gf:3:2'), FieldSpec.finite(3, 2))
        self.assertEqual(FieldSpec.parse('Q'), FieldSpec.rationals())
        self.assertEqual(FieldSpec.parse('gf 3 2 t^2+1').modulus, (1, 0))


class PolynomialTests(SimpleTestCase):
    def setUp(self):
        self.x = Polynomial.variable(Q, XY, 0)
        self.y = Polynomial.variable(Q, XY, 1)

    def test_ring_axioms_on_random_samples(self):
        for _ in range(20):
            a, b, c = (self.x * random_rational() + self.y * random_rational() + random_rational()
                       for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_exact_division(self):
        product = (self.x - self.y) ** 3 * (self.x + self.y)
        self.assertEqual(product.exact_div(self.x - self.y), (self.x - self.y) ** 2 * (self.x + self.y))
        self.assertIsNone(product.exact_div(self.x))

    def test_substitute_and_evaluate(self):
        p = self.x ** 2 - self.y
        shifted = p.substitute([self.x + 1, self.y])
        self.assertEqual(shifted.evaluate([Q(1), Q(2)]), Q(2))
        self.assertEqual(shifted, poly_from_sympy('(x+1)**2 - y'))

    def test_integrate_matches_sympy(self):
        p = (self.x - self.y) ** 3 * self.y
        x, y = sympy.symbols('x y')
        self.assertEqual(p.integrate(0), poly_from_sympy(sympy.integrate((x - y) ** 3 * y, x)))

    def test_monomials(self):
        self.assertEqual(monomials(2, 2), [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(len(monomials(3, 4)), 15)

    def test_format(self):
        self.assertEqual(str(self.x * self.y ** 2 - self.x ** 2 * self.y), '-x^2*y + x*y^2')
        self.assertEqual(str(Polynomial(Q, XY)), '0')


class MatrixTests(SimpleTestCase):
    def test_kernel_of_identity_is_empty(self):
        self.assertEqual(Matrix(Q, [[Q(1), Q(0)], [Q(0), Q(1)]]).kernel_basis(), [])

    def test_kernel_of_row(self):
        self.assertEqual(Matrix(Q, [[Q(1), Q(-1)]]).kernel_basis(), [(Q(1), Q(1))])

    def test_kernel_vectors_are_independent_solutions(self):
        for _ in range(10):
            rows = [[random_rational() for _ in range(5)] for _ in range(3)]
            matrix = Matrix(Q, rows)
            basis = matrix.kernel_basis()
            self.assertEqual(len(basis), 5 - matrix.rank())
            for v in basis:
                self.assertTrue(all(value == 0 for value in matrix.apply(v)))
            if basis:
                self.assertEqual(Matrix(Q, basis).rank(), len(basis))

    def test_polynomial_determinants(self):
        x = Polynomial.variable(Q, XY, 0)
        y = Polynomial.variable(Q, XY, 1)
        zero = Polynomial(Q, XY)
        self.assertEqual(polynomial_determinant([[x, zero], [zero, y]]), x * y)
        self.assertTrue(polynomial_determinant([[x, y], [x, y]]).is_zero())
        euler_and_square = polynomial_determinant([[x, y], [x ** 2, y ** 2]])
        self.assertEqual(euler_and_square, -(x * y * (x - y)))

    def test_determinant_matches_sympy_and_alternates(self):
        x = Polynomial.variable(Q, XY, 0)
        y = Polynomial.variable(Q, XY, 1)
        sx, sy = sympy.symbols('x y')
        for _ in range(5):
            entries = [[fake_data_generator.random_int(-2, 2) for _ in range(3)] for _ in range(16)]
            rows = [[x * a + y * b + c for a, b, c in entries[4 * i:4 * i + 4]] for i in range(4)]
            expected = sympy.Matrix(4, 4, [sx * a + sy * b + c for a, b, c in entries]).det()
            determinant = polynomial_determinant(rows)
            self.assertEqual(determinant, poly_from_sympy(expected))
            swapped = [rows[1], rows[0]] + rows[2:]
            self.assertEqual(polynomial_determinant(swapped), -determinant)

    def test_non_square_is_rejected(self):
        x = Polynomial.variable(Q, XY, 0)
        with self.assertRaises(NotAllowed):
            polynomial_determinant([[x, x]])
        with self.assertRaises(NotAllowed):
            Matrix(Q, [[Q(1), Q(2)]]).determinant()


class FiniteFieldAlgebraTests(SimpleTestCase):
    def setUp(self):
        self.field = FiniteField(3, 2)
        self.w = self.field.generator
        self.x = Polynomial.variable(self.field, XY, 0)
        self.y = Polynomial.variable(self.field, XY, 1)

    def test_domain_round_trip(self):
        for field in (Q, FiniteField(5), self.field):
            for a in ([Q('2/3'), Q(-4)] if field is Q else field.elements()):
                self.assertEqual(field.from_domain(field.to_domain(a)), a)

    def test_gf9_polynomial_arithmetic(self):
        p = self.x + self.y * self.w
        self.assertEqual(p.coefficient((0, 1)), self.w)
        self.assertEqual((p * p).coefficient((0, 2)), self.w * self.w)
        self.assertEqual((p * (self.x - self.y)).exact_div(p), self.x - self.y)
        self.assertIsNone((self.x * self.y).exact_div(p))
        self.assertEqual(p.evaluate([self.field(1), self.w]), self.field(0))
        self.assertEqual(str(p), 'x + t*y')

    def test_frobenius_in_characteristic_three(self):
        p = self.x + self.y * self.w
        self.assertEqual(p ** 3, self.x ** 3 + self.y ** 3 * self.w ** 3)

    def test_integration_needs_characteristic_zero(self):
        with self.assertRaises(NotAllowed):
            self.x.integrate(0)

    def test_gf9_rank_and_kernel(self):
        w, one = self.w, self.field.one
        matrix = Matrix(self.field, [[one, w, w * w], [w, w * w, w ** 3]])
        self.assertEqual(matrix.rank(), 1)
        basis = matrix.kernel_basis()
        self.assertEqual(len(basis), 2)
        for v in basis:
            self.assertTrue(all(not value for value in matrix.apply(v)))

    def test_gf9_determinants(self):
        w, one = self.w, self.field.one
        self.assertEqual(Matrix(self.field, [[one, w], [w, one]]).determinant(), one - w * w)
        self.assertEqual(polynomial_determinant([[self.x, self.y * w], [self.y, self.x]]),
                         self.x ** 2 - self.y ** 2 * w)

    def test_prime_field_rref(self):
        field = FiniteField(5)
        reduced, pivots = Matrix(field, [[2, 4, 1], [1, 2, 4]]).rref()
        self.assertEqual(pivots, (0, 2))
        self.assertEqual(reduced[0], (field(1), field(2), field(0)))

    def test_polynomials_pickle(self):
        p = self.x ** 2 + self.y * self.w
        self.assertEqual(pickle.loads(pickle.dumps(p)), p)
