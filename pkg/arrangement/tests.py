import json
import os
import tempfile

from django.test import SimpleTestCase

from exactalg.fields import FiniteField, Rationals
from utils.exceptions import NotAllowed, NotFound, ParseError
from .models import Hyperplane, Multiarrangement
from .parsers import arrangement_dump, arrangement_load, arrangement_parse, arrangement_to_json
from .selectors import b2_multiplicity_get
from .services import (
    addition, b2_canonical_permutation, b2_orbit, boolean, coxeter_b2, coxeter_b3, coxeter_bn,
    defining_polynomial, deletion, is_balanced,
)

Q = Rationals()


class HyperplaneTests(SimpleTestCase):
    def test_normalization_is_idempotent(self):
        h = Hyperplane(Q, (0, 2, -4))
        self.assertEqual(h.coefficients, (0, 1, -2))
        self.assertEqual(Hyperplane(Q, h.coefficients), h)

    def test_zero_form_is_rejected(self):
        with self.assertRaises(NotAllowed):
            Hyperplane(Q, (0, 0))


class MultiarrangementTests(SimpleTestCase):
    def test_defining_polynomial_of_b2(self):
        A = coxeter_b2((1, 1, 1, 1))
        x, y = (Hyperplane(Q, f).linear_form() for f in ((1, 0), (0, 1)))
        self.assertEqual(defining_polynomial(A), x * y * (x - y) * (x + y))

    def test_defining_polynomial_of_b2_with_multiplicity(self):
        A = coxeter_b2((2, 4, 1, 4))
        x, y = (Hyperplane(Q, f).linear_form() for f in ((1, 0), (0, 1)))
        self.assertEqual(defining_polynomial(A), x ** 2 * y ** 4 * (x - y) * (x + y) ** 4)
        self.assertEqual(defining_polynomial(A).degree(), A.total)

    def test_empty_arrangement(self):
        self.assertEqual(defining_polynomial(Multiarrangement(Q, 3)), 1)

    def test_deletion(self):
        A = coxeter_b2((2, 4, 1, 4))
        self.assertEqual(b2_multiplicity_get(deletion(A, Hyperplane(Q, (0, 1)))), (2, 3, 1, 4))
        dropped = deletion(A, Hyperplane(Q, (1, -1)))
        self.assertEqual(dropped.size, 3)
        self.assertEqual(b2_multiplicity_get(dropped), (2, 4, 0, 4))
        with self.assertRaises(NotFound):
            deletion(dropped, Hyperplane(Q, (1, -1)))

    def test_deletion_then_addition_restores(self):
        A = coxeter_b2((2, 4, 1, 4))
        for h in A.hyperplanes:
            self.assertEqual(addition(deletion(A, h), h), A)

    def test_balance(self):
        self.assertTrue(is_balanced(coxeter_b2((2, 4, 1, 4))))
        self.assertTrue(is_balanced(coxeter_b2((3, 5, 2, 2))))
        self.assertFalse(is_balanced(coxeter_b2((1, 1, 5, 1))))

    def test_constructors(self):
        self.assertEqual(coxeter_b3().size, 9)
        self.assertEqual(coxeter_bn(4).size, 16)
        self.assertEqual(boolean(3).rank(), 3)
        self.assertEqual(coxeter_b2(field=FiniteField(5)).size, 4)


class B2PermutationTests(SimpleTestCase):
    def test_canonical_examples(self):
        self.assertEqual(b2_canonical_permutation((2, 2, 1, 3)), (1, 3, 2, 2))
        self.assertEqual(b2_canonical_permutation((1, 1, 1, 1)), (1, 1, 1, 1))
        for k in range(4, 8):
            self.assertEqual(b2_canonical_permutation((k, 2, k, 1)), (1, k, 2, k))
            self.assertEqual(b2_canonical_permutation((2, k, 1, k)), (1, k, 2, k))

    def test_canonical_is_constant_on_orbits(self):
        for m in ((2, 4, 1, 4), (3, 5, 2, 2), (1, 2, 3, 4), (2, 2, 2, 2)):
            orbit = b2_orbit(m)
            self.assertLessEqual(len(orbit), 8)
            self.assertEqual({b2_canonical_permutation(p) for p in orbit}, {b2_canonical_permutation(m)})
        self.assertEqual(len(b2_orbit((1, 2, 3, 4))), 8)


class ParserTests(SimpleTestCase):
    def test_parse_text(self):
        A = arrangement_parse('field Q\ndim 2\nH 1 0 m 2  # x\nH 0 1\nH 1 -1 m 1\nH 2 2 m 4\n')
        self.assertEqual(b2_multiplicity_get(A), (2, 1, 1, 4))

    def test_parse_gf9(self):
        A = arrangement_parse('field gf 3 2\ndim 3\nH 1 0 1+t\nH 0 1 2*t m 3\n')
        self.assertEqual(A.field, FiniteField(3, 2))
        self.assertEqual(A.total, 4)

    def test_parse_errors_carry_line_numbers(self):
        with self.assertRaisesMessage(ParseError, 'line 4'):
            arrangement_parse('dim 2\nH 1 0\nH 0 1\nH 2 0\n')
        with self.assertRaisesMessage(ParseError, 'line 2'):
            arrangement_parse('dim 2\nH 1 0 0\n')
        with self.assertRaisesMessage(ParseError, 'line 1'):
            arrangement_parse('plane 1 0\n')
        with self.assertRaisesMessage(ParseError, 'line 1'):
            arrangement_parse('field gf 4\ndim 2\nH 1 0\n')

    def test_text_and_json_files_agree(self):
        A = coxeter_b2((3, 5, 2, 2))
        with tempfile.TemporaryDirectory() as directory:
            text_path = os.path.join(directory, 'b2.arr')
            json_path = os.path.join(directory, 'b2.json')
            with open(text_path, 'w') as handle:
                handle.write(arrangement_dump(A))
            with open(json_path, 'w') as handle:
                json.dump(arrangement_to_json(A), handle)
            self.assertEqual(arrangement_load(text_path), A)
            self.assertEqual(arrangement_load(json_path), A)

    def test_json_schema_violation(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'bad.json')
            with open(path, 'w') as handle:
                json.dump(dict(dim=2, hyperplanes=[dict(m=1)]), handle)
            with self.assertRaises(ParseError):
                arrangement_load(path)

    def test_missing_file(self):
        with self.assertRaises(NotFound):
            arrangement_load('/nonexistent/arrangement.arr')
