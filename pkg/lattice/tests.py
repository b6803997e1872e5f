from math import comb

from django.test import SimpleTestCase

from arrangement.models import Hyperplane, Multiarrangement
from arrangement.selectors import b2_multiplicity_get
from arrangement.services import b3_n_k, boolean, coxeter_b2, coxeter_b3, coxeter_bn
from exactalg.fields import Rationals
from utils.exceptions import NotAllowed, NotFound
from utils.fakers import PROPERTY_CASES, random_form
from .isomorphism import lattice_isomorphic
from .selectors import rank2_profile, restriction_sizes, simple_lmp_get
from .services import (
    characteristic_polynomial, essentialize, flat_span, intersection_lattice, localization, restriction,
)

Q = Rationals()
GENERIC_FOUR = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def random_arrangement(size, dim=3):
    forms = []
    while len(forms) < size:
        h = Hyperplane(Q, random_form(dim))
        if h not in forms:
            forms.append(h)
    return Multiarrangement(Q, dim, [(h, 1) for h in forms])


class IntersectionLatticeTests(SimpleTestCase):
    def test_b2(self):
        lattice = intersection_lattice(coxeter_b2())
        self.assertEqual([len(lattice.flats(r)) for r in range(3)], [1, 4, 1])
        self.assertEqual(len(lattice.flats(2)[0].members), 4)
        self.assertEqual(lattice.flats(2)[0].mobius, 3)

    def test_boolean(self):
        lattice = intersection_lattice(boolean(3))
        self.assertEqual([len(lattice.flats(r)) for r in range(4)], [1, 3, 3, 1])
        self.assertEqual({f.mobius for f in lattice.flats(1)}, {-1})
        self.assertEqual({f.mobius for f in lattice.flats(2)}, {1})
        self.assertEqual(lattice.flats(3)[0].mobius, -1)

    def test_rank_four_needs_max_rank(self):
        with self.assertRaises(NotAllowed):
            intersection_lattice(coxeter_bn(4))
        partial = intersection_lattice(coxeter_bn(4), max_rank=2)
        self.assertFalse(partial.complete)
        self.assertEqual(len(partial.flats(1)), 16)

    def test_every_pair_lies_on_one_rank_two_flat(self):
        for _ in range(5):
            lattice = intersection_lattice(random_arrangement(6))
            n = lattice.arrangement.size
            for i in range(n):
                for j in range(i + 1, n):
                    self.assertEqual(sum(1 for f in lattice.flats(2) if {i, j} <= f.members), 1)


class CharacteristicPolynomialTests(SimpleTestCase):
    def test_empty(self):
        self.assertEqual(str(characteristic_polynomial(Multiarrangement(Q, 3))), 't^3')

    def test_b3(self):
        chi = characteristic_polynomial(coxeter_b3())
        self.assertEqual(chi.coefficients, (1, -9, 23, -15))
        self.assertEqual(str(chi), 't^3 - 9*t^2 + 23*t - 15')
        self.assertEqual((chi.b1, chi.b2), (8, 15))

    def test_random_arrangements(self):
        for _ in range(PROPERTY_CASES):
            lattice = intersection_lattice(random_arrangement(5))
            chi = characteristic_polynomial(lattice)
            self.assertEqual(chi.evaluate(1), 0)
            self.assertEqual(chi.coefficients[1], -lattice.arrangement.size)
            if lattice.rank == 3:
                self.assertEqual(chi.coefficients[2], simple_lmp_get(lattice))
                profile = rank2_profile(lattice)
                n = lattice.arrangement.size
                higher = sum(comb(i, 2) * count for i, count in profile.items() if i > 2)
                self.assertEqual(profile.get(2, 0), comb(n, 2) - higher)


class LocalizationTests(SimpleTestCase):
    def test_b3_localization_at_xy(self):
        for k in (3, 4, 5):
            A = b3_n_k(k)
            X = flat_span(A, [A.hyperplane((1, 0, 0)), A.hyperplane((0, 1, 0))])
            local = essentialize(localization(A, X))
            self.assertEqual(b2_multiplicity_get(local), (2, k, 1, k))

    def test_ambient_and_generic_localizations(self):
        A = Multiarrangement.from_forms(GENERIC_FOUR)
        lattice = intersection_lattice(A)
        self.assertEqual(localization(A, lattice.flats(0)[0]).size, 0)
        self.assertEqual({localization(A, X).size for X in lattice.flats(2)}, {2})
        self.assertEqual(localization(A, lattice.flats(3)[0]), A)

    def test_foreign_flat_is_rejected(self):
        A = boolean(3)
        X = intersection_lattice(coxeter_b3()).flats(2)[0]
        with self.assertRaises(NotFound):
            localization(A, X)

    def test_restrictions(self):
        A = boolean(3)
        X = flat_span(A, [A.hyperplane((0, 0, 1))])
        self.assertEqual(restriction(A, X).size, 2)
        B3 = coxeter_b3()
        restricted = restriction(B3, flat_span(B3, [B3.hyperplane((0, 0, 1))]))
        self.assertEqual(b2_multiplicity_get(restricted), (1, 1, 1, 1))
        self.assertEqual(restriction_sizes(intersection_lattice(B3))[B3.index(B3.hyperplane((0, 0, 1)))], 4)


class ProfileAndIsomorphismTests(SimpleTestCase):
    def test_profiles(self):
        self.assertEqual(rank2_profile(intersection_lattice(Multiarrangement.from_forms(GENERIC_FOUR))), {2: 6})
        self.assertEqual(rank2_profile(intersection_lattice(boolean(3))), {2: 3})

    def test_isomorphic_to_itself(self):
        lattice = intersection_lattice(coxeter_b3())
        self.assertTrue(lattice_isomorphic(lattice, intersection_lattice(coxeter_b3())))

    def test_boolean_and_generic_triples_agree(self):
        generic = Multiarrangement.from_forms(((1, 1, 0), (0, 1, 1), (1, 0, 2)))
        self.assertTrue(lattice_isomorphic(intersection_lattice(boolean(3)), intersection_lattice(generic)))

    def test_non_isomorphic_pair(self):
        first = Multiarrangement.from_forms(GENERIC_FOUR)
        second = Multiarrangement.from_forms(((1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1)))
        self.assertFalse(lattice_isomorphic(intersection_lattice(first), intersection_lattice(second)))

    def test_relabelled_arrangement_is_isomorphic(self):
        A = coxeter_b3()
        swapped = Multiarrangement.from_forms([(h.coefficients[2], h.coefficients[0], h.coefficients[1])
                                               for h in A.hyperplanes])
        self.assertTrue(lattice_isomorphic(intersection_lattice(A), intersection_lattice(swapped)))
