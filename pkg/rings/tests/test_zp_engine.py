from fractions import Fraction

from django.test import SimpleTestCase

from rings.expressions import parse_expr
from rings.services.errors import CapacityError, InvalidParameterError
from rings.services.catalog import builtin_catalog
from rings.services.ring_core import materialize
from rings.services.zero_structure import is_field
from rings.services.zp_engine import ann_k_count, product_count_vector, zp_bruteforce, zp_exact, zp_expr


def ring(text):
    return materialize(parse_expr(text))


class ProductCountTest(SimpleTestCase):
    def test_counts_for_z4(self):
        vector = product_count_vector(ring("Z4"), 2)
        self.assertEqual(vector.counts, (8, 2, 4, 2))
        self.assertEqual(vector.total, 16)

    def test_single_factor(self):
        self.assertEqual(ann_k_count(ring("Z6"), 1), 1)

    def test_k_must_be_positive(self):
        with self.assertRaises(InvalidParameterError):
            product_count_vector(ring("Z4"), 0)


class ZpExactTest(SimpleTestCase):
    def test_known_values(self):
        self.assertEqual(zp_exact(ring("Z4"), 2), Fraction(1, 2))
        self.assertEqual(zp_exact(ring("Z4"), 3), Fraction(11, 16))
        self.assertEqual(zp_exact(ring("Z6"), 2), Fraction(5, 12))
        self.assertEqual(zp_exact(ring("Z8"), 2), Fraction(5, 16))
        self.assertEqual(zp_exact(ring("Z3"), 4), Fraction(65, 81))
        self.assertEqual(zp_exact(ring("GF(2^3)"), 4), Fraction(1695, 4096))

    def test_closed_forms_for_z2_and_z4(self):
        for k in range(2, 9):
            with self.subTest(k=k):
                self.assertEqual(zp_exact(ring("Z2"), k), Fraction(2**k - 1, 2**k))
                self.assertEqual(zp_exact(ring("Z4"), k), Fraction(2 ** (k + 1) - k - 2, 2 ** (k + 1)))

    def test_large_k_stays_exact(self):
        self.assertEqual(zp_exact(ring("Z2"), 60), Fraction(2**60 - 1, 2**60))
        self.assertEqual(zp_exact(ring("Z3"), 40), Fraction(3**40 - 2**40, 3**40))

    def test_k_below_two_is_rejected(self):
        with self.assertRaises(InvalidParameterError):
            zp_exact(ring("Z4"), 1)


class OracleTest(SimpleTestCase):
    def test_bruteforce_agrees(self):
        for text in ("Z4", "Z6", "Zq(2,x^2)", "GF(2^2)", "Ideal(Z4,[2])", "Z2 x Z3", "Z9"):
            for k in (2, 3, 4):
                with self.subTest(ring=text, k=k):
                    r = ring(text)
                    self.assertEqual(zp_bruteforce(r, k), zp_exact(r, k))

    def test_bruteforce_cap(self):
        with self.assertRaises(CapacityError):
            zp_bruteforce(ring("Z8"), 4, cap=1000)


class ProductTest(SimpleTestCase):
    def test_factored_matches_materialized(self):
        for text in ("Z2 x Z3", "Z4 x GF(2^2)", "Z2 x (Z3 x Z2)"):
            for k in (2, 3, 4):
                with self.subTest(ring=text, k=k):
                    self.assertEqual(zp_expr(parse_expr(text), k), zp_exact(ring(text), k))

    def test_multiplicativity(self):
        left, right = ring("Z4"), ring("Zq(3,x^2)")
        product = ring("Z4 x Zq(3,x^2)")
        for k in (2, 3, 4):
            self.assertEqual(zp_exact(product, k), zp_exact(left, k) * zp_exact(right, k))

    def test_product_expression_value(self):
        self.assertEqual(zp_expr(parse_expr("Z2 x Z3"), 2), Fraction(5, 12))


class LargeKTest(SimpleTestCase):
    def test_k_far_beyond_recursion_depth(self):
        k = 1500
        self.assertEqual(zp_exact(ring("Z2"), k), Fraction(2**k - 1, 2**k))
        self.assertEqual(zp_exact(ring("Z4"), k), Fraction(2 ** (k + 1) - k - 2, 2 ** (k + 1)))

    def test_smaller_k_after_a_large_one(self):
        r = ring("Z6")
        zp_exact(r, 800)
        self.assertEqual(zp_exact(r, 2), Fraction(5, 12))
        self.assertEqual(product_count_vector(r, 800).total, 6**800)


class CatalogInvariantsTest(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.rings = [(entry.name, entry.ring()) for entry in builtin_catalog(64)]

    def test_count_vectors_sum_to_all_tuples(self):
        for name, r in self.rings:
            for k in range(1, 9):
                with self.subTest(ring=name, k=k):
                    self.assertEqual(product_count_vector(r, k).total, r.n**k)

    def test_zero_counts_grow_with_k(self):
        for name, r in self.rings:
            for k in range(2, 9):
                with self.subTest(ring=name, k=k):
                    self.assertGreaterEqual(ann_k_count(r, k), r.n * ann_k_count(r, k - 1))
                    if k > 2:
                        self.assertGreaterEqual(zp_exact(r, k), zp_exact(r, k - 1))

    def test_field_closed_form_holds_exactly_for_fields(self):
        for name, r in self.rings:
            n = r.n
            for k in range(2, 9):
                with self.subTest(ring=name, k=k):
                    closed = Fraction(n**k - (n - 1) ** k, n**k)
                    self.assertEqual(zp_exact(r, k) == closed, is_field(r))
