from fractions import Fraction

from django.test import SimpleTestCase

from rings.expressions import parse_expr
from rings.services import formulas
from rings.services.catalog import builtin_catalog
from rings.services.errors import InvalidParameterError
from rings.services.ring_core import materialize
from rings.services.zp_engine import zp_expr
from rings.services.verification import (
    CATALOG_SCOPE,
    m2_references,
    multiplicativity,
    oracle_equivalence,
    reference_value_table,
    reference_rings,
    verify_bk_monotonicity,
    verify_bounds,
    verify_catalog,
    verify_classification,
    verify_global_max,
    verify_isomorphism,
    verify_m2_classification,
    verify_order_p2,
    verify_polynomial_identities,
    verify_prime_constraint,
    verify_zn_products,
)


def ring(text):
    return materialize(parse_expr(text))


class VerifyBoundsTest(SimpleTestCase):
    def test_z4_at_k2(self):
        report = verify_bounds(ring("Z4"), 2)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.value, Fraction(1, 2))
        self.assertTrue(report.flags["t1_exact_at_k2"])
        t2_upper = next(b for b in report.bounds if b.id == formulas.T2_UPPER)
        self.assertEqual(t2_upper.upper, Fraction(1, 2))
        self.assertTrue(t2_upper.attained)

    def test_field_attains_t2_lower(self):
        report = verify_bounds(ring("GF(2^3)"), 5)
        self.assertTrue(report.passed, report.violations)
        t2_lower = next(b for b in report.bounds if b.id == formulas.T2_LOWER)
        self.assertTrue(t2_lower.attained)
        self.assertFalse(report.flags["t1_exact_at_k2"])
        self.assertIn(formulas.C28_LOWER, [b.id for b in report.bounds])

    def test_z8_does_not_attain_t2_upper(self):
        report = verify_bounds(ring("Z8"), 2)
        self.assertTrue(report.passed, report.violations)
        t2_upper = next(b for b in report.bounds if b.id == formulas.T2_UPPER)
        self.assertFalse(t2_upper.attained)
        self.assertFalse(report.flags["zsq_zero"])

    def test_c25_only_at_k3(self):
        ids = [b.id for b in verify_bounds(ring("Z9"), 3).bounds]
        self.assertIn(formulas.C25_LOWER, ids)
        self.assertNotIn(formulas.C25_LOWER, [b.id for b in verify_bounds(ring("Z9"), 4).bounds])

    def test_product_gets_t6(self):
        report = verify_bounds(ring("Z12"), 2)
        self.assertTrue(report.passed, report.violations)
        t6 = next(b for b in report.bounds if b.id == formulas.T6)
        self.assertEqual(t6.upper, Fraction(5, 18))
        self.assertTrue(t6.attained)

    def test_full_catalog_sweep(self):
        for entry in builtin_catalog(64):
            r = entry.ring()
            for k in range(2, 9):
                with self.subTest(ring=entry.name, k=k):
                    report = verify_bounds(r, k)
                    self.assertTrue(report.passed, report.violations)

    def test_rejects_small_k(self):
        with self.assertRaises(InvalidParameterError):
            verify_bounds(ring("Z2"), 1)


class ClassificationTest(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.catalog = builtin_catalog(16)

    def test_counts(self):
        for k, count in ((2, 7), (4, 6), (6, 5), (8, 5)):
            with self.subTest(k=k):
                report = verify_classification(k, self.catalog)
                self.assertTrue(report.passed, report.violations)
                self.assertEqual(report.details["count"], count)
                self.assertEqual(len(reference_rings(k)), count)
                self.assertEqual(report.scope, CATALOG_SCOPE)

    def test_boundary_rings_at_k4(self):
        report = verify_classification(4, self.catalog)
        self.assertEqual(report.details["threshold"], Fraction(3, 4))
        self.assertIn("Z4*Z2", report.details["members"])
        self.assertIn("Z2*(Z2)^2", report.details["members"])
        for text in ("Ideal(Z4,[2])", "Ideal(Z2,2)"):
            self.assertEqual(zp_expr(parse_expr(text), 4), report.details["threshold"])

    def test_needs_order_nine(self):
        with self.assertRaises(InvalidParameterError):
            verify_classification(2, builtin_catalog(8))


class CatalogChecksTest(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.catalog = builtin_catalog(16)
        cls.small = builtin_catalog(8)

    def test_catalog_entries(self):
        report = verify_catalog(self.catalog)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.details["entries"], len(self.catalog))
        self.assertEqual(len(report.details["idealizations"]), 4)

    def test_prime_constraint(self):
        for k, primes in ((2, [2, 3, 5, 7]), (5, [2, 3]), (9, [2])):
            with self.subTest(k=k):
                report = verify_prime_constraint(k, self.catalog)
                self.assertTrue(report.passed, report.violations)
                self.assertEqual(report.details["allowed_primes"], primes)

    def test_global_max(self):
        catalog = builtin_catalog(64)
        for k in range(2, 9):
            with self.subTest(k=k):
                report = verify_global_max(k, catalog)
                self.assertTrue(report.passed, report.violations)
                self.assertEqual(report.details["attained_by"], ["Z2"])
                self.assertEqual(report.value, Fraction(2**k - 1, 2**k))

    def test_m2_classification(self):
        report = verify_m2_classification(self.catalog)
        self.assertTrue(report.passed, report.violations)
        self.assertIn("Z4", report.details["checked"])
        self.assertIn("Z8", report.details["checked"])
        self.assertEqual(len(m2_references(2, 1)), 1)

    def test_order_p2(self):
        report = verify_order_p2(3, builtin_catalog(9))
        self.assertTrue(report.passed, report.violations)
        self.assertIn("Z9", report.details["rings"])
        self.assertIn("Z2 x Z2", report.details["rings"])

    def test_oracle_equivalence(self):
        report = oracle_equivalence(self.small)
        self.assertTrue(report.passed, report.violations)
        self.assertGreaterEqual(report.details["cases"], 30)

    def test_multiplicativity(self):
        report = multiplicativity(builtin_catalog(64), max_order=64)
        self.assertTrue(report.passed, report.violations)
        self.assertGreater(report.details["pairs"], 0)

    def test_isomorphism(self):
        report = verify_isomorphism(self.small, ks=(2, 3))
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(sorted(report.details["local_order_4"]), ["GF(4)", "Z2[x]/(x^2)", "Z4"])
        self.assertEqual(len(report.details["local_order_8"]), 5)
        self.assertGreaterEqual(report.details["isomorphic_pairs"], 1)


class ClosedFormChecksTest(SimpleTestCase):
    def test_zn_products(self):
        self.assertTrue(verify_zn_products().passed)

    def test_polynomial_identities(self):
        report = verify_polynomial_identities()
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.details["cases"], 1136)

    def test_bk_monotonicity(self):
        report = verify_bk_monotonicity()
        self.assertTrue(report.passed, report.violations)

    def test_value_table(self):
        rows, report = reference_value_table()
        self.assertEqual(len(rows), 22)
        self.assertTrue(report.passed, report.violations)
        self.assertTrue(all(row.passed for row in rows))
        z3 = next(row for row in rows if row.ring == "Z3")
        self.assertEqual(z3.computed, Fraction(65, 81))
