import random

import numpy as np
from django.test import SimpleTestCase

from rings.expressions import GF, Idealize, IdealizePower, Product, Zn, parse_expr
from rings.services.catalog import builtin_catalog
from rings.services.errors import CapacityError, InvalidParameterError
from rings.services.isomorphism import iso_check
from rings.services.polynomials import Polynomial, is_irreducible, parse_polynomial, smallest_irreducible
from rings.services.ring_core import (
    TableRing,
    build_gf,
    build_product,
    build_zn,
    materialize,
    module_tables,
    validate_ring,
)
from rings.services.zero_structure import is_field

SMALL_RINGS = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
    "Zq(2,x^2)", "GF(2^2)", "GF(2^3)", "Zq(2,x^3)",
    "Ideal(Z4,[2])", "Ideal(Z2,2)", "Z2 x Z2", "Z2 x Z4", "Z2 x Z3",
]


class PolynomialTest(SimpleTestCase):
    def test_smallest_irreducibles(self):
        self.assertEqual(smallest_irreducible(2, 2).coefficients, (1, 1, 1))
        self.assertEqual(smallest_irreducible(2, 3).coefficients, (1, 1, 0, 1))
        self.assertEqual(str(smallest_irreducible(2, 3)), "x^3+x+1")
        self.assertEqual(smallest_irreducible(3, 2).coefficients, (1, 0, 1))
        self.assertEqual(str(smallest_irreducible(3, 1)), "x")
        self.assertEqual(str(smallest_irreducible(2, 4)), "x^4+x+1")

    def test_parse_and_format(self):
        poly = parse_polynomial("x^3+2x+1", 3)
        self.assertEqual(poly.coefficients, (1, 2, 0, 1))
        self.assertEqual(str(poly), "x^3+2x+1")

    def test_irreducibility_needs_prime_modulus(self):
        with self.assertRaises(InvalidParameterError):
            is_irreducible(Polynomial((1, 1, 1), 4))


class BuildersTest(SimpleTestCase):
    def test_every_small_ring_satisfies_the_axioms(self):
        for text in SMALL_RINGS:
            with self.subTest(ring=text):
                ring = materialize(parse_expr(text))
                diagnostic = validate_ring(ring)
                self.assertTrue(diagnostic.ok, diagnostic.message)

    def test_orders_and_labels(self):
        ring = materialize(parse_expr("Ideal(Z4,[2])"))
        self.assertEqual(ring.n, 8)
        self.assertEqual(ring.label, "Ideal(Z4,[2])")
        self.assertEqual(materialize(parse_expr("GF(3^2)")).n, 9)

    def test_galois_fields_are_fields(self):
        self.assertTrue(is_field(build_gf(2, 3)))
        self.assertTrue(is_field(build_gf(3, 2, Polynomial((2, 1, 1), 3))))

    def test_reducible_field_polynomial_is_rejected(self):
        with self.assertRaises(InvalidParameterError):
            build_gf(2, 2, Polynomial((1, 0, 1), 2))

    def test_tables_are_read_only(self):
        ring = build_zn(5)
        with self.assertRaises(ValueError):
            ring.mul[1, 1] = 0

    def test_capacity(self):
        with self.assertRaises(CapacityError):
            materialize(Zn(10), cap=8)
        with self.assertRaises(CapacityError):
            materialize(parse_expr("Z4 x Z4"), cap=8)

    def test_prime_fields_of_degree_one_are_integers_mod_p(self):
        for p in (2, 3, 5, 7, 11, 13):
            with self.subTest(p=p):
                self.assertTrue(iso_check(build_gf(p, 1), build_zn(p)))

    def test_direct_product_records_its_factors(self):
        ring = build_product(build_zn(2), build_gf(3, 2))
        self.assertEqual(ring.origin, Product(Zn(2), GF(3, 2)))
        self.assertEqual(ring.n, 18)

    def test_module_part_of_every_idealization_squares_to_zero(self):
        for entry in builtin_catalog(64):
            if not isinstance(entry.expr, (Idealize, IdealizePower)):
                continue
            ring = entry.ring()
            module = module_tables(entry.expr)
            pure = module.base.zero * module.size + np.arange(module.size)
            with self.subTest(ring=entry.name):
                products = np.asarray(ring.mul)[pure[:, None], pure[None, :]]
                self.assertTrue((products == ring.zero).all())


class ValidateRingTest(SimpleTestCase):
    def _copy(self, ring, add=None, mul=None, zero=None, one=None):
        return TableRing(
            n=ring.n,
            add=ring.add if add is None else add,
            mul=ring.mul if mul is None else mul,
            zero=ring.zero if zero is None else zero,
            one=ring.one if one is None else one,
            label=f"{ring.label}'",
        )

    def test_zero_equal_to_one_is_rejected(self):
        ring = build_zn(3)
        diagnostic = validate_ring(self._copy(ring, one=0))
        self.assertFalse(diagnostic)
        self.assertEqual(diagnostic.axiom, "nontrivial")

    def test_out_of_range_entry_is_rejected(self):
        ring = build_zn(4)
        add = np.array(ring.add)
        add[1, 2] = 9
        self.assertEqual(validate_ring(self._copy(ring, add=add)).axiom, "addition closure")

    def test_broken_commutativity_reports_witness(self):
        ring = build_zn(5)
        mul = np.array(ring.mul)
        mul[2, 3] = 0
        diagnostic = validate_ring(self._copy(ring, mul=mul))
        self.assertEqual(diagnostic.axiom, "multiplicative commutativity")
        self.assertIn(diagnostic.witness, [(2, 3), (3, 2)])

    def test_random_single_entry_corruptions_are_rejected(self):
        rng = random.Random(20240611)
        rings = [materialize(parse_expr(text)) for text in SMALL_RINGS]
        for trial in range(100):
            ring = rng.choice(rings)
            table_name = rng.choice(["add", "mul"])
            table = np.array(getattr(ring, table_name))
            i, j = rng.randrange(ring.n), rng.randrange(ring.n)
            table[i, j] = rng.choice([v for v in range(ring.n) if v != table[i, j]])
            corrupted = self._copy(ring, **{table_name: table})
            with self.subTest(trial=trial, ring=ring.label, table=table_name, cell=(i, j)):
                self.assertFalse(validate_ring(corrupted).ok)
