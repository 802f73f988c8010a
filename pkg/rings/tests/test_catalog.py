import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from rings.services.catalog import (
    builtin_catalog,
    check_entry,
    dump_manifest,
    load_manifest,
    parse_manifest,
)
from rings.services.errors import CatalogError, InvalidParameterError


class BuiltinCatalogTest(SimpleTestCase):
    def test_order_four_catalog(self):
        names = {entry.name for entry in builtin_catalog(4)}
        self.assertEqual(names, {"Z2", "Z3", "Z4", "Z2[x]/(x^2)", "GF(4)", "Z2 x Z2"})

    def test_order_four_local_trichotomy(self):
        local = [e.name for e in builtin_catalog(4) if e.order == 4 and e.expected_local]
        self.assertEqual(sorted(local), ["GF(4)", "Z2[x]/(x^2)", "Z4"])

    def test_order_eight_local_entries(self):
        local = {e.expr_text for e in builtin_catalog(8) if e.order == 8 and e.expected_local}
        self.assertEqual(local, {"GF(2^3)", "Z8", "Zq(2,x^3)", "Ideal(Z4,[2])", "Ideal(Z2,2)"})

    def test_required_entries_present(self):
        texts = {e.expr_text for e in builtin_catalog(64)}
        for required in ("Z2", "Z3", "Z4", "Zq(2,x^2)", "GF(2^2)", "Z5", "Z7", "Z8", "Zq(2,x^3)",
                         "Ideal(Z4,[2])", "Ideal(Z2,2)", "GF(2^3)", "Z9", "Zq(3,x^2)", "GF(3^2)", "Z6",
                         "Z2 x Z2", "Z10", "Z12", "Z2 x Z4"):
            self.assertIn(required, texts)

    def test_pairwise_products_are_added_once(self):
        entries = builtin_catalog(16)
        texts = [e.expr_text for e in entries]
        self.assertEqual(len(texts), len(set(texts)))
        self.assertIn("Z2 x Z3", texts)
        self.assertIn("Z4 x Z4", texts)
        self.assertNotIn("Z3 x Z2", texts)
        self.assertTrue(all(e.order <= 16 for e in entries))

    def test_sorted_by_order_then_name(self):
        entries = builtin_catalog(12)
        keys = [(e.order, e.name) for e in entries]
        self.assertEqual(keys, sorted(keys))

    def test_entries_match_their_rings(self):
        for entry in builtin_catalog(16):
            with self.subTest(entry=entry.name):
                self.assertEqual(check_entry(entry), [])

    def test_order_limits(self):
        with self.assertRaises(InvalidParameterError):
            builtin_catalog(1)
        with self.assertRaises(InvalidParameterError):
            builtin_catalog(65)


class ManifestTest(SimpleTestCase):
    def test_parse_with_comments(self):
        entries = parse_manifest("# header\nZ8 | Z8 | true | false  # cyclic\n\nA | Z2 x Z3 | false | -\n")
        self.assertEqual([e.name for e in entries], ["Z8", "A"])
        self.assertIsNone(entries[1].expected_zsq_zero)
        self.assertEqual(entries[1].order, 6)

    def test_bad_lines(self):
        with self.assertRaisesMessage(CatalogError, "line 1"):
            parse_manifest("Z8 | Z8 | true")
        with self.assertRaisesMessage(CatalogError, "line 2"):
            parse_manifest("Z2 | Z2 | true | true\nZ3 | Z3 | yes | true")
        with self.assertRaises(CatalogError):
            parse_manifest("bad | Ideal(Z4,[3]) | true | true")

    def test_dump_then_load(self):
        entries = builtin_catalog(6)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "catalog.txt"
            path.write_text(dump_manifest(entries), encoding="utf-8")
            reloaded = load_manifest(path)
        self.assertEqual([(e.name, e.expr) for e in reloaded], [(e.name, e.expr) for e in entries])

    def test_missing_manifest(self):
        with self.assertRaises(CatalogError):
            load_manifest(Path("/nonexistent/catalog.txt"))

    def test_manifest_from_settings(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "mini.txt"
            path.write_text("Z2 | Z2 | true | true\nZ3 | Z3 | true | true\n", encoding="utf-8")
            with override_settings(RINGS_CATALOG_MANIFEST=path):
                names = [e.name for e in builtin_catalog(8)]
        self.assertEqual(names, ["Z2", "Z3", "Z2 x Z2", "Z2 x Z3"])
