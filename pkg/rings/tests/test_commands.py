import json
from fractions import Fraction
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from rings.models import VerificationRun


def run_command(name, **options):
    out = StringIO()
    call_command(name, stdout=out, **options)
    return out.getvalue()


class ComputeCommandTest(SimpleTestCase):
    def test_text_output(self):
        output = run_command("compute", ring="Z3", k="4")
        self.assertIn("Z3 k=4: 65/81 ~ 0.8024691358", output)

    def test_product_is_factored(self):
        self.assertIn("5/12", run_command("compute", ring="Z2 x Z3", k="2"))

    def test_range(self):
        lines = run_command("compute", ring="Z2", k="2..4").splitlines()
        self.assertEqual([line.split(": ")[1].split(" ")[0] for line in lines], ["3/4", "7/8", "15/16"])

    def test_json(self):
        data = json.loads(run_command("compute", ring="Z4", k="4", fmt="json"))
        self.assertEqual(data["verb"], "compute")
        self.assertEqual(data["reports"][0]["value"], "13/16")
        self.assertEqual(data["exit_code"], 0)

    def test_large_k(self):
        output = run_command("compute", ring="Z2", k="500")
        self.assertTrue(output.startswith(f"Z2 k=500: {2**500 - 1}/{2**500} ~ "))

    def test_csv(self):
        output = run_command("compute", ring="Z2", k="3", fmt="csv")
        self.assertEqual(output.splitlines()[0], "ring,k,value,decimal")
        self.assertIn("Z2,3,7/8,0.875", output)


class ExitCodeTest(SimpleTestCase):
    def assertExit(self, code, name, **options):
        with self.assertRaises(CommandError) as ctx:
            run_command(name, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception

    def test_usage_and_parse_errors(self):
        self.assertExit(2, "compute", k="2")
        self.assertExit(2, "compute", ring="Z4", k="1")
        self.assertExit(2, "compute", ring="Z4", k="a")
        self.assertExit(2, "compute", ring="Z4 x", k="2")

    def test_semantic_error(self):
        error = self.assertExit(2, "compute", ring="Ideal(Z4,[3])", k="2")
        self.assertIn("3 does not divide 4", str(error))

    def test_catalog_order_out_of_range(self):
        self.assertExit(2, "catalog", max_order=65)
        self.assertExit(2, "classify", k="2", max_order=1)

    def test_capacity(self):
        self.assertExit(3, "compute", ring="Z5000", k="2")
        self.assertExit(3, "compute", ring="Z8", k="2", materialize_cap=4)

    def test_failed_verification(self):
        with patch("rings.services.verification.REFERENCE_VALUES", [("Z2", 2, Fraction(1, 2))]):
            self.assertExit(1, "table")


class BoundsCommandTest(SimpleTestCase):
    def test_json_bounds(self):
        data = json.loads(run_command("bounds", ring="Z4", k="2", fmt="json"))
        report = data["reports"][0]
        t2_upper = next(b for b in report["bounds"] if b["id"] == "t2.upper")
        self.assertEqual(t2_upper["upper"], "1/2")
        self.assertTrue(t2_upper["attained"])
        self.assertNotIn("lower", t2_upper)
        self.assertTrue(report["passed"])

    def test_text_bounds(self):
        output = run_command("bounds", ring="GF(2^2)", k="3")
        self.assertIn("GF(2^2) k=3: 37/64", output)
        self.assertIn("[ok] t2.lower attained iff field", output)
        self.assertNotIn("VIOLATED", output)


class VerifyCommandTest(SimpleTestCase):
    def test_single_ring(self):
        output = run_command("verify", ring="Ideal(Z4,[2])", k="2..4")
        self.assertTrue(output.strip().endswith("PASS"))

    def test_small_catalog(self):
        output = run_command("verify", max_order=8, k="2..3")
        self.assertIn("0 violation(s): PASS", output)
        self.assertIn("catalog-relative", output)


class TableAndCatalogCommandTest(SimpleTestCase):
    def test_table(self):
        output = run_command("table")
        self.assertIn("Z3", output)
        self.assertTrue(output.strip().endswith("PASS"))
        self.assertNotIn("FAIL", output)

    def test_table_csv(self):
        output = run_command("table", fmt="csv")
        self.assertEqual(output.splitlines()[0], "ring,k,expected,computed,passed")
        self.assertEqual(len(output.splitlines()), 23)

    def test_catalog_listing(self):
        output = run_command("catalog", max_order=4)
        self.assertIn("Z2[x]/(x^2)", output)
        self.assertEqual(len(output.splitlines()), 6)

    def test_catalog_export(self):
        output = run_command("catalog", max_order=4, export=True)
        self.assertIn("Z2 | Z2 | true | true", output)
        self.assertIn("Z2 x Z2 | Z2 x Z2 | false | false", output)


class ClassifyCommandTest(TestCase):
    def test_counts(self):
        output = run_command("classify", k="2", max_order=16)
        self.assertIn("k=2: 7 local rings with zp_k >= 3/8", output)
        self.assertFalse(VerificationRun.objects.exists())

    def test_record(self):
        output = run_command("classify", k="4", max_order=16, record=True)
        run = VerificationRun.objects.get()
        self.assertIn(f"Recorded verification run #{run.pk}", output)
        self.assertEqual(run.verb, "classify")
        self.assertEqual(run.k_range, "4")
        self.assertTrue(run.passed)
        self.assertEqual(run.report["reports"][0]["details"]["count"], 6)
