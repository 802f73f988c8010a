from django.test import TestCase

from rings.models import VerificationRun


class VerificationRunModelTest(TestCase):
    def test_str_and_status(self):
        run = VerificationRun.objects.create(verb="bounds", ring="Z4", k_range="2..8", status="passed")
        self.assertEqual(str(run), "bounds Z4 k=2..8 (passed)")
        self.assertTrue(run.passed)

    def test_catalog_run(self):
        run = VerificationRun.objects.create(verb="table", status="failed", violation_count=2)
        self.assertEqual(str(run), "table catalog k=- (failed)")
        self.assertFalse(run.passed)
        self.assertEqual(run.report, {})

    def test_newest_first(self):
        first = VerificationRun.objects.create(verb="verify", status="passed")
        second = VerificationRun.objects.create(verb="verify", status="failed")
        self.assertEqual(list(VerificationRun.objects.all()), [second, first])
