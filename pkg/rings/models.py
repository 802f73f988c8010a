from django.db import models


class VerificationRun(models.Model):
    VERB_CHOICES = [
        ("compute", "Compute"),
        ("bounds", "Bounds"),
        ("verify", "Verify"),
        ("classify", "Classify"),
        ("table", "Reference value table"),
        ("catalog", "Catalog"),
    ]

    STATUS_CHOICES = [
        ("passed", "Passed"),
        ("failed", "Failed"),
    ]

    verb = models.CharField(max_length=20, choices=VERB_CHOICES)
    ring = models.CharField(max_length=255, blank=True)
    k_range = models.CharField(max_length=50, blank=True)
    status = models.CharField(max_length=20, choices=STATUS_CHOICES)
    violation_count = models.PositiveIntegerField(default=0)
    report = models.JSONField(default=dict, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        target = self.ring or "catalog"
        return f"{self.verb} {target} k={self.k_range or '-'} ({self.status})"

    @property
    def passed(self) -> bool:
        return self.status == "passed"
