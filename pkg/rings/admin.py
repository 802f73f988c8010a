from django.contrib import admin

from .models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ("verb", "ring", "k_range", "status", "violation_count", "created_at")
    list_filter = ("verb", "status", "created_at")
    search_fields = ("ring",)
    readonly_fields = ("verb", "ring", "k_range", "status", "violation_count", "report", "created_at")

    def has_add_permission(self, request):
        return False

    def has_change_permission(self, request, obj=None):
        return False
