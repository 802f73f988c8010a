import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from rings.models import VerificationRun
from rings.reporting import render, render_json
from rings.services.errors import (
    CapacityError,
    ExprSemanticError,
    ExprSyntaxError,
    RingError,
    UsageError,
)
from rings.services.runner import (
    EXIT_CAPACITY,
    EXIT_OTHER,
    EXIT_PARSE,
    EXIT_VERIFICATION_FAILED,
    FORMATS,
    Command,
    RunResult,
    parse_k_range,
    run,
)

logger = logging.getLogger(__name__)

EXIT_CODES = {
    ExprSyntaxError: EXIT_PARSE,
    ExprSemanticError: EXIT_PARSE,
    UsageError: EXIT_PARSE,
    CapacityError: EXIT_CAPACITY,
}


def exit_code_for(exc: RingError) -> int:
    for error_type, code in EXIT_CODES.items():
        if isinstance(exc, error_type):
            return code
    return EXIT_OTHER


class RingCommand(BaseCommand):
    """Shared options and error mapping for the ring verbs."""

    verb = ""
    takes_ring = True
    takes_k = True
    recordable = False

    def add_arguments(self, parser):
        if self.takes_ring:
            parser.add_argument("--ring", help='Ring expression, e.g. "Z4 x GF(2^3)" or "Ideal(Z4,[2])".')
        if self.takes_k:
            parser.add_argument("--k", dest="k", help="Tuple length k or an inclusive range such as 2..8.")
        parser.add_argument("--format", dest="fmt", choices=FORMATS, default="text", help="Output format.")
        parser.add_argument("--max-order", type=int, help="Largest catalog ring order to include.")
        parser.add_argument("--materialize-cap", type=int, help="Override RINGS_MATERIALIZE_CAP.")
        parser.add_argument("--bruteforce-cap", type=int, help="Override RINGS_BRUTEFORCE_CAP.")
        parser.add_argument("--iso-cap", type=int, help="Override RINGS_ISO_CAP.")
        parser.add_argument("--catalog", help="Catalog manifest to use instead of the bundled one.")
        if self.recordable:
            parser.add_argument("--record", action="store_true", help="Store the run as a VerificationRun.")

    def build_command(self, options) -> Command:
        k_text = options.get("k")
        catalog = options.get("catalog")
        return Command(
            verb=self.verb,
            ring=options.get("ring"),
            ks=parse_k_range(str(k_text)) if k_text is not None else (),
            fmt=options.get("fmt") or "text",
            max_order=options.get("max_order"),
            materialize_cap=options.get("materialize_cap"),
            bruteforce_cap=options.get("bruteforce_cap"),
            iso_cap=options.get("iso_cap"),
            catalog=Path(catalog) if catalog else None,
            export=bool(options.get("export")),
        )

    def handle(self, *args, **options):
        try:
            cmd = self.build_command(options)
            result = run(cmd)
        except RingError as exc:
            code = exit_code_for(exc)
            logger.warning("%s failed (%s): %s", self.verb, exc.code, exc)
            raise CommandError(str(exc), returncode=code) from exc

        self.stdout.write(render(result), ending="")
        if options.get("record"):
            self.record(result)
        if not result.passed:
            raise CommandError(
                f"{len(result.violations)} violation(s) found.", returncode=EXIT_VERIFICATION_FAILED
            )

    def record(self, result: RunResult) -> VerificationRun:
        cmd = result.command
        run_record = VerificationRun.objects.create(
            verb=cmd.verb,
            ring=cmd.ring or "",
            k_range=cmd.k_label,
            status="passed" if result.passed else "failed",
            violation_count=len(result.violations),
            report=json.loads(render_json(result)),
        )
        self.stdout.write(self.style.SUCCESS(f"Recorded verification run #{run_record.pk}."))
        return run_record
