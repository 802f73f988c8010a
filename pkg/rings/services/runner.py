"""Command execution shared by the management commands."""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from rings import conf
from rings.expressions import RingExpr, parse_expr
from rings.services import verification
from rings.services.catalog import CATALOG_ORDER_LIMIT, CatalogEntry, builtin_catalog, dump_manifest
from rings.services.errors import ExprSyntaxError, UsageError
from rings.services.ring_core import materialize
from rings.services.verification import TableRow, VerificationReport
from rings.services.zero_structure import structure_report
from rings.services.zp_engine import zp_expr

logger = logging.getLogger(__name__)

VERBS = ("compute", "bounds", "verify", "classify", "table", "catalog")
FORMATS = ("text", "json", "csv")
RING_VERBS = ("compute", "bounds")
DEFAULT_SWEEP = tuple(range(2, 9))

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_OTHER = 4

_K_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_k_range(text: str) -> Tuple[int, ...]:
    """``"4"`` or an inclusive ``"2..8"``."""
    match = _K_RANGE.match(text)
    if not match:
        raise ExprSyntaxError(f"expected k or a range 'a..b', got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if high < low:
        raise ExprSyntaxError(f"empty k range {text!r}", offset=text.index(".."))
    return tuple(range(low, high + 1))


@dataclass
class Command:
    verb: str
    ring: Optional[str] = None
    ks: Tuple[int, ...] = ()
    fmt: str = "text"
    max_order: Optional[int] = None
    materialize_cap: Optional[int] = None
    bruteforce_cap: Optional[int] = None
    iso_cap: Optional[int] = None
    catalog: Optional[Path] = None
    export: bool = False

    def validate(self) -> "Command":
        if self.verb not in VERBS:
            raise UsageError(f"Unknown verb {self.verb!r}; expected one of {', '.join(VERBS)}.")
        if self.fmt not in FORMATS:
            raise UsageError(f"Unknown format {self.fmt!r}; expected one of {', '.join(FORMATS)}.")
        if self.verb in RING_VERBS:
            if not self.ring:
                raise UsageError(f"{self.verb} needs --ring.")
            if not self.ks:
                raise UsageError(f"{self.verb} needs --k.")
        if any(k < 2 for k in self.ks):
            raise UsageError(f"k must be at least 2, got {min(self.ks)}.")
        if self.max_order is not None and not 2 <= self.max_order <= CATALOG_ORDER_LIMIT:
            raise UsageError(f"--max-order must lie in [2, {CATALOG_ORDER_LIMIT}], got {self.max_order}.")
        return self

    @property
    def k_label(self) -> str:
        if not self.ks:
            return ""
        if len(self.ks) == 1:
            return str(self.ks[0])
        return f"{self.ks[0]}..{self.ks[-1]}"


@dataclass
class RunResult:
    command: Command
    reports: List[VerificationReport] = field(default_factory=list)
    rows: List[TableRow] = field(default_factory=list)
    entries: List[CatalogEntry] = field(default_factory=list)
    manifest: str = ""

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports) and all(row.passed for row in self.rows)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_VERIFICATION_FAILED

    @property
    def violations(self) -> List[str]:
        found = [v for report in self.reports for v in report.violations]
        found += [f"{row.ring} k={row.k}: computed {row.computed}, expected {row.expected}"
                  for row in self.rows if not row.passed]
        return found


def _ring(cmd: Command) -> RingExpr:
    return parse_expr(cmd.ring)


def _compute(cmd: Command, result: RunResult) -> None:
    expr = _ring(cmd)
    for k in cmd.ks:
        result.reports.append(VerificationReport(ring=cmd.ring.strip(), k=k, value=zp_expr(expr, k)))


def _bounds(cmd: Command, result: RunResult) -> None:
    ring = materialize(_ring(cmd))
    result.reports.extend(verification.verify_bounds(ring, k) for k in cmd.ks)


def _catalog(cmd: Command) -> List[CatalogEntry]:
    return builtin_catalog(cmd.max_order, cmd.catalog)


def _verify(cmd: Command, result: RunResult) -> None:
    ks = cmd.ks or DEFAULT_SWEEP
    if cmd.ring:
        ring = materialize(_ring(cmd))
        result.reports.extend(verification.verify_bounds(ring, k) for k in ks)
        return
    catalog = _catalog(cmd)
    reports = result.reports
    reports.append(verification.verify_catalog(catalog))
    for entry in catalog:
        ring = entry.ring()
        reports.extend(verification.verify_bounds(ring, k) for k in ks)
    for k in ks:
        reports.append(verification.verify_global_max(k, catalog))
        reports.append(verification.verify_prime_constraint(k, catalog))
        reports.append(verification.verify_order_p2(k, catalog))
    reports.append(verification.verify_m2_classification(catalog, cmd.iso_cap))
    reports.append(verification.verify_isomorphism(catalog, cmd.iso_cap))
    reports.append(verification.oracle_equivalence(catalog))
    reports.append(verification.multiplicativity(catalog, max_order=max(e.order for e in catalog)))
    reports.append(verification.verify_zn_products())
    reports.append(verification.verify_polynomial_identities())
    reports.append(verification.verify_bk_monotonicity())


def _classify(cmd: Command, result: RunResult) -> None:
    catalog = _catalog(cmd)
    for k in cmd.ks or DEFAULT_SWEEP:
        result.reports.append(verification.verify_classification(k, catalog, cmd.iso_cap))


def _table(cmd: Command, result: RunResult) -> None:
    rows, report = verification.reference_value_table()
    result.rows.extend(rows)
    result.reports.append(report)


def _list_catalog(cmd: Command, result: RunResult) -> None:
    result.entries = _catalog(cmd)
    if cmd.export:
        result.manifest = dump_manifest(result.entries)
        return
    for entry in result.entries:
        report = structure_report(entry.ring())
        summary = VerificationReport(ring=entry.name, scope=verification.CATALOG_SCOPE)
        summary.flags.update(
            expr=entry.expr_text,
            order=entry.order,
            is_local=report.is_local,
            is_field=report.is_field,
            zsq_zero=report.zsq_zero,
            idempotents=report.idempotent_count,
        )
        result.reports.append(summary)


_HANDLERS = {
    "compute": _compute,
    "bounds": _bounds,
    "verify": _verify,
    "classify": _classify,
    "table": _table,
    "catalog": _list_catalog,
}


def run(cmd: Command) -> RunResult:
    """Execute a validated command; ring errors propagate to the caller."""
    cmd.validate()
    result = RunResult(command=cmd)
    with conf.overrides(
        RINGS_MATERIALIZE_CAP=cmd.materialize_cap,
        RINGS_BRUTEFORCE_CAP=cmd.bruteforce_cap,
        RINGS_ISO_CAP=cmd.iso_cap,
    ):
        _HANDLERS[cmd.verb](cmd, result)
    logger.info("%s finished: %d report(s), %d violation(s)", cmd.verb, len(result.reports), len(result.violations))
    return result
