"""Text, JSON and CSV rendering of run results."""
import csv
import io
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import List, Optional

from rest_framework.renderers import JSONRenderer

from .serializers import RunResultSerializer, plain
from .services.runner import RunResult
from .services.verification import VerificationReport

DISPLAY_DIGITS = 20


def rational(value: Optional[Fraction]) -> str:
    if value is None:
        return ""
    return f"{value.numerator}/{value.denominator}"


def decimal_display(value: Fraction, digits: int = DISPLAY_DIGITS) -> str:
    """Approximation for display only; never compared."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _value_line(report: VerificationReport) -> str:
    return f"{report.ring} k={report.k}: {rational(report.value)} ~ {decimal_display(report.value)}"


def _bound_lines(report: VerificationReport) -> List[str]:
    lines = [_value_line(report)]
    for bound in report.bounds:
        lower = f"{rational(bound.lower)} <= " if bound.lower is not None else ""
        upper = f" <= {rational(bound.upper)}" if bound.upper is not None else ""
        marks = "attained" if bound.attained else ""
        if not bound.holds:
            marks = "VIOLATED"
        lines.append(f"  {bound.id:<12} {lower}zp{upper}  {marks}".rstrip())
    for condition in report.conditions:
        lines.append(f"  [{'ok' if condition.ok else 'FAIL'}] {condition.name}")
    lines.extend(f"  ! {v}" for v in report.violations)
    return lines


def _summary_line(report: VerificationReport) -> str:
    where = report.ring if report.k is None else f"{report.ring} k={report.k}"
    verdict = "PASS" if report.passed else "FAIL"
    extra = f" ({report.scope})" if report.scope else ""
    return f"{verdict} {where}{extra}"


def _classify_lines(report: VerificationReport) -> List[str]:
    details = report.details
    members = ", ".join(details.get("members", []))
    lines = [
        f"k={report.k}: {details.get('count')} local rings with zp_k >= {rational(details.get('threshold'))}: "
        f"{members}",
        _summary_line(report),
    ]
    lines.extend(f"  ! {v}" for v in report.violations)
    return lines


def render_text(result: RunResult) -> str:
    verb = result.command.verb
    lines: List[str] = []
    if verb == "compute":
        lines = [_value_line(report) for report in result.reports]
    elif verb == "bounds" or (verb == "verify" and result.command.ring):
        for report in result.reports:
            lines.extend(_bound_lines(report))
    elif verb == "classify":
        for report in result.reports:
            lines.extend(_classify_lines(report))
    elif verb == "table":
        for row in result.rows:
            verdict = "PASS" if row.passed else "FAIL"
            lines.append(f"{row.ring:<16} k={row.k:<2} expected {rational(row.expected):<12} "
                         f"computed {rational(row.computed):<12} {verdict}")
    elif verb == "catalog":
        if result.manifest:
            return result.manifest
        for report in result.reports:
            flags = report.flags
            marks = [name for name in ("is_local", "is_field", "zsq_zero") if flags[name]]
            lines.append(f"{report.ring:<28} {flags['expr']:<28} order {flags['order']:<3} "
                         f"idempotents {flags['idempotents']:<3} {' '.join(marks)}".rstrip())
    else:
        for report in result.reports:
            lines.append(_summary_line(report))
            lines.extend(f"  ! {v}" for v in report.violations)
    if verb in ("verify", "classify", "table"):
        violations = len(result.violations)
        lines.append(f"{len(result.reports)} report(s), {violations} violation(s): "
                     f"{'PASS' if result.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def render_json(result: RunResult) -> str:
    if result.manifest:
        data = {"verb": "catalog", "manifest": result.manifest}
    else:
        data = RunResultSerializer(result).data
    return JSONRenderer().render(data).decode("utf-8") + "\n"


def render_csv(result: RunResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    verb = result.command.verb
    if verb == "table":
        writer.writerow(["ring", "k", "expected", "computed", "passed"])
        for row in result.rows:
            writer.writerow([row.ring, row.k, rational(row.expected), rational(row.computed), row.passed])
    elif verb == "catalog":
        writer.writerow(["name", "expr", "order", "is_local", "is_field", "zsq_zero", "idempotents"])
        for report in result.reports:
            flags = plain(report.flags)
            writer.writerow([report.ring, flags["expr"], flags["order"], flags["is_local"], flags["is_field"],
                             flags["zsq_zero"], flags["idempotents"]])
    elif verb == "compute":
        writer.writerow(["ring", "k", "value", "decimal"])
        for report in result.reports:
            writer.writerow([report.ring, report.k, rational(report.value), decimal_display(report.value)])
    else:
        writer.writerow(["ring", "k", "value", "bound", "lower", "upper", "attained", "holds", "passed"])
        for report in result.reports:
            k = "" if report.k is None else report.k
            if not report.bounds:
                writer.writerow([report.ring, k, rational(report.value), "", "", "", "", "", report.passed])
            for bound in report.bounds:
                writer.writerow([report.ring, k, rational(bound.value), bound.id, rational(bound.lower),
                                 rational(bound.upper), bound.attained, bound.holds, report.passed])
    return buffer.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(result: RunResult) -> str:
    return RENDERERS[result.command.fmt](result)
