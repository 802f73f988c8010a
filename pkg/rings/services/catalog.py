"""The curated ring catalog and its text manifest."""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional

from rings import conf
from rings.expressions import Product, RingExpr, expr_order, format_expr, parse_expr
from rings.services.errors import CatalogError, InvalidParameterError, RingError
from rings.services.ring_core import TableRing, materialize, validate_ring
from rings.services.zero_structure import structure_report

logger = logging.getLogger(__name__)

CATALOG_ORDER_LIMIT = 64

_FLAGS = {"true": True, "false": False, "-": None}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: RingExpr
    order: int
    expected_local: bool
    expected_zsq_zero: Optional[bool] = None

    @property
    def expr_text(self) -> str:
        return format_expr(self.expr)

    def ring(self, cap: Optional[int] = None) -> TableRing:
        return materialize(self.expr, cap)


def _flag(text: str, line_no: int, column: str) -> Optional[bool]:
    try:
        return _FLAGS[text.strip().lower()]
    except KeyError:
        raise CatalogError(f"line {line_no}: {column} must be true, false or -, got {text.strip()!r}")


def parse_manifest(text: str, source: str = "<manifest>") -> List[CatalogEntry]:
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [part.strip() for part in line.split("|")]
        if len(fields) != 4:
            raise CatalogError(f"{source} line {line_no}: expected 'name | expr | local | zsq', got {raw.strip()!r}")
        name, expr_text, local_text, zsq_text = fields
        try:
            expr = parse_expr(expr_text)
        except RingError as exc:
            raise CatalogError(f"{source} line {line_no}: {exc}") from exc
        local = _flag(local_text, line_no, "local")
        if local is None:
            raise CatalogError(f"{source} line {line_no}: the local flag cannot be left unchecked")
        entries.append(CatalogEntry(name, expr, expr_order(expr), local, _flag(zsq_text, line_no, "zsq")))
    return entries


def load_manifest(path: Optional[Path] = None) -> List[CatalogEntry]:
    path = Path(path) if path is not None else conf.catalog_manifest()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"Cannot read catalog manifest {path}: {exc}") from exc
    entries = parse_manifest(text, str(path))
    logger.info("Loaded %d catalog entries from %s", len(entries), path)
    return entries


def dump_manifest(entries: Iterable[CatalogEntry]) -> str:
    def flag(value: Optional[bool]) -> str:
        return "-" if value is None else str(value).lower()

    lines = ["# name | ring expression | local | Z(R)^2 = 0"]
    lines += [
        f"{e.name} | {e.expr_text} | {flag(e.expected_local)} | {flag(e.expected_zsq_zero)}" for e in entries
    ]
    return "\n".join(lines) + "\n"


def _product_name(left: CatalogEntry, right: CatalogEntry) -> str:
    wrap = lambda name: f"({name})" if " x " in name else name  # noqa: E731
    return f"{wrap(left.name)} x {wrap(right.name)}"


def builtin_catalog(max_order: Optional[int] = None, manifest: Optional[Path] = None) -> List[CatalogEntry]:
    """Manifest entries of order <= max_order plus their pairwise products, sorted by (order, name)."""
    max_order = conf.catalog_max_order() if max_order is None else max_order
    if not 2 <= max_order <= CATALOG_ORDER_LIMIT:
        raise InvalidParameterError(f"Catalog order bound must lie in [2, {CATALOG_ORDER_LIMIT}], got {max_order}.")
    base = [e for e in load_manifest(manifest) if e.order <= max_order]
    seen = {e.expr_text for e in base}
    entries = list(base)
    for i, left in enumerate(base):
        for right in base[i:]:
            if left.order * right.order > max_order:
                continue
            entry = CatalogEntry(
                name=_product_name(left, right),
                expr=Product(left.expr, right.expr),
                order=left.order * right.order,
                expected_local=False,
                expected_zsq_zero=False,
            )
            if entry.expr_text not in seen:
                seen.add(entry.expr_text)
                entries.append(entry)
    entries.sort(key=lambda e: (e.order, e.name))
    logger.debug("Catalog up to order %d holds %d rings", max_order, len(entries))
    return entries


def check_entry(entry: CatalogEntry, cap: Optional[int] = None) -> List[str]:
    """Mismatches between an entry's declared data and its materialized ring."""
    ring = entry.ring(cap)
    problems = []
    if ring.n != entry.order:
        problems.append(f"{entry.name}: order {ring.n}, declared {entry.order}")
    diagnostic = validate_ring(ring)
    if not diagnostic:
        problems.append(f"{entry.name}: {diagnostic.message}")
        return problems
    report = structure_report(ring)
    if report.is_local != entry.expected_local:
        problems.append(f"{entry.name}: local is {report.is_local}, declared {entry.expected_local}")
    if entry.expected_zsq_zero is not None and report.zsq_zero != entry.expected_zsq_zero:
        problems.append(f"{entry.name}: Z(R)^2 = 0 is {report.zsq_zero}, declared {entry.expected_zsq_zero}")
    return problems
