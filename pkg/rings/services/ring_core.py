import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

from rings import conf
from rings.expressions import GF, Idealize, IdealizePower, Product, Quotient, RingExpr, Zn, format_expr
from rings.services.errors import CapacityError, InvalidParameterError
from rings.services.polynomials import Polynomial, is_irreducible, reduction_rows, smallest_irreducible

logger = logging.getLogger(__name__)

INDEX_DTYPE = np.int32


@dataclass(frozen=True, eq=False)
class TableRing:
    """A finite commutative ring with identity on the element indices ``0 .. n-1``.

    ``add`` and ``mul`` are read-only ``n x n`` index tables.
    """

    n: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str = ""
    origin: Optional[RingExpr] = None

    def __post_init__(self):
        for name in ("add", "mul"):
            table = np.array(getattr(self, name), dtype=INDEX_DTYPE)
            table.setflags(write=False)
            object.__setattr__(self, name, table)

    def __repr__(self) -> str:
        return f"<TableRing {self.label or '?'} n={self.n}>"

    def elements(self) -> range:
        return range(self.n)


@dataclass(frozen=True, eq=False)
class ModuleTables:
    """A finite module over a materialized base ring: addition and the scalar action ``act[r, m]``."""

    base: TableRing
    size: int
    add: np.ndarray
    act: np.ndarray
    zero: int = 0


@dataclass
class RingDiagnostic:
    ok: bool
    axiom: str = ""
    witness: Tuple[int, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_capacity(order: int, cap: Optional[int], what: str) -> None:
    limit = conf.materialize_cap() if cap is None else cap
    if order > limit:
        raise CapacityError(f"{what} would have {order} elements, above the materialization cap of {limit}.")


def build_zn(n: int, cap: Optional[int] = None) -> TableRing:
    if n < 2:
        raise InvalidParameterError(f"Z_n requires n >= 2, got {n}.")
    _check_capacity(n, cap, f"Z{n}")
    residues = np.arange(n, dtype=np.int64)
    return TableRing(
        n=n,
        add=np.add.outer(residues, residues) % n,
        mul=np.multiply.outer(residues, residues) % n,
        zero=0,
        one=1,
        label=f"Z{n}",
        origin=Zn(n),
    )


def _polynomial_ring(f: Polynomial, label: str, origin: RingExpr, cap: Optional[int]) -> TableRing:
    modulus, d = f.modulus, f.degree
    order = modulus**d
    _check_capacity(order, cap, label)
    weights = modulus ** np.arange(d, dtype=np.int64)
    coeffs = (np.arange(order, dtype=np.int64)[:, None] // weights[None, :]) % modulus
    reductions = reduction_rows(f)

    add = np.empty((order, order), dtype=INDEX_DTYPE)
    mul = np.empty((order, order), dtype=INDEX_DTYPE)
    for a in range(order):
        add[a] = ((coeffs[a] + coeffs) % modulus) @ weights
        times_a = np.zeros((d, d), dtype=np.int64)
        for i, c in enumerate(coeffs[a]):
            if c:
                times_a += c * reductions[i:i + d]
        mul[a] = ((coeffs @ (times_a % modulus)) % modulus) @ weights
    return TableRing(n=order, add=add, mul=mul, zero=0, one=1, label=label, origin=origin)


def build_gf(p: int, m: int, poly: Optional[Polynomial] = None, cap: Optional[int] = None) -> TableRing:
    expr = GF(p, m, poly)
    if poly is None:
        poly = smallest_irreducible(p, m)
    elif not poly.is_monic or not is_irreducible(poly):
        raise InvalidParameterError(f"{poly} is not a monic irreducible polynomial of degree {m} over Z_{p}.")
    logger.debug("Building GF(%s^%s) modulo %s", p, m, poly)
    return _polynomial_ring(poly, format_expr(expr), expr, cap)


def build_quotient(n: int, f: Polynomial, cap: Optional[int] = None) -> TableRing:
    if f.degree < 1 or not f.is_monic:
        raise InvalidParameterError(f"Quotient polynomial {f} must be monic of degree >= 1.")
    expr = Quotient(n, f)
    return _polynomial_ring(f, format_expr(expr), expr, cap)


def build_product(left: TableRing, right: TableRing, origin: Optional[RingExpr] = None,
                  cap: Optional[int] = None) -> TableRing:
    order = left.n * right.n
    label = f"{left.label} x {right.label}"
    if origin is None and left.origin is not None and right.origin is not None:
        origin = Product(left.origin, right.origin)
    _check_capacity(order, cap, label)
    index = np.arange(order)
    a, b = index // right.n, index % right.n
    return TableRing(
        n=order,
        add=left.add[a[:, None], a[None, :]].astype(np.int64) * right.n + right.add[b[:, None], b[None, :]],
        mul=left.mul[a[:, None], a[None, :]].astype(np.int64) * right.n + right.mul[b[:, None], b[None, :]],
        zero=left.zero * right.n + right.zero,
        one=left.one * right.n + right.one,
        label=label,
        origin=origin,
    )


def module_tables(spec, cap: Optional[int] = None) -> ModuleTables:
    """Module of an idealization: ``base^t`` under ring multiplication, or ``Z_d1 + ... + Z_dc`` over ``Z_n``."""
    if isinstance(spec, IdealizePower):
        base = materialize(spec.base, cap)
        size = base.n**spec.t
        _check_capacity(base.n * size, cap, format_expr(spec))
        weights = base.n ** np.arange(spec.t, dtype=np.int64)
        digits = (np.arange(size, dtype=np.int64)[:, None] // weights[None, :]) % base.n
        add = np.zeros((size, size), dtype=np.int64)
        act = np.zeros((base.n, size), dtype=np.int64)
        for i in range(spec.t):
            column = digits[:, i]
            add += base.add[column[:, None], column[None, :]].astype(np.int64) * weights[i]
            act += base.mul[:, column].astype(np.int64) * weights[i]
        return ModuleTables(base=base, size=size, add=add, act=act, zero=int(base.zero * weights.sum()))
    if isinstance(spec, Idealize):
        base = materialize(spec.base, cap)
        radices = np.array(spec.components, dtype=np.int64)
        size = int(np.prod(radices))
        _check_capacity(base.n * size, cap, format_expr(spec))
        weights = np.concatenate(([1], np.cumprod(radices)[:-1])).astype(np.int64)
        digits = (np.arange(size, dtype=np.int64)[:, None] // weights[None, :]) % radices[None, :]
        scalars = np.arange(base.n, dtype=np.int64)
        add = np.zeros((size, size), dtype=np.int64)
        act = np.zeros((base.n, size), dtype=np.int64)
        for i, d in enumerate(spec.components):
            column = digits[:, i]
            add += ((column[:, None] + column[None, :]) % d) * weights[i]
            act += (((scalars[:, None] % d) * column[None, :]) % d) * weights[i]
        return ModuleTables(base=base, size=size, add=add, act=act, zero=0)
    raise InvalidParameterError(f"{spec!r} is not an idealization.")


def build_idealization(spec, cap: Optional[int] = None) -> TableRing:
    """Nagata idealization R*M: (r1,m1)+(r2,m2) = (r1+r2, m1+m2), (r1,m1)(r2,m2) = (r1r2, r1m2+r2m1)."""
    module = module_tables(spec, cap)
    base, size = module.base, module.size
    order = base.n * size
    index = np.arange(order)
    r, m = index // size, index % size
    ri, rj = r[:, None], r[None, :]
    mi, mj = m[:, None], m[None, :]
    add = base.add[ri, rj].astype(np.int64) * size + module.add[mi, mj]
    mul = base.mul[ri, rj].astype(np.int64) * size + module.add[module.act[ri, mj], module.act[rj, mi]]
    return TableRing(
        n=order,
        add=add,
        mul=mul,
        zero=base.zero * size + module.zero,
        one=base.one * size + module.zero,
        label=format_expr(spec),
        origin=spec,
    )


def materialize(expr: RingExpr, cap: Optional[int] = None) -> TableRing:
    """Build the table ring of an expression; results are cached per (expression, cap)."""
    return _materialize(expr, conf.materialize_cap() if cap is None else cap)


@lru_cache(maxsize=512)
def _materialize(expr: RingExpr, cap: int) -> TableRing:
    if isinstance(expr, Zn):
        ring = build_zn(expr.n, cap)
    elif isinstance(expr, GF):
        ring = build_gf(expr.p, expr.m, expr.poly, cap)
    elif isinstance(expr, Quotient):
        ring = build_quotient(expr.n, expr.f, cap)
    elif isinstance(expr, Product):
        ring = build_product(materialize(expr.left, cap), materialize(expr.right, cap), cap=cap)
    elif isinstance(expr, (Idealize, IdealizePower)):
        ring = build_idealization(expr, cap)
    else:
        raise InvalidParameterError(f"Unknown ring expression {expr!r}.")
    if ring.origin != expr or ring.label != format_expr(expr):
        ring = TableRing(ring.n, ring.add, ring.mul, ring.zero, ring.one, format_expr(expr), expr)
    logger.debug("Materialized %s with %d elements", ring.label, ring.n)
    return ring


def _blocks(n: int, budget: int = 1 << 22) -> Iterator[np.ndarray]:
    step = max(1, budget // max(1, n * n))
    for start in range(0, n, step):
        yield np.arange(start, min(n, start + step))


def _first(mask: np.ndarray, offset: int = 0) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if not len(hits):
        return None
    witness = [int(v) for v in hits[0]]
    witness[0] += offset
    return tuple(witness)


def _cubic(n: int, lhs: Callable[[np.ndarray], np.ndarray], rhs: Callable[[np.ndarray], np.ndarray]):
    for block in _blocks(n):
        found = _first(lhs(block) != rhs(block), int(block[0]))
        if found:
            return found
    return None


def validate_ring(ring: TableRing) -> RingDiagnostic:
    """Exhaustively check the commutative-ring-with-identity axioms; report the first violation."""
    n = ring.n
    add = np.asarray(ring.add, dtype=np.int64)
    mul = np.asarray(ring.mul, dtype=np.int64)
    if add.shape != (n, n) or mul.shape != (n, n):
        return RingDiagnostic(False, "shape", (), f"tables must be {n}x{n}")
    for name, table in (("addition closure", add), ("multiplication closure", mul)):
        found = _first((table < 0) | (table >= n))
        if found:
            return RingDiagnostic(False, name, found, f"entry at {found} is not an element index")
    zero, one = ring.zero, ring.one
    if not (0 <= zero < n and 0 <= one < n):
        return RingDiagnostic(False, "distinguished elements", (zero, one), "zero/one outside the ring")
    if zero == one:
        return RingDiagnostic(False, "nontrivial", (zero,), "zero equals one")

    elements = np.arange(n)
    checks: List[Tuple[str, Callable[[], Optional[Tuple[int, ...]]]]] = [
        ("additive identity", lambda: _first(add[zero] != elements)),
        ("additive commutativity", lambda: _first(add != add.T)),
        ("additive inverses", lambda: _first(~np.any(add == zero, axis=1))),
        ("additive cancellation", lambda: _first(np.sort(add, axis=1) != elements[None, :])),
        ("additive associativity", lambda: _cubic(
            n,
            lambda a: add[add[a][:, :, None], elements[None, None, :]],
            lambda a: add[a[:, None, None], add[None, :, :]],
        )),
        ("multiplicative commutativity", lambda: _first(mul != mul.T)),
        ("zero absorption", lambda: _first(mul[zero] != zero)),
        ("multiplicative identity", lambda: _first(mul[one] != elements)),
        ("multiplicative associativity", lambda: _cubic(
            n,
            lambda a: mul[mul[a][:, :, None], elements[None, None, :]],
            lambda a: mul[a[:, None, None], mul[None, :, :]],
        )),
        ("distributivity", lambda: _cubic(
            n,
            lambda a: mul[a[:, None, None], add[None, :, :]],
            lambda a: add[mul[a][:, :, None], mul[a][:, None, :]],
        )),
    ]
    for axiom, check in checks:
        witness = check()
        if witness:
            logger.debug("Ring %s fails %s at %s", ring.label, axiom, witness)
            return RingDiagnostic(False, axiom, witness, f"{axiom} fails at {witness}")
    return RingDiagnostic(True, message="all axioms hold")
