"""Exact zp_k(R): the share of k-tuples over R whose product is zero.

Counts come from a dynamic programme over the full product distribution,
N_k(r) = sum over a in R and s with s*a = r of N_{k-1}(s).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from rings import conf
from rings.expressions import RingExpr, product_factors
from rings.services.errors import CapacityError, InvalidParameterError
from rings.services.ring_core import TableRing, materialize

logger = logging.getLogger(__name__)

# float64 bincount is exact while every partial sum stays below 2**53
_FLOAT_EXACT = 2**53


@dataclass(frozen=True)
class ProductCountVector:
    k: int
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=256)
def _history(ring: TableRing) -> List[Tuple[int, ...]]:
    """Count vectors for k = 1, 2, ... computed so far; extended in place."""
    return [(1,) * ring.n]


def _step(ring: TableRing, previous: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    n = ring.n
    targets = np.asarray(ring.mul).ravel()
    if n**k < _FLOAT_EXACT:
        weights = np.repeat(np.array(previous, dtype=np.float64), n)
        totals = np.bincount(targets, weights=weights, minlength=n)
        return tuple(int(v) for v in np.rint(totals).astype(np.int64))
    weights = np.repeat(np.array(previous, dtype=object), n)
    totals = np.zeros(n, dtype=object)
    np.add.at(totals, targets, weights)
    return tuple(int(v) for v in totals)


def _counts(ring: TableRing, k: int) -> Tuple[int, ...]:
    history = _history(ring)
    while len(history) < k:
        history.append(_step(ring, history[-1], len(history) + 1))
    return history[k - 1]


def product_count_vector(ring: TableRing, k: int) -> ProductCountVector:
    if k < 1:
        raise InvalidParameterError(f"Product counts need k >= 1, got {k}.")
    return ProductCountVector(k=k, counts=_counts(ring, k))


def ann_k_count(ring: TableRing, k: int) -> int:
    """|Ann_k(R)|, the number of k-tuples with zero product."""
    return product_count_vector(ring, k).counts[ring.zero]


def _require_k(k: int) -> None:
    if k < 2:
        raise InvalidParameterError(f"zp_k is defined for k >= 2, got {k}.")


def zp_exact(ring: TableRing, k: int) -> Fraction:
    _require_k(k)
    return Fraction(ann_k_count(ring, k), ring.n**k)


def zp_bruteforce(ring: TableRing, k: int, cap: Optional[int] = None) -> Fraction:
    """Oracle: enumerate every k-tuple explicitly and count zero products."""
    _require_k(k)
    limit = conf.bruteforce_cap() if cap is None else cap
    tuples = ring.n**k
    if tuples > limit:
        raise CapacityError(f"Brute force over {ring.label} with k={k} needs {tuples} tuples, cap is {limit}.")
    mul = np.asarray(ring.mul)
    elements = np.arange(ring.n)
    products = elements.astype(np.int32)
    for _ in range(k - 1):
        products = mul[products[:, None], elements[None, :]].ravel()
    zeros = int(np.count_nonzero(products == ring.zero))
    logger.debug("Brute force %s k=%d: %d of %d tuples vanish", ring.label, k, zeros, tuples)
    return Fraction(zeros, tuples)


def zp_expr(expr: RingExpr, k: int, cap: Optional[int] = None) -> Fraction:
    """zp_k of an expression, multiplying over Product factors before anything is materialized."""
    _require_k(k)
    value = Fraction(1)
    for factor in product_factors(expr):
        value *= zp_exact(materialize(factor, cap), k)
    return value
