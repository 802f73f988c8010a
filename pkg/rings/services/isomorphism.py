"""Brute-force ring isomorphism for small materialized rings."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from rings import conf
from rings.services.errors import CapacityError
from rings.services.ring_core import TableRing
from rings.services.zero_structure import structure_report
from rings.services.zp_engine import zp_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingFingerprint:
    characteristic: int
    additive_orders: Tuple[int, ...]
    zero_divisor_count: int
    ann_sizes: Tuple[int, ...]
    zp2: Fraction


def additive_orders(ring: TableRing) -> np.ndarray:
    elements = np.arange(ring.n)
    orders = np.zeros(ring.n, dtype=np.int64)
    acc = elements.copy()
    for multiple in range(1, ring.n + 1):
        fresh = (acc == ring.zero) & (orders == 0)
        orders[fresh] = multiple
        if orders.all():
            break
        acc = ring.add[acc, elements]
    return orders


def fingerprint(ring: TableRing) -> RingFingerprint:
    orders = additive_orders(ring)
    report = structure_report(ring)
    return RingFingerprint(
        characteristic=int(orders[ring.one]),
        additive_orders=tuple(sorted(int(o) for o in orders)),
        zero_divisor_count=len(report.zset),
        ann_sizes=tuple(sorted(report.ann_sizes.values())),
        zp2=zp_exact(ring, 2),
    )


def element_signatures(ring: TableRing) -> List[Tuple[int, int, bool, bool]]:
    orders = additive_orders(ring)
    mul = np.asarray(ring.mul)
    ann = (mul == ring.zero).sum(axis=1)
    squares = np.diagonal(mul)
    return [
        (int(orders[x]), int(ann[x]), bool(squares[x] == ring.zero), bool(squares[x] == x))
        for x in range(ring.n)
    ]


def _span(ring: TableRing, generators: List[int]) -> set:
    reached = {ring.zero}
    frontier = [ring.zero]
    while frontier:
        a = frontier.pop()
        for g in generators:
            b = int(ring.add[a, g])
            if b not in reached:
                reached.add(b)
                frontier.append(b)
    return reached


def additive_generators(ring: TableRing) -> List[int]:
    """Greedy generators of (R, +): the identity first, then elements of largest additive order."""
    orders = additive_orders(ring)
    candidates = sorted(range(ring.n), key=lambda x: (-int(orders[x]), x))
    generators = [ring.one]
    reached = _span(ring, generators)
    for x in candidates:
        if len(reached) == ring.n:
            break
        if x not in reached:
            generators.append(x)
            reached = _span(ring, generators)
    return generators


class _Search:
    def __init__(self, left: TableRing, right: TableRing):
        self.left = left
        self.right = right
        self.generators = additive_generators(left)
        right_signatures = element_signatures(right)
        left_signatures = element_signatures(left)
        self.candidates = {
            g: [y for y in range(right.n) if right_signatures[y] == left_signatures[g]]
            for g in self.generators
        }

    def _extend(self, phi: Dict[int, int], used: set, depth: int) -> Optional[Tuple[Dict[int, int], set]]:
        """Close phi additively over the first ``depth`` generators; None on conflict."""
        phi, used = dict(phi), set(used)
        active = self.generators[:depth]
        frontier = list(phi)
        while frontier:
            a = frontier.pop()
            for g in active:
                b = int(self.left.add[a, g])
                image = int(self.right.add[phi[a], phi[g]])
                if b in phi:
                    if phi[b] != image:
                        return None
                    continue
                if image in used:
                    return None
                phi[b] = image
                used.add(image)
                frontier.append(b)
        return phi, used

    def _multiplicative(self, phi: Dict[int, int]) -> bool:
        sources = np.fromiter(phi, dtype=np.int64)
        images = np.array([phi[a] for a in sources], dtype=np.int64)
        lookup = np.full(self.left.n, -1, dtype=np.int64)
        lookup[sources] = images
        products = lookup[self.left.mul[np.ix_(sources, sources)]]
        expected = self.right.mul[np.ix_(images, images)]
        known = products >= 0
        return bool((products[known] == expected[known]).all())

    def run(self, phi: Dict[int, int], used: set, depth: int) -> bool:
        if depth == len(self.generators):
            return len(phi) == self.left.n and self._multiplicative(phi)
        g = self.generators[depth]
        if g in phi:
            extended = self._extend(phi, used, depth + 1)
            return extended is not None and self.run(*extended, depth + 1)
        for y in self.candidates[g]:
            if y in used:
                continue
            extended = self._extend({**phi, g: y}, used | {y}, depth + 1)
            if extended is None or not self._multiplicative(extended[0]):
                continue
            if self.run(*extended, depth + 1):
                return True
        return False


def iso_check(left: TableRing, right: TableRing, cap: Optional[int] = None) -> bool:
    """True iff a bijection preserving both tables exists, fixing 0 and 1."""
    if left.n != right.n:
        return False
    limit = conf.iso_cap() if cap is None else cap
    if left.n > limit:
        raise CapacityError(f"Isomorphism search on order {left.n} exceeds the cap of {limit}.")
    if fingerprint(left) != fingerprint(right):
        return False
    search = _Search(left, right)
    if search.candidates[left.one].count(right.one) == 0:
        return False
    found = search.run({left.zero: right.zero, left.one: right.one}, {right.zero, right.one}, 0)
    logger.debug("iso_check %s ~ %s: %s", left.label, right.label, found)
    return found
