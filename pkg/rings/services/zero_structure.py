"""Zero divisors, annihilators and the structural flags the bounds depend on.

Z(R) always contains 0 here: a field has |Z(R)| = 1.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np
from sympy import factorint

from rings.expressions import Idealize, IdealizePower
from rings.services.errors import InvalidParameterError, StructureDomainError
from rings.services.formulas import ZeroProfile
from rings.services.ring_core import TableRing, module_tables
from rings.services.zp_engine import ann_k_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroStructureReport:
    label: str
    zset: FrozenSet[int]
    ann_sizes: Dict[int, int]
    is_field: bool
    is_local: bool
    maximal_ideal: Optional[FrozenSet[int]]
    zsq_zero: bool
    prime_ann: Dict[int, bool]
    idempotent_count: int = 0
    is_reduced: bool = False
    prime_power: Optional[Tuple[int, int]] = None

    @property
    def all_prime_annihilators(self) -> bool:
        return all(self.prime_ann.values())


def _zero_mask(ring: TableRing) -> np.ndarray:
    return np.asarray(ring.mul) == ring.zero


def _zero_divisor_mask(ring: TableRing) -> np.ndarray:
    hits = _zero_mask(ring).copy()
    hits[:, ring.zero] = False
    return np.any(hits, axis=1)


def zero_divisors(ring: TableRing) -> FrozenSet[int]:
    return frozenset(int(x) for x in np.flatnonzero(_zero_divisor_mask(ring)))


def annihilator(ring: TableRing, x: int) -> FrozenSet[int]:
    if not 0 <= x < ring.n:
        raise InvalidParameterError(f"Element index {x} is outside {ring.label} (order {ring.n}).")
    return frozenset(int(y) for y in np.flatnonzero(ring.mul[x] == ring.zero))


def is_field(ring: TableRing) -> bool:
    return int(_zero_divisor_mask(ring).sum()) == 1


def is_local(ring: TableRing) -> bool:
    """Local iff Z(R) is closed under addition; it is then the unique maximal ideal."""
    zset = np.flatnonzero(_zero_divisor_mask(ring))
    closed = _zero_divisor_mask(ring)[ring.add[np.ix_(zset, zset)]]
    return bool(closed.all())


def maximal_ideal(ring: TableRing) -> FrozenSet[int]:
    if not is_local(ring):
        raise StructureDomainError(f"{ring.label} is not local; it has no unique maximal ideal.")
    return zero_divisors(ring)


def zsquare_is_zero(ring: TableRing) -> bool:
    zset = np.flatnonzero(_zero_divisor_mask(ring))
    return bool((ring.mul[np.ix_(zset, zset)] == ring.zero).all())


def ann_is_prime(ring: TableRing, x: int) -> bool:
    """Whether Ann(x) is a prime ideal, by the two-element product test over R x R."""
    if x == ring.zero or not (0 <= x < ring.n) or not _zero_divisor_mask(ring)[x]:
        raise StructureDomainError(f"{x} is not a nonzero zero divisor of {ring.label}.")
    inside = ring.mul[x] == ring.zero
    violations = inside[ring.mul] & ~inside[:, None] & ~inside[None, :]
    return not bool(violations.any())


def idempotents(ring: TableRing) -> FrozenSet[int]:
    return frozenset(int(e) for e in np.flatnonzero(np.diagonal(ring.mul) == np.arange(ring.n)))


def is_reduced(ring: TableRing) -> bool:
    squares_to_zero = np.diagonal(ring.mul) == ring.zero
    squares_to_zero[ring.zero] = False
    return not bool(squares_to_zero.any())


def prime_power(order: int) -> Optional[Tuple[int, int]]:
    factors = factorint(order)
    if len(factors) != 1:
        return None
    ((p, alpha),) = factors.items()
    return int(p), int(alpha)


def _subring(ring: TableRing, unit: int) -> TableRing:
    members = np.unique(ring.mul[unit])
    lookup = np.full(ring.n, -1, dtype=np.int64)
    lookup[members] = np.arange(len(members))
    block = np.ix_(members, members)
    return TableRing(
        n=len(members),
        add=lookup[ring.add[block]],
        mul=lookup[ring.mul[block]],
        zero=int(lookup[ring.zero]),
        one=int(lookup[unit]),
        label=f"{ring.label}*e{unit}",
    )


def local_factors(ring: TableRing) -> List[TableRing]:
    """Split R into the local rings R*e over its primitive idempotents e."""
    nonzero = sorted(idempotents(ring) - {ring.zero})
    primitive = [
        e for e in nonzero
        if not any(f != e and ring.mul[f, e] == f for f in nonzero)
    ]
    factors = [_subring(ring, e) for e in primitive]
    logger.debug("%s splits into %d local factor(s)", ring.label, len(factors))
    return factors


def idealization_zero_set(ring: TableRing) -> Tuple[FrozenSet[int], bool]:
    """Predict Z(R*M) = (Z(R) u Z(M)) x M and compare it with the exhaustive scan."""
    spec = ring.origin
    if not isinstance(spec, (Idealize, IdealizePower)):
        raise StructureDomainError(f"{ring.label} was not built as an idealization.")
    module = module_tables(spec)
    base_zero = _zero_divisor_mask(module.base)
    nonzero_m = np.arange(module.size) != module.zero
    module_zero = np.any((module.act == module.zero) & nonzero_m[None, :], axis=1)
    scalars = np.flatnonzero(base_zero | module_zero)
    predicted = frozenset(int(r * module.size + m) for r in scalars for m in range(module.size))
    return predicted, predicted == zero_divisors(ring)


@lru_cache(maxsize=512)
def structure_report(ring: TableRing) -> ZeroStructureReport:
    zmask = _zero_divisor_mask(ring)
    zset = frozenset(int(x) for x in np.flatnonzero(zmask))
    sizes = _zero_mask(ring).sum(axis=1)
    nonzero_zd = sorted(zset - {ring.zero})
    local = is_local(ring)
    return ZeroStructureReport(
        label=ring.label,
        zset=zset,
        ann_sizes={x: int(sizes[x]) for x in nonzero_zd},
        is_field=len(zset) == 1,
        is_local=local,
        maximal_ideal=zset if local else None,
        zsq_zero=zsquare_is_zero(ring),
        prime_ann={x: ann_is_prime(ring, x) for x in nonzero_zd},
        idempotent_count=len(idempotents(ring)),
        is_reduced=is_reduced(ring),
        prime_power=prime_power(ring.n),
    )


def zero_profile(ring: TableRing, k: int) -> ZeroProfile:
    if k < 2:
        raise InvalidParameterError(f"Zero profiles need k >= 2, got {k}.")
    report = structure_report(ring)
    return ZeroProfile(
        n=ring.n,
        z=len(report.zset),
        ann_sizes=tuple(sorted(report.ann_sizes.values())),
        ann_k_minus_1=ann_k_count(ring, k - 1),
        k=k,
    )
