"""Polynomials over Z_n with ascending coefficient lists.

Used to realize GF(p^m) and the principal quotients Z_n[x]/(f).
"""
import itertools
import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Poly, isprime, symbols

from rings.services.errors import InvalidParameterError

logger = logging.getLogger(__name__)

_X = symbols("x")
_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*\^\s*(\d+))?)?\s*")


@dataclass(frozen=True)
class Polynomial:
    coefficients: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidParameterError(f"Polynomial modulus must be at least 2, got {self.modulus}.")
        reduced = [c % self.modulus for c in self.coefficients]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        object.__setattr__(self, "coefficients", tuple(reduced))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __str__(self) -> str:
        return format_polynomial(self.coefficients)

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coefficients)), _X, modulus=self.modulus)


def format_polynomial(coefficients: Sequence[int]) -> str:
    terms: List[str] = []
    for power in range(len(coefficients) - 1, -1, -1):
        c = coefficients[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            monomial = "x" if power == 1 else f"x^{power}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
    return "+".join(terms) or "0"


def parse_polynomial(text: str, modulus: int) -> Polynomial:
    """Parse strings such as ``x^2+x+1`` or ``x^3+2x+1`` into a Polynomial over Z_modulus.

    Raises ValueError with the offending character offset on malformed input.
    """
    coefficients: dict = {}
    position = 0
    stripped = text.rstrip()
    if not stripped.strip():
        raise ValueError("empty polynomial", 0)
    while position < len(stripped):
        match = _TERM_RE.match(stripped, position)
        sign, digits, monomial, exponent = match.groups()
        if not digits and not monomial:
            raise ValueError("expected a polynomial term", position)
        if position > 0 and not sign:
            raise ValueError("expected '+' or '-' between terms", position)
        coefficient = int(digits) if digits else 1
        if sign == "-":
            coefficient = -coefficient
        power = 0
        if monomial:
            power = int(exponent) if exponent else 1
        coefficients[power] = coefficients.get(power, 0) + coefficient
        position = match.end()
    dense = [0] * (max(coefficients) + 1)
    for power, coefficient in coefficients.items():
        dense[power] = coefficient
    return Polynomial(tuple(dense), modulus)


def is_irreducible(poly: Polynomial) -> bool:
    if not isprime(poly.modulus):
        raise InvalidParameterError(f"Irreducibility is only defined here over Z_p; {poly.modulus} is not prime.")
    if poly.degree < 1:
        return False
    return bool(poly.to_sympy().is_irreducible)


def smallest_irreducible(p: int, m: int) -> Polynomial:
    """Lexicographically smallest monic irreducible of degree ``m`` over Z_p.

    Candidates compare by coefficient list with the highest degree most significant,
    so x^3+x+1 precedes x^3+x^2+1.
    """
    if not isprime(p):
        raise InvalidParameterError(f"GF characteristic must be prime, got {p}.")
    if m < 1:
        raise InvalidParameterError(f"GF degree must be at least 1, got {m}.")
    for upper in itertools.product(range(p), repeat=m):
        candidate = Polynomial(tuple(reversed(upper)) + (1,), p)
        if is_irreducible(candidate):
            logger.debug("Smallest irreducible of degree %s over Z_%s is %s", m, p, candidate)
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {m} over Z_{p}")  # pragma: no cover


def reduction_rows(poly: Polynomial) -> np.ndarray:
    """Rows ``e = 0 .. 2d-2`` hold the coefficients of ``x^e mod poly`` (``poly`` monic of degree ``d``)."""
    d = poly.degree
    n = poly.modulus
    rows = np.zeros((max(2 * d - 1, 1), d), dtype=np.int64)
    tail = np.array([(-c) % n for c in poly.coefficients[:d]], dtype=np.int64)
    current = np.zeros(d, dtype=np.int64)
    current[0] = 1
    for e in range(rows.shape[0]):
        rows[e] = current
        top = current[-1]
        shifted = np.roll(current, 1)
        shifted[0] = 0
        current = (shifted + top * tail) % n
    return rows
