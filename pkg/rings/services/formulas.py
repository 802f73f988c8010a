"""Closed forms and bounds for zp_k as exact functions of ring statistics."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import List, Sequence, Tuple, Union

from sympy import factorint, isprime, nextprime

from rings.services.errors import InvalidParameterError

Number = Union[int, Fraction]

T1_LOWER, T1_UPPER = "t1.lower", "t1.upper"
T2_LOWER, T2_UPPER = "t2.lower", "t2.upper"
T4_EXPLICIT = "t4.explicit"
BK = "bk"
C25_LOWER, C25_UPPER = "c25.lower", "c25.upper"
C28_LOWER, C28_UPPER = "c28.lower", "c28.upper"
C2_LOWER, C2_UPPER = "c2.lower", "c2.upper"
T6 = "t6"
PRING = "pring"


@dataclass(frozen=True)
class ZeroProfile:
    """n, |Z(R)| (with 0), the |Ann(x)| multiset over nonzero zero divisors, |Ann_{k-1}(R)| and k."""

    n: int
    z: int
    ann_sizes: Tuple[int, ...]
    ann_k_minus_1: int
    k: int

    def validate(self) -> "ZeroProfile":
        if self.k < 2:
            raise InvalidParameterError(f"Profile exponent must be at least 2, got {self.k}.")
        if not 1 <= self.z <= self.n:
            raise InvalidParameterError(f"|Z(R)| = {self.z} must lie in [1, {self.n}].")
        if len(self.ann_sizes) != self.z - 1:
            raise InvalidParameterError(
                f"Profile lists {len(self.ann_sizes)} annihilator sizes for {self.z - 1} nonzero zero divisors."
            )
        if any(not 1 <= a <= self.n for a in self.ann_sizes):
            raise InvalidParameterError(f"Annihilator sizes {self.ann_sizes} must lie in [1, {self.n}].")
        if self.ann_k_minus_1 < 1:
            raise InvalidParameterError("|Ann_{k-1}(R)| is at least 1.")
        return self


@dataclass(frozen=True)
class BoundPair:
    lower: Fraction
    upper: Fraction
    source: str


def poly_P(d: int, x: Number, y: Number) -> Fraction:
    if d < 0:
        raise InvalidParameterError(f"P_d needs d >= 0, got {d}.")
    x, y = Fraction(x), Fraction(y)
    return sum(
        ((-1) ** i * (i + 1) * comb(d + 2, i + 2) * x ** (d - i) * y**i for i in range(d + 1)),
        Fraction(0),
    )


def _common(profile: ZeroProfile) -> Tuple[int, int, int, int, int]:
    profile.validate()
    n, z, k = profile.n, profile.z, profile.k
    base = n ** (k - 1) + (n - z) * profile.ann_k_minus_1
    return n, z, k, base, n**k


def t1_bounds(profile: ZeroProfile) -> BoundPair:
    n, z, k, base, scale = _common(profile)
    lower = base + sum(n ** (k - 1) - (n - a) ** (k - 1) for a in profile.ann_sizes)
    upper = base + sum(
        n ** (k - 1) - (n + (k - 2) * z - (k - 1) * a) * (n - z) ** (k - 2) for a in profile.ann_sizes
    )
    return BoundPair(Fraction(lower, scale), Fraction(upper, scale), "t1")


def t2_bounds(profile: ZeroProfile) -> BoundPair:
    n, z, k, base, scale = _common(profile)
    upper = base + (z - 1) * (n ** (k - 1) - (n - z) ** (k - 1))
    return BoundPair(Fraction(base, scale), Fraction(upper, scale), "t2")


def c25_bounds_k3(profile: ZeroProfile) -> BoundPair:
    profile.validate()
    if profile.k != 3:
        raise InvalidParameterError(f"The k = 3 bounds were requested with k = {profile.k}.")
    n, z, sizes = profile.n, profile.z, profile.ann_sizes
    upper = 3 * n**2 - 3 * n * z + z**3 + 3 * (n - z) * sum(sizes)
    lower = 3 * n**2 - 3 * n * z + z**2 + sum((3 * n - z) * a - a**2 for a in sizes)
    return BoundPair(Fraction(lower, n**3), Fraction(upper, n**3), "c25")


def c28_recursive(zp_prev: Fraction, n: int, z: int, k: int) -> BoundPair:
    """Bounds on zp_k from zp_{k-1}, for k >= 3."""
    if k < 3:
        raise InvalidParameterError(f"The recursive comparison needs k >= 3, got {k}.")
    carried = Fraction(n - z, n) * zp_prev
    extra = n ** (k - 1) + (z - 1) * (n ** (k - 1) - (n - z) ** (k - 1))
    return BoundPair(carried + Fraction(1, n), carried + Fraction(extra, n**k), "c28")


def explicit_upper(n: int, z: int, k: int) -> Fraction:
    if not 1 <= z <= n or k < 2:
        raise InvalidParameterError(f"explicit_upper needs 1 <= z <= n and k >= 2, got n={n}, z={z}, k={k}.")
    return Fraction(n**k - (n + (k - 1) * z - k) * (n - z) ** (k - 1), n**k)


def local_explicit_upper(p: int, alpha: int, i: int, k: int) -> Fraction:
    """explicit_upper for a local ring of order p^alpha with |Z(R)| = p^i."""
    if not 0 <= i < alpha:
        raise InvalidParameterError(f"|Z(R)| = p^{i} is impossible for a local ring of order p^{alpha}.")
    return explicit_upper(p**alpha, p**i, k)


def field_zp(n: int, k: int) -> Fraction:
    if n < 2:
        raise InvalidParameterError(f"field_zp needs n >= 2, got {n}.")
    return Fraction(n**k - (n - 1) ** k, n**k)


def _check_prime_power(p: int, alpha: int, k: int) -> None:
    if not isprime(p):
        raise InvalidParameterError(f"{p} is not prime.")
    if alpha < 1 or k < 2:
        raise InvalidParameterError(f"Need alpha >= 1 and k >= 2, got alpha={alpha}, k={k}.")


def bk(p: int, alpha: int, k: int) -> Fraction:
    """Sharp upper bound for zp_k of a local ring of order p^alpha."""
    _check_prime_power(p, alpha, k)
    numerator = p ** (alpha - 1) * (p**k - (k + p - 1) * (p - 1) ** (k - 1)) + k * (p - 1) ** (k - 1)
    return Fraction(numerator, p ** (k + alpha - 1))


def idealization_zp(p: int, alpha: int, k: int) -> Fraction:
    """zp_k of Z_p * (Z_p)^(alpha-1): Z(R) = 0 * M has p^(alpha-1) elements and squares to zero."""
    _check_prime_power(p, alpha, k)
    return explicit_upper(p**alpha, p ** (alpha - 1), k)


def two_adic_local_bound(alpha: int, k: int) -> Fraction:
    return Fraction(2**k - k - 1, 2**k) + Fraction(k, 2 ** (k + alpha - 1))


def _distinct(factors: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    primes = [p for p, _ in factors]
    if len(set(primes)) != len(primes):
        raise InvalidParameterError(f"Local factors must have distinct primes, got {primes}.")
    return list(factors)


def t6_product_bound(factors: Sequence[Tuple[int, int]], k: int) -> Fraction:
    return prod((bk(p, alpha, k) for p, alpha in _distinct(factors)), start=Fraction(1))


def c2_bounds(factorization: Sequence[Tuple[int, int]], k: int) -> BoundPair:
    pairs = _distinct(factorization)
    lower = prod((field_zp(p**alpha, k) for p, alpha in pairs), start=Fraction(1))
    upper = prod((field_zp(p, k) for p, _ in pairs), start=Fraction(1))
    return BoundPair(lower, upper, "c2")


def factorization(n: int) -> List[Tuple[int, int]]:
    return sorted((int(p), int(a)) for p, a in factorint(n).items())


def zn_upper(n: int, k: int) -> Fraction:
    return t6_product_bound(factorization(n), k)


def zn_exact_product(n: int, k: int) -> Fraction:
    """zp_k(Z_n) from its prime factorization when every exponent is 1 or 2."""
    value = Fraction(1)
    for p, alpha in factorization(n):
        if alpha == 1:
            value *= field_zp(p, k)
        elif alpha == 2:
            value *= bk(p, 2, k)
        else:
            raise InvalidParameterError(f"{n} has the factor {p}^{alpha}; only exponents 1 and 2 are closed.")
    return value


def prime_constraint_threshold(k: int) -> Fraction:
    return Fraction(2**k - k - 1, 2**k)


def prime_threshold_holds(p: int, k: int) -> bool:
    """((p-1)/p)^k <= (k+1)/2^k, compared exactly."""
    return (p - 1) ** k * 2**k <= (k + 1) * p**k


def allowed_primes(k: int) -> List[int]:
    primes: List[int] = []
    p = 2
    while prime_threshold_holds(p, k):
        primes.append(p)
        p = int(nextprime(p))
    return primes


def is_squarefree(n: int) -> bool:
    return all(alpha == 1 for _, alpha in factorization(n))

