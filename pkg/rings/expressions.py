"""Ring construction language: the RingExpr AST, its text grammar and formatting.

Grammar::

    expr := term { "x" term }
    term := "Z" int | "GF(" int "^" int ")" | "GF(" int "," int "," poly ")"
          | "Zq(" int "," poly ")" | "Ideal(" expr "," int ")"
          | "Ideal(Z" int ",[" int {"," int} "])" | "(" expr ")"
"""
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from sympy import isprime

from rings.services.errors import ExprSemanticError, ExprSyntaxError, InvalidParameterError
from rings.services.polynomials import Polynomial, format_polynomial, parse_polynomial


@dataclass(frozen=True)
class Zn:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameterError(f"Z_n requires n >= 2, got {self.n}.")


@dataclass(frozen=True)
class GF:
    p: int
    m: int
    poly: Optional[Polynomial] = None

    def __post_init__(self):
        if not isprime(self.p):
            raise InvalidParameterError(f"GF characteristic must be prime, got {self.p}.")
        if self.m < 1:
            raise InvalidParameterError(f"GF degree must be at least 1, got {self.m}.")
        if self.poly is not None and (self.poly.modulus != self.p or self.poly.degree != self.m):
            raise InvalidParameterError(
                f"GF({self.p}^{self.m}) modulus polynomial must have degree {self.m} over Z_{self.p}."
            )


@dataclass(frozen=True)
class Quotient:
    n: int
    f: Polynomial

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameterError(f"Quotient modulus must be at least 2, got {self.n}.")
        if self.f.modulus != self.n:
            raise InvalidParameterError("Quotient polynomial must have coefficients in Z_n.")
        if self.f.degree < 1 or not self.f.is_monic:
            raise InvalidParameterError(f"Quotient polynomial {self.f} must be monic of degree >= 1.")


@dataclass(frozen=True)
class Product:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class Idealize:
    base: Zn
    components: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.base, Zn):
            raise InvalidParameterError("Idealization with cyclic components requires a Z_n base.")
        if not self.components:
            raise InvalidParameterError("Idealization needs at least one module component.")
        for d in self.components:
            if d < 2:
                raise InvalidParameterError(f"Module component modulus must be at least 2, got {d}.")
            if self.base.n % d:
                raise InvalidParameterError(f"Module component Z_{d} is not a Z_{self.base.n}-module: {d} does not divide {self.base.n}.")


@dataclass(frozen=True)
class IdealizePower:
    base: "RingExpr"
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParameterError(f"Idealization power must be at least 1, got {self.t}.")


RingExpr = Union[Zn, GF, Quotient, Product, Idealize, IdealizePower]


def product_factors(expr: RingExpr) -> Tuple[RingExpr, ...]:
    """Flatten nested Product nodes into their non-product factors, left to right."""
    if isinstance(expr, Product):
        return product_factors(expr.left) + product_factors(expr.right)
    return (expr,)


def format_expr(expr: RingExpr) -> str:
    if isinstance(expr, Zn):
        return f"Z{expr.n}"
    if isinstance(expr, GF):
        if expr.poly is None:
            return f"GF({expr.p}^{expr.m})"
        return f"GF({expr.p},{expr.m},{format_polynomial(expr.poly.coefficients)})"
    if isinstance(expr, Quotient):
        return f"Zq({expr.n},{format_polynomial(expr.f.coefficients)})"
    if isinstance(expr, Product):
        right = format_expr(expr.right)
        if isinstance(expr.right, Product):
            right = f"({right})"
        return f"{format_expr(expr.left)} x {right}"
    if isinstance(expr, Idealize):
        return f"Ideal(Z{expr.base.n},[{','.join(str(d) for d in expr.components)}])"
    if isinstance(expr, IdealizePower):
        return f"Ideal({format_expr(expr.base)},{expr.t})"
    raise TypeError(f"Unknown ring expression {expr!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ExprSyntaxError:
        at = self.pos if pos is None else pos
        return ExprSyntaxError(message, offset=len(self.text[:at].encode("utf-8")))

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip_spaces()
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise self.error(f"expected '{token}'")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def polynomial(self, modulus: int) -> Polynomial:
        self.skip_spaces()
        start = self.pos
        end = self.text.find(")", start)
        if end < 0:
            raise self.error("unterminated polynomial, expected ')'")
        try:
            poly = parse_polynomial(self.text[start:end], modulus)
        except ValueError as exc:
            message, offset = exc.args
            raise self.error(message, start + offset) from exc
        self.pos = end
        return poly

    def semantic(self, build, start: int):
        try:
            return build()
        except InvalidParameterError as exc:
            raise ExprSemanticError(f"{exc.message} (term at byte {len(self.text[:start].encode('utf-8'))})") from exc

    def expr(self) -> RingExpr:
        result = self.term()
        while self.peek("x"):
            self.pos += 1
            right = self.term()
            result = Product(result, right)
        return result

    def term(self) -> RingExpr:
        self.skip_spaces()
        start = self.pos
        if self.peek("("):
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if self.peek("Zq("):
            self.pos += 3
            n = self.integer()
            self.expect(",")
            f = self.polynomial(n if n >= 2 else 2)
            self.expect(")")
            return self.semantic(lambda: Quotient(n, f), start)
        if self.peek("GF("):
            self.pos += 3
            p = self.integer()
            if self.peek("^"):
                self.pos += 1
                m = self.integer()
                self.expect(")")
                return self.semantic(lambda: GF(p, m), start)
            self.expect(",")
            m = self.integer()
            self.expect(",")
            poly = self.polynomial(p if p >= 2 else 2)
            self.expect(")")
            return self.semantic(lambda: GF(p, m, poly), start)
        if self.peek("Ideal("):
            self.pos += 6
            base = self.expr()
            self.expect(",")
            if self.peek("["):
                self.pos += 1
                components = [self.integer()]
                while self.peek(","):
                    self.pos += 1
                    components.append(self.integer())
                self.expect("]")
                self.expect(")")
                if not isinstance(base, Zn):
                    raise ExprSemanticError(
                        f"Ideal(...,[...]) requires a Z_n base, got {format_expr(base)} "
                        f"(term at byte {len(self.text[:start].encode('utf-8'))})"
                    )
                return self.semantic(lambda: Idealize(base, tuple(components)), start)
            t = self.integer()
            self.expect(")")
            return self.semantic(lambda: IdealizePower(base, t), start)
        if self.peek("Z"):
            self.pos += 1
            n = self.integer()
            return self.semantic(lambda: Zn(n), start)
        raise self.error("expected a ring term")


def parse_expr(text: str) -> RingExpr:
    parser = _Parser(text)
    result = parser.expr()
    parser.skip_spaces()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return result


def expr_order(expr: RingExpr) -> int:
    """Number of elements of the ring an expression denotes, without materializing it."""
    if isinstance(expr, Zn):
        return expr.n
    if isinstance(expr, GF):
        return expr.p**expr.m
    if isinstance(expr, Quotient):
        return expr.n**expr.f.degree
    if isinstance(expr, Product):
        return expr_order(expr.left) * expr_order(expr.right)
    if isinstance(expr, Idealize):
        order = expr.base.n
        for d in expr.components:
            order *= d
        return order
    if isinstance(expr, IdealizePower):
        return expr_order(expr.base) ** (expr.t + 1)
    raise TypeError(f"Unknown ring expression {expr!r}")
