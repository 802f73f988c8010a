from dataclasses import dataclass


@dataclass
class RingError(Exception):
    message: str
    code: str = "ring_error"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return self.message


@dataclass
class InvalidParameterError(RingError):
    code: str = "invalid_parameter"


@dataclass
class CapacityError(RingError):
    code: str = "capacity"


@dataclass
class StructureDomainError(RingError):
    code: str = "domain"


@dataclass
class ExprSyntaxError(RingError):
    offset: int = 0
    code: str = "syntax"

    def __str__(self) -> str:  # pragma: no cover - trivial
        return f"{self.message} (at byte {self.offset})"


@dataclass
class ExprSemanticError(RingError):
    code: str = "semantic"


@dataclass
class CatalogError(RingError):
    code: str = "catalog"


@dataclass
class UsageError(RingError):
    code: str = "usage"
