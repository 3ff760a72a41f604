"""Exception hierarchy shared by the library and the CLI.

Every error carries a stable ``code`` (reported in the CLI error object) and
the process ``exit_code`` the CLI returns for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, ClassVar

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 2
EXIT_PARSE_ERROR = 3

__all__ = [
    "EXIT_OK",
    "EXIT_DOMAIN_ERROR",
    "EXIT_PARSE_ERROR",
    "FwpsError",
    "LatticeError",
    "ZeroVectorError",
    "LatticeOverflowError",
    "UnderflowError",
    "FanValidationError",
    "DimensionMismatchError",
    "NotPrimitiveError",
    "WrongCountError",
    "NotSpanningError",
    "NoPositiveRelationError",
    "InvalidWeightsError",
    "ActionError",
    "InvalidModulusError",
    "DegenerateExtensionError",
    "NotFreeInCodim1Error",
    "NotPrimitiveRayError",
    "CoverNotP2Error",
    "NonCyclicDeckGroupError",
    "InputParseError",
]


@dataclass(eq=False)
class FwpsError(Exception):
    """Base error carrying a message and optional structured details."""

    message: str
    details: dict[str, Any] = field(default_factory=dict)

    code: ClassVar[str] = "FwpsError"
    exit_code: ClassVar[int] = EXIT_DOMAIN_ERROR

    def __post_init__(self) -> None:
        super().__init__(self.message)

    def __str__(self) -> str:
        return self.message

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"error": self.code, "message": self.message}
        payload.update(self.details)
        return payload


class LatticeError(FwpsError):
    code = "LatticeError"


class ZeroVectorError(LatticeError):
    code = "ZeroVector"


class LatticeOverflowError(LatticeError):
    code = "Overflow"


class UnderflowError(LatticeError):
    code = "Underflow"


class FanValidationError(FwpsError):
    code = "InvalidFan"


class DimensionMismatchError(FanValidationError):
    code = "DimensionMismatch"


class NotPrimitiveError(FanValidationError):
    code = "NotPrimitive"

    @classmethod
    def for_ray(cls, index: int, ray: tuple[int, ...]) -> "NotPrimitiveError":
        return cls(f"ray {index} {list(ray)} is not primitive", {"index": index})


class WrongCountError(FanValidationError):
    code = "WrongCount"


class NotSpanningError(FanValidationError):
    code = "NotSpanning"


class NoPositiveRelationError(FanValidationError):
    code = "NoPositiveRelation"


class InvalidWeightsError(FanValidationError):
    code = "InvalidWeights"


class ActionError(FwpsError):
    code = "InvalidAction"


class InvalidModulusError(ActionError):
    code = "InvalidModulus"


class DegenerateExtensionError(ActionError):
    code = "DegenerateExtension"


class NotFreeInCodim1Error(ActionError):
    code = "NotFreeInCodim1"


class NotPrimitiveRayError(ActionError):
    code = "NotPrimitiveRay"


class CoverNotP2Error(ActionError):
    code = "CoverNotP2"


class NonCyclicDeckGroupError(ActionError):
    code = "NonCyclicDeckGroup"


class InputParseError(FwpsError):
    code = "InputParse"
    exit_code = EXIT_PARSE_ERROR
