"""Exact possibility degrees stored as thousandths."""

from __future__ import annotations

import re
from decimal import Decimal
from fractions import Fraction
from typing import Any

from pydantic import GetCoreSchemaHandler, GetJsonSchemaHandler
from pydantic_core import core_schema

from ..errors import DegreeRangeError

SCALE = 1000

_LITERAL = re.compile(r"^\s*(\d+)(?:\.(\d+))?\s*$")


class Degree(int):
    """A degree in [0, 1] held as an integer count of thousandths.

    Only min, max and 1 - x are ever applied to degrees, so every result stays
    exact. ``Degree(600)`` is 0.6; use :meth:`of` or :meth:`parse` for decimals.
    """

    __slots__ = ()

    def __new__(cls, thousandths: int = 0) -> Degree:
        if isinstance(thousandths, bool) or not isinstance(thousandths, int):
            raise DegreeRangeError(
                f"degree must be built from integer thousandths, got {thousandths!r}"
            )
        if not 0 <= thousandths <= SCALE:
            raise DegreeRangeError(f"degree {Fraction(thousandths, SCALE)} is outside [0, 1]")
        return super().__new__(cls, thousandths)

    @classmethod
    def parse(cls, text: str) -> Degree:
        """Parse a decimal literal with at most three fractional digits."""
        match = _LITERAL.match(text)
        if match is None:
            raise DegreeRangeError(f"malformed degree literal {text!r}")
        whole, frac = match.group(1), match.group(2) or ""
        if len(frac) > 3:
            if frac[3:].strip("0"):
                raise DegreeRangeError(f"degree {text.strip()} is finer than thousandths")
            frac = frac[:3]
        value = int(whole) * SCALE + int(frac.ljust(3, "0") or "0")
        if value > SCALE:
            raise DegreeRangeError(f"degree {text.strip()} is outside [0, 1]")
        return cls(value)

    @classmethod
    def of(cls, value: Degree | str | float | Decimal | Fraction) -> Degree:
        """Coerce a decimal-like value into an exact degree."""
        if isinstance(value, Degree):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, int):
            if value in (0, 1):
                return cls(int(value) * SCALE)
            raise DegreeRangeError(f"degree {value} is outside [0, 1]")
        if isinstance(value, float):
            value = Decimal(repr(value))
        scaled = Fraction(value) * SCALE
        if scaled.denominator != 1:
            raise DegreeRangeError(f"degree {value} is finer than thousandths")
        return cls(int(scaled))

    def complement(self) -> Degree:
        return Degree(SCALE - int(self))

    def to_fraction(self) -> Fraction:
        return Fraction(int(self), SCALE)

    def to_decimal(self) -> Decimal:
        return Decimal(int(self)) / SCALE

    def __str__(self) -> str:
        whole, frac = divmod(int(self), SCALE)
        if not frac:
            return str(whole)
        return f"{whole}.{frac:03d}".rstrip("0")

    def __repr__(self) -> str:
        return f"Degree({self})"

    def __format__(self, spec: str) -> str:
        if not spec:
            return str(self)
        return format(int(self), spec)

    @classmethod
    def _validate(cls, value: Any) -> Degree:
        try:
            return cls.of(value)
        except (DegreeRangeError, TypeError, ValueError) as exc:
            raise ValueError(str(exc)) from exc

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source_type: Any, handler: GetCoreSchemaHandler
    ) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls._validate,
            serialization=core_schema.plain_serializer_function_ser_schema(str, when_used="json"),
        )

    @classmethod
    def __get_pydantic_json_schema__(
        cls, schema: core_schema.CoreSchema, handler: GetJsonSchemaHandler
    ) -> dict[str, Any]:
        return {
            "type": "string",
            "pattern": r"^(0(\.\d{1,3})?|1(\.0{1,3})?)$",
            "description": "exact degree in [0, 1], at most three fractional digits",
        }


ZERO = Degree(0)
ONE = Degree(SCALE)


def degree_grid(levels: int = 11) -> tuple[Degree, ...]:
    """Evenly spaced degrees 0, 1/(levels-1), ..., 1 (levels must divide the scale)."""
    if levels < 2 or SCALE % (levels - 1):
        raise DegreeRangeError(f"{levels} levels do not fall on thousandths")
    step = SCALE // (levels - 1)
    return tuple(Degree(i * step) for i in range(levels))
