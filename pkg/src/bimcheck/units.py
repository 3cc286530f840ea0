"""Unit-aware quantities for lengths, areas, and airflow.

Internally the package works in canonical units (millimeters for length,
square feet for area, CFM for flow); these wrappers keep the unit visible
at API boundaries and make conversions explicit. Conversion factors are
exact by definition: 1 in = 25.4 mm, 1 ft = 304.8 mm, 1 ft2 = 0.09290304 m2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class LengthUnit(str, enum.Enum):
    MM = "mm"
    IN = "in"
    FT = "ft"


MM_PER_UNIT: dict[LengthUnit, float] = {
    LengthUnit.MM: 1.0,
    LengthUnit.IN: 25.4,
    LengthUnit.FT: 304.8,
}


class AreaUnit(str, enum.Enum):
    SQFT = "sqft"
    SQM = "sqm"


SQM_PER_SQFT = 0.09290304


@dataclass(frozen=True)
class Length:
    """A length with an explicit unit. Negative values are permitted in
    arithmetic results (e.g. elevation differences); file loaders enforce
    non-negativity where the schema requires it."""

    value: float
    unit: LengthUnit = LengthUnit.MM

    @classmethod
    def mm(cls, value: float) -> "Length":
        return cls(value, LengthUnit.MM)

    @classmethod
    def inches(cls, value: float) -> "Length":
        return cls(value, LengthUnit.IN)

    @classmethod
    def feet(cls, value: float) -> "Length":
        return cls(value, LengthUnit.FT)

    @property
    def as_mm(self) -> float:
        return self.value * MM_PER_UNIT[self.unit]

    @property
    def as_inches(self) -> float:
        return self.as_mm / MM_PER_UNIT[LengthUnit.IN]

    @property
    def as_feet(self) -> float:
        return self.as_mm / MM_PER_UNIT[LengthUnit.FT]

    def to(self, unit: LengthUnit) -> "Length":
        if unit == self.unit:
            return self
        return Length(self.as_mm / MM_PER_UNIT[unit], unit)


@dataclass(frozen=True)
class Area:
    value: float
    unit: AreaUnit = AreaUnit.SQFT

    @classmethod
    def sqft(cls, value: float) -> "Area":
        return cls(value, AreaUnit.SQFT)

    @classmethod
    def sqm(cls, value: float) -> "Area":
        return cls(value, AreaUnit.SQM)

    @property
    def as_sqft(self) -> float:
        if self.unit == AreaUnit.SQFT:
            return self.value
        return self.value / SQM_PER_SQFT

    @property
    def as_sqm(self) -> float:
        return self.as_sqft * SQM_PER_SQFT

    def to(self, unit: AreaUnit) -> "Area":
        if unit == self.unit:
            return self
        if unit == AreaUnit.SQFT:
            return Area(self.as_sqft, unit)
        return Area(self.as_sqm, unit)


@dataclass(frozen=True)
class Flow:
    """Airflow in cubic feet per minute."""

    cfm: float


def convert_length(q: Length, target: LengthUnit) -> Length:
    """Exact-factor unit conversion; 80 in -> 2032.0 mm."""
    return q.to(target)


def convert_area(q: Area, target: AreaUnit) -> Area:
    return q.to(target)
