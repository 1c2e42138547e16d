"""
Pass/fail records shared by the certification and analysis modules.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

FULL_STRIP = "full_strip"
HALF_STRIP = "half_strip"
FLOOR_STRIP = "floor_strip"
NORM_DISK = "norm_disk"
REAL_STRIP = "real_strip"
DIM45 = "dim45"

STRIP_KINDS = (FULL_STRIP, HALF_STRIP, FLOOR_STRIP)


def strip_bounds(d, kind):
    """
    (lower, upper) of the closed vertical strip `kind` for degree d.

    full:  -d <= Re <= d - 1
    half:  -d/2 <= Re <= d/2 - 1
    floor: -floor(d/2) <= Re <= floor(d/2) - 1, which is empty for d = 1,
           so degree 1 falls back to the half strip.
    """
    if kind == FULL_STRIP:
        return Fraction(-d), Fraction(d - 1)
    if kind == HALF_STRIP or (kind in (FLOOR_STRIP, REAL_STRIP) and d == 1):
        return Fraction(-d, 2), Fraction(d, 2) - 1
    if kind in (FLOOR_STRIP, REAL_STRIP):
        return Fraction(-(d // 2)), Fraction(d // 2 - 1)
    raise ValueError("unknown strip kind {!r}".format(kind))


@dataclass(frozen=True)
class BoundCheck:
    """
    Outcome of checking one bound against a set of roots.

    `passed` holds exactly when `violators` is empty. Margins are signed
    distances to the bound (negative means outside), one per root checked.
    """
    kind: str
    degree: int
    passed: bool
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    radius: Optional[Fraction] = None
    margins: tuple = ()
    violators: tuple = ()
    notes: tuple = ()
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed == bool(self.violators):
            raise ValueError("a bound check passes exactly when it has no violators")

    @property
    def worst_margin(self):
        return min(self.margins) if self.margins else None
