import math
from typing import Any, Mapping, Optional, TypeVar, cast

TSetting = TypeVar("TSetting")


def get_setting_optional(
    settings: Mapping[str, Any],
    setting_name: str,
    default: Optional[TSetting] = None,
) -> Optional[TSetting]:
    """Helper function to get optional settings from a configuration
    mapping"""
    setting: Optional[TSetting]
    try:
        setting = cast(TSetting, settings[setting_name])
    except KeyError:
        setting = default
    if setting is None:
        setting = default
    return setting


def parse_bound(value: Any) -> float:
    """Interpret a JSON interval bound, accepting ``"inf"``/``"-inf"``
    strings for infinite bounds."""
    bound = float(value)
    if math.isnan(bound):
        raise ValueError(f"Interval bound {value!r} is not a number")
    return bound


def format_complex(value: complex) -> str:
    """Format a complex number as ``re+imi``, e.g. ``0.0-1.0i``."""
    value = complex(value)
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"
