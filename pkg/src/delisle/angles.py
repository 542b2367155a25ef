"""Degree-carrying angle arithmetic and sexagesimal text handling.

Angles in this package are plain floats holding decimal degrees; radians
appear only inside trigonometric calls.  Every degree-to-radian
conversion anywhere in the package goes through the single constant
defined here, so there is exactly one conversion path to audit.
"""

from __future__ import annotations

import math
import re

__all__ = [
    "RAD_PER_DEG",
    "DmsParseError",
    "DmsRangeError",
    "dms_format",
    "dms_parse",
    "to_degrees",
    "to_radians",
]

# One degree expressed in radians; the package's only conversion factor.
RAD_PER_DEG = math.pi / 180.0

_DEGREE = "°"
_PRIME = "′"
_DOUBLE_PRIME = "″"

_PRECISION_UNITS = {"degrees": 1, "minutes": 60, "seconds": 3600}


class DmsParseError(ValueError):
    """Text does not match the sexagesimal or decimal angle grammar."""


class DmsRangeError(ValueError):
    """A minutes or seconds component lies outside [0, 60)."""


def to_radians(degrees: float) -> float:
    return degrees * RAD_PER_DEG


def to_degrees(radians: float) -> float:
    return radians / RAD_PER_DEG


def dms_format(angle: float, precision: str = "seconds") -> str:
    """Render decimal degrees as sexagesimal text, e.g. 45.0167 -> "45°1′".

    precision picks the last rendered component ("degrees", "minutes" or
    "seconds"); the angle is rounded to that unit.  Leading zero
    components are dropped ("49′5″", not "0°49′5″") except when the whole
    angle rounds to zero.  A negative angle carries one leading sign for
    the whole triple, never per-component signs.
    """
    if not math.isfinite(angle):
        raise ValueError(f"cannot format non-finite angle {angle!r}")
    try:
        unit = _PRECISION_UNITS[precision]
    except KeyError:
        raise ValueError(f"unknown precision {precision!r}") from None
    total = round(abs(angle) * unit)
    sign = "-" if (angle < 0 and total > 0) else ""
    if precision == "degrees":
        return f"{sign}{total}{_DEGREE}"
    if precision == "minutes":
        deg, minutes = divmod(total, 60)
        parts = [(deg, _DEGREE), (minutes, _PRIME)]
    else:
        minutes, seconds = divmod(total, 60)
        deg, minutes = divmod(minutes, 60)
        parts = [(deg, _DEGREE), (minutes, _PRIME), (seconds, _DOUBLE_PRIME)]
    while len(parts) > 1 and parts[0][0] == 0 and total > 0:
        parts.pop(0)
    return sign + "".join(f"{value}{mark}" for value, mark in parts)


# One sexagesimal component: a number followed by its unit mark.  ASCII
# stand-ins (' for minutes, '' or " for seconds) are accepted on input;
# output always uses the typographic marks.
_COMPONENT_RE = re.compile(
    r"\s*(\d+(?:\.\d+)?)\s*(°|′|″|''|'|\")", re.UNICODE
)
_MARK_KIND = {
    "°": "degrees",
    "′": "minutes",
    "'": "minutes",
    "″": "seconds",
    "''": "seconds",
    '"': "seconds",
}
_KIND_ORDER = {"degrees": 0, "minutes": 1, "seconds": 2}
_KIND_UNIT = {"degrees": 1.0, "minutes": 60.0, "seconds": 3600.0}


def dms_parse(text: str) -> float:
    """Parse sexagesimal text ("54°4′", "49′5″") or plain decimal degrees.

    Components may be omitted from either end but must appear in
    degree-minute-second order; only the last present component may carry
    a decimal fraction.  Raises DmsParseError for malformed text (naming
    the offending token) and DmsRangeError for minutes or seconds >= 60.
    """
    if not isinstance(text, str):
        raise DmsParseError(f"expected angle text, got {text!r}")
    s = text.strip()
    if not s:
        raise DmsParseError("empty angle text")
    try:
        plain = float(s)
    except ValueError:
        pass
    else:
        if not math.isfinite(plain):
            raise DmsParseError(f"non-finite angle text {text!r}")
        return plain

    pos = 0
    sign = 1.0
    if s[0] in "+-":
        sign = -1.0 if s[0] == "-" else 1.0
        pos = 1

    value = 0.0
    seen: list[str] = []
    fractional_seen = False
    while pos < len(s):
        m = _COMPONENT_RE.match(s, pos)
        if m is None:
            raise DmsParseError(
                f"malformed angle text {text!r}: unexpected token {s[pos:].strip()!r}"
            )
        number, mark = m.group(1), m.group(2)
        kind = _MARK_KIND[mark]
        if seen and _KIND_ORDER[kind] <= _KIND_ORDER[seen[-1]]:
            raise DmsParseError(
                f"malformed angle text {text!r}: component {number + mark!r} out of order"
            )
        if fractional_seen:
            raise DmsParseError(
                f"malformed angle text {text!r}: only the last component may be fractional"
            )
        component = float(number)
        if kind != "degrees" and component >= 60.0:
            raise DmsRangeError(
                f"{kind} component {number} in {text!r} outside [0, 60)"
            )
        value += component / _KIND_UNIT[kind]
        seen.append(kind)
        fractional_seen = "." in number
        pos = m.end()
    if not seen:
        raise DmsParseError(f"malformed angle text {text!r}: no components")
    return sign * value
