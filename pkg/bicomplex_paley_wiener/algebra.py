"""
Bicomplex and hyperbolic numbers.

A bicomplex number ``Z = x0 + i x1 + j x2 + k x3`` (with commuting units
``i``, ``j`` and ``k = ij``) is stored by its four real coefficients. The
complex pair ``Z = z1 + j z2`` and the idempotent pair ``Z = e b1 + e' b2``
with ``e = (1 + k) / 2`` and ``e' = (1 - k) / 2`` are derived views::

    z1 = x0 + i x1            b1 = z1 - i z2 = (x0 + x3) + i (x1 - x2)
    z2 = x2 + i x3            b2 = z1 + i z2 = (x0 - x3) + i (x1 + x2)

Hyperbolic numbers ``a + k b`` are the bicomplex numbers with real
idempotent components ``s1 = a + b`` and ``s2 = a - b``; they carry every
norm and bound in this package and are ordered componentwise.
"""

from __future__ import annotations

import cmath
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from bicomplex_paley_wiener.exception import ZeroDivisorError

logger = logging.getLogger(__name__)

Real = Union[int, float]

_TERM = re.compile(
    r"(?P<sign>[+-]*)"
    r"(?P<coefficient>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"\*?(?P<unit>[ijk]?)"
)
_UNITS = {"": 0, "i": 1, "j": 2, "k": 3}


@dataclass(frozen=True)
class Bicomplex:
    """A point of the bicomplex algebra, stored by cartesian coefficients.

    The ``*`` operator multiplies in cartesian coordinates, while
    :func:`mul` multiplies componentwise in idempotent coordinates; both
    agree up to rounding.
    """

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    @classmethod
    def from_complex_pair(cls, z1: complex, z2: complex) -> Bicomplex:
        """Build ``z1 + j z2``."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    @classmethod
    def from_idempotent(cls, beta1: complex, beta2: complex) -> Bicomplex:
        """Build ``e beta1 + e' beta2``."""
        beta1, beta2 = complex(beta1), complex(beta2)
        return cls(
            (beta1.real + beta2.real) / 2,
            (beta1.imag + beta2.imag) / 2,
            (beta2.imag - beta1.imag) / 2,
            (beta1.real - beta2.real) / 2,
        )

    @classmethod
    def parse(cls, text: str) -> Bicomplex:
        """Parse ``"x0 + x1 i + x2 j + x3 k"`` or ``"x0,x1,x2,x3"``.

        Terms may be omitted or repeated, a unit without a coefficient means
        a coefficient of one (``"1 + j"``), and ``*`` between coefficient and
        unit is accepted.

        Raises:
            ValueError: If the text is neither of the two forms.
        """
        compact = "".join(text.split())
        if not compact:
            raise ValueError("Cannot parse an empty bicomplex number")
        if "," in compact:
            parts = compact.split(",")
            if len(parts) != 4:
                raise ValueError(
                    f"Invalid bicomplex tuple '{text}'. "
                    "Expected four comma separated coefficients x0,x1,x2,x3"
                )
            return cls(*(float(part) for part in parts))

        coefficients = [0.0, 0.0, 0.0, 0.0]
        position = 0
        while position < len(compact):
            match = _TERM.match(compact, position)
            if (
                match is None
                or not (match["coefficient"] or match["unit"])
                or (position > 0 and not match["sign"])
            ):
                raise ValueError(
                    f"Cannot parse bicomplex number '{text}'. Expected the "
                    "form 'x0 + x1 i + x2 j + x3 k' or 'x0,x1,x2,x3'"
                )
            value = float(match["coefficient"] or 1.0)
            if match["sign"].count("-") % 2:
                value = -value
            coefficients[_UNITS[match["unit"]]] += value
            position = match.end()
        return cls(*coefficients)

    @property
    def z1(self) -> complex:
        return complex(self.x0, self.x1)

    @property
    def z2(self) -> complex:
        return complex(self.x2, self.x3)

    @property
    def beta1(self) -> complex:
        return complex(self.x0 + self.x3, self.x1 - self.x2)

    @property
    def beta2(self) -> complex:
        return complex(self.x0 - self.x3, self.x1 + self.x2)

    @property
    def coefficients(self) -> Tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def is_finite(self) -> bool:
        return all(math.isfinite(x) for x in self.coefficients)

    def as_csv(self) -> str:
        """The 4-tuple form ``x0,x1,x2,x3``."""
        return ",".join(repr(float(x)) for x in self.coefficients)

    def __str__(self) -> str:
        text = repr(float(self.x0))
        for value, unit in zip((self.x1, self.x2, self.x3), "ijk"):
            sign = "-" if math.copysign(1.0, value) < 0 else "+"
            text += f" {sign} {abs(float(value))!r} {unit}"
        return text

    def __add__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Bicomplex(
            self.x0 + other.x0,
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
        )

    __radd__ = __add__

    def __neg__(self) -> Bicomplex:
        return Bicomplex(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (z1 + j z2)(w1 + j w2) with j^2 = -1
        z1, z2, w1, w2 = self.z1, self.z2, other.z1, other.z2
        return Bicomplex.from_complex_pair(
            z1 * w1 - z2 * w2, z1 * w2 + z2 * w1
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, invert(other))

    def __rtruediv__(self, other: object) -> Bicomplex:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(other, invert(self))


def _coerce(value: object) -> Union[Bicomplex, None]:
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, Hyperbolic):
        return value.as_bicomplex()
    if isinstance(value, (int, float, complex, np.number)):
        z = complex(value)  # type: ignore[arg-type]
        return Bicomplex(z.real, z.imag, 0.0, 0.0)
    return None


ZERO = Bicomplex()
ONE = Bicomplex(1.0)
I = Bicomplex(0.0, 1.0)  # noqa: E741
J = Bicomplex(0.0, 0.0, 1.0)
K = Bicomplex(0.0, 0.0, 0.0, 1.0)
E = Bicomplex(0.5, 0.0, 0.0, 0.5)
E_DAGGER = Bicomplex(0.5, 0.0, 0.0, -0.5)


@dataclass(frozen=True)
class Hyperbolic:
    """A hyperbolic number ``a + k b`` with idempotent components
    ``s1 = a + b`` and ``s2 = a - b``."""

    a: float = 0.0
    b: float = 0.0

    @classmethod
    def from_idempotent(cls, s1: Real, s2: Real) -> Hyperbolic:
        return cls((s1 + s2) / 2, (s1 - s2) / 2)

    @property
    def s1(self) -> float:
        return self.a + self.b

    @property
    def s2(self) -> float:
        return self.a - self.b

    @property
    def components(self) -> Tuple[float, float]:
        return (self.s1, self.s2)

    @property
    def nonneg(self) -> bool:
        return self.s1 >= 0 and self.s2 >= 0

    def max_component(self) -> float:
        return max(self.s1, self.s2)

    def as_bicomplex(self) -> Bicomplex:
        return Bicomplex(self.a, 0.0, 0.0, self.b)

    def exp(self) -> Hyperbolic:
        return Hyperbolic.from_idempotent(math.exp(self.s1), math.exp(self.s2))

    def __add__(self, other: object) -> Hyperbolic:
        if isinstance(other, (int, float)):
            other = Hyperbolic(float(other))
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> Hyperbolic:
        return Hyperbolic(-self.a, -self.b)

    def __sub__(self, other: object) -> Hyperbolic:
        if isinstance(other, (int, float)):
            other = Hyperbolic(float(other))
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.a - other.a, self.b - other.b)

    def __mul__(self, other: object) -> Hyperbolic:
        if isinstance(other, (int, float)):
            return Hyperbolic(self.a * other, self.b * other)
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        # k^2 = 1
        return Hyperbolic(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"e*{self.s1!r} + e'*{self.s2!r}"


class Comparison(Enum):
    """Outcome of comparing two hyperbolic numbers in the partial order."""

    TRUE = "true"
    FALSE = "false"
    INCOMPARABLE = "incomparable"

    def __bool__(self) -> bool:
        return self is Comparison.TRUE


def to_idempotent(z: Bicomplex) -> Tuple[complex, complex]:
    """Return the idempotent components ``(beta1, beta2)`` of ``z``."""
    return z.beta1, z.beta2


def from_idempotent(beta1: complex, beta2: complex) -> Bicomplex:
    """Inverse of :func:`to_idempotent`."""
    return Bicomplex.from_idempotent(beta1, beta2)


def idempotent_arrays(
    points: Iterable[Bicomplex],
) -> Tuple[np.ndarray, np.ndarray]:
    """Split bicomplex points into two complex arrays of idempotent
    components."""
    points = list(points)
    beta1 = np.array([p.beta1 for p in points], dtype=complex)
    beta2 = np.array([p.beta2 for p in points], dtype=complex)
    return beta1, beta2


def from_idempotent_arrays(
    beta1: Sequence[complex], beta2: Sequence[complex]
) -> List[Bicomplex]:
    """Inverse of :func:`idempotent_arrays`."""
    return [Bicomplex.from_idempotent(b1, b2) for b1, b2 in zip(beta1, beta2)]


def mul(z: Bicomplex, w: Bicomplex) -> Bicomplex:
    """Multiply componentwise in idempotent coordinates."""
    return Bicomplex.from_idempotent(z.beta1 * w.beta1, z.beta2 * w.beta2)


def invert(z: Bicomplex) -> Bicomplex:
    """Multiplicative inverse of ``z``.

    Raises:
        ZeroDivisorError: If an idempotent component of ``z`` vanishes.
    """
    beta1, beta2 = to_idempotent(z)
    if beta1 == 0 or beta2 == 0:
        raise ZeroDivisorError(
            f"{z} is not invertible: idempotent components "
            f"({beta1}, {beta2}) contain a zero"
        )
    return Bicomplex.from_idempotent(1 / beta1, 1 / beta2)


def conjugate_star(z: Bicomplex) -> Bicomplex:
    """Conjugate both idempotent components, mapping the upper half-plane
    onto the lower one."""
    # conj(b1), conj(b2) flips the sign of x1 and x2 and nothing else
    return Bicomplex(z.x0, -z.x1, -z.x2, z.x3)


def exp_bc(z: Bicomplex) -> Bicomplex:
    return Bicomplex.from_idempotent(cmath.exp(z.beta1), cmath.exp(z.beta2))


def hyperbolic_norm(z: Bicomplex) -> Hyperbolic:
    """Hyperbolic-valued norm ``e |beta1| + e' |beta2|``."""
    return Hyperbolic.from_idempotent(abs(z.beta1), abs(z.beta2))


def leq_d(h1: Hyperbolic, h2: Hyperbolic) -> Comparison:
    """Compare ``h1 <= h2`` in the componentwise partial order."""
    first = h1.s1 <= h2.s1
    second = h1.s2 <= h2.s2
    if first and second:
        return Comparison.TRUE
    if not first and not second:
        return Comparison.FALSE
    return Comparison.INCOMPARABLE
