# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
r"""
Exact arithmetic in the ring of integers of :math:`\mathbb{Q}(\sqrt{D})`.

Elements are stored in the basis :math:`\{1, \omega_D\}` where
:math:`\omega_D = \sqrt{D}` for :math:`D \equiv 2,3 \pmod 4` and
:math:`\omega_D = (1+\sqrt{D})/2` for :math:`D \equiv 1 \pmod 4`. Python integers carry
the coordinates, so nothing overflows and nothing is rounded.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt as _math_isqrt
from typing import Tuple, Union

import numpy as np

from quadsos.exceptions import FieldMismatchError, NotSquarefreeError
from .utils import sign_surd

MODE_1 = 1
"""Basis flag for :math:`D \\equiv 1 \\pmod 4`."""

MODE_23 = 23
"""Basis flag for :math:`D \\equiv 2,3 \\pmod 4`."""


def isqrt(n: int) -> int:
    """Return ``r`` with ``r**2 <= n < (r + 1)**2``.

    Raises:
        ValueError: if ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}.")
    return _math_isqrt(n)


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    """Trial division test: True iff no prime square divides ``n >= 2``."""
    if n < 2:
        raise ValueError(f"is_squarefree expects n >= 2, got {n}.")
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 2
    return True


def squarefree_sieve(n_max: int) -> np.ndarray:
    """Boolean mask ``mask[d]`` telling whether ``d`` is squarefree, for ``0 <= d <= n_max``.

    Entries 0 and 1 are False so the mask can be used directly to select field
    parameters ``d >= 2``.
    """
    mask = np.ones(n_max + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(n_max) + 1):
        mask[p * p :: p * p] = False
    return mask


def check_field(d: int) -> int:
    """Validate a field parameter and return it.

    Raises:
        NotSquarefreeError: if ``d < 2`` or ``d`` is not squarefree.
    """
    if d < 2:
        raise NotSquarefreeError(f"Field parameter D={d} must be at least 2.")
    if not is_squarefree(d):
        raise NotSquarefreeError(f"Field parameter D={d} is not squarefree.")
    return d


def basis_mode(d: int) -> int:
    """:data:`MODE_1` or :data:`MODE_23` according to ``d mod 4``."""
    return MODE_1 if d % 4 == 1 else MODE_23


@dataclass(frozen=True)
class QuadInt:
    r"""The element :math:`x + y\,\omega_D` of the ring of integers.

    Construction checks that ``d`` is a valid field parameter; the check is cached per
    ``d`` so arithmetic stays cheap.
    """

    x: int
    y: int
    d: int

    def __post_init__(self):
        check_field(self.d)

    @classmethod
    def from_int(cls, value: int, d: int) -> "QuadInt":
        """The rational integer ``value`` as an element of the field of ``d``."""
        return cls(value, 0, d)

    @classmethod
    def omega(cls, d: int) -> "QuadInt":
        r"""The generator :math:`\omega_D`."""
        return cls(0, 1, d)

    @classmethod
    def from_half(cls, big_x: int, big_y: int, d: int) -> "QuadInt":
        r"""The element :math:`(X + Y\sqrt{D})/2`.

        Raises:
            ValueError: if the element is not an algebraic integer.
        """
        if basis_mode(d) == MODE_1:
            if (big_x - big_y) % 2:
                raise ValueError(f"({big_x} + {big_y}*sqrt({d}))/2 is not an integer of the field.")
            return cls((big_x - big_y) // 2, big_y, d)
        if big_x % 2 or big_y % 2:
            raise ValueError(f"({big_x} + {big_y}*sqrt({d}))/2 is not an integer of the field.")
        return cls(big_x // 2, big_y // 2, d)

    @property
    def mode(self) -> int:
        """Basis flag of the field."""
        return basis_mode(self.d)

    def half_coords(self) -> Tuple[int, int]:
        r"""Integers ``(X, Y)`` with ``self == (X + Y*sqrt(D)) / 2``."""
        if self.mode == MODE_1:
            return 2 * self.x + self.y, self.y
        return 2 * self.x, 2 * self.y

    def sqrt_coefficient(self) -> int:
        r"""Coefficient ``Y`` of :math:`\sqrt{D}` in ``(X + Y*sqrt(D)) / 2``.

        For :math:`D \equiv 2,3` this is twice the coefficient of :math:`\sqrt{D}` itself.
        """
        return self.half_coords()[1]

    def _coerce(self, other: Union["QuadInt", int]) -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(other, 0, self.d)
        if other.d != self.d:
            raise FieldMismatchError(
                f"Cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))."
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return QuadInt(self.x + other.x, self.y + other.y, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return QuadInt(self.x - other.x, self.y - other.y, self.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return QuadInt(-self.x, -self.y, self.d)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(other * self.x, other * self.y, self.d)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not elements of the ring in general.")
        result = QuadInt(1, 0, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            base = mul(base, base)
            exponent >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        """Galois conjugate."""
        return conjugate(self)

    def norm(self) -> int:
        """Field norm."""
        return norm(self)

    def trace(self) -> int:
        """Field trace."""
        return trace(self)

    def is_totally_positive(self) -> bool:
        """True iff both real embeddings are positive."""
        return is_totally_positive(self)

    def approx(self) -> Tuple[float, float]:
        """Floating point values of both embeddings, for display only."""
        big_x, big_y = self.half_coords()
        root = float(self.d) ** 0.5
        return (big_x + big_y * root) / 2, (big_x - big_y * root) / 2

    def __str__(self):
        name = "sqrt(%d)" % self.d if self.mode == MODE_23 else "w%d" % self.d
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return "%d*%s" % (self.y, name)
        sign = "+" if self.y > 0 else "-"
        return "%d %s %d*%s" % (self.x, sign, abs(self.y), name)


def mul(a: QuadInt, b: QuadInt) -> QuadInt:
    r"""Exact product; for :math:`D \equiv 1` uses :math:`\omega^2 = \omega + (D-1)/4`.

    Raises:
        FieldMismatchError: if the operands belong to different fields.
    """
    if a.d != b.d:
        raise FieldMismatchError(f"Cannot multiply elements of Q(sqrt({a.d})) and Q(sqrt({b.d})).")
    yy = a.y * b.y
    if a.mode == MODE_1:
        return QuadInt(a.x * b.x + yy * ((a.d - 1) // 4), a.x * b.y + a.y * b.x + yy, a.d)
    return QuadInt(a.x * b.x + yy * a.d, a.x * b.y + a.y * b.x, a.d)


def conjugate(a: QuadInt) -> QuadInt:
    r"""Galois conjugate; :math:`\omega' = 1 - \omega` for :math:`D \equiv 1`."""
    if a.mode == MODE_1:
        return QuadInt(a.x + a.y, -a.y, a.d)
    return QuadInt(a.x, -a.y, a.d)


def norm(a: QuadInt) -> int:
    """Rational integer ``a * a'``."""
    if a.mode == MODE_1:
        return ((2 * a.x + a.y) ** 2 - a.y * a.y * a.d) // 4
    return a.x * a.x - a.y * a.y * a.d


def trace(a: QuadInt) -> int:
    """Rational integer ``a + a'``."""
    if a.mode == MODE_1:
        return 2 * a.x + a.y
    return 2 * a.x


def is_totally_positive(a: QuadInt) -> bool:
    """Exact sign test of both real embeddings."""
    big_x, big_y = a.half_coords()
    return sign_surd(big_x, big_y, a.d) > 0 and sign_surd(big_x, -big_y, a.d) > 0
