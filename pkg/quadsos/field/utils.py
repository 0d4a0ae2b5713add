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
"""
Exact sign tests for integer combinations of square roots.

Every comparison against an irrational number in quadsos ends up here. Inputs are
integers, radicands are non-negative, and no floating point is involved.
"""


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def ceil_div(num: int, den: int) -> int:
    """Ceiling of ``num / den`` for integers, ``den`` non-zero."""
    return -((-num) // den)


def sign_surd(p: int, q: int, r: int) -> int:
    """Sign of ``p + q*sqrt(r)`` for integers ``p``, ``q`` and ``r >= 0``."""
    if r < 0:
        raise ValueError(f"Negative radicand {r}.")
    sign_p = _sign(p)
    sign_q = _sign(q) if r else 0
    if sign_q == 0:
        return sign_p
    if sign_p == 0 or sign_p == sign_q:
        return sign_q
    # opposite signs: the larger magnitude wins
    return sign_p * _sign(p * p - q * q * r)


def sign_surd2(a: int, b: int, x: int, c: int, y: int) -> int:
    """Sign of ``a + b*sqrt(x) + c*sqrt(y)`` for integers, ``x, y >= 0``."""
    if y < 0:
        raise ValueError(f"Negative radicand {y}.")
    sign_u = sign_surd(a, b, x)
    sign_v = _sign(c) if y else 0
    if sign_v == 0:
        return sign_u
    if sign_u == 0 or sign_u == sign_v:
        return sign_v
    # (a + b*sqrt(x))**2 - c**2*y = (a*a + b*b*x - c*c*y) + 2*a*b*sqrt(x)
    return sign_u * sign_surd(a * a + b * b * x - c * c * y, 2 * a * b, x)
