"""Witness checker for the greatest common divisor.

A claimed gcd g of nonnegative a and b (not both zero) is certified by
Bezout coefficients s, t with g = s*a + t*b. Divisibility of a and b by g
makes g a common divisor; the linear combination makes every common
divisor divide g; together with g >= 0 that pins g as the greatest one.
Checking costs two divisions and one multiplication-addition, all exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .verdict import ACCEPT, PreconditionError, Verdict, reject


@dataclass(frozen=True)
class GcdTriple:
    """Inputs a, b; claimed gcd g; Bezout coefficients s, t.

    No field is validated at construction: the checker decides everything.
    """

    a: int
    b: int
    g: int
    s: int
    t: int


def check_gcd(t: GcdTriple) -> Verdict:
    """Decide whether (g, s, t) certifies gcd(a, b) = g.

    Raises :class:`PreconditionError` unless a >= 0, b >= 0, and a + b > 0.
    """
    if t.a < 0 or t.b < 0:
        raise PreconditionError("nonneg_inputs", "a and b must be nonnegative")
    if t.a + t.b == 0:
        raise PreconditionError("not_both_zero", "gcd(0, 0) is undefined")
    if t.g < 0:
        return reject("g_nonneg", f"claimed gcd {t.g} is negative")
    if not _divides(t.g, t.a):
        return reject("divides_a", f"{t.g} does not divide {t.a}")
    if not _divides(t.g, t.b):
        return reject("divides_b", f"{t.g} does not divide {t.b}")
    if t.g != t.s * t.a + t.t * t.b:
        return reject("combination", f"{t.g} != {t.s}*{t.a} + {t.t}*{t.b}")
    return ACCEPT


def _divides(d: int, x: int) -> bool:
    return x == 0 if d == 0 else x % d == 0
