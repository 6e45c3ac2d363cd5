"""Positive-semifield carriers and the ultra-discretization test harness.

Two semantics for one expression source: exact positive rationals
(plain fractions.Fraction, ordinary arithmetic) and max-plus integers
(TropInt: + is max, * is +, / is -, x**n is n*x).  Subtraction-free code
written against the operator protocol evaluates in either, which is the
whole tropicalization mechanism used here.

TropArray is the same max-plus semiring on int64 numpy arrays, used to run
exhaustive grid checks through the identical formula code.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import GeomCrystalError


class TropInt:
    """Max-plus integer: add = max, mul = +, div = -, pow = scaling."""

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, TropInt):
            value = value.value
        self.value = int(value)

    def __add__(self, other):
        if not isinstance(other, TropInt):
            return NotImplemented
        return TropInt(self.value if self.value >= other.value else other.value)

    def __mul__(self, other):
        if not isinstance(other, TropInt):
            return NotImplemented
        return TropInt(self.value + other.value)

    def __truediv__(self, other):
        if not isinstance(other, TropInt):
            return NotImplemented
        return TropInt(self.value - other.value)

    def __pow__(self, n):
        return TropInt(self.value * int(n))

    def __eq__(self, other):
        return isinstance(other, TropInt) and self.value == other.value

    def __hash__(self):
        return hash(("TropInt", self.value))

    def __repr__(self):
        return f"TropInt({self.value})"


class TropArray:
    """Max-plus semiring on int64 arrays; broadcasts against TropInt."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = np.asarray(value, dtype=np.int64)

    @staticmethod
    def _raw(other):
        return other.value  # TropInt's int or TropArray's ndarray both work

    def __add__(self, other):
        return TropArray(np.maximum(self.value, self._raw(other)))

    __radd__ = __add__

    def __mul__(self, other):
        return TropArray(self.value + self._raw(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return TropArray(self.value - self._raw(other))

    def __rtruediv__(self, other):
        return TropArray(self._raw(other) - self.value)

    def __pow__(self, n):
        return TropArray(self.value * int(n))

    def __eq__(self, other):
        return isinstance(other, TropArray) and np.array_equal(self.value, other.value)

    def __repr__(self):
        return f"TropArray({self.value!r})"


class RationalSemiring:
    """Descriptor for the exact positive-rational carrier."""

    name = "rat"

    def __repr__(self):
        return "RAT"

    @staticmethod
    def one():
        return Fraction(1)

    @staticmethod
    def const(n):
        if int(n) <= 0:
            raise GeomCrystalError("const embeds positive integers only")
        return Fraction(int(n))

    @staticmethod
    def element(x, positive=True):
        if isinstance(x, Fraction):
            v = x
        elif isinstance(x, int):
            v = Fraction(x)
        elif isinstance(x, str):
            v = Fraction(x)
        else:
            raise GeomCrystalError(f"not a rational value: {x!r}")
        if v == 0:
            raise GeomCrystalError("rational coordinates must be nonzero")
        if positive and v < 0:
            raise GeomCrystalError(f"expected a positive rational, got {v}")
        return v

    @staticmethod
    def parse(text):
        return RationalSemiring.element(str(text))

    @staticmethod
    def dump(x):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)

    @staticmethod
    def random(rng, lo=1, hi=1000):
        return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


class TropicalSemiring:
    """Descriptor for the max-plus integer carrier."""

    name = "trop"

    def __repr__(self):
        return "TROP"

    @staticmethod
    def one():
        return TropInt(0)

    @staticmethod
    def const(n):
        if int(n) <= 0:
            raise GeomCrystalError("const embeds positive integers only")
        return TropInt(0)

    @staticmethod
    def element(x, positive=True):
        if isinstance(x, TropInt):
            return x
        if isinstance(x, (int, np.integer)):
            return TropInt(int(x))
        raise GeomCrystalError(f"not a tropical value: {x!r}")

    @staticmethod
    def parse(text):
        return TropInt(int(text))

    @staticmethod
    def dump(x):
        return x.value

    @staticmethod
    def random(rng, lo=-20, hi=20):
        return TropInt(rng.randint(lo, hi))


RAT = RationalSemiring()
TROP = TropicalSemiring()
SEMIRINGS = {"rat": RAT, "trop": TROP}


def semiring_named(name):
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise GeomCrystalError(f"unknown semiring {name!r}") from None


def detect_semiring(json_coords):
    """Point/element JSON uses "p/q" strings for rationals, ints for tropical."""
    if all(isinstance(x, str) for x in json_coords):
        return RAT
    if all(isinstance(x, int) for x in json_coords):
        return TROP
    raise GeomCrystalError("mixed coordinate encodings in JSON")


# ----------------------------------------------------------------------
# ultra-discretization harness
# ----------------------------------------------------------------------

def ud_matches(expr, exponents, t0=2, retries=4):
    """Check deg of expr over Q at c_j = t^{m_j} against expr over TropInt.

    expr(sr, args) returns one carrier value or a tuple of them.  For a
    subtraction-free expr the rational result r at c_j = t^{m_j} satisfies
    t^(d-1) < r < t^(d+1) for the tropical degree d once t is large enough;
    on mismatch t is squared, up to `retries` times (t = 2, 4, 16, ...).
    """
    trop = expr(TROP, [TropInt(m) for m in exponents])
    if not isinstance(trop, tuple):
        trop = (trop,)
    t = Fraction(t0)
    for _ in range(retries + 1):
        rat = expr(RAT, [t ** m for m in exponents])
        if not isinstance(rat, tuple):
            rat = (rat,)
        if len(rat) != len(trop):
            return False
        if all(
            t ** (z.value - 1) < r < t ** (z.value + 1) for r, z in zip(rat, trop)
        ):
            return True
        t = t * t
    return False
