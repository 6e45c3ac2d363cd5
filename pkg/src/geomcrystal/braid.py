"""Rank-2 braid moves on chart coordinates and their max-plus counterparts.

Each move rewrites an alternating window (i,j,i,...) of a word into
(j,i,j,...) while transforming the window coordinates so the underlying
cell element is unchanged.  The forward formulas assume the leading letter
is the heavy one (a(i,j) = -2 resp. -3 for the unequal-length classes); the
opposite orientation is the exact inverse, realized as rho . forward . rho
with rho the monomial coordinate-reversal map coming from the
transpose-Cartan anti-automorphism (y_i(a) -> y_i(a), torus inverted).

The G2 coefficient formulas were re-derived from the rank-2 commutation
relations; they differ from a common typeset version in the second term of
d2 (square over c2^2, not cube over c2^3) and by an additional
2 (c5 + c4/c3)^3 / c4^2 term in the reciprocal of d5.  Both corrections are
forced by exact phi/gamma preservation and are invisible tropically.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import reduce

import numpy as np

from .cartan import as_label
from .errors import GeomCrystalError, PatternMismatch
from .geometric import GeometricPoint
from .kashiwara import TensorCrystalElement

PATTERN_LEN = {"a1xa1": 2, "a2": 3, "b2": 4, "g2": 6}
KIND_BY_PRODUCT = {0: "a1xa1", 1: "a2", 2: "b2", 3: "g2"}
_KIND_JSON = {"a1xa1": "A1xA1", "a2": "A2", "b2": "B2", "g2": "G2"}


@dataclass(frozen=True)
class BraidMoveSpec:
    """A rank-2 move: class, the (i, j) playing the pattern roles, offset."""

    kind: str
    i: str
    j: str
    pos: int = 0

    def __post_init__(self):
        kind = str(self.kind).lower()
        if kind not in PATTERN_LEN:
            raise GeomCrystalError(f"unknown move class {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "i", as_label(self.i))
        object.__setattr__(self, "j", as_label(self.j))
        object.__setattr__(self, "pos", int(self.pos))
        if self.pos < 0:
            raise GeomCrystalError("position must be nonnegative")
        if self.i == self.j:
            raise GeomCrystalError("move needs two distinct indices")

    @property
    def length(self):
        return PATTERN_LEN[self.kind]

    def pattern(self):
        return tuple(self.i if k % 2 == 0 else self.j for k in range(self.length))

    def flipped_pattern(self):
        return tuple(self.j if k % 2 == 0 else self.i for k in range(self.length))

    def to_json(self):
        out = {"class": _KIND_JSON[self.kind], "i": self.i, "j": self.j, "pos": self.pos}
        out["i"] = int(self.i) if self.i.isdigit() else self.i
        out["j"] = int(self.j) if self.j.isdigit() else self.j
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(str(obj["class"]).lower(), obj["i"], obj["j"], obj.get("pos", 0))


# ----------------------------------------------------------------------
# the three coordinate moves (forward orientation)
# ----------------------------------------------------------------------

def braid_a2(sr, c1, c2, c3):
    """(i,j,i) -> (j,i,j) for a(i,j) = a(j,i) = -1; an involution."""
    top = c1 * c3 + c2
    return top / c1, c1 * c3, c1 * c2 / top


def braid_b2(sr, c1, c2, c3, c4):
    """(i,j,i,j) -> (j,i,j,i) for a(i,j) = -2, a(j,i) = -1."""
    one = sr.one()
    t = c3 + c2 / c1
    d1 = c4 + t ** 2 / c2
    d2 = c1 * c4 + c3 + c1 * c3 ** 2 / c2
    d3 = one / (one / c2 + t ** 2 / (c2 ** 2 * c4))
    d4 = one / (c4 / c3 + c3 / c2 + one / c1)
    return d1, d2, d3, d4


def braid_g2(sr, c1, c2, c3, c4, c5, c6):
    """(i,j,i,j,i,j) -> (j,i,j,i,j,i) for a(i,j) = -3, a(j,i) = -1."""
    one, two, three = sr.one(), sr.const(2), sr.const(3)
    s = c3 + c2 / c1
    t = c5 + c4 / c3
    d1 = (
        s ** 3 / c2 ** 2
        + t ** 3 / c4
        + two * c4 / c2
        + three * c4 / (c1 * c3)
        + three * c5 / c1
        + three * c3 * c5 / c2
        + c6
    )
    d2 = (
        c1 * t ** 3 / c4
        + c1 * c3 * s ** 2 / c2 ** 2
        + three * c1 * c3 * c5 / c2
        + two * c1 * c4 / c2
        + two * c4 / c3
        + c1 * c6
        + two * c5
    )
    inner = t ** 2 / c4 + c3 / c2 + one / c1
    d5 = one / (
        inner ** 3 / c6
        + two * t ** 3 / c4 ** 2
        + c6 / c4
        + three * c3 * c5 / (c2 * c4)
        + three * c5 / (c1 * c4)
        + three / (c1 * c3)
        + two / c2
    )
    d6 = one / (one / c1 + c3 / c2 + t ** 2 / c4 + c6 / c5)
    d3 = c2 * c4 * c6 / (d1 * d5)
    d4 = c1 * c3 * c5 / (d2 * d6)
    return d1, d2, d3, d4, d5, d6


_FORWARD = {"a2": braid_a2, "b2": braid_b2, "g2": braid_g2}


# ----------------------------------------------------------------------
# reversal map and orientation handling
# ----------------------------------------------------------------------

def reversal_coords(pair_fn, letters, coords, sr):
    """Coordinates of the transposed-inverted element on the reversed word.

    pair_fn(x, y) must return <alpha_x^vee, alpha_y>.  Monomial in the
    inputs, hence valid over any carrier; applying it twice (with the
    reversed word) is the identity.
    """
    k = len(letters)
    wstar = letters[::-1]
    cstar = list(coords[::-1])
    out = []
    for m in range(k):
        arg = cstar[m] ** -1
        for s_ in range(m + 1):
            arg = arg * cstar[s_] ** pair_fn(wstar[s_], wstar[m])
        prod = sr.one()
        for l, g in enumerate(out):
            prod = prod * g ** pair_fn(wstar[l], wstar[m])
        out.append((arg * prod) ** -1)
    return tuple(out)


def _move_window(kind, pair_fn, letters, coords, sr):
    """Transform one alternating window; orientation read off pair_fn."""
    i, j = letters[0], letters[1]
    aij, aji = pair_fn(i, j), pair_fn(j, i)
    if kind == "a1xa1":
        if aij != 0:
            raise PatternMismatch("commuting move needs a(i,j) = 0")
        return tuple(reversed(coords))
    if kind == "a2":
        if (aij, aji) != (-1, -1):
            raise PatternMismatch("length-3 move needs a(i,j) = a(j,i) = -1")
        return braid_a2(sr, *coords)
    heavy = {"b2": -2, "g2": -3}[kind]
    fwd = _FORWARD[kind]
    if (aij, aji) == (heavy, -1):
        return fwd(sr, *coords)
    if (aij, aji) == (-1, heavy):
        rc = reversal_coords(pair_fn, letters, coords, sr)
        fc = fwd(sr, *rc)
        return reversal_coords(pair_fn, letters[::-1], fc, sr)
    raise PatternMismatch(f"Cartan entries ({aij},{aji}) do not match class {kind}")


def apply_move(p: GeometricPoint, spec: BraidMoveSpec) -> GeometricPoint:
    """Apply the move inside a host word; coordinates outside are untouched."""
    lo, hi = spec.pos, spec.pos + spec.length
    if hi > len(p.word) or p.word[lo:hi] != spec.pattern():
        raise PatternMismatch(
            f"word {p.word} does not carry pattern {spec.pattern()} at {spec.pos}"
        )
    window = _move_window(
        spec.kind, p.cartan.a, p.word[lo:hi], p.coords[lo:hi], p.semiring
    )
    word = p.word[:lo] + spec.flipped_pattern() + p.word[hi:]
    coords = p.coords[:lo] + tuple(window) + p.coords[hi:]
    return GeometricPoint(p.cartan, word, coords, p.semiring)


# ----------------------------------------------------------------------
# explicit max-plus maps (the tropical braid-type isomorphisms)
# ----------------------------------------------------------------------

def _mx(*args):
    if any(isinstance(a, np.ndarray) for a in args):
        return reduce(np.maximum, args)
    return max(args)


def z_a2(z1, z2, z3):
    return _mx(z3, z2 - z1), z1 + z3, -_mx(-z1, z3 - z2)


def z_b2(z1, z2, z3, z4):
    Z1 = _mx(z4, z2 - 2 * z1, 2 * z3 - z2)
    Z2 = _mx(z1 + z4, z3, z1 - z2 + 2 * z3)
    Z3 = -_mx(-z2, -z4 - 2 * z1, -2 * z2 + 2 * z3 - z4)
    Z4 = -_mx(-z3 + z4, -z1, z3 - z2)
    return Z1, Z2, Z3, Z4


def z_g2(z1, z2, z3, z4, z5, z6):
    Z1 = _mx(z6, 3 * z5 - z4, -3 * z3 + 2 * z4, -2 * z2 + 3 * z3, -3 * z1 + z2)
    Z2 = _mx(
        z1 + z6,
        z1 - z4 + 3 * z5,
        z1 - 3 * z3 + 2 * z4,
        z1 - 2 * z2 + 3 * z3,
        -z1 + z3,
    )
    Z5 = -_mx(
        -z4 + z6,
        -3 * z4 + 6 * z5 - z6,
        -6 * z3 + 3 * z4 - z6,
        -3 * z2 + 3 * z3 - z6,
        -3 * z1 - z6,
    )
    Z6 = -_mx(-z1, -z2 + z3, -z4 + 2 * z5, -2 * z3 + z4, -z5 + z6)
    Z3 = z2 + z4 + z6 - Z1 - Z5
    Z4 = z1 + z3 + z5 - Z2 - Z6
    return Z1, Z2, Z3, Z4, Z5, Z6


_Z_FORWARD = {"a2": z_a2, "b2": z_b2, "g2": z_g2}


class _IntSemiring:
    """Max-plus on raw ints/arrays, for reuse of reversal_coords tropically."""

    @staticmethod
    def one():
        return _RawTrop(0)


class _RawTrop:
    __slots__ = ("value",)

    def __init__(self, v):
        self.value = v

    def __mul__(self, other):
        return _RawTrop(self.value + other.value)

    def __pow__(self, n):
        return _RawTrop(self.value * n)


def _trop_reversal(pair_fn, letters, values):
    wrapped = reversal_coords(pair_fn, letters, [_RawTrop(v) for v in values], _IntSemiring)
    return tuple(x.value for x in wrapped)


def tropical_braid(b: TensorCrystalElement, spec: BraidMoveSpec) -> TensorCrystalElement:
    """The braid-type isomorphism on tensor-crystal values.

    Forward orientation per the max-plus displays: the window's own Cartan
    datum must have a(i,j) = -1 with a(j,i) in {-1,-2,-3} (or 0 for the
    swap).  The opposite orientation is the exact inverse, realized through
    the tropical reversal map with transposed pairing.
    """
    lo, hi = spec.pos, spec.pos + spec.length
    if hi > len(b.word) or b.word[lo:hi] != spec.pattern():
        raise PatternMismatch(
            f"word {b.word} does not carry pattern {spec.pattern()} at {spec.pos}"
        )
    letters = b.word[lo:hi]
    values = b.values[lo:hi]
    i, j = spec.i, spec.j
    aij, aji = b.cartan.a(i, j), b.cartan.a(j, i)
    kind = spec.kind
    if kind == "a1xa1":
        if aij != 0:
            raise PatternMismatch("swap needs a(i,j) = 0")
        new = tuple(reversed(values))
    elif kind == "a2":
        if (aij, aji) != (-1, -1):
            raise PatternMismatch("length-3 move needs a(i,j) = a(j,i) = -1")
        new = z_a2(*values)
    else:
        heavy = {"b2": -2, "g2": -3}[kind]
        # tropical side is Langlands-dual: exponents transpose
        pair_t = lambda x, y: b.cartan.a(y, x)
        if (aij, aji) == (-1, heavy):
            new = _Z_FORWARD[kind](*values)
        elif (aij, aji) == (heavy, -1):
            rv = _trop_reversal(pair_t, letters, values)
            fv = _Z_FORWARD[kind](*rv)
            new = _trop_reversal(pair_t, letters[::-1], fv)
        else:
            raise PatternMismatch(
                f"Cartan entries ({aij},{aji}) do not match class {kind}"
            )
    word = b.word[:lo] + spec.flipped_pattern() + b.word[hi:]
    values_out = b.values[:lo] + tuple(int(v) for v in new) + b.values[hi:]
    return TensorCrystalElement(b.cartan, word, values_out)


# ----------------------------------------------------------------------
# move enumeration and word connectivity (bounded-breadth search)
# ----------------------------------------------------------------------

def available_moves(cartan, word):
    """Every rank-2 move applicable somewhere inside the word."""
    w = cartan.word(word)
    out = []
    for pos in range(len(w) - 1):
        i, j = w[pos], w[pos + 1]
        if i == j:
            continue
        prod = cartan.a(i, j) * cartan.a(j, i)
        kind = KIND_BY_PRODUCT.get(prod)
        if kind is None:
            continue
        spec = BraidMoveSpec(kind, i, j, pos)
        if spec.pos + spec.length <= len(w) and w[pos : pos + spec.length] == spec.pattern():
            out.append(spec)
    return out


def connect_words(cartan, source, target, max_states=20000):
    """Breadth-first chain of rank-2 moves from source to target words.

    Returns the move list, or None when the search space is exhausted
    (or the bound is hit) without reaching the target.
    """
    src = cartan.word(source)
    dst = cartan.word(target)
    if len(src) != len(dst):
        return None
    if src == dst:
        return []
    seen = {src: None}
    frontier = [src]
    parents = {}
    while frontier and len(seen) < max_states:
        nxt = []
        for w in frontier:
            for spec in available_moves(cartan, w):
                lo = spec.pos
                w2 = w[:lo] + spec.flipped_pattern() + w[lo + spec.length :]
                if w2 in seen:
                    continue
                seen[w2] = None
                parents[w2] = (w, spec)
                if w2 == dst:
                    path = []
                    cur = w2
                    while cur != src:
                        cur, mv = parents[cur]
                        path.append(mv)
                    return list(reversed(path))
                nxt.append(w2)
        frontier = nxt
    return None
