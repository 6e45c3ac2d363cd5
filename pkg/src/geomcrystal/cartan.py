"""Symmetrizable generalized Cartan matrices, root-lattice reflections, words.

Index labels are short strings; Weyl-group elements are never materialized —
words plus the positive-root criterion carry every operation needed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadIndex, NotGCM, NotSymmetrizable

Label = str
Word = tuple[Label, ...]


def as_label(x) -> Label:
    return x if isinstance(x, str) else str(x)


class CartanMatrix:
    """A symmetrizable generalized Cartan matrix over an ordered index set.

    entries[r][c] is a_{ij} = <alpha_i^vee, alpha_j> for i = labels[r],
    j = labels[c].  The symmetrizer d (positive integers, minimal per
    connected component) is computed on construction and used only for
    validation; every crystal formula downstream consumes raw a_{ij}.
    """

    __slots__ = ("labels", "entries", "symmetrizer", "_pos")

    def __init__(self, entries, labels=None):
        rows = [tuple(int(x) for x in row) for row in entries]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise NotGCM("entries must form a nonempty square integer matrix")
        if labels is None:
            labels = [str(k + 1) for k in range(n)]
        labels = tuple(as_label(l) for l in labels)
        if len(set(labels)) != n or len(labels) != n:
            raise NotGCM("labels must be distinct and match the matrix size")
        for r in range(n):
            if rows[r][r] != 2:
                raise NotGCM(f"diagonal entry a[{labels[r]}][{labels[r]}] != 2")
            for c in range(n):
                if r != c and rows[r][c] > 0:
                    raise NotGCM(f"positive off-diagonal entry at ({labels[r]},{labels[c]})")
                if (rows[r][c] == 0) != (rows[c][r] == 0):
                    raise NotGCM(f"asymmetric zero pattern at ({labels[r]},{labels[c]})")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "_pos", {l: k for k, l in enumerate(labels)})
        object.__setattr__(self, "symmetrizer", self._compute_symmetrizer())

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("CartanMatrix is immutable")

    def _compute_symmetrizer(self):
        n = len(self.labels)
        d: list[Fraction | None] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            comp = [start]
            while stack:
                r = stack.pop()
                for c in range(n):
                    if c == r or self.entries[r][c] == 0:
                        continue
                    val = d[r] * Fraction(self.entries[r][c], self.entries[c][r])
                    if d[c] is None:
                        d[c] = val
                        comp.append(c)
                        stack.append(c)
                    elif d[c] != val:
                        raise NotSymmetrizable("no positive symmetrizer exists")
            denom_lcm = 1
            for k in comp:
                q = d[k].denominator
                denom_lcm = denom_lcm * q // gcd(denom_lcm, q)
            nums = [int(d[k] * denom_lcm) for k in comp]
            g = 0
            for v in nums:
                g = gcd(g, v)
            for k, v in zip(comp, nums):
                d[k] = Fraction(v // g)
        # d_i a_ij = d_j a_ji must hold globally
        for r in range(n):
            for c in range(n):
                if d[r] * self.entries[r][c] != d[c] * self.entries[c][r]:
                    raise NotSymmetrizable("no positive symmetrizer exists")
        return tuple(int(x) for x in d)

    # -- index handling -------------------------------------------------

    def position(self, i) -> int:
        lab = as_label(i)
        try:
            return self._pos[lab]
        except KeyError:
            raise BadIndex(f"unknown index {lab!r}") from None

    def a(self, i, j) -> int:
        """Pairing <alpha_i^vee, alpha_j>."""
        return self.entries[self.position(i)][self.position(j)]

    def word(self, letters) -> Word:
        w = tuple(as_label(x) for x in letters)
        for x in w:
            if x not in self._pos:
                raise BadIndex(f"letter {x!r} not in index set")
        return w

    @property
    def rank(self) -> int:
        return len(self.labels)

    # -- derived data ----------------------------------------------------

    def langlands_dual(self) -> "CartanMatrix":
        n = len(self.labels)
        return CartanMatrix(
            [[self.entries[c][r] for c in range(n)] for r in range(n)], self.labels
        )

    def is_type_a(self) -> bool:
        """Standard A_n labeling: a_{i,i+1} = a_{i+1,i} = -1, zero otherwise."""
        n = len(self.labels)
        for r in range(n):
            for c in range(n):
                want = 2 if r == c else (-1 if abs(r - c) == 1 else 0)
                if self.entries[r][c] != want:
                    return False
        return True

    # -- plumbing ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, CartanMatrix)
            and self.labels == other.labels
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.labels, self.entries))

    def __repr__(self):
        return f"CartanMatrix({[list(r) for r in self.entries]}, labels={list(self.labels)})"

    def to_json(self):
        return {"index": list(self.labels), "a": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "CartanMatrix":
        return cls(obj["a"], obj.get("index"))


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice in the basis of simple roots."""

    coeffs: tuple[int, ...]

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coeffs))

    def is_positive(self) -> bool:
        return all(a >= 0 for a in self.coeffs) and any(a > 0 for a in self.coeffs)


def simple_root(cartan: CartanMatrix, i) -> RootVector:
    p = cartan.position(i)
    return RootVector(tuple(int(k == p) for k in range(cartan.rank)))


def reflect(cartan: CartanMatrix, i, beta: RootVector) -> RootVector:
    """s_i(beta) = beta - <alpha_i^vee, beta> alpha_i on the root lattice."""
    p = cartan.position(i)
    pair = sum(b * cartan.entries[p][c] for c, b in enumerate(beta.coeffs))
    coeffs = list(beta.coeffs)
    coeffs[p] -= pair
    return RootVector(tuple(coeffs))


def beta_sequence(cartan: CartanMatrix, word) -> tuple[RootVector, ...]:
    """beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j})."""
    w = cartan.word(word)
    out = []
    for j, letter in enumerate(w):
        beta = simple_root(cartan, letter)
        for m in range(j - 1, -1, -1):
            beta = reflect(cartan, w[m], beta)
        out.append(beta)
    return tuple(out)


def alpha_superscripts(cartan: CartanMatrix, word) -> tuple[RootVector, ...]:
    """alpha^(j) = s_{i_l}...s_{i_{j+1}}(alpha_{i_j}), with alpha^(l) = alpha_{i_l}."""
    w = cartan.word(word)
    out = []
    for j, letter in enumerate(w):
        beta = simple_root(cartan, letter)
        for m in range(j + 1, len(w)):
            beta = reflect(cartan, w[m], beta)
        out.append(beta)
    return tuple(out)


def is_reduced(cartan: CartanMatrix, word) -> bool:
    """Coxeter criterion: reduced iff every beta_j is a positive root."""
    return all(b.is_positive() for b in beta_sequence(cartan, word))


def rank2_class(cartan: CartanMatrix, i, j):
    """Classify the pair (i, j) by the Verma-relation case it satisfies.

    Returns (kind, (heavy, light)) with kind in {"commuting", "simply",
    "double", "triple", "free"}; for the asymmetric cases the pair is
    oriented so that a(heavy, light) is -2 (double) or -3 (triple).
    """
    i, j = as_label(i), as_label(j)
    if i == j:
        raise BadIndex("rank2_class needs two distinct indices")
    aij, aji = cartan.a(i, j), cartan.a(j, i)
    prod = aij * aji
    if prod == 0:
        return "commuting", (i, j)
    if prod == 1:
        return "simply", (i, j)
    if prod == 2:
        return "double", ((i, j) if aij == -2 else (j, i))
    if prod == 3:
        return "triple", ((i, j) if aij == -3 else (j, i))
    return "free", (i, j)


# Verma-relation words for the rank-2 classes, as (side, side) where each
# side lists (role, (e1, e2)): role 0/1 picks the heavy/light index of the
# oriented pair and the exponent pair encodes c1^e1 c2^e2 (multiplicative
# composites; under max-plus these read e1*c1 + e2*c2).  Composition applies
# right-to-left.  The exponent strings are exactly the alpha^(m)(t) of the
# two reduced words of the rank-2 longest element, evaluated at
# c1 = alpha_heavy(t), c2 = alpha_light(t).
VERMA_RELATIONS = {
    "commuting": (
        ((0, (1, 0)), (1, (0, 1))),
        ((1, (0, 1)), (0, (1, 0))),
    ),
    "simply": (
        ((0, (1, 0)), (1, (1, 1)), (0, (0, 1))),
        ((1, (0, 1)), (0, (1, 1)), (1, (1, 0))),
    ),
    "double": (
        ((0, (1, 0)), (1, (2, 1)), (0, (1, 1)), (1, (0, 1))),
        ((1, (0, 1)), (0, (1, 1)), (1, (2, 1)), (0, (1, 0))),
    ),
    "triple": (
        ((0, (1, 0)), (1, (3, 1)), (0, (2, 1)), (1, (3, 2)), (0, (1, 1)), (1, (0, 1))),
        ((1, (0, 1)), (0, (1, 1)), (1, (3, 2)), (0, (2, 1)), (1, (3, 1)), (0, (1, 0))),
    ),
}
