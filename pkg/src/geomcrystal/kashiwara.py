"""Free tensor crystals B_{i_1} x ... x B_{i_k} and the companion structures.

Elements are integer tuples over a word; the crystal is free (the raising
operator never kills an element), so no null element is modeled.  Two
independent routes compute the power action: the closed-form beta_j maxima
and iteration of the signature-rule single step.  The zero-sum crystal
tied to the type-A symmetric chart lives here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .cartan import CartanMatrix, RootVector, as_label
from .errors import BadIndex, BridgeMismatch, GeomCrystalError, IndexAbsent
from .semifield import TROP, TropInt

NEG_INF = float("-inf")


def _word_json(word):
    return [int(x) if x.isdigit() else x for x in word]


@dataclass(frozen=True)
class TensorCrystalElement:
    """(b_1)_{i_1} x ... x (b_k)_{i_k}; leftmost factor is b_1."""

    cartan: CartanMatrix
    word: tuple
    values: tuple

    def __post_init__(self):
        w = self.cartan.word(self.word)
        vals = tuple(int(v) for v in self.values)
        if len(w) != len(vals):
            raise GeomCrystalError("word and values must have equal length")
        object.__setattr__(self, "word", w)
        object.__setattr__(self, "values", vals)

    def to_json(self):
        return {
            "cartan": self.cartan.to_json(),
            "word": _word_json(self.word),
            "values": list(self.values),
        }

    @classmethod
    def from_json(cls, obj, cartan=None):
        cartan = CartanMatrix.from_json(obj["cartan"]) if "cartan" in obj else cartan
        if cartan is None:
            raise GeomCrystalError("element JSON carries no Cartan data")
        return cls(cartan, tuple(obj["word"]), tuple(obj["values"]))


def weight(b: TensorCrystalElement) -> RootVector:
    """wt(b) = sum_j b_j alpha_{i_j} in the root lattice."""
    coeffs = [0] * b.cartan.rank
    for letter, v in zip(b.word, b.values):
        coeffs[b.cartan.position(letter)] += v
    return RootVector(tuple(coeffs))


def _h_pairing(cartan, i, letter, value):
    return value * cartan.a(i, letter)


def epsilon(b: TensorCrystalElement, i):
    """epsilon_i via the left fold of the two-factor rule; -inf when i is absent."""
    lab = as_label(i)
    eps = NEG_INF
    wt_pair = 0
    for letter, v in zip(b.word, b.values):
        f_eps = -v if letter == lab else NEG_INF
        eps = max(eps, f_eps - wt_pair)
        wt_pair += _h_pairing(b.cartan, lab, letter, v)
    return eps


def varphi(b: TensorCrystalElement, i):
    """varphi_i via the left fold; equals epsilon_i + <h_i, wt> when finite."""
    lab = as_label(i)
    out = NEG_INF
    for letter, v in zip(b.word, b.values):
        f_phi = v if letter == lab else NEG_INF
        out = max(f_phi, out + _h_pairing(b.cartan, lab, letter, v))
    return out


def e_kashiwara(b: TensorCrystalElement, i) -> TensorCrystalElement:
    """One application of the raising operator by the tensor signature rule.

    Left-associative fold of the two-factor rule: act on the head when
    varphi(head) >= epsilon(last factor), else on the last factor.
    """
    lab = as_label(i)
    if lab not in b.word:
        raise IndexAbsent(f"index {lab!r} does not occur in the word")
    if len(b.values) == 1:
        return replace(b, values=(b.values[0] + 1,))
    head = TensorCrystalElement(b.cartan, b.word[:-1], b.values[:-1])
    eps_last = -b.values[-1] if b.word[-1] == lab else NEG_INF
    if varphi(head, lab) >= eps_last:
        return replace(b, values=e_kashiwara(head, lab).values + b.values[-1:])
    vals = list(b.values)
    vals[-1] += 1
    return replace(b, values=tuple(vals))


def _running_max(terms):
    """Prefix maxima of a list of int-or-array terms (None = empty prefix)."""
    out = [None]
    acc = None
    for t in terms:
        if acc is None:
            acc = t
        elif isinstance(acc, np.ndarray) or isinstance(t, np.ndarray):
            acc = np.maximum(acc, t)
        else:
            acc = max(acc, t)
        out.append(acc)
    return out


def _max2(x, y):
    if x is None:
        return y
    if y is None:
        return x
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        return np.maximum(x, y)
    return max(x, y)


def _e_pow_values(cartan, word, values, lab, c):
    """Core of the power action on raw values (ints or numpy int arrays)."""
    s = 0  # running sum_l b_l a_{i, i_l}
    ipos, t_up, t_dn = [], [], []
    for m, (letter, v) in enumerate(zip(word, values)):
        if letter == lab:
            ipos.append(m)
            t_up.append(c - v - s)  # the c - b_m - sum term
            t_dn.append(-v - s)  # the -b_m - sum term
        s = s + _h_pairing(cartan, lab, letter, v)
    r = len(ipos)
    up_pref = _running_max(t_up)
    dn_suff = _running_max(t_dn[::-1])[::-1]  # dn_suff[s] = max of t_dn[s:]
    new_vals = list(values)
    for idx, m in enumerate(ipos):
        first = _max2(up_pref[idx + 1], dn_suff[idx + 1] if idx + 1 < r else None)
        second = _max2(up_pref[idx], dn_suff[idx])
        new_vals[m] = values[m] + first - second
    return new_vals


def e_pow(b: TensorCrystalElement, i, c) -> TensorCrystalElement:
    """The c-th power action in closed form (the beta_j maxima); c >= 0."""
    lab = as_label(i)
    if lab not in b.word:
        raise IndexAbsent(f"index {lab!r} does not occur in the word")
    if int(c) < 0:
        raise GeomCrystalError("power action takes c >= 0")
    return replace(b, values=tuple(_e_pow_values(b.cartan, b.word, b.values, lab, int(c))))


def ud_bridge(p, i, c) -> TensorCrystalElement:
    """Tropical chart action vs the Langlands-dual tensor action; must agree.

    p is a geometric point over the max-plus carrier with Cartan matrix A;
    the companion element lives over A^T with the same word and the coords
    as values.  Raises BridgeMismatch naming the first bad coordinate.
    """
    from .geometric import e_act  # local import to avoid a cycle

    if p.semiring is not TROP:
        raise GeomCrystalError("the bridge compares the max-plus instance")
    if not isinstance(c, (int, np.integer)) or c < 0:
        raise GeomCrystalError("bridge compares powers c >= 0")
    dual = p.cartan.langlands_dual()
    b = TensorCrystalElement(dual, p.word, tuple(z.value for z in p.coords))
    lhs = e_act(p, i, TropInt(int(c)))
    rhs = e_pow(b, i, int(c))
    for m, (z, v) in enumerate(zip(lhs.coords, rhs.values)):
        if z.value != v:
            raise BridgeMismatch(m, z.value, v)
    return rhs


@dataclass(frozen=True)
class BtildeElement:
    """Zero-sum integer vector (x_1, ..., x_{n+1})."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if sum(vals) != 0:
            raise GeomCrystalError("coordinates must sum to zero")
        object.__setattr__(self, "values", vals)


def btilde_e(x: BtildeElement, i, c) -> BtildeElement:
    """Adds c at slot i and subtracts it at slot i+1; e^{-c} is the lowering power."""
    i = int(i)
    n = len(x.values) - 1
    if not 1 <= i <= n:
        raise BadIndex(f"index {i} outside 1..{n}")
    vals = list(x.values)
    vals[i - 1] += c
    vals[i] -= c
    return BtildeElement(tuple(vals))
