"""The geometric crystal on the coordinate torus of a Schubert cell.

A point is a word (i_1,...,i_k) with coordinates (c_1,...,c_k) in a positive
semifield: the chart c |-> y_{i_1}(1/c_1) a_{i_1}^vee(c_1) ... of the cell.
phi_i, gamma and the e_i^c action are implemented by their subtraction-free
closed forms, so one code path serves both the rational and the max-plus
carrier.  The signed recursion for x_i(c) and the chart extraction for
products x_{i_1}(a_1) sbar_{i_1} ... are rational-only.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .cartan import CartanMatrix, RootVector, alpha_superscripts, as_label, simple_root
from .errors import (
    CartanMismatch,
    GeomCrystalError,
    IndexAbsent,
    SingularIntermediate,
    WrongType,
    ZeroTorusValue,
)
from .semifield import RAT, TropInt, detect_semiring, semiring_named


def _word_json(word):
    return [int(x) if x.isdigit() else x for x in word]


@dataclass(frozen=True)
class GeometricPoint:
    """A point of the cell torus in the Y_w chart: word + coordinates."""

    cartan: CartanMatrix
    word: tuple
    coords: tuple
    semiring: object

    def __post_init__(self):
        w = self.cartan.word(self.word)
        cs = tuple(self.semiring.element(c, positive=False) for c in self.coords)
        if len(w) != len(cs):
            raise GeomCrystalError("word and coordinates must have equal length")
        object.__setattr__(self, "word", w)
        object.__setattr__(self, "coords", cs)

    def to_json(self):
        return {
            "cartan": self.cartan.to_json(),
            "word": _word_json(self.word),
            "coords": [self.semiring.dump(c) for c in self.coords],
        }

    @classmethod
    def from_json(cls, obj, cartan=None, semiring=None):
        cartan = CartanMatrix.from_json(obj["cartan"]) if "cartan" in obj else cartan
        if cartan is None:
            raise GeomCrystalError("point JSON carries no Cartan data")
        sr = semiring_named(semiring) if isinstance(semiring, str) else semiring
        if sr is None:
            sr = detect_semiring(obj["coords"])
        coords = tuple(sr.parse(c) if isinstance(c, str) else sr.element(c) for c in obj["coords"])
        return cls(cartan, tuple(obj["word"]), coords, sr)


@dataclass(frozen=True)
class TorusElement:
    """A formal product of coroot values prod_i alpha_i^vee(u_i)."""

    cartan: CartanMatrix
    exps: tuple
    semiring: object

    def __post_init__(self):
        us = tuple(self.semiring.element(u, positive=False) for u in self.exps)
        if len(us) != self.cartan.rank:
            raise GeomCrystalError("one exponent per index required")
        object.__setattr__(self, "exps", us)

    @classmethod
    def identity(cls, cartan, semiring):
        return cls(cartan, tuple(semiring.one() for _ in cartan.labels), semiring)

    @classmethod
    def coroot(cls, cartan, i, c, semiring):
        p = cartan.position(i)
        exps = [semiring.one()] * cartan.rank
        exps[p] = c
        return cls(cartan, tuple(exps), semiring)

    def __mul__(self, other):
        if self.cartan != other.cartan:
            raise CartanMismatch("torus elements over different Cartan data")
        return TorusElement(
            self.cartan,
            tuple(a * b for a, b in zip(self.exps, other.exps)),
            self.semiring,
        )


def char_eval(t: TorusElement, beta: RootVector):
    """Value of the root-lattice character beta on t: prod_l u_l^(sum_m a_lm b_m)."""
    acc = t.semiring.one()
    for l in range(t.cartan.rank):
        e = sum(t.cartan.entries[l][m] * b for m, b in enumerate(beta.coeffs))
        if e:
            acc = acc * t.exps[l] ** e
    return acc


def alpha_eval(t: TorusElement, j):
    """alpha_j(t) = prod_i u_i^{a_ij}."""
    return char_eval(t, simple_root(t.cartan, j))


def _fast_torus(cartan, exps, sr):
    t = object.__new__(TorusElement)
    object.__setattr__(t, "cartan", cartan)
    object.__setattr__(t, "exps", exps)
    object.__setattr__(t, "semiring", sr)
    return t


def gamma(p: GeometricPoint) -> TorusElement:
    """gamma(Y_w(c)) = prod_m alpha_{i_m}^vee(c_m), collected per index."""
    acc = [None] * p.cartan.rank
    for letter, c in zip(p.word, p.coords):
        pos = p.cartan.position(letter)
        acc[pos] = c if acc[pos] is None else acc[pos] * c
    one = p.semiring.one()
    return _fast_torus(p.cartan, tuple(one if a is None else a for a in acc), p.semiring)


def _fast_point(cartan, word, coords, sr):
    """Internal constructor for coordinates already known to be valid."""
    p = object.__new__(GeometricPoint)
    object.__setattr__(p, "cartan", cartan)
    object.__setattr__(p, "word", word)
    object.__setattr__(p, "coords", coords)
    object.__setattr__(p, "semiring", sr)
    return p


def _masses(cartan, word, coords, sr, lab):
    """Positions m with i_m = i and M_m = (c_1^{a_{i_1,i}}...c_{m-1}^{a_{i_{m-1},i}} c_m)^{-1}."""
    if lab not in word:
        raise IndexAbsent(f"index {lab!r} does not occur in the word")
    col = cartan.position(lab)
    entries = cartan.entries
    pos = cartan.position
    prefix = sr.one()
    out = []
    for m, (letter, c) in enumerate(zip(word, coords)):
        if letter == lab:
            out.append((m, (prefix * c) ** -1))
        prefix = prefix * c ** entries[pos(letter)][col]
    return out


def _phi_value(cartan, word, coords, sr, lab):
    masses = _masses(cartan, word, coords, sr, lab)
    acc = masses[0][1]
    for _, m in masses[1:]:
        acc = acc + m
    return acc


def phi(p: GeometricPoint, i):
    """phi_i(Y_w(c)): the sum of the masses at positions carrying i."""
    return _phi_value(p.cartan, p.word, p.coords, p.semiring, as_label(i))


def _e_act_multi_generic(cartan, word, coords, sr, lab, cs):
    """e_i^c for several exponents c sharing one mass computation."""
    masses = _masses(cartan, word, coords, sr, lab)
    r = len(masses)
    pref = [None] * (r + 1)
    for s in range(r):
        pref[s + 1] = masses[s][1] if pref[s] is None else pref[s] + masses[s][1]
    suff = [None] * (r + 1)
    for s in range(r - 1, -1, -1):
        suff[s] = masses[s][1] if suff[s + 1] is None else suff[s + 1] + masses[s][1]
    outs = []
    for c in cs:
        new = list(coords)
        for s, (m, _) in enumerate(masses):
            num = c * pref[s + 1]
            if suff[s + 1] is not None:
                num = num + suff[s + 1]
            den = suff[s]
            if pref[s] is not None:
                den = c * pref[s] + den
            new[m] = new[m] * num / den
        outs.append(new)
    return outs


def _e_act_multi_rat(cartan, word, coords, lab, cs):
    """Rational fast path: unreduced integer pairs, one reduction per output."""
    if lab not in word:
        raise IndexAbsent(f"index {lab!r} does not occur in the word")
    col = cartan.position(lab)
    entries = cartan.entries
    pos = cartan.position
    pn, pd = 1, 1  # running prefix as pn/pd
    mass = []  # (position, numerator, denominator) of M_m
    for m, (letter, c) in enumerate(zip(word, coords)):
        cn, cd = c.numerator, c.denominator
        if letter == lab:
            mass.append((m, pd * cd, pn * cn))
        a = entries[pos(letter)][col]
        if a > 0:
            pn *= cn**a
            pd *= cd**a
        elif a < 0:
            pn *= cd**-a
            pd *= cn**-a
    r = len(mass)
    pref = [None] * (r + 1)
    cur = None
    for s in range(r):
        _, n, d = mass[s]
        cur = (n, d) if cur is None else (cur[0] * d + n * cur[1], cur[1] * d)
        pref[s + 1] = cur
    suff = [None] * (r + 1)
    cur = None
    for s in range(r - 1, -1, -1):
        _, n, d = mass[s]
        cur = (n, d) if cur is None else (cur[0] * d + n * cur[1], cur[1] * d)
        suff[s] = cur
    outs = []
    for c in cs:
        cn, cd = c.numerator, c.denominator
        new = list(coords)
        for s in range(r):
            m = mass[s][0]
            an, ad = pref[s + 1]
            nn, nd = cn * an, cd * ad
            if s + 1 < r:
                bn, bd = suff[s + 1]
                nn, nd = nn * bd + bn * nd, nd * bd
            en, ed = suff[s]
            if s > 0:
                qn, qd = pref[s]
                dn, dd = cn * qn * ed + en * cd * qd, cd * qd * ed
            else:
                dn, dd = en, ed
            cm = coords[m]
            new[m] = Fraction(cm.numerator * nn * dd, cm.denominator * nd * dn)
        outs.append(new)
    return outs


def _e_act_multi(cartan, word, coords, sr, lab, cs):
    if sr is RAT:
        return _e_act_multi_rat(cartan, word, coords, lab, cs)
    return _e_act_multi_generic(cartan, word, coords, sr, lab, cs)


def _e_act_coords(cartan, word, coords, sr, lab, c):
    """Core of e_i^c on raw coordinates (subtraction-free closed form)."""
    return _e_act_multi(cartan, word, coords, sr, lab, (c,))[0]


def e_act(p: GeometricPoint, i, c) -> GeometricPoint:
    """The crystal action e_i^c in closed form (subtraction-free)."""
    sr = p.semiring
    if isinstance(c, (int, str, Fraction, TropInt)):
        c = sr.element(c, positive=False)
    new = _e_act_coords(p.cartan, p.word, p.coords, sr, as_label(i), c)
    return _fast_point(p.cartan, p.word, tuple(new), sr)


def x_act_raw(p: GeometricPoint, i, a) -> GeometricPoint:
    """x_i(a) on the chart via the signed recursion; rational carrier only."""
    if p.semiring is not RAT:
        raise WrongType("the signed recursion is defined over the rational carrier only")
    lab = as_label(i)
    col = p.cartan.position(lab)
    entries = p.cartan.entries
    pos = p.cartan.position
    u = Fraction(a)
    new = []
    for letter, cm in zip(p.word, p.coords):
        am = entries[pos(letter)][col]
        tc = cm + u if letter == lab else cm
        if tc == 0:
            raise SingularIntermediate("vanishing intermediate coordinate in x_i(c)")
        new.append(tc)
        u = u * cm ** (1 - am) / tc
    return replace(p, coords=tuple(new))


def e_act_recursive(p: GeometricPoint, i, c) -> GeometricPoint:
    """e_i^c as x_i((c-1)/phi_i); the independent route to e_act."""
    c = Fraction(c)
    if c == 0:
        raise GeomCrystalError("e^c requires c != 0")
    return x_act_raw(p, i, (c - 1) / phi(p, i))


def e_string(jword, t: TorusElement, p: GeometricPoint) -> GeometricPoint:
    """e_{j_1}^{alpha^(1)(t)} ... e_{j_l}^{alpha^(l)(t)} applied right-to-left."""
    w = p.cartan.word(jword)
    alphas = alpha_superscripts(p.cartan, w)
    for m in range(len(w) - 1, -1, -1):
        p = e_act(p, w[m], char_eval(t, alphas[m]))
    return p


def concat(p: GeometricPoint, q: GeometricPoint) -> GeometricPoint:
    """Product of cell points: concatenation of letter-factors."""
    if p.cartan != q.cartan:
        raise CartanMismatch("cannot concatenate points over different Cartan data")
    if p.semiring is not q.semiring:
        raise GeomCrystalError("cannot concatenate points over different carriers")
    return GeometricPoint(p.cartan, p.word + q.word, p.coords + q.coords, p.semiring)


def product_split(sr, c, phi_x, phi_y, alpha_gamma_x):
    """Split e^c on a product into (c1, c2) with c1*c2 = c."""
    base = alpha_gamma_x * phi_x + phi_y
    c1 = (c * alpha_gamma_x * phi_x + phi_y) / base
    c2 = base / (alpha_gamma_x * phi_x + c ** -1 * phi_y)
    return c1, c2


def symmetric_chart(cartan: CartanMatrix, semiring, a_values) -> GeometricPoint:
    """Type-A chart c_j = a_1 ... a_j on the word (1, 2, ..., n)."""
    if not cartan.is_type_a():
        raise WrongType("the symmetric chart needs the standard A_n Cartan matrix")
    vals = [semiring.element(a, positive=False) for a in a_values]
    if len(vals) != cartan.rank:
        raise GeomCrystalError("expected one value per index")
    coords = []
    acc = None
    for a in vals:
        acc = a if acc is None else acc * a
        coords.append(acc)
    return GeometricPoint(cartan, cartan.labels, tuple(coords), semiring)


def symmetric_chart_values(p: GeometricPoint):
    """Inverse chart: a_j = c_j / c_{j-1}."""
    if not p.cartan.is_type_a() or p.word != p.cartan.labels:
        raise WrongType("point is not on the standard A_n word")
    out = []
    prev = None
    for c in p.coords:
        out.append(c if prev is None else c / prev)
        prev = c
    return tuple(out)


def uw_chart_coords(cartan: CartanMatrix, word, a_values):
    """Chart coordinates of pi^-(x_{i_1}(a_1) sbar_{i_1} ... x_{i_k}(a_k) sbar_{i_k}).

    Push-through of the trailing x-factors produced by x_i(a) sbar_i =
    y_i(1/a) alpha_i^vee(a) x_i(-1/a); rational arithmetic with signs.
    """
    w = cartan.word(word)
    avals = [Fraction(a) for a in a_values]
    if len(avals) != len(w):
        raise GeomCrystalError("one parameter per letter required")
    if any(a == 0 for a in avals):
        raise ZeroTorusValue("chart extraction needs nonzero parameters")
    entries = cartan.entries
    pos = cartan.position
    coords = []
    pending = []  # (letter, arg) x-factors left of the current position
    for letter, a in zip(w, avals):
        c = a
        col = pos(letter)
        for idx in range(len(pending) - 1, -1, -1):
            xl, u = pending[idx]
            if xl == letter:
                nc = u + c
                if nc == 0:
                    raise SingularIntermediate("x-factor push-through hit a pole")
                pending[idx] = (xl, u / (c * nc))
                c = nc
            else:
                pending[idx] = (xl, c ** -entries[col][pos(xl)] * u)
        coords.append(c)
        pending.append((letter, Fraction(-1) / a))
    return tuple(coords)
