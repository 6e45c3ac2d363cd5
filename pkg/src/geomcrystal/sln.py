"""Exact SL_{n+1} ground truth for type A.

Generator matrices, the B^- x U factorization (LU without pivoting, unit
upper factor), the chi_i reading on lower-triangular matrices, and the
matrix forms of chart points.  Everything is exact Fractions; every type-A
claim made by the chart formulas is checked against literal products here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadIndex, GeomCrystalError, OutsideOpenCell, WrongType, ZeroTorusValue
from .semifield import RAT


class ExactMatrix:
    """Dense square matrix over exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rs)
        if n == 0 or any(len(r) != n for r in rs):
            raise GeomCrystalError("square matrix required")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(r == c)) for c in range(n)] for r in range(n)])

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __mul__(self, other):
        n = self.size
        if other.size != n:
            raise GeomCrystalError("size mismatch")
        a, b = self.rows, other.rows
        return ExactMatrix(
            [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
        )

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def det(self):
        n = self.size
        m = [list(r) for r in self.rows]
        sign = 1
        out = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            out *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, n):
                f = m[r][col] * inv
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return out * sign

    def to_json(self):
        return [[RAT.dump(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, obj):
        return cls([[Fraction(x) for x in row] for row in obj])


def _check_index(n, i):
    if not 1 <= i <= n:
        raise BadIndex(f"index {i} outside 1..{n}")


def gen_y(n, i, a):
    """y_i(a) = I + a E_{i+1,i} in SL_{n+1}."""
    _check_index(n, i)
    m = [[Fraction(int(r == c)) for c in range(n + 1)] for r in range(n + 1)]
    m[i][i - 1] = Fraction(a)
    return ExactMatrix(m)


def gen_x(n, i, a):
    """x_i(a) = I + a E_{i,i+1}."""
    _check_index(n, i)
    m = [[Fraction(int(r == c)) for c in range(n + 1)] for r in range(n + 1)]
    m[i - 1][i] = Fraction(a)
    return ExactMatrix(m)


def gen_alpha_vee(n, i, c):
    """alpha_i^vee(c) = diag(1,...,c,c^{-1},...,1)."""
    _check_index(n, i)
    c = Fraction(c)
    if c == 0:
        raise ZeroTorusValue("torus coordinate must be nonzero")
    m = [[Fraction(int(r == q)) for q in range(n + 1)] for r in range(n + 1)]
    m[i - 1][i - 1] = c
    m[i][i] = 1 / c
    return ExactMatrix(m)


def gen_sbar(n, i):
    """sbar_i = x_i(-1) y_i(1) x_i(-1)."""
    return gen_x(n, i, -1) * gen_y(n, i, 1) * gen_x(n, i, -1)


def pi_minus(g: ExactMatrix):
    """Factor g = b u with b lower-triangular, u unit upper-triangular.

    LU without pivoting; defined exactly on the open cell where every
    leading principal minor is nonzero.
    """
    n = g.size
    b = [[Fraction(0)] * n for _ in range(n)]
    u = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for col in range(n):
        for row in range(col, n):
            b[row][col] = g[row, col] - sum(b[row][k] * u[k][col] for k in range(col))
        piv = b[col][col]
        if piv == 0:
            raise OutsideOpenCell(col + 1)
        for c2 in range(col + 1, n):
            u[col][c2] = (g[col, c2] - sum(b[col][k] * u[k][c2] for k in range(col))) / piv
    return ExactMatrix(b), ExactMatrix(u)


def chi(b: ExactMatrix, i):
    """chi_i of a lower-triangular b: the (i+1, i) entry of b diag(b)^{-1}."""
    n = b.size - 1
    _check_index(n, i)
    for r in range(b.size):
        for c in range(r + 1, b.size):
            if b[r, c] != 0:
                raise GeomCrystalError("chi expects a lower-triangular matrix")
        if b[r, r] == 0:
            raise GeomCrystalError("chi expects an invertible diagonal")
    return b[i, i - 1] / b[i - 1, i - 1]


def _require_type_a(cartan, semiring=None):
    if not cartan.is_type_a():
        raise WrongType("matrix model exists for the standard A_n datum only")
    if semiring is not None and semiring is not RAT:
        raise WrongType("matrix model is exact-rational")


def point_to_matrix(p) -> ExactMatrix:
    """Y_w(c) = y_{i_1}(1/c_1) alpha_{i_1}^vee(c_1) ... as a literal product."""
    _require_type_a(p.cartan, p.semiring)
    n = p.cartan.rank
    out = ExactMatrix.identity(n + 1)
    for letter, c in zip(p.word, p.coords):
        i = p.cartan.position(letter) + 1
        out = out * gen_y(n, i, 1 / c) * gen_alpha_vee(n, i, c)
    return out


def uw_to_matrix(cartan, word, a_values) -> ExactMatrix:
    """x_{i_1}(a_1) sbar_{i_1} ... x_{i_k}(a_k) sbar_{i_k} as a literal product."""
    _require_type_a(cartan)
    n = cartan.rank
    w = cartan.word(word)
    out = ExactMatrix.identity(n + 1)
    for letter, a in zip(w, a_values):
        i = cartan.position(letter) + 1
        out = out * gen_x(n, i, Fraction(a)) * gen_sbar(n, i)
    return out
