"""Exception types shared across the package.

Every domain error derives from GeomCrystalError so callers (and the CLI)
can distinguish bad input from a genuine property failure.
"""


class GeomCrystalError(Exception):
    pass


class NotGCM(GeomCrystalError):
    """Matrix violates the generalized-Cartan-matrix axioms."""


class NotSymmetrizable(GeomCrystalError):
    """No positive diagonal symmetrizer exists."""


class BadIndex(GeomCrystalError):
    """Index outside the Cartan index set / matrix size."""


class IndexAbsent(GeomCrystalError):
    """The index does not occur in the point's word."""


class SingularIntermediate(GeomCrystalError):
    """A rational recursion hit a vanishing intermediate value."""


class CartanMismatch(GeomCrystalError):
    """Operands carry different Cartan data."""


class WrongType(GeomCrystalError):
    """Operation requires a specific Cartan type (e.g. type A)."""


class PatternMismatch(GeomCrystalError):
    """Word window does not match the requested braid-move pattern."""


class OutsideOpenCell(GeomCrystalError):
    """A leading principal minor vanishes; no B^- x U factorization."""

    def __init__(self, minor_index):
        super().__init__(f"leading principal minor {minor_index} vanishes")
        self.minor_index = minor_index


class ZeroTorusValue(GeomCrystalError):
    """Torus coordinates must be invertible (nonzero)."""


class BridgeMismatch(GeomCrystalError):
    """Tropical geometric action disagrees with the dual tensor-crystal action."""

    def __init__(self, position, lhs, rhs):
        super().__init__(
            f"coordinate {position}: geometric side {lhs} != crystal side {rhs}"
        )
        self.position = position
        self.lhs = lhs
        self.rhs = rhs
