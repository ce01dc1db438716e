"""Skeletal data for the pointed input categories Vec(G).

Simple objects are group elements, fusion is group multiplication, and the
associator is a U(1)-valued 3-cocycle stored as phase exponents (trivial for
all of the paper's inputs, but validated when supplied).
"""

from __future__ import annotations

from fractions import Fraction

from .groups import FiniteGroup, build_group, phase

__all__ = ["FusionCategoryData", "InvalidCocycle3", "build_vec_g", "f_symbol"]


class InvalidCocycle3(ValueError):
    pass


class FusionCategoryData:
    """Pointed fusion category Vec(G), possibly with a 3-cocycle twist."""

    def __init__(self, group: FiniteGroup, three_cocycle=None, name=None):
        self.group = group
        self.name = name or f"Vec({group.name})"
        n = group.order
        if three_cocycle is None:
            self.f = None
        else:
            self.f = {}
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        self.f[(a, b, c)] = phase(three_cocycle(a, b, c))
            self._validate_pentagon()
        self.dims = [1] * n
        self.total_dim = n

    # F-phase of the reassociation (a b) c -> a (b c), as an exponent
    def f_phase(self, a: int, b: int, c: int) -> Fraction:
        if self.f is None:
            return Fraction(0)
        return self.f[(a, b, c)]

    def _validate_pentagon(self):
        g = self.group
        n = g.order
        for a in range(n):
            for b in range(n):
                ab = g.mul(a, b)
                for c in range(n):
                    bc = g.mul(b, c)
                    for d in range(n):
                        lhs = phase(self.f_phase(a, b, c)
                                    + self.f_phase(a, bc, d)
                                    + self.f_phase(b, c, d))
                        rhs = phase(self.f_phase(ab, c, d)
                                    + self.f_phase(a, b, g.mul(c, d)))
                        if lhs != rhs:
                            raise InvalidCocycle3(
                                f"pentagon fails at {(a, b, c, d)}")
        # unit constraints
        for a in range(n):
            for b in range(n):
                for triple in ((0, a, b), (a, 0, b), (a, b, 0)):
                    if self.f_phase(*triple) != 0:
                        raise InvalidCocycle3(
                            f"unit constraint fails at {triple}")

    def fuse(self, a: int, b: int) -> int:
        return self.group.mul(a, b)

    def dual(self, a: int) -> int:
        return self.group.inv(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return (isinstance(other, FusionCategoryData)
                and self.group == other.group and self.f == other.f)

    def __hash__(self):
        return hash((self.group, self.name))


def build_vec_g(G, three_cocycle=None) -> FusionCategoryData:
    """Build Vec(G) from a FiniteGroup or a descriptor string."""
    if isinstance(G, str):
        if G.startswith("Vec(") and G.endswith(")"):
            G = G[4:-1] or "1"
        elif G == "Vec":
            G = "1"
        G = build_group(G)
    return FusionCategoryData(G, three_cocycle)


def f_symbol(C: FusionCategoryData, a, b, c):
    """The single F coefficient for simples a, b, c (as a CyclotomicNumber)."""
    from .cyclo import cyclo, zeta

    g = C.group
    ia = a if isinstance(a, int) else g.index[a]
    ib = b if isinstance(b, int) else g.index[b]
    ic = c if isinstance(c, int) else g.index[c]
    q = C.f_phase(ia, ib, ic)
    if q == 0:
        return cyclo(1)
    return zeta(q.denominator, q.numerator)
