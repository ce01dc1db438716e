"""Finite groups as explicit multiplication tables.

Elements are coordinate tuples (e.g. (a, b) with a mod 2, b mod 3 for the
semidirect presentation of S3).  Element order is lexicographic on the
tuples with the identity first; all indices below refer to that order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

__all__ = [
    "FiniteGroup",
    "GroupMismatch",
    "InvalidSpec",
    "TwoCocycle",
    "InvalidCocycle",
    "build_group",
    "cyclic",
    "s3",
    "direct_product",
    "opposite",
    "subgroup_closure",
    "cosets",
    "trivial_cocycle",
    "phase",
]


class GroupMismatch(ValueError):
    pass


class InvalidSpec(ValueError):
    pass


class InvalidCocycle(ValueError):
    pass


def phase(q) -> Fraction:
    """Normalize a phase exponent (of e^{2 pi i .}) into [0, 1)."""
    return Fraction(q) % 1


class FiniteGroup:
    """Group given by a canonical element list and multiplication table."""

    def __init__(self, elements, mul, name="G"):
        elements = sorted(elements)
        ident = next(e for e in elements
                     if all(mul(e, x) == x == mul(x, e) for x in elements))
        self.elements = [ident] + [e for e in elements if e != ident]
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.order = len(self.elements)
        self.name = name
        n = self.order
        self.mul_table = [[self.index[mul(self.elements[i], self.elements[j])]
                           for j in range(n)] for i in range(n)]
        self.inverse_table = [0] * n
        for i in range(n):
            inv = next(j for j in range(n) if self.mul_table[i][j] == 0)
            assert self.mul_table[inv][i] == 0
            self.inverse_table[i] = inv
        self._check_associative()

    def _check_associative(self):
        n = self.order
        t = self.mul_table
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        raise InvalidSpec("multiplication table is not associative")

    # index-level operations (the hot path)

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse_table[i]

    def multiply(self, g, h):
        """Element-level product; g, h are coordinate tuples."""
        try:
            gi, hi = self.index[g], self.index[h]
        except KeyError:
            raise GroupMismatch(f"{g} or {h} not in {self.name}")
        return self.elements[self.mul_table[gi][hi]]

    def elem_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        return lcm(*[self.elem_order(i) for i in range(self.order)])

    def conjugacy_classes(self):
        seen = set()
        classes = []
        for i in range(self.order):
            if i in seen:
                continue
            cls = sorted({self.mul(self.mul(h, i), self.inv(h))
                          for h in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def centralizer(self, i: int):
        return [h for h in range(self.order)
                if self.mul(h, i) == self.mul(i, h)]

    def is_subgroup(self, indices) -> bool:
        s = set(indices)
        if 0 not in s:
            return False
        return all(self.mul(a, b) in s for a in s for b in s)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self.elements == other.elements
                and self.mul_table == other.mul_table)

    def __hash__(self):
        return hash((tuple(self.elements), self.name))


def _flat(t):
    """Flatten one level of tuple nesting for product-group coordinates."""
    out = []
    for x in t:
        if isinstance(x, tuple):
            out.extend(x)
        else:
            out.append(x)
    return tuple(out)


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec("cyclic group order must be positive")
    elems = [(i,) for i in range(n)]
    return FiniteGroup(elems, lambda a, b: ((a[0] + b[0]) % n,), name=f"Z{n}" if n > 1 else "1")


@lru_cache(maxsize=None)
def s3() -> FiniteGroup:
    # (a0,b0).(a1,b1) = (a0+a1, (1+a1) b0 + b1), a mod 2, b mod 3
    elems = [(a, b) for a in range(2) for b in range(3)]
    def mul(x, y):
        (a0, b0), (a1, b1) = x, y
        return ((a0 + a1) % 2, ((1 + a1) * b0 + b1) % 3)
    return FiniteGroup(elems, mul, name="S3")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    na = len(A.elements[0])
    def mul(x, y):
        ax, bx = x[:na], x[na:]
        ay, by = y[:na], y[na:]
        return _flat((A.multiply(ax, ay), B.multiply(bx, by)))
    elems = [_flat((a, b)) for a in A.elements for b in B.elements]
    g = FiniteGroup(elems, mul, name=f"{A.name}x{B.name}")
    g.factor_split = na
    return g


def opposite(A: FiniteGroup) -> FiniteGroup:
    g = FiniteGroup(A.elements, lambda x, y: A.multiply(y, x),
                    name=f"{A.name}op")
    return g


_BUILDERS = {
    "Z1": lambda: cyclic(1), "1": lambda: cyclic(1),
    "Z2": lambda: cyclic(2), "Z3": lambda: cyclic(3), "Z4": lambda: cyclic(4),
    "Z5": lambda: cyclic(5), "Z6": lambda: cyclic(6),
    "S3": s3,
}


def build_group(spec) -> FiniteGroup:
    """Build from a descriptor: 'Z2', 'S3', 'S3xS3op', ('product', A, B), ..."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        if spec in _BUILDERS:
            return _BUILDERS[spec]()
        if "x" in spec:
            left, right = spec.split("x", 1)
            return direct_product(build_group(left), build_group(right))
        if spec.endswith("op"):
            return opposite(build_group(spec[:-2]))
        raise InvalidSpec(f"unknown group descriptor {spec!r}")
    kind = spec[0]
    if kind == "cyclic":
        return cyclic(spec[1])
    if kind == "s3":
        return s3()
    if kind == "product":
        return direct_product(build_group(spec[1]), build_group(spec[2]))
    if kind == "opposite":
        return opposite(build_group(spec[1]))
    raise InvalidSpec(f"unknown group descriptor {spec!r}")


def subgroup_closure(G: FiniteGroup, gens) -> list[int]:
    """Smallest closed subset (as sorted index list) containing gens and 1."""
    idx = []
    for g in gens:
        idx.append(G.index[g] if not isinstance(g, int) else g)
    closed = {0}
    frontier = [0]
    for i in idx:
        if i not in closed:
            closed.add(i)
            frontier.append(i)
    changed = True
    while changed:
        changed = False
        cur = sorted(closed)
        for a in cur:
            for b in cur:
                c = G.mul(a, b)
                if c not in closed:
                    closed.add(c)
                    changed = True
    return sorted(closed)


def cosets(G: FiniteGroup, sub) -> list[list[int]]:
    """Left cosets g.M of the subgroup, each sorted; ordered by minimal rep.

    With lexicographic element order and identity first, the first coset is
    the subgroup itself and representatives are minimal in enumeration order.
    """
    sub = sorted(sub)
    assert G.is_subgroup(sub), "not a subgroup"
    seen = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        cs = sorted({G.mul(g, m) for m in sub})
        seen.update(cs)
        out.append(cs)
    return out


class TwoCocycle:
    """A U(1)-valued 2-cocycle on a subgroup, stored as phase exponents.

    `values[(i, j)]` is the exponent q (a Fraction mod 1) of omega(g_i, g_j)
    = e^{2 pi i q}, indexed by parent-group element indices restricted to the
    subgroup.
    """

    def __init__(self, G: FiniteGroup, sub, values, check=True):
        self.G = G
        self.sub = sorted(sub)
        self.values = {k: phase(v) for k, v in values.items()}
        for a in self.sub:
            for b in self.sub:
                self.values.setdefault((a, b), Fraction(0))
        if check:
            self.validate()

    def __call__(self, a: int, b: int) -> Fraction:
        return self.values[(a, b)]

    def validate(self):
        G, sub = self.G, self.sub
        for a in sub:
            if self(0, a) != 0 or self(a, 0) != 0:
                raise InvalidCocycle("cocycle is not normalized")
        for a in sub:
            for b in sub:
                ab = G.mul(a, b)
                for c in sub:
                    lhs = phase(self(a, b) + self(ab, c))
                    rhs = phase(self(b, c) + self(a, G.mul(b, c)))
                    if lhs != rhs:
                        raise InvalidCocycle(
                            f"cocycle identity fails at {(a, b, c)}")

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values.values())


def trivial_cocycle(G: FiniteGroup, sub) -> TwoCocycle:
    return TwoCocycle(G, sub, {}, check=False)


def cocycle_from_function(G: FiniteGroup, sub, fn) -> TwoCocycle:
    """fn maps (element tuple, element tuple) -> phase exponent Fraction."""
    vals = {}
    for a in sub:
        for b in sub:
            vals[(a, b)] = phase(fn(G.elements[a], G.elements[b]))
    return TwoCocycle(G, sub, vals)
