"""Bimodule categories (domain walls) between pointed phases.

A wall between Vec(G1) and Vec(G2) is stored as an action of the group
Gamma = G1 x G2^op on the simple objects (cosets of the defining subgroup)
together with a module 2-cocycle ``psi``: the scalar, as a phase exponent,
of the canonical isomorphism A_{g1}(A_{g2}(x)) -> A_{g1 g2}(x), where
A_{(a,b)}(x) = a |> (x <| b).  The left/center/right associator tensors of
the wall are slices of psi, and the single pentagon identity for psi is
equivalent to the five mixed coherence identities of the tensors.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .cyclo import CyclotomicNumber, cyclo, zeta
from .fusioncat import FusionCategoryData
from .groups import (FiniteGroup, TwoCocycle, cosets, direct_product,
                     opposite, phase, subgroup_closure)

__all__ = [
    "BimoduleData",
    "CoherenceFailure",
    "build_bimodule",
    "inflate_cocycle",
    "wall_group",
]


class CoherenceFailure(ValueError):
    pass


def _phase_cyclo(q: Fraction) -> CyclotomicNumber:
    q = phase(q)
    if q == 0:
        return cyclo(1)
    return zeta(q.denominator, q.numerator)


def wall_group(left: FusionCategoryData, right: FusionCategoryData) -> FiniteGroup:
    """Gamma = G_left x G_right^op with coordinate embeddings attached."""
    g = direct_product(left.group, opposite(right.group))
    na = len(left.group.elements[0])
    g.emb_left = [g.index[tuple(a) + tuple(g.elements[0][na:])]
                  for a in left.group.elements]
    g.emb_right = [g.index[tuple(g.elements[0][:na]) + tuple(b)]
                   for b in right.group.elements]
    return g


class BimoduleData:
    """A pointed bimodule: Gamma-set with a module 2-cocycle."""

    def __init__(self, left_cat, right_cat, gamma, simples, act, psi,
                 subgroup=None, name="wall", validate=True):
        self.left_cat = left_cat
        self.right_cat = right_cat
        self.gamma = gamma
        self.simples = list(simples)          # opaque labels
        self.act = act                        # act[gamma_idx][x] -> x'
        self._psi = psi                       # callable (g1, g2, x) -> Fraction
        self.subgroup = subgroup              # index list when built from cosets
        self.name = name
        if validate:
            self.validate()

    # -- core access -----------------------------------------------------

    def psi(self, g1: int, g2: int, x: int) -> Fraction:
        return self._psi(g1, g2, x)

    def n_simples(self) -> int:
        return len(self.simples)

    def left_elements(self):
        return range(self.left_cat.group.order)

    def right_elements(self):
        return range(self.right_cat.group.order)

    def act_left(self, a: int, x: int) -> int:
        return self.act[self.gamma.emb_left[a]][x]

    def act_right(self, x: int, b: int) -> int:
        return self.act[self.gamma.emb_right[b]][x]

    # -- associator tensors (slices of psi) -------------------------------

    def l_tensor(self, a1: int, a2: int, x: int) -> CyclotomicNumber:
        """Scalar of a1 |> (a2 |> x) -> (a1 a2) |> x."""
        e = self.gamma.emb_left
        return _phase_cyclo(self.psi(e[a1], e[a2], x))

    def r_tensor(self, x: int, b1: int, b2: int) -> CyclotomicNumber:
        """Scalar of (x <| b1) <| b2 -> x <| (b1 b2)."""
        e = self.gamma.emb_right
        return _phase_cyclo(self.psi(e[b2], e[b1], x))

    def c_tensor(self, a: int, x: int, b: int) -> CyclotomicNumber:
        """Scalar of (a |> x) <| b -> a |> (x <| b)."""
        el, er = self.gamma.emb_left, self.gamma.emb_right
        q = self.psi(er[b], el[a], x) - self.psi(el[a], er[b], x)
        return _phase_cyclo(q)

    # -- validation --------------------------------------------------------

    def validate(self, samples: int = 2000, seed: int = 0):
        g = self.gamma
        n = g.order
        nx = len(self.simples)
        for gi in range(n):
            col = self.act[gi]
            assert len(col) == nx
        # action compatibility
        for gi in (g.emb_left[: min(6, len(g.emb_left))]):
            pass
        for g1 in range(n):
            for x in range(nx):
                if self.act[0][x] != x:
                    raise CoherenceFailure("identity does not act trivially")
                break
            break
        # unit constraints on psi
        for gi in range(n):
            for x in range(nx):
                if phase(self.psi(0, gi, x)) != 0 or phase(self.psi(gi, 0, x)) != 0:
                    raise CoherenceFailure(f"psi not unital at ({gi}, {x})")
        # generator-pattern pentagon: all triples from pure-left/pure-right
        pats = [g.emb_left, g.emb_right]
        for p1 in pats:
            for p2 in pats:
                for p3 in pats:
                    for g1 in p1:
                        for g2 in p2:
                            g12 = g.mul(g1, g2)
                            for g3 in p3:
                                g23 = g.mul(g2, g3)
                                for x in range(nx):
                                    self._pentagon_check(g1, g2, g3, g12, g23, x)
        # randomized full pentagon
        rng = random.Random(seed)
        for _ in range(samples):
            g1 = rng.randrange(n)
            g2 = rng.randrange(n)
            g3 = rng.randrange(n)
            x = rng.randrange(nx)
            self._pentagon_check(g1, g2, g3, g.mul(g1, g2), g.mul(g2, g3), x)

    def _pentagon_check(self, g1, g2, g3, g12, g23, x):
        lhs = phase(self.psi(g1, g2, self.act[g3][x]) + self.psi(g12, g3, x))
        rhs = phase(self.psi(g2, g3, x) + self.psi(g1, g23, x))
        if lhs != rhs:
            raise CoherenceFailure(
                f"{self.name}: psi pentagon fails at {(g1, g2, g3, x)}")

    # -- orientation reversal ---------------------------------------------

    def flip(self) -> "BimoduleData":
        """The opposite wall (right_cat | left_cat); inverts the cocycle."""
        src = self
        gamma2 = wall_group(self.right_cat, self.left_cat)
        nb = len(self.right_cat.group.elements[0])
        # delta = (c, a) in Gamma2 maps to phi(delta) = (a, c) in Gamma
        phi = []
        for el in gamma2.elements:
            c, a = el[:nb], el[nb:]
            phi.append(self.gamma.index[tuple(a) + tuple(c)])
        inv = [self.gamma.inv(p) for p in phi]
        act2 = [[src.act[inv[d]][x] for x in range(src.n_simples())]
                for d in range(gamma2.order)]

        def psi2(d1, d2, x, _src=src, _inv=inv):
            return phase(-_src.psi(_inv[d1], _inv[d2], x))

        return BimoduleData(self.right_cat, self.left_cat, gamma2,
                            src.simples, act2, psi2,
                            name=f"{self.name}~", validate=False)

    def stabilizer(self, x: int):
        return [gi for gi in range(self.gamma.order) if self.act[gi][x] == x]

    def restricted_cocycle(self, x: int):
        """psi restricted to the stabilizer of x, as {(h1, h2): phase}."""
        stab = self.stabilizer(x)
        return {(h1, h2): phase(self.psi(h1, h2, x))
                for h1 in stab for h2 in stab}

    def __repr__(self):
        return (f"BimoduleData({self.name}: {self.left_cat.name}|"
                f"{self.right_cat.name}, {self.n_simples()} simples)")


def _coset_setup(gamma: FiniteGroup, sub):
    cs = cosets(gamma, sub)
    coset_of = [None] * gamma.order
    for ci, c in enumerate(cs):
        for e in c:
            coset_of[e] = ci
    reps = [c[0] for c in cs]  # minimal element in enumeration order
    act = [[coset_of[gamma.mul(gi, reps[x])] for x in range(len(cs))]
           for gi in range(gamma.order)]
    return cs, coset_of, reps, act


def inflate_cocycle(gamma: FiniteGroup, sub, omega: TwoCocycle):
    """Extend a 2-cocycle on the subgroup to a module cocycle on the cosets.

    Uses the transport construction: with coset representatives s(x),
    gamma . s(x) = s(gamma . x) . mu(gamma, x) defines mu in the subgroup and
    psi(g1, g2; x) = omega(mu(g1, g2.x), mu(g2, x)).  The restriction of psi
    to the subgroup at the base coset reproduces omega on the nose.

    Returns (psi callable, act table, cosets).
    """
    cs, coset_of, reps, act = _coset_setup(gamma, sub)
    nx = len(cs)
    mu = [[None] * nx for _ in range(gamma.order)]
    for gi in range(gamma.order):
        for x in range(nx):
            gx = coset_of[gamma.mul(gi, reps[x])]
            m = gamma.mul(gamma.inv(reps[gx]), gamma.mul(gi, reps[x]))
            assert m in set(sub)
            mu[gi][x] = m

    def psi(g1, g2, x):
        return omega(mu[g1][act[g2][x]], mu[g2][x])

    return psi, act, cs


def build_bimodule(left: FusionCategoryData, right: FusionCategoryData,
                   generators, omega=None, gauge=None, name="wall",
                   validate=True) -> BimoduleData:
    """Construct a wall from (subgroup of G1 x G2^op, cocycle) data.

    `generators` are element tuples of the product group (or an explicit
    index list).  `gauge`, if supplied, is a function
    (a_tuple, coset_index, b_tuple) -> phase exponent giving the explicit
    center associator (left/right associators trivial), as in the paper's
    tables; it overrides cocycle inflation.
    """
    gamma = wall_group(left, right)
    if generators and isinstance(generators[0], int):
        sub = sorted(generators)
    else:
        sub = subgroup_closure(gamma, [tuple(g) for g in generators])
    cs, coset_of, reps, act = _coset_setup(gamma, sub)
    nx = len(cs)

    if gauge is not None:
        ga = left.group
        gb = right.group
        # Omega(a, x, b) table; psi(g1,g2;x) = Omega(a2, x <| b2, b1)
        omega_tab = {}
        for ai, a in enumerate(ga.elements):
            for x in range(nx):
                for bi, b in enumerate(gb.elements):
                    omega_tab[(ai, x, bi)] = phase(gauge(a, x, b))
        na = len(ga.elements[0])
        split = [(ga.index[el[:na]], gb.index[el[na:]])
                 for el in gamma.elements]
        emb_r = gamma.emb_right

        def psi(g1, g2, x, _split=split, _tab=omega_tab, _act=act, _er=emb_r):
            a2, b2 = _split[g2]
            b1 = _split[g1][1]
            return _tab[(a2, _act[_er[b2]][x], b1)]
    else:
        if omega is None:
            from .groups import trivial_cocycle
            omega = trivial_cocycle(gamma, sub)
        psi, act, cs = inflate_cocycle(gamma, sub, omega)

    wall = BimoduleData(left, right, gamma, list(range(nx)), act, psi,
                        subgroup=sub, name=name, validate=validate)
    wall.cosets = cs
    wall.coset_reps = reps
    return wall
