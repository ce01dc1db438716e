"""Semisimple algebra toolkit: Artin-Wedderburn decomposition, Karoubi
envelopes of presented categories, and representation extraction.

All splitting is exact.  Numerics appear only as a root-finding hint: the
minimal polynomial of a central element is factored by approximating its
roots, recovering each root as an exact cyclotomic (all our algebras are
twisted group algebras, whose central characters take cyclotomic values),
and verifying p(root) = 0 exactly.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import isqrt, lcm

from .cyclo import CyclotomicNumber, cyclo, exactify, NoExactMatch, AmbiguousMatch
from .linalg import ExactMatrix, solve_linear

__all__ = [
    "StructuredAlgebra",
    "AWBlock",
    "SplitFailure",
    "NotSemisimple",
    "artin_wedderburn",
    "PresentedCategory",
    "SimpleIdempotent",
    "karoubi_simples",
    "hom_between",
    "rep_from_idempotent",
]

AW_SEED = 20240501  # fixed seed for the deterministic fallback combinations


class SplitFailure(RuntimeError):
    pass


class NotSemisimple(RuntimeError):
    pass


def _vec_add(u, v):
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, cyclo(0)) + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _vec_scale(u, c):
    if isinstance(c, (int, Fraction)):
        c = cyclo(c)
    if c.is_zero():
        return {}
    return {k: v * c for k, v in u.items()}


def _vec_eq(u, v):
    return all(not c.is_zero() for c in u.values()) and _vec_sub_iszero(u, v)


def _vec_sub_iszero(u, v):
    keys = set(u) | set(v)
    z = cyclo(0)
    return all((u.get(k, z) - v.get(k, z)).is_zero() for k in keys)


class StructuredAlgebra:
    """Finite-dimensional associative algebra with explicit structure
    constants over the cyclotomic scalars."""

    def __init__(self, labels, mult, unit, check_assoc=True, name="A"):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._mult = mult            # (i, j) -> dict index -> coeff
        self.unit = dict(unit)       # vector
        self.name = name
        self._mult_cache = {}
        if check_assoc:
            self.check_associative()

    def mult_basis(self, i, j):
        key = (i, j)
        got = self._mult_cache.get(key)
        if got is None:
            got = {k: c for k, c in self._mult(i, j).items() if not c.is_zero()}
            self._mult_cache[key] = got
        return got

    def mul(self, u, v):
        out = {}
        for i, a in u.items():
            if a.is_zero():
                continue
            for j, b in v.items():
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in self.mult_basis(i, j).items():
                    s = out.get(k, cyclo(0)) + ab * c
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def check_associative(self, full_limit: int = 24, samples: int = 1000,
                          seed: int = AW_SEED):
        n = self.dim
        def basis(i):
            return {i: cyclo(1)}
        if n <= full_limit:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(samples))
        for i, j, k in triples:
            lhs = self.mul(self.mul(basis(i), basis(j)), basis(k))
            rhs = self.mul(basis(i), self.mul(basis(j), basis(k)))
            if not _vec_sub_iszero(lhs, rhs):
                raise ValueError(f"{self.name}: not associative at {(i, j, k)}")
        for i in range(n):
            if not _vec_sub_iszero(self.mul(self.unit, basis(i)), basis(i)):
                raise ValueError(f"{self.name}: unit fails on the left")
            if not _vec_sub_iszero(self.mul(basis(i), self.unit), basis(i)):
                raise ValueError(f"{self.name}: unit fails on the right")

    # -- linear algebra helpers -----------------------------------------

    def _to_matrix(self, vectors):
        m = ExactMatrix(self.dim, len(vectors))
        for j, v in enumerate(vectors):
            for i, c in v.items():
                m[i, j] = c
        return m

    def span_basis(self, vectors):
        """Reduce a list of vectors to an exact basis of their span."""
        basis = []
        rows = []  # echelon rows as dense lists
        for v in vectors:
            dense = [cyclo(0)] * self.dim
            for i, c in v.items():
                dense[i] = c
            for r in rows:
                lead = next(i for i, c in enumerate(r) if not c.is_zero())
                if not dense[lead].is_zero():
                    f = dense[lead]
                    dense = [a - f * b for a, b in zip(dense, r)]
            if any(not c.is_zero() for c in dense):
                lead = next(i for i, c in enumerate(dense) if not c.is_zero())
                inv = dense[lead].inverse()
                dense = [c * inv for c in dense]
                rows.append(dense)
                basis.append(v)
        return basis, rows

    def coords_in_span(self, rows, v):
        """Coordinates of v over echelon rows; None if not in the span."""
        dense = [cyclo(0)] * self.dim
        for i, c in v.items():
            dense[i] = c
        coords = []
        for r in rows:
            lead = next(i for i, c in enumerate(r) if not c.is_zero())
            f = dense[lead]
            coords.append(f)
            if not f.is_zero():
                dense = [a - f * b for a, b in zip(dense, r)]
        if any(not c.is_zero() for c in dense):
            return None
        return coords

    def center(self):
        """Exact basis of the center."""
        cur = [{i: cyclo(1)} for i in range(self.dim)]
        for j in range(self.dim):
            bj = {j: cyclo(1)}
            # restrict cur to vectors commuting with b_j
            mat = ExactMatrix(self.dim, len(cur))
            for col, v in enumerate(cur):
                comm = _vec_add(self.mul(v, bj), _vec_scale(self.mul(bj, v), -1))
                for i, c in comm.items():
                    mat[i, col] = c
            sol = solve_linear(mat, [cyclo(0)] * self.dim)
            new = []
            for kv in sol.kernel:
                w = {}
                for col, c in enumerate(kv):
                    if not c.is_zero():
                        w = _vec_add(w, _vec_scale(cur[col], c))
                new.append(w)
            cur = new
            if len(cur) <= 1:
                break
        return cur


class AWBlock:
    def __init__(self, central, e11, size, matrix_units):
        self.central = central
        self.e11 = e11
        self.size = size
        self.matrix_units = matrix_units

    def __repr__(self):
        return f"AWBlock(size={self.size})"


def _min_poly(A: StructuredAlgebra, w, e):
    """Monic minimal polynomial of w inside the corner algebra eAe."""
    powers = [dict(e)]
    rows = []
    basis_vecs = []
    while True:
        _, rows = A.span_basis(powers)
        nxt = A.mul(powers[-1], w)
        coords = A.coords_in_span(rows, nxt)
        if coords is not None and len(rows) == len(powers):
            # nxt = sum coords_i * basis-echelon rows; re-express over powers
            # solve directly: powers matrix . c = nxt
            m = A._to_matrix(powers)
            rhs = [cyclo(0)] * A.dim
            for i, c in nxt.items():
                rhs[i] = c
            sol = solve_linear(m, rhs)
            assert sol.consistent
            # p(x) = x^k - sum c_i x^i
            coeffs = [(-1) * c for c in sol.particular] + [cyclo(1)]
            return coeffs
        powers.append(nxt)
        if len(powers) > A.dim + 1:
            raise SplitFailure("minimal polynomial did not terminate")


def _poly_eval(coeffs, x, ring_one):
    acc = None
    for c in reversed(coeffs):
        acc = c if acc is None else acc * x + c
    return acc


def _poly_is_squarefree(coeffs):
    # gcd(p, p') over the cyclotomic coefficients via Euclid
    p = [c for c in coeffs]
    dp = [coeffs[i] * i for i in range(1, len(coeffs))]
    def degree(q):
        d = len(q) - 1
        while d >= 0 and q[d].is_zero():
            d -= 1
        return d
    def rem(a, b):
        a = a[:]
        da, db = degree(a), degree(b)
        inv = b[db].inverse()
        while da >= db >= 0:
            f = a[da] * inv
            for i in range(db + 1):
                a[da - db + i] = a[da - db + i] - f * b[i]
            da = degree(a)
        return a[: max(da + 1, 1)]
    a, b = p, dp
    while degree(b) > 0:
        a, b = b, rem(a, b)
    return degree(b) == 0 and not b[0].is_zero()


def _exact_roots(coeffs, conductor_hint):
    """Exact roots of a squarefree monic cyclotomic-coefficient polynomial."""
    import numpy as np

    deg = len(coeffs) - 1
    cpoly = [coeffs[deg - i].complex() for i in range(deg + 1)]
    approx = np.roots(cpoly)
    base = conductor_hint
    conductors = []
    for mult in (1, 2, 3, 4, 6):
        n = lcm(base, mult * base) if mult > 1 else base
        n = base * mult
        if n <= 72 and n not in conductors:
            conductors.append(n)
    roots = []
    for z in approx:
        found = None
        for n in conductors:
            for bound in (1, 2, 3, 4, 6, 12, 24, 48):
                try:
                    cand = exactify(z.real, z.imag, n, bound, tol=1e-6)
                except (NoExactMatch, AmbiguousMatch):
                    continue
                val = _poly_eval(coeffs, cand, cyclo(1))
                if val.is_zero():
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise SplitFailure(f"could not exactify root {z}")
        roots.append(found)
    # roots of a squarefree polynomial are distinct
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == roots[j]:
                raise SplitFailure("repeated exact root in squarefree poly")
    return roots


def _lagrange_idempotents(A: StructuredAlgebra, w, e, roots):
    """Spectral idempotents of w (semisimple, min-poly roots given) in eAe."""
    out = []
    for i, li in enumerate(roots):
        num = dict(e)
        den = cyclo(1)
        for j, lj in enumerate(roots):
            if i == j:
                continue
            term = _vec_add(w, _vec_scale(e, lj * cyclo(-1)))
            num = A.mul(num, term)
            den = den * (li - lj)
        out.append(_vec_scale(num, den.inverse()))
    return out


def _corner_basis(A: StructuredAlgebra, e):
    vecs = []
    for i in range(A.dim):
        v = A.mul(A.mul(e, {i: cyclo(1)}), e)
        if v:
            vecs.append(v)
    basis, rows = A.span_basis(vecs)
    return basis, rows


def artin_wedderburn(A: StructuredAlgebra, conductor_hint: int = 12):
    """Exact Artin-Wedderburn decomposition into matrix blocks."""
    center = A.center()
    # 1. split the center into primitive central idempotents
    idems = [dict(A.unit)]
    elements = list(center)
    rng = random.Random(AW_SEED)
    progress = True
    while progress:
        progress = False
        for e in list(idems):
            zb = [A.mul(A.mul(e, z), e) for z in elements]
            zb = [v for v in zb if v]
            basis, rows = A.span_basis(zb + [e])
            if len(basis) <= 1:
                continue
            # find a splitting element
            split = None
            cands = list(zb) + [
                _vec_add(zb[i], _vec_scale(zb[j], rng.randint(1, 5)))
                for i in range(len(zb)) for j in range(len(zb)) if i < j][:20]
            for w in cands:
                mp = _min_poly(A, w, e)
                if len(mp) - 1 >= 2 and _poly_is_squarefree(mp):
                    split = (w, mp)
                    break
            if split is None:
                continue
            w, mp = split
            roots = _exact_roots(mp, conductor_hint)
            new = _lagrange_idempotents(A, w, e, roots)
            idems.remove(e)
            idems.extend(v for v in new if v)
            progress = True
    # verify central idempotents
    total = {}
    for e in idems:
        if not _vec_sub_iszero(A.mul(e, e), e):
            raise SplitFailure("central idempotent fails e^2 = e")
        total = _vec_add(total, e)
    if not _vec_sub_iszero(total, A.unit):
        raise NotSemisimple("central idempotents do not sum to the unit")
    for e, f in itertools.combinations(idems, 2):
        if A.mul(e, f):
            raise SplitFailure("central idempotents not orthogonal")

    # deterministic ordering of blocks by their support pattern
    def key(e):
        return sorted((i, str(c)) for i, c in e.items())
    idems.sort(key=key)

    blocks = []
    total_dim = 0
    for e in idems:
        basis, rows = _corner_basis(A, e)
        d2 = len(basis)
        d = isqrt(d2)
        if d * d != d2:
            raise NotSemisimple(f"corner dimension {d2} is not a square")
        total_dim += d2
        fs = _primitive_split(A, e, d, conductor_hint, rng)
        units = _matrix_units(A, fs)
        blocks.append(AWBlock(e, fs[0], d, units))
    if total_dim != A.dim:
        raise NotSemisimple(
            f"block dimensions sum to {total_dim}, algebra dim {A.dim}")
    return blocks


def _primitive_split(A, e, d, conductor_hint, rng):
    """Split a central idempotent of block size d into d primitive orthogonal
    idempotents."""
    fs = [e]
    if d == 1:
        return fs
    while True:
        refine = None
        for fi, f in enumerate(fs):
            basis, rows = _corner_basis(A, f)
            if len(basis) == 1:
                continue
            # find a splitting element of fAf with squarefree min poly
            cands = list(basis)
            for _ in range(30):
                w = {}
                for b in basis:
                    w = _vec_add(w, _vec_scale(b, rng.randint(0, 3)))
                cands.append(w)
            for w in cands:
                w = A.mul(A.mul(f, w), f)
                if not w:
                    continue
                mp = _min_poly(A, w, f)
                if len(mp) - 1 >= 2 and _poly_is_squarefree(mp):
                    refine = (fi, w, mp)
                    break
            if refine:
                break
        if refine is None:
            break
        fi, w, mp = refine
        roots = _exact_roots(mp, conductor_hint)
        new = _lagrange_idempotents(A, w, fs[fi], roots)
        fs = fs[:fi] + [v for v in new if v] + fs[fi + 1:]
    if len(fs) != d:
        raise SplitFailure(f"expected {d} primitive idempotents, got {len(fs)}")
    return fs


def _matrix_units(A, fs):
    d = len(fs)
    units = {(0, 0): fs[0]}
    if d == 1:
        return units
    us = [fs[0]]
    vs = [fs[0]]
    for i in range(1, d):
        # u_i in f_i A f_0, v_i in f_0 A f_i with v_i u_i = f_0
        cand = None
        for b in range(A.dim):
            u = A.mul(A.mul(fs[i], {b: cyclo(1)}), fs[0])
            if u:
                cand = u
                break
        if cand is None:
            raise SplitFailure("no connecting element between block corners")
        # solve v * cand = f_0 over v in f_0 A f_i
        basis, rows = [], []
        vecs = []
        for b in range(A.dim):
            v = A.mul(A.mul(fs[0], {b: cyclo(1)}), fs[i])
            if v:
                vecs.append(v)
        basis, rows = A.span_basis(vecs)
        m = ExactMatrix(A.dim, len(basis))
        for col, v in enumerate(basis):
            prod = A.mul(v, cand)
            for r, c in prod.items():
                m[r, col] = c
        rhs = [cyclo(0)] * A.dim
        for r, c in fs[0].items():
            rhs[r] = c
        sol = solve_linear(m, rhs)
        if not sol.consistent:
            raise SplitFailure("matrix-unit inverse solve failed")
        v = {}
        for col, c in enumerate(sol.particular):
            if not c.is_zero():
                v = _vec_add(v, _vec_scale(basis[col], c))
        us.append(cand)
        vs.append(v)
    for i in range(d):
        for j in range(d):
            units[(i, j)] = A.mul(us[i], vs[j])
    # exact verification
    for (i, j) in units:
        for (k, l) in units:
            prod = A.mul(units[(i, j)], units[(k, l)])
            expect = units[(i, l)] if j == k else {}
            if not _vec_sub_iszero(prod, expect):
                raise SplitFailure("matrix-unit relations fail")
    return units


# ---------------------------------------------------------------------------
# Presented categories and their Karoubi envelopes
# ---------------------------------------------------------------------------


class PresentedCategory:
    """A finite category presented by hom bases and structure constants.

    Morphisms are dicts {basis_label: coefficient}; the basis labels of
    hom(x, y) are supplied by `hom_basis`, composition of basis morphisms by
    `compose_basis(g_label, f_label)` (g after f) returning a dict.
    """

    def __init__(self, objects, hom_basis, compose_basis, identity):
        self.objects = list(objects)
        self.hom_basis = hom_basis
        self.compose_basis = compose_basis
        self.identity = identity        # object -> morphism dict

    def compose(self, g, f):
        out = {}
        for lf, cf in f.items():
            if cf.is_zero():
                continue
            for lg, cg in g.items():
                if cg.is_zero():
                    continue
                for lk, ck in self.compose_basis(lg, lf).items():
                    s = out.get(lk, cyclo(0)) + cf * cg * ck
                    if s.is_zero():
                        out.pop(lk, None)
                    else:
                        out[lk] = s
        return out

    def end_algebra(self, x) -> StructuredAlgebra:
        labels = list(self.hom_basis(x, x))
        index = {l: i for i, l in enumerate(labels)}

        def mult(i, j):
            prod = self.compose_basis(labels[i], labels[j])
            return {index[l]: c for l, c in prod.items()}

        unit = {index[l]: c for l, c in self.identity(x).items()}
        return StructuredAlgebra(labels, mult, unit, check_assoc=False,
                                 name=f"End({x})")


class SimpleIdempotent:
    def __init__(self, obj, morphism, block_dim, label=None):
        self.obj = obj
        self.morphism = morphism      # dict basis_label -> coeff
        self.block_dim = block_dim
        self.label = label

    def __repr__(self):
        return f"SimpleIdempotent(obj={self.obj}, d={self.block_dim})"


def karoubi_simples(C: PresentedCategory, conductor_hint: int = 12):
    """One representative simple idempotent per isomorphism class."""
    simples = []
    for x in C.objects:
        A = C.end_algebra(x)
        if A.dim == 0:
            continue
        blocks = artin_wedderburn(A, conductor_hint)
        for blk in blocks:
            mor = {A.labels[i]: c for i, c in blk.e11.items()}
            cand = SimpleIdempotent(x, mor, blk.size)
            if not any(_isomorphic(C, s, cand) for s in simples):
                simples.append(cand)
    return simples


def hom_between(C: PresentedCategory, i: SimpleIdempotent, j: SimpleIdempotent):
    """Basis of {f : j o f o i = f}."""
    labels = list(C.hom_basis(i.obj, j.obj))
    if not labels:
        return []
    index = {l: k for k, l in enumerate(labels)}
    m = ExactMatrix(len(labels), len(labels))
    for col, l in enumerate(labels):
        jfi = C.compose(j.morphism, C.compose({l: cyclo(1)}, i.morphism))
        for lbl, c in jfi.items():
            m[index[lbl], col] = c
        m[col, col] = m[col, col] - cyclo(1)
    sol = solve_linear(m, [cyclo(0)] * len(labels))
    out = []
    for kv in sol.kernel:
        f = {labels[k]: c for k, c in enumerate(kv) if not c.is_zero()}
        out.append(f)
    return out


def _isomorphic(C, s1, s2):
    homs12 = hom_between(C, s1, s2)
    if not homs12:
        return False
    homs21 = hom_between(C, s2, s1)
    for f in homs12:
        for g in homs21:
            gf = C.compose(g, f)
            if _vec_sub_iszero_mor(gf, s1.morphism):
                return True
            # simples: g o f is a scalar multiple of the idempotent
            for lbl, c in s1.morphism.items():
                if lbl in gf and not gf[lbl].is_zero():
                    scale = gf[lbl] * c.inverse()
                    if not scale.is_zero():
                        return True
    return False


def _vec_sub_iszero_mor(u, v):
    keys = set(u) | set(v)
    z = cyclo(0)
    return all((u.get(k, z) - v.get(k, z)).is_zero() for k in keys)


def rep_from_idempotent(C: PresentedCategory, i: SimpleIdempotent):
    """Functor data {object: basis of C(obj_i, -) o i} with exact actions.

    Returns (spaces, act) where spaces[y] is a list of morphism dicts
    forming a basis of C(obj_i, y) . i and act(f_label_pair) gives matrices.
    """
    spaces = {}
    echelons = {}
    for y in C.objects:
        vecs = []
        for l in C.hom_basis(i.obj, y):
            v = C.compose({l: cyclo(1)}, i.morphism)
            if v:
                vecs.append(v)
        basis, rows = _mor_span(C, i.obj, y, vecs)
        if basis:
            spaces[y] = basis
            echelons[y] = rows
    return spaces, echelons


def _mor_span(C, x, y, vecs):
    labels = list(C.hom_basis(x, y))
    index = {l: k for k, l in enumerate(labels)}
    basis = []
    rows = []
    for v in vecs:
        dense = [cyclo(0)] * len(labels)
        for l, c in v.items():
            dense[index[l]] = c
        for r in rows:
            lead = next(k for k, c in enumerate(r) if not c.is_zero())
            if not dense[lead].is_zero():
                f = dense[lead]
                dense = [a - f * b for a, b in zip(dense, r)]
        if any(not c.is_zero() for c in dense):
            lead = next(k for k, c in enumerate(dense) if not c.is_zero())
            inv = dense[lead].inverse()
            dense = [c * inv for c in dense]
            rows.append(dense)
            basis.append(v)
    return basis, rows
