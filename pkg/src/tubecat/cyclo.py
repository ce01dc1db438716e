"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as rational coefficient vectors over the power basis
1, z, ..., z^{n-1} (z = exp(2*pi*i/n)), reduced modulo the n-th cyclotomic
polynomial so that only the first phi(n) entries can be nonzero.  Equality
of values is equality of (lifted) coefficient vectors.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CyclotomicNumber",
    "ZeroInverse",
    "NoExactMatch",
    "AmbiguousMatch",
    "cyclo",
    "zeta",
    "root_of_unity",
    "exactify",
]


class ZeroInverse(ZeroDivisionError):
    pass


class NoExactMatch(ValueError):
    pass


class AmbiguousMatch(ValueError):
    pass


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[Fraction, ...]:
    """Coefficients (low degree first, monic) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by the product of Phi_d for proper divisors d of n.
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv(poly, list(_cyclotomic_poly(d)))
    return tuple(poly)


def _polydiv(num, den):
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert all(c == 0 for c in num[len(out) - 1 + len(den) - 1:]) or True
    return out


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _reduction_rows(n: int, count: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k gives z^{phi(n)+k} expressed over the basis z^0..z^{phi(n)-1}."""
    d = _phi(n)
    phi_poly = _cyclotomic_poly(n)
    rows = []
    # z^d = -(phi_0 + phi_1 z + ... + phi_{d-1} z^{d-1})
    cur = [-c for c in phi_poly[:d]]
    for _ in range(count):
        rows.append(tuple(cur))
        # multiply by z: shift, reduce the overflow term
        over = cur[d - 1]
        cur = [Fraction(0)] + cur[: d - 1]
        if over:
            for j in range(d):
                cur[j] -= over * phi_poly[j]
    return tuple(rows)


def _reduce(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    d = _phi(n)
    out = list(coeffs[:d]) + [Fraction(0)] * max(0, d - len(coeffs))
    rows = _reduction_rows(n, max(0, len(coeffs) - d))
    for k in range(d, len(coeffs)):
        c = coeffs[k]
        if c:
            row = rows[k - d]
            for j in range(d):
                out[j] += c * row[j]
    return tuple(out + [Fraction(0)] * (n - d))


class CyclotomicNumber:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs):
        self.n = n
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) < n:
            coeffs += [Fraction(0)] * (n - len(coeffs))
        self.coeffs = _reduce(n, coeffs)
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(q, n: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(n, [Fraction(q)])

    @staticmethod
    def zeta(n: int, k: int = 1) -> "CyclotomicNumber":
        k %= n
        c = [Fraction(0)] * n
        c[k] = Fraction(1)
        return CyclotomicNumber(n, c)

    # -- conductor handling -------------------------------------------

    def lift(self, m: int) -> "CyclotomicNumber":
        """Rewrite in Q(zeta_m); m must be a multiple of n."""
        if m == self.n:
            return self
        assert m % self.n == 0
        r = m // self.n
        c = [Fraction(0)] * m
        for i, ci in enumerate(self.coeffs):
            if ci:
                c[i * r] = ci
        return CyclotomicNumber(m, c)

    def _pair(self, other):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other)
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def demote(self) -> "CyclotomicNumber":
        """Smallest-conductor representation of the same value."""
        for d in sorted(_divisors(self.n)):
            if d == self.n:
                return self
            if self._in_subfield(d):
                # express over Q(zeta_d): solve small linear system
                sub = _subfield_coords(self.n, d)
                if sub is not None:
                    vec = _express(sub, self.coeffs[: _phi(self.n)])
                    if vec is not None:
                        return CyclotomicNumber(d, vec)
        return self

    def _in_subfield(self, d: int) -> bool:
        for k in range(1, self.n + 1):
            if math.gcd(k, self.n) == 1 and k % d == 1:
                if self.galois(k) != self:
                    return False
        return True

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^k (gcd(k, n) = 1)."""
        c = [Fraction(0)] * self.n
        for i, ci in enumerate(self.coeffs):
            if ci:
                c[(i * k) % self.n] += ci
        return CyclotomicNumber(self.n, c)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        return CyclotomicNumber(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else CyclotomicNumber.rational(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.n, [c * other for c in self.coeffs])
        a, b = self._pair(other)
        d = _phi(a.n)
        prod = [Fraction(0)] * (2 * d)
        for i in range(d):
            ai = a.coeffs[i]
            if ai:
                for j in range(d):
                    bj = b.coeffs[j]
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicNumber(a.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroInverse("0 has no multiplicative inverse")
        d = _phi(self.n)
        # solve self * x = 1 over the power basis
        cols = []
        for j in range(d):
            col = (self * CyclotomicNumber.zeta(self.n, j) if j else self).coeffs[:d]
            cols.append(col)
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        sol = _solve_rational([[cols[j][i] for j in range(d)] for i in range(d)], rhs)
        assert sol is not None
        return CyclotomicNumber(self.n, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.n, [c / other for c in self.coeffs])
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.rational(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicNumber.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- predicates and views ------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        assert self.is_rational()
        return self.coeffs[0]

    def is_one(self) -> bool:
        return self.is_rational() and self.coeffs[0] == 1

    def root_of_unity_exponent(self):
        """If self = zeta_n^k, return k; else None."""
        for k in range(self.n):
            if self == CyclotomicNumber.zeta(self.n, k):
                return k
        return None

    def complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            v = self.demote()
            self._hash = hash((v.n, v.coeffs))
        return self._hash

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    z = f"z{self.n}" + (f"^{i}" if i > 1 else "")
                    terms.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(terms) or "0"

    def serialize(self):
        return {"n": self.n,
                "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @staticmethod
    def deserialize(data) -> "CyclotomicNumber":
        return CyclotomicNumber(
            data["n"], [Fraction(int(a), int(b)) for a, b in data["coeffs"]])


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _subfield_coords(n: int, d: int):
    """Columns expressing z_d^j (j < phi(d)) over the power basis of Q(zeta_n)."""
    if n % d:
        return None
    r = n // d
    cols = []
    for j in range(_phi(d)):
        cols.append(CyclotomicNumber.zeta(n, r * j).coeffs[: _phi(n)])
    return tuple(cols)


def _express(cols, target):
    m = len(target)
    k = len(cols)
    mat = [[cols[j][i] for j in range(k)] for i in range(m)]
    return _solve_rational(mat, list(target))


def _solve_rational(mat, rhs):
    """Solve an (overdetermined) rational system exactly; None if inconsistent."""
    m, k = len(mat), len(mat[0]) if mat else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv):
        sol[c] = aug[i][k]
    return sol


# -- convenience constructors ------------------------------------------


def cyclo(q, n: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.rational(q, n)


def zeta(n: int, k: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(n, k)


def root_of_unity(n: int, k: int) -> CyclotomicNumber:
    """zeta_n^k with the conductor kept at n."""
    return CyclotomicNumber.zeta(n, k % n)


ONE = cyclo(1)
ZERO = cyclo(0)


def sqrt_positive(v: CyclotomicNumber) -> CyclotomicNumber:
    """Exact square root of a totally positive real cyclotomic value.

    The root is located numerically and verified exactly by squaring;
    conductors are escalated as needed (sqrt(2) needs zeta_8, sqrt(p) at
    worst zeta_{4p})."""
    z = v.complex()
    if abs(z.imag) > 1e-9 or z.real <= 0:
        raise NoExactMatch(f"{v!r} is not positive real")
    r = z.real ** 0.5
    n0 = v.n
    cands = []
    for extra in (1, 2, 3, 4, 5, 6, 8, 12, 24):
        m = n0 * extra // math.gcd(n0, extra)
        for mm in (m, 4 * m):
            if mm <= 120 and mm not in cands:
                cands.append(mm)
    for n in sorted(cands):
        for bound in (1, 2, 3, 4, 6, 12, 24):
            try:
                cand = exactify(r, 0.0, n, bound)
            except (NoExactMatch, AmbiguousMatch):
                continue
            if cand * cand == v:
                return cand
    raise NoExactMatch(f"no cyclotomic square root found for {v!r}")


def exactify(z_re: float, z_im: float, conductor: int, denom_bound: int,
             tol: float = 1e-7) -> CyclotomicNumber:
    """Recover the unique element of (1/d) Z[zeta_n], d <= denom_bound, with
    integer coefficients bounded by denom_bound, within `tol` of the input.

    Raises NoExactMatch / AmbiguousMatch.
    """
    n = conductor
    d = _phi(n)
    z = complex(z_re, z_im)
    zn = cmath.exp(2j * cmath.pi / n)
    basis = [zn**i for i in range(d)]
    h = denom_bound
    matches = []
    # Enumerate the trailing d-2 integer coordinates; solve the leading two
    # exactly from the real/imaginary parts (1 and zeta_n are R-independent
    # for n > 2).
    for den in range(1, denom_bound + 1):
        w = z * den
        found = _int_candidates(w, basis, h * den if h else h, tol * den)
        for vec in found:
            cand = CyclotomicNumber(n, [Fraction(c, den) for c in vec])
            if abs(cand.complex() - z) <= tol and cand not in matches:
                matches.append(cand)
        if matches:
            # smaller denominators take priority; ambiguity only within one
            break
    if not matches:
        raise NoExactMatch(f"no element of Q(zeta_{n}) close to {z}")
    if len(matches) > 1:
        raise AmbiguousMatch(f"{len(matches)} candidates close to {z}")
    return matches[0]


def _int_candidates(w: complex, basis, height: int, tol: float):
    d = len(basis)
    out = []
    if d == 1:
        c0 = round(w.real)
        if abs(w - c0) <= tol and abs(c0) <= height:
            out.append([c0])
        return out
    b0, b1 = basis[0], basis[1]
    det = b0.real * b1.imag - b0.imag * b1.real
    if abs(det) < 1e-12:
        # degenerate (n <= 2): basis real only
        ranges = [range(-height, height + 1)] * (d - 1)
        import itertools
        for tail in itertools.product(*ranges):
            r = w - sum(t * basis[i + 1] for i, t in enumerate(tail))
            c0 = round(r.real)
            if abs(r - c0) <= tol and abs(c0) <= height:
                out.append([c0] + list(tail))
        return out
    import itertools
    ranges = [range(-height, height + 1)] * (d - 2)
    for tail in itertools.product(*ranges):
        r = w - sum(t * basis[i + 2] for i, t in enumerate(tail))
        # solve r = c0*b0 + c1*b1 over R
        c1 = (b0.real * r.imag - b0.imag * r.real) / det
        c0 = (r.real * b1.imag - r.imag * b1.real) / det
        c0r, c1r = round(c0), round(c1)
        if abs(c0 - c0r) * abs(det) <= 2 * tol and abs(c1 - c1r) * abs(det) <= 2 * tol:
            if abs(c0r) <= height and abs(c1r) <= height:
                approx = c0r * b0 + c1r * b1 + sum(
                    t * basis[i + 2] for i, t in enumerate(tail))
                if abs(approx - w) <= tol:
                    out.append([c0r, c1r] + list(tail))
    return out
