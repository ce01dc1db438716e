import random
from fractions import Fraction

import pytest

from tubecat.cyclo import (
    AmbiguousMatch,
    CyclotomicNumber,
    NoExactMatch,
    ZeroInverse,
    cyclo,
    exactify,
    zeta,
)
from tubecat.linalg import ExactMatrix, solve_linear


def test_cube_roots_sum_to_zero():
    w = zeta(3)
    assert (cyclo(1) + w + w * w).is_zero()


def test_additive_identity():
    assert zeta(3) + cyclo(0) == zeta(3)


def test_idempotent_coefficients_sum():
    s = cyclo(0)
    for _ in range(6):
        s = s + cyclo(Fraction(1, 6))
    assert s == 1


def test_root_orders():
    assert zeta(3) * zeta(3, 2) == 1
    assert zeta(4) * zeta(4) == cyclo(-1)
    assert zeta(3, 2) * zeta(3, 2) == zeta(3)


def test_inverse_rational():
    assert cyclo(3).inverse() == Fraction(1, 3)


def test_inverse_unit_root():
    assert zeta(3).inverse() == zeta(3, 2)


def test_inverse_one_plus_i():
    a = cyclo(1) + zeta(4)
    inv = a.inverse()
    assert a * inv == 1
    assert inv == (cyclo(1) - zeta(4)) * Fraction(1, 2)


def test_zero_inverse_raises():
    with pytest.raises(ZeroInverse):
        cyclo(0).inverse()


def test_ring_axioms_random():
    rng = random.Random(7)
    conductors = [1, 2, 3, 4, 6, 12]
    for _ in range(300):
        n = rng.choice(conductors)
        def rand():
            return CyclotomicNumber(
                n, [Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                    for _ in range(n)])
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_primitive_root_identities():
    for n in (2, 3, 5, 7, 12):
        assert zeta(n) ** n == 1
    for p in (2, 3, 5, 7):
        s = cyclo(0)
        for i in range(p):
            s = s + zeta(p, i)
        assert s.is_zero()


def test_conjugate_norm_nonnegative():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.choice([3, 4, 6, 12])
        a = CyclotomicNumber(n, [Fraction(rng.randint(-2, 2)) for _ in range(n)])
        norm = a.conjugate() * a
        z = norm.complex()
        assert abs(z.imag) < 1e-9
        assert z.real >= -1e-9


def test_mixed_conductor_lift():
    assert zeta(6, 2) == zeta(3)
    assert zeta(12, 6) == cyclo(-1)
    assert zeta(12, 4) == zeta(3)


def test_galois_and_demote():
    v = zeta(12, 4)  # = zeta_3
    assert v.demote().n == 3


def test_sqrt3_in_conductor_12():
    s3 = zeta(12) + zeta(12, 11)
    assert s3 * s3 == 3


# -- solve_linear ------------------------------------------------------


def test_solve_identity():
    m = ExactMatrix.identity(3)
    sol = solve_linear(m, [cyclo(1), cyclo(0), cyclo(0)])
    assert sol.consistent
    assert sol.particular == [cyclo(1), cyclo(0), cyclo(0)]
    assert sol.kernel == []


def test_solve_kernel_line():
    m = ExactMatrix.from_rows([[cyclo(1), cyclo(-1)]])
    sol = solve_linear(m, [cyclo(0)])
    assert sol.consistent
    assert len(sol.kernel) == 1
    assert sol.kernel[0] == [cyclo(1), cyclo(1)]


def test_solve_inconsistent():
    m = ExactMatrix.from_rows([[cyclo(1)], [cyclo(1)]])
    sol = solve_linear(m, [cyclo(0), cyclo(1)])
    assert not sol.consistent


def test_z3_regular_rep_eigenvectors():
    # The regular representation of Z3 acts on C[Z3] by cyclic shift.  Its
    # eigenvectors are (1, w^a, w^{2a}); verify by brute-force solve of the
    # eigenvector equations for each eigenvalue w^{-a}.
    w = zeta(3)
    shift = ExactMatrix.from_rows([
        [cyclo(0), cyclo(0), cyclo(1)],
        [cyclo(1), cyclo(0), cyclo(0)],
        [cyclo(0), cyclo(1), cyclo(0)],
    ])
    for a in range(3):
        lam = w ** (2 * a)
        m = shift - ExactMatrix.identity(3) * lam
        sol = solve_linear(m, [cyclo(0)] * 3)
        assert len(sol.kernel) == 1
        v = sol.kernel[0]
        scale = v[0].inverse()
        v = [x * scale for x in v]
        assert v == [cyclo(1), w ** a, w ** (2 * a)]


def test_matrix_substitution_exact():
    rng = random.Random(3)
    m = ExactMatrix.from_rows([
        [CyclotomicNumber(6, [Fraction(rng.randint(-2, 2)) for _ in range(6)])
         for _ in range(4)] for _ in range(3)])
    rhs = [m[i, 0] + m[i, 2] for i in range(3)]
    sol = solve_linear(m, rhs)
    assert sol.consistent
    check = [cyclo(0)] * 3
    for i in range(3):
        for j in range(4):
            check[i] = check[i] + m[i, j] * sol.particular[j]
    assert check == rhs
    for v in sol.kernel:
        for i in range(3):
            acc = cyclo(0)
            for j in range(4):
                acc = acc + m[i, j] * v[j]
            assert acc.is_zero()


# -- exactify ----------------------------------------------------------


def test_exactify_third():
    v = exactify(0.3333333, 0.0, 3, 6)
    assert v == Fraction(1, 3)


def test_exactify_zeta3():
    v = exactify(-0.5, 0.8660254, 3, 6)
    assert v == zeta(3)


def test_exactify_sixth_with_omega():
    # (1/6)(1 + 2 zeta_3) has embedding 1/6 + 2/6*(-1/2 + i sqrt3/2)
    target = (cyclo(1) + zeta(3) * 2) * Fraction(1, 6)
    z = target.complex()
    v = exactify(z.real, z.imag, 3, 12)
    assert v == target


def test_exactify_roundtrip_random():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.choice([3, 4, 6, 12])
        d = rng.randint(1, 6)
        val = CyclotomicNumber(
            n, [Fraction(rng.randint(-2, 2), d) for _ in range(n)])
        z = val.complex()
        got = exactify(z.real, z.imag, n, 12)
        assert got == val


def test_exactify_no_match():
    with pytest.raises(NoExactMatch):
        exactify(0.123456789, 0.987654321, 2, 3)
