from fractions import Fraction

from tubecat.algebra import (
    PresentedCategory,
    StructuredAlgebra,
    artin_wedderburn,
    hom_between,
    karoubi_simples,
)
from tubecat.cyclo import cyclo, zeta
from tubecat.groups import build_group, s3


def group_algebra(G):
    def mult(i, j):
        return {G.mul(i, j): cyclo(1)}
    return StructuredAlgebra(list(range(G.order)), mult, {0: cyclo(1)},
                             name=f"C[{G.name}]")


def test_aw_group_algebra_z3():
    A = group_algebra(build_group("Z3"))
    blocks = artin_wedderburn(A)
    assert sorted(b.size for b in blocks) == [1, 1, 1]
    # idempotents are (1/3) sum_y w^{a y} y for a = 0, 1, 2
    w = zeta(3)
    expected = []
    for a in range(3):
        expected.append({y: w ** ((a * y) % 3) * Fraction(1, 3)
                         for y in range(3)})
    for e in expected:
        assert any(
            all((blk.e11.get(k, cyclo(0)) - v).is_zero() for k, v in e.items())
            and len(blk.e11) == len(e)
            for blk in blocks)


def test_aw_matrix_algebra_2x2():
    # full 2x2 matrix units as an abstract algebra: basis e00,e01,e10,e11
    labels = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {l: i for i, l in enumerate(labels)}

    def mult(i, j):
        (a, b), (c, d) = labels[i], labels[j]
        if b != c:
            return {}
        return {idx[(a, d)]: cyclo(1)}

    A = StructuredAlgebra(labels, mult,
                          {idx[(0, 0)]: cyclo(1), idx[(1, 1)]: cyclo(1)})
    blocks = artin_wedderburn(A)
    assert len(blocks) == 1 and blocks[0].size == 2
    # e11 (in our indexing the (0,0) unit) is primitive
    e = blocks[0].e11
    assert not A.mul(e, e) != e


def test_aw_group_algebra_s3():
    A = group_algebra(s3())
    blocks = artin_wedderburn(A)
    # character-theory oracle: squares of irrep dims sum to 6 -> dims 1,1,2
    assert sorted(b.size for b in blocks) == [1, 1, 2]
    # completeness
    assert sum(b.size ** 2 for b in blocks) == A.dim


def test_aw_twisted_z2_algebra():
    # C_k[Z2] with k(1,1) = -1: x^2 = -1, splits over Q(i)
    def mult(i, j):
        if i == 1 and j == 1:
            return {0: cyclo(-1)}
        return {(i + j) % 2: cyclo(1)}
    A = StructuredAlgebra([0, 1], mult, {0: cyclo(1)})
    blocks = artin_wedderburn(A)
    assert sorted(b.size for b in blocks) == [1, 1]
    for blk in blocks:
        e = blk.e11
        assert _eq(A.mul(e, e), e)


def _eq(u, v):
    keys = set(u) | set(v)
    return all((u.get(k, cyclo(0)) - v.get(k, cyclo(0))).is_zero()
               for k in keys)


def one_object_category(A: StructuredAlgebra):
    return PresentedCategory(
        ["*"],
        lambda x, y: list(range(A.dim)),
        lambda g, f: A.mult_basis(g, f),
        lambda x: dict(A.unit))


def test_karoubi_one_object_scalars():
    A = StructuredAlgebra([0], lambda i, j: {0: cyclo(1)}, {0: cyclo(1)})
    C = one_object_category(A)
    simples = karoubi_simples(C)
    assert len(simples) == 1
    assert simples[0].block_dim == 1


def test_karoubi_group_algebra_s3_category():
    C = one_object_category(group_algebra(s3()))
    simples = karoubi_simples(C)
    assert len(simples) == 3
    assert sorted(s.block_dim for s in simples) == [1, 1, 2]


def test_hom_between_schur():
    C = one_object_category(group_algebra(s3()))
    simples = karoubi_simples(C)
    for i, si in enumerate(simples):
        for j, sj in enumerate(simples):
            dim = len(hom_between(C, si, sj))
            assert dim == (1 if i == j else 0)
