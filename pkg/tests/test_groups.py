from fractions import Fraction

import pytest

from tubecat.groups import (
    GroupMismatch,
    InvalidCocycle,
    TwoCocycle,
    build_group,
    cocycle_from_function,
    cosets,
    cyclic,
    direct_product,
    opposite,
    s3,
    subgroup_closure,
)


def test_s3_semidirect_product_formula():
    g = s3()
    assert g.multiply((1, 0), (0, 1)) == (1, 1)
    # second entry (1+1)*1 + 0 = 2 mod 3
    assert g.multiply((0, 1), (1, 0)) == (1, 2)


def test_identity_element():
    for G in (cyclic(4), s3()):
        for e in G.elements:
            assert G.multiply(e, G.elements[0]) == e


def test_build_group_descriptors():
    assert build_group("Z2").order == 2
    assert build_group(("product", "S3", ("opposite", "S3"))).order == 36
    assert build_group("S3xS3op").order == 36


def test_opposite_s3_products():
    # brute-force: opposite table is the transpose of the S3 table
    g = s3()
    op = opposite(g)
    for a in g.elements:
        for b in g.elements:
            assert op.multiply(a, b) == g.multiply(b, a)
    assert op.multiply((1, 0), (0, 1)) == g.multiply((0, 1), (1, 0))


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        s3().multiply((1, 0), (7, 7))


def test_subgroup_closure_z3_in_s3():
    g = s3()
    sub = subgroup_closure(g, [(0, 1)])
    assert [g.elements[i] for i in sub] == [(0, 0), (0, 1), (0, 2)]


def test_subgroup_closure_diagonal_s3xs3op():
    gg = build_group("S3xS3op")
    sub = subgroup_closure(gg, [(1, 0, 1, 0), (0, 1, 0, 1)])
    assert len(sub) == 6


def test_subgroup_closure_empty():
    assert subgroup_closure(s3(), []) == [0]


def test_cosets_trivial_subgroup():
    g = s3()
    assert len(cosets(g, [0])) == 6


def test_cosets_full_group():
    g = s3()
    assert len(cosets(g, list(range(6)))) == 1


def test_cosets_lagrange():
    gg = build_group("S3xS3op")
    for gens in ([(1, 0, 1, 0), (0, 1, 0, 1)],
                 [(1, 0, 0, 0)],
                 [(0, 1, 0, 0), (0, 0, 0, 1)]):
        sub = subgroup_closure(gg, gens)
        cs = cosets(gg, sub)
        assert len(cs) * len(sub) == gg.order
        for c in cs:
            assert len(c) == len(sub)


def test_g1_subgroup_order_18():
    gg = build_group("S3xS3op")
    sub = subgroup_closure(gg, [(1, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1)])
    assert len(sub) == 18
    assert len(cosets(gg, sub)) == 2


def test_associativity_validated():
    for G in (cyclic(6), s3(), direct_product(cyclic(2), s3())):
        G._check_associative()


def test_cocycle_validation_accepts_bicharacter():
    gg = direct_product(cyclic(2), cyclic(2))
    sub = list(range(4))
    # omega(g, h) = (-1)^{g1 h2}
    c = cocycle_from_function(
        gg, sub, lambda g, h: Fraction(g[0] * h[1], 2))
    assert not c.is_trivial()


def test_cocycle_validation_rejects_garbage():
    g = cyclic(2)
    with pytest.raises(InvalidCocycle):
        TwoCocycle(g, [0, 1], {(1, 1): Fraction(1, 3), (0, 1): Fraction(1, 2)})


def test_conjugacy_classes_s3():
    g = s3()
    classes = g.conjugacy_classes()
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 2, 3]
