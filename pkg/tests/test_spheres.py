import pytest

from superq.algebra import Element
from superq.hopf import counit
from superq.scalars import (
    I_UNIT, KAPPA, MINUS_ONE, ONE, SQRT_1_PLUS_TM2, Scalar, T, T_INV, ZERO,
)
from superq.spheres import (
    INFINITY, RELATION_KINDS, build_M, canonicalize_alpha, character_analysis,
    characters_of_S_infinity, find_relations, relation_residual,
    sphere_basis_check, unitarity_defect, verify_M, verify_coideal,
    verify_infinity_relations, x_vector,
)


def gen(name):
    return Element.generator(name)


def test_M_entries():
    M = build_M()
    assert M[0][0] == gen("a") * gen("a")
    assert M[0][1] == (gen("a") * gen("b")).scale(SQRT_1_PLUS_TM2)
    assert M[0][2] == (gen("b") * gen("b")).scale(I_UNIT)
    # center entry: ad + t^-1 cb = sigma - (t + t^-1) bc
    center = M[1][1]
    expected = gen("sigma") - (gen("b") * gen("c")).scale(T + T_INV)
    assert center == expected


def test_M_counit_is_identity():
    M = build_M()
    for i in range(3):
        for j in range(3):
            assert counit(M[i][j]) == (ONE if i == j else ZERO)


def test_verify_M_symbolic_and_numeric():
    rep = verify_M(q_samples=(-0.5, -2.0))
    assert rep.ok, str(rep)


def test_unitarity_is_exact_here():
    # with the fixed radical normalization the defect vanishes symbolically
    assert all(e.is_zero() for e in unitarity_defect())


def test_center_coproduct_row_column_form():
    # Delta(center) = (1-q^-1) ac (x) ab + center (x) center + (1-q) db (x) dc
    from superq.hopf import coproduct
    from superq.tensor import Tensor
    M = build_M()
    lhs = coproduct(M[1][1])
    u2 = ONE + T_INV * T_INV      # 1 - q^-1
    u1 = ONE + T * T              # 1 - q
    rhs = Tensor.from_elements([gen("a") * gen("c"), gen("a") * gen("b")]).scale(u2) \
        + Tensor.from_elements([M[1][1], M[1][1]]) \
        + Tensor.from_elements([gen("d") * gen("b"), gen("d") * gen("c")]).scale(u1)
    assert lhs == rhs


def test_x_vector_unit_rows():
    xs = x_vector((ONE, ZERO, ZERO))
    M = build_M()
    assert xs == (M[0][0], M[0][1], M[0][2])
    xs_mid = x_vector((ZERO, ONE, ZERO))
    assert xs_mid == (M[1][0], M[1][1], M[1][2])


def test_x_vector_infinity():
    xm, x0, xp = x_vector(INFINITY)
    assert x0 == gen("sigma") - (gen("b") * gen("c")).scale(T + T_INV)
    assert xm == (gen("a") * gen("c")).scale(KAPPA)


def test_alpha_validation():
    with pytest.raises(ValueError):
        x_vector((ZERO, ZERO, ZERO))
    with pytest.raises(ValueError):
        canonicalize_alpha((ONE, ZERO))
    assert canonicalize_alpha((T, T, ZERO))[0] == ONE


def test_coideal_property():
    assert verify_coideal(INFINITY).ok
    assert verify_coideal((ONE, ZERO, ONE)).ok
    assert verify_coideal((ONE, T, MINUS_ONE)).ok


def test_infinity_relations():
    rep = verify_infinity_relations()
    assert rep.ok, str(rep)


def test_infinity_relation_witnesses():
    for kind in RELATION_KINDS:
        w = find_relations(INFINITY, kind)
        assert w.exists, kind
        full = w.full_witness()
        assert full is not None
        assert relation_residual(INFINITY, kind, full).is_zero()
        for v in w.witnesses:
            assert relation_residual(INFINITY, kind, v).is_zero()


def test_infinity_unit_relation_coefficients():
    # the engine-derived unit relation: x0^2 + (1+q^-1) xm xp - (1+q) xp xm = 1
    w = find_relations(INFINITY, "mixed")
    qinv = Scalar.q_power(-1)
    q = Scalar.q_power(1)
    target = {"c4": ONE + qinv, "c5": -(ONE + q), "c6": ONE,
              "b2": ZERO, "b3": ONE}
    assert relation_residual(INFINITY, "mixed", target).is_zero()
    # and the sigma relation: x0^2 + xm xp - xp xm = sigma x0
    target2 = {"c4": ONE, "c5": MINUS_ONE, "c6": ONE, "b2": ONE, "b3": ZERO}
    assert relation_residual(INFINITY, "mixed", target2).is_zero()


def test_alpha0_zero_has_no_full_mixing_relation():
    alpha = (ONE, ZERO, ONE)
    w = find_relations(alpha, "lower")
    assert not w.exists          # "none exists" in the all-nonzero sense
    assert w.full_witness() is None
    w7 = find_relations(alpha, "upper")
    assert not w7.exists


def test_finite_alpha_with_nonzero_center_has_relations():
    alpha = (ZERO, ONE, ZERO)
    for kind in RELATION_KINDS:
        w = find_relations(alpha, kind)
        assert w.exists, kind
        full = w.full_witness()
        assert relation_residual(alpha, kind, full).is_zero()


def test_sphere_basis_independence():
    assert sphere_basis_check(INFINITY, 2).ok
    rep = sphere_basis_check(INFINITY, 3)
    assert rep.ok, str(rep)


def test_degree_zero_basis():
    # only 1 and sigma at degree zero: independent
    rep = sphere_basis_check(INFINITY, 0)
    assert rep.ok


def test_characters():
    chars = characters_of_S_infinity()
    assert len(chars) == 2
    assert (ZERO, ONE, ZERO) in chars
    assert (ZERO, MINUS_ONE, ZERO) in chars


def test_character_obstruction():
    analysis = character_analysis()
    # y_1 != 0 would force y_0 = +-(1+q)/(1-q); both branch residuals
    # must be nonzero in the field
    for r in analysis.obstruction_residuals:
        assert not r.is_zero()
    q = Scalar.q_power(1)
    assert analysis.obstruction_residuals[0] == (ONE + q) / (ONE - q)
