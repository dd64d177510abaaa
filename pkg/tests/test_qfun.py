from superq.qfun import (
    QPolynomial, binomial_collapse_check, gauss_binomial, little_jacobi,
    pascal_rule_check, pochhammer, pochhammer_poly, qbinomial_theorem_check,
)
from superq.scalars import ONE, Scalar, T, T_INV


def v():
    return T_INV * T_INV


def test_pochhammer_empty_product():
    assert pochhammer(T, v(), 0) == ONE


def test_pochhammer_expansion():
    # (t^-2; t^-2)_2 = (1 - t^-2)(1 - t^-4)
    got = pochhammer(v(), v(), 2)
    expected = (ONE - T_INV ** 2) * (ONE - T_INV ** 4)
    assert got == expected


def test_pochhammer_poly_single_factor():
    p = pochhammer_poly(T * T, 1)
    assert p == QPolynomial({0: ONE, 1: -ONE})


def test_pochhammer_poly_scaled():
    # (t^-2 z; t^-2)_2 = (1 - t^-2 z)(1 - t^-4 z)
    p = pochhammer_poly(v(), 2, scale=v())
    q = QPolynomial({0: ONE, 1: -v()}) * QPolynomial({0: ONE, 1: -(v() * v())})
    assert p == q


def test_gauss_binomial_values():
    for m in range(6):
        assert gauss_binomial(m, 0, v()) == ONE
    assert gauss_binomial(2, 1, v()) == ONE + v()
    assert gauss_binomial(3, 2, v()) == ONE + v() + v() * v()


def test_gauss_binomial_out_of_range_is_zero():
    assert gauss_binomial(3, -1, v()).is_zero()
    assert gauss_binomial(3, 4, v()).is_zero()


def test_gauss_binomial_symmetry():
    for m in range(8):
        for n in range(m + 1):
            assert gauss_binomial(m, n, v()) == gauss_binomial(m, m - n, v())


def test_pascal_rule():
    rep = pascal_rule_check(10)
    assert rep.ok, str(rep)


def test_little_jacobi_degree_zero():
    assert little_jacobi(0, 0, 0, v()) == QPolynomial({0: ONE})


def test_little_jacobi_degree_one():
    # P_1^(0,0)(z; v) = 1 - (1+v) z
    base = Scalar.t_power(-2) * ONE  # formal v as a scalar
    p = little_jacobi(1, 0, 0, v())
    assert p == QPolynomial({0: ONE, 1: -(ONE + v())})
    # P_1^(1,0)(z; v) = 1 - ((1-v^3)/(1-v^2)) z
    p10 = little_jacobi(1, 1, 0, v())
    coeff = (ONE - v() ** 3) / (ONE - v() ** 2)
    assert p10 == QPolynomial({0: ONE, 1: -coeff})


def test_little_jacobi_truncates():
    p = little_jacobi(3, 0, 0, v())
    assert p.degree() == 3


def test_qbinomial_theorem():
    rep = qbinomial_theorem_check(4)
    assert rep.ok, str(rep)


def test_qbinomial_theorem_matches_coproduct_power():
    # two-path: Delta(a^4) by repeated multiplication vs the binomial sum
    from superq.algebra import Element
    from superq.hopf import coproduct
    from superq.tensor import Tensor
    a = Element.generator("a")
    b = Element.generator("b")
    c = Element.generator("c")
    lhs = coproduct(a ** 4)
    x = Tensor.from_elements([a, a])
    y = Tensor.from_elements([b, c])
    rhs = None
    vinv = v()
    for k in range(5):
        term = (x ** k * y ** (4 - k)).scale(gauss_binomial(4, k, vinv))
        rhs = term if rhs is None else rhs + term
    assert lhs == rhs


def test_binomial_collapse_identity():
    rep = binomial_collapse_check(6)
    assert rep.ok, str(rep)


def test_qpolynomial_arithmetic():
    p = QPolynomial({0: ONE, 1: T})
    q = QPolynomial({1: T_INV})
    assert (p * q) == QPolynomial({1: T_INV, 2: ONE})
    assert (p + (-p)) == QPolynomial()
    assert p.eval_scalar(ONE) == ONE + T
