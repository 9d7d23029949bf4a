import pytest

from dualgroth.polyring import Poly
from dualgroth.shapes import parse_shape
from dualgroth.symfn import complete_sym, elem_sym, gen_binomial, phi_power_h, schur_jt


def x(i):
    return Poly.x(i)


def t(j):
    return Poly.t(j)


def test_gen_binomial():
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(7, 0) == 1
    assert gen_binomial(-3, 0) == 1
    assert gen_binomial(-1, 1) == -1
    assert gen_binomial(-1, 2) == 1
    assert gen_binomial(3, 5) == 0


def test_elem_sym_examples():
    assert elem_sym(2, 2, ones=1) == x(1) * x(2) + x(1) + x(2)
    assert elem_sym(2, 2, t_range=(1, 1)) == t(1) * x(1) + t(1) * x(2) + x(1) * x(2)
    assert elem_sym(-1, 3, ones=2) == Poly.zero()
    assert elem_sym(0, 3, ones=2) == Poly.one()
    # more arguments than degree allows
    assert elem_sym(4, 2, ones=1) == Poly.zero()
    # negative ones-count clamps to zero
    assert elem_sym(1, 2, ones=-3) == x(1) + x(2)


def test_complete_sym_examples():
    assert complete_sym(2, 1, ones=1) == Poly.one() + x(1) + x(1) ** 2
    assert complete_sym(0, 2) == Poly.one()
    assert complete_sym(-3, 2) == Poly.zero()
    assert complete_sym(2, 2) == x(1) ** 2 + x(1) * x(2) + x(2) ** 2


def test_phi_power_examples():
    assert phi_power_h(1, 2, 1) == Poly.one() + x(1) + x(1) ** 2
    for n in range(5):
        assert phi_power_h(0, n, 2) == complete_sym(n, 2)
    h3 = complete_sym(3, 2)
    h2 = complete_sym(2, 2)
    assert phi_power_h(-1, 3, 2) == h3 - h2


def test_phi_power_matches_ones_prefix():
    for level in range(5):
        for n in range(7):
            for m in range(1, 4):
                assert phi_power_h(level, n, m) == complete_sym(n, m, ones=level)


def test_binomial_convolution_identity():
    # coefficient identity behind the h-matrix proof, checked as integers;
    # a negative lower index counts as zero
    def binom(x, k):
        return gen_binomial(x, k) if k >= 0 else 0

    for a in range(9):
        for b in range(9):
            for level in range(9):
                lhs = sum(
                    binom(a - k - 1, b - k) * binom(k - 1, k - level)
                    for k in range(level, b + 1)
                )
                assert lhs == binom(a - 1, b - level), (a, b, level)


def test_ones_prefix_binomial_expansion():
    for n in range(5):
        for ones in range(4):
            for m in range(1, 3):
                expanded = Poly.zero()
                for ell in range(n + 1):
                    c = gen_binomial(ones, n - ell)
                    if c:
                        expanded = expanded + c * elem_sym(ell, m)
                assert elem_sym(n, m, ones=ones) == expanded


def test_e_h_alternating_sum_vanishes():
    for n in range(1, 6):
        for m in range(1, 4):
            total = Poly.zero()
            for r in range(n + 1):
                term = elem_sym(r, m) * complete_sym(n - r, m)
                total = total + (term if r % 2 == 0 else -term)
            assert total == Poly.zero()


def test_schur_jt():
    assert schur_jt(parse_shape("2,1"), 2) == x(1) ** 2 * x(2) + x(1) * x(2) ** 2
    assert schur_jt(parse_shape("1"), 3) == x(1) + x(2) + x(3)
    assert schur_jt(parse_shape("2,1/2,1"), 2) == Poly.one()
