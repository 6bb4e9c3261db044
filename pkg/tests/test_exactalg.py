from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subdepth.exactalg import (Cyc, ExactMatrix, ExactPolynomial,
                               MalformedSequenceError, cyclotomic_polynomial,
                               euler_phi, factor_rational_roots,
                               is_indecomposable, minimal_polynomial,
                               pattern_stabilization_index, scalar_from_string,
                               scalar_to_string, solve_kernel)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7)
small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def matpow(A, n):
    out = A
    for _ in range(n - 1):
        out = out @ A
    return out


# -- cyclotomic scalars -------------------------------------------------------

def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(60) == 16


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12])
def test_root_of_unity_has_order_n(n):
    z = Cyc.root_of_unity(n)
    assert z ** n == 1
    for k in range(1, n):
        assert not (z ** k == 1)


def test_sum_of_all_nth_roots_vanishes():
    for n in [3, 4, 5, 12]:
        s = Cyc.zero()
        for k in range(n):
            s = s + Cyc.root_of_unity(n, k)
        assert s.is_zero()


def test_conjugation_is_involution():
    z = Cyc.root_of_unity(12, 5) + Cyc.rational(Fraction(2, 3))
    assert z.conjugate().conjugate() == z
    assert Cyc.root_of_unity(5).conjugate() == Cyc.root_of_unity(5, 4)


def test_norm_in_gaussian_field_is_positive_rational():
    # z in Q(zeta_4) with rational coefficients: z zbar is a positive rational
    i = Cyc.root_of_unity(4)
    z = Cyc.rational(Fraction(3, 2)) + i * Fraction(-5, 7)
    norm = z * z.conjugate()
    assert norm.is_rational()
    assert norm.as_fraction() > 0
    assert norm.as_fraction() == Fraction(3, 2) ** 2 + Fraction(5, 7) ** 2


def test_inverse_and_division():
    z = Cyc.root_of_unity(7) + 2
    assert z * z.inverse() == 1
    assert (z / z) == 1
    with pytest.raises(ZeroDivisionError):
        Cyc.zero().inverse()


def test_mixed_order_arithmetic_lifts_to_lcm():
    a = Cyc.root_of_unity(4)
    b = Cyc.root_of_unity(6)
    c = a * b
    assert c.order == 12
    assert c == Cyc.root_of_unity(12, 3 + 2)


def test_canonical_conductor():
    # zeta_6^2 is a primitive cube root, conductor 3
    z = Cyc.root_of_unity(6, 2)
    assert z.canonical().order == 3
    assert z == Cyc.root_of_unity(3)
    assert hash(z) == hash(Cyc.root_of_unity(3))
    assert Cyc.root_of_unity(4, 2) == -1


def test_scalar_serialization_round_trip():
    vals = [Cyc.rational(Fraction(-7, 3)), Cyc.zero(), Cyc.root_of_unity(8, 3),
            Cyc.root_of_unity(5) + Cyc.rational(Fraction(1, 2))]
    for v in vals:
        s = scalar_to_string(v)
        assert scalar_from_string(s) == v
    assert scalar_to_string(Cyc.rational(Fraction(3, 4))) == "3/4"
    assert scalar_from_string("5:[0,1,0,0]") == Cyc.root_of_unity(5)


@given(st.integers(0, 11), st.integers(0, 11), rationals, rationals)
@settings(max_examples=60, deadline=None)
def test_field_axioms_sampled(e1, e2, c1, c2):
    a = Cyc.root_of_unity(12, e1) * c1
    b = Cyc.root_of_unity(12, e2) * c2
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b
    if not b.is_zero():
        assert (a / b) * b == a


# -- kernels ------------------------------------------------------------------

def test_kernel_of_identity_is_empty():
    assert solve_kernel(ExactMatrix.identity(3)) == []


def test_kernel_of_zero_matrix_is_standard_basis():
    basis = solve_kernel(ExactMatrix.zeros(2, 2))
    assert len(basis) == 2
    assert basis[0][0] == 1 and basis[0][1] == 0
    assert basis[1][0] == 0 and basis[1][1] == 1


def test_kernel_hand_example():
    A = ExactMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    basis = solve_kernel(A)
    assert len(basis) == 1
    v = basis[0]
    assert [x.as_fraction() for x in v] == [1, -1, 1]


@given(st.lists(st.lists(small_rationals, min_size=3, max_size=3),
                min_size=2, max_size=4))
@settings(max_examples=40, deadline=None)
def test_kernel_vectors_annihilate_and_rank_nullity(rows):
    A = ExactMatrix.from_rows(rows)
    basis = solve_kernel(A)
    for v in basis:
        img = [sum((A.at(i, j) * v[j]).as_fraction() for j in range(A.cols))
               for i in range(A.rows)]
        assert all(x == 0 for x in img)
    rank = A.cols - len(basis)
    # rank equals the row rank computed from the transpose kernel
    rank_t = A.rows - len(solve_kernel(A.transpose()))
    assert rank == rank_t


@given(st.lists(st.lists(small_rationals, min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(st.fractions(min_value=Fraction(1, 3), max_value=5,
                             max_denominator=3),
                min_size=3, max_size=3))
@settings(max_examples=25, deadline=None)
def test_kernel_invariant_under_row_scaling(rows, scales):
    A = ExactMatrix.from_rows(rows)
    B = ExactMatrix.from_rows([[Fraction(s) * x for x in row]
                               for s, row in zip(scales, rows)])
    assert solve_kernel(A) == solve_kernel(B)


# -- minimal polynomials ------------------------------------------------------

def test_minpoly_of_worked_example_matrices():
    M = ExactMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    B = M @ M.transpose()
    C = M.transpose() @ M
    assert minimal_polynomial(B) == ExactPolynomial.from_roots([1, 3])
    assert minimal_polynomial(C) == ExactPolynomial.from_roots([0, 1, 3])


def test_minpoly_of_identity():
    assert minimal_polynomial(ExactMatrix.identity(5)) == ExactPolynomial((-1, 1))


def test_minpoly_nilpotent():
    N = ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert minimal_polynomial(N) == ExactPolynomial((0, 0, 1))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_minpoly_annihilates(rows):
    A = ExactMatrix.from_rows(rows)
    m = minimal_polynomial(A)
    assert m.evaluate_matrix(A).is_zero()
    assert m.coeffs[-1] == 1


@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
@settings(max_examples=40, deadline=None)
def test_minpoly_squarefree_for_symmetric_integer(vals):
    A = ExactMatrix.from_rows([[vals[0], vals[1], vals[2]],
                               [vals[1], vals[3], vals[4]],
                               [vals[2], vals[4], vals[5]]])
    m = minimal_polynomial(A)
    assert m.gcd(m.derivative()).degree == 0


# -- rational roots -----------------------------------------------------------

def test_factor_rational_roots_examples():
    p = ExactPolynomial.from_roots([0, 1, 3])
    roots, resid = factor_rational_roots(p)
    assert roots == {Fraction(0): 1, Fraction(1): 1, Fraction(3): 1}
    assert resid == ExactPolynomial.one()
    q = ExactPolynomial((-2, 0, 1))  # X^2 - 2
    roots, resid = factor_rational_roots(q)
    assert roots == {}
    assert resid == q


def test_factor_rational_roots_multiplicity_and_fractional():
    p = (ExactPolynomial.from_roots([Fraction(1, 2)]) *
         ExactPolynomial.from_roots([Fraction(1, 2)]) *
         ExactPolynomial((-2, 0, 1)))
    roots, resid = factor_rational_roots(p)
    assert roots == {Fraction(1, 2): 2}
    assert resid == ExactPolynomial((-2, 0, 1))


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=2),
                min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_factor_reconstructs_product(root_list):
    p = ExactPolynomial.from_roots(root_list)
    roots, resid = factor_rational_roots(p)
    assert resid == ExactPolynomial.one()
    rebuilt = ExactPolynomial.one()
    for r, m in roots.items():
        for _ in range(m):
            rebuilt = rebuilt * ExactPolynomial((-r, 1))
    assert rebuilt == p
    assert sum(roots.values()) == len(root_list)


# -- pattern scans ------------------------------------------------------------

def test_pattern_stabilization_positive_matrix():
    B = ExactMatrix.from_rows([[2, 1], [1, 2]])
    assert pattern_stabilization_index(lambda k: matpow(B, k), 10) == 1


def test_pattern_stabilization_s2_s3_c_matrix():
    C = ExactMatrix.from_rows([[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert pattern_stabilization_index(lambda k: matpow(C, k), 10) == 2


def test_pattern_stabilization_block_diagonal():
    M = ExactMatrix.from_rows([[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 0],
                               [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]])
    B = M @ M.transpose()
    assert pattern_stabilization_index(lambda k: matpow(B, k), 10) == 2


def test_pattern_budget_exhaustion_returns_none():
    C = ExactMatrix.from_rows([[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert pattern_stabilization_index(lambda k: matpow(C, k), 1) is None


def test_pattern_monotonicity_violation_raises():
    seq = {1: ExactMatrix.from_rows([[1, 0], [0, 1]]),
           2: ExactMatrix.from_rows([[0, 1], [1, 0]])}
    with pytest.raises(MalformedSequenceError):
        pattern_stabilization_index(lambda k: seq.get(k, seq[2]), 5)
    neg = ExactMatrix.from_rows([[-1]])
    with pytest.raises(MalformedSequenceError):
        pattern_stabilization_index(lambda k: neg, 5)


# -- indecomposability --------------------------------------------------------

def test_indecomposable_examples():
    C = ExactMatrix.from_rows([[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert is_indecomposable(C)
    D = ExactMatrix.from_rows([[1, 0], [0, 1]])
    assert not is_indecomposable(D)
    assert is_indecomposable(ExactMatrix.from_rows([[0]]))
