from fractions import Fraction

import pytest
from sympy import QQ, Poly, Symbol

from symplectic_rigidity.errors import DimensionMismatch, DomainError
from symplectic_rigidity.exact_linalg import identity
from symplectic_rigidity.generators import standard_blocks, twist_matrix
from symplectic_rigidity.lemma_solvers import (
    block_constraint_certificate,
    check_block_solution,
    linear_stage_dimension,
    solve_2x2_braid_centralizer,
    solve_block_constraint,
    zero_space_checks,
)


a = Symbol("a")


def poly_in_a(expr) -> Poly:
    return Poly(expr, a, domain=QQ)


class TestTwoByTwo:
    def test_solution_is_u(self):
        solution, certificate = solve_2x2_braid_centralizer()
        u, _ = standard_blocks()
        assert solution == u
        assert certificate.unique

    def test_certificate_contents(self):
        _, certificate = solve_2x2_braid_centralizer()
        # X = a·I + b·E12 and b = 2a - a^2
        assert certificate.linear_basis[0] == identity(2)
        assert certificate.substitution == poly_in_a(2 * a - a**2)
        assert certificate.common_factor == poly_in_a(a**2 - a)
        assert [r for r, _ in certificate.roots] == [Fraction(0), Fraction(1)]
        assert certificate.residual.degree() == 0
        assert [r for r, _ in certificate.rejected] == [Fraction(0)]

    def test_elimination_matches_common_factor(self):
        _, certificate = solve_2x2_braid_centralizer()
        assert certificate.elimination == certificate.common_factor
        assert certificate.substitution_entry == (1, 0)

    def test_equations_after_substitution(self):
        _, certificate = solve_2x2_braid_centralizer()
        a_times_a_minus_1_squared = poly_in_a(a * (a - 1) ** 2)
        assert a_times_a_minus_1_squared in certificate.equations
        assert all(eq.eval(1) == 0 for eq in certificate.equations)


@pytest.mark.parametrize("g", range(1, 5))
def test_block_solutions(g):
    for k in range(1, g + 1):
        assert solve_block_constraint(g, k, "a") == twist_matrix(g, k, "a")
        assert solve_block_constraint(g, k, "b") == twist_matrix(g, k, "b")


@pytest.mark.parametrize("g", range(1, 5))
def test_linear_stage_dimension(g):
    for k in range(1, g + 1):
        assert linear_stage_dimension(g, k) == 4 + (g - 1)


def test_block_certificate_facts():
    cert = block_constraint_certificate(3, 2, "b")
    assert cert.linear_dimension == 6
    assert cert.off_diagonal_zero
    assert cert.complement_scalar_blocks
    assert cert.block_free
    _, u_hat = standard_blocks()
    assert cert.block.solution == u_hat


class TestCheckBlockSolution:
    def test_accepts_twists(self):
        assert check_block_solution(twist_matrix(3, 2, "a"), 3, 2, "a")
        assert check_block_solution(twist_matrix(3, 2, "b"), 3, 2, "b")

    def test_rejects_wrong_role_or_index(self):
        assert not check_block_solution(twist_matrix(3, 2, "a"), 3, 2, "b")
        assert not check_block_solution(twist_matrix(3, 1, "a"), 3, 2, "a")
        assert not check_block_solution(identity(6), 3, 2, "a")

    def test_shape(self):
        with pytest.raises(DimensionMismatch):
            check_block_solution(identity(4), 3, 1, "a")


@pytest.mark.parametrize("g", range(1, 6))
def test_zero_spaces(g):
    report = zero_space_checks(g, (2 * g, 2))
    assert (report.right_fixed, report.left_fixed, report.commutant) == (0, 0, g)
    assert report.holds


def test_zero_spaces_examples():
    assert zero_space_checks(1, (2, 3)).holds
    assert zero_space_checks(3, (6, 4)).holds


def test_zero_spaces_with_a_only():
    report = zero_space_checks(2, (4, 1), generators="a_only")
    assert report.right_fixed == 2
    assert not report.holds


def test_zero_space_shape_must_match_genus():
    with pytest.raises(DimensionMismatch):
        zero_space_checks(2, (3, 2))


@pytest.mark.parametrize("args", [(0, 1, "a"), (2, 3, "a"), (2, 1, "c")])
def test_block_arguments(args):
    with pytest.raises(DomainError):
        solve_block_constraint(*args)
