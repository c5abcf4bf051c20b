import pytest

from symplectic_rigidity.classification import (
    VerdictKind,
    check_twist_spectrum,
    classify,
    flag_criterion,
    twist_spectrum_constraints,
)
from symplectic_rigidity.errors import DimensionMismatch, DomainError
from symplectic_rigidity.exact_linalg import Matrix, Subspace, diagonal, identity
from symplectic_rigidity.generators import twist_matrix

K = VerdictKind


def expected_kinds(g, n):
    kinds = []
    if g >= 3 and n <= 2 * g - 1:
        kinds.append(K.TRIVIAL_ONLY)
    if g == 2 and n <= 3:
        kinds.append(K.ABELIAN_IMAGE_Z10)
    if g >= 3 and n == 2 * g:
        kinds.append(K.TRIVIAL_OR_SYMPLECTIC)
    if g >= 3 and n <= 3 * g - 3:
        kinds.append(K.BELOW_FAITHFULNESS)
    if 0 <= n - 2 * g <= g - 3:
        kinds.append(K.TORELLI_DERIVED_KILLED)
    return kinds or [K.NO_STATEMENT]


class TestClassify:
    def test_anchor_trivial_only(self):
        verdict = classify(3, 5)
        assert verdict.kinds == [K.TRIVIAL_ONLY, K.BELOW_FAITHFULNESS]

    def test_anchor_symplectic(self):
        verdict = classify(3, 6)
        assert verdict.kinds == [K.TRIVIAL_OR_SYMPLECTIC, K.BELOW_FAITHFULNESS, K.TORELLI_DERIVED_KILLED]
        assert verdict.torelli_index == 0

    def test_anchor_genus_two(self):
        assert classify(2, 3).kinds == [K.ABELIAN_IMAGE_Z10]

    def test_anchor_below_faithfulness(self):
        verdict = classify(6, 15)
        assert verdict.has(K.BELOW_FAITHFULNESS)
        assert verdict.torelli_index == 3

    def test_no_statement(self):
        assert classify(2, 4).kinds == [K.NO_STATEMENT]
        assert classify(3, 10).kinds == [K.NO_STATEMENT]

    @pytest.mark.parametrize("g", range(2, 9))
    def test_grid(self, g):
        for n in range(1, 3 * g + 1):
            verdict = classify(g, n)
            assert verdict.kinds == expected_kinds(g, n)
            assert all(v.citation for v in verdict.verdicts)

    @pytest.mark.parametrize("g", range(3, 9))
    def test_trivial_only_is_monotone(self, g):
        flags = [classify(g, n).has(K.TRIVIAL_ONLY) for n in range(1, 3 * g + 1)]
        assert flags == sorted(flags, reverse=True)

    @pytest.mark.parametrize("g", range(3, 9))
    def test_exclusive_verdicts(self, g):
        for n in range(1, 3 * g + 1):
            verdict = classify(g, n)
            assert not (verdict.has(K.TRIVIAL_ONLY) and verdict.has(K.TRIVIAL_OR_SYMPLECTIC))
            if verdict.has(K.TORELLI_DERIVED_KILLED):
                assert verdict.has(K.BELOW_FAITHFULNESS)

    @pytest.mark.parametrize("args", [(1, 2), (3, 0)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            classify(*args)


class TestTwistSpectrum:
    def test_constraints_by_range(self):
        assert twist_spectrum_constraints(2, 4) == []
        assert [c.name for c in twist_spectrum_constraints(3, 7)] == ["small-multiplicity", "two-eigenvalues"]
        assert [c.name for c in twist_spectrum_constraints(4, 8)] == [
            "small-multiplicity", "two-eigenvalues", "single-eigenvalue",
        ]
        assert [c.name for c in twist_spectrum_constraints(3, 8)] == ["small-multiplicity"]

    def test_standard_twist_passes(self):
        report = check_twist_spectrum(twist_matrix(4, 1, "a"), 4)
        assert report.ok
        assert not report.undecided

    def test_small_eigenvalue_must_be_one(self):
        report = check_twist_spectrum(diagonal([2] + [1] * 5), 3)
        assert [c.name for c in report.violations] == ["small-multiplicity"]

    def test_small_eigenspace_must_be_full(self):
        # eigenvalue 1 with multiplicity 2 but a single Jordan block
        m = Matrix.of([
            [1, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 5, 0, 0, 0],
            [0, 0, 0, 5, 0, 0],
            [0, 0, 0, 0, 5, 0],
            [0, 0, 0, 0, 0, 5],
        ])
        report = check_twist_spectrum(m, 3)
        assert not report.ok

    def test_three_eigenvalues(self):
        report = check_twist_spectrum(diagonal([1, 2, 2, 2, 3, 3, 3]), 3)
        assert "two-eigenvalues" in [c.name for c in report.violations]

    def test_irrational_eigenvalues(self):
        rotation = Matrix.of([[0, -1], [1, 0]])
        m = Matrix.of([
            [rotation[i, j] if i < 2 and j < 2 else int(i == j) for j in range(6)] for i in range(6)
        ])
        report = check_twist_spectrum(m, 3)
        assert not report.ok

    def test_single_eigenvalue_genus_four(self):
        report = check_twist_spectrum(identity(8).scale(2), 4)
        assert report.ok
        scaled = twist_matrix(4, 1, "a").scale(2)
        report = check_twist_spectrum(scaled, 4)
        assert [c.name for c in report.violations] == ["single-eigenvalue"]

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            check_twist_spectrum(Matrix.of([[1, 2]]), 3)


class TestFlagCriterion:
    def flag(self, m, dims):
        return [Subspace.span([tuple(int(i == j) for i in range(m)) for j in range(d)], m) for d in dims]

    def test_upper_triangular_genus_three(self):
        upper = Matrix.of([[1, 2, 3], [0, 1, 4], [0, 0, 1]])
        verdict = flag_criterion(self.flag(3, [0, 1, 3]), [upper], 3)
        assert verdict.applicable
        assert verdict.conclusion == "image trivial"

    def test_genus_two(self):
        verdict = flag_criterion(self.flag(4, [0, 2, 4]), [identity(4)], 2)
        assert verdict.conclusion == "image a quotient of Z_10"

    def test_quotient_too_large(self):
        verdict = flag_criterion(self.flag(4, [0, 4]), [identity(4)], 2)
        assert not verdict.applicable
        assert "exceeds 3" in verdict.reason

    def test_not_invariant(self):
        swap = Matrix.of([[0, 1], [1, 0]])
        verdict = flag_criterion(self.flag(2, [0, 1, 2]), [swap], 3)
        assert not verdict.applicable
        assert "not invariant" in verdict.reason

    def test_must_start_at_zero(self):
        verdict = flag_criterion(self.flag(2, [1, 2]), [identity(2)], 3)
        assert not verdict.applicable

    def test_genus_domain(self):
        with pytest.raises(DomainError):
            flag_criterion(self.flag(2, [0, 2]), [], 1)
