import pytest

from seifinv import (
    IDENTITY,
    IntMatrix2,
    InvolutionClassLabel,
    conjugate,
    find_conjugator,
    involution_class,
    is_involution,
    mat_det,
    mat_inv,
    mat_mul,
    mat_vec,
)

SWAP = IntMatrix2(0, 1, 1, 0)
MINUS_I = IntMatrix2(-1, 0, 0, -1)


def window_matrices(bound):
    rng = range(-bound, bound + 1)
    return [
        IntMatrix2(a, b, c, d)
        for a in rng
        for b in rng
        for c in rng
        for d in rng
    ]


def involutions_in_window(bound):
    return [A for A in window_matrices(bound) if abs(mat_det(A)) == 1 and is_involution(A)]


class TestArithmetic:
    def test_product(self):
        got = mat_mul(IntMatrix2(0, 1, 1, 2), IntMatrix2(1, 0, -1, -1))
        assert got == IntMatrix2(-1, -1, -1, -2)

    def test_inverse(self):
        assert mat_inv(IntMatrix2(0, 1, 1, 2)) == IntMatrix2(-2, 1, 1, 0)

    def test_identity_law(self):
        A = IntMatrix2(3, -2, 1, 1)
        assert mat_mul(IDENTITY, A) == A
        assert mat_mul(A, IDENTITY) == A

    def test_inverse_requires_unit_determinant(self):
        with pytest.raises(ValueError):
            mat_inv(IntMatrix2(2, 0, 0, 1))

    def test_det_multiplicative(self):
        mats = [m for m in window_matrices(2) if m.a or m.b or m.c or m.d][:50]
        for A in mats:
            for B in mats[:10]:
                assert mat_det(mat_mul(A, B)) == mat_det(A) * mat_det(B)

    def test_double_inverse(self):
        for A in window_matrices(2):
            if abs(mat_det(A)) == 1:
                assert mat_inv(mat_inv(A)) == A

    def test_vector_action(self):
        assert mat_vec(IntMatrix2(0, 1, 1, 2), (-2, 1)) == (1, 0)


class TestIsInvolution:
    def test_upper_triangular_involution(self):
        assert is_involution(IntMatrix2(1, -1, 0, -1))

    def test_rotation_has_order_four(self):
        assert not is_involution(IntMatrix2(0, -1, 1, 0))

    def test_lower_triangular_involution(self):
        assert is_involution(IntMatrix2(1, 0, -1, -1))

    def test_reversing_involutions_have_trace_zero(self):
        for A in involutions_in_window(3):
            if mat_det(A) == -1:
                assert A.a + A.d == 0


class TestInvolutionClass:
    def test_anti_type(self):
        assert involution_class(IntMatrix2(1, 0, -1, -1)) == InvolutionClassLabel.ANTI_TYPE

    def test_refl_type(self):
        assert involution_class(IntMatrix2(1, 0, 0, -1)) == InvolutionClassLabel.REFL_TYPE

    def test_minus_identity(self):
        assert involution_class(MINUS_I) == InvolutionClassLabel.MINUS_IDENTITY

    def test_identity(self):
        assert involution_class(IDENTITY) == InvolutionClassLabel.IDENTITY

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError):
            involution_class(IntMatrix2(0, -1, 1, 0))

    def test_class_invariant_under_conjugation(self):
        involutions = involutions_in_window(3)
        conjugators = [H for H in window_matrices(3) if abs(mat_det(H)) == 1]
        for A in involutions:
            label = involution_class(A)
            for H in conjugators:
                assert involution_class(conjugate(H, A)) == label


class TestFindConjugator:
    def test_finds_conjugator_across_representatives(self):
        A = IntMatrix2(1, 0, -1, -1)
        H = find_conjugator(A, SWAP, 3)
        assert H is not None
        assert abs(mat_det(H)) == 1
        assert all(abs(e) <= 3 for e in (H.a, H.b, H.c, H.d))
        assert mat_mul(H, A) == mat_mul(SWAP, H)

    def test_identity_pair(self):
        assert find_conjugator(IDENTITY, IDENTITY, 1) == IDENTITY

    def test_distinct_classes_have_no_conjugator(self):
        assert find_conjugator(IntMatrix2(1, 0, 0, -1), SWAP, 5) is None

    def test_agrees_with_classifier_on_window(self):
        involutions = involutions_in_window(2)
        for A in involutions:
            for B in involutions:
                same_class = involution_class(A) == involution_class(B)
                assert (find_conjugator(A, B, 5) is not None) == same_class

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            find_conjugator(IDENTITY, IDENTITY, 0)
