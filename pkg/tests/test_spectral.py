import math

import pytest

from pe_conics.conic import Conic
from pe_conics.errors import NoRealPEValues, NotDiagonalizable
from pe_conics.spectral import (
    CaseKind,
    congruence,
    diag_case,
    diagonalize,
    pe_values,
    reducing_rotation,
    rotation_angle,
)


class TestPEValues:
    def test_irrational_pair(self):
        v = pe_values(((3, -1), (-1, 1)))
        assert v.lambda1 == pytest.approx(1 + math.sqrt(3))
        assert v.lambda2 == pytest.approx(math.sqrt(3) - 1)
        assert v.lambda1 - v.lambda2 == pytest.approx(2)
        assert v.lambda1 * v.lambda2 == pytest.approx(2)

    def test_diagonal_exact(self):
        v = pe_values(((4, 0), (0, 1)))
        assert (v.lambda1, v.lambda2) == (4, 1)

    def test_diagonal_negative_trace_convention(self):
        # D >= 0 picks (-a22, -a11) instead of (a11, a22)
        v = pe_values(((Conic(1).a00 / 4, 0), (0, -1)))
        assert v.lambda1 - v.lambda2 == Conic(1).a00 * 5 / 4
        assert v.lambda1 * v.lambda2 == -Conic(1).a00 / 4

    def test_case_iii(self):
        with pytest.raises(NoRealPEValues):
            pe_values(((1, 1), (1, -1)))

    def test_accepts_conic(self):
        assert pe_values(Conic(0, 0, 0, 4, 0, 1)).lambda1 == 4


class TestDiagCase:
    def test_case_i(self):
        assert diag_case(((0.25, 0), (0, -1))).kind is CaseKind.CASE_I

    def test_case_ii_sign(self):
        c = diag_case(((3, 1), (1, -5)))
        assert c.kind is CaseKind.CASE_II and c.sign == 1
        assert diag_case(((5, 1), (1, -3))).sign == -1

    def test_family4_axis(self):
        assert diag_case(((1, 0), (0, -1))).kind is CaseKind.FAMILY4_AXIS
        assert diag_case(((0, 0), (0, 0))).kind is CaseKind.FAMILY4_AXIS

    def test_trace_zero_off_diagonal_is_case_iii(self):
        assert diag_case(((1, 2), (2, -1))).kind is CaseKind.CASE_III

    def test_case_iii(self):
        assert diag_case(((1, 1), (1, -1))).kind is CaseKind.CASE_III
        assert diag_case(((1, 3), (3, 2))).kind is CaseKind.CASE_III


class TestRotation:
    def test_diagonal_angle_zero(self):
        assert rotation_angle(((2, 0), (0, 1))) == 0

    def test_angle(self):
        assert rotation_angle(((3, -1), (-1, 1))) == pytest.approx(0.5 * math.atanh(0.5))

    def test_case_iii_rejected(self):
        with pytest.raises(NotDiagonalizable):
            rotation_angle(((1, 1), (1, -1)))

    def test_exact_when_rational(self):
        # tanh(2 phi) = 15/17 for e**phi = 2
        sigma = ((17, -15), (-15, 17))
        rot = reducing_rotation(sigma)
        assert rot.is_exact
        assert congruence(sigma, rot.ch, rot.sh)[0][1] == 0

    def test_float_fallback(self):
        rot = reducing_rotation(((3, -1), (-1, 1)))
        assert not rot.is_exact


class TestDiagonalize:
    def test_diagonal_fixed(self):
        r, d = diagonalize(((2, 0), (0, 1)))
        assert r == ((1, 0), (0, 1)) and d == ((2, 0), (0, 1))

    def test_against_pe_values(self):
        _, d = diagonalize(((3, -1), (-1, 1)))
        assert abs(d[0][1]) < 1e-12
        assert d[0][0] == pytest.approx(1 + math.sqrt(3), abs=1e-12)
        assert d[1][1] == pytest.approx(math.sqrt(3) - 1, abs=1e-12)

    def test_case_ii_rejected(self):
        with pytest.raises(NotDiagonalizable):
            diagonalize(((3, 1), (1, -5)))
