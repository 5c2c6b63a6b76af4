import pytest

from plattice.diagram import NODE_GROUPS, node_vertex_data
from plattice.exact import S, T, ProjectiveMatrix
from plattice.frames import (
    FRAME_SHAPES,
    FrameShape,
    IntegerPowerSeries,
    double_coset_label,
    double_group,
    eta_quotient_series,
    eta_quotient_value,
    eta_value,
    euler_factor_series,
    frame_shape,
    frame_shape_invariants,
    invariant_under,
    numeric_invariance_check,
)
from plattice.groupsys import GroupDescriptor, member, quotient_generators
from plattice.cusps import width_at_infinity

DOUBLED_DISPLAYS = ["2", "4+", "6+6", "8+", "10+10", "12+", "6|3", "8|2+", "4"]


def oracle_quotient(fs, order):
    """Independent brute-force expansion by direct polynomial products."""

    def mul(p, q):
        out = [0] * (order + 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q[: order + 1 - i]):
                    out[i + j] += a * b
        return out

    def euler(step):
        p = [1] + [0] * order
        m = 1
        while step * m <= order:
            factor = [0] * (order + 1)
            factor[0] = 1
            factor[step * m] = -1
            p = mul(p, factor)
            m += 1
        return p

    def inv(p):
        out = [0] * (order + 1)
        out[0] = 1
        for k in range(1, order + 1):
            out[k] = -sum(p[i] * out[k - i] for i in range(1, k + 1))
        return out

    acc = [1] + [0] * order
    for a, alpha in fs.parts:
        up, down = euler(a), euler(2 * a)
        for _ in range(abs(alpha)):
            if alpha > 0:
                acc = mul(acc, up)
                acc = mul(acc, inv(down))
            else:
                acc = mul(acc, inv(up))
                acc = mul(acc, down)
    return acc


class TestDoubling:
    def test_trivial_label(self):
        assert double_coset_label(1, 5) == (1, 10)

    def test_fricke_of_two(self):
        assert double_coset_label(2, 2) == (4, 4)

    def test_odd_label_even_cofactor(self):
        assert double_coset_label(3, 6) == (3, 12)

    def test_odd_fricke_doubles(self):
        assert double_coset_label(3, 3) == (6, 6)
        assert double_coset_label(5, 5) == (10, 10)

    def test_rejects_inexact(self):
        with pytest.raises(ValueError):
            double_coset_label(2, 4)

    def test_all_nine_groups(self):
        assert [double_group(d).display for d in NODE_GROUPS] == DOUBLED_DISPLAYS

    def test_rejects_outsiders(self):
        with pytest.raises(ValueError):
            double_group(GroupDescriptor.gamma0(7))

    def test_doubles_are_arithmetic_with_width_one(self):
        for d in NODE_GROUPS:
            sd = double_group(d)
            for g in quotient_generators(sd):
                assert member(g, sd)
            assert width_at_infinity(sd) == 1


class TestFrameShapes:
    def test_catalog_displays(self):
        assert [fs.display for fs in FRAME_SHAPES] == [
            "1^24",
            "2^24 / 1^24",
            "3^12 / 1^12",
            "4^8 / 1^8",
            "5^6 / 1^6",
            "2^6 6^6 / 1^6 3^6",
            "3^8",
            "4^12 / 2^12",
            "1^8 2^8",
        ]

    def test_lookup_by_group(self):
        assert frame_shape(GroupDescriptor.gamma0(1)).display == "1^24"
        assert frame_shape(GroupDescriptor.gamma0_plus(6)).display == "2^6 6^6 / 1^6 3^6"
        assert frame_shape(GroupDescriptor.gamma0(2)).display == "1^8 2^8"

    def test_degree_24(self):
        for fs in FRAME_SHAPES:
            assert fs.degree == 24

    def test_parse_round_trip(self):
        for fs in FRAME_SHAPES:
            assert FrameShape.parse(fs.display) == fs

    def test_invariants_examples(self):
        assert frame_shape_invariants(FrameShape.parse("1^24")) == (24, 1, 1)
        assert frame_shape_invariants(FrameShape.parse("2^6 6^6 / 1^6 3^6")) == (24, 6, 3)
        assert frame_shape_invariants(FrameShape.parse("4^12 / 2^12")) == (24, 4, 2)

    def test_max_parts_equal_normalized_levels(self):
        data = node_vertex_data()
        for v, fs in zip(data, FRAME_SHAPES):
            assert fs.max_part == v.normalized_level

    def test_predicted_valency_matches(self):
        data = node_vertex_data()
        for v, fs in zip(data, FRAME_SHAPES):
            assert fs.predicted_valency == v.valency

    def test_validation(self):
        with pytest.raises(ValueError):
            FrameShape(((2, 1), (2, 3)))
        with pytest.raises(ValueError):
            FrameShape(((1, 0),))


class TestSeries:
    def test_frozen_leading_coefficients(self):
        series = eta_quotient_series(FRAME_SHAPES[0], 10)
        assert series.leading == -1
        assert series.coeffs[:4] == (1, -24, 276, -2048)

    def test_matches_independent_oracle_to_fifty(self):
        for fs in FRAME_SHAPES:
            series = eta_quotient_series(fs, 50)
            oracle = oracle_quotient(fs, 51)
            assert series.leading == -1
            assert list(series.coeffs) == oracle[: len(series.coeffs)]

    def test_all_integer_and_pole_order_one(self):
        for fs in FRAME_SHAPES:
            series = eta_quotient_series(fs, 50)
            assert series.leading == -1
            assert series.coeffs[0] == 1
            assert all(isinstance(c, int) for c in series.coeffs)

    def test_quotient_times_denominator_is_numerator(self):
        for fs in FRAME_SHAPES:
            order = 30
            series = eta_quotient_series(fs, order)
            width = len(series.coeffs)
            num = IntegerPowerSeries(0, (1,) + (0,) * (width - 1))
            den = IntegerPowerSeries(0, (1,) + (0,) * (width - 1))
            for a, alpha in fs.parts:
                num = num * euler_factor_series(a, width - 1).power(alpha)
                den = den * euler_factor_series(2 * a, width - 1).power(alpha)
            left = IntegerPowerSeries(series.leading, series.coeffs) * den
            assert left.coeffs == (IntegerPowerSeries(-1, num.coeffs)).coeffs

    def test_fractional_exponent_rejected(self):
        with pytest.raises(ValueError, match="fractional"):
            eta_quotient_series(FrameShape.parse("1^1"), 10)

    def test_coefficient_accessor(self):
        series = eta_quotient_series(FRAME_SHAPES[0], 5)
        assert series.coefficient(-1) == 1
        assert series.coefficient(-3) == 0
        assert series.coefficient(0) == -24
        with pytest.raises(ValueError):
            series.coefficient(series.order + 1)

    def test_str_form(self):
        series = eta_quotient_series(FRAME_SHAPES[0], 1)
        assert str(series).startswith("q^-1 - 24 + 276 q")


class TestNumericCheck:
    def test_translation_always_invariant(self):
        assert invariant_under(FRAME_SHAPES[0], T, 0.1 + 0.8j)

    def test_all_nine_invariant(self):
        for d in NODE_GROUPS:
            assert numeric_invariance_check(frame_shape(d), double_group(d))

    def test_negative_control(self):
        assert not invariant_under(FRAME_SHAPES[0], S, 0.1 + 0.8j)

    def test_fricke_of_two_scales_instead(self):
        # eta(t)^24/eta(2t)^24 is not itself invariant under the level-two
        # involution; the involution sends it to 4096 over itself
        w2 = ProjectiveMatrix.from_entries(0, -1, 2, 0)
        tau = 0.1 + 0.8j
        from plattice.frames import mobius

        f0 = eta_quotient_value(FRAME_SHAPES[0], tau)
        f1 = eta_quotient_value(FRAME_SHAPES[0], mobius(w2, tau))
        assert abs(f1 - 4096 / f0) < 1e-6 * (1 + abs(f1))
        assert not invariant_under(FRAME_SHAPES[0], w2, tau)

    def test_upper_half_plane_required(self):
        with pytest.raises(ValueError):
            eta_value(0.3 - 1j)
        with pytest.raises(ValueError):
            invariant_under(FRAME_SHAPES[0], T, 0.5 - 0.5j)

    def test_eta_against_fixed_point(self):
        # eta(i) = Gamma(1/4) / (2 pi^(3/4))
        import math

        expected = math.gamma(0.25) / (2 * math.pi**0.75)
        assert abs(eta_value(1j) - expected) < 1e-12
