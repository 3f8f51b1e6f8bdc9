import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyknot import (LaurentInt, delta_power, mirror_variable,
                      substitute_quarter, parse_laurent)
from conftest import BRACKET52, F52, JONES52

laurents = st.builds(
    lambda d: LaurentInt.from_dict(d),
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5))


def L(text, var=None):
    return parse_laurent(text, var)


class TestAdd:
    def test_cancellation(self):
        assert L("A^3") + L("-A^3") == LaurentInt.zero()

    def test_partial(self):
        assert L("A^7-A^3") + L("A^3") == L("A^7")

    def test_bracket_expansion(self):
        # the two partial sums of the published bracket computation
        first = L("A^7-A^3") * L("-A^-4-A^4")
        second = L("A^-2") * L("A^-7-A^-3-A^5")
        assert first + second == L(BRACKET52)

    def test_variable_mismatch(self):
        with pytest.raises(ValueError):
            L("A") + L("q")


class TestMul:
    def test_expansion(self):
        assert L("A^7-A^3") * L("-A^-4-A^4") == L("-A^11+A^7-A^3+A^-1")

    def test_identity(self):
        a = L("3A^2-A^-5")
        assert a * LaurentInt.one() == a

    def test_inverse_pair(self):
        assert L("A^-1") * L("A") == LaurentInt.one()

    def test_variable_mismatch(self):
        with pytest.raises(ValueError):
            L("A") * L("q")

    def test_int_scaling(self):
        assert 2 * L("A-1") == L("2A-2")


class TestDeltaPower:
    def test_zero(self):
        assert delta_power(0) == LaurentInt.one()

    def test_one(self):
        assert delta_power(1) == L("-A^2-A^-2")

    def test_two(self):
        # oracle: square by explicit multiplication
        d = L("-A^2-A^-2")
        assert delta_power(2) == d * d == L("A^4+2+A^-4")

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            delta_power(-1)


class TestMirror:
    def test_monomial(self):
        assert mirror_variable(L("A^3")) == L("A^-3")

    def test_constant(self):
        assert mirror_variable(LaurentInt.one()) == LaurentInt.one()

    def test_jones_of_construction(self):
        assert mirror_variable(L(JONES52)) == \
            L("q^-1-q^-2+2q^-3-q^-4+q^-5-q^-6")

    @given(laurents)
    @settings(max_examples=50, deadline=None)
    def test_involution(self, a):
        assert mirror_variable(mirror_variable(a)) == a

    @given(laurents, laurents)
    @settings(max_examples=50, deadline=None)
    def test_commutes_with_ring_ops(self, a, b):
        assert mirror_variable(a + b) == mirror_variable(a) + mirror_variable(b)
        assert mirror_variable(a * b) == mirror_variable(a) * mirror_variable(b)


class TestSubstituteQuarter:
    def test_defining(self):
        assert substitute_quarter(L("A^-4")) == L("q", "q")

    def test_normalized_bracket_to_jones(self):
        assert substitute_quarter(L(F52)) == L(JONES52, "q")

    def test_indivisible_exponent_rejected(self):
        with pytest.raises(ValueError):
            substitute_quarter(L("A^3"))

    @given(st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=4),
           st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=4))
    @settings(max_examples=50, deadline=None)
    def test_multiplicative(self, da, db):
        a = LaurentInt.from_dict({4 * e: c for e, c in da.items()})
        b = LaurentInt.from_dict({4 * e: c for e, c in db.items()})
        assert substitute_quarter(a * b) == \
            substitute_quarter(a) * substitute_quarter(b)


class TestRingAxioms:
    @given(laurents, laurents)
    @settings(max_examples=60, deadline=None)
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(laurents, laurents, laurents)
    @settings(max_examples=60, deadline=None)
    def test_associative_distributive(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestTextFormat:
    def test_canonical_rendering(self):
        assert str(L(BRACKET52)) == BRACKET52

    def test_descending_exponents(self):
        assert str(LaurentInt.from_dict({-5: -1, 11: -1, 7: 1})) == \
            "-A^11+A^7-A^-5"

    def test_constants(self):
        assert str(LaurentInt.zero()) == "0"
        assert str(L("-1+q", "q")) == "q-1"

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_laurent("")
        with pytest.raises(ValueError):
            parse_laurent("q+A")
        with pytest.raises(ValueError):
            parse_laurent("3^^4")

    @given(laurents)
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, a):
        assert parse_laurent(str(a), "A") == a

    def test_evaluate(self):
        assert L("q-q^2", "q").evaluate(1.0) == 0.0
        assert L("A^2+A^-2").evaluate(2.0) == pytest.approx(4.25)
