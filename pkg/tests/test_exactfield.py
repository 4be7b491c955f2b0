from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pellgeom.errors import DomainError, FactorizationIncomplete, FieldMismatch
from pellgeom.exactfield import (
    Field,
    Q,
    Scalar,
    SquareClass,
    canonical_rep,
    factorize,
    format_scalar,
    is_algebraic_integer,
    is_square_in_k,
    norm_conj,
    ord_p,
    parse_field,
    parse_scalar,
    rational_sqrt,
    sqrt_in_k,
    sqrt_ratio,
    square_class_equiv,
    squarefree_part,
)

from strategies import FIELDS, nonzero_rationals, quad_fields, scalars

K2 = Field(2)
R2 = K2.sqrt


class TestValuation:
    @pytest.mark.parametrize("q,p,v", [(17, 17, 1), (1, 5, 0), (F(9, 2), 3, 2), (F(9, 2), 2, -1)])
    def test_examples(self, q, p, v):
        assert ord_p(q, p) == v

    def test_errors(self):
        with pytest.raises(DomainError):
            ord_p(0, 3)
        with pytest.raises(DomainError):
            ord_p(12, 4)

    @given(nonzero_rationals, nonzero_rationals, st.sampled_from([2, 3, 5, 7]))
    def test_additive(self, a, b, p):
        assert ord_p(a * b, p) == ord_p(a, p) + ord_p(b, p)


class TestSquarefree:
    @pytest.mark.parametrize("q,s", [(8, 2), (F(9, 49), 1), (-50, -2), (F(3, 8), 6), (1, 1)])
    def test_examples(self, q, s):
        assert squarefree_part(q) == s

    def test_zero(self):
        with pytest.raises(DomainError):
            squarefree_part(0)

    def test_bound(self, monkeypatch):
        monkeypatch.setenv("FACTOR_BOUND", "100")
        with pytest.raises(FactorizationIncomplete) as ei:
            factorize(101 * 103)
        assert ei.value.cofactor == 10403
        # a square cofactor is harmless for the square class
        assert squarefree_part(2 * 101 * 101) == 2

    @given(nonzero_rationals)
    def test_quotient_is_square(self, q):
        s = squarefree_part(q)
        assert rational_sqrt(q / s) is not None


class TestSquares:
    def test_examples(self):
        assert not is_square_in_k(2, Q)
        assert is_square_in_k(K2(2), K2)
        assert is_square_in_k(K2(3, 2), K2)
        assert sqrt_in_k(K2(3, 2)) == K2(1, 1)
        assert is_square_in_k(0, Q)
        assert not is_square_in_k(-4, Q)

    @pytest.mark.parametrize(
        "a,b,k,expected",
        [(9, 49, Q, True), (9, 98, Q, False), (K2(2), K2(1), K2, True), (K2(6), K2(3), K2, True)],
    )
    def test_equiv(self, a, b, k, expected):
        assert square_class_equiv(a, b, k) is expected

    def test_equiv_zero(self):
        with pytest.raises(DomainError):
            square_class_equiv(0, 1, Q)

    def test_sqrt_ratio(self):
        assert sqrt_ratio(9, 49, Q) == F(3, 7)
        assert sqrt_ratio(18, 50, Q) == F(3, 5)
        assert sqrt_ratio(2, 3, Q) is None
        assert sqrt_ratio(K2(2), K2(1)) == R2

    @given(scalars(nonzero=True))
    def test_square_of_anything(self, a):
        assert is_square_in_k(a * a, a.field)
        assert sqrt_ratio(a * a, a.field(1), a.field) == abs(a)

    @given(st.data())
    def test_equivalence_relation(self, data):
        k = data.draw(st.sampled_from(FIELDS))
        a, b, c = (data.draw(scalars(k, nonzero=True)) for _ in range(3))
        assert square_class_equiv(a, a, k)
        assert square_class_equiv(a, b, k) == square_class_equiv(b, a, k)
        if square_class_equiv(a, b, k) and square_class_equiv(b, c, k):
            assert square_class_equiv(a, c, k)
        # multiplying by a square never changes the class
        assert square_class_equiv(a, a * b * b, k)

    @given(st.data())
    def test_sqrt_ratio_squares_back(self, data):
        k = data.draw(st.sampled_from(FIELDS))
        a, b = data.draw(scalars(k, nonzero=True)), data.draw(scalars(k, nonzero=True))
        r = sqrt_ratio(a * b * b, a, k)
        assert r is not None and r * r == b * b and r.sign() > 0

    def test_square_class_object(self):
        assert SquareClass.of(8) == SquareClass.of(2)
        assert SquareClass.of(8) != SquareClass.of(3)
        assert hash(SquareClass.of(8)) == hash(SquareClass.of(F(1, 2)))
        assert canonical_rep(K2(18), K2) == 1
        assert canonical_rep(K2(6), K2) == 3
        assert canonical_rep(K2(147), K2) == 3


class TestQuadratic:
    def test_norm_conj(self):
        assert norm_conj(K2(1, 1)) == (K2(1, -1), -1)
        assert norm_conj(K2(5, 2)) == (K2(5, -2), 17)
        assert norm_conj(K2(7)) == (K2(7), 49)
        with pytest.raises(DomainError):
            norm_conj(Q(7))

    @given(st.data())
    def test_norm_multiplicative(self, data):
        k = data.draw(quad_fields)
        a, b = data.draw(scalars(k)), data.draw(scalars(k))
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a * b).conj() == a.conj() * b.conj()

    @given(st.data())
    def test_field_axioms(self, data):
        k = data.draw(st.sampled_from(FIELDS))
        a, b = data.draw(scalars(k)), data.draw(scalars(k, nonzero=True))
        assert (a / b) * b == a
        assert a - a == 0
        assert (a + b) * (a - b) == a * a - b * b

    def test_order_and_sign(self):
        assert K2(1, 1) > K2(2)
        assert K2(3, -2).sign() == 1  # 3 - 2 sqrt 2 > 0
        assert K2(-3, 2).sign() == -1
        assert abs(K2(1, -1)) == K2(-1, 1)

    def test_cross_field(self):
        with pytest.raises(FieldMismatch):
            K2(1, 1) + Field(3)(1, 1)
        with pytest.raises(FieldMismatch):
            K2(2) + Q(1)
        assert K2(2) + 1 == 3  # plain ints and Fractions coerce
        assert Q(1).to_field(K2) + K2(2) == 3

    def test_algebraic_integer(self):
        K5 = Field(5)
        assert is_algebraic_integer(K5(F(1, 2), F(1, 2)))
        assert not is_algebraic_integer(K5(F(1, 2), 0))
        assert not is_algebraic_integer(K2(F(1, 2), F(1, 2)))


class TestTextFormat:
    @pytest.mark.parametrize(
        "x,text",
        [
            (K2(F(117, 4), F(-45, 8)), "117/4-45/8*sqrt(2)"),
            (K2(0, -1), "-sqrt(2)"),
            (K2(0, F(13, 3)), "13/3*sqrt(2)"),
            (Q(F(-5, 7)), "-5/7"),
            (K2(11, 1), "11+sqrt(2)"),
        ],
    )
    def test_format(self, x, text):
        assert format_scalar(x) == text
        assert parse_scalar(text, x.field) == x

    def test_parse_variants(self):
        assert parse_scalar("13*sqrt(2)/3") == K2(0, F(13, 3))
        assert parse_scalar("3√2") == K2(0, 3)
        assert parse_scalar("7", K2).field == K2
        for bad in ("", "sqrt(2)+sqrt(3)", "1/", "x"):
            with pytest.raises(DomainError):
                parse_scalar(bad)
        with pytest.raises(DomainError):
            parse_scalar("sqrt(3)", K2)

    @pytest.mark.parametrize("text,k", [("Q", Q), ("Q(sqrt 2)", K2), ("Q(sqrt(5))", Field(5))])
    def test_fields(self, text, k):
        assert parse_field(text) == k
        assert parse_field(str(k)) == k

    @given(scalars())
    def test_round_trip(self, x):
        assert parse_scalar(str(x), x.field) == x
