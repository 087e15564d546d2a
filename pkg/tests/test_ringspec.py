import pytest

from zdgraph.ringspec import (
    OrderCapError,
    Product,
    QuotientPoly,
    RingSpecError,
    Zn,
    format_spec,
    parse_ring_spec,
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("Z6", Zn(6)),
        ("Z2 x Z4", Product((Zn(2), Zn(4)))),
        ("Z2xZ4", Product((Zn(2), Zn(4)))),
        ("GF(4)", QuotientPoly(2, (1, 1, 1))),
        ("GF(5)", Zn(5)),
        ("Z2[x]/(x^2)", QuotientPoly(2, (0, 0, 1))),
        ("Z4 x GF(4)", Product((Zn(4), QuotientPoly(2, (1, 1, 1))))),
        ("Z2 x Z2 x Z3", Product((Zn(2), Zn(2), Zn(3)))),
        ("  Z3 [ x ] / ( x ^ 2 + 2 x + 1 )", QuotientPoly(3, (1, 2, 1))),
        ("Z3[x]/(x^2-1)", QuotientPoly(3, (2, 0, 1))),
        ("Z5[x]/(x^2+2*x)", QuotientPoly(5, (0, 2, 1))),
    ],
)
def test_parse(text, expected):
    assert parse_ring_spec(text) == expected


@pytest.mark.parametrize(
    "text,match",
    [
        ("Z4[x]/(x^2)", "prime base"),
        ("GF(6)", "prime-power"),
        ("Z3[x]/(2x^2+1)", "not monic"),
        ("Z5[y]/(y^2)", "expected 'x'"),
        ("Z1", "n >= 2"),
        ("Z", "integer"),
        ("Z6 x", "expected 'Z'"),
        ("Z6 Z4", "unexpected"),
        ("Q3", "expected 'Z'"),
    ],
)
def test_parse_errors(text, match):
    with pytest.raises(RingSpecError, match=match) as info:
        parse_ring_spec(text)
    assert info.value.position is not None


def test_error_position_points_at_offender():
    with pytest.raises(RingSpecError) as info:
        parse_ring_spec("Z5[y]/(y^2)")
    assert info.value.position == 3


def test_order_cap(monkeypatch):
    with pytest.raises(OrderCapError):
        parse_ring_spec("Z4097")
    monkeypatch.setenv("ZDG_ORDER_CAP", "100")
    with pytest.raises(OrderCapError):
        parse_ring_spec("Z10 x Z11")
    monkeypatch.setenv("ZDG_ORDER_CAP", "5000")
    assert parse_ring_spec("Z4097").order == 4097


def test_product_flattens_and_validates():
    nested = Product((Zn(2), Product((Zn(3), Zn(4)))))
    assert nested.factors == (Zn(2), Zn(3), Zn(4))
    assert nested.order == 24
    with pytest.raises(RingSpecError):
        Product((Zn(2),))
    with pytest.raises(RingSpecError):
        QuotientPoly(2, (1,))  # constant modulus
    with pytest.raises(RingSpecError):
        QuotientPoly(3, (1, 2))  # 2x+1 not monic
    with pytest.raises(RingSpecError):
        QuotientPoly(6, (0, 1))


@pytest.mark.parametrize("text", ["Z6", "Z2 x Z4", "Z4 x GF(4)", "Z2[x]/(x^2) x GF(8)", "Z3[x]/(x^3+2x+1)"])
def test_format_round_trip(text):
    spec = parse_ring_spec(text)
    assert parse_ring_spec(format_spec(spec)) == spec


def test_quotient_order():
    assert QuotientPoly(3, (1, 0, 1)).order == 9
