from bethe.rationals import (ONE, Q, ZERO, binomial, format_rat, is_rat,
                             parse_rat)


def test_basic_arithmetic():
    assert Q(1, 2) + Q(1, 3) == Q(5, 6)
    assert Q(2, 4) == Q(1, 2)
    assert ONE / Q(3) == Q(1, 3)
    assert ZERO == 0 and ONE == 1


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_format_parse_roundtrip():
    for x in (Q(0), Q(7), Q(-3, 4), Q(22, 7)):
        assert parse_rat(format_rat(x)) == x
    assert format_rat(Q(-3, 4)) == "-3/4"
    assert parse_rat("5") == 5


def test_is_rat():
    assert is_rat(Q(1, 2)) and is_rat(3)
    assert not is_rat("1/2")
