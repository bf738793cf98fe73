import pytest
from hypothesis import given
from hypothesis import strategies as st

from onevar.model import ParseError, parse_equation, substitute


def test_token_counts():
    eq = parse_equation("abXaX = XbaXa")
    assert len(eq.lhs) == 5 and len(eq.rhs) == 5
    assert eq.x_count == 4


def test_empty_right_side():
    with pytest.raises(ParseError, match="empty right side"):
        parse_equation("ab = ")


def test_empty_left_side_has_column():
    with pytest.raises(ParseError) as info:
        parse_equation(" = aX")
    assert info.value.column == 2


def test_missing_equals():
    with pytest.raises(ParseError, match="missing '='"):
        parse_equation("aXb")


def test_no_variable_gives_verdict():
    with pytest.raises(ParseError, match="sides are equal"):
        parse_equation("ab = ab")
    with pytest.raises(ParseError, match="sides differ"):
        parse_equation("ab = ba")


def test_non_ascii_letters():
    eq = parse_equation("αβX = Xβα")
    assert eq.letters == sorted("αβ")


def test_comments_and_whitespace():
    eq = parse_equation("  a X b = a X b   # same sides")
    assert str(eq) == "aXb = aXb"


side = st.text(alphabet="abcX", min_size=1, max_size=12)


@given(side, side)
def test_round_trip(lhs, rhs):
    if "X" not in lhs + rhs:
        return
    eq = parse_equation(f"{lhs} = {rhs}")
    assert parse_equation(str(eq)) == eq
    assert str(eq) == f"{lhs} = {rhs}"


def test_substitute():
    assert substitute("aXbX", "cc") == "accbcc"
