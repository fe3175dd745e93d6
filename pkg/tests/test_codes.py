import pytest

from apollonian.coding.codes import (
    Code,
    Corner,
    cut_t,
    last_occurrence,
    postfix_p,
    upward_labels,
)
from apollonian.errors import AbsentSymbol, InvalidArgument

LONG = "113213323122221131"


def c(text: str, d: int = 2) -> Code:
    return Code.parse(text, d)


class TestLastOccurrence:
    def test_simple(self):
        assert last_occurrence(c("3312"), 3) == 2

    def test_absent_symbol(self):
        assert last_occurrence(c("3312", 3), 4) is None

    def test_long_code(self):
        assert last_occurrence(c(LONG), 2) == 14

    @pytest.mark.parametrize("symbol", [0, 4])
    def test_symbol_outside_alphabet(self, symbol):
        with pytest.raises(InvalidArgument):
            last_occurrence(c("12"), symbol)


class TestCuts:
    @pytest.mark.parametrize(
        "code, symbol, expected",
        [("3312", 1, "33"), ("132", 1, ""), ("211", 1, "21")],
    )
    def test_cut_t(self, code, symbol, expected):
        assert cut_t(c(code), symbol) == c(expected)

    def test_cut_to_root(self):
        assert cut_t(c("132"), 1).is_root

    @pytest.mark.parametrize(
        "code, symbol, expected",
        [("3312", 2, "2"), ("123123", 1, "123"), ("11", 1, "1")],
    )
    def test_postfix_p(self, code, symbol, expected):
        assert postfix_p(c(code), symbol) == c(expected)

    def test_cut_plus_postfix_is_the_code(self):
        code = c(LONG)
        for symbol in (1, 2, 3):
            joined = cut_t(code, symbol).symbols + postfix_p(code, symbol).symbols
            assert joined == code.symbols

    def test_absent_symbol_signal(self):
        with pytest.raises(AbsentSymbol) as info:
            cut_t(c("11"), 2)
        assert info.value.symbol == 2
        assert info.value.code == c("11")
        with pytest.raises(AbsentSymbol):
            postfix_p(c("11"), 3)


class TestSerialization:
    def test_digits_round_trip(self):
        assert str(c("3312")) == "3312"
        assert c("").is_root
        assert str(Code.root(2)) == ""

    def test_comma_form_for_large_alphabets(self):
        code = Code.parse("1,11,3", 10)
        assert code.symbols == (1, 11, 3)
        assert str(code) == "1,11,3"

    @pytest.mark.parametrize("text", ["14", "1a", "0"])
    def test_malformed(self, text):
        with pytest.raises(InvalidArgument):
            Code.parse(text, 2)

    def test_constructor_validates(self):
        with pytest.raises(InvalidArgument):
            Code((1, 4), 2)

    def test_corner_label(self):
        assert str(Corner(2)) == "#2"

    def test_child_and_prefix(self):
        code = c("13").child(2)
        assert code == c("132")
        assert code.prefix(1) == c("1")
        assert code.suffix(1) == c("32")
        with pytest.raises(InvalidArgument):
            code.child(4)


class TestUpwardLabels:
    def test_all_symbols_present(self):
        assert upward_labels(c("132")) == (Code.root(2), c("13"), c("1"))

    def test_absent_symbols_resolve_to_corners(self):
        assert upward_labels(c("11")) == (c("1"), Corner(2), Corner(3))

    def test_initial_clique(self):
        # Clique "1" holds the root and corners 2 and 3.
        assert upward_labels(c("1")) == (Code.root(2), Corner(2), Corner(3))
