import pytest

from motrec.analysis import count_factors, stabilize, window_complexity
from motrec.generators import (
    FIBONACCI,
    MorphismSpec,
    SturmianSpec,
    UnknownSource,
    champernowne_prefix,
    fibonacci_source,
    morphic_prefix,
    parse_source,
    periodic_prefix,
    sturmian_prefix,
)
from motrec.words import FiniteWord

from conftest import brute_P, rewrite_fibonacci

QUOTED_PREFIX = "abaababaabaababaababaababaabaababaa"


def test_morphic_small():
    assert str(morphic_prefix(FIBONACCI, 8)) == "abaababa"
    constant = MorphismSpec.from_mapping({"a": "aa"}, seed="a")
    assert str(morphic_prefix(constant, 5)) == "aaaaa"


def test_morphic_35_matches_rewriting():
    assert str(morphic_prefix(FIBONACCI, 35)) == rewrite_fibonacci(35)


def test_quoted_prefix_is_not_the_fixed_point():
    # The 35-letter string printed with the worked example swaps "ab"/"ba"
    # at 24-25 and 32-33; applying the morphism to it yields the real prefix.
    true = rewrite_fibonacci(35)
    assert [i for i in range(35) if true[i] != QUOTED_PREFIX[i]] == [24, 25, 32, 33]
    image = "".join("ab" if ch == "a" else "a" for ch in QUOTED_PREFIX)[:35]
    assert image == true != QUOTED_PREFIX


def test_non_prolongable_rejected():
    with pytest.raises(ValueError):
        MorphismSpec.from_mapping({"a": "ba", "b": "a"}, seed="a")
    with pytest.raises(ValueError):
        MorphismSpec.from_mapping({"a": "a", "b": "ab"}, seed="a")
    with pytest.raises(ValueError):
        MorphismSpec.from_mapping({"a": "ab", "b": ""}, seed="a")


def test_sturmian_all_ones_is_fibonacci():
    assert str(sturmian_prefix(SturmianSpec((1,)), 100_000)) == str(morphic_prefix(FIBONACCI, 100_000))


def test_sturmian_empty_and_bad_directive():
    assert str(sturmian_prefix(SturmianSpec((3, 1)), 0)) == ""
    with pytest.raises(ValueError):
        SturmianSpec((1, 0))


@pytest.mark.parametrize("directive", [(2, 1), (1, 2), (3,), (1, 4, 2)])
def test_sturmian_complexity(directive):
    text = str(sturmian_prefix(SturmianSpec(directive), 40_000))
    assert [brute_P(text, n) for n in range(1, 11)] == [n + 1 for n in range(1, 11)]


def test_champernowne():
    assert str(champernowne_prefix(10)) == "0110111001"
    assert str(champernowne_prefix(0)) == ""
    text = str(champernowne_prefix(100_000))
    assert [brute_P(text, n) for n in range(1, 9)] == [2 ** n for n in range(1, 9)]


def test_champernowne_window_equals_factor_complexity():
    u = champernowne_prefix(400_000)
    Pf = window_complexity(u, 8)
    P = count_factors(u, 8).P
    assert Pf == list(P)


def test_periodic():
    assert str(periodic_prefix(FiniteWord.from_string("ab"), 5)) == "ababa"
    assert str(periodic_prefix(FiniteWord.from_string("a"), 4)) == "aaaa"
    text = str(periodic_prefix(FiniteWord.from_string("ab"), 200))
    assert all(brute_P(text, m) == 2 for m in range(1, 11))


def test_sturmian_stabilized_profile():
    _, profile = stabilize(parse_source("sturmian:2,1"), 40)
    assert profile.stable
    assert list(profile.P[1:]) == [n + 1 for n in range(1, 41)]


@pytest.mark.parametrize("desc", ["sturmian:", "periodic:", "nonsense", "morphic:a=ba;b=a",
                                  "morphic:a=ab", "fibonacci:3", "sturmian:1,x"])
def test_bad_descriptors(desc):
    with pytest.raises(UnknownSource):
        parse_source(desc)


def test_descriptors_roundtrip():
    assert parse_source("fibonacci").descriptor == "fibonacci"
    src = parse_source("morphic:a=ab;b=a;seed=a")
    assert str(src.prefix(20)) == str(fibonacci_source().prefix(20))
    assert parse_source("sturmian:2,1").descriptor == "sturmian:2,1"
