import pytest

from motrec.analysis import ComplexityProfile, count_factors, stabilize
from motrec.formulas import (
    BRANCHES_GENERAL,
    OutOfRange,
    SourceComplexity,
    compare,
    corollary_check,
    eval_general,
    eval_sturmian,
    internal_stabilization,
)
from motrec.generators import ChampernowneSource, fibonacci_source, parse_source
from motrec.transforms import SubstitutionSpec, TransformedSource

STURMIAN = SourceComplexity.sturmian()


def branch_conditions(n, k, l):
    """Every branch guard written out as an independent predicate."""
    m0, M0 = min(l, k), max(l, k)
    q, alpha = divmod(n, k + l)
    return {
        "I.1": n < k + l and n <= m0,
        "I.2": n < k + l and m0 < n <= M0 and k < l,
        "I.3": n < k + l and m0 < n <= M0 and l < k,
        "I.4": M0 < n < k + l,
        "II.α0": n >= k + l and q >= 1 and alpha == 0,
        "II.0<α≤l": n >= k + l and 0 < alpha <= l,
        "II.l<α<k+l": n >= k + l and l < alpha < k + l,
    }


def test_branches_total_and_disjoint():
    for k in range(1, 7):
        for l in range(1, 7):
            for n in range(1, 201):
                fired = [b for b, ok in branch_conditions(n, k, l).items() if ok]
                assert len(fired) == 1, (n, k, l, fired)
                assert eval_general(n, k, l, STURMIAN).branch == fired[0]
    assert set(BRANCHES_GENERAL) == set(branch_conditions(1, 1, 1))


def test_general_examples():
    v = eval_general(5, 2, 3, STURMIAN)
    assert (v.value, v.branch) == (16, "II.α0")
    v = eval_general(1, 2, 3, STURMIAN)
    assert (v.value, v.branch) == (3, "I.1")
    v = eval_general(9, 2, 3, STURMIAN)
    assert (v.value, v.branch) == (28, "II.l<α<k+l")
    assert (v.params["q"], v.params["alpha"], v.params["beta"]) == (1, 4, 2)


def test_sturmian_examples():
    assert eval_sturmian(3, 2, 3).value == 11
    assert eval_sturmian(2, 2, 3).value == 8
    assert eval_sturmian(3, 3, 2).value == 14


def test_sturmian_equal_k_l_skips_middle():
    branches = {eval_sturmian(n, 3, 3).branch for n in range(1, 50)}
    assert branches == {"n≤m0", "n>M0"}


def test_sturmian_reduction():
    for k in range(1, 7):
        for l in range(1, 7):
            for n in range(1, 201):
                assert eval_general(n, k, l, STURMIAN).value == eval_sturmian(n, k, l).value


def test_linear_regime():
    for k in range(1, 7):
        for l in range(1, 7):
            for n in range(max(k, l) + 1, 200):
                assert eval_sturmian(n + 1, k, l).value - eval_sturmian(n, k, l).value == k + 1


def test_invalid_arguments():
    with pytest.raises(ValueError):
        eval_general(0, 1, 1, STURMIAN)
    with pytest.raises(ValueError):
        eval_sturmian(1, 0, 1)


def test_source_complexity_ranges():
    profile = ComplexityProfile(3, (1, 2, 3, 4), (1, 2, 3, 4), 100, stable=True, source="x")
    src = SourceComplexity.from_profile(profile)
    assert src.P(3) == 4 and src.S(2) == 1
    with pytest.raises(OutOfRange):
        src.P(4)
    with pytest.raises(OutOfRange):
        src.S(3)
    with pytest.raises(OutOfRange):
        eval_general(6, 2, 1, src)
    with pytest.raises(ValueError):
        SourceComplexity.from_profile(ComplexityProfile(3, (1, 2, 3, 4), (1, 2, 3, 4), 100))
    full = SourceComplexity.full(2)
    assert full.P(5) == 32 and full.S(5) == 32


@pytest.mark.parametrize("k,l", [(1, 1), (1, 3), (2, 3), (3, 2), (4, 1)])
def test_sturmian_against_brute_force(k, l):
    src = TransformedSource(fibonacci_source(), SubstitutionSpec(k, l, "c"))
    _, profile = stabilize(src, 30, engine="naive")
    table = compare(range(1, 31), lambda n: eval_sturmian(n, k, l), profile)
    assert table.all_match, table.mismatches


def test_compare_empty_and_bounds(fib):
    _, profile = stabilize(fib, 5)
    assert compare([], lambda n: eval_sturmian(n, 1, 1), profile).rows == []
    with pytest.raises(ValueError):
        compare([6], lambda n: eval_sturmian(n, 1, 1), profile)


def test_compare_summary():
    src = TransformedSource(fibonacci_source(), SubstitutionSpec(2, 3, "c"))
    _, profile = stabilize(src, 12)
    table = compare(range(1, 13), lambda n: eval_sturmian(n, 2, 3), profile)
    assert table.summary() == {
        "n≤m0": {"rows": 2, "match": 2},
        "m0<n≤M0,k<l": {"rows": 1, "match": 1},
        "n>M0": {"rows": 9, "match": 9},
    }


def _window_oracle(v, n):
    text = str(v)
    return len({text[j:j + n] for j in range(0, len(text) - n + 1, n)})


@pytest.mark.parametrize(
    "desc,k,l,window,factors",
    [("fibonacci", 2, 3, 3, 16), ("fibonacci", 1, 1, 2, 4), ("champernowne", 2, 2, 4, 16)],
)
def test_corollary_check(desc, k, l, window, factors):
    _, u_profile = stabilize(parse_source(desc), k + 2)
    src = SourceComplexity.from_profile(u_profile)
    v = TransformedSource(parse_source(desc), SubstitutionSpec(k, l, "c")).prefix(200_000)
    assert _window_oracle(v, k + l) == window
    report = corollary_check(k, l, src, v)
    assert report.window_v == window == report.source_k
    assert report.factors_v == factors
    assert report.distinct
    # the window count tracks P_u(k), not P_u(k + 1)
    assert not report.window_equals_source
    assert report.verdict == "fail"


def test_corollary_closed_form_fibonacci():
    report = corollary_check(2, 3, STURMIAN, TransformedSource(
        fibonacci_source(), SubstitutionSpec(2, 3, "c")).prefix(50_000))
    assert report.closed_form == report.factors_v == 16


def test_corollary_unstable_is_inconclusive():
    v = TransformedSource(fibonacci_source(), SubstitutionSpec(2, 3, "c")).prefix(1000)
    assert corollary_check(2, 3, STURMIAN, v, stable=False).verdict == "inconclusive"


@pytest.mark.parametrize("k,letter", [(1, "a"), (2, "b")])
def test_internal_stabilization(k, letter):
    src = TransformedSource(fibonacci_source(), SubstitutionSpec(k, 2, letter, internal=True))
    _, profile = stabilize(src, 60)
    n_k = internal_stabilization(profile, k)
    assert n_k is not None
    assert all(profile.P[m] == (k + 1) * m + k - 1 for m in range(n_k, 61))
    assert profile.P[n_k - 1] != (k + 1) * (n_k - 1) + k - 1


def _threshold_oracle(k, l, n_max):
    n_k = None
    for n in range(n_max, 0, -1):
        if eval_sturmian(n, k, l).value != (k + 1) * n + k - 1:
            break
        n_k = n
    return n_k


@pytest.mark.parametrize("k,l", [(1, 1), (1, 3), (2, 3), (2, 2), (3, 1), (4, 2)])
def test_internal_stabilization_on_external_transform(k, l):
    src = TransformedSource(fibonacci_source(), SubstitutionSpec(k, l, "c"))
    _, profile = stabilize(src, 40)
    n_k = internal_stabilization(profile, k)
    assert n_k == _threshold_oracle(k, l, 40)
    M0 = max(k, l)
    # the threshold is M0 + 1 when k <= l; for l < k the quadratic branch meets the line at n = k
    assert n_k == (M0 + 1 if k <= l else M0)


def test_internal_stabilization_none_for_constant():
    src = TransformedSource(parse_source("periodic:a"), SubstitutionSpec(1, 2, "a", internal=True))
    _, profile = stabilize(src, 20)
    assert internal_stabilization(profile, 1) is None


def test_champernowne_general_table_lists_branches():
    k = l = 2
    _, u_profile = stabilize(ChampernowneSource(), 13)
    src = SourceComplexity.from_profile(u_profile)
    v_src = TransformedSource(ChampernowneSource(), SubstitutionSpec(k, l, "c"))
    _, v_profile = stabilize(v_src, 10)
    table = compare(range(1, 11), lambda n: eval_general(n, k, l, src), v_profile)
    assert [r.n for r in table.rows] == list(range(1, 11))
    assert all(r.branch in BRANCHES_GENERAL for r in table.rows)
    # part (i) agrees with brute force; part (ii) overcounts on a full-complexity source
    assert all(r.match for r in table.rows if r.branch.startswith("I."))
    assert {r.branch for r in table.mismatches} == {"II.α0", "II.0<α≤l", "II.l<α<k+l"}
    assert count_factors(v_src.prefix(v_profile.prefix_len), 10, "naive").P == v_profile.P
