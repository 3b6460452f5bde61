"""Closed-form complexity of substituted words, and comparison with measurements.

``eval_general`` gives the complexity of ``v`` from the complexity ``P`` and
first difference ``S`` of a modulo-recurrent source; ``eval_sturmian`` is its
specialisation to ``P(m) = m + 1``.  Both are transcribed as stated, branch by
branch, and return the branch that fired so disagreements with brute force can
be traced.  Arithmetic is exact integer arithmetic throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .analysis import ComplexityProfile, window_complexity, count_factors
from .words import FiniteWord

BRANCHES_GENERAL = ("I.1", "I.2", "I.3", "I.4", "II.α0", "II.0<α≤l", "II.l<α<k+l")
BRANCHES_STURMIAN = ("n≤m0", "m0<n≤M0,k<l", "m0<n≤M0,l<k", "n>M0")


class OutOfRange(ValueError):
    """A closed form asked for a source count the backend cannot vouch for."""


@dataclass(frozen=True)
class BranchedValue:
    value: int
    branch: str
    params: dict = field(default_factory=dict, compare=False)


class SourceComplexity:
    """Complexity ``P`` and first difference ``S`` of a source word.

    ``n_max`` bounds the lengths ``P`` may be queried at (``None`` for closed
    forms valid everywhere); ``S(n)`` needs ``P(n + 1)``.
    """

    def __init__(
        self,
        P: Callable[[int], int],
        description: str,
        n_max: int | None = None,
        S: Callable[[int], int] | None = None,
    ) -> None:
        self._P = P
        self._S = S
        self.description = description
        self.n_max = n_max

    def P(self, n: int) -> int:
        if n < 0 or (self.n_max is not None and n > self.n_max):
            raise OutOfRange(f"{self.description}: P({n}) outside 0..{self.n_max}")
        return self._P(n)

    def S(self, n: int) -> int:
        if self._S is not None and self.n_max is None:
            if n < 0:
                raise OutOfRange(f"{self.description}: S({n}) undefined")
            return self._S(n)
        return self.P(n + 1) - self.P(n)

    @classmethod
    def sturmian(cls) -> SourceComplexity:
        return cls(lambda n: n + 1, "sturmian", S=lambda n: 1)

    @classmethod
    def full(cls, alphabet_size: int) -> SourceComplexity:
        return cls(lambda n: alphabet_size ** n, f"full:{alphabet_size}")

    @classmethod
    def from_profile(cls, profile: ComplexityProfile) -> SourceComplexity:
        if not profile.stable:
            raise ValueError("refusing to treat an unstable profile as a source complexity")
        counts = profile.P
        label = f"empirical:{profile.source}" if profile.source else "empirical"
        return cls(counts.__getitem__, label, n_max=profile.n_max)


def _params(n: int, k: int, l: int) -> dict:
    params = {"n": n, "k": k, "l": l, "m0": min(l, k), "M0": max(l, k)}
    if n >= k + l:
        q, alpha = divmod(n, k + l)
        params.update(q=q, alpha=alpha, beta=min(alpha, k))
    return params


def general_branch(n: int, k: int, l: int) -> str:
    m0, M0 = min(l, k), max(l, k)
    if n < k + l:
        if n <= m0:
            return "I.1"
        if n <= M0:
            return "I.2" if k < l else "I.3"
        return "I.4"
    alpha = n % (k + l)
    if alpha == 0:
        return "II.α0"
    return "II.0<α≤l" if alpha <= l else "II.l<α<k+l"


def eval_general(n: int, k: int, l: int, src: SourceComplexity) -> BranchedValue:
    """Complexity of the substituted word at length ``n`` from the source's ``P`` and ``S``."""
    if n < 1 or k < 1 or l < 1:
        raise ValueError("n, k and l must be positive")
    P, S = src.P, src.S
    params = _params(n, k, l)
    branch = general_branch(n, k, l)

    def total(lo: int, hi: int, shift: int = 0) -> int:
        return sum(P(shift + i) for i in range(lo, hi + 1))

    if branch == "I.1":
        value = 1 + 2 * total(1, n - 1) + P(n)
    elif branch == "I.2":
        value = 1 + 2 * total(1, k - 1) + (n - k + 1) * P(k)
    elif branch == "I.3":
        value = (n - l + 1) * P(n - l + 1) - 2 * S(n - l) + 2 * total(n - l + 1, n - 1) + P(n)
    elif branch == "I.4":
        value = ((n - l + 1) * P(n - l + 1) - 2 * S(n - l)
                 + 2 * total(n - l + 1, k - 1) + (n - k + 1) * P(k))
    else:
        q, alpha, beta = params["q"], params["alpha"], params["beta"]
        base = (k + 1) * q
        if branch == "II.α0":
            value = (k - 1) * P(base) + (l + 1) * P(base - 1)
        elif branch == "II.0<α≤l":
            value = ((l - alpha + 1) * P(base - 1) + 2 * total(1, beta - 1, base)
                     + (abs(k - alpha) + 1) * P(base + beta))
        else:
            value = ((alpha - l + 1) * P(base + alpha - l + 1) - 2 * S(base + alpha - l)
                     + 2 * total(alpha - l + 1, beta - 1, base)
                     + (abs(k - alpha) + 1) * P(base + beta))
    return BranchedValue(value, branch, params)


def eval_sturmian(n: int, k: int, l: int) -> BranchedValue:
    """Complexity of ``S_k^{c^l}`` applied to a Sturmian word."""
    if n < 1 or k < 1 or l < 1:
        raise ValueError("n, k and l must be positive")
    m0, M0 = min(l, k), max(l, k)
    params = {"n": n, "k": k, "l": l, "m0": m0, "M0": M0}
    if n <= m0:
        return BranchedValue(n * n + 2 * n, "n≤m0", params)
    if n <= M0 and k < l:
        return BranchedValue((k + 1) * n + k, "m0<n≤M0,k<l", params)
    if n <= M0 and l < k:
        return BranchedValue(n * n + 2 * n - 1, "m0<n≤M0,l<k", params)
    return BranchedValue((k + 1) * n + k - 1, "n>M0", params)


def source_lengths_needed(n_max: int, k: int, l: int) -> int:
    """Largest source length ``eval_general`` may query for ``n <= n_max``."""
    return n_max + k + 1


@dataclass(frozen=True)
class CorollaryReport:
    k: int
    l: int
    window_v: int | None
    factors_v: int | None
    source_next: int  # P_u(k + 1)
    source_k: int  # P_u(k)
    closed_form: int
    verdict: str

    @property
    def window_equals_source(self) -> bool:
        return self.window_v == self.source_next

    @property
    def distinct(self) -> bool:
        return self.window_v is not None and self.window_v != self.factors_v


def corollary_check(
    k: int,
    l: int,
    u_profile: SourceComplexity,
    v_word: FiniteWord,
    stable: bool = True,
) -> CorollaryReport:
    """Compare window and factor complexity of ``v`` at length ``k + l``.

    The asserted relations are ``Pf_v(k+l) = P_u(k+1)`` and
    ``Pf_v(k+l) != P_v(k+l)``; the verdict is ``pass`` only when both hold,
    ``inconclusive`` when ``v_word`` is not a stabilized prefix.
    """
    n = k + l
    source_next, source_k = u_profile.P(k + 1), u_profile.P(k)
    closed = eval_general(n, k, l, u_profile).value
    if not stable:
        return CorollaryReport(k, l, None, None, source_next, source_k, closed, "inconclusive")
    window_v = window_complexity(v_word, n)[n]
    factors_v = count_factors(v_word, n).P[n]
    ok = window_v == source_next and window_v != factors_v
    return CorollaryReport(k, l, window_v, factors_v, source_next, source_k, closed,
                           "pass" if ok else "fail")


def linear_regime(n: int, k: int) -> int:
    return (k + 1) * n + k - 1


def internal_stabilization(v_profile: ComplexityProfile, k: int) -> int | None:
    """Smallest ``n`` from which ``P(m) = (k+1)m + k - 1`` up to ``n_max``, or None."""
    P = v_profile.P
    n_k = None
    for n in range(v_profile.n_max, 0, -1):
        if P[n] != linear_regime(n, k):
            break
        n_k = n
    return n_k


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    branch: str
    closed: int
    empirical: int

    @property
    def match(self) -> bool:
        return self.closed == self.empirical


@dataclass
class ComparisonTable:
    rows: list[ComparisonRow]

    @property
    def mismatches(self) -> list[ComparisonRow]:
        return [r for r in self.rows if not r.match]

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict[str, dict[str, int]]:
        total: Counter = Counter()
        matched: Counter = Counter()
        for row in self.rows:
            total[row.branch] += 1
            matched[row.branch] += row.match
        return {b: {"rows": total[b], "match": matched[b]} for b in total}


def compare(
    n_range: Iterable[int],
    closed_form: Callable[[int], BranchedValue],
    empirical: ComplexityProfile,
) -> ComparisonTable:
    rows = []
    for n in n_range:
        if n > empirical.n_max:
            raise ValueError(f"n={n} beyond the empirical profile (n_max={empirical.n_max})")
        bv = closed_form(n)
        rows.append(ComparisonRow(n, bv.branch, bv.value, empirical.P[n]))
    return ComparisonTable(rows)
