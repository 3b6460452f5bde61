"""Empirical measurements on finite prefixes.

Only factors lying entirely inside the analysed prefix are counted.  Two
engines count distinct factors: ``naive`` keeps a set of blocks per length,
``automaton`` reads all lengths off a suffix automaton.  They must agree.
"""

from __future__ import annotations

import logging
import os
from collections import defaultdict
from dataclasses import dataclass, field, replace

import numpy as np

from .automaton import SuffixAutomaton
from .words import FiniteWord, WordSource

log = logging.getLogger(__name__)

ENGINES = ("auto", "naive", "automaton")
DEFAULT_PREFIX_CAP = 1 << 24
START_PREFIX = 4096
# below this many (length x n_max) block reads the set-based engine is quicker
NAIVE_WORK_LIMIT = 200_000


def prefix_cap() -> int:
    value = os.environ.get("MOTREC_PREFIX_CAP")
    if not value:
        return DEFAULT_PREFIX_CAP
    cap = int(value)
    if cap < 1:
        raise ValueError("MOTREC_PREFIX_CAP must be positive")
    return cap


@dataclass(frozen=True)
class ComplexityProfile:
    """Per-length counts for one prefix; index ``n`` holds length ``n``.

    ``P[0] = Pf[0] = 1`` (the empty word).  ``S`` has one entry fewer than
    ``P`` since ``S(n_max)`` would need ``P(n_max + 1)``.
    """

    n_max: int
    P: tuple[int, ...]
    Pf: tuple[int, ...]
    prefix_len: int
    stable: bool = False
    engine: str = "naive"
    source: str = ""

    @property
    def S(self) -> tuple[int, ...]:
        P = self.P
        return tuple(P[n + 1] - P[n] for n in range(self.n_max))

    def rows(self) -> list[dict]:
        S = self.S
        return [
            {"n": n, "P": self.P[n], "S": S[n] if n < self.n_max else None, "Pf": self.Pf[n]}
            for n in range(1, self.n_max + 1)
        ]


def naive_counts(data: bytes, n_max: int) -> list[int]:
    counts = [1]
    for n in range(1, n_max + 1):
        counts.append(len({data[p:p + n] for p in range(len(data) - n + 1)}))
    return counts


def automaton_counts(data: bytes, sigma: int, n_max: int) -> list[int]:
    return SuffixAutomaton(data, sigma).counts_by_length(n_max)


def window_complexity(u: FiniteWord, n_max: int) -> list[int]:
    """``Pf[n]`` = number of distinct blocks ``u[jn : jn + n]``, for ``n <= n_max``."""
    if n_max > len(u):
        raise ValueError(f"n_max={n_max} exceeds the word length {len(u)}")
    data = u.data
    counts = [1]
    for n in range(1, n_max + 1):
        counts.append(len({data[j:j + n] for j in range(0, len(data) - n + 1, n)}))
    return counts


def count_factors(u: FiniteWord, n_max: int, engine: str = "auto") -> ComplexityProfile:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max >= len(u):
        raise ValueError(f"n_max={n_max} must be below the word length {len(u)}")
    if engine == "auto":
        engine = "naive" if len(u) * n_max <= NAIVE_WORK_LIMIT else "automaton"
    if engine == "naive":
        P = naive_counts(u.data, n_max)
    else:
        P = automaton_counts(u.data, u.alphabet.size, n_max)
    return ComplexityProfile(
        n_max=n_max,
        P=tuple(P),
        Pf=tuple(window_complexity(u, n_max)),
        prefix_len=len(u),
        engine=engine,
    )


@dataclass
class SpecialFactorReport:
    n: int
    right: dict[str, int] = field(default_factory=dict)
    left: dict[str, int] = field(default_factory=dict)
    right_sum: int = 0
    left_sum: int = 0

    @property
    def bispecial(self) -> list[str]:
        return sorted(set(self.right) & set(self.left))


def _extensions(data: bytes, n: int) -> tuple[dict[bytes, set], dict[bytes, set]]:
    right: dict[bytes, set] = defaultdict(set)
    left: dict[bytes, set] = defaultdict(set)
    for p in range(len(data) - n):
        right[data[p:p + n]].add(data[p + n])
    for p in range(1, len(data) - n + 1):
        left[data[p:p + n]].add(data[p - 1])
    return right, left


def special_factors(u: FiniteWord, n: int) -> SpecialFactorReport:
    """Right and left special factors of length ``n`` with their extension counts.

    Extensions are read from occurrences that have a neighbour inside the
    prefix; the sums run over every factor having at least one extension.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if len(u) <= n + 1:
        raise ValueError("word too short for extension counts")
    right, left = _extensions(u.data, n)
    show = lambda w: str(FiniteWord(u.alphabet, w))  # noqa: E731
    report = SpecialFactorReport(n)
    report.right = {show(w): len(e) for w, e in sorted(right.items()) if len(e) > 1}
    report.left = {show(w): len(e) for w, e in sorted(left.items()) if len(e) > 1}
    report.right_sum = sum(len(e) - 1 for e in right.values())
    report.left_sum = sum(len(e) - 1 for e in left.values())
    return report


def extension_sums(u: FiniteWord, n_max: int) -> tuple[list[int], list[int]]:
    """Automaton route to ``special_factors(u, n).right_sum/left_sum`` for all ``n``."""
    return SuffixAutomaton(u.data, u.alphabet.size).extension_sums(n_max)


@dataclass(frozen=True)
class ModuloVerdict:
    factor: str
    modulus: int
    verdict: str  # "pass" | "fail" | "inconclusive"
    occurrences: int
    witness: int | None = None


@dataclass
class ModuloRecurrenceReport:
    n_max: int
    mod_max: int
    prefix_len: int
    verdicts: list[ModuloVerdict]

    def count(self, verdict: str) -> int:
        return sum(1 for v in self.verdicts if v.verdict == verdict)

    @property
    def failures(self) -> list[ModuloVerdict]:
        return [v for v in self.verdicts if v.verdict == "fail"]

    @property
    def passed(self) -> bool:
        return all(v.verdict == "pass" for v in self.verdicts)


def check_modulo_recurrence(u: FiniteWord, n_max: int, mod_max: int) -> ModuloRecurrenceReport:
    """Test, for each factor of length ``<= n_max`` and each ``i <= mod_max``,
    whether its occurrences hit every residue class modulo ``i``.

    A factor occurring fewer than ``mod_max`` times is inconclusive rather than
    failing; the witness of a failure is the smallest missed residue.
    """
    if n_max < 1 or mod_max < 1:
        raise ValueError("n_max and mod_max must be positive")
    data = u.data
    verdicts = []
    for n in range(1, n_max + 1):
        positions: dict[bytes, list[int]] = defaultdict(list)
        for p in range(len(data) - n + 1):
            positions[data[p:p + n]].append(p)
        for w in sorted(positions):
            pos = np.asarray(positions[w])
            glyphs = str(FiniteWord(u.alphabet, w))
            for i in range(1, mod_max + 1):
                if len(pos) < mod_max:
                    verdicts.append(ModuloVerdict(glyphs, i, "inconclusive", len(pos)))
                    continue
                hit = np.zeros(i, dtype=bool)
                hit[pos % i] = True
                if hit.all():
                    verdicts.append(ModuloVerdict(glyphs, i, "pass", len(pos)))
                else:
                    missed = int(np.flatnonzero(~hit)[0])
                    verdicts.append(ModuloVerdict(glyphs, i, "fail", len(pos), missed))
    return ModuloRecurrenceReport(n_max, mod_max, len(u), verdicts)


def stabilize(
    source: WordSource,
    n_max: int,
    cap: int | None = None,
    engine: str = "auto",
    start: int = START_PREFIX,
) -> tuple[int, ComplexityProfile]:
    """Double the prefix length until the counts up to ``n_max`` stop changing.

    Starting from ``start`` symbols, profiles of consecutive prefixes ``L``
    and ``2L`` are compared; the first agreement returns the ``2L`` profile
    marked stable.  Reaching ``cap`` returns the last profile with
    ``stable=False``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    cap = prefix_cap() if cap is None else cap
    length = max(start, 2 * (n_max + 1))
    if length > cap:
        raise ValueError(f"n_max={n_max} is too large for the prefix cap {cap}")
    previous = count_factors(source.prefix(length), n_max, engine)
    while 2 * length <= cap:
        length *= 2
        log.info("%s: n_max=%d, prefix length %d", source.descriptor, n_max, length)
        current = count_factors(source.prefix(length), n_max, engine)
        if current.P == previous.P:
            return length, replace(current, stable=True, source=source.descriptor)
        previous = current
    log.warning("%s: profile not stable below cap %d", source.descriptor, cap)
    return previous.prefix_len, replace(previous, stable=False, source=source.descriptor)
