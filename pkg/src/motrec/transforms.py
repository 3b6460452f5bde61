"""k-to-k substitution of a letter power.

The source word is read as ``x_0 w_1 x_1 w_2 x_2 ...`` with ``|w_i| = k``:
every symbol at a position divisible by ``k + 1`` is replaced by ``letter**l``
and the blocks in between are copied.  The letter is *external* when it lies
outside the source alphabet and *internal* otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import FiniteWord, WordSource


@dataclass(frozen=True)
class SubstitutionSpec:
    k: int
    l: int
    letter: str
    internal: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.l < 1:
            raise ValueError("the power l must be at least 1")
        if len(self.letter) != 1:
            raise ValueError("the substituted letter must be a single glyph")

    @property
    def period(self) -> int:
        """Length of one ``letter**l w_i`` block of the output."""
        return self.k + self.l

    def check(self, alphabet) -> None:
        inside = self.letter in alphabet
        if self.internal and not inside:
            raise ValueError(
                f"letter {self.letter!r} is not in the source alphabet {alphabet}; drop --internal"
            )
        if not self.internal and inside:
            raise ValueError(
                f"letter {self.letter!r} belongs to the source alphabet {alphabet}; use --internal"
            )

    def describe(self) -> str:
        kind = "internal" if self.internal else "external"
        return f"S_{self.k}^{{{self.letter}^{self.l}}} ({kind})"


@dataclass(frozen=True)
class DecompositionView:
    k: int
    heads: tuple[int, ...]
    blocks: tuple[FiniteWord, ...]


def decompose(u: FiniteWord, k: int) -> DecompositionView:
    """Substituted positions ``0, k+1, 2(k+1), ...`` and the kept blocks after each."""
    step = k + 1
    heads = tuple(range(0, len(u), step))
    blocks = tuple(u[p + 1:p + step] for p in heads)
    return DecompositionView(k, heads, blocks)


def transformed_length(source_length: int, k: int, l: int) -> int:
    return source_length + (l - 1) * (-(-source_length // (k + 1)))


def substitute(u: FiniteWord, spec: SubstitutionSpec) -> FiniteWord:
    """Apply the substitution to a finite word.

    A trailing partial block keeps its leading substitution, so the result is
    exactly the prefix of the infinite transform generated by ``u``.
    """
    spec.check(u.alphabet)
    alphabet = u.alphabet.with_letter(spec.letter)
    power = bytes([alphabet.index(spec.letter)]) * spec.l
    step = spec.k + 1
    data = u.data
    out = []
    for p in range(0, len(data), step):
        out.append(power)
        out.append(data[p + 1:p + step])
    return FiniteWord(alphabet, b"".join(out))


class TransformedSource(WordSource):
    """Infinite word obtained by substituting into another source."""

    def __init__(self, base: WordSource, spec: SubstitutionSpec) -> None:
        spec.check(base.alphabet)
        self.base = base
        self.spec = spec
        kind = "int" if spec.internal else "ext"
        descriptor = f"{base.descriptor}|k={spec.k},l={spec.l},x={spec.letter},{kind}"
        super().__init__(descriptor, base.alphabet.with_letter(spec.letter))

    def _generate(self, n: int) -> bytes:
        k, l = self.spec.k, self.spec.l
        blocks = -(-n // (k + l))
        source = self.base.prefix(blocks * (k + 1))
        return substitute(source, self.spec).data


@dataclass(frozen=True)
class OriginLengths:
    """Source-factor lengths able to produce an output factor of a given length.

    ``interior`` holds the lengths reached by output windows that do not cut
    a run of the substituted letter at either end; ``lengths`` is the closed
    interval covering every window, where cut runs at the ends are counted
    both with and without their source position.
    """

    lengths: frozenset[int]
    interior: frozenset[int]

    @property
    def boundary(self) -> frozenset[int]:
        return self.lengths - self.interior


def origin_lengths(n_v: int, k: int, l: int) -> OriginLengths:
    if n_v < 1:
        raise ValueError("n_v must be positive")
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    period = k + l
    seen: set[int] = set()
    interior: set[int] = set()
    # output offsets 0..l-1 lie in a letter run, l..l+k-1 in a kept block
    for offset in range(period):
        start, end = offset, offset + n_v
        covering = 0
        cut = 0
        block = 0
        while block * period < end:
            run_lo, run_hi = block * period, block * period + l
            if run_lo < end and run_hi > start:
                covering += 1
                if start > run_lo or end < run_hi:
                    cut += 1
            kept_lo, kept_hi = run_hi, run_hi + k
            covering += max(0, min(end, kept_hi) - max(start, kept_lo))
            block += 1
        seen.update((covering - cut, covering))
        if cut == 0:
            interior.add(covering)
    lo, hi = min(seen), max(seen)
    return OriginLengths(frozenset(range(lo, hi + 1)), frozenset(interior))
