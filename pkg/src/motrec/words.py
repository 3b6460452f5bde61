"""Alphabets, finite words and lazily generated infinite words.

Symbols are small integer indices into an :class:`Alphabet`'s glyph table.
A :class:`FiniteWord` keeps its indices in a ``bytes`` object, which makes
slicing and hashing of factors cheap.  All text I/O uses plain glyph strings,
one character per symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

MAX_ALPHABET = 64


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("an alphabet needs at least one symbol")
        if len(symbols) > MAX_ALPHABET:
            raise ValueError(f"alphabets are limited to {MAX_ALPHABET} symbols")
        for glyph in symbols:
            if not isinstance(glyph, str) or len(glyph) != 1 or not glyph.isprintable():
                raise ValueError(f"invalid glyph {glyph!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate glyphs in {symbols!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(symbols)})

    @classmethod
    def of(cls, glyphs: Iterable[str]) -> Alphabet:
        return cls(tuple(glyphs))

    @classmethod
    def infer(cls, text: str) -> Alphabet:
        """Sorted alphabet of the glyphs occurring in ``text``."""
        return cls(tuple(sorted(set(text))))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, glyph: object) -> bool:
        return glyph in self._index

    def index(self, glyph: str) -> int:
        try:
            return self._index[glyph]
        except KeyError:
            raise ValueError(f"glyph {glyph!r} not in alphabet {''.join(self.symbols)!r}") from None

    def glyph(self, index: int) -> str:
        return self.symbols[index]

    def with_letter(self, glyph: str) -> Alphabet:
        """This alphabet enlarged by ``glyph`` (unchanged if already present)."""
        if glyph in self:
            return self
        return Alphabet(self.symbols + (glyph,))

    def __str__(self) -> str:
        return "".join(self.symbols)


@dataclass(frozen=True)
class FiniteWord:
    alphabet: Alphabet
    data: bytes

    def __post_init__(self) -> None:
        data = bytes(self.data)
        if data and max(data) >= self.alphabet.size:
            raise ValueError("symbol index out of alphabet range")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_string(cls, text: str, alphabet: Alphabet | None = None) -> FiniteWord:
        if alphabet is None:
            alphabet = Alphabet.infer(text) if text else Alphabet(("a",))
        index = alphabet.index
        return cls(alphabet, bytes(index(ch) for ch in text))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> FiniteWord:
        return cls(alphabet, b"")

    @property
    def length(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return FiniteWord(self.alphabet, self.data[key])
        return self.alphabet.glyph(self.data[key])

    def __str__(self) -> str:
        table = {i: g for i, g in enumerate(self.alphabet.symbols)}
        return self.data.decode("latin-1").translate(table)

    def count(self, glyph: str) -> int:
        if glyph not in self.alphabet:
            return 0
        return self.data.count(self.alphabet.index(glyph))

    def is_prefix_of(self, other: FiniteWord) -> bool:
        return str(other).startswith(str(self))


class WordSource:
    """Deterministic producer of prefixes of one infinite word.

    Subclasses implement :meth:`_generate`, returning at least ``n`` symbol
    indices.  The longest block produced so far is memoized, so repeated and
    nested requests are answered by slicing.
    """

    def __init__(self, descriptor: str, alphabet: Alphabet) -> None:
        self.descriptor = descriptor
        self.alphabet = alphabet
        self._cache = b""

    def _generate(self, n: int) -> bytes:
        raise NotImplementedError

    def prefix(self, n: int) -> FiniteWord:
        if n < 0:
            raise ValueError("prefix length must be nonnegative")
        if len(self._cache) < n:
            data = self._generate(n)
            if len(data) < n:
                raise RuntimeError(f"{self.descriptor}: generator returned a short block")
            self._cache = bytes(data)
        return FiniteWord(self.alphabet, self._cache[:n])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor!r})"


def prefix(source: WordSource, n: int) -> FiniteWord:
    """First ``n`` symbols of the infinite word produced by ``source``."""
    return source.prefix(n)


def occurrences(w: FiniteWord | str, u: FiniteWord | str) -> list[int]:
    """All start positions of ``w`` in ``u``, overlapping occurrences included."""
    w_text, u_text = str(w), str(u)
    if not w_text:
        raise ValueError("cannot locate the empty word")
    found = []
    p = u_text.find(w_text)
    while p != -1:
        found.append(p)
        p = u_text.find(w_text, p + 1)
    return found
