"""Infinite-word families: morphic fixed points, characteristic Sturmian
words, the binary Champernowne word and periodic words.

Every family comes as a plain prefix function and as a :class:`WordSource`.
:func:`parse_source` turns a textual descriptor into a source::

    fibonacci
    sturmian:2,1          directive; the last entry repeats forever
    champernowne
    periodic:ab
    morphic:a=ab;b=a;seed=a
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .words import Alphabet, FiniteWord, WordSource

BINARY = Alphabet(("a", "b"))
BITS = Alphabet(("0", "1"))


@dataclass(frozen=True)
class MorphismSpec:
    alphabet: Alphabet
    images: tuple[bytes, ...]
    seed: int

    def __post_init__(self) -> None:
        if len(self.images) != self.alphabet.size:
            raise ValueError("one image per alphabet symbol is required")
        for image in self.images:
            if not image:
                raise ValueError("morphism images must be nonempty")
            if max(image) >= self.alphabet.size:
                raise ValueError("image uses a symbol outside the alphabet")
        seed_image = self.images[self.seed]
        if seed_image[0] != self.seed or len(seed_image) < 2:
            raise ValueError(
                f"morphism is not prolongable on {self.alphabet.glyph(self.seed)!r}"
            )

    @classmethod
    def from_mapping(cls, images: Mapping[str, str], seed: str) -> MorphismSpec:
        alphabet = Alphabet.infer("".join(images) + "".join(images.values()))
        missing = [g for g in alphabet.symbols if g not in images]
        if missing:
            raise ValueError(f"no image given for {missing!r}")
        if seed not in alphabet:
            raise ValueError(f"seed {seed!r} not in alphabet")
        encoded = tuple(FiniteWord.from_string(images[g], alphabet).data for g in alphabet.symbols)
        return cls(alphabet, encoded, alphabet.index(seed))

    def image(self, glyph: str) -> str:
        data = self.images[self.alphabet.index(glyph)]
        return str(FiniteWord(self.alphabet, data))


FIBONACCI = MorphismSpec.from_mapping({"a": "ab", "b": "a"}, seed="a")


@dataclass(frozen=True)
class SturmianSpec:
    directive: tuple[int, ...]

    def __post_init__(self) -> None:
        directive = tuple(int(d) for d in self.directive)
        if not directive:
            raise ValueError("directive must contain at least one entry")
        if any(d < 1 for d in directive):
            raise ValueError("directive entries must be positive")
        object.__setattr__(self, "directive", directive)

    def entry(self, j: int) -> int:
        return self.directive[min(j, len(self.directive) - 1)]


def _expand_morphic(spec: MorphismSpec, n: int) -> bytes:
    # phi^{j+1}(seed) = phi^j(seed) + phi(tail of phi^j(seed) beyond phi^{j-1}(seed))
    images = spec.images
    word = bytearray(images[spec.seed])
    done = 1
    while len(word) < n:
        tail = bytes(word[done:])
        done = len(word)
        word += b"".join([images[c] for c in tail])
    return bytes(word)


def morphic_prefix(spec: MorphismSpec, n: int) -> FiniteWord:
    """First ``n`` symbols of the fixed point of ``spec`` starting with its seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return FiniteWord(spec.alphabet, _expand_morphic(spec, n)[:n])


def _expand_sturmian(spec: SturmianSpec, n: int) -> bytes:
    # standard words: s_{-1} = b, s_0 = a, s_j = s_{j-1}^{d_j} s_{j-2}
    older, current = b"\x01", b"\x00"
    j = 0
    while len(current) < n:
        older, current = current, current * spec.entry(j) + older
        j += 1
    return current


def sturmian_prefix(spec: SturmianSpec, n: int) -> FiniteWord:
    """First ``n`` symbols of the characteristic Sturmian word of the directive."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return FiniteWord(BINARY, _expand_sturmian(spec, n)[:n])


def _expand_champernowne(n: int) -> bytes:
    parts = []
    total = 0
    i = 0
    while total < n:
        bits = format(i, "b")
        parts.append(bits)
        total += len(bits)
        i += 1
    return "".join(parts).encode("ascii").translate(bytes.maketrans(b"01", b"\x00\x01"))


def champernowne_prefix(n: int) -> FiniteWord:
    """First ``n`` symbols of the concatenation of the binary expansions of 0, 1, 2, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return FiniteWord(BITS, _expand_champernowne(n)[:n])


def periodic_prefix(pattern: FiniteWord, n: int) -> FiniteWord:
    if len(pattern) < 1:
        raise ValueError("periodic pattern must be nonempty")
    if n < 0:
        raise ValueError("n must be nonnegative")
    reps = -(-n // len(pattern))
    return FiniteWord(pattern.alphabet, (pattern.data * reps)[:n])


class _GrowingSource(WordSource):
    # Generation cost is dominated by growth; asking for a little more than
    # requested keeps repeated doublings from regenerating from scratch.
    def _generate(self, n: int) -> bytes:
        return self._expand(max(n, 2 * len(self._cache)))

    def _expand(self, n: int) -> bytes:
        raise NotImplementedError


class MorphicSource(_GrowingSource):
    def __init__(self, spec: MorphismSpec, descriptor: str | None = None) -> None:
        if descriptor is None:
            images = ";".join(f"{g}={spec.image(g)}" for g in spec.alphabet.symbols)
            descriptor = f"morphic:{images};seed={spec.alphabet.glyph(spec.seed)}"
        super().__init__(descriptor, spec.alphabet)
        self.spec = spec

    def _expand(self, n: int) -> bytes:
        return _expand_morphic(self.spec, n)


class SturmianSource(_GrowingSource):
    def __init__(self, spec: SturmianSpec) -> None:
        super().__init__("sturmian:" + ",".join(map(str, spec.directive)), BINARY)
        self.spec = spec

    def _expand(self, n: int) -> bytes:
        return _expand_sturmian(self.spec, n)


class ChampernowneSource(_GrowingSource):
    def __init__(self) -> None:
        super().__init__("champernowne", BITS)

    def _expand(self, n: int) -> bytes:
        return _expand_champernowne(n)


class PeriodicSource(WordSource):
    def __init__(self, pattern: FiniteWord) -> None:
        if len(pattern) < 1:
            raise ValueError("periodic pattern must be nonempty")
        super().__init__(f"periodic:{pattern}", pattern.alphabet)
        self.pattern = pattern

    def _generate(self, n: int) -> bytes:
        return periodic_prefix(self.pattern, n).data


def fibonacci_source() -> MorphicSource:
    return MorphicSource(FIBONACCI, descriptor="fibonacci")


class UnknownSource(ValueError):
    pass


def _parse_morphism(body: str) -> MorphismSpec:
    images: dict[str, str] = {}
    seed = None
    for item in body.split(";"):
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise UnknownSource(f"malformed morphism item {item!r}")
        if key == "seed":
            seed = value
        else:
            images[key] = value
    if seed is None:
        seed = next(iter(images), None)
    if seed is None:
        raise UnknownSource("morphism has no images")
    return MorphismSpec.from_mapping(images, seed)


def parse_source(descriptor: str) -> WordSource:
    """Build a :class:`WordSource` from a descriptor string."""
    kind, _, body = descriptor.strip().partition(":")
    try:
        if kind == "fibonacci" and not body:
            return fibonacci_source()
        if kind == "champernowne" and not body:
            return ChampernowneSource()
        if kind == "sturmian":
            return SturmianSource(SturmianSpec(tuple(int(d) for d in body.split(","))))
        if kind == "periodic" and body:
            return PeriodicSource(FiniteWord.from_string(body))
        if kind == "morphic":
            return MorphicSource(_parse_morphism(body))
    except UnknownSource:
        raise
    except ValueError as exc:
        raise UnknownSource(f"bad source descriptor {descriptor!r}: {exc}") from exc
    raise UnknownSource(f"unknown source descriptor {descriptor!r}")
