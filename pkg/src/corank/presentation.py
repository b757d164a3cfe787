"""Finite group presentations: words, parsing, printing and products.

A relator is stored as a tuple of ``(generator_index, exponent)`` syllables,
so two presentations that differ only in generator names have equal relators.

>>> p = parse("< a, b | a b a^-1 b^-1 >")
>>> p.relators[0].syllables
((0, 1), (1, 1), (0, -1), (1, -1))
>>> format_presentation(free_product(parse("<a|a^2>"), parse("<a|a^2>")))
"< a, a' | a^2, a'^2 >"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "ParseError",
    "Word",
    "Presentation",
    "parse",
    "format_presentation",
    "format_word",
    "free_product",
    "direct_product",
    "commutator",
]

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


class ParseError(ValueError):
    """Raised for malformed presentation text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.message = message
        self.pos = pos


def _reduce(syllables: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            total = stack[-1][1] + exp
            stack.pop()
            if total:
                stack.append((gen, total))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for i, (g, e) in enumerate(syl):
            if e == 0:
                raise ValueError("syllable exponents must be nonzero")
            if g < 0:
                raise ValueError("generator indices must be nonnegative")
            if i and syl[i - 1][0] == g:
                raise ValueError("adjacent syllables must use distinct generators")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def reduced(cls, syllables: Iterable[tuple[int, int]]) -> Word:
        """Build a word from arbitrary syllables, merging and cancelling as needed."""
        return cls(_reduce(syllables))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> Word:
        """Signed 1-based letters, ``-k`` meaning the inverse of generator ``k - 1``."""
        return cls.reduced((abs(x) - 1, 1 if x > 0 else -1) for x in letters)

    def __len__(self) -> int:
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: Word) -> Word:
        return Word.reduced(self.syllables + other.syllables)

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def conjugate(self, gen: int, exp: int = 1) -> Word:
        """Return ``g^exp * self * g^-exp``."""
        return Word.reduced(((gen, exp),) + self.syllables + ((gen, -exp),))

    def shift(self, offset: int) -> Word:
        return Word(tuple((g + offset, e) for g, e in self.syllables))

    def max_generator(self) -> int:
        return max((g for g, _ in self.syllables), default=-1)

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.syllables if g == gen)


def commutator(x: int, y: int) -> Word:
    """The word ``x y x^-1 y^-1``."""
    return Word(((x, 1), (y, 1), (x, -1), (y, -1)))


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators; empty relators are dropped on construction."""

    generators: tuple[str, ...] = ()
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        seen = set()
        for name in gens:
            if not name or not isinstance(name, str):
                raise ValueError("generator names must be non-empty strings")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        rels = tuple(w if isinstance(w, Word) else Word.reduced(w) for w in self.relators)
        rels = tuple(w for w in rels if w)
        for w in rels:
            if w.max_generator() >= len(gens):
                raise ValueError("relator refers to a generator index out of range")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def renamed(self, names: Sequence[str]) -> Presentation:
        if len(names) != self.ngens:
            raise ValueError("need exactly one name per generator")
        return Presentation(tuple(names), self.relators)

    def __str__(self) -> str:
        return format_presentation(self)


# -- text format -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z][A-Za-z0-9_']*)
  | (?P<int>-?[0-9]+)
  | (?P<punct>[<>|,^])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            tokens.append((value if kind == "punct" else kind, value, pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def presentation(self) -> Presentation:
        self.take("<")
        names: list[str] = []
        index: dict[str, int] = {}
        if self.kind == "name":
            while True:
                _, name, pos = self.take("name")
                if name in index:
                    raise ParseError(f"duplicate generator name {name!r}", pos)
                index[name] = len(names)
                names.append(name)
                if self.kind != ",":
                    break
                self.take(",")
        self.take("|")
        relators: list[Word] = []
        if self.kind == "name":
            while True:
                relators.append(self.word(index))
                if self.kind != ",":
                    break
                self.take(",")
        self.take(">")
        self.take("eof")
        return Presentation(tuple(names), tuple(relators))

    def word(self, index: dict[str, int]) -> Word:
        syllables = []
        while self.kind == "name":
            _, name, pos = self.take("name")
            if name not in index:
                raise ParseError(f"unknown generator {name!r}", pos)
            exp = 1
            if self.kind == "^":
                self.take("^")
                _, value, ipos = self.take("int")
                exp = int(value)
                if exp == 0:
                    raise ParseError("exponent must be nonzero", ipos)
            syllables.append((index[name], exp))
        if not syllables:
            tok = self.tokens[self.i]
            raise ParseError("expected a relator word", tok[2])
        return Word.reduced(syllables)


def parse(text: str) -> Presentation:
    """Parse ``< gens | relators >`` text into a :class:`Presentation`."""
    return _Parser(text).presentation()


def format_word(word: Word, generators: Sequence[str]) -> str:
    parts = []
    for g, e in word.syllables:
        parts.append(generators[g] if e == 1 else f"{generators[g]}^{e}")
    return " ".join(parts)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(w, p.generators) for w in p.relators)
    left = f"< {gens} |" if gens else "< |"
    return f"{left} {rels} >" if rels else f"{left} >"


# -- products ----------------------------------------------------------------


def _merged_names(first: Sequence[str], second: Sequence[str]) -> list[str]:
    taken = set(first)
    used = set(first) | set(second)
    out = []
    for name in second:
        if name in taken:
            new = name + "'"
            while new in used:
                new += "'"
            name = new
        used.add(name)
        taken.add(name)
        out.append(name)
    return out


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    """Disjoint union of generators and relators; clashing names in ``p2`` get primes."""
    names = list(p1.generators) + _merged_names(p1.generators, p2.generators)
    shifted = tuple(w.shift(p1.ngens) for w in p2.relators)
    return Presentation(tuple(names), p1.relators + shifted)


def direct_product(p1: Presentation, p2: Presentation) -> Presentation:
    """Free product plus a commutator ``x y x^-1 y^-1`` for each cross pair."""
    base = free_product(p1, p2)
    n1 = p1.ngens
    extra = tuple(commutator(x, n1 + y) for x, y in product(range(n1), range(p2.ngens)))
    return Presentation(base.generators, base.relators + extra)
