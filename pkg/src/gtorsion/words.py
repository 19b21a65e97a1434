"""
Words over a finite generating set and finite presentations.

A word is stored as a tuple of ``(generator id, exponent)`` runs, always
freely reduced: adjacent runs have distinct generators and no exponent is
zero.  The empty tuple is the identity.

Text format for words is ``a^-1*b^2*a``; the identity prints as ``1``.
A presentation file looks like::

    gens: a b
    rel: a^-1*b*a*b
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class InputError(ValueError):
    """Malformed user input (unknown generator, bad syntax, bad data)."""


Letters = tuple[tuple[int, int], ...]


def free_reduce(letters: Iterable[tuple[int, int]], ngens: int | None = None) -> "Word":
    """Freely reduce a raw sequence of ``(generator, exponent)`` pairs."""
    stack: list[list[int]] = []
    for gen, exp in letters:
        if ngens is not None and not 0 <= gen < ngens:
            raise InputError(f"unknown generator id {gen}")
        if gen < 0:
            raise InputError(f"unknown generator id {gen}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return Word(tuple((g, e) for g, e in stack))


@dataclass(frozen=True, order=False)
class Word:
    letters: Letters = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.letters:
            if exp == 0 or gen == prev:
                raise ValueError(f"word not freely reduced: {self.letters}")
            prev = gen

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        """Build from flat signed letters: ``g+1`` for a generator, ``-(g+1)`` for its inverse."""
        return free_reduce((abs(x) - 1, 1 if x > 0 else -1) for x in letters)

    @classmethod
    def gen(cls, g: int, exp: int = 1) -> "Word":
        return cls(((g, exp),)) if exp else cls()

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return word_mul(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return word_inv(self) ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "Word":
        return word_inv(self)

    def flat(self) -> tuple[int, ...]:
        """Signed-letter expansion, inverse of :meth:`from_letters`."""
        out = []
        for gen, exp in self.letters:
            out.extend([gen + 1 if exp > 0 else -(gen + 1)] * abs(exp))
        return tuple(out)

    def generators(self) -> set[int]:
        return {g for g, _ in self.letters}

    def exponent_sums(self, ngens: int) -> list[int]:
        sums = [0] * ngens
        for gen, exp in self.letters:
            sums[gen] += exp
        return sums


IDENTITY = Word()


def word_mul(w1: Word, w2: Word) -> Word:
    return free_reduce(w1.letters + w2.letters)


def word_inv(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.letters)))


def word_conj(g: Word, x: Word) -> Word:
    """``g^x = x^-1 g x``."""
    return free_reduce(word_inv(x).letters + g.letters + x.letters)


def word_commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return free_reduce(x.letters + y.letters + word_inv(x).letters + word_inv(y).letters)


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TERM_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise InputError(f"duplicate generator names: {self.generators}")
        for name in self.generators:
            if not _NAME_RE.fullmatch(name):
                raise InputError(f"bad generator name {name!r}")
        n = len(self.generators)
        for rel in self.relators:
            for gen, _ in rel.letters:
                if not 0 <= gen < n:
                    raise InputError(f"relator references unknown generator id {gen}")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.generators)})

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown generator {name!r}") from None

    def word(self, text: str) -> Word:
        """Parse ``a^-1*b^2*a`` (or ``1`` for the identity)."""
        return parse_word(text, self)

    def gen(self, name: str, exp: int = 1) -> Word:
        return Word.gen(self.index(name), exp)

    def format_word(self, w: Word) -> str:
        return format_word(w, self.generators)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + self.format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        return parse_presentation(text)


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w.letters:
        return "1"
    terms = []
    for gen, exp in w.letters:
        terms.append(names[gen] if exp == 1 else f"{names[gen]}^{exp}")
    return "*".join(terms)


def parse_word(text: str, pres: Presentation) -> Word:
    text = text.strip()
    if text == "1":
        return IDENTITY
    if not text or any(ch.isspace() for ch in text):
        raise InputError(f"bad word {text!r}")
    raw = []
    for term in text.split("*"):
        m = _TERM_RE.fullmatch(term)
        if m is None:
            raise InputError(f"bad term {term!r} in word {text!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        raw.append((pres.index(m.group(1)), exp))
    return free_reduce(raw, pres.ngens)


def parse_presentation(text: str) -> Presentation:
    gens = None
    rel_texts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise InputError(f"line {lineno}: expected 'gens:' or 'rel:'")
        key = key.strip()
        if key == "gens":
            if gens is not None:
                raise InputError(f"line {lineno}: duplicate gens line")
            if rel_texts:
                raise InputError(f"line {lineno}: gens must come first")
            gens = tuple(rest.split())
        elif key == "rel":
            if gens is None:
                raise InputError(f"line {lineno}: rel before gens")
            rel_texts.append((lineno, rest.strip()))
        else:
            raise InputError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise InputError("missing gens line")
    pres = Presentation(gens)
    rels = []
    for lineno, rt in rel_texts:
        try:
            rels.append(parse_word(rt, pres))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return Presentation(gens, tuple(rels))


def letter_order_key(gen: int, exp_sign: int) -> int:
    # generator 0 < generator 0 inverse < generator 1 < ...
    return 2 * gen + (1 if exp_sign < 0 else 0)


def enumerate_words(ngens: int, max_len: int) -> Iterator[Word]:
    """Every freely reduced word of length <= max_len, once each, in shortlex order."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    yield IDENTITY
    # letters as codes 2g / 2g+1; code c and c^1 are mutually inverse
    codes = range(2 * ngens)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for seq in frontier:
            last = seq[-1] if seq else None
            for c in codes:
                if last is not None and c == last ^ 1:
                    continue
                nxt.append(seq + (c,))
        frontier = nxt
        for seq in frontier:
            yield free_reduce((c >> 1, -1 if c & 1 else 1) for c in seq)


def count_reduced_words(ngens: int, max_len: int) -> int:
    """Closed-form count: 1 + sum over k of 2n (2n-1)^(k-1)."""
    total = 1
    for k in range(1, max_len + 1):
        total += 2 * ngens * (2 * ngens - 1) ** (k - 1)
    return total
