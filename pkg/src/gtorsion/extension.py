"""
Exact word problem for Seifert pieces with non-empty boundary.

Dropping the last boundary generator d_k through the long relator leaves

    1 -> <h> -> pi_1 -> Z/p_1 * ... * Z/p_n * F_r -> 1

where h is central over an orientable base and inverted by each crosscap
generator otherwise.  An element is stored as ``(orb, fib)`` meaning
lift(orb) * h^fib, with ``orb`` in free-product normal form and each cyclic
syllable exponent in (-p/2, p/2].  Whenever a cyclic exponent leaves that
range by q*p, q*alpha is charged to ``fib`` (c^p = h^alpha).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .sfs import SeifertData, seifert_presentation
from .words import InputError, Presentation, Word

Syllables = tuple[tuple[int, int], ...]


class UnsupportedBackendError(ValueError):
    """The piece has no exact backend here (closed base)."""


@dataclass(frozen=True)
class OrbifoldGroup:
    cyclic_factors: tuple[int, ...]
    free_rank: int
    orientation_character: dict = field(hash=False)


@dataclass(frozen=True)
class ExtensionElement:
    orb: Syllables = ()
    fib: int = 0
    group: "ExtensionGroup | None" = field(default=None, compare=False, repr=False)

    def __mul__(self, other: "ExtensionElement") -> "ExtensionElement":
        return ext_mul(self, other)

    def inverse(self) -> "ExtensionElement":
        return ext_inv(self)

    def is_identity(self) -> bool:
        return not self.orb and self.fib == 0

    def __str__(self) -> str:
        if self.group is None:
            return f"({self.orb}, h^{self.fib})"
        return f"({self.group.presentation.format_word(Word(self.orb))}, h^{self.fib})"


def _canonical(e: int, p: int) -> tuple[int, int]:
    """Split e = q*p + r with r in (-p/2, p/2]."""
    r = e % p
    if 2 * r > p:
        r -= p
    return (e - r) // p, r


class ExtensionGroup:
    """
    Exact arithmetic for pi_1 of a Seifert piece with boundary.

    Words are taken over the full Seifert presentation (including h and the
    eliminated boundary generator), so relators of that presentation
    evaluate to the identity.
    """

    def __init__(self, data: SeifertData):
        if data.boundary_count < 1:
            raise UnsupportedBackendError("extension backend needs a base with boundary")
        self.data = data
        self.presentation: Presentation = seifert_presentation(data)
        names = self.presentation.generators
        self.h = names.index("h")
        self.eliminated = names.index(f"d{data.boundary_count}")
        # per generator: (cyclic order or 0, alpha, orientation character)
        self._order = [0] * len(names)
        self._alpha = [0] * len(names)
        self._char = [1] * len(names)
        for j, f in enumerate(data.fibers, 1):
            gi = names.index(f"c{j}")
            self._order[gi], self._alpha[gi] = f.p, f.alpha
        if not data.base_orientable:
            for i in range(1, data.base_genus + 1):
                self._char[names.index(f"v{i}")] = -1
        self.orbifold_generators = tuple(
            i for i in range(len(names)) if i not in (self.h, self.eliminated))
        free_rank = sum(1 for i in self.orbifold_generators if not self._order[i])
        self.orbifold = OrbifoldGroup(
            tuple(f.p for f in data.fibers), free_rank,
            {names[i]: self._char[i] for i in self.orbifold_generators})
        self.identity = ExtensionElement((), 0, self)
        self._images: list[ExtensionElement] = []
        for i in range(len(names)):
            if i == self.h:
                self._images.append(ExtensionElement((), 1, self))
            elif i == self.eliminated:
                self._images.append(None)
            else:
                self._images.append(self._from_syllables(((i, 1),)))
        # d_k = (prefix of the long relator)^-1 h^b
        long_rel = self.presentation.relators[-1]
        prefix = Word(tuple((g, e) for g, e in long_rel.letters if g not in (self.h, self.eliminated)))
        self._images[self.eliminated] = self.mul(self.inv(self.eval(prefix)), self.h_power(data.euler_b))

    # arithmetic -----------------------------------------------------------

    def character(self, orb: Syllables) -> int:
        sign = 1
        for g, e in orb:
            if self._char[g] < 0 and e % 2:
                sign = -sign
        return sign

    def _push(self, stack: list, t: int, gen: int, e: int) -> int:
        # right-multiply lift(stack) h^t by gen^e; returns the new fiber exponent
        if self._char[gen] < 0 and e % 2:
            t = -t
        if stack and stack[-1][0] == gen:
            e += stack.pop()[1]
        p = self._order[gen]
        if p:
            q, e = _canonical(e, p)
            t += q * self._alpha[gen]
        if e:
            stack.append((gen, e))
        return t

    def _from_syllables(self, syllables, fib: int = 0) -> ExtensionElement:
        stack: list = []
        t = 0
        for g, e in syllables:
            t = self._push(stack, t, g, e)
        return ExtensionElement(tuple(stack), t + fib, self)

    def _check(self, *xs: ExtensionElement):
        for x in xs:
            if x.group is not self:
                raise ValueError("extension elements from different groups")

    def mul(self, x: ExtensionElement, y: ExtensionElement) -> ExtensionElement:
        self._check(x, y)
        stack = list(x.orb)
        t = x.fib
        for g, e in y.orb:
            t = self._push(stack, t, g, e)
        return ExtensionElement(tuple(stack), t + y.fib, self)

    def inv(self, x: ExtensionElement) -> ExtensionElement:
        self._check(x)
        stack: list = []
        t = 0
        for g, e in reversed(x.orb):
            t = self._push(stack, t, g, -e)
        return ExtensionElement(tuple(stack), t - self.character(x.orb) * x.fib, self)

    def conj(self, g: ExtensionElement, x: ExtensionElement) -> ExtensionElement:
        return self.mul(self.mul(self.inv(x), g), x)

    def power(self, x: ExtensionElement, n: int) -> ExtensionElement:
        if n < 0:
            x, n = self.inv(x), -n
        out, base = self.identity, x
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def h_power(self, n: int) -> ExtensionElement:
        return ExtensionElement((), n, self)

    def eval(self, w: Word) -> ExtensionElement:
        out = self.identity
        for g, e in w.letters:
            if not 0 <= g < len(self._images):
                raise InputError(f"unknown generator id {g}")
            out = self.mul(out, self.power(self._images[g], e))
        return out

    def word(self, text: str) -> ExtensionElement:
        return self.eval(self.presentation.word(text))

    def to_word(self, x: ExtensionElement) -> Word:
        """A presentation word for x (the lift followed by h^fib)."""
        letters = x.orb + (((self.h, x.fib),) if x.fib else ())
        return Word(letters)


def ext_group_from_seifert(data: SeifertData) -> ExtensionGroup:
    return ExtensionGroup(data)


def ext_mul(x: ExtensionElement, y: ExtensionElement) -> ExtensionElement:
    if x.group is None or x.group is not y.group:
        raise ValueError("extension elements from different groups")
    return x.group.mul(x, y)


def ext_inv(x: ExtensionElement) -> ExtensionElement:
    return x.group.inv(x)


def ext_conj(g: ExtensionElement, x: ExtensionElement) -> ExtensionElement:
    if g.group is None or g.group is not x.group:
        raise ValueError("extension elements from different groups")
    return g.group.conj(g, x)


def ext_eval(group: ExtensionGroup, w: Word) -> ExtensionElement:
    return group.eval(w)
