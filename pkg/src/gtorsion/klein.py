"""
Exact arithmetic in the Klein bottle group K = <a, b | a^-1 b a b = 1>.

Every element is uniquely a^i b^j, and since b a = a b^-1,

    (i, j) * (k, l) = (i + k, (-1)^k j + l).

Python integers are unbounded, so exponents never overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .words import InputError, Presentation, Word

KLEIN_PRESENTATION = Presentation(("a", "b"), (Word(((0, -1), (1, 1), (0, 1), (1, 1))),))


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True, order=True)
class KleinElement:
    i: int = 0
    j: int = 0

    def __mul__(self, other: "KleinElement") -> "KleinElement":
        return k_mul(self, other)

    def __pow__(self, n: int) -> "KleinElement":
        return k_pow(self, n)

    def inverse(self) -> "KleinElement":
        return k_inv(self)

    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def __str__(self) -> str:
        return f"a^{self.i}*b^{self.j}"

    @classmethod
    def parse(cls, text: str) -> "KleinElement":
        m = _ELEMENT_RE.fullmatch(text.strip())
        if m is None:
            raise InputError(f"bad Klein element {text!r}; expected a^i*b^j")
        return cls(int(m.group(1)), int(m.group(2)))

    def to_word(self) -> Word:
        return Word(tuple((g, e) for g, e in ((0, self.i), (1, self.j)) if e))


_ELEMENT_RE = re.compile(r"a\^(-?\d+)\*b\^(-?\d+)")

K_ID = KleinElement(0, 0)
K_A = KleinElement(1, 0)
K_B = KleinElement(0, 1)


def k_mul(x: KleinElement, y: KleinElement) -> KleinElement:
    return KleinElement(x.i + y.i, _sign(y.i) * x.j + y.j)


def k_inv(x: KleinElement) -> KleinElement:
    return KleinElement(-x.i, -_sign(x.i) * x.j)


def k_conj(g: KleinElement, x: KleinElement) -> KleinElement:
    """g^x = x^-1 g x."""
    return k_mul(k_mul(k_inv(x), g), x)


def k_pow(x: KleinElement, n: int) -> KleinElement:
    if n < 0:
        x, n = k_inv(x), -n
    out, base = K_ID, x
    while n:
        if n & 1:
            out = k_mul(out, base)
        base = k_mul(base, base)
        n >>= 1
    return out


def k_from_word(w: Word) -> KleinElement:
    """Evaluate a word over (a, b) in normal form."""
    out = K_ID
    for gen, exp in w.letters:
        if gen not in (0, 1):
            raise InputError(f"unknown generator id {gen} for the Klein group")
        out = k_mul(out, k_pow(K_A if gen == 0 else K_B, exp))
    return out


def k_is_gt_pair(g: KleinElement, c: KleinElement) -> bool:
    """True iff g != 1 and g^c g = 1."""
    return not g.is_identity() and k_mul(k_conj(g, c), g).is_identity()


def k_commutes(x: KleinElement, g: KleinElement) -> bool:
    return k_mul(x, g) == k_mul(g, x)


k_centralizer_member = k_commutes


@dataclass(frozen=True)
class KleinPair:
    g: KleinElement
    c: KleinElement

    @property
    def verified(self) -> bool:
        return k_is_gt_pair(self.g, self.c)

    def __str__(self) -> str:
        return f"({self.g}, {self.c})"


def k_enumerate_gt_pairs(bound: int) -> set[KleinPair]:
    """All pairs in the box |i|,|j|,|k|,|l| <= bound, found by testing every candidate."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = range(-bound, bound + 1)
    out = set()
    for i in rng:
        for j in rng:
            g = KleinElement(i, j)
            for k in rng:
                for l in rng:
                    c = KleinElement(k, l)
                    if k_is_gt_pair(g, c):
                        out.add(KleinPair(g, c))
    return out


def k_is_primitive_pair(p: KleinPair) -> bool:
    """
    No h with h^n = g (|n| >= 2) such that (h, c) is again a pair.

    The a-exponent of h^n is n times that of h, so a root of g = b^j is a
    b-power b^m with n m = j; hence |n| <= |j| bounds the search exactly.
    """
    if not p.verified:
        raise ValueError(f"{p} is not a generalized torsion pair")
    j = p.g.j
    for n in range(2, abs(j) + 1):
        if j % n:
            continue
        for sign in (1, -1):
            h = KleinElement(0, sign * j // n)
            if k_pow(h, sign * n) == p.g and k_is_gt_pair(h, p.c):
                return False
    return True
