"""
Word-problem backends and pair verification.

A backend turns words over its presentation into hashable canonical
elements and multiplies them.  Exact backends decide equality; a rewriting
backend built from an incomplete Knuth-Bendix run can only prove that a
word is trivial, and raises :class:`UndecidableError` otherwise.
"""

from __future__ import annotations

from typing import Hashable

from .extension import ExtensionGroup
from .homology import homology_class_is_zero
from .klein import KLEIN_PRESENTATION, K_ID, k_from_word, k_inv, k_mul
from .rewriting import RewriteSystem, _inverse_string, knuth_bendix, word_to_string
from .words import Presentation, Word, word_inv


class UndecidableError(RuntimeError):
    """The backend cannot decide this instance of the word problem."""


class Backend:
    name = "backend"
    exact = True
    presentation: Presentation

    @property
    def search_generators(self) -> tuple[int, ...]:
        return tuple(range(self.presentation.ngens))

    def element(self, w: Word) -> Hashable:
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def is_identity(self, x) -> bool:
        raise NotImplementedError

    def is_trivial(self, w: Word) -> bool:
        return self.is_identity(self.element(w))


class KleinBackend(Backend):
    name = "klein-closed-form"

    def __init__(self):
        self.presentation = KLEIN_PRESENTATION

    def element(self, w):
        return k_from_word(w)

    def mul(self, x, y):
        return k_mul(x, y)

    def inv(self, x):
        return k_inv(x)

    def is_identity(self, x):
        return x == K_ID


class ExtensionBackend(Backend):
    name = "extension"

    def __init__(self, group: ExtensionGroup):
        self.group = group
        self.presentation = group.presentation

    @property
    def search_generators(self):
        return tuple(sorted(self.group.orbifold_generators + (self.group.h,)))

    def element(self, w):
        return self.group.eval(w)

    def mul(self, x, y):
        return self.group.mul(x, y)

    def inv(self, x):
        return self.group.inv(x)

    def is_identity(self, x):
        return x.is_identity()


class RewritingBackend(Backend):
    name = "rewriting"

    def __init__(self, presentation: Presentation, rws: RewriteSystem | None = None, **limits):
        self.presentation = presentation
        self.rws = rws if rws is not None else knuth_bendix(presentation, **limits)
        self.exact = self.rws.confluent

    def element(self, w):
        if not self.exact:
            raise UndecidableError(f"rewriting system incomplete: {self.rws.reason}")
        return self.rws.reduce(word_to_string(w))

    def mul(self, x, y):
        return self.rws.reduce(x + y)

    def inv(self, x):
        return self.rws.reduce(_inverse_string(x))

    def is_identity(self, x):
        return x == ""

    def is_trivial(self, w):
        if self.rws.proves_trivial(w):
            return True
        if self.exact:
            return False
        # a non-zero homology class certifies non-triviality
        if not homology_class_is_zero(self.presentation, w):
            return False
        raise UndecidableError(f"rewriting system incomplete: {self.rws.reason}")


class SubstitutionBackend(Backend):
    """Evaluate words by substituting generator images into a target backend (e.g. an isomorphism)."""

    def __init__(self, presentation: Presentation, target: Backend, images: dict[str, str], name: str = "substitution"):
        self.presentation = presentation
        self.target = target
        self.exact = target.exact
        self.name = name
        self._images = [target.element(target.presentation.word(images[g])) for g in presentation.generators]
        self._inverses = [target.inv(x) for x in self._images]
        self._one = target.element(Word())

    def element(self, w):
        out = self._one
        for g, e in w.letters:
            base = self._images[g] if e > 0 else self._inverses[g]
            for _ in range(abs(e)):
                out = self.target.mul(out, base)
        return out

    def mul(self, x, y):
        return self.target.mul(x, y)

    def inv(self, x):
        return self.target.inv(x)

    def is_identity(self, x):
        return self.target.is_identity(x)


def verify_pair(backend: Backend, g: Word, c: Word) -> bool:
    """
    True iff the backend proves g != 1 and c^-1 g c g = 1.

    Raises UndecidableError when the backend cannot settle either half.
    """
    if backend.is_trivial(g):
        return False
    return backend.is_trivial(word_inv(c) * g * c * g)
