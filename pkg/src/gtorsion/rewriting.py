"""
Shortlex string rewriting and bounded Knuth-Bendix completion.

Inside the engine a word is a ``str`` whose characters are letter codes
``2*g`` (generator g) and ``2*g + 1`` (its inverse), offset into a private
code-point range.  Comparing such strings by ``(len, str)`` is exactly the
shortlex order with alphabet ``g0 < g0^-1 < g1 < g1^-1 < ...``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .words import Presentation, Word, free_reduce

_BASE = 0x100

DEFAULT_LIMITS = {"max_rules": 1024, "max_rule_len": 64, "max_iterations": 100_000}


class NotConfluentError(RuntimeError):
    """normal_form was asked of a system that did not complete."""


def word_to_string(w: Word) -> str:
    chars = []
    for gen, exp in w.letters:
        chars.append(chr(_BASE + 2 * gen + (exp < 0)) * abs(exp))
    return "".join(chars)


def string_to_word(s: str) -> Word:
    return free_reduce(((ord(ch) - _BASE) >> 1, -1 if (ord(ch) - _BASE) & 1 else 1) for ch in s)


def _inverse_string(s: str) -> str:
    return "".join(chr(_BASE + ((ord(ch) - _BASE) ^ 1)) for ch in reversed(s))


def _key(s: str):
    return (len(s), s)


@dataclass
class RewriteSystem:
    ngens: int
    rules: list[tuple[str, str]]
    confluent: bool
    reason: str = ""
    _table: dict = field(default_factory=dict, repr=False, compare=False)
    _lens: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        self._reindex()

    def _reindex(self):
        self._table = dict(self.rules)
        self._lens = tuple(sorted({len(lhs) for lhs, _ in self.rules}))

    def reduce(self, s: str) -> str:
        """Rewrite to an irreducible string.  Valid on partial systems too."""
        # out stays irreducible, so a new redex can only end at its last letter
        table, lens = self._table, self._lens
        out = ""
        pending = list(reversed(s))
        while pending:
            out += pending.pop()
            n = len(out)
            for k in lens:
                if k > n:
                    break
                rhs = table.get(out[n - k:])
                if rhs is not None:
                    out = out[:n - k]
                    pending.extend(reversed(rhs))
                    break
        return out

    def reduce_word(self, w: Word) -> Word:
        return string_to_word(self.reduce(word_to_string(w)))

    def normal_form(self, w: Word) -> Word:
        return normal_form(self, w)

    def proves_trivial(self, w: Word) -> bool:
        """True only if w rewrites to the empty word (sound for partial systems)."""
        return self.reduce(word_to_string(w)) == ""

    def rule_words(self) -> list[tuple[Word, Word]]:
        return [(string_to_word(l), string_to_word(r)) for l, r in self.rules]


def normal_form(rws: RewriteSystem, w: Word) -> Word:
    if not rws.confluent:
        raise NotConfluentError(f"rewrite system is not confluent ({rws.reason})")
    return rws.reduce_word(w)


def _overlaps(l1: str, r1: str, l2: str, r2: str):
    """Critical pairs where a proper suffix of l1 is a prefix of l2."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield r1 + l2[k:], l1[:-k] + r2


def knuth_bendix(pres: Presentation, max_rules: int | None = None, max_rule_len: int | None = None,
                 max_iterations: int | None = None) -> RewriteSystem:
    """
    Complete the group presentation to a shortlex rewriting system.

    Free cancellation rules ``x X -> 1`` and ``X x -> 1`` are seeded for every
    generator.  Running out of any limit is not an error: the partial system
    is returned with ``confluent=False``.  A partial system may still be used
    to show a word is trivial (it rewrites to the empty string), never that it
    is non-trivial.
    """
    max_rules = DEFAULT_LIMITS["max_rules"] if max_rules is None else max_rules
    max_rule_len = DEFAULT_LIMITS["max_rule_len"] if max_rule_len is None else max_rule_len
    max_iterations = DEFAULT_LIMITS["max_iterations"] if max_iterations is None else max_iterations
    if min(max_rules, max_rule_len, max_iterations) <= 0:
        raise ValueError("limits must be positive")

    n = pres.ngens
    rws = RewriteSystem(n, [], confluent=False)
    rules: dict[str, str] = {}
    queue: list = []
    counter = 0

    def push(u: str, v: str):
        nonlocal counter
        if u != v:
            heapq.heappush(queue, (max(len(u), len(v)), counter, u, v))
            counter += 1

    for g in range(n):
        x, X = chr(_BASE + 2 * g), chr(_BASE + 2 * g + 1)
        push(x + X, "")
        push(X + x, "")
    for rel in pres.relators:
        push(word_to_string(rel), "")

    def sync():
        rws.rules = list(rules.items())
        rws._reindex()

    truncated = False
    iterations = 0
    while True:
        while queue:
            iterations += 1
            if iterations > max_iterations:
                sync()
                rws.reason = "max_iterations exhausted"
                return rws
            _, _, u, v = heapq.heappop(queue)
            u, v = rws.reduce(u), rws.reduce(v)
            if u == v:
                continue
            lhs, rhs = (u, v) if _key(u) > _key(v) else (v, u)
            if len(lhs) > max_rule_len:
                truncated = True
                continue
            # interreduce: drop rules whose lhs the new rule can rewrite
            for l0, r0 in list(rules.items()):
                if lhs in l0:
                    del rules[l0]
                    push(l0, r0)
            rules[lhs] = rhs
            sync()
            for l0 in list(rules):
                r0 = rules[l0]
                if lhs in r0:
                    rules[l0] = rws.reduce(r0)
            sync()
            if len(rules) > max_rules:
                rws.reason = "max_rules exhausted"
                return rws
            for l0, r0 in list(rules.items()):
                for a, b in _overlaps(lhs, rules[lhs], l0, r0):
                    push(a, b)
                if l0 != lhs:
                    for a, b in _overlaps(l0, r0, lhs, rules[lhs]):
                        push(a, b)
        if truncated:
            break
        # confirm local confluence on the final rule set before claiming it
        for l1, r1 in rules.items():
            for l2, r2 in rules.items():
                for a, b in _overlaps(l1, r1, l2, r2):
                    if rws.reduce(a) != rws.reduce(b):
                        push(a, b)
        if not queue:
            break
    sync()
    if truncated:
        rws.reason = "max_rule_len exceeded"
        return rws
    rws.rules.sort(key=lambda r: _key(r[0]))
    rws._reindex()
    rws.confluent = True
    return rws
