"""Brute-force verification on explicit word sets.

Nothing here uses the automaton algorithms: the plant is consulted only
through membership runs, and prefixes, projections and swaps are computed
word by word.  Properties are checked inside the bounded universe Σ^{≤n};
for controllability the single uncontrollable step past a prefix is also
examined, which makes the check exact whenever L(G) fits in the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from suprema.lang import Alphabet, LanguageError, Word
from suprema.solvers.problem import PROPERTIES, SynthesisProblem

MAX_SUBSET_ELEMENTS = 20


@dataclass(frozen=True)
class BoundedUniverse:
    alphabet: Alphabet
    max_len: int
    strings: tuple[Word, ...]

    @classmethod
    def build(cls, alphabet: Alphabet, max_len: int) -> BoundedUniverse:
        words: list[Word] = [()]
        layer: list[Word] = [()]
        for _ in range(max_len):
            layer = [w + (s,) for w in layer for s in alphabet.symbols]
            words.extend(layer)
        return cls(alphabet, max_len, tuple(words))

    def __len__(self) -> int:
        return len(self.strings)


def project_word(w: Word, observable: frozenset[str]) -> Word:
    return tuple(s for s in w if s in observable)


def prefixes(w: Word) -> list[Word]:
    return [w[:i] for i in range(len(w) + 1)]


def prefix_set(words: Iterable[Word]) -> set[Word]:
    out: set[Word] = set()
    for w in words:
        out.update(prefixes(w))
    return out


class _Checker:
    """Per-problem caches for membership and projection."""

    def __init__(self, problem: SynthesisProblem, bound: int):
        self.problem = problem
        self.alphabet = problem.alphabet
        self.universe = BoundedUniverse.build(problem.alphabet, bound)
        self._closed: dict[Word, bool] = {}
        self._marked: dict[Word, bool] = {}
        obs = self.alphabet.observable
        self.projection = {w: project_word(w, obs) for w in self.universe.strings}

    def in_closed(self, w: Word) -> bool:
        hit = self._closed.get(w)
        if hit is None:
            hit = self._closed[w] = self.problem.plant_closed.accepts(w)
        return hit

    def in_marked(self, w: Word) -> bool:
        hit = self._marked.get(w)
        if hit is None:
            hit = self._marked[w] = self.problem.plant_marked.accepts(w)
        return hit

    def first(self, bad: Iterable[Word]) -> Word | None:
        bad = list(bad)
        return min(bad, key=self.alphabet.sort_key) if bad else None

    def _normal_within(self, k: set[Word], member) -> Word | None:
        outside = self.first(w for w in k if not member(w))
        if outside is not None:
            return outside
        seen = {project_word(w, self.alphabet.observable) for w in k}
        return self.first(
            w for w in self.universe.strings
            if member(w) and self.projection[w] in seen and w not in k
        )

    def check(self, k: set[Word], prop: str) -> Word | None:
        """Return a violating word, or ``None`` if ``k`` has the property."""
        if prop == "normal":
            return self._normal_within(k, self.in_marked)
        if prop == "prefix_normal":
            return self._normal_within(prefix_set(k), self.in_closed)
        if prop == "controllable":
            outside = self.first(w for w in k if not self.in_closed(w))
            if outside is not None:
                return outside
            kbar = prefix_set(k)
            uc = [s for s in self.alphabet.symbols if s in self.alphabet.uncontrollable]
            return self.first(
                w + (s,) for w in kbar for s in uc
                if w + (s,) not in kbar and self.in_closed(w + (s,))
            )
        if prop == "l_closed":
            outside = self.first(w for w in k if not self.in_marked(w))
            if outside is not None:
                return outside
            return self.first(p for p in prefix_set(k) if p not in k and self.in_marked(p))
        if prop == "prefix_closed":
            return self.first(p for p in prefix_set(k) if p not in k)
        if prop == "trace_closed":
            independence = self.problem.independence
            if independence is None:
                raise LanguageError("trace_closed needs an independence relation")
            # closure under single adjacent swaps is equivalent to trace closure
            return self.first(
                w[:j] + (w[j + 1], w[j]) + w[j + 2:]
                for w in k
                for j in range(len(w) - 1)
                if independence.independent(w[j], w[j + 1])
                and w[:j] + (w[j + 1], w[j]) + w[j + 2:] not in k
            )
        raise LanguageError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


def _bound_for(words: Iterable[Word], problem: SynthesisProblem, bound: int | None) -> int:
    if bound is not None:
        return bound
    if problem.bound is not None:
        return problem.bound
    return max((len(w) for w in words), default=0)


def check_definition(
    k: Iterable[str | Sequence[str]],
    problem: SynthesisProblem,
    prop: str,
    bound: int | None = None,
) -> tuple[bool, Word | None]:
    """Test one defining equation on an explicit word set.

    Returns ``(holds, witness)`` with the length-lexicographically least
    violating word as witness.
    """
    words = {problem.alphabet.word(w) for w in k}
    checker = _Checker(problem, _bound_for(words, problem, bound))
    witness = checker.check(words, prop)
    return witness is None, witness


def brute_force_supremal(
    e: Iterable[str | Sequence[str]],
    problem: SynthesisProblem,
    properties: Iterable[str],
    bound: int | None = None,
) -> frozenset[Word]:
    """Union of every subset of ``e`` that has all the given properties.

    Subsets already contained in the running union are skipped, since
    they cannot enlarge it.
    """
    elements = sorted({problem.alphabet.word(w) for w in e}, key=problem.alphabet.sort_key)
    if len(elements) > MAX_SUBSET_ELEMENTS:
        raise LanguageError(
            f"brute force is capped at {MAX_SUBSET_ELEMENTS} words, got {len(elements)}"
        )
    properties = list(properties)
    for prop in properties:
        if prop not in PROPERTIES:
            raise LanguageError(f"unknown property {prop!r}")
    checker = _Checker(problem, _bound_for(elements, problem, bound))
    n = len(elements)
    found = 0
    for mask in range((1 << n) - 1, -1, -1):
        if mask & ~found == 0:
            continue
        subset = {elements[i] for i in range(n) if mask >> i & 1}
        if all(checker.check(subset, prop) is None for prop in properties):
            found |= mask
    return frozenset(elements[i] for i in range(n) if found >> i & 1)
