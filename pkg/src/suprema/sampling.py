"""Random alphabets, languages and synthesis problems for sampled checks."""

from __future__ import annotations

import random

from suprema import lang as lc
from suprema.lang import Alphabet, IndependenceRelation, Lang
from suprema.solvers.problem import SynthesisProblem

SYMBOLS = ("a", "b", "c")


def random_alphabet(
    rng: random.Random,
    max_symbols: int = 3,
    controllable_observable: bool = False,
) -> Alphabet:
    """A random alphabet of 2..max_symbols symbols (fewer only if max_symbols < 2).

    With ``controllable_observable`` every controllable symbol is observable.
    """
    n = rng.randint(min(2, max_symbols), max_symbols)
    symbols = SYMBOLS[:n]
    uncontrollable = {s for s in symbols if rng.random() < 0.4}
    observable = {s for s in symbols if rng.random() < 0.7}
    if controllable_observable:
        observable |= set(symbols) - uncontrollable
    return Alphabet(symbols, frozenset(observable), frozenset(uncontrollable))


def random_lang(rng: random.Random, alphabet: Alphabet, max_states: int = 6) -> Lang:
    """A random DFA language with at most ``max_states`` states (sink included)."""
    n = rng.randint(1, max_states)
    transitions = {}
    for q in range(n):
        for s in alphabet.symbols:
            # leave some moves undefined so languages are not all cofinite
            if rng.random() < 0.75:
                transitions[(q, s)] = rng.randrange(n)
    accepting = [q for q in range(n) if rng.random() < 0.4]
    return Lang.from_dfa(alphabet, transitions, 0, accepting, states=range(n))


def random_acyclic_lang(rng: random.Random, alphabet: Alphabet, max_states: int = 4) -> Lang:
    """A random language whose DFA only moves to higher-numbered states.

    Every word is shorter than ``max_states``.
    """
    n = rng.randint(1, max_states)
    transitions = {}
    for q in range(n - 1):
        for s in alphabet.symbols:
            if rng.random() < 0.7:
                transitions[(q, s)] = rng.randrange(q + 1, n)
    accepting = [q for q in range(n) if rng.random() < 0.6]
    return Lang.from_dfa(alphabet, transitions, 0, accepting, states=range(n))


def random_plant(rng: random.Random, alphabet: Alphabet, max_states: int = 4, finite: bool = False):
    """Return (L(G), Lm(G)) sharing one random transition structure.

    Every state accepts in L(G), so it is prefix-closed; Lm(G) marks a
    random subset of the same states.  With ``finite`` transitions only go
    to higher-numbered states and no word is longer than ``max_states - 1``.
    """
    n = rng.randint(max(1, max_states // 2), max_states)
    transitions = {}
    for q in range(n):
        targets = range(q + 1, n) if finite else range(n)
        if not targets:
            continue
        for s in alphabet.symbols:
            if rng.random() < 0.8:
                transitions[(q, s)] = rng.choice(targets)
    marked_states = [q for q in range(n) if rng.random() < 0.6]
    closed = Lang.from_dfa(alphabet, transitions, 0, range(n), states=range(n))
    marked = Lang.from_dfa(alphabet, transitions, 0, marked_states, states=range(n))
    return closed, marked


def random_subset_lang(rng: random.Random, lang: Lang, max_len: int, max_words: int | None = None) -> Lang:
    """A random finite subset of ``lang`` ∩ Σ^{≤max_len}."""
    pool = lang.words(max_len)
    chosen = [w for w in pool if rng.random() < 0.5]
    if max_words is not None and len(chosen) > max_words:
        chosen = rng.sample(chosen, max_words)
    return Lang.from_words(lang.alphabet, chosen)


def random_independence(rng: random.Random, alphabet: Alphabet) -> IndependenceRelation:
    pairs = [
        (x, y)
        for i, x in enumerate(alphabet.symbols)
        for y in alphabet.symbols[i + 1:]
        if rng.random() < 0.5
    ]
    return IndependenceRelation(alphabet, pairs)


def random_problem(
    rng: random.Random,
    *,
    max_symbols: int = 3,
    plant_states: int = 4,
    finite: bool = True,
    spec_words: int = 14,
    bound: int = 3,
    controllable_observable: bool = False,
    prefix_closed_spec: bool = False,
    stray_words: bool = True,
) -> SynthesisProblem:
    """A random plant with a random specification of at most ``spec_words`` words.

    The specification is drawn mostly from the plant's behaviour; with
    ``stray_words`` a few words outside the plant are mixed in so solvers
    exercise their normalization.
    """
    alphabet = random_alphabet(rng, max_symbols, controllable_observable)
    closed, marked = random_plant(rng, alphabet, plant_states, finite)
    pool = closed.words(bound)
    if stray_words:
        pool += [w for w in lc.all_words(alphabet, bound) if rng.random() < 0.1]
    density = rng.uniform(0.4, 0.9)
    chosen = {w for w in pool if rng.random() < density}
    if prefix_closed_spec:
        chosen = {w[:i] for w in chosen for i in range(len(w) + 1)}
    chosen_list = sorted(chosen, key=alphabet.sort_key)
    while len(chosen_list) > spec_words:
        if prefix_closed_spec:
            # drop a longest word so the set stays prefix-closed
            longest = max(len(w) for w in chosen_list)
            victims = [w for w in chosen_list if len(w) == longest]
            chosen_list.remove(rng.choice(victims))
        else:
            chosen_list.remove(rng.choice(chosen_list))
    spec = Lang.from_words(alphabet, chosen_list)
    return SynthesisProblem(
        alphabet, closed, marked, spec, random_independence(rng, alphabet), bound
    )
