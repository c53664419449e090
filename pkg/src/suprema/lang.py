"""Regular languages as canonical, complete, minimal DFAs.

Every :class:`Lang` is stored in canonical form: trimmed to reachable
states, minimized, complete (a dead sink absorbs missing moves), and
numbered breadth-first from the initial state with symbols taken in
alphabet order.  Two ``Lang`` values therefore denote the same language
exactly when they compare equal with ``==``.

Words are tuples of symbols.  Wherever a word is accepted as input, a
plain ``str`` is also allowed and is split into single characters.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Word = tuple[str, ...]

DEFAULT_STATE_BUDGET = 1_000_000

_state_budget: contextvars.ContextVar[int] = contextvars.ContextVar(
    "suprema_state_budget", default=DEFAULT_STATE_BUDGET
)


class LanguageError(ValueError):
    """Rejected input: malformed alphabet, word, or language argument."""


class AlphabetMismatch(LanguageError):
    """Two languages (or a language and a symbol set) disagree on the alphabet."""


class StateBudgetExceeded(RuntimeError):
    """A construction produced more states than the active state budget."""

    def __init__(self, limit: int):
        super().__init__(f"automaton construction exceeded the state budget of {limit}")
        self.limit = limit


@contextlib.contextmanager
def state_budget(limit: int) -> Iterator[None]:
    """Temporarily cap the number of states any single construction may create."""
    if limit < 1:
        raise ValueError("state budget must be positive")
    token = _state_budget.set(limit)
    try:
        yield
    finally:
        _state_budget.reset(token)


def current_state_budget() -> int:
    return _state_budget.get()


# ---------------------------------------------------------------------------
# Alphabet and independence


@dataclass(frozen=True)
class Alphabet:
    """An ordered symbol set with observable and uncontrollable subsets.

    ``observable`` defaults to every symbol.  ``parent`` is set only on
    alphabets produced by projection and records where they came from.
    """

    symbols: tuple[str, ...]
    observable: frozenset[str] | None = None
    uncontrollable: frozenset[str] = frozenset()
    parent: Alphabet | None = field(default=None, repr=False)
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if len(set(symbols)) != len(symbols):
            raise LanguageError(f"duplicate symbols in alphabet {symbols}")
        for s in symbols:
            if not isinstance(s, str) or not s:
                raise LanguageError(f"symbols must be non-empty strings, got {s!r}")
        observable = frozenset(symbols if self.observable is None else self.observable)
        uncontrollable = frozenset(self.uncontrollable)
        known = set(symbols)
        if not observable <= known:
            raise LanguageError(f"observable symbols {sorted(observable - known)} not in alphabet")
        if not uncontrollable <= known:
            raise LanguageError(
                f"uncontrollable symbols {sorted(uncontrollable - known)} not in alphabet"
            )
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "observable", observable)
        object.__setattr__(self, "uncontrollable", uncontrollable)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    @property
    def controllable(self) -> frozenset[str]:
        return frozenset(self.symbols) - self.uncontrollable

    @property
    def unobservable(self) -> frozenset[str]:
        return frozenset(self.symbols) - self.observable

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise LanguageError(f"unknown symbol {symbol!r}") from None

    def check_subset(self, symbols: Iterable[str]) -> frozenset[str]:
        symbols = frozenset(symbols)
        unknown = symbols - set(self.symbols)
        if unknown:
            raise LanguageError(f"unknown symbols {sorted(unknown)}")
        return symbols

    def word(self, w: str | Sequence[str]) -> Word:
        """Coerce ``w`` into a word over this alphabet, validating symbols."""
        word = tuple(w)
        for s in word:
            if s not in self._index:
                raise LanguageError(f"symbol {s!r} of word {w!r} not in alphabet")
        return word

    def projected(self, onto: Iterable[str]) -> Alphabet:
        """The alphabet of projected images, remembering this one as parent."""
        onto = self.check_subset(onto)
        if onto == frozenset(self.symbols):
            return self
        kept = tuple(s for s in self.symbols if s in onto)
        return Alphabet(kept, frozenset(kept), self.uncontrollable & onto, parent=self)

    def format_word(self, w: Word) -> str:
        if not w:
            return "ε"
        if all(len(s) == 1 for s in self.symbols):
            return "".join(w)
        return " ".join(w)

    def sort_key(self, w: Word) -> tuple[int, tuple[int, ...]]:
        """Length-then-lexicographic key, lexicographic in alphabet order."""
        return len(w), tuple(self._index[s] for s in w)


@dataclass(frozen=True)
class IndependenceRelation:
    """An irreflexive, symmetric relation on symbols, stored as unordered pairs."""

    alphabet: Alphabet
    pairs: frozenset[frozenset[str]]

    def __init__(self, alphabet: Alphabet, pairs: Iterable[Iterable[str]]):
        normalized = set()
        for pair in pairs:
            pair = tuple(pair)
            if len(pair) != 2:
                raise LanguageError(f"independence pairs must have two symbols, got {pair!r}")
            x, y = pair
            if x == y:
                raise LanguageError(f"independence relation must be irreflexive: ({x}, {y})")
            alphabet.check_subset(pair)
            normalized.add(frozenset(pair))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "pairs", frozenset(normalized))

    def independent(self, x: str, y: str) -> bool:
        return frozenset((x, y)) in self.pairs

    def sorted_pairs(self) -> list[tuple[str, str]]:
        out = []
        for pair in self.pairs:
            x, y = sorted(pair, key=self.alphabet.index)
            out.append((x, y))
        return sorted(out, key=lambda p: (self.alphabet.index(p[0]), self.alphabet.index(p[1])))


# ---------------------------------------------------------------------------
# Lang


@dataclass(frozen=True)
class Lang:
    """A regular language over ``alphabet`` in canonical DFA form.

    ``delta[q][i]`` is the successor of state ``q`` on the ``i``-th symbol
    of the alphabet; state 0 is initial.  Build values through the class
    constructors or the module operations, never by hand.
    """

    alphabet: Alphabet
    delta: tuple[tuple[int, ...], ...]
    accepting: frozenset[int]

    # -- constructors -----------------------------------------------------

    @classmethod
    def empty(cls, alphabet: Alphabet) -> Lang:
        return _canonical(alphabet, [[0] * len(alphabet)], set())

    @classmethod
    def universal(cls, alphabet: Alphabet) -> Lang:
        """Σ* over ``alphabet``."""
        return _canonical(alphabet, [[0] * len(alphabet)], {0})

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> Lang:
        return cls.from_words(alphabet, [()])

    @classmethod
    def symbol_star(cls, alphabet: Alphabet, symbols: Iterable[str]) -> Lang:
        """S* for a symbol subset S."""
        symbols = alphabet.check_subset(symbols)
        row = [0 if s in symbols else 1 for s in alphabet.symbols]
        return _canonical(alphabet, [row, [1] * len(alphabet)], {0})

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[str | Sequence[str]]) -> Lang:
        """The finite language containing exactly ``words``."""
        k = len(alphabet)
        delta: list[list[int]] = [[-1] * k]
        accepting = set()
        for w in words:
            q = 0
            for s in alphabet.word(w):
                i = alphabet.index(s)
                if delta[q][i] < 0:
                    delta.append([-1] * k)
                    delta[q][i] = len(delta) - 1
                q = delta[q][i]
            accepting.add(q)
        sink = len(delta)
        delta.append([sink] * k)
        full = [[sink if t < 0 else t for t in row] for row in delta]
        return _canonical(alphabet, full, accepting)

    @classmethod
    def from_dfa(
        cls,
        alphabet: Alphabet,
        transitions: Mapping[tuple[object, str], object],
        initial: object,
        accepting: Iterable[object],
        states: Iterable[object] | None = None,
    ) -> Lang:
        """Load a (possibly partial) deterministic transition table.

        Missing moves go to an implicit non-accepting sink.
        """
        names: dict[object, int] = {}

        def number(q):
            if q not in names:
                names[q] = len(names)
            return names[q]

        number(initial)
        for q in states or ():
            number(q)
        accepting = list(accepting)
        for q in accepting:
            if states is not None and q not in names:
                raise LanguageError(f"accepting state {q!r} is not declared")
            number(q)
        edges = []
        for (src, sym), dst in transitions.items():
            if states is not None and (src not in names or dst not in names):
                raise LanguageError(f"transition {src!r} -{sym}-> {dst!r} uses undeclared state")
            edges.append((number(src), alphabet.index(sym), number(dst)))
        k = len(alphabet)
        sink = len(names)
        delta = [[sink] * k for _ in range(sink + 1)]
        for src, i, dst in edges:
            delta[src][i] = dst
        return _canonical(alphabet, delta, {names[q] for q in accepting})

    # -- queries ----------------------------------------------------------

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def run(self, word: str | Sequence[str]) -> int:
        q = 0
        for s in word:
            q = self.delta[q][self.alphabet.index(s)]
        return q

    def accepts(self, word: str | Sequence[str]) -> bool:
        return self.run(word) in self.accepting

    __contains__ = accepts

    def is_empty(self) -> bool:
        return not self.accepting

    def is_universal(self) -> bool:
        return len(self.accepting) == len(self.delta)

    def live_states(self) -> frozenset[int]:
        """States from which some accepting state is reachable."""
        return _coreachable(self.delta, self.accepting, range(len(self.alphabet)))

    def is_finite(self) -> bool:
        live = self.live_states()
        colour = dict.fromkeys(live, 0)

        # iterative DFS cycle check restricted to live states
        for root in live:
            if colour[root]:
                continue
            stack = [(root, iter(self.delta[root]))]
            colour[root] = 1
            while stack:
                q, succ = stack[-1]
                for r in succ:
                    if r not in colour:
                        continue
                    if colour[r] == 1:
                        return False
                    if colour[r] == 0:
                        colour[r] = 1
                        stack.append((r, iter(self.delta[r])))
                        break
                else:
                    colour[q] = 2
                    stack.pop()
        return True

    def shortest_word(self) -> Word | None:
        """The length-lexicographically least member, or ``None`` if empty."""
        if 0 in self.accepting:
            return ()
        parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for i, r in enumerate(self.delta[q]):
                if r in parent:
                    continue
                parent[r] = (q, i)
                if r in self.accepting:
                    word = []
                    while r != 0:
                        r, j = parent[r]
                        word.append(self.alphabet.symbols[j])
                    return tuple(reversed(word))
                queue.append(r)
        return None

    def words(self, max_len: int) -> list[Word]:
        return enumerate_words(self, max_len)

    # -- operators --------------------------------------------------------

    def __or__(self, other: Lang) -> Lang:
        return union(self, other)

    def __and__(self, other: Lang) -> Lang:
        return intersect(self, other)

    def __sub__(self, other: Lang) -> Lang:
        return difference(self, other)

    def __le__(self, other: Lang) -> bool:
        return is_subset(self, other)

    def __lt__(self, other: Lang) -> bool:
        return self != other and is_subset(self, other)

    def __ge__(self, other: Lang) -> bool:
        return is_subset(other, self)

    def __gt__(self, other: Lang) -> bool:
        return self != other and is_subset(other, self)

    def __repr__(self) -> str:
        preview = self.words(3)
        shown = ", ".join(self.alphabet.format_word(w) for w in preview[:8])
        complete = self.is_finite() and len(preview) <= 8 and preview == self.words(self.num_states)
        more = "" if complete else ", …"
        return f"Lang({{{shown}{more}}}, states={self.num_states})"


# ---------------------------------------------------------------------------
# Internal machinery


def _coreachable(delta, targets, symbol_indices) -> frozenset[int]:
    """States that reach ``targets`` using only the given symbol indices."""
    reverse: list[list[int]] = [[] for _ in delta]
    for q, row in enumerate(delta):
        for i in symbol_indices:
            reverse[row[i]].append(q)
    seen = set(targets)
    stack = list(targets)
    while stack:
        r = stack.pop()
        for q in reverse[r]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)


def _canonical(alphabet: Alphabet, delta: Sequence[Sequence[int]], accepting, initial: int = 0) -> Lang:
    k = len(alphabet)

    # reachable part, renumbered in BFS order
    order = {initial: 0}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        for i in range(k):
            r = delta[q][i]
            if r not in order:
                order[r] = len(order)
                queue.append(r)
    n = len(order)
    d = [[0] * k for _ in range(n)]
    acc_new = [False] * n
    for q, nq in order.items():
        row = delta[q]
        d[nq] = [order[row[i]] for i in range(k)]
        acc_new[nq] = q in accepting

    # Moore partition refinement
    cls = [1 if a else 0 for a in acc_new]
    count = len(set(cls))
    while True:
        sigs: dict[tuple, int] = {}
        new = [sigs.setdefault((cls[q], *(cls[r] for r in d[q])), len(sigs)) for q in range(n)]
        if len(sigs) == count:
            break
        cls, count = new, len(sigs)

    # BFS numbering of the quotient
    block_rep: dict[int, int] = {}
    for q in range(n):
        block_rep.setdefault(cls[q], q)
    number = {cls[0]: 0}
    queue = deque([cls[0]])
    rows: list[tuple[int, ...]] = []
    final = set()
    while queue:
        b = queue.popleft()
        q = block_rep[b]
        row = []
        for i in range(k):
            c = cls[d[q][i]]
            if c not in number:
                number[c] = len(number)
                queue.append(c)
            row.append(number[c])
        rows.append(tuple(row))
        if acc_new[q]:
            final.add(number[b])
    return Lang(alphabet, tuple(rows), frozenset(final))


def _determinize(
    alphabet: Alphabet,
    start: frozenset,
    step: Callable[[frozenset, int], frozenset],
    is_accepting: Callable[[frozenset], bool],
) -> Lang:
    """Subset construction driven by a successor function on state sets."""
    limit = _state_budget.get()
    k = len(alphabet)
    index = {start: 0}
    queue = deque([start])
    delta: list[list[int]] = []
    accepting = set()
    while queue:
        subset = queue.popleft()
        q = index[subset]
        if is_accepting(subset):
            accepting.add(q)
        row = []
        for i in range(k):
            nxt = step(subset, i)
            if nxt not in index:
                if len(index) >= limit:
                    raise StateBudgetExceeded(limit)
                index[nxt] = len(index)
                queue.append(nxt)
            row.append(index[nxt])
        delta.append(row)
    return _canonical(alphabet, delta, accepting)


def _same_alphabet(a: Lang, b: Lang) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"alphabet mismatch: {a.alphabet.symbols} vs {b.alphabet.symbols}"
        )


def _product(a: Lang, b: Lang, accept: Callable[[bool, bool], bool]) -> Lang:
    _same_alphabet(a, b)
    limit = _state_budget.get()
    k = len(a.alphabet)
    index = {(0, 0): 0}
    queue = deque([(0, 0)])
    delta: list[list[int]] = []
    accepting = set()
    while queue:
        p, q = pair = queue.popleft()
        if accept(p in a.accepting, q in b.accepting):
            accepting.add(index[pair])
        row = []
        ra, rb = a.delta[p], b.delta[q]
        for i in range(k):
            nxt = (ra[i], rb[i])
            if nxt not in index:
                if len(index) >= limit:
                    raise StateBudgetExceeded(limit)
                index[nxt] = len(index)
                queue.append(nxt)
            row.append(index[nxt])
        delta.append(row)
    return _canonical(a.alphabet, delta, accepting)


# ---------------------------------------------------------------------------
# Operations


def union(a: Lang, b: Lang) -> Lang:
    return _product(a, b, lambda x, y: x or y)


def intersect(a: Lang, b: Lang) -> Lang:
    return _product(a, b, lambda x, y: x and y)


def difference(a: Lang, b: Lang) -> Lang:
    return _product(a, b, lambda x, y: x and not y)


_BOOLEAN_OPS = {"union": union, "intersect": intersect, "difference": difference}


def boolean(op: str, a: Lang, b: Lang) -> Lang:
    """Apply ``union``, ``intersect`` or ``difference`` by name."""
    try:
        fn = _BOOLEAN_OPS[op]
    except KeyError:
        raise LanguageError(f"unknown boolean operation {op!r}") from None
    return fn(a, b)


def complement(k: Lang) -> Lang:
    """Σ* \\ k."""
    return _canonical(k.alphabet, k.delta, set(range(k.num_states)) - k.accepting)


def is_subset(a: Lang, b: Lang) -> bool:
    return difference(a, b).is_empty()


class Relation(enum.Enum):
    EQUAL = "equal"
    A_SUBSET = "a_subset"
    B_SUBSET = "b_subset"
    INCOMPARABLE = "incomparable"


def compare(a: Lang, b: Lang) -> Relation:
    _same_alphabet(a, b)
    if a == b:
        return Relation.EQUAL
    if difference(a, b).is_empty():
        return Relation.A_SUBSET
    if difference(b, a).is_empty():
        return Relation.B_SUBSET
    return Relation.INCOMPARABLE


def concat(a: Lang, b: Lang) -> Lang:
    _same_alphabet(a, b)
    offset = a.num_states
    b_start = offset  # b's initial state, shifted

    def close(states: set[int]) -> frozenset:
        if any(q < offset and q in a.accepting for q in states):
            states.add(b_start)
        return frozenset(states)

    def step(subset: frozenset, i: int) -> frozenset:
        nxt = set()
        for q in subset:
            if q < offset:
                nxt.add(a.delta[q][i])
            else:
                nxt.add(b.delta[q - offset][i] + offset)
        return close(nxt)

    def accepting(subset: frozenset) -> bool:
        return any(q >= offset and q - offset in b.accepting for q in subset)

    return _determinize(a.alphabet, close({0}), step, accepting)


def kleene_star(a: Lang) -> Lang:
    fresh = -1  # accepting start state carrying ε

    def close(states: set[int]) -> frozenset:
        if any(q in a.accepting for q in states):
            states.add(0)
        return frozenset(states)

    def step(subset: frozenset, i: int) -> frozenset:
        return close({a.delta[q][i] for q in subset if q != fresh})

    def accepting(subset: frozenset) -> bool:
        return fresh in subset or any(q in a.accepting for q in subset)

    return _determinize(a.alphabet, frozenset({fresh, 0}), step, accepting)


def suffix_extension(k: Lang) -> Lang:
    """kΣ*: every word having a prefix in ``k``."""
    n = k.num_states
    top = n  # accepting universal sink
    delta = [[top] * len(k.alphabet) if q in k.accepting else list(row) for q, row in enumerate(k.delta)]
    delta.append([top] * len(k.alphabet))
    return _canonical(k.alphabet, delta, set(k.accepting) | {top})


def prefix_closure(k: Lang) -> Lang:
    return _canonical(k.alphabet, k.delta, k.live_states())


def right_quotient_star(k: Lang, suffixes: Iterable[str]) -> Lang:
    """k/S* = {s | st ∈ k for some t ∈ S*}."""
    suffixes = k.alphabet.check_subset(suffixes)
    indices = [k.alphabet.index(s) for s in suffixes]
    return _canonical(k.alphabet, k.delta, _coreachable(k.delta, k.accepting, indices))


def project(k: Lang, onto: Iterable[str] | None = None) -> Lang:
    """Natural projection erasing every symbol outside ``onto``.

    ``onto`` defaults to the alphabet's observable set.  The result lives
    over ``k.alphabet.projected(onto)``; projecting onto every symbol is the
    identity.
    """
    alphabet = k.alphabet
    onto = alphabet.observable if onto is None else alphabet.check_subset(onto)
    target = alphabet.projected(onto)
    if target is alphabet:
        return k
    hidden = [alphabet.index(s) for s in alphabet.symbols if s not in onto]
    kept = [alphabet.index(s) for s in target.symbols]

    def close(states: set[int]) -> frozenset:
        stack = list(states)
        while stack:
            q = stack.pop()
            for i in hidden:
                r = k.delta[q][i]
                if r not in states:
                    states.add(r)
                    stack.append(r)
        return frozenset(states)

    def step(subset: frozenset, j: int) -> frozenset:
        i = kept[j]
        return close({k.delta[q][i] for q in subset})

    def accepting(subset: frozenset) -> bool:
        return any(q in k.accepting for q in subset)

    return _determinize(target, close({0}), step, accepting)


def inverse_project(kp: Lang, into: Alphabet) -> Lang:
    """All words over ``into`` whose projection onto the observable set lies in ``kp``."""
    sub = kp.alphabet
    if set(sub.symbols) != set(into.observable) or (sub.parent is not None and sub.parent != into):
        raise AlphabetMismatch(
            f"cannot inverse-project a language over {sub.symbols} into {into.symbols} "
            f"with observable set {sorted(into.observable)}"
        )
    if sub == into:
        return kp
    delta = []
    for q, row in enumerate(kp.delta):
        delta.append([row[sub.index(s)] if s in into.observable else q for s in into.symbols])
    return _canonical(into, delta, kp.accepting)


def enumerate_words(k: Lang, max_len: int) -> list[Word]:
    """Members of length ≤ ``max_len`` in length-then-lexicographic order."""
    if max_len < 0:
        raise LanguageError("max_len must be non-negative")
    live = k.live_states()
    if 0 not in live:
        return []
    symbols = k.alphabet.symbols
    out: list[Word] = []
    frontier: list[tuple[Word, int]] = [((), 0)]
    for length in range(max_len + 1):
        out.extend(w for w, q in frontier if q in k.accepting)
        if length == max_len:
            break
        frontier = [
            (w + (symbols[i],), r)
            for w, q in frontier
            for i, r in enumerate(k.delta[q])
            if r in live
        ]
        if not frontier:
            break
    return out


def trace_closure_bounded(
    strings: Iterable[str | Sequence[str]], independence: IndependenceRelation, max_len: int
) -> frozenset[Word]:
    """The exact trace closure of a finite word set.

    Swapping adjacent independent symbols preserves length, so every word
    of the result has length ≤ ``max_len`` whenever the inputs do.
    """
    alphabet = independence.alphabet
    seen: set[Word] = set()
    for s in strings:
        w = alphabet.word(s)
        if len(w) > max_len:
            raise LanguageError(f"word {alphabet.format_word(w)} longer than bound {max_len}")
        if w in seen:
            continue
        seen.add(w)
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for j in range(len(u) - 1):
                if independence.independent(u[j], u[j + 1]):
                    v = u[:j] + (u[j + 1], u[j]) + u[j + 2 :]
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
    return frozenset(seen)


def within_length(k: Lang, n: int) -> bool:
    """True when ``k`` is finite and has no word longer than ``n``."""
    # a finite language has no word as long as its state count
    return k.is_finite() and len(k.words(n)) == len(k.words(max(n, k.num_states)))


def all_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    """Σ^{≤max_len} in length-lexicographic order."""
    out: list[Word] = [()]
    layer: list[Word] = [()]
    for _ in range(max_len):
        layer = [w + (s,) for w in layer for s in alphabet.symbols]
        out.extend(layer)
    return out
