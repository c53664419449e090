from __future__ import annotations

from dataclasses import dataclass, field

from suprema import lang as lc
from suprema.lang import Alphabet, IndependenceRelation, Lang, LanguageError, Word
from suprema.operators import observation_closure

DEFAULT_MAX_ITER = 10_000

PROPERTIES = ("normal", "prefix_normal", "controllable", "l_closed", "prefix_closed", "trace_closed")


class NonConvergence(RuntimeError):
    """An iteration scheme used up its budget before reaching a fixed point."""

    def __init__(self, chain: list[Lang], level: str, budget: int):
        super().__init__(f"{level} iteration did not converge within {budget} iterations")
        self.chain = chain
        self.level = level
        self.budget = budget


class InvariantViolation(RuntimeError):
    """Two routes that must agree did not; always a bug, never bad input."""


@dataclass(frozen=True)
class SynthesisProblem:
    """Plant behaviours L(G), Lm(G) and a specification E over one alphabet."""

    alphabet: Alphabet
    plant_closed: Lang
    plant_marked: Lang
    spec: Lang
    independence: IndependenceRelation | None = None
    bound: int | None = None

    def __post_init__(self):
        for name in ("plant_closed", "plant_marked", "spec"):
            if getattr(self, name).alphabet != self.alphabet:
                raise LanguageError(f"{name} is over a different alphabet")
        if lc.prefix_closure(self.plant_closed) != self.plant_closed:
            raise LanguageError("plant closed behaviour must be prefix-closed")
        if self.independence is not None and self.independence.alphabet != self.alphabet:
            raise LanguageError("independence relation is over a different alphabet")
        if self.bound is not None and self.bound < 0:
            raise LanguageError("bound must be non-negative")

    def with_spec(self, spec: Lang) -> SynthesisProblem:
        return SynthesisProblem(
            self.alphabet, self.plant_closed, self.plant_marked, spec, self.independence, self.bound
        )


@dataclass(frozen=True)
class SolverResult:
    """A supremal sublanguage with the descending chain that produced it.

    ``chain[0]`` is the (normalized) specification.  When ``converged`` the
    last two entries are equal: the final one re-applies the scheme to
    confirm the fixed point.
    """

    supremal: Lang
    chain: tuple[Lang, ...]
    converged: bool = True
    warnings: tuple[str, ...] = ()
    inner_iterations: int = 0

    @property
    def iterations(self) -> int:
        return len(self.chain) - 1

    @property
    def stats(self) -> tuple[int, ...]:
        return tuple(k.num_states for k in self.chain)


def iterate(start: Lang, step, max_iter: int, level: str = "outer") -> list[Lang]:
    """Apply ``step`` until two consecutive values coincide; return the chain."""
    chain = [start]
    current = start
    for _ in range(max_iter):
        nxt = step(current)
        chain.append(nxt)
        if nxt == current:
            return chain
        current = nxt
    raise NonConvergence(chain, level, max_iter)


def _violation(lang: Lang) -> Word | None:
    return lang.shortest_word()


def check_property(k: Lang, problem: SynthesisProblem, prop: str) -> tuple[bool, Word | None]:
    """Exact automaton-level test of one defining equation.

    Returns ``(holds, witness)``, the witness being the length-lexicographically
    least word showing the violation.
    """
    plant, marked = problem.plant_closed, problem.plant_marked
    uc = problem.alphabet.uncontrollable
    checks: list[Lang]
    if prop == "normal":
        checks = [k - marked, (observation_closure(k) & marked) - k]
    elif prop == "prefix_normal":
        kbar = lc.prefix_closure(k)
        checks = [kbar - plant, (observation_closure(kbar) & plant) - kbar]
    elif prop == "controllable":
        kbar = lc.prefix_closure(k)
        extended = lc.concat(kbar, Lang.symbol_star(problem.alphabet, uc))
        checks = [k - plant, (extended & plant) - kbar]
    elif prop == "l_closed":
        checks = [k - marked, (lc.prefix_closure(k) & marked) - k]
    elif prop == "prefix_closed":
        checks = [lc.prefix_closure(k) - k]
    elif prop == "trace_closed":
        if problem.independence is None or problem.bound is None:
            raise LanguageError("trace_closed needs an independence relation and a bound")
        if not lc.within_length(k, problem.bound):
            raise LanguageError("trace_closed is checked on finite languages within the bound only")
        closed = lc.trace_closure_bounded(k.words(problem.bound), problem.independence, problem.bound)
        checks = [Lang.from_words(problem.alphabet, closed) - k]
    else:
        raise LanguageError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    for diff in checks:
        witness = _violation(diff)
        if witness is not None:
            return False, witness
    return True, None


@dataclass
class _Notes:
    warnings: list[str] = field(default_factory=list)

    def restrict(self, spec: Lang, to: Lang, what: str) -> Lang:
        if spec <= to:
            return spec
        self.warnings.append(f"specification intersected with {what}")
        return spec & to
