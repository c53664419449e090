"""Direct formulas for the standard supremal sublanguages.

Each solver normalizes the specification into the plant first (recording a
warning when that changes it), computes the supremal element, and appends
one more application of the defining interior to confirm the fixed point.
"""

from __future__ import annotations

from suprema import lang as lc
from suprema.lang import IndependenceRelation, Lang, LanguageError, Word
from suprema.operators import (
    ConfigurationError,
    OperatorKind,
    make_operator,
    observation_closure,
)
from suprema.solvers.problem import (
    DEFAULT_MAX_ITER,
    InvariantViolation,
    SolverResult,
    SynthesisProblem,
    _Notes,
    check_property,
    iterate,
)
from suprema.solvers.schemes import sup_single, sup_system


def _require(k: Lang, problem: SynthesisProblem, *props: str) -> None:
    for prop in props:
        ok, witness = check_property(k, problem, prop)
        if not ok:
            raise InvariantViolation(
                f"result is not {prop}: witness {problem.alphabet.format_word(witness)}"
            )


def _normal_interior(k: Lang, marked: Lang) -> Lang:
    return marked - observation_closure(marked - k)


def sup_normal(problem: SynthesisProblem) -> SolverResult:
    """Supremal sublanguage of E normal w.r.t. (Lm, Σo).

    Computed as Lm - P⁻¹P(Lm - E) and cross-checked against
    E - P⁻¹P(Lm - E).
    """
    notes = _Notes()
    marked = problem.plant_marked
    e = notes.restrict(problem.spec, marked, "the marked plant behaviour")
    blocked = observation_closure(marked - e)
    k = marked - blocked
    if k != e - blocked:
        raise InvariantViolation("the two supremal-normal formulas disagree")
    confirm = _normal_interior(k, marked)
    _require(k, problem, "normal")
    return SolverResult(k, (e, k, confirm), warnings=tuple(notes.warnings))


def sup_l_closed(problem: SynthesisProblem) -> SolverResult:
    """Supremal Lm-closed sublanguage: Lm - (Lm - E)Σ*.

    With Lm = Σ* this is the supremal prefix-closed sublanguage.
    """
    notes = _Notes()
    marked = problem.plant_marked
    e = notes.restrict(problem.spec, marked, "the marked plant behaviour")

    def lclosed_interior(x: Lang) -> Lang:
        return marked - lc.suffix_extension(marked - x)

    k = lclosed_interior(e)
    _require(k, problem, "l_closed")
    return SolverResult(k, (e, k, lclosed_interior(k)), warnings=tuple(notes.warnings))


def _controllable_interior(x: Lang, plant: Lang, uc) -> Lang:
    """L - ((L - x)/Σuc*)Σ*."""
    return plant - lc.suffix_extension(lc.right_quotient_star(plant - x, uc))


def sup_prefix_closed_controllable(problem: SynthesisProblem, cross_check: bool = True) -> SolverResult:
    """Supremal prefix-closed controllable sublanguage of a prefix-closed E.

    The closed form L - ((L - E)/Σuc*)Σ* is reached in one step.  With
    ``cross_check`` the result is recomputed by iterating the prefix and
    controllability interiors and by the interior of the combined operator;
    all routes must agree.
    """
    spec = problem.spec
    if lc.prefix_closure(spec) != spec:
        witness = (lc.prefix_closure(spec) - spec).shortest_word()
        raise LanguageError(
            "specification must be prefix-closed; missing prefix "
            f"{problem.alphabet.format_word(witness)}"
        )
    notes = _Notes()
    plant = problem.plant_closed
    uc = problem.alphabet.uncontrollable
    e = notes.restrict(spec, plant, "the closed plant behaviour")

    k = _controllable_interior(e, plant, uc)
    escape = lc.suffix_extension(lc.right_quotient_star(plant - e, uc))
    if e - escape != k:
        raise InvariantViolation("E - ((L - E)/Σuc*)Σ* differs from the closed form")
    confirm = _controllable_interior(k, plant, uc)

    if cross_check:
        kind = dict(alphabet=problem.alphabet, plant_closed=plant)
        p_op = make_operator(OperatorKind("P", **kind))
        c_op = make_operator(OperatorKind("C", **kind))
        o_op = make_operator(OperatorKind("O", **kind))
        if sup_system(e, [c_op, p_op]).supremal != k:
            raise InvariantViolation("iterated prefix/controllability interiors disagree")
        if sup_single(e, o_op).supremal != k:
            raise InvariantViolation("interior of the combined operator disagrees")

    _require(k, problem, "prefix_closed", "controllable")
    return SolverResult(k, (e, k, confirm), warnings=tuple(notes.warnings))


def sup_controllable(problem: SynthesisProblem, max_iter: int = DEFAULT_MAX_ITER) -> SolverResult:
    """Supremal controllable sublanguage, K_{i+1} = K_i - ((L - K̄_i)/Σuc*)Σ*."""
    notes = _Notes()
    plant = problem.plant_closed
    uc = problem.alphabet.uncontrollable
    e = notes.restrict(problem.spec, plant, "the closed plant behaviour")

    def step(k: Lang) -> Lang:
        return k - lc.suffix_extension(lc.right_quotient_star(plant - lc.prefix_closure(k), uc))

    chain = iterate(e, step, max_iter)
    k = chain[-1]
    _require(k, problem, "controllable")
    return SolverResult(k, tuple(chain), warnings=tuple(notes.warnings))


def sup_controllable_normal(
    problem: SynthesisProblem,
    max_iter: int = DEFAULT_MAX_ITER,
    max_inner: int = DEFAULT_MAX_ITER,
) -> SolverResult:
    """Supremal controllable and normal sublanguage (requires Σc ⊆ Σo).

    Outer: K_{j+1} = Lm - P⁻¹P(Lm - ◇(K_j)).
    Inner, for ◇(K_j): L_{i+1} = L_i - P⁻¹P((L - L̄_i)/Σuc*)Σ*, L_0 = K_j.
    """
    sigma = problem.alphabet
    if not sigma.controllable <= sigma.observable:
        raise ConfigurationError(
            "controllable-and-normal synthesis requires every controllable symbol to be observable"
        )
    notes = _Notes()
    plant, marked = problem.plant_closed, problem.plant_marked
    uc = sigma.uncontrollable
    e = notes.restrict(problem.spec, marked, "the marked plant behaviour")
    e = notes.restrict(e, plant, "the closed plant behaviour")
    inner_total = 0

    def inner_step(li: Lang) -> Lang:
        escape = lc.right_quotient_star(plant - lc.prefix_closure(li), uc)
        return li - lc.suffix_extension(observation_closure(escape))

    def outer_step(kj: Lang) -> Lang:
        nonlocal inner_total
        inner = iterate(kj, inner_step, max_inner, level="inner")
        inner_total += len(inner) - 1
        return _normal_interior(inner[-1], marked)

    chain = iterate(e, outer_step, max_iter)
    k = chain[-1]
    _require(k, problem, "controllable", "normal", "prefix_normal")
    return SolverResult(k, tuple(chain), warnings=tuple(notes.warnings), inner_iterations=inner_total)


def sup_trace_closed_bounded(
    e, independence: IndependenceRelation, n: int
) -> frozenset[Word]:
    """Supremal trace-closed subset of a finite word set, inside Σ^{≤n}.

    Σ^{≤n} - [Σ^{≤n} - e]_I; exact because swaps preserve length.
    """
    alphabet = independence.alphabet
    words = {alphabet.word(w) for w in e}
    for w in words:
        if len(w) > n:
            raise LanguageError(f"word {alphabet.format_word(w)} is longer than the bound {n}")
    universe = set(lc.all_words(alphabet, n))
    outside = lc.trace_closure_bounded(universe - words, independence, n)
    return frozenset(universe - outside)


def sup_trace_closed(problem: SynthesisProblem) -> SolverResult:
    """Problem-level wrapper around :func:`sup_trace_closed_bounded`."""
    if problem.independence is None or problem.bound is None:
        raise ConfigurationError("trace-closed synthesis needs an independence relation and a bound")
    n = problem.bound
    spec = problem.spec
    if not lc.within_length(spec, n):
        raise LanguageError(f"specification must be finite with every word of length ≤ {n}")
    result = sup_trace_closed_bounded(spec.words(n), problem.independence, n)
    k = Lang.from_words(problem.alphabet, result)
    t_op = make_operator(OperatorKind("T_bounded", problem.alphabet, independence=problem.independence, bound=n))
    confirm = t_op.interior(k)
    return SolverResult(k, (spec, k, confirm))
