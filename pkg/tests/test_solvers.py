import random

import pytest

from suprema.lang import Alphabet, IndependenceRelation, Lang, LanguageError
from suprema.operators import (
    ConfigurationError,
    OperatorKind,
    make_operator,
    prefix_pair,
    self_dual,
)
from suprema.sampling import random_problem
from suprema.solvers import (
    NonConvergence,
    SOLVER_PROPERTIES,
    SynthesisProblem,
    check_property,
    sup_controllable,
    sup_controllable_normal,
    sup_l_closed,
    sup_mixed,
    sup_normal,
    sup_prefix_closed_controllable,
    sup_relaxed,
    sup_single,
    sup_system,
    sup_trace_closed,
    sup_trace_closed_bounded,
)
from suprema.topology import identity_operator, interior

from conftest import AB, as_set

ABU = Alphabet(("a", "b", "u"), uncontrollable=frozenset({"u"}))
ABU_PARTIAL = Alphabet(("a", "b", "u"), observable=frozenset({"a", "b"}), uncontrollable=frozenset({"u"}))
AU = Alphabet(("a", "u"), uncontrollable=frozenset({"u"}))
SIGMA_O_A = Alphabet(("a", "b"), observable=frozenset({"a"}))


def lang(alphabet, *ws):
    return Lang.from_words(alphabet, ws)


def problem(alphabet, closed, spec, marked=None, **kw):
    closed_l = lang(alphabet, *closed)
    marked_l = closed_l if marked is None else lang(alphabet, *marked)
    return SynthesisProblem(alphabet, closed_l, marked_l, lang(alphabet, *spec), **kw)


PLANT = ("", "a", "b", "ab", "au")


def op(tag, p):
    return make_operator(OperatorKind(tag, p.alphabet, plant_closed=p.plant_closed, plant_marked=p.plant_marked))


# ---------------------------------------------------------------------------
# worked instances


@pytest.mark.parametrize("spec, expected", [(("a",), set()), (("a", "b"), {"b"})])
def test_sup_normal(spec, expected):
    p = problem(SIGMA_O_A, ("", "a", "b", "ab"), spec, marked=("a", "b", "ab"))
    assert as_set(sup_normal(p).supremal, 3) == expected


def test_sup_normal_empty_spec():
    p = problem(SIGMA_O_A, ("", "a", "b", "ab"), (), marked=("a", "b", "ab"))
    assert sup_normal(p).supremal.is_empty()


@pytest.mark.parametrize("spec, expected", [(("", "a", "ab"), {"", "a", "ab"}), (("", "ab"), {""})])
def test_sup_l_closed_with_universal_marking(spec, expected):
    universal = Lang.universal(AB)
    p = SynthesisProblem(AB, universal, universal, lang(AB, *spec))
    assert as_set(sup_l_closed(p).supremal, 3) == expected


def test_sup_prefix_closed_controllable():
    p = problem(ABU, PLANT, ("", "a", "b", "ab"))
    result = sup_prefix_closed_controllable(p)
    assert as_set(result.supremal, 3) == {"", "b"}
    assert check_property(lang(ABU, "", "b"), p, "controllable") == (True, None)


def test_sup_prefix_closed_controllable_forced_empty():
    p = problem(AU, ("", "a", "u", "au"), ("", "a"))
    assert sup_prefix_closed_controllable(p).supremal.is_empty()


def test_sup_prefix_closed_controllable_whole_plant():
    p = problem(ABU, PLANT, PLANT)
    assert sup_prefix_closed_controllable(p).supremal == p.plant_closed


def test_sup_prefix_closed_controllable_rejects_open_spec():
    with pytest.raises(LanguageError):
        sup_prefix_closed_controllable(problem(ABU, PLANT, ("ab",)))


def test_sup_controllable():
    p = problem(ABU, PLANT, ("b", "ab"))
    result = sup_controllable(p)
    assert as_set(result.supremal, 3) == {"b"}
    assert result.iterations == 2
    assert result.stats == (4, 3, 3)


def test_sup_controllable_empty():
    p = problem(ABU, PLANT, ())
    assert sup_controllable(p).supremal.is_empty()


def test_sup_controllable_budget():
    p = problem(ABU, PLANT, ("b", "ab"))
    with pytest.raises(NonConvergence) as info:
        sup_controllable(p, max_iter=1)
    assert len(info.value.chain) == 2
    assert info.value.level == "outer"


def test_sup_controllable_normal():
    p = problem(ABU_PARTIAL, PLANT, ("b", "ab"), marked=("b", "ab", "au"))
    assert as_set(sup_controllable_normal(p).supremal, 3) == {"b"}


def test_sup_controllable_normal_requires_observable_controllables():
    sigma = Alphabet(("a", "b", "u"), observable=frozenset({"b"}), uncontrollable=frozenset({"u"}))
    with pytest.raises(ConfigurationError):
        sup_controllable_normal(problem(sigma, PLANT, ("b",)))


def test_normalization_is_reported():
    p = problem(ABU, PLANT, ("b", "bb"))
    result = sup_controllable(p)
    assert result.warnings
    assert as_set(result.supremal, 3) == {"b"}


@pytest.mark.parametrize(
    "e, expected", [(("ab",), set()), (("ab", "ba", "aa"), {"ab", "ba", "aa"})]
)
def test_sup_trace_closed_bounded(e, expected):
    ind = IndependenceRelation(AB, [("a", "b")])
    assert {"".join(w) for w in sup_trace_closed_bounded(e, ind, 2)} == expected


def test_sup_trace_closed_needs_bound():
    p = problem(AB, ("",), ("",))
    with pytest.raises(ConfigurationError):
        sup_trace_closed(p)


# ---------------------------------------------------------------------------
# generic schemes


def test_sup_single_matches_interior():
    p = problem(SIGMA_O_A, ("", "a", "b", "ab"), ("a", "b"), marked=("a", "b", "ab"))
    n = op("N", p)
    result = sup_single(p.spec, n)
    assert result.supremal == interior(n, p.spec)
    assert sup_single(Lang.empty(SIGMA_O_A), n).supremal.is_empty()


def test_sup_system_edge_cases():
    p = problem(ABU, PLANT, ("", "a", "b", "ab"))
    assert sup_system(p.spec, []).supremal == p.spec
    single = sup_system(p.spec, [op("O", p)]).supremal
    assert single == sup_single(p.spec, op("O", p)).supremal


def test_sup_system_matches_closed_form():
    p = problem(ABU, PLANT, ("", "a", "b", "ab"))
    result = sup_system(p.spec, [op("C", p), op("P", p)])
    assert as_set(result.supremal, 3) == {"", "b"}


def test_sup_relaxed():
    p = problem(ABU, PLANT, ("b", "ab"))
    result = sup_relaxed(p.spec, prefix_pair(ABU), [op("C", p)])
    assert as_set(result.supremal, 3) == {"b"}
    assert sup_relaxed(Lang.empty(ABU), prefix_pair(ABU), [op("C", p)]).supremal.is_empty()


def test_sup_relaxed_identity_outer_degenerates_to_single():
    p = problem(SIGMA_O_A, ("", "a", "b", "ab"), ("a", "b"), marked=("a", "b", "ab"))
    n = op("N", p)
    relaxed = sup_relaxed(p.spec, identity_operator(n.carrier), [n])
    assert relaxed.supremal == sup_single(p.spec, n).supremal


def test_sup_relaxed_needs_dual():
    p = problem(ABU, PLANT, ("b",))
    with pytest.raises(ConfigurationError):
        sup_relaxed(p.spec, op("C", p), [op("C", p)])


def test_sup_mixed():
    p = problem(ABU_PARTIAL, PLANT, ("b", "ab"), marked=("b", "ab", "au"))
    n = op("N", p)
    blocks = [(prefix_pair(p.alphabet), op("A", p)), (identity_operator(n.carrier), n)]
    assert as_set(sup_mixed(p.spec, blocks).supremal, 3) == {"b"}
    assert sup_mixed(Lang.empty(p.alphabet), blocks).supremal.is_empty()
    single = sup_mixed(p.spec, [(self_dual(n), n)])
    assert single.supremal == sup_single(p.spec, n).supremal


# ---------------------------------------------------------------------------
# invariants on random problems

SOLVERS = {
    "sup_normal": lambda p: sup_normal(p),
    "sup_l_closed": lambda p: sup_l_closed(p),
    "sup_controllable": lambda p: sup_controllable(p),
    "sup_controllable_normal": lambda p: sup_controllable_normal(p),
}


def _random_problems(seed, n, **kw):
    rng = random.Random(seed)
    return [random_problem(rng, **kw) for _ in range(n)]


@pytest.mark.parametrize("name", sorted(SOLVERS))
def test_chains_decrease_and_results_are_sound(name):
    kw = {"controllable_observable": True} if name == "sup_controllable_normal" else {}
    for p in _random_problems(11, 30, finite=False, **kw):
        result = SOLVERS[name](p)
        chain = result.chain
        assert all(b <= a for a, b in zip(chain, chain[1:]))
        assert chain[-1] == chain[-2] == result.supremal
        for prop in SOLVER_PROPERTIES[name]:
            assert check_property(result.supremal, p, prop)[0], prop


def test_prefix_closed_controllable_converges_in_one_step():
    for p in _random_problems(12, 40, finite=False, prefix_closed_spec=True):
        spec = p.spec & p.plant_closed
        chain = sup_system(spec, [op("C", p), op("P", p)]).chain
        # K_1 is already a fixed point: chain is [E, K_1, K_1] or [E, E]
        assert len(chain) <= 3


def test_empty_uncontrollable_and_full_observation():
    sigma = Alphabet(("a", "b"))
    p = problem(sigma, ("", "a", "ab"), ("a", "ab"))
    assert sup_controllable(p).supremal == p.spec
    assert sup_normal(p).supremal == p.spec & p.plant_marked
