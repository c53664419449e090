from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suprema import lang as lc
from suprema.lang import (
    Alphabet,
    AlphabetMismatch,
    IndependenceRelation,
    Lang,
    LanguageError,
    Relation,
    StateBudgetExceeded,
)

from conftest import AB, ABU, AU, as_set, langs, words


def lang(alphabet, *ws):
    return Lang.from_words(alphabet, ws)


# ---------------------------------------------------------------------------
# construction and canonical form


def test_equal_languages_have_equal_values():
    a = Lang.from_dfa(AB, {(0, "a"): 1, (1, "a"): 0}, 0, [0])
    b = Lang.from_dfa(AB, {(0, "a"): 1, (1, "a"): 2, (2, "a"): 3, (3, "a"): 0}, 0, [0, 2])
    assert a == b
    assert hash(a) == hash(b)
    assert a.num_states == 3  # two live states plus the sink


def test_partial_transitions_complete_with_sink():
    k = Lang.from_dfa(AB, {(0, "a"): 1}, 0, [1])
    assert k.accepts("a")
    assert not k.accepts("b") and not k.accepts("aa")


def test_unknown_symbol_rejected():
    with pytest.raises(LanguageError):
        Lang.from_words(AB, ["c"])


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        Lang.universal(AB) | Lang.universal(ABU)


def test_bad_alphabet_declarations():
    with pytest.raises(LanguageError):
        Alphabet(("a", "a"))
    with pytest.raises(LanguageError):
        Alphabet(("a",), observable=frozenset({"z"}))


def test_state_budget():
    k = lang(AB, *("".join(w) for w in lc.all_words(AB, 6)))
    with lc.state_budget(4):
        with pytest.raises(StateBudgetExceeded):
            lc.concat(k, k)
    assert lc.current_state_budget() == lc.DEFAULT_STATE_BUDGET


# ---------------------------------------------------------------------------
# values checked against word enumeration


def test_difference():
    assert as_set(lang(ABU, "", "a", "b", "ab", "au") - lang(ABU, "", "b", "a", "ab"), 3) == {"au"}


def test_concat_with_universal():
    k = lc.concat(lang(AB, "a"), Lang.universal(AB))
    expected = {"".join(w) for w in lc.all_words(AB, 3) if w[:1] == ("a",)}
    assert as_set(k, 3) == expected


def test_kleene_star():
    k = lc.kleene_star(lang(AU, "u"))
    assert as_set(k, 4) == {"", "u", "uu", "uuu", "uuuu"}


def test_prefix_closure():
    assert as_set(lc.prefix_closure(lang(ABU, "b", "ab")), 3) == {"", "a", "b", "ab"}


@pytest.mark.parametrize(
    "members, expected",
    [(("au",), {"a", "au"}), (("u", "au"), {"", "u", "a", "au"})],
)
def test_right_quotient_star(members, expected):
    assert as_set(lc.right_quotient_star(lang(AU, *members), {"u"}), 4) == expected


def test_projection():
    assert as_set(lc.project(lang(ABU, "ab", "u"), {"a", "b"}), 3) == {"ab", ""}
    assert as_set(lc.project(lang(ABU, "au", "b"), {"a", "b"}), 3) == {"a", "b"}


def test_inverse_projection():
    sigma = Alphabet(("a", "b", "u"), observable=frozenset({"a", "b"}))
    eps = Lang.epsilon(sigma.projected(sigma.observable))
    assert lc.inverse_project(eps, sigma) == lc.kleene_star(lang(sigma, "u"))

    sigma = Alphabet(("a", "b"), observable=frozenset({"a"}))
    k = lc.inverse_project(Lang.from_words(sigma.projected({"a"}), ["a"]), sigma)
    expected = {"".join(w) for w in lc.all_words(sigma, 3) if w.count("a") == 1}
    assert as_set(k, 3) == expected


def test_compare():
    assert lc.compare(lang(AB, "", "a"), lang(AB, "", "b")) is Relation.INCOMPARABLE
    assert lc.compare(lang(AB, "a"), lang(AB, "a", "b")) is Relation.A_SUBSET
    assert lc.compare(lang(AB, "a"), lang(AB, "a")) is Relation.EQUAL


def test_enumerate_order():
    assert lc.enumerate_words(Lang.universal(AB), 1) == words("", "a", "b")
    assert Lang.empty(AB).words(5) == []


def test_shortest_word_is_length_lex_least():
    assert lang(AB, "bb", "ba", "aab").shortest_word() == ("b", "a")
    assert Lang.empty(AB).shortest_word() is None


def test_trace_closure_against_permutations():
    abc = Alphabet(("a", "b", "c"))
    ind = IndependenceRelation(abc, [("a", "b"), ("b", "c")])
    got = lc.trace_closure_bounded(["abc"], ind, 3)
    assert got == {("a", "b", "c"), ("b", "a", "c"), ("a", "c", "b")}
    # independent oracle: a permutation is equivalent iff every dependent pair keeps its order
    expected = set()
    for p in set(permutations("abc")):
        order = {s: i for i, s in enumerate(p)}
        if all(
            order[x] < order[y]
            for i, x in enumerate("abc")
            for y in "abc"[i + 1:]
            if not ind.independent(x, y)
        ):
            expected.add(p)
    assert got == expected


def test_trace_closure_small_cases():
    ind = IndependenceRelation(AB, [("a", "b")])
    assert lc.trace_closure_bounded(["aa"], ind, 2) == {("a", "a")}
    assert lc.trace_closure_bounded(["ab"], ind, 2) == {("a", "b"), ("b", "a")}


def test_trace_closure_rejects_long_words():
    with pytest.raises(LanguageError):
        lc.trace_closure_bounded(["aaa"], IndependenceRelation(AB, [("a", "b")]), 2)


def test_independence_irreflexive():
    with pytest.raises(LanguageError):
        IndependenceRelation(AB, [("a", "a")])


def test_finiteness():
    assert lang(AB, "ab", "b").is_finite()
    assert not lc.kleene_star(lang(AB, "a")).is_finite()
    assert Lang.empty(AB).is_finite()


# ---------------------------------------------------------------------------
# properties

SETTINGS = settings(max_examples=60, deadline=None)


@SETTINGS
@given(langs(), langs())
def test_boolean_operations_match_membership(a, b):
    for w in lc.all_words(AB, 4):
        assert (a | b).accepts(w) == (a.accepts(w) or b.accepts(w))
        assert (a & b).accepts(w) == (a.accepts(w) and b.accepts(w))
        assert (a - b).accepts(w) == (a.accepts(w) and not b.accepts(w))


@SETTINGS
@given(langs())
def test_canonical_form_is_stable(k):
    rebuilt = Lang.from_dfa(
        k.alphabet,
        {(q, s): k.delta[q][i] for q in range(k.num_states) for i, s in enumerate(k.alphabet.symbols)},
        0,
        k.accepting,
    )
    assert rebuilt.delta == k.delta and rebuilt.accepting == k.accepting
    assert lc.complement(lc.complement(k)) == k


@SETTINGS
@given(langs())
def test_prefix_closure_laws(k):
    pc = lc.prefix_closure(k)
    assert k <= pc
    assert lc.prefix_closure(pc) == pc
    for w in pc.words(3):
        assert all(pc.accepts(w[:i]) for i in range(len(w)))


@SETTINGS
@given(langs(ABU))
def test_quotient_contains_language(k):
    q = lc.right_quotient_star(k, {"u"})
    assert k <= q
    assert lc.right_quotient_star(q, {"u"}) == q


@SETTINGS
@given(langs(Alphabet(("a", "b", "u"), observable=frozenset({"a", "b"}))))
def test_projection_round_trip(k):
    p = lc.project(k)
    assert lc.project(lc.inverse_project(p, k.alphabet)) == p
    assert k <= lc.inverse_project(p, k.alphabet)


@SETTINGS
@given(st.sets(st.sampled_from(["".join(w) for w in lc.all_words(Alphabet(("a", "b", "c")), 3)]), max_size=8))
def test_trace_closure_is_a_fixpoint(strings):
    abc = Alphabet(("a", "b", "c"))
    ind = IndependenceRelation(abc, [("a", "c")])
    once = lc.trace_closure_bounded(strings, ind, 3)
    assert {abc.word(s) for s in strings} <= once
    assert lc.trace_closure_bounded(once, ind, 3) == once


@SETTINGS
@given(langs(max_states=4), langs(max_states=4))
def test_equality_matches_enumeration(a, b):
    n = a.num_states + b.num_states
    assert (lc.compare(a, b) is Relation.EQUAL) == (lc.enumerate_words(a, n) == lc.enumerate_words(b, n))
