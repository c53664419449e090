"""Concrete closure operators used for supervisory-control properties.

=================  ==========================================  ===========
tag                K ↦                                         carrier
=================  ==========================================  ===========
``N``              P⁻¹P(K) ∩ Lm                                Lm
``L``              KΣ* ∩ Lm                                    Lm
``P``              KΣ*                                         Σ*
``C``              K/Σuc* ∩ L                                  L
``O``              (K/Σuc*)Σ* ∩ L                              L
``A``              P⁻¹P(K/Σuc*) ∩ L   (needs Σc ⊆ Σo)          L
``T_bounded``      [K]_I                                       Σ^{≤n}
``prefix``         prefix closure of K                         Σ*
``prefix_dual``    KΣ*                                         Σ*
=================  ==========================================  ===========

Here L and Lm are the plant's closed and marked behaviours and P is the
natural projection onto the observable symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from suprema import lang as lc
from suprema.lang import Alphabet, IndependenceRelation, Lang, LanguageError
from suprema.topology import ClosureOperator, register_dual

TAGS = ("N", "L", "P", "C", "O", "A", "T_bounded", "prefix", "prefix_dual")

# names used in problem files
FILE_NAMES = {
    "normal": "N",
    "lclosed": "L",
    "prefix": "P",
    "controllable_c": "C",
    "controllable_o": "O",
    "controllable_normal_a": "A",
    "trace_bounded": "T_bounded",
    "prefix_closure": "prefix",
    "prefix_dual": "prefix_dual",
}

CLOPEN = frozenset({"N", "T_bounded"})


class ConfigurationError(LanguageError):
    """An operator or solver was configured with inconsistent parameters."""


@dataclass(frozen=True)
class OperatorKind:
    """Tag plus whichever plant parameters that tag needs."""

    tag: str
    alphabet: Alphabet
    plant_closed: Lang | None = None
    plant_marked: Lang | None = None
    independence: IndependenceRelation | None = None
    bound: int | None = None

    @classmethod
    def named(cls, name: str, **params) -> OperatorKind:
        """Build from a problem-file name such as ``"controllable_o"``."""
        try:
            tag = FILE_NAMES[name]
        except KeyError:
            raise ConfigurationError(
                f"unknown operator {name!r}; expected one of {sorted(FILE_NAMES)}"
            ) from None
        return cls(tag, **params)


def _need(kind: OperatorKind, attr: str):
    value = getattr(kind, attr)
    if value is None:
        raise ConfigurationError(f"operator {kind.tag} requires {attr}")
    if isinstance(value, Lang) and value.alphabet != kind.alphabet:
        raise ConfigurationError(f"operator {kind.tag}: {attr} is over a different alphabet")
    return value


def observation_closure(k: Lang) -> Lang:
    """P⁻¹P(k): every word that looks like a member of ``k``."""
    return lc.inverse_project(lc.project(k), k.alphabet)


def make_operator(kind: OperatorKind) -> ClosureOperator:
    sigma = kind.alphabet
    uc = sigma.uncontrollable
    tag = kind.tag

    if tag == "N":
        lm = _need(kind, "plant_marked")
        return ClosureOperator("N", lm, lambda k: observation_closure(k) & lm, claimed_clopen=True)
    if tag == "L":
        lm = _need(kind, "plant_marked")
        return ClosureOperator("L", lm, lambda k: lc.suffix_extension(k) & lm)
    if tag in ("P", "prefix_dual"):
        return ClosureOperator(tag, Lang.universal(sigma), lc.suffix_extension)
    if tag == "prefix":
        return ClosureOperator("prefix", Lang.universal(sigma), lc.prefix_closure)
    if tag == "C":
        plant = _need(kind, "plant_closed")
        return ClosureOperator("C", plant, lambda k: lc.right_quotient_star(k, uc) & plant)
    if tag == "O":
        plant = _need(kind, "plant_closed")
        return ClosureOperator(
            "O", plant, lambda k: lc.suffix_extension(lc.right_quotient_star(k, uc)) & plant
        )
    if tag == "A":
        plant = _need(kind, "plant_closed")
        if not sigma.controllable <= sigma.observable:
            raise ConfigurationError(
                "operator A requires every controllable symbol to be observable; "
                f"unobservable controllable: {sorted(sigma.controllable - sigma.observable)}"
            )
        return ClosureOperator(
            "A", plant, lambda k: observation_closure(lc.right_quotient_star(k, uc)) & plant
        )
    if tag == "T_bounded":
        independence = _need(kind, "independence")
        bound = kind.bound
        if bound is None or bound < 0:
            raise ConfigurationError("operator T_bounded requires a finite non-negative bound")
        if independence.alphabet != sigma:
            raise ConfigurationError("independence relation is over a different alphabet")
        universe = Lang.from_words(sigma, lc.all_words(sigma, bound))

        def trace(k: Lang) -> Lang:
            if not k.is_finite():
                raise LanguageError("bounded trace closure is defined on finite languages only")
            words = lc.trace_closure_bounded(k.words(bound), independence, bound)
            return Lang.from_words(sigma, words)

        return ClosureOperator("T_bounded", universe, trace, claimed_clopen=True)
    raise ConfigurationError(f"unknown operator tag {tag!r}; expected one of {TAGS}")


def prefix_pair(alphabet: Alphabet) -> ClosureOperator:
    """Prefix closure with its dual K ↦ KΣ* attached."""
    return register_dual(
        make_operator(OperatorKind("prefix", alphabet)),
        make_operator(OperatorKind("prefix_dual", alphabet)),
    )


def self_dual(op: ClosureOperator) -> ClosureOperator:
    return register_dual(op, op)
