"""Semi-topological closure operators, their interiors, and sampled axiom checks.

A closure operator lives on a carrier language M.  Its open sets are the
complements (relative to M) of closed sets, and the interior of E is the
largest open subset of E, computed as ``M - (M - E)□``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

from suprema.lang import Lang, LanguageError


class CarrierError(LanguageError):
    """An argument is not contained in the operator's carrier."""


@dataclass(frozen=True, eq=False)
class ClosureOperator:
    """A named self-map on sublanguages of ``carrier`` claiming axioms S1-S4.

    ``dual`` is the operator □' such that X = X□ iff X is □'-open; it is
    needed only by the relaxed solvers.  Self-dual operators (any clopen
    one) report themselves as their dual.
    """

    name: str
    carrier: Lang
    apply: Callable[[Lang], Lang] = field(repr=False)
    claimed_clopen: bool = False
    _dual: ClosureOperator | None = field(default=None, repr=False)
    self_dual: bool = False

    @property
    def dual(self) -> ClosureOperator | None:
        return self if self.self_dual else self._dual

    def check_carrier(self, k: Lang) -> None:
        if k.alphabet != self.carrier.alphabet:
            raise CarrierError(f"{self.name}: argument alphabet differs from the carrier's")
        if not k <= self.carrier:
            witness = (k - self.carrier).shortest_word()
            raise CarrierError(
                f"{self.name}: argument is not inside the carrier "
                f"(e.g. {k.alphabet.format_word(witness)})"
            )

    def __call__(self, k: Lang) -> Lang:
        return closure(self, k)

    def interior(self, k: Lang) -> Lang:
        return interior(self, k)

    def with_dual(self, dual: ClosureOperator) -> ClosureOperator:
        return register_dual(self, dual)


def closure(op: ClosureOperator, k: Lang) -> Lang:
    op.check_carrier(k)
    return op.apply(k)


def interior(op: ClosureOperator, k: Lang) -> Lang:
    """The largest ``op``-open subset of ``k``: M - (M - k)□."""
    op.check_carrier(k)
    m = op.carrier
    return m - op.apply(m - k)


def is_open(op: ClosureOperator, k: Lang) -> bool:
    return interior(op, k) == k


def is_closed(op: ClosureOperator, k: Lang) -> bool:
    return closure(op, k) == k


def register_dual(op: ClosureOperator, dual: ClosureOperator) -> ClosureOperator:
    """Attach the operator whose open sets are exactly ``op``'s closed sets."""
    if dual is op:
        return replace(op, _dual=None, self_dual=True)
    if op.carrier != dual.carrier:
        raise CarrierError(f"cannot pair {op.name} with {dual.name}: carriers differ")
    return replace(op, _dual=dual, self_dual=False)


def identity_operator(carrier: Lang) -> ClosureOperator:
    """K ↦ K on ``carrier``; trivially clopen and self-dual."""
    op = ClosureOperator("identity", carrier, lambda k: k, claimed_clopen=True)
    return register_dual(op, op)


# ---------------------------------------------------------------------------
# Sampled axiom checks

AXIOMS = ("S1", "S2", "S3", "S4", "range")


@dataclass(frozen=True)
class Verdict:
    passed: bool
    counterexample: tuple[Lang, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts for one operator.

    ``additive`` records whether the Kuratowski equality
    A□ ∪ B□ = (A ∪ B)□ held on every pair sample; it is informational.
    """

    operator: str
    verdicts: dict[str, Verdict]
    samples: int
    additive: bool | None = None

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def failures(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if not v.passed]


def axiom_holds(op: ClosureOperator, axiom: str, args: Sequence[Lang]) -> bool:
    """Evaluate one axiom instance; used both to search and to replay counterexamples."""
    f = op.apply
    if axiom == "S1":
        (a,) = args
        return a <= f(a)
    if axiom == "S2":
        (a,) = args
        fa = f(a)
        return f(fa) == fa
    if axiom == "S3":
        a, b = args
        return (f(a) | f(b)) <= f(a | b)
    if axiom == "S4":
        (a,) = args
        return f(a).is_empty()
    if axiom == "range":
        (a,) = args
        return f(a) <= op.carrier
    if axiom == "clopen":
        (a,) = args
        closed = f(a)
        return op.carrier - f(op.carrier - closed) == closed
    raise ValueError(f"unknown axiom {axiom!r}")


def check_axioms(
    op: ClosureOperator,
    samples: Iterable[Lang],
    pair_samples: Iterable[tuple[Lang, Lang]] = (),
) -> AxiomReport:
    """Test S1-S4 (and that images stay inside the carrier) on the given samples.

    S4 is always tested on the empty language.  Failures are reported, not
    raised; each counterexample replays through :func:`axiom_holds`.
    """
    samples = list(samples)
    pair_samples = list(pair_samples)
    for k in samples:
        op.check_carrier(k)
    for a, b in pair_samples:
        op.check_carrier(a)
        op.check_carrier(b)

    verdicts: dict[str, Verdict] = {}
    for axiom in ("S1", "S2", "range"):
        verdicts[axiom] = Verdict(True)
        for k in samples:
            if not axiom_holds(op, axiom, (k,)):
                verdicts[axiom] = Verdict(False, (k,))
                break

    verdicts["S3"] = Verdict(True)
    additive = True
    f = op.apply
    for a, b in pair_samples:
        lhs, rhs = f(a) | f(b), f(a | b)
        if not lhs <= rhs:
            verdicts["S3"] = Verdict(False, (a, b))
            additive = False
            break
        if lhs != rhs:
            additive = False

    empty = Lang.empty(op.carrier.alphabet)
    verdicts["S4"] = Verdict(True) if axiom_holds(op, "S4", (empty,)) else Verdict(False, (empty,))
    ordered = {name: verdicts[name] for name in AXIOMS}
    return AxiomReport(op.name, ordered, len(samples) + len(pair_samples), additive if pair_samples else None)


def check_clopen(op: ClosureOperator, samples: Iterable[Lang]) -> AxiomReport:
    """Check that the closure of every sample is also open.

    Only closure images are tested: they are exactly the closed sets.
    """
    samples = list(samples)
    verdict = Verdict(True)
    for k in samples:
        op.check_carrier(k)
        if not axiom_holds(op, "clopen", (k,)):
            verdict = Verdict(False, (k,))
            break
    return AxiomReport(op.name, {"clopen": verdict}, len(samples))
