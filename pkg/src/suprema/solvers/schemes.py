"""The generic fixed-point schemes over closure operators.

``sup_single``   one topologized equation: the interior.
``sup_system``   several equations on K: iterate composed interiors.
``sup_relaxed``  equations on K□ for an outer closure □ with a dual:
                 solve for X ⊆ K□, then cut back with K ∩ X.
``sup_mixed``    a different outer closure per equation: chain the
                 single-equation relaxed solves.
"""

from __future__ import annotations

from typing import Sequence

from suprema.lang import Lang
from suprema.operators import ConfigurationError
from suprema.solvers.problem import (
    DEFAULT_MAX_ITER,
    InvariantViolation,
    SolverResult,
    iterate,
)
from suprema.topology import ClosureOperator, interior


def _compose_interiors(ops: Sequence[ClosureOperator]):
    def step(k: Lang) -> Lang:
        for op in ops:
            k = interior(op, k)
        return k

    return step


def sup_single(e: Lang, op: ClosureOperator) -> SolverResult:
    """Largest ``op``-open subset of ``e``."""
    op.check_carrier(e)
    inner = interior(op, e)
    chain = [e, inner] if inner == e else [e, inner, interior(op, inner)]
    if chain[-1] != chain[-2]:
        raise InvariantViolation(f"interior of {op.name} is not idempotent")
    return SolverResult(inner, tuple(chain))


def sup_system(e: Lang, ops: Sequence[ClosureOperator], max_iter: int = DEFAULT_MAX_ITER) -> SolverResult:
    """Supremal K ⊆ e that is open for every operator in ``ops``.

    Interiors are applied in list order within each round.
    """
    ops = list(ops)
    if not ops:
        return SolverResult(e, (e, e))
    for op in ops:
        op.check_carrier(e)
    chain = iterate(e, _compose_interiors(ops), max_iter)
    k = chain[-1]
    for op in ops:
        if interior(op, k) != k:
            raise InvariantViolation(f"fixed point is not {op.name}-open")
    return SolverResult(k, tuple(chain))


def _relaxed_step(
    outer: ClosureOperator,
    inner: Sequence[ClosureOperator],
    max_inner: int,
):
    dual = outer.dual
    if dual is None:
        raise ConfigurationError(f"outer operator {outer.name} has no registered dual")
    round_ = _compose_interiors([*inner, dual])
    inner_counts: list[int] = []

    def step(k: Lang) -> Lang:
        start = outer.apply(k)
        for op in inner:
            op.check_carrier(start)
        solved = iterate(start, round_, max_inner, level="inner")
        inner_counts.append(len(solved) - 1)
        return k & solved[-1]

    return step, inner_counts


def _check_relaxed(k: Lang, outer: ClosureOperator, inner: Sequence[ClosureOperator]) -> None:
    closed = outer.apply(k)
    for op in inner:
        if interior(op, closed) != closed:
            raise InvariantViolation(f"closure of the result is not {op.name}-open")


def sup_relaxed(
    e: Lang,
    outer: ClosureOperator,
    inner: Sequence[ClosureOperator],
    max_iter: int = DEFAULT_MAX_ITER,
    max_inner: int = DEFAULT_MAX_ITER,
) -> SolverResult:
    """Supremal K ⊆ e whose closure K□ is open for every inner operator.

    Each round solves X ⊆ K_i□ against the inner operators together with
    the dual of ``outer`` (so X is □-closed), then sets K_{i+1} = K_i ∩ X.
    The outer loop stops at the first repeated value.
    """
    outer.check_carrier(e)
    step, counts = _relaxed_step(outer, inner, max_inner)
    chain = iterate(e, step, max_iter)
    k = chain[-1]
    _check_relaxed(k, outer, inner)
    return SolverResult(k, tuple(chain), inner_iterations=sum(counts))


def sup_mixed(
    e: Lang,
    blocks: Sequence[tuple[ClosureOperator, ClosureOperator]],
    max_iter: int = DEFAULT_MAX_ITER,
    max_inner: int = DEFAULT_MAX_ITER,
) -> SolverResult:
    """Supremal K ⊆ e with K□ᵢ' open for □ᵢ, one (outer, inner) pair per block."""
    blocks = list(blocks)
    if not blocks:
        return SolverResult(e, (e, e))
    steps = []
    counts: list[list[int]] = []
    for outer, inner in blocks:
        outer.check_carrier(e)
        relaxed_step, block_counts = _relaxed_step(outer, [inner], max_inner)
        steps.append(relaxed_step)
        counts.append(block_counts)

    def diamond(relaxed_step):
        # ◇ᵢ: a full relaxed solve on a single-equation system
        def solve(k: Lang) -> Lang:
            return iterate(k, relaxed_step, max_iter, level="block")[-1]

        return solve

    diamonds = [diamond(s) for s in steps]

    def step(k: Lang) -> Lang:
        for d in diamonds:
            k = d(k)
        return k

    chain = iterate(e, step, max_iter)
    k = chain[-1]
    for outer, inner in blocks:
        _check_relaxed(k, outer, [inner])
    return SolverResult(k, tuple(chain), inner_iterations=sum(map(sum, counts)))
