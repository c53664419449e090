"""Command-line entry point: ``suprema synth|check|axioms|enum|oracle``.

Exit status: 0 success, 1 property violation (or oracle disagreement),
2 malformed input, 3 non-convergence, 4 state budget exceeded,
5 internal invariant failure.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from suprema import lang as lc
from suprema import operators as ops
from suprema import solvers
from suprema.fileformat import (
    ProblemFile,
    canonical_json,
    load_problem,
    partial_chain_to_json,
    result_to_json,
    to_dot,
    words_to_json,
)
from suprema.lang import Lang, LanguageError, StateBudgetExceeded
from suprema.oracle import brute_force_supremal, check_definition
from suprema.sampling import random_lang
from suprema.topology import check_axioms, check_clopen, identity_operator

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_NONCONVERGENCE = 3
EXIT_RESOURCES = 4
EXIT_INTERNAL = 5

LANGS = ("spec", "plant_closed", "plant_marked")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise LanguageError(f"environment variable {name} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# solver dispatch


def build_operator(name: str, pf: ProblemFile):
    p = pf.problem
    kind = ops.OperatorKind.named(
        name,
        alphabet=p.alphabet,
        plant_closed=p.plant_closed,
        plant_marked=p.plant_marked,
        independence=p.independence,
        bound=p.bound,
    )
    return ops.make_operator(kind)


def build_outer(name: str, inner, pf: ProblemFile):
    """Outer closure with its dual; ``identity`` lives on the inner carrier."""
    if name == "identity":
        return identity_operator(inner.carrier)
    if name == "prefix_closure":
        return ops.prefix_pair(pf.problem.alphabet)
    op = build_operator(name, pf)
    if op.claimed_clopen:
        return ops.self_dual(op)
    raise ops.ConfigurationError(f"outer operator {name!r} has no known dual")


def solve(pf: ProblemFile, max_iter: int, max_inner: int) -> tuple[str, solvers.SolverResult]:
    cfg = pf.solver
    if "name" not in cfg:
        raise ops.ConfigurationError("problem file does not select a solver")
    name = cfg["name"]
    max_iter = cfg.get("max_iter", max_iter)
    max_inner = cfg.get("max_inner", max_inner)
    p = pf.problem
    e = p.spec

    if name == "sup_normal":
        return name, solvers.sup_normal(p)
    if name == "sup_l_closed":
        return name, solvers.sup_l_closed(p)
    if name == "sup_prefix_closed_controllable":
        return name, solvers.sup_prefix_closed_controllable(p, cross_check=cfg.get("cross_check", True))
    if name == "sup_controllable":
        return name, solvers.sup_controllable(p, max_iter=max_iter)
    if name == "sup_controllable_normal":
        return name, solvers.sup_controllable_normal(p, max_iter=max_iter, max_inner=max_inner)
    if name == "sup_trace_closed_bounded":
        return name, solvers.sup_trace_closed(p)
    if name == "sup_single":
        return name, solvers.sup_single(e, build_operator(_need(cfg, "operator"), pf))
    if name == "sup_system":
        chosen = [build_operator(n, pf) for n in _need(cfg, "operators")]
        return name, solvers.sup_system(e, chosen, max_iter=max_iter)
    if name == "sup_relaxed":
        inner = [build_operator(n, pf) for n in _need(cfg, "inner")]
        if not inner:
            raise ops.ConfigurationError("sup_relaxed needs at least one inner operator")
        outer = build_outer(_need(cfg, "outer"), inner[0], pf)
        return name, solvers.sup_relaxed(e, outer, inner, max_iter=max_iter, max_inner=max_inner)
    if name == "sup_mixed":
        blocks = []
        for outer_name, inner_name in _need(cfg, "blocks"):
            inner = build_operator(inner_name, pf)
            blocks.append((build_outer(outer_name, inner, pf), inner))
        return name, solvers.sup_mixed(e, blocks, max_iter=max_iter, max_inner=max_inner)
    raise ops.ConfigurationError(f"unknown solver {name!r}")


def _need(cfg: dict, key: str):
    if key not in cfg:
        raise ops.ConfigurationError(f"solver {cfg['name']} needs '{key}'")
    return cfg[key]


# ---------------------------------------------------------------------------
# commands


def _write(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def cmd_synth(args) -> int:
    pf = load_problem(args.file)
    try:
        name, result = solve(pf, args.max_iter, args.max_inner)
    except solvers.NonConvergence as exc:
        record = partial_chain_to_json(pf.solver.get("name", "?"), exc.chain, str(exc), exc.level)
        _write(canonical_json(record), _out(args, "json"))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    if args.emit in ("json", "both"):
        _write(canonical_json(result_to_json(name, result)), _out(args, "json"))
    if args.emit in ("dot", "both"):
        _write(to_dot(result.supremal, name), _out(args, "dot"))
    return EXIT_OK


def _out(args, suffix: str) -> Path | None:
    if args.output is None:
        return None
    return Path(f"{args.output}.{suffix}")


def _select(pf: ProblemFile, which: str) -> Lang:
    return getattr(pf.problem, which)


def cmd_check(args) -> int:
    pf = load_problem(args.file)
    k = _select(pf, args.lang)
    if args.oracle:
        bound = args.bound if args.bound is not None else pf.problem.bound
        if bound is None:
            bound = k.num_states
        if not lc.within_length(k, bound):
            raise LanguageError(f"--oracle needs a finite language within the bound {bound}")
        holds, witness = check_definition(k.words(bound), pf.problem, args.property, bound)
    else:
        holds, witness = solvers.check_property(k, pf.problem, args.property)
    record = {
        "lang": args.lang,
        "property": args.property,
        "holds": holds,
        "witness": None if witness is None else words_to_json(k.alphabet, [witness])[0],
    }
    sys.stdout.write(canonical_json(record))
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_axioms(args) -> int:
    pf = load_problem(args.file)
    op = build_operator(args.operator, pf)
    rng = random.Random(args.seed)
    alphabet = pf.problem.alphabet

    def sample() -> Lang:
        return random_lang(rng, alphabet, args.max_states) & op.carrier

    samples = [sample() for _ in range(args.samples)]
    pairs = [(sample(), sample()) for _ in range(args.samples)]
    report = check_axioms(op, samples, pairs)
    clopen = check_clopen(op, samples)

    def verdict(v):
        if v.passed:
            return {"passed": True}
        return {"passed": False, "counterexample": [_lang_summary(c) for c in v.counterexample]}

    record = {
        "operator": args.operator,
        "samples": args.samples,
        "axioms": {name: verdict(v) for name, v in report.verdicts.items()},
        "additive": report.additive,
        "claimed_clopen": op.claimed_clopen,
        "clopen": verdict(clopen.verdicts["clopen"]),
    }
    sys.stdout.write(canonical_json(record))
    broken = not report.passed or (op.claimed_clopen and not clopen.passed)
    return EXIT_VIOLATION if broken else EXIT_OK


def _lang_summary(k: Lang) -> dict:
    from suprema.fileformat import lang_to_json

    return {"automaton": lang_to_json(k), "sample_words": words_to_json(k.alphabet, k.words(3))}


def cmd_enum(args) -> int:
    pf = load_problem(args.file)
    k = _select(pf, args.lang)
    listed = words_to_json(k.alphabet, k.words(args.bound))
    if args.emit == "json":
        sys.stdout.write(canonical_json(listed))
    else:
        for w in k.words(args.bound):
            print(k.alphabet.format_word(w))
    return EXIT_OK


def cmd_oracle(args) -> int:
    pf = load_problem(args.file)
    name = pf.solver.get("name")
    if name not in solvers.SOLVER_PROPERTIES:
        raise ops.ConfigurationError(
            f"oracle supports the solvers {sorted(solvers.SOLVER_PROPERTIES)}, not {name!r}"
        )
    p = pf.problem
    bound = args.bound if args.bound is not None else p.bound
    if bound is None:
        raise ops.ConfigurationError("oracle needs --bound or a bound in the problem file")
    restricted = p.spec.words(bound)
    props = solvers.SOLVER_PROPERTIES[name]
    expected = sorted(brute_force_supremal(restricted, p, props, bound), key=p.alphabet.sort_key)
    engine_pf = ProblemFile(p.with_spec(Lang.from_words(p.alphabet, restricted)), pf.solver)
    _, result = solve(engine_pf, args.max_iter, args.max_inner)
    got = result.supremal.words(bound)
    record = {
        "solver": name,
        "properties": list(props),
        "bound": bound,
        "oracle": words_to_json(p.alphabet, expected),
        "engine": words_to_json(p.alphabet, got),
        "agrees": got == expected,
    }
    sys.stdout.write(canonical_json(record))
    return EXIT_OK if got == expected else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="suprema", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--max-iter", type=int, default=None, help="outer iteration budget")
        p.add_argument("--max-inner", type=int, default=None, help="inner iteration budget")
        p.add_argument("--max-states", dest="state_budget", type=int, default=None,
                       help="state budget for any single automaton construction")

    p = sub.add_parser("synth", help="run the solver selected in the problem file")
    p.add_argument("file")
    p.add_argument("--emit", choices=("json", "dot", "both"), default="json")
    p.add_argument("-o", "--output", help="write PREFIX.json / PREFIX.dot instead of stdout")
    budgets(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("check", help="test a defining property of one language")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=solvers.PROPERTIES)
    p.add_argument("--lang", choices=LANGS, default="spec")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="use the brute-force word-level check")
    budgets(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("axioms", help="sampled S1-S4 and clopen report for an operator")
    p.add_argument("file")
    p.add_argument("--operator", required=True, choices=sorted(ops.FILE_NAMES))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-states", dest="max_states", type=int, default=6)
    budgets(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("enum", help="list the words of a language up to a length")
    p.add_argument("file")
    p.add_argument("--lang", choices=LANGS, default="spec")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--emit", choices=("text", "json"), default="text")
    budgets(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("oracle", help="brute-force supremal for the selected solver")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None)
    budgets(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.max_iter is None:
            args.max_iter = _env_int("SUPREMA_MAX_ITER", solvers.DEFAULT_MAX_ITER)
        if args.max_inner is None:
            args.max_inner = _env_int("SUPREMA_MAX_ITER", solvers.DEFAULT_MAX_ITER)
        if args.state_budget is None:
            args.state_budget = _env_int("SUPREMA_MAX_STATES", lc.DEFAULT_STATE_BUDGET)
        with lc.state_budget(args.state_budget):
            return args.func(args)
    except StateBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    except solvers.NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except solvers.InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LanguageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
