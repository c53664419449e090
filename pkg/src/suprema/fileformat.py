"""Problem files (JSON), canonical serialization and DOT output."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

import jsonschema

from suprema.lang import Alphabet, IndependenceRelation, Lang, LanguageError, Word
from suprema.solvers import SolverResult, SynthesisProblem

DOT_STYLE = {
    "graph": 'rankdir=LR; fontname="Helvetica";',
    "node": 'shape=circle, fontname="Helvetica"',
    "accepting": "doublecircle",
    "start": "point",
}


class ProblemFileError(LanguageError):
    """The problem file is unreadable, fails the schema, or is inconsistent."""


def load_schema() -> dict:
    text = resources.files("suprema").joinpath("problem.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class ProblemFile:
    problem: SynthesisProblem
    solver: dict[str, Any] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# automata


def lang_from_json(alphabet: Alphabet, data: dict) -> Lang:
    if "words" in data:
        words = []
        for w in data["words"]:
            if isinstance(w, str) and w and not all(len(s) == 1 for s in alphabet.symbols):
                raise ProblemFileError(
                    f"word {w!r} given as a string but the alphabet has multi-character symbols"
                )
            words.append(w)
        return Lang.from_words(alphabet, words)
    states = data["states"]
    if data["initial"] not in states:
        raise ProblemFileError(f"initial state {data['initial']!r} is not declared")
    transitions = {}
    for src, sym, dst in data["transitions"]:
        if sym not in alphabet:
            raise ProblemFileError(f"transition {src!r} -{sym}-> {dst!r} uses undeclared symbol")
        if (src, sym) in transitions and transitions[(src, sym)] != dst:
            raise ProblemFileError(f"nondeterministic transitions from {src!r} on {sym!r}")
        transitions[(src, sym)] = dst
    return Lang.from_dfa(alphabet, transitions, data["initial"], data["accepting"], states=states)


def lang_to_json(k: Lang) -> dict:
    """Canonical form with the dead state (if any) left implicit."""
    live = k.live_states()
    if 0 not in live:
        return {"states": [0], "initial": 0, "accepting": [], "transitions": []}
    states = [q for q in range(k.num_states) if q in live]
    transitions = [
        [q, s, k.delta[q][i]]
        for q in states
        for i, s in enumerate(k.alphabet.symbols)
        if k.delta[q][i] in live
    ]
    return {
        "states": states,
        "initial": 0,
        "accepting": sorted(k.accepting),
        "transitions": transitions,
    }


def alphabet_to_json(alphabet: Alphabet) -> dict:
    order = alphabet.index
    return {
        "symbols": list(alphabet.symbols),
        "observable": sorted(alphabet.observable, key=order),
        "uncontrollable": sorted(alphabet.uncontrollable, key=order),
    }


def words_to_json(alphabet: Alphabet, words) -> list[str | list[str]]:
    if all(len(s) == 1 for s in alphabet.symbols):
        return ["".join(w) for w in words]
    return [list(w) for w in words]


# ---------------------------------------------------------------------------
# problems


def problem_from_json(data: dict) -> ProblemFile:
    try:
        jsonschema.validate(data, load_schema())
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ProblemFileError(f"schema violation at {path}: {exc.message}") from None
    a = data["alphabet"]
    alphabet = Alphabet(
        tuple(a["symbols"]),
        frozenset(a["observable"]) if "observable" in a else None,
        frozenset(a.get("uncontrollable", ())),
    )
    automata = data["automata"]
    plant_closed = lang_from_json(alphabet, automata["plant_closed"])
    plant_marked = (
        lang_from_json(alphabet, automata["plant_marked"]) if "plant_marked" in automata else plant_closed
    )
    spec = lang_from_json(alphabet, automata["spec"])
    independence = (
        IndependenceRelation(alphabet, data["independence"]) if "independence" in data else None
    )
    problem = SynthesisProblem(
        alphabet, plant_closed, plant_marked, spec, independence, data.get("bound")
    )
    return ProblemFile(problem, dict(data.get("solver", {})))


def problem_to_json(pf: ProblemFile) -> dict:
    p = pf.problem
    out: dict[str, Any] = {
        "alphabet": alphabet_to_json(p.alphabet),
        "automata": {
            "plant_closed": lang_to_json(p.plant_closed),
            "plant_marked": lang_to_json(p.plant_marked),
            "spec": lang_to_json(p.spec),
        },
    }
    if p.independence is not None:
        out["independence"] = [list(pair) for pair in p.independence.sorted_pairs()]
    if p.bound is not None:
        out["bound"] = p.bound
    if pf.solver:
        out["solver"] = pf.solver
    return out


def load_problem(path) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path} is not valid JSON: {exc}") from None
    return problem_from_json(data)


def canonical_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# results


def members(k: Lang) -> list[Word] | None:
    """All members of a finite language, ``None`` for infinite ones."""
    if not k.is_finite():
        return None
    return k.words(k.num_states)


def result_to_json(name: str, result: SolverResult) -> dict:
    k = result.supremal
    listed = members(k)
    return {
        "solver": name,
        "converged": result.converged,
        "iterations": result.iterations,
        "inner_iterations": result.inner_iterations,
        "chain_length": len(result.chain),
        "stats": list(result.stats),
        "chain": [lang_to_json(c) for c in result.chain],
        "supremal": lang_to_json(k),
        "members": None if listed is None else words_to_json(k.alphabet, listed),
        "warnings": list(result.warnings),
    }


def partial_chain_to_json(name: str, chain, message: str, level: str) -> dict:
    return {
        "solver": name,
        "converged": False,
        "error": message,
        "level": level,
        "iterations": len(chain) - 1,
        "chain_length": len(chain),
        "stats": [c.num_states for c in chain],
        "chain": [lang_to_json(c) for c in chain],
        "supremal": None,
    }


def _dot_quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def to_dot(k: Lang, name: str = "supremal") -> str:
    """DOT text for ``k``; accepting states are double circles."""
    data = lang_to_json(k)
    lines = [f"digraph {_dot_quote(name)} {{", f"  {DOT_STYLE['graph']}", f"  node [{DOT_STYLE['node']}];"]
    lines.append(f"  __start [shape={DOT_STYLE['start']}, label=\"\"];")
    accepting = set(data["accepting"])
    for q in data["states"]:
        shape = DOT_STYLE["accepting"] if q in accepting else "circle"
        label = f"{q} (initial)" if q == data["initial"] else str(q)
        lines.append(f"  {q} [shape={shape}, label={_dot_quote(label)}];")
    lines.append(f"  __start -> {data['initial']};")
    grouped: dict[tuple[int, int], list[str]] = {}
    for src, sym, dst in data["transitions"]:
        grouped.setdefault((src, dst), []).append(sym)
    for (src, dst), syms in grouped.items():
        lines.append(f"  {src} -> {dst} [label={_dot_quote(', '.join(syms))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
