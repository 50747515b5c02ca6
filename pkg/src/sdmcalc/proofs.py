"""Derivation trees, the proof checker, and the proof file format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .rules import BY_NAME, match, system_rules
from .sexpr import parse, render
from .terms import Term, formula_subterms, subterms, well_sorted


class ProofFormatError(Exception):
    pass


@dataclass(frozen=True)
class ProofTree:
    rule: str
    conclusion: Term
    premises: tuple["ProofTree", ...] = ()

    def nodes(self):
        yield self
        for t in self.premises:
            yield from t.nodes()

    def depth(self) -> int:
        if not self.premises:
            return 1
        return 1 + max(t.depth() for t in self.premises)


@dataclass
class CheckReport:
    accepted: bool
    diagnostics: list[tuple[str, str]] = field(default_factory=list)
    cut_free: bool = False
    subformula: bool = False

    def to_json(self):
        return {
            "accepted": self.accepted,
            "cut_free": self.cut_free,
            "subformula": self.subformula,
            "diagnostics": [{"node": p, "message": m} for p, m in self.diagnostics],
        }


def check_proof(t: ProofTree, system: str) -> CheckReport:
    """Accept iff every node instantiates one schema of the system."""
    allowed = {r.name: r for r in system_rules(system)}
    diagnostics: list[tuple[str, str]] = []

    def walk(node: ProofTree, path: str) -> None:
        if not well_sorted(node.conclusion):
            diagnostics.append((path, "conclusion is not a well-sorted sequent"))
            return
        schema = allowed.get(node.rule)
        if schema is None:
            if node.rule in BY_NAME:
                diagnostics.append((path, f"rule {node.rule} is not part of system {system}"))
            else:
                diagnostics.append((path, f"unknown rule {node.rule}"))
            return
        if len(schema.premises) != len(node.premises):
            diagnostics.append(
                (path, f"rule {node.rule} takes {len(schema.premises)} premises, got {len(node.premises)}")
            )
            return
        subst = match(schema.conclusion, node.conclusion)
        if subst is None:
            diagnostics.append((path, f"conclusion does not instantiate {node.rule}"))
            return
        for i, (pat, child) in enumerate(zip(schema.premises, node.premises)):
            subst = match(pat, child.conclusion, subst)
            if subst is None:
                diagnostics.append(
                    (path, f"premise {i + 1} does not instantiate {node.rule} "
                           "(a metavariable is bound inconsistently or the shape differs)")
                )
                return
        for i, child in enumerate(node.premises):
            walk(child, f"{path}.{i + 1}" if path else str(i + 1))

    walk(t, "")
    accepted = not diagnostics
    cut_free = accepted and all(
        not (BY_NAME.get(n.rule) and BY_NAME[n.rule].is_cut) for n in t.nodes()
    )
    return CheckReport(accepted, diagnostics, cut_free, accepted and _subformula_property(t))


def _subformula_property(t: ProofTree) -> bool:
    """Every formula in the tree is a subformula of an end-sequent formula."""
    allowed: set[Term] = set()
    for f in formula_subterms(t.conclusion):
        for sub in subterms(f):
            allowed.add(sub)
    for node in t.nodes():
        for f in formula_subterms(node.conclusion):
            if f not in allowed:
                return False
    return True


def proof_to_json(t: ProofTree) -> dict:
    return {
        "rule": t.rule,
        "conclusion": render(t.conclusion),
        "premises": [proof_to_json(c) for c in t.premises],
    }


def proof_from_json(data) -> ProofTree:
    if not isinstance(data, dict):
        raise ProofFormatError("proof node must be an object")
    for key in ("rule", "conclusion"):
        if key not in data:
            raise ProofFormatError(f"proof node lacks {key!r}")
    try:
        conclusion = parse(data["conclusion"], "seq")
    except Exception as e:
        raise ProofFormatError(f"bad conclusion {data['conclusion']!r}: {e}") from None
    premises = tuple(proof_from_json(c) for c in data.get("premises", []))
    return ProofTree(str(data["rule"]), conclusion, premises)


def load_proof(text: str) -> ProofTree:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProofFormatError(f"not valid JSON: {e}") from None
    return proof_from_json(data)


def dump_proof(t: ProofTree) -> str:
    return json.dumps(proof_to_json(t), indent=2)
