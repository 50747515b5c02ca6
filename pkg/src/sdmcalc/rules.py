"""Inference-rule schemas for the six calculi, and schema matching.

Schematic letters follow the usual convention: X Y Z W range over
lattice-sorted structures, Gamma Delta Theta Pi Sigma over kernel-sorted
structures, A B over lattice formulas, alpha beta over kernel formulas, and
p over atoms.  Invertible rules are split into a pair of one-directional
schemas with ``.dn`` / ``.up`` suffixes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import DL, K, SD, SK, Term, is_formula, mvar, sort_of, term

SYSTEMS = ("SM", "LQM", "UQM", "DP", "AP", "WS")

# metavariable name -> (sort, kind)
MVARS = {
    "X": (SD, "structure"), "Y": (SD, "structure"),
    "Z": (SD, "structure"), "W": (SD, "structure"),
    "Gamma": (SK, "structure"), "Delta": (SK, "structure"),
    "Theta": (SK, "structure"), "Pi": (SK, "structure"), "Sigma": (SK, "structure"),
    "A": (DL, "formula"), "B": (DL, "formula"),
    "alpha": (K, "formula"), "beta": (K, "formula"),
    "p": (DL, "atom"),
}


@dataclass(frozen=True)
class RuleSchema:
    name: str
    premises: tuple[Term, ...]
    conclusion: Term
    systems: frozenset[str]
    is_cut: bool = False


class UnknownSystem(Exception):
    pass


def _fits_mvar(t: Term, name: str) -> bool:
    sort, kind = MVARS[name]
    if kind == "atom":
        return t.head == "atom"
    if kind == "formula":
        if not is_formula(t):
            return False
        return sort_of(t) == {SD: DL, SK: K}.get(sort, sort)
    # structure: any structure or formula leaf of the right type
    try:
        got = sort_of(t)
    except Exception:
        return False
    base = {DL: DL, SD: DL, K: K, SK: K}
    return base[got] == base[sort]


def match(pattern: Term, t: Term, subst: dict[str, Term] | None = None) -> dict[str, Term] | None:
    """Most general substitution sending the pattern onto the term."""
    subst = dict(subst) if subst else {}

    def go(p: Term, u: Term) -> bool:
        if p.head == "mvar":
            bound = subst.get(p.name)
            if bound is not None:
                return bound == u
            if not _fits_mvar(u, p.name):
                return False
            subst[p.name] = u
            return True
        if p.head != u.head or p.name != u.name or len(p.args) != len(u.args):
            return False
        return all(go(a, b) for a, b in zip(p.args, u.args))

    return subst if go(pattern, t) else None


def apply_subst(pattern: Term, subst: dict[str, Term]) -> Term:
    if pattern.head == "mvar":
        try:
            return subst[pattern.name]
        except KeyError:
            raise KeyError(f"metavariable {pattern.name} unbound") from None
    if not pattern.args:
        return pattern
    return term(pattern.head, *(apply_subst(a, subst) for a in pattern.args))


def mvars_of(t: Term) -> set[str]:
    out = set()

    def walk(u: Term):
        if u.head == "mvar":
            out.add(u.name)
        for a in u.args:
            walk(a)

    walk(t)
    return out


def _seq(ant: Term, suc: Term) -> Term:
    return term("seq", ant, suc)


def _build_catalog() -> list[RuleSchema]:
    X, Y, Z, W = mvar("X"), mvar("Y"), mvar("Z"), mvar("W")
    G, D, T, P, S = mvar("Gamma"), mvar("Delta"), mvar("Theta"), mvar("Pi"), mvar("Sigma")
    A, B = mvar("A"), mvar("B")
    al, be = mvar("alpha"), mvar("beta")
    p = mvar("p")

    hand = lambda a, b: term("hand", a, b)
    cvee = lambda a, b: term("cvee", a, b)
    hcap = lambda a, b: term("hcap", a, b)
    ccup = lambda a, b: term("ccup", a, b)
    tstar = lambda a: term("tstar", a)

    all_sys = frozenset(SYSTEMS)
    rules: list[RuleSchema] = []

    def rule(name, premises, conclusion, systems=all_sys, is_cut=False):
        rules.append(RuleSchema(name, tuple(premises), conclusion, systems, is_cut))

    def double(name, upper, lower, systems=all_sys):
        rule(f"{name}.dn", [upper], lower, systems)
        rule(f"{name}.up", [lower], upper, systems)

    # identity and cut
    rule("Id", [], _seq(p, p))
    rule("Cut_L", [_seq(X, A), _seq(A, Y)], _seq(X, Y), is_cut=True)
    rule("Cut_D", [_seq(G, al), _seq(al, D)], _seq(G, D), is_cut=True)

    # display rules, lattice type
    double("res_L1", _seq(hand(X, Y), Z), _seq(Y, term("carr", X, Z)))
    double("res_L2", _seq(X, cvee(Y, Z)), _seq(term("hexcl", Y, X), Z))

    # display rules, kernel type
    double("res_D1", _seq(hcap(G, D), T), _seq(D, term("csup", G, T)))
    double("res_D2", _seq(G, ccup(D, T)), _seq(term("hsup", D, G), T))
    double("adj_star1", _seq(tstar(G), D), _seq(tstar(D), G))
    double("adj_star2", _seq(G, tstar(D)), _seq(D, tstar(G)))

    # display rules, mixed type
    double("adj_LD", _seq(X, term("cbox", G)), _seq(term("hloz", X), G))
    double("adj_DL1", _seq(term("tcirc", X), G), _seq(X, term("cbur", G)))
    double("adj_DL2", _seq(G, term("tcirc", X)), _seq(term("hbul", G), X))

    # structural rules, lattice type
    double("top_hat", _seq(X, Y), _seq(hand(X, term("htop")), Y))
    double("bot_check", _seq(X, Y), _seq(X, cvee(Y, term("cbot"))))
    rule("E_L.l", [_seq(hand(X, Y), Z)], _seq(hand(Y, X), Z))
    rule("E_L.r", [_seq(X, cvee(Y, Z))], _seq(X, cvee(Z, Y)))
    double("A_L.l", _seq(hand(hand(X, Y), Z), W), _seq(hand(X, hand(Y, Z)), W))
    double("A_L.r", _seq(X, cvee(cvee(Y, Z), W)), _seq(X, cvee(Y, cvee(Z, W))))
    rule("W_L.l", [_seq(X, Y)], _seq(hand(X, Z), Y))
    rule("W_L.r", [_seq(X, Y)], _seq(X, cvee(Y, Z)))
    rule("C_L.l", [_seq(hand(X, X), Y)], _seq(X, Y))
    rule("C_L.r", [_seq(X, cvee(Y, Y))], _seq(X, Y))

    # structural rules, kernel type
    double("one_hat", _seq(G, D), _seq(hcap(G, term("hone")), D))
    double("zero_check", _seq(G, D), _seq(G, ccup(D, term("czero"))))
    rule("E_D.l", [_seq(hcap(G, D), T)], _seq(hcap(D, G), T))
    rule("E_D.r", [_seq(G, ccup(D, T))], _seq(G, ccup(T, D)))
    double("A_D.l", _seq(hcap(hcap(G, D), T), P), _seq(hcap(G, hcap(D, T)), P))
    double("A_D.r", _seq(G, ccup(ccup(D, T), P)), _seq(G, ccup(D, ccup(T, P))))
    rule("W_D.l", [_seq(G, D)], _seq(hcap(G, T), D))
    rule("W_D.r", [_seq(G, D)], _seq(G, ccup(D, T)))
    rule("C_D.l", [_seq(hcap(G, G), D)], _seq(G, D))
    rule("C_D.r", [_seq(G, ccup(D, D))], _seq(G, D))
    double("cont", _seq(G, D), _seq(tstar(D), tstar(G)))

    # structural rules, mixed type
    rule("tcirc_mono", [_seq(X, Y)], _seq(term("tcirc", X), term("tcirc", Y)))
    rule("bullet", [_seq(term("hbul", G), term("cbur", D))], _seq(G, D))
    rule("loz_one", [_seq(term("hone"), G)], _seq(term("hloz", term("htop")), G))
    rule("box_zero", [_seq(X, term("cbox", term("czero")))], _seq(X, term("cbot")))
    double("tcirc_cbox", _seq(G, term("tcirc", term("cbox", D))), _seq(G, D))

    # operational rules, lattice type
    rule("top_L", [_seq(term("htop"), X)], _seq(term("top"), X))
    rule("top_R", [], _seq(term("htop"), term("top")))
    rule("bot_L", [], _seq(term("bot"), term("cbot")))
    rule("bot_R", [_seq(X, term("cbot"))], _seq(X, term("bot")))
    rule("and_L", [_seq(hand(A, B), X)], _seq(term("and", A, B), X))
    rule("and_R", [_seq(X, A), _seq(Y, B)], _seq(hand(X, Y), term("and", A, B)))
    rule("or_L", [_seq(A, X), _seq(B, Y)], _seq(term("or", A, B), cvee(X, Y)))
    rule("or_R", [_seq(X, cvee(A, B))], _seq(X, term("or", A, B)))

    # operational rules, kernel type
    rule("one_L", [_seq(term("hone"), G)], _seq(term("one"), G))
    rule("one_R", [], _seq(term("hone"), term("one")))
    rule("zero_L", [], _seq(term("zero"), term("czero")))
    rule("zero_R", [_seq(G, term("czero"))], _seq(G, term("zero")))
    rule("cap_L", [_seq(hcap(al, be), G)], _seq(term("cap", al, be), G))
    rule("cap_R", [_seq(G, al), _seq(D, be)], _seq(hcap(G, D), term("cap", al, be)))
    rule("cup_L", [_seq(al, G), _seq(be, D)], _seq(term("cup", al, be), ccup(G, D)))
    rule("cup_R", [_seq(G, ccup(al, be))], _seq(G, term("cup", al, be)))
    rule("sim_L", [_seq(tstar(al), G)], _seq(term("sim", al), G))
    rule("sim_R", [_seq(G, tstar(al))], _seq(G, term("sim", al)))

    # operational rules, mixed type
    rule("circ_L", [_seq(term("tcirc", A), G)], _seq(term("circ", A), G))
    rule("circ_R", [_seq(G, term("tcirc", A))], _seq(G, term("circ", A)))
    rule("box_L", [_seq(al, D)], _seq(term("box", al), term("cbox", D)))
    rule("box_R", [_seq(X, term("cbox", al))], _seq(X, term("box", al)))

    # characteristic rules of the extensions
    rule("lqm", [_seq(X, Y)], _seq(X, term("cbox", term("tcirc", Y))), frozenset({"LQM"}))
    rule("uqm", [_seq(term("hbul", term("hloz", X)), Y)], _seq(X, Y), frozenset({"UQM"}))
    dp_sys = frozenset({"DP", "AP", "WS"})
    rule("res_B.dn", [_seq(hcap(G, D), S)], _seq(D, ccup(tstar(G), S)), dp_sys)
    rule("res_B.up", [_seq(D, ccup(tstar(G), S))], _seq(hcap(G, D), S), dp_sys)
    rule(
        "ap",
        [_seq(X, term("cbox", tstar(term("tcirc", Y))))],
        _seq(hand(X, Y), term("cbot")),
        frozenset({"AP"}),
    )
    rule(
        "ws",
        [_seq(term("hloz", X), D)],
        _seq(
            term("hloz", term("hexcl", term("cbox", tstar(term("tcirc", X))), term("htop"))),
            D,
        ),
        frozenset({"WS"}),
    )

    return rules


CATALOG: tuple[RuleSchema, ...] = tuple(_build_catalog())
BY_NAME: dict[str, RuleSchema] = {r.name: r for r in CATALOG}


def system_rules(system: str) -> list[RuleSchema]:
    tag = system.upper()
    if tag not in SYSTEMS:
        raise UnknownSystem(f"unknown system {system!r}")
    return [r for r in CATALOG if tag in r.systems]


class RuleIndex:
    """Rules bucketed by the head shapes of their conclusion sequents."""

    def __init__(self, rules):
        self.buckets: dict[tuple, list[RuleSchema]] = {}
        for r in rules:
            ant, suc = r.conclusion.args
            key = (
                None if ant.head == "mvar" else ant.head,
                None if suc.head == "mvar" else suc.head,
            )
            self.buckets.setdefault(key, []).append(r)

    def candidates(self, sequent: Term):
        ah, sh = sequent.args[0].head, sequent.args[1].head
        for key in ((ah, sh), (ah, None), (None, sh), (None, None)):
            bucket = self.buckets.get(key)
            if bucket:
                yield from bucket
