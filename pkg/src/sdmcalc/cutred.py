"""Principal cut reductions.

Handles exactly the displayed cases: atoms, the four constants, the kernel
negation, the four binary connectives, and the two bridge connectives.
Parametric cuts (cut formula not introduced by the last rule on both sides)
are rejected.
"""

from __future__ import annotations

from .proofs import ProofTree
from .rules import BY_NAME
from .terms import Term, term


class CutReductionError(Exception):
    pass


def _seq(a, b):
    return term("seq", a, b)


def _node_at(t: ProofTree, path: tuple[int, ...]) -> ProofTree:
    for i in path:
        try:
            t = t.premises[i]
        except IndexError:
            raise CutReductionError(f"no premise {i} along path") from None
    return t


def _replace_at(t: ProofTree, path: tuple[int, ...], new: ProofTree) -> ProofTree:
    if not path:
        return new
    i = path[0]
    premises = list(t.premises)
    premises[i] = _replace_at(premises[i], path[1:], new)
    return ProofTree(t.rule, t.conclusion, tuple(premises))


def cut_formula(node: ProofTree) -> Term:
    if not (BY_NAME.get(node.rule) and BY_NAME[node.rule].is_cut):
        raise CutReductionError(f"rule {node.rule} is not a cut")
    return node.premises[0].conclusion.args[1]


def formula_complexity(f: Term) -> int:
    """Connective count; atoms and constants weigh nothing."""
    if f.head == "atom" or not f.args:
        return 0
    return 1 + sum(formula_complexity(a) for a in f.args)


def cut_complexities(t: ProofTree) -> list[int]:
    """Multiset of cut-formula complexities over the whole tree."""
    out = []
    for node in t.nodes():
        schema = BY_NAME.get(node.rule)
        if schema is not None and schema.is_cut:
            out.append(formula_complexity(cut_formula(node)))
    return sorted(out)


def reduce_cut(t: ProofTree, path: tuple[int, ...]) -> ProofTree:
    """Rewrite the principal cut at ``path``; the conclusion is unchanged."""
    node = _node_at(t, path)
    f = cut_formula(node)
    left, right = node.premises
    reduced = _reduce(node, f, left, right)
    if reduced.conclusion != node.conclusion:
        raise CutReductionError("reduction changed the conclusion sequent")
    return _replace_at(t, path, reduced)


def _require(node: ProofTree, rule: str) -> None:
    if node.rule != rule:
        raise CutReductionError(
            f"cut formula is not principal: expected {rule}, found {node.rule}"
        )


def _reduce(node: ProofTree, f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    head = f.head
    if head == "atom":
        _require(left, "Id")
        _require(right, "Id")
        return ProofTree("Id", node.conclusion)
    if head == "top":
        _require(left, "top_R")
        _require(right, "top_L")
        return right.premises[0]
    if head == "one":
        _require(left, "one_R")
        _require(right, "one_L")
        return right.premises[0]
    if head == "bot":
        _require(left, "bot_R")
        _require(right, "bot_L")
        return left.premises[0]
    if head == "zero":
        _require(left, "zero_R")
        _require(right, "zero_L")
        return left.premises[0]
    if head == "sim":
        return _reduce_sim(f, left, right)
    if head == "and":
        return _reduce_and(f, left, right)
    if head == "or":
        return _reduce_or(f, left, right)
    if head == "cap":
        return _reduce_cap(f, left, right)
    if head == "cup":
        return _reduce_cup(f, left, right)
    if head == "box":
        return _reduce_box(f, left, right)
    if head == "circ":
        return _reduce_circ(f, left, right)
    raise CutReductionError(f"no displayed reduction for cut formula head {head!r}")


def _reduce_sim(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "sim_R")
    _require(right, "sim_L")
    alpha = f.args[0]
    gamma = left.conclusion.args[0]
    delta = right.conclusion.args[1]
    star = lambda x: term("tstar", x)
    p1 = left.premises[0]  # gamma |- tstar alpha
    p2 = right.premises[0]  # tstar alpha |- delta
    q2 = ProofTree("adj_star1.dn", _seq(star(delta), alpha), (p2,))
    q1 = ProofTree("adj_star2.dn", _seq(alpha, star(gamma)), (p1,))
    cut = ProofTree("Cut_D", _seq(star(delta), star(gamma)), (q2, q1))
    return ProofTree("cont.up", _seq(gamma, delta), (cut,))


def _reduce_and(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "and_R")
    _require(right, "and_L")
    a, b = f.args
    p1, p2 = left.premises  # X |- A ; Y |- B
    p3 = right.premises[0]  # A hand B |- Z
    x = p1.conclusion.args[0]
    y = p2.conclusion.args[0]
    z = p3.conclusion.args[1]
    hand, carr = (lambda u, v: term("hand", u, v)), (lambda u, v: term("carr", u, v))
    t = ProofTree("res_L1.dn", _seq(b, carr(a, z)), (p3,))
    t = ProofTree("Cut_L", _seq(y, carr(a, z)), (p2, t))
    t = ProofTree("res_L1.up", _seq(hand(a, y), z), (t,))
    t = ProofTree("E_L.l", _seq(hand(y, a), z), (t,))
    t = ProofTree("res_L1.dn", _seq(a, carr(y, z)), (t,))
    t = ProofTree("Cut_L", _seq(x, carr(y, z)), (p1, t))
    t = ProofTree("res_L1.up", _seq(hand(y, x), z), (t,))
    return ProofTree("E_L.l", _seq(hand(x, y), z), (t,))


def _reduce_or(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "or_R")
    _require(right, "or_L")
    a, b = f.args
    p1 = left.premises[0]  # X' |- A cvee B
    p2a, p2b = right.premises  # A |- X ; B |- Y
    xp = p1.conclusion.args[0]
    x = p2a.conclusion.args[1]
    y = p2b.conclusion.args[1]
    cvee, hexcl = (lambda u, v: term("cvee", u, v)), (lambda u, v: term("hexcl", u, v))
    t = ProofTree("res_L2.dn", _seq(hexcl(a, xp), b), (p1,))
    t = ProofTree("Cut_L", _seq(hexcl(a, xp), y), (t, p2b))
    t = ProofTree("res_L2.up", _seq(xp, cvee(a, y)), (t,))
    t = ProofTree("E_L.r", _seq(xp, cvee(y, a)), (t,))
    t = ProofTree("res_L2.dn", _seq(hexcl(y, xp), a), (t,))
    t = ProofTree("Cut_L", _seq(hexcl(y, xp), x), (t, p2a))
    t = ProofTree("res_L2.up", _seq(xp, cvee(y, x)), (t,))
    return ProofTree("E_L.r", _seq(xp, cvee(x, y)), (t,))


def _reduce_cap(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "cap_R")
    _require(right, "cap_L")
    a, b = f.args
    p1, p2 = left.premises  # Gamma |- alpha ; Delta |- beta
    p3 = right.premises[0]  # alpha hcap beta |- Theta
    g = p1.conclusion.args[0]
    d = p2.conclusion.args[0]
    th = p3.conclusion.args[1]
    hcap, csup = (lambda u, v: term("hcap", u, v)), (lambda u, v: term("csup", u, v))
    t = ProofTree("res_D1.dn", _seq(b, csup(a, th)), (p3,))
    t = ProofTree("Cut_D", _seq(d, csup(a, th)), (p2, t))
    t = ProofTree("res_D1.up", _seq(hcap(a, d), th), (t,))
    t = ProofTree("E_D.l", _seq(hcap(d, a), th), (t,))
    t = ProofTree("res_D1.dn", _seq(a, csup(d, th)), (t,))
    t = ProofTree("Cut_D", _seq(g, csup(d, th)), (p1, t))
    t = ProofTree("res_D1.up", _seq(hcap(d, g), th), (t,))
    return ProofTree("E_D.l", _seq(hcap(g, d), th), (t,))


def _reduce_cup(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "cup_R")
    _require(right, "cup_L")
    a, b = f.args
    p1 = left.premises[0]  # Gamma' |- alpha ccup beta
    p2a, p2b = right.premises  # alpha |- Gamma ; beta |- Delta
    gp = p1.conclusion.args[0]
    g = p2a.conclusion.args[1]
    d = p2b.conclusion.args[1]
    ccup, hsup = (lambda u, v: term("ccup", u, v)), (lambda u, v: term("hsup", u, v))
    t = ProofTree("res_D2.dn", _seq(hsup(a, gp), b), (p1,))
    t = ProofTree("Cut_D", _seq(hsup(a, gp), d), (t, p2b))
    t = ProofTree("res_D2.up", _seq(gp, ccup(a, d)), (t,))
    t = ProofTree("E_D.r", _seq(gp, ccup(d, a)), (t,))
    t = ProofTree("res_D2.dn", _seq(hsup(d, gp), a), (t,))
    t = ProofTree("Cut_D", _seq(hsup(d, gp), g), (t, p2a))
    t = ProofTree("res_D2.up", _seq(gp, ccup(d, g)), (t,))
    return ProofTree("E_D.r", _seq(gp, ccup(g, d)), (t,))


def _reduce_box(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "box_R")
    _require(right, "box_L")
    alpha = f.args[0]
    p1 = left.premises[0]  # X |- cbox alpha
    p2 = right.premises[0]  # alpha |- Delta
    x = p1.conclusion.args[0]
    d = p2.conclusion.args[1]
    t = ProofTree("adj_LD.dn", _seq(term("hloz", x), alpha), (p1,))
    t = ProofTree("Cut_D", _seq(term("hloz", x), d), (t, p2))
    return ProofTree("adj_LD.up", _seq(x, term("cbox", d)), (t,))


def _reduce_circ(f: Term, left: ProofTree, right: ProofTree) -> ProofTree:
    _require(left, "circ_R")
    _require(right, "circ_L")
    a = f.args[0]
    p1 = left.premises[0]  # Gamma |- tcirc A
    p2 = right.premises[0]  # tcirc A |- Delta
    g = p1.conclusion.args[0]
    d = p2.conclusion.args[1]
    t1 = ProofTree("adj_DL2.dn", _seq(term("hbul", g), a), (p1,))
    t2 = ProofTree("adj_DL1.dn", _seq(a, term("cbur", d)), (p2,))
    t = ProofTree("Cut_L", _seq(term("hbul", g), term("cbur", d)), (t1, t2))
    return ProofTree("bullet", _seq(g, d), (t,))
