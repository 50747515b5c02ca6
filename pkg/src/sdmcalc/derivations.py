"""Checked derivations: the identity constructor and the axiom proofs.

Each builder returns a ProofTree that the checker accepts in the indicated
system.  Where a displayed proof forces an extra exchange step or fixes an
operand order, the transcription keeps the conclusion and inserts the
forced step.
"""

from __future__ import annotations

from .proofs import ProofTree
from .terms import Term, term
from .translation import translate


def _seq(a: Term, b: Term) -> Term:
    return term("seq", a, b)


def _step(rule: str, ant: Term, suc: Term, *premises: ProofTree) -> ProofTree:
    return ProofTree(rule, _seq(ant, suc), premises)


def N(a: Term) -> Term:
    """box sim circ, the two-sorted image of one negation."""
    return term("box", term("sim", term("circ", a)))


def _hand(a, b):
    return term("hand", a, b)


def _cvee(a, b):
    return term("cvee", a, b)


def _hcap(a, b):
    return term("hcap", a, b)


def _ccup(a, b):
    return term("ccup", a, b)


def _tstar(a):
    return term("tstar", a)


def _tcirc(a):
    return term("tcirc", a)


def _cbox(a):
    return term("cbox", a)


def _hloz(a):
    return term("hloz", a)


def _hbul(a):
    return term("hbul", a)


def _circ(a):
    return term("circ", a)


def _sim(a):
    return term("sim", a)


def _box(a):
    return term("box", a)


def identity_proof(a: Term) -> ProofTree:
    """Cut-free proof of a |- a for any two-sorted formula a."""
    h = a.head
    if h == "atom":
        return _step("Id", a, a)
    if h == "top":
        return _step("top_L", a, a, _step("top_R", term("htop"), a))
    if h == "bot":
        return _step("bot_R", a, a, _step("bot_L", a, term("cbot")))
    if h == "one":
        return _step("one_L", a, a, _step("one_R", term("hone"), a))
    if h == "zero":
        return _step("zero_R", a, a, _step("zero_L", a, term("czero")))
    if h == "and":
        b, c = a.args
        left = _step("W_L.l", _hand(b, c), b, identity_proof(b))
        right = _step(
            "E_L.l", _hand(b, c), c, _step("W_L.l", _hand(c, b), c, identity_proof(c))
        )
        both = _step("and_R", _hand(_hand(b, c), _hand(b, c)), a, left, right)
        return _step("and_L", a, a, _step("C_L.l", _hand(b, c), a, both))
    if h == "or":
        b, c = a.args
        left = _step("W_L.r", b, _cvee(b, c), identity_proof(b))
        right = _step(
            "E_L.r", c, _cvee(b, c), _step("W_L.r", c, _cvee(c, b), identity_proof(c))
        )
        both = _step("or_L", a, _cvee(_cvee(b, c), _cvee(b, c)), left, right)
        return _step("or_R", a, a, _step("C_L.r", a, _cvee(b, c), both))
    if h == "cap":
        b, c = a.args
        left = _step("W_D.l", _hcap(b, c), b, identity_proof(b))
        right = _step(
            "E_D.l", _hcap(b, c), c, _step("W_D.l", _hcap(c, b), c, identity_proof(c))
        )
        both = _step("cap_R", _hcap(_hcap(b, c), _hcap(b, c)), a, left, right)
        return _step("cap_L", a, a, _step("C_D.l", _hcap(b, c), a, both))
    if h == "cup":
        b, c = a.args
        left = _step("W_D.r", b, _ccup(b, c), identity_proof(b))
        right = _step(
            "E_D.r", c, _ccup(b, c), _step("W_D.r", c, _ccup(c, b), identity_proof(c))
        )
        both = _step("cup_L", a, _ccup(_ccup(b, c), _ccup(b, c)), left, right)
        return _step("cup_R", a, a, _step("C_D.r", a, _ccup(b, c), both))
    if h == "sim":
        b = a.args[0]
        t = _step("cont.dn", _tstar(b), _tstar(b), identity_proof(b))
        t = _step("sim_R", _tstar(b), a, t)
        return _step("sim_L", a, a, t)
    if h == "box":
        b = a.args[0]
        t = _step("box_L", a, _cbox(b), identity_proof(b))
        return _step("box_R", a, a, t)
    if h == "circ":
        b = a.args[0]
        t = _step("tcirc_mono", _tcirc(b), _tcirc(b), identity_proof(b))
        t = _step("circ_L", a, _tcirc(b), t)
        return _step("circ_R", a, a, t)
    raise ValueError(f"identity_proof: not a two-sorted formula head {h!r}")


def translated_identity(a_single: Term) -> ProofTree:
    return identity_proof(translate(a_single))


def _circ_id(a: Term) -> ProofTree:
    """circ a |- circ a, the opening move of most axiom derivations."""
    t = _step("tcirc_mono", _tcirc(a), _tcirc(a), identity_proof(a))
    t = _step("circ_L", _circ(a), _tcirc(a), t)
    return _step("circ_R", _circ(a), _circ(a), t)


def axiom_ii(a: Term) -> ProofTree:
    """box sim circ a |- its triple, in the base system."""
    ca, na = _circ(a), N(a)
    t = _circ_id(a)
    t = _step("cont.dn", _tstar(ca), _tstar(ca), t)
    t = _step("sim_R", _tstar(ca), _sim(ca), t)
    t = _step("tcirc_cbox.up", _tstar(ca), _tcirc(_cbox(_sim(ca))), t)
    t = _step("adj_DL2.dn", _hbul(_tstar(ca)), _cbox(_sim(ca)), t)
    t = _step("box_R", _hbul(_tstar(ca)), na, t)
    t = _step("adj_DL2.up", _tstar(ca), _tcirc(na), t)
    t = _step("circ_R", _tstar(ca), _circ(na), t)
    t = _step("adj_star1.dn", _tstar(_circ(na)), ca, t)
    t = _step("sim_L", _sim(_circ(na)), ca, t)
    t = _step("box_L", N(na), _cbox(ca), t)
    t = _step("tcirc_mono", _tcirc(N(na)), _tcirc(_cbox(ca)), t)
    t = _step("circ_L", _circ(N(na)), _tcirc(_cbox(ca)), t)
    t = _step("tcirc_cbox.dn", _circ(N(na)), ca, t)
    t = _step("cont.dn", _tstar(ca), _tstar(_circ(N(na))), t)
    t = _step("sim_R", _tstar(ca), _sim(_circ(N(na))), t)
    t = _step("sim_L", _sim(ca), _sim(_circ(N(na))), t)
    t = _step("box_L", na, _cbox(_sim(_circ(N(na)))), t)
    return _step("box_R", na, N(N(na)), t)


def axiom_iii(a: Term) -> ProofTree:
    """The triple negation collapses back onto one."""
    ca, na = _circ(a), N(a)
    t = _circ_id(a)
    t = _step("cont.dn", _tstar(ca), _tstar(ca), t)
    t = _step("sim_L", _sim(ca), _tstar(ca), t)
    t = _step("box_L", na, _cbox(_tstar(ca)), t)
    t = _step("tcirc_mono", _tcirc(na), _tcirc(_cbox(_tstar(ca))), t)
    t = _step("circ_L", _circ(na), _tcirc(_cbox(_tstar(ca))), t)
    t = _step("tcirc_cbox.dn", _circ(na), _tstar(ca), t)
    t = _step("adj_star2.dn", ca, _tstar(_circ(na)), t)
    t = _step("sim_R", ca, _sim(_circ(na)), t)
    t = _step("tcirc_cbox.up", ca, _tcirc(_cbox(_sim(_circ(na)))), t)
    t = _step("adj_DL2.dn", _hbul(ca), _cbox(_sim(_circ(na))), t)
    t = _step("box_R", _hbul(ca), N(na), t)
    t = _step("adj_DL2.up", ca, _tcirc(N(na)), t)
    t = _step("circ_R", ca, _circ(N(na)), t)
    t = _step("cont.dn", _tstar(_circ(N(na))), _tstar(ca), t)
    t = _step("sim_L", _sim(_circ(N(na))), _tstar(ca), t)
    t = _step("sim_R", _sim(_circ(N(na))), _sim(ca), t)
    t = _step("box_L", N(N(na)), _cbox(_sim(ca)), t)
    return _step("box_R", N(N(na)), na, t)


def _weaken_left_then(t: ProofTree, own: Term, other: Term, suc: Term, swap: bool) -> ProofTree:
    """own |- suc  ~>  own hand other |- suc (exchanged when swap)."""
    if swap:
        t = _step("W_L.l", _hand(own, other), suc, t)
        return _step("E_L.l", _hand(other, own), suc, t)
    return _step("W_L.l", _hand(own, other), suc, t)


def axiom_iv(a: Term, b: Term) -> ProofTree:
    """Conjoined negations entail the negated disjunction."""
    na, nb = N(a), N(b)
    conj = term("and", na, nb)
    disj = term("or", a, b)

    def branch(x: Term, other_first: bool) -> ProofTree:
        cx = _circ(x)
        t = _step("tcirc_mono", _tcirc(x), _tcirc(x), identity_proof(x))
        t = _step("circ_R", _tcirc(x), cx, t)
        t = _step("cont.dn", _tstar(cx), _tstar(_tcirc(x)), t)
        t = _step("sim_L", _sim(cx), _tstar(_tcirc(x)), t)
        t = _step("box_L", N(x), _cbox(_tstar(_tcirc(x))), t)
        if other_first:
            t = _step("W_L.l", _hand(nb, na), _cbox(_tstar(_tcirc(x))), t)
            t = _step("E_L.l", _hand(na, nb), _cbox(_tstar(_tcirc(x))), t)
        else:
            t = _step("W_L.l", _hand(na, nb), _cbox(_tstar(_tcirc(x))), t)
        t = _step("and_L", conj, _cbox(_tstar(_tcirc(x))), t)
        t = _step("adj_LD.dn", _hloz(conj), _tstar(_tcirc(x)), t)
        t = _step("adj_star2.dn", _tcirc(x), _tstar(_hloz(conj)), t)
        return _step("adj_DL1.dn", x, term("cbur", _tstar(_hloz(conj))), t)

    ta = branch(a, other_first=False)
    tb = branch(b, other_first=True)
    tgt = term("cbur", _tstar(_hloz(conj)))
    t = _step("or_L", disj, _cvee(tgt, tgt), ta, tb)
    t = _step("C_L.r", disj, tgt, t)
    t = _step("adj_DL1.up", _tcirc(disj), _tstar(_hloz(conj)), t)
    t = _step("circ_L", _circ(disj), _tstar(_hloz(conj)), t)
    t = _step("adj_star2.dn", _hloz(conj), _tstar(_circ(disj)), t)
    t = _step("sim_R", _hloz(conj), _sim(_circ(disj)), t)
    t = _step("adj_LD.up", conj, _cbox(_sim(_circ(disj))), t)
    return _step("box_R", conj, N(disj), t)


def axiom_i(a: Term, b: Term) -> ProofTree:
    """Conjoined double negations entail the double-negated conjunction."""
    n2a, n2b = N(N(a)), N(N(b))
    conj = term("and", n2a, n2b)
    ab = term("and", a, b)

    def branch(x: Term, other_first: bool) -> ProofTree:
        cx, nx = _circ(x), N(x)
        t = _step("tcirc_mono", _tcirc(x), _tcirc(x), identity_proof(x))
        t = _step("circ_L", cx, _tcirc(x), t)
        t = _step("cont.dn", _tstar(_tcirc(x)), _tstar(cx), t)
        t = _step("sim_R", _tstar(_tcirc(x)), _sim(cx), t)
        t = _step("tcirc_cbox.up", _tstar(_tcirc(x)), _tcirc(_cbox(_sim(cx))), t)
        t = _step("adj_DL2.dn", _hbul(_tstar(_tcirc(x))), _cbox(_sim(cx)), t)
        t = _step("box_R", _hbul(_tstar(_tcirc(x))), nx, t)
        t = _step("adj_DL2.up", _tstar(_tcirc(x)), _tcirc(nx), t)
        t = _step("circ_R", _tstar(_tcirc(x)), _circ(nx), t)
        t = _step("adj_star1.dn", _tstar(_circ(nx)), _tcirc(x), t)
        t = _step("sim_L", _sim(_circ(nx)), _tcirc(x), t)
        t = _step("box_L", N(nx), _cbox(_tcirc(x)), t)
        if other_first:
            t = _step("W_L.l", _hand(n2b, n2a), _cbox(_tcirc(x)), t)
            t = _step("E_L.l", _hand(n2a, n2b), _cbox(_tcirc(x)), t)
        else:
            t = _step("W_L.l", _hand(n2a, n2b), _cbox(_tcirc(x)), t)
        t = _step("and_L", conj, _cbox(_tcirc(x)), t)
        t = _step("adj_LD.dn", _hloz(conj), _tcirc(x), t)
        return _step("adj_DL2.dn", _hbul(_hloz(conj)), x, t)

    ta = branch(a, other_first=False)
    tb = branch(b, other_first=True)
    lead = _hbul(_hloz(conj))
    t = _step("and_R", _hand(lead, lead), ab, ta, tb)
    t = _step("C_L.l", lead, ab, t)
    t = _step("adj_DL2.up", _hloz(conj), _tcirc(ab), t)
    t = _step("circ_R", _hloz(conj), _circ(ab), t)
    t = _step("cont.dn", _tstar(_circ(ab)), _tstar(_hloz(conj)), t)
    t = _step("sim_L", _sim(_circ(ab)), _tstar(_hloz(conj)), t)
    t = _step("box_L", N(ab), _cbox(_tstar(_hloz(conj))), t)
    t = _step("tcirc_mono", _tcirc(N(ab)), _tcirc(_cbox(_tstar(_hloz(conj)))), t)
    t = _step("tcirc_cbox.dn", _tcirc(N(ab)), _tstar(_hloz(conj)), t)
    t = _step("circ_L", _circ(N(ab)), _tstar(_hloz(conj)), t)
    t = _step("adj_star2.dn", _hloz(conj), _tstar(_circ(N(ab))), t)
    t = _step("sim_R", _hloz(conj), _sim(_circ(N(ab))), t)
    t = _step("adj_LD.up", conj, _cbox(_sim(_circ(N(ab)))), t)
    return _step("box_R", conj, N(N(ab)), t)


def axiom_v() -> ProofTree:
    """top |- the negation of bottom."""
    bot, top = term("bot"), term("top")
    tgt = term("cbur", _tstar(term("hone")))
    t = _step("bot_L", bot, term("cbot"))
    t = _step("W_L.r", bot, _cvee(term("cbot"), tgt), t)
    t = _step("E_L.r", bot, _cvee(tgt, term("cbot")), t)
    t = _step("bot_check.up", bot, tgt, t)
    t = _step("adj_DL1.up", _tcirc(bot), _tstar(term("hone")), t)
    t = _step("circ_L", _circ(bot), _tstar(term("hone")), t)
    t = _step("adj_star2.dn", term("hone"), _tstar(_circ(bot)), t)
    t = _step("sim_R", term("hone"), _sim(_circ(bot)), t)
    t = _step("loz_one", _hloz(term("htop")), _sim(_circ(bot)), t)
    t = _step("adj_LD.up", term("htop"), _cbox(_sim(_circ(bot))), t)
    t = _step("box_R", term("htop"), N(bot), t)
    return _step("top_L", top, N(bot), t)


def axiom_vi() -> ProofTree:
    """The negation of top |- bottom."""
    bot, top = term("bot"), term("top")
    lead = _hbul(_tstar(term("czero")))
    t = _step("top_R", term("htop"), top)
    t = _step("W_L.l", _hand(term("htop"), lead), top, t)
    t = _step("E_L.l", _hand(lead, term("htop")), top, t)
    t = _step("top_hat.up", lead, top, t)
    t = _step("adj_DL2.up", _tstar(term("czero")), _tcirc(top), t)
    t = _step("circ_R", _tstar(term("czero")), _circ(top), t)
    t = _step("adj_star1.dn", _tstar(_circ(top)), term("czero"), t)
    t = _step("sim_L", _sim(_circ(top)), term("czero"), t)
    t = _step("box_L", N(top), _cbox(term("czero")), t)
    t = _step("box_zero", N(top), term("cbot"), t)
    return _step("bot_R", N(top), bot, t)


def axiom_vii(a: Term) -> ProofTree:
    """a |- its double negation, using the lower quasi rule."""
    ca, na = _circ(a), N(a)
    t = identity_proof(a)
    t = _step("lqm", a, _cbox(_tcirc(a)), t)
    t = _step("adj_LD.dn", _hloz(a), _tcirc(a), t)
    t = _step("circ_R", _hloz(a), ca, t)
    t = _step("cont.dn", _tstar(ca), _tstar(_hloz(a)), t)
    t = _step("sim_L", _sim(ca), _tstar(_hloz(a)), t)
    t = _step("box_L", na, _cbox(_tstar(_hloz(a))), t)
    t = _step("tcirc_mono", _tcirc(na), _tcirc(_cbox(_tstar(_hloz(a)))), t)
    t = _step("tcirc_cbox.dn", _tcirc(na), _tstar(_hloz(a)), t)
    t = _step("circ_L", _circ(na), _tstar(_hloz(a)), t)
    t = _step("adj_star2.dn", _hloz(a), _tstar(_circ(na)), t)
    t = _step("sim_R", _hloz(a), _sim(_circ(na)), t)
    t = _step("adj_LD.up", a, _cbox(_sim(_circ(na))), t)
    return _step("box_R", a, N(na), t)


def axiom_viii(a: Term) -> ProofTree:
    """The double negation |- a, using the upper quasi rule."""
    ca, na = _circ(a), N(a)
    t = _step("tcirc_mono", _tcirc(a), _tcirc(a), identity_proof(a))
    t = _step("circ_L", ca, _tcirc(a), t)
    t = _step("cont.dn", _tstar(_tcirc(a)), _tstar(ca), t)
    t = _step("sim_R", _tstar(_tcirc(a)), _sim(ca), t)
    t = _step("tcirc_cbox.up", _tstar(_tcirc(a)), _tcirc(_cbox(_sim(ca))), t)
    t = _step("adj_DL2.dn", _hbul(_tstar(_tcirc(a))), _cbox(_sim(ca)), t)
    t = _step("box_R", _hbul(_tstar(_tcirc(a))), na, t)
    t = _step("adj_DL2.up", _tstar(_tcirc(a)), _tcirc(na), t)
    t = _step("circ_R", _tstar(_tcirc(a)), _circ(na), t)
    t = _step("adj_star1.dn", _tstar(_circ(na)), _tcirc(a), t)
    t = _step("sim_L", _sim(_circ(na)), _tcirc(a), t)
    t = _step("box_L", N(na), _cbox(_tcirc(a)), t)
    t = _step("adj_LD.dn", _hloz(N(na)), _tcirc(a), t)
    t = _step("adj_DL2.dn", _hbul(_hloz(N(na))), a, t)
    return _step("uqm", N(na), a, t)


def axiom_ix(a: Term) -> ProofTree:
    """Negation and double negation are jointly inconsistent (demi rule)."""
    ca, na = _circ(a), N(a)
    n2a = N(na)
    cna = _circ(na)
    t = _circ_id(a)
    t = _step("cont.dn", _tstar(ca), _tstar(ca), t)
    t = _step("sim_R", _tstar(ca), _sim(ca), t)
    t = _step("sim_L", _sim(ca), _sim(ca), t)
    t = _step("tcirc_cbox.up", _sim(ca), _tcirc(_cbox(_sim(ca))), t)
    t = _step("adj_DL2.dn", _hbul(_sim(ca)), _cbox(_sim(ca)), t)
    t = _step("box_R", _hbul(_sim(ca)), na, t)
    t = _step("adj_DL2.up", _sim(ca), _tcirc(na), t)
    t = _step("circ_R", _sim(ca), cna, t)
    t = _step("box_L", na, _cbox(cna), t)
    t = _step("adj_LD.dn", _hloz(na), cna, t)
    t = _step("cont.dn", _tstar(cna), _tstar(_hloz(na)), t)
    t = _step("zero_check.dn", _tstar(cna), _ccup(_tstar(_hloz(na)), term("czero")), t)
    t = _step("sim_L", _sim(cna), _ccup(_tstar(_hloz(na)), term("czero")), t)
    t = _step("box_L", n2a, _cbox(_ccup(_tstar(_hloz(na)), term("czero"))), t)
    t = _step("adj_LD.dn", _hloz(n2a), _ccup(_tstar(_hloz(na)), term("czero")), t)
    t = _step("res_B.up", _hcap(_hloz(na), _hloz(n2a)), term("czero"), t)
    t = _step("res_D1.dn", _hloz(n2a), term("csup", _hloz(na), term("czero")), t)
    t = _step("adj_LD.up", n2a, _cbox(term("csup", _hloz(na), term("czero"))), t)
    t = _step("W_L.l", _hand(n2a, na), _cbox(term("csup", _hloz(na), term("czero"))), t)
    t = _step("E_L.l", _hand(na, n2a), _cbox(term("csup", _hloz(na), term("czero"))), t)
    t = _step("adj_LD.dn", _hloz(_hand(na, n2a)), term("csup", _hloz(na), term("czero")), t)
    t = _step("res_D1.up", _hcap(_hloz(na), _hloz(_hand(na, n2a))), term("czero"), t)
    t = _step("E_D.l", _hcap(_hloz(_hand(na, n2a)), _hloz(na)), term("czero"), t)
    t = _step("res_D1.dn", _hloz(na), term("csup", _hloz(_hand(na, n2a)), term("czero")), t)
    t = _step("adj_LD.up", na, _cbox(term("csup", _hloz(_hand(na, n2a)), term("czero"))), t)
    t = _step(
        "W_L.l", _hand(na, n2a), _cbox(term("csup", _hloz(_hand(na, n2a)), term("czero"))), t
    )
    t = _step(
        "adj_LD.dn", _hloz(_hand(na, n2a)), term("csup", _hloz(_hand(na, n2a)), term("czero")), t
    )
    t = _step(
        "res_D1.up", _hcap(_hloz(_hand(na, n2a)), _hloz(_hand(na, n2a))), term("czero"), t
    )
    t = _step("C_D.l", _hloz(_hand(na, n2a)), term("czero"), t)
    t = _step("adj_LD.up", _hand(na, n2a), _cbox(term("czero")), t)
    t = _step("box_zero", _hand(na, n2a), term("cbot"), t)
    t = _step("bot_R", _hand(na, n2a), term("bot"), t)
    return _step("and_L", term("and", na, n2a), term("bot"), t)


def axiom_x(a: Term) -> ProofTree:
    """A formula and its negation are jointly inconsistent (almost-p rule)."""
    ca, na = _circ(a), N(a)
    t = _step("tcirc_mono", _tcirc(a), _tcirc(a), identity_proof(a))
    t = _step("circ_R", _tcirc(a), ca, t)
    t = _step("cont.dn", _tstar(ca), _tstar(_tcirc(a)), t)
    t = _step("sim_L", _sim(ca), _tstar(_tcirc(a)), t)
    t = _step("box_L", na, _cbox(_tstar(_tcirc(a))), t)
    t = _step("ap", _hand(na, a), term("cbot"), t)
    t = _step("E_L.l", _hand(a, na), term("cbot"), t)
    t = _step("bot_R", _hand(a, na), term("bot"), t)
    return _step("and_L", term("and", a, na), term("bot"), t)


def axiom_xi(a: Term) -> ProofTree:
    """Excluded middle for the negation, using the weak Stone rule."""
    ca, na = _circ(a), N(a)
    n2a = N(na)
    cna = _circ(na)
    guard = _cbox(_tstar(_tcirc(na)))
    t = _circ_id(a)
    t = _step("cont.dn", _tstar(ca), _tstar(ca), t)
    t = _step("sim_L", _sim(ca), _tstar(ca), t)
    t = _step("sim_R", _sim(ca), _sim(ca), t)
    t = _step("box_L", na, _cbox(_sim(ca)), t)
    t = _step("adj_LD.dn", _hloz(na), _sim(ca), t)
    t = _step("ws", _hloz(term("hexcl", guard, term("htop"))), _sim(ca), t)
    t = _step("adj_LD.up", term("hexcl", guard, term("htop")), _cbox(_sim(ca)), t)
    t = _step("box_R", term("hexcl", guard, term("htop")), na, t)
    t = _step("res_L2.up", term("htop"), _cvee(guard, na), t)
    t = _step("E_L.r", term("htop"), _cvee(na, guard), t)
    t = _step("res_L2.dn", term("hexcl", na, term("htop")), guard, t)
    t = _step("adj_LD.dn", _hloz(term("hexcl", na, term("htop"))), _tstar(_tcirc(na)), t)
    t = _step("adj_star2.dn", _tcirc(na), _tstar(_hloz(term("hexcl", na, term("htop")))), t)
    t = _step("circ_L", cna, _tstar(_hloz(term("hexcl", na, term("htop")))), t)
    t = _step("adj_star2.dn", _hloz(term("hexcl", na, term("htop"))), _tstar(cna), t)
    t = _step("sim_R", _hloz(term("hexcl", na, term("htop"))), _sim(cna), t)
    t = _step("adj_LD.up", term("hexcl", na, term("htop")), _cbox(_sim(cna)), t)
    t = _step("box_R", term("hexcl", na, term("htop")), n2a, t)
    t = _step("res_L2.up", term("htop"), _cvee(na, n2a), t)
    t = _step("or_R", term("htop"), term("or", na, n2a), t)
    return _step("top_L", term("top"), term("or", na, n2a), t)


# name -> (system, arity, builder); axioms follow the translation table order
AXIOM_DERIVATIONS = {
    "i": ("SM", 2, axiom_i),
    "ii": ("SM", 1, axiom_ii),
    "iii": ("SM", 1, axiom_iii),
    "iv": ("SM", 2, axiom_iv),
    "v": ("SM", 0, axiom_v),
    "vi": ("SM", 0, axiom_vi),
    "vii": ("LQM", 1, axiom_vii),
    "viii": ("UQM", 1, axiom_viii),
    "ix": ("DP", 1, axiom_ix),
    "x": ("AP", 1, axiom_x),
    "xi": ("WS", 1, axiom_xi),
}


def axiom_instance(name: str, args: tuple[Term, ...] | None = None) -> tuple[str, ProofTree]:
    """Instantiate a named axiom derivation (atoms p, q by default)."""
    from .terms import atom

    system, arity, builder = AXIOM_DERIVATIONS[name]
    if args is None:
        args = (atom("p"), atom("q"))[:arity]
    if len(args) != arity:
        raise ValueError(f"axiom {name} takes {arity} formulas")
    return system, builder(*args)
