"""Translation into the two-sorted language and the reading of structures.

The translation is homomorphic on lattice connectives and sends each
negation to the composite box-sim-circ.  The operational reading replaces
every structural connective by its logical or derived counterpart; the
precedent/succedent position of each node is tracked by sign propagation
(only the first coordinates of the four arrow-like connectives and the
single coordinate of the structural star flip it).
"""

from __future__ import annotations

from .terms import Term, TermError, term

PREC = "precedent"
SUCC = "succedent"

# per-coordinate polarity of every connective (1 keeps the sign, -1 flips)
POLARITY = {
    "and": (1, 1), "or": (1, 1), "not": (-1,), "box": (1,), "circ": (1,),
    "sim": (-1,), "cap": (1, 1), "cup": (1, 1),
    "harr": (-1, 1), "coimp": (-1, 1), "kharr": (-1, 1), "kcoimp": (-1, 1),
    "hl": (1,), "hr": (1,), "el": (1,),
    "hand": (1, 1), "cvee": (1, 1), "hexcl": (-1, 1), "carr": (-1, 1),
    "cbox": (1,), "hbul": (1,), "cbur": (1,), "tcirc": (1,), "hloz": (1,),
    "tstar": (-1,),
    "hcap": (1, 1), "ccup": (1, 1), "hsup": (-1, 1), "csup": (-1, 1),
}

# structural connective -> operational counterpart
OP_READING = {
    "htop": "top", "cbot": "bot",
    "cbox": "box", "hbul": "hl", "cbur": "hr",
    "hand": "and", "cvee": "or", "hexcl": "coimp", "carr": "harr",
    "hone": "one", "czero": "zero",
    "tcirc": "circ", "hloz": "el", "tstar": "sim",
    "hcap": "cap", "ccup": "cup", "hsup": "kcoimp", "csup": "kharr",
}


def translate(a: Term) -> Term:
    """Single-type formula -> DL-sorted formula of the two-sorted language."""
    if a.head == "atom":
        return a
    if a.head in ("top", "bot"):
        return a
    if a.head in ("and", "or"):
        return term(a.head, translate(a.args[0]), translate(a.args[1]))
    if a.head == "not":
        return term("box", term("sim", term("circ", translate(a.args[0]))))
    raise TermError(f"{a.head} is not a single-type connective")


def translate_sequent(s: Term) -> Term:
    return term("seq", translate(s.args[0]), translate(s.args[1]))


def _flip(position: str) -> str:
    return SUCC if position == PREC else PREC


def operational_reading(s: Term, position: str) -> Term:
    """Replace structural connectives by their (possibly derived) operations.

    Formula leaves are returned unchanged in either position.
    """
    if position not in (PREC, SUCC):
        raise ValueError(f"bad position {position!r}")
    from .terms import is_formula

    if is_formula(s):
        return s
    op = OP_READING.get(s.head)
    if op is None:
        raise TermError(f"{s.head} is not a structural connective")
    pol = POLARITY.get(s.head, ())
    args = tuple(
        operational_reading(a, position if p == 1 else _flip(position))
        for a, p in zip(s.args, pol)
    )
    return term(op, *args)


def reading_of_sequent(s: Term) -> tuple[Term, Term]:
    return (
        operational_reading(s.args[0], PREC),
        operational_reading(s.args[1], SUCC),
    )
