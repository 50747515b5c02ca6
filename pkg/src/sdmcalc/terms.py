"""Sorted term trees: formulas of both languages, sequent structures, patterns.

Terms are interned (hash-consed): construction goes through :func:`term`,
:func:`atom` or :func:`mvar`, equality is identity, hashing is O(1).
"""

from __future__ import annotations

from typing import Iterator

DL = "DL"  # lattice-sorted formulas
K = "K"  # kernel-sorted formulas
SD = "SD"  # lattice-sorted structures
SK = "SK"  # kernel-sorted structures


class TermError(Exception):
    """Malformed term: unknown head, bad arity, or sort violation."""


class Term:
    __slots__ = ("head", "args", "name", "size", "_hash")

    head: str
    args: tuple["Term", ...]
    name: str | None

    def __init__(self, head, args, name, size, h):
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_hash", h)

    def __setattr__(self, *_):
        raise AttributeError("Term is immutable")

    def __hash__(self):
        return self._hash

    # interning makes structural equality pointer equality
    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __repr__(self):
        from .sexpr import render

        try:
            return f"Term<{render(self)}>"
        except Exception:
            return f"Term({self.head!r}, {self.args!r}, {self.name!r})"


_INTERN: dict[tuple, Term] = {}


def term(head: str, *args: Term) -> Term:
    """Build (and intern) a compound or constant term."""
    key = (head, args, None)
    t = _INTERN.get(key)
    if t is None:
        if head not in ARITY:
            raise TermError(f"unknown head {head!r}")
        if len(args) != ARITY[head]:
            raise TermError(f"{head} expects {ARITY[head]} arguments, got {len(args)}")
        size = 1 + sum(a.size for a in args)
        t = Term(head, args, None, size, hash(key))
        _INTERN[key] = t
    return t


def atom(name: str) -> Term:
    key = ("atom", (), name)
    t = _INTERN.get(key)
    if t is None:
        t = Term("atom", (), name, 1, hash(key))
        _INTERN[key] = t
    return t


def mvar(name: str) -> Term:
    """Metavariable leaf; only meaningful inside rule schemas."""
    key = ("mvar", (), name)
    t = _INTERN.get(key)
    if t is None:
        t = Term("mvar", (), name, 1, hash(key))
        _INTERN[key] = t
    return t


# head -> arity
ARITY = {
    "atom": 0, "mvar": 0,
    # formulas, both sorts (single-type adds "not")
    "top": 0, "bot": 0, "and": 2, "or": 2, "not": 1, "box": 1,
    "one": 0, "zero": 0, "circ": 1, "sim": 1, "cap": 2, "cup": 2,
    # operational counterparts of structural connectives (never parsed)
    "harr": 2, "coimp": 2, "kharr": 2, "kcoimp": 2, "hl": 1, "hr": 1, "el": 1,
    # structures
    "htop": 0, "cbot": 0, "cbox": 1, "hbul": 1, "cbur": 1,
    "hand": 2, "cvee": 2, "hexcl": 2, "carr": 2,
    "hone": 0, "czero": 0, "tcirc": 1, "hloz": 1, "tstar": 1,
    "hcap": 2, "ccup": 2, "hsup": 2, "csup": 2,
    "seq": 2,
}

# head -> (result sort, argument sorts); argument sorts SD/SK also accept a
# formula of the matching sort (formula leaves of structures)
FORMULA_SIG = {
    "top": (DL, ()), "bot": (DL, ()),
    "and": (DL, (DL, DL)), "or": (DL, (DL, DL)),
    "box": (DL, (K,)),
    "one": (K, ()), "zero": (K, ()),
    "circ": (K, (DL,)), "sim": (K, (K,)),
    "cap": (K, (K, K)), "cup": (K, (K, K)),
}

EXTENDED_SIG = {
    "harr": (DL, (DL, DL)), "coimp": (DL, (DL, DL)),
    "kharr": (K, (K, K)), "kcoimp": (K, (K, K)),
    "hl": (DL, (K,)), "hr": (DL, (K,)), "el": (K, (DL,)),
}

STRUCT_SIG = {
    "htop": (SD, ()), "cbot": (SD, ()),
    "cbox": (SD, (SK,)), "hbul": (SD, (SK,)), "cbur": (SD, (SK,)),
    "hand": (SD, (SD, SD)), "cvee": (SD, (SD, SD)),
    "hexcl": (SD, (SD, SD)), "carr": (SD, (SD, SD)),
    "hone": (SK, ()), "czero": (SK, ()),
    "tcirc": (SK, (SD,)), "hloz": (SK, (SD,)), "tstar": (SK, (SK,)),
    "hcap": (SK, (SK, SK)), "ccup": (SK, (SK, SK)),
    "hsup": (SK, (SK, SK)), "csup": (SK, (SK, SK)),
}

SINGLE_HEADS = frozenset({"atom", "top", "bot", "not", "and", "or"})

STRUCT_OF = {DL: SD, K: SK}


def fits(actual: str, expected: str) -> bool:
    """Formula sorts embed into the structure sort of the same type."""
    return actual == expected or STRUCT_OF.get(actual) == expected


def is_formula(t: Term) -> bool:
    return t.head == "atom" or t.head in FORMULA_SIG


def is_extended(t: Term) -> bool:
    return t.head in EXTENDED_SIG


def is_structural(t: Term) -> bool:
    return t.head in STRUCT_SIG


def sort_of(t: Term, extended: bool = False) -> str:
    """Sort of a formula or structure; raises TermError when ill-sorted.

    Formula terms get DL/K, structural terms SD/SK.  With ``extended`` the
    operational connectives produced by the structural reading are allowed.
    """
    if t.head == "atom":
        return DL
    if t.head == "mvar":
        raise TermError(f"metavariable {t.name!r} has no sort outside a schema")
    if t.head == "not":
        raise TermError("single-type negation is not a multi-type connective")
    sig = FORMULA_SIG.get(t.head) or STRUCT_SIG.get(t.head)
    if sig is None and extended:
        sig = EXTENDED_SIG.get(t.head)
    if sig is None:
        raise TermError(f"head {t.head!r} not allowed here")
    res, argsorts = sig
    for sub, want in zip(t.args, argsorts):
        got = sort_of(sub, extended)
        if not fits(got, want):
            raise TermError(f"sort mismatch: {sub!r} has sort {got}, expected {want}")
    return res


def check_single(t: Term) -> None:
    if t.head not in SINGLE_HEADS:
        raise TermError(f"head {t.head!r} is not a single-type connective")
    for sub in t.args:
        check_single(sub)


def sequent_sort(s: Term, extended: bool = False) -> str:
    """DL or K; both sides of a sequent must live in the same type."""
    if s.head != "seq":
        raise TermError("not a sequent")
    ant, suc = s.args
    sa, ss = sort_of(ant, extended), sort_of(suc, extended)
    base = {DL: DL, SD: DL, K: K, SK: K}
    if base[sa] != base[ss]:
        raise TermError(f"sequent sides have different types: {sa} vs {ss}")
    return base[sa]


def well_sorted(t: Term, extended: bool = False) -> bool:
    try:
        if t.head == "seq":
            sequent_sort(t, extended)
        else:
            sort_of(t, extended)
        return True
    except TermError:
        return False


def depth(t: Term) -> int:
    """Height of the syntax tree; leaves count 1."""
    if not t.args:
        return 1
    return 1 + max(depth(a) for a in t.args)


def atoms_of(t: Term) -> tuple[str, ...]:
    seen: dict[str, None] = {}

    def walk(u: Term) -> None:
        if u.head == "atom":
            seen.setdefault(u.name)
        for a in u.args:
            walk(a)

    walk(t)
    return tuple(sorted(seen))


def subterms(t: Term) -> Iterator[Term]:
    yield t
    for a in t.args:
        yield from subterms(a)


def formula_subterms(t: Term) -> Iterator[Term]:
    """All formula-sorted subterms occurring anywhere in ``t``."""
    for u in subterms(t):
        if is_formula(u):
            yield u


def single_formulas(max_depth: int, atoms_: tuple[str, ...]) -> list[Term]:
    """All single-type formulas of height <= max_depth over the given atoms."""
    layer: list[Term] = [atom(a) for a in atoms_] + [term("top"), term("bot")]
    levels = [list(layer)]
    for _ in range(max_depth - 1):
        prev = levels[-1]
        nxt = list(prev)
        nxt += [term("not", a) for a in prev]
        nxt += [term(h, a, b) for h in ("and", "or") for a in prev for b in prev]
        # dedup while keeping deterministic order
        seen: dict[Term, None] = {}
        for f in nxt:
            seen.setdefault(f)
        levels.append(list(seen))
    return levels[-1]


def mt_formulas(max_depth: int, atoms_: tuple[str, ...], sort: str) -> list[Term]:
    """All multi-type formulas of the given sort with height <= max_depth."""
    dl: list[Term] = [atom(a) for a in atoms_] + [term("top"), term("bot")]
    kk: list[Term] = [term("one"), term("zero")]
    for _ in range(max_depth - 1):
        ndl = list(dl) + [term("box", a) for a in kk]
        ndl += [term(h, a, b) for h in ("and", "or") for a in dl for b in dl]
        nkk = list(kk) + [term("circ", a) for a in dl] + [term("sim", a) for a in kk]
        nkk += [term(h, a, b) for h in ("cap", "cup") for a in kk for b in kk]
        dl = list(dict.fromkeys(ndl))
        kk = list(dict.fromkeys(nkk))
    return dl if sort == DL else kk
