"""Parenthesized prefix syntax: parser, canonical renderer, unicode display."""

from __future__ import annotations

import re

from .terms import (
    ARITY,
    FORMULA_SIG,
    SINGLE_HEADS,
    STRUCT_SIG,
    Term,
    TermError,
    atom,
    sequent_sort,
    sort_of,
    term,
)

KEYWORDS = (set(FORMULA_SIG) | set(STRUCT_SIG) | {"not", "seq"})

_ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")

# parse targets: which heads may occur, and how the result is sort-checked
SORT_ALIASES = {
    "single": "single", "formula": "single",
    "dl": "dl", "k": "k",
    "sd": "sd", "dl-struct": "sd", "k-struct": "sk", "sk": "sk",
    "seq": "seq", "sequent": "seq",
}


class ParseError(Exception):
    """Lexical, arity, or sort error; message carries the position."""


def tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
        elif c in "()":
            toks.append((c, i))
            i += 1
        else:
            j = i
            while j < n and text[j] not in " \t\r\n()":
                j += 1
            toks.append((text[i:j], i))
            i = j
    return toks


def _read(toks: list[tuple[str, int]], pos: int):
    """One nested list / symbol starting at toks[pos]; returns (tree, next)."""
    if pos >= len(toks):
        raise ParseError("unexpected end of input")
    tok, at = toks[pos]
    if tok == "(":
        items = []
        pos += 1
        while True:
            if pos >= len(toks):
                raise ParseError(f"missing ')' for '(' at position {at}")
            if toks[pos][0] == ")":
                return (items, at), pos + 1
            item, pos = _read(toks, pos)
            items.append(item)
    if tok == ")":
        raise ParseError(f"unmatched ')' at position {at}")
    return (tok, at), pos + 1


def _elaborate(tree, layer: str) -> Term:
    node, at = tree
    if isinstance(node, str):
        if node in KEYWORDS:
            if ARITY[node] != 0:
                raise ParseError(f"position {at}: {node} takes {ARITY[node]} arguments")
            _head_allowed(node, at, layer)
            return term(node)
        if not _ATOM_RE.match(node):
            raise ParseError(f"position {at}: invalid token {node!r}")
        return atom(node)
    if not node:
        raise ParseError(f"position {at}: empty expression")
    head_node, head_at = node[0]
    if not isinstance(head_node, str) or head_node not in KEYWORDS:
        raise ParseError(f"position {head_at}: expected a connective, got {head_node!r}")
    head = head_node
    want = ARITY[head]
    if len(node) - 1 != want:
        raise ParseError(f"position {at}: {head} takes {want} arguments, got {len(node) - 1}")
    _head_allowed(head, at, layer)
    args = tuple(_elaborate(sub, layer) for sub in node[1:])
    return term(head, *args)


def _head_allowed(head: str, at: int, layer: str) -> None:
    if layer == "single":
        if head not in SINGLE_HEADS and head != "seq":
            raise ParseError(f"position {at}: {head} is not single-type syntax")
    else:
        if head == "not":
            raise ParseError(f"position {at}: 'not' only occurs in single-type formulas")


def parse(text: str, expected: str) -> Term:
    """Parse ``text`` against an expected sort tag.

    Tags: ``single`` (one-sorted formulas, with ``not``), ``dl``/``k``
    (two-sorted formulas), ``sd``/``sk`` (structures), ``seq`` (sequents of
    either type).
    """
    try:
        kind = SORT_ALIASES[expected.lower()]
    except KeyError:
        raise ParseError(f"unknown sort tag {expected!r}") from None
    toks = tokenize(text)
    if not toks:
        raise ParseError("empty input")
    tree, nxt = _read(toks, 0)
    if nxt != len(toks):
        raise ParseError(f"trailing input at position {toks[nxt][1]}")
    layer = "single" if kind == "single" else "mt"
    t = _elaborate(tree, layer)
    _sort_check(t, kind)
    return t


def _sort_check(t: Term, kind: str) -> None:
    try:
        if kind == "single":
            if t.head == "seq":
                raise TermError("sequents are not single-type formulas")
            from .terms import check_single

            check_single(t)
        elif kind == "seq":
            if t.head != "seq":
                raise TermError("expected a sequent")
            sequent_sort(t)
        else:
            if t.head == "seq":
                raise TermError("unexpected sequent")
            got = sort_of(t)
            want = {"dl": "DL", "k": "K", "sd": "SD", "sk": "SK"}[kind]
            from .terms import fits

            if kind in ("dl", "k"):
                if got != want:
                    raise TermError(f"expected a {want} formula, got sort {got}")
            elif not fits(got, want):
                raise TermError(f"expected sort {want}, got {got}")
    except TermError as e:
        raise ParseError(str(e)) from None


def parse_lines(text: str, expected: str) -> list[Term]:
    """One term per non-empty line."""
    out = []
    for ln, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            try:
                out.append(parse(line, expected))
            except ParseError as e:
                raise ParseError(f"line {ln}: {e}") from None
    return out


def render(t: Term) -> str:
    """Canonical text; parse(render(t)) is structurally t."""
    if t.head == "atom":
        return t.name
    if t.head == "mvar":
        return f"?{t.name}"
    if not t.args:
        return t.head
    return "(" + " ".join([t.head] + [render(a) for a in t.args]) + ")"


_PRETTY_PREFIX = {
    "not": "¬", "box": "□", "circ": "∘", "sim": "∼",
    "cbox": "□̌", "hbul": "•̂ₗ", "cbur": "•̌ᵣ",
    "tcirc": "∘̃", "hloz": "◆̂", "tstar": "∗̃",
    "hl": "hₗ", "hr": "hᵣ", "el": "eₗ",
}
_PRETTY_INFIX = {
    "and": "∧", "or": "∨", "cap": "∩", "cup": "∪",
    "hand": "∧̂", "cvee": "∨̌", "hexcl": ">̂",
    "carr": "→̌", "hcap": "∩̂", "ccup": "∪̌",
    "hsup": "⊃̂", "csup": "⊃̌",
    "harr": "→", "coimp": ">", "kharr": "⊃", "kcoimp": "⊃'",
}
_PRETTY_CONST = {
    "top": "⊤", "bot": "⊥", "one": "1", "zero": "0",
    "htop": "⊤̂", "cbot": "⊥̌", "hone": "1̂", "czero": "0̌",
}


def pretty(t: Term) -> str:
    """Unicode infix rendering, for display only."""
    if t.head == "seq":
        return f"{pretty(t.args[0])} ⊢ {pretty(t.args[1])}"
    if t.head == "atom":
        return t.name
    if t.head == "mvar":
        return t.name
    if t.head in _PRETTY_CONST:
        return _PRETTY_CONST[t.head]
    if t.head in _PRETTY_PREFIX:
        arg = t.args[0]
        inner = pretty(arg)
        if arg.args and arg.head not in _PRETTY_PREFIX:
            inner = f"({inner})" if arg.head not in _PRETTY_CONST else inner
        return _PRETTY_PREFIX[t.head] + inner
    if t.head in _PRETTY_INFIX:
        return f"({pretty(t.args[0])} {_PRETTY_INFIX[t.head]} {pretty(t.args[1])})"
    return render(t)
