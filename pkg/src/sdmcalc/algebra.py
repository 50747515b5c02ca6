"""Finite algebra semantics: axiom checks, kernel, two-sorted algebras.

All carriers are index sets 0..n-1; every operation is a lookup table.
The checks report per-axiom verdicts with counterexample tuples so that a
failure is always witnessed, never just flagged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .lattice import FiniteLattice, MalformedTable, distributive_lattices, lattice_problems
from .terms import DL, K, Term, atoms_of
from .translation import PREC, SUCC, operational_reading, translate

VARIETIES = ("LQMA", "UQMA", "DPL", "APL", "WSA", "DMA", "BA")


class InternalConsistencyError(Exception):
    """A theorem-backed invariant failed; signals an implementation bug."""


@dataclass(frozen=True)
class FiniteSMA:
    lattice: FiniteLattice
    neg: tuple[int, ...]

    @property
    def n(self):
        return self.lattice.n

    def key(self):
        return (self.lattice.key(), self.neg)


@dataclass(frozen=True)
class FiniteDMA:
    lattice: FiniteLattice
    star: tuple[int, ...]
    boolean: bool = False

    @property
    def n(self):
        return self.lattice.n

    def key(self):
        return (self.lattice.key(), self.star)


@dataclass(frozen=True)
class HeteroAlgebra:
    L: FiniteLattice
    D: FiniteDMA
    e: tuple[int, ...]  # D -> L
    h: tuple[int, ...]  # L -> D
    flags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class DerivedOps:
    harr: tuple  # Heyting arrow on L
    coimp: tuple  # co-implication on L
    kharr: tuple  # Heyting arrow on D
    kcoimp: tuple  # co-implication on D
    hl: tuple[int, ...]  # left adjoint of h
    hr: tuple[int, ...]  # right adjoint of h
    el: tuple[int, ...]  # left adjoint of e


@dataclass
class Report:
    """Per-axiom verdicts; a counterexample accompanies every failure."""

    results: list[tuple[str, bool, tuple | None]] = field(default_factory=list)

    def record(self, axiom: str, ok: bool, witness: tuple | None = None):
        self.results.append((axiom, ok, witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.results)

    def failures(self):
        return [(a, w) for a, ok, w in self.results if not ok]

    def to_json(self):
        return [
            {"axiom": a, "ok": ok, "witness": list(w) if w is not None else None}
            for a, ok, w in self.results
        ]


def _validate_unary(table, n, name):
    if len(table) != n:
        raise MalformedTable(f"{name} table has length {len(table)}, carrier has {n}")
    for v in table:
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedTable(f"{name} table entry {v!r} out of range")


def check_sma(leq, neg) -> tuple[Report, FiniteSMA | None]:
    """Check S1-S5 on the candidate tables."""
    report = Report()
    problems = lattice_problems(leq)
    report.record("S1", not problems, (problems[0],) if problems else None)
    if problems:
        return report, None
    lat = FiniteLattice.from_leq(leq)
    _validate_unary(neg, lat.n, "neg")
    neg = tuple(neg)
    n, meet, join = lat.n, lat.meet, lat.join

    s2 = []
    if neg[lat.bot] != lat.top:
        s2.append((lat.bot,))
    if neg[lat.top] != lat.bot:
        s2.append((lat.top,))
    report.record("S2", not s2, s2[0] if s2 else None)

    w = next(
        ((a, b) for a in range(n) for b in range(n)
         if neg[join[a][b]] != meet[neg[a]][neg[b]]),
        None,
    )
    report.record("S3", w is None, w)

    def nn(a):
        return neg[neg[a]]

    w = next(
        ((a, b) for a in range(n) for b in range(n)
         if nn(meet[a][b]) != meet[nn(a)][nn(b)]),
        None,
    )
    report.record("S4", w is None, w)

    w = next(((a,) for a in range(n) if neg[a] != neg[nn(a)]), None)
    report.record("S5", w is None, w)

    return report, (FiniteSMA(lat, neg) if report.ok else None)


def check_dma(leq, star, boolean=False) -> tuple[Report, FiniteDMA | None]:
    """Check D1-D5, plus B1 when a Boolean verdict is requested."""
    report = Report()
    problems = lattice_problems(leq)
    report.record("D1", not problems, (problems[0],) if problems else None)
    if problems:
        return report, None
    lat = FiniteLattice.from_leq(leq)
    _validate_unary(star, lat.n, "star")
    star = tuple(star)
    n, meet, join = lat.n, lat.meet, lat.join

    d2 = []
    if star[lat.bot] != lat.top:
        d2.append((lat.bot,))
    if star[lat.top] != lat.bot:
        d2.append((lat.top,))
    report.record("D2", not d2, d2[0] if d2 else None)

    w = next(
        ((a, b) for a in range(n) for b in range(n)
         if star[join[a][b]] != meet[star[a]][star[b]]),
        None,
    )
    report.record("D3", w is None, w)
    w = next(
        ((a, b) for a in range(n) for b in range(n)
         if star[meet[a][b]] != join[star[a]][star[b]]),
        None,
    )
    report.record("D4", w is None, w)
    w = next(((a,) for a in range(n) if star[star[a]] != a), None)
    report.record("D5", w is None, w)

    if boolean:
        w = next(((a,) for a in range(n) if join[a][star[a]] != lat.top), None)
        report.record("B1", w is None, w)

    if all(ok for name, ok, _ in report.results if name != "B1"):
        isboolean = all(join[a][star[a]] == lat.top for a in range(n))
        return report, (FiniteDMA(lat, star, isboolean) if report.ok else None)
    return report, None


def classify(a: FiniteSMA) -> frozenset[str]:
    """Variety flags S6a-S9, plus De Morgan and Boolean collapses."""
    lat, neg = a.lattice, a.neg
    n, meet, join = lat.n, lat.meet, lat.join
    rng = range(n)

    def nn(x):
        return neg[neg[x]]

    flags = set()
    if all(lat.leq[x][nn(x)] for x in rng):
        flags.add("LQMA")
    if all(lat.leq[nn(x)][x] for x in rng):
        flags.add("UQMA")
    if all(meet[neg[x]][nn(x)] == lat.bot for x in rng):
        flags.add("DPL")
    if all(meet[x][neg[x]] == lat.bot for x in rng):
        flags.add("APL")
    if all(join[neg[x]][nn(x)] == lat.top for x in rng):
        flags.add("WSA")
    if all(neg[meet[x][y]] == join[neg[x]][neg[y]] for x in rng for y in rng) and all(
        nn(x) == x for x in rng
    ):
        flags.add("DMA")
        if all(join[x][neg[x]] == lat.top for x in rng):
            flags.add("BA")
    if ("APL" in flags or "WSA" in flags) and "DPL" not in flags:
        raise InternalConsistencyError("APL/WSA without DPL contradicts S7 derivability")
    return frozenset(flags)


def kernel(a: FiniteSMA) -> tuple[FiniteDMA, tuple[int, ...], tuple[int, ...]]:
    """Double-negation image with its De Morgan structure, plus e and h."""
    lat, neg = a.lattice, a.neg
    n = lat.n

    def nn(x):
        return neg[neg[x]]

    carrier = sorted({nn(x) for x in range(n)})
    e = tuple(carrier)
    idx = {v: i for i, v in enumerate(carrier)}
    h = tuple(idx[nn(x)] for x in range(n))
    m = len(carrier)

    join_l, meet_l = lat.join, lat.meet
    cup = [[0] * m for _ in range(m)]
    cap = [[0] * m for _ in range(m)]
    star = [0] * m
    for i in range(m):
        star[i] = h[neg[e[i]]]
        for j in range(m):
            v = join_l[e[i]][e[j]]
            cup[i][j] = h[nn(v)]
            # the written form applies h to the double negation; h(a) = h(a'')
            # makes the plain image agree, which we pin down here
            if cup[i][j] != h[v]:
                raise InternalConsistencyError("kernel join disagrees with h of plain join")
            cap[i][j] = h[meet_l[e[i]][e[j]]]

    leq_d = tuple(tuple(cap[i][j] == i for j in range(m)) for i in range(m))
    for i in range(m):
        for j in range(m):
            if leq_d[i][j] != lat.leq[e[i]][e[j]]:
                raise InternalConsistencyError("kernel order is not the restricted order")
    dlat = FiniteLattice.from_leq(leq_d)
    for i in range(m):
        for j in range(m):
            if dlat.meet[i][j] != cap[i][j] or dlat.join[i][j] != cup[i][j]:
                raise InternalConsistencyError("kernel tables disagree with kernel order")

    flags = classify(a)
    report, dma = check_dma(leq_d, star, boolean="DPL" in flags)
    if dma is None:
        raise InternalConsistencyError(f"kernel fails De Morgan axioms: {report.failures()}")
    for i in range(m):
        if h[e[i]] != i:
            raise InternalConsistencyError("h after e is not the identity")
    return dma, e, h


def heterogenize(a: FiniteSMA) -> HeteroAlgebra:
    dma, e, h = kernel(a)
    flags = set()
    single = classify(a)
    if "LQMA" in single:
        flags.add("H6a")
    if "UQMA" in single:
        flags.add("H6b")
    if "DPL" in single:
        flags.add("BooleanD")
    if "APL" in single:
        flags.add("H7")
    if "WSA" in single:
        flags.add("H8")
    hh = HeteroAlgebra(a.lattice, dma, e, h, frozenset(flags))
    report = check_hetero_algebra(hh)
    if not report.ok:
        raise InternalConsistencyError(f"heterogenize output fails H1-H5: {report.failures()}")
    return hh


def check_hetero(L_leq, D_leq, star, e, h) -> tuple[Report, HeteroAlgebra | None]:
    """Check H1-H8 on raw component tables."""
    report = Report()
    probs = lattice_problems(L_leq)
    report.record("H1", not probs, (probs[0],) if probs else None)
    dreport, dma = check_dma(D_leq, star)
    report.record("H2a", dreport.ok and dma is not None, None)
    if probs or dma is None:
        return report, None
    L = FiniteLattice.from_leq(L_leq)
    if len(e) != dma.n:
        raise MalformedTable(f"e table has length {len(e)}, kernel carrier has {dma.n}")
    for v in e:
        if not isinstance(v, int) or not 0 <= v < L.n:
            raise MalformedTable(f"e table entry {v!r} out of range")
    if len(h) != L.n:
        raise MalformedTable(f"h table has length {len(h)}, lattice carrier has {L.n}")
    for v in h:
        if not isinstance(v, int) or not 0 <= v < dma.n:
            raise MalformedTable(f"h table entry {v!r} out of range")
    e, h = tuple(e), tuple(h)
    hh = HeteroAlgebra(L, dma, e, h)
    rep2 = check_hetero_algebra(hh)
    report.results.extend(rep2.results)
    if not report.ok:
        return report, None
    flags = set(hetero_flags(hh))
    return report, HeteroAlgebra(L, dma, e, h, frozenset(flags))


def check_hetero_algebra(hh: HeteroAlgebra) -> Report:
    """H3-H5 for an assembled pair (H1/H2 hold by construction)."""
    report = Report()
    L, D, e, h = hh.L, hh.D, hh.e, hh.h
    m, n = D.n, L.n

    w = next(
        ((i, j) for i in range(m) for j in range(m)
         if D.lattice.leq[i][j] != L.leq[e[i]][e[j]]),
        None,
    )
    report.record("H3-embedding", w is None, w)
    w = next(
        ((i, j) for i in range(m) for j in range(m)
         if L.meet[e[i]][e[j]] != e[D.lattice.meet[i][j]]),
        None,
    )
    report.record("H3-meets", w is None, w)
    ok = e[D.lattice.top] == L.top and e[D.lattice.bot] == L.bot
    report.record("H3-bounds", ok, None if ok else (e[D.lattice.top], e[D.lattice.bot]))

    surj = set(h) == set(range(m))
    report.record("H4-surjective", surj, None)
    w = next(
        ((a, b) for a in range(n) for b in range(n)
         if h[L.meet[a][b]] != D.lattice.meet[h[a]][h[b]]
         or h[L.join[a][b]] != D.lattice.join[h[a]][h[b]]),
        None,
    )
    report.record("H4-homomorphism", w is None, w)
    ok = h[L.bot] == D.lattice.bot and h[L.top] == D.lattice.top
    report.record("H4-bounds", ok, None)

    w = next(((i,) for i in range(m) if h[e[i]] != i), None)
    report.record("H5", w is None, w)
    return report


def hetero_flags(hh: HeteroAlgebra) -> frozenset[str]:
    L, D, e, h = hh.L, hh.D, hh.e, hh.h
    flags = set()
    if all(L.leq[a][e[h[a]]] for a in range(L.n)):
        flags.add("H6a")
    if all(L.leq[e[h[a]]][a] for a in range(L.n)):
        flags.add("H6b")
    if D.boolean:
        flags.add("BooleanD")
    if all(L.meet[e[D.star[h[a]]]][a] == L.bot for a in range(L.n)):
        flags.add("H7")
    # the quantifier ranges over the kernel carrier
    if all(L.join[e[D.star[al]]][e[al]] == L.top for al in range(D.n)):
        flags.add("H8")
    return frozenset(flags)


def dehetero(hh: HeteroAlgebra) -> FiniteSMA:
    """Collapse to one sort: negation is e of star of h."""
    L, D, e, h = hh.L, hh.D, hh.e, hh.h
    neg = tuple(e[D.star[h[a]]] for a in range(L.n))
    report, sma = check_sma(L.leq, neg)
    if sma is None:
        raise InternalConsistencyError(f"dehetero output fails S1-S5: {report.failures()}")
    return sma


def find_iso(a, b):
    """Bijection preserving order and the unary table, or None.

    Works for FiniteSMA and FiniteDMA alike (both are lattice + unary table).
    """
    if type(a) is not type(b):
        raise TypeError("find_iso arguments must be of the same kind")
    una, unb = (a.neg, b.neg) if isinstance(a, FiniteSMA) else (a.star, b.star)
    la, lb = a.lattice, b.lattice
    if la.n != lb.n:
        return None
    n = la.n

    def profile(lat, un, x):
        below = sum(lat.leq[y][x] for y in range(n))
        above = sum(lat.leq[x][y] for y in range(n))
        return (below, above)

    pa = [profile(la, una, x) for x in range(n)]
    pb = [profile(lb, unb, x) for x in range(n)]
    cands = [[y for y in range(n) if pb[y] == pa[x]] for x in range(n)]

    mapping = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            return all(unb[mapping[v]] == mapping[una[v]] for v in range(n))
        for y in cands[x]:
            if used[y]:
                continue
            ok = True
            for v in range(x):
                if la.leq[v][x] != lb.leq[mapping[v]][y] or la.leq[x][v] != lb.leq[y][mapping[v]]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            if extend(x + 1):
                return True
            used[y] = False
            mapping[x] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


def _left_adjoint_table(n_from, n_to, leq_to, meet_to, pred):
    """min over {y : pred(x, y)} for each x; None signals nonexistence."""
    out = []
    for x in range(n_from):
        cands = [y for y in range(n_to) if pred(x, y)]
        if not cands:
            return None
        inf = cands[0]
        for y in cands[1:]:
            inf = meet_to[inf][y]
        if inf not in cands:
            return None
        out.append(inf)
    return tuple(out)


def _right_adjoint_table(n_from, n_to, leq_to, join_to, pred):
    out = []
    for x in range(n_from):
        cands = [y for y in range(n_to) if pred(x, y)]
        if not cands:
            return None
        sup = cands[0]
        for y in cands[1:]:
            sup = join_to[sup][y]
        if sup not in cands:
            return None
        out.append(sup)
    return tuple(out)


def derived_ops(hh: HeteroAlgebra) -> DerivedOps:
    """Residuals and adjoints, each verified against its adjunction law."""
    L, D, e, h = hh.L, hh.D, hh.e, hh.h
    n, m = L.n, D.n

    def binary_res(lat, kind):
        nn = lat.n
        table = [[0] * nn for _ in range(nn)]
        for a in range(nn):
            for b in range(nn):
                if kind == "harr":
                    cands = [c for c in range(nn) if lat.leq[lat.meet[a][c]][b]]
                    v = cands[0]
                    for c in cands[1:]:
                        v = lat.join[v][c]
                else:
                    cands = [c for c in range(nn) if lat.leq[b][lat.join[a][c]]]
                    v = cands[0]
                    for c in cands[1:]:
                        v = lat.meet[v][c]
                if v not in cands:
                    raise InternalConsistencyError(f"{kind} does not exist at ({a},{b})")
                table[a][b] = v
        return tuple(map(tuple, table))

    harr = binary_res(L, "harr")
    coimp = binary_res(L, "coimp")
    kharr = binary_res(D.lattice, "harr")
    kcoimp = binary_res(D.lattice, "coimp")

    hl = _left_adjoint_table(m, n, L.leq, L.meet, lambda g, x: D.lattice.leq[g][h[x]])
    hr = _right_adjoint_table(m, n, L.leq, L.join, lambda g, x: D.lattice.leq[h[x]][g])
    el = _left_adjoint_table(n, m, D.lattice.leq, D.lattice.meet, lambda a, al: L.leq[a][e[al]])
    if hl is None or hr is None or el is None:
        raise InternalConsistencyError("adjoint missing; component tables are corrupted")

    ops = DerivedOps(harr, coimp, kharr, kcoimp, hl, hr, el)
    _verify_adjunctions(hh, ops)
    return ops


def _verify_adjunctions(hh: HeteroAlgebra, ops: DerivedOps) -> None:
    L, D, e, h = hh.L, hh.D, hh.e, hh.h
    n, m = L.n, D.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if L.leq[L.meet[a][c]][b] != L.leq[c][ops.harr[a][b]]:
                    raise InternalConsistencyError("Heyting adjunction fails on L")
                if L.leq[b][L.join[a][c]] != L.leq[ops.coimp[a][b]][c]:
                    raise InternalConsistencyError("co-implication adjunction fails on L")
    dleq, dmeet, djoin = D.lattice.leq, D.lattice.meet, D.lattice.join
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if dleq[dmeet[a][c]][b] != dleq[c][ops.kharr[a][b]]:
                    raise InternalConsistencyError("Heyting adjunction fails on the kernel")
                if dleq[b][djoin[a][c]] != dleq[ops.kcoimp[a][b]][c]:
                    raise InternalConsistencyError("co-implication adjunction fails on the kernel")
    for g in range(m):
        for x in range(n):
            if L.leq[ops.hl[g]][x] != dleq[g][h[x]]:
                raise InternalConsistencyError("left adjoint of h fails its law")
            if L.leq[x][ops.hr[g]] != dleq[h[x]][g]:
                raise InternalConsistencyError("right adjoint of h fails its law")
    for a in range(n):
        for al in range(m):
            if dleq[ops.el[a]][al] != L.leq[a][e[al]]:
                raise InternalConsistencyError("left adjoint of e fails its law")


class EvalError(Exception):
    pass


def eval_term(t: Term, hh: HeteroAlgebra, valuation: dict[str, int], ops: DerivedOps | None = None):
    """Value of a two-sorted (possibly derived) term; atoms live in L."""
    L, D, e, h = hh.L, hh.D, hh.e, hh.h

    def ev(u: Term) -> int:
        hd = u.head
        if hd == "atom":
            try:
                return valuation[u.name]
            except KeyError:
                raise EvalError(f"atom {u.name!r} has no binding") from None
        if hd == "top":
            return L.top
        if hd == "bot":
            return L.bot
        if hd == "and":
            return L.meet[ev(u.args[0])][ev(u.args[1])]
        if hd == "or":
            return L.join[ev(u.args[0])][ev(u.args[1])]
        if hd == "box":
            return e[ev(u.args[0])]
        if hd == "one":
            return D.lattice.top
        if hd == "zero":
            return D.lattice.bot
        if hd == "circ":
            return h[ev(u.args[0])]
        if hd == "sim":
            return D.star[ev(u.args[0])]
        if hd == "cap":
            return D.lattice.meet[ev(u.args[0])][ev(u.args[1])]
        if hd == "cup":
            return D.lattice.join[ev(u.args[0])][ev(u.args[1])]
        if ops is None:
            raise EvalError(f"derived operation {hd} needs derived_ops tables")
        if hd == "harr":
            return ops.harr[ev(u.args[0])][ev(u.args[1])]
        if hd == "coimp":
            return ops.coimp[ev(u.args[0])][ev(u.args[1])]
        if hd == "kharr":
            return ops.kharr[ev(u.args[0])][ev(u.args[1])]
        if hd == "kcoimp":
            return ops.kcoimp[ev(u.args[0])][ev(u.args[1])]
        if hd == "hl":
            return ops.hl[ev(u.args[0])]
        if hd == "hr":
            return ops.hr[ev(u.args[0])]
        if hd == "el":
            return ops.el[ev(u.args[0])]
        raise EvalError(f"cannot evaluate head {hd!r}")

    return ev(t)


def eval_single(a: Term, sma: FiniteSMA, valuation: dict[str, int]) -> int:
    lat, neg = sma.lattice, sma.neg

    def ev(u: Term) -> int:
        hd = u.head
        if hd == "atom":
            try:
                return valuation[u.name]
            except KeyError:
                raise EvalError(f"atom {u.name!r} has no binding") from None
        if hd == "top":
            return lat.top
        if hd == "bot":
            return lat.bot
        if hd == "and":
            return lat.meet[ev(u.args[0])][ev(u.args[1])]
        if hd == "or":
            return lat.join[ev(u.args[0])][ev(u.args[1])]
        if hd == "not":
            return neg[ev(u.args[0])]
        raise EvalError(f"{hd} is not single-type")

    return ev(a)


MAX_SEQUENT_ATOMS = 4


def validate(s: Term, hh: HeteroAlgebra, ops: DerivedOps | None = None):
    """(True, None) when the sequent holds under all valuations, else a witness."""
    from .terms import sequent_sort

    sort = sequent_sort(s, extended=True)
    lhs = operational_reading(s.args[0], PREC)
    rhs = operational_reading(s.args[1], SUCC)
    names = tuple(sorted(set(atoms_of(lhs)) | set(atoms_of(rhs))))
    if len(names) > MAX_SEQUENT_ATOMS:
        raise EvalError(f"sequent uses {len(names)} atoms, cap is {MAX_SEQUENT_ATOMS}")
    if ops is None:
        ops = derived_ops(hh)
    leq = hh.L.leq if sort == DL else hh.D.lattice.leq
    for values in product(range(hh.L.n), repeat=len(names)):
        v = dict(zip(names, values))
        if not leq[eval_term(lhs, hh, v, ops)][eval_term(rhs, hh, v, ops)]:
            return False, v
    return True, None


def validate_single(a: Term, b: Term, sma: FiniteSMA):
    names = tuple(sorted(set(atoms_of(a)) | set(atoms_of(b))))
    if len(names) > MAX_SEQUENT_ATOMS:
        raise EvalError(f"sequent uses {len(names)} atoms, cap is {MAX_SEQUENT_ATOMS}")
    for values in product(range(sma.n), repeat=len(names)):
        v = dict(zip(names, values))
        if not sma.lattice.leq[eval_single(a, sma, v)][eval_single(b, sma, v)]:
            return False, v
    return True, None


def _neg_candidates(lat: FiniteLattice):
    """All unary tables satisfying S2/S3 by construction.

    The negation of a join of join-irreducibles is the meet of their
    negations, so a choice on the join-irreducibles fixes the whole table.
    """
    jis = lat.join_irreducibles()
    n = lat.n
    ji_below = [[j for j in jis if lat.leq[j][a]] for a in range(n)]
    for values in product(range(n), repeat=len(jis)):
        assign = dict(zip(jis, values))
        neg = []
        for a in range(n):
            v = lat.top
            for j in ji_below[a]:
                v = lat.meet[v][assign[j]]
            neg.append(v)
        yield tuple(neg)


def enumerate_smas(max_size: int, variety: frozenset[str] = frozenset()) -> list[FiniteSMA]:
    """Every SMA on a distributive lattice of size <= max_size, up to iso.

    Deterministic order: lattice key, then the negation table.  Trivial
    one-element algebras are excluded (their bounds collapse).
    """
    out = []
    for lat, _ in distributive_lattices(max_size):
        autos = lat.automorphisms()
        seen = set()
        found = []
        for neg in _neg_candidates(lat):
            report, sma = check_sma(lat.leq, neg)
            if sma is None:
                continue
            canon = min(tuple(p[neg[_inv(p)[a]]] for a in range(lat.n)) for p in autos)
            if canon in seen:
                continue
            seen.add(canon)
            found.append(FiniteSMA(lat, canon))
        found.sort(key=lambda s: s.neg)
        out.extend(found)
    if variety:
        out = [a for a in out if variety <= classify(a)]
    return out


def _inv(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


def brute_force_neg_tables(lat: FiniteLattice) -> list[tuple[int, ...]]:
    """Unpruned oracle: filter all n^n unary tables by S2-S5."""
    out = []
    for neg in product(range(lat.n), repeat=lat.n):
        _, sma = check_sma(lat.leq, list(neg))
        if sma is not None:
            out.append(neg)
    return out


# JSON interchange


def sma_to_json(a: FiniteSMA) -> dict:
    return {
        "size": a.n,
        "leq": [[bool(x) for x in row] for row in a.lattice.leq],
        "neg": list(a.neg),
    }


def sma_from_json(data: dict) -> tuple[Report, FiniteSMA | None]:
    if not isinstance(data, dict) or "size" not in data or "leq" not in data or "neg" not in data:
        raise MalformedTable("SMA JSON needs fields size, leq, neg")
    if len(data["leq"]) != data["size"]:
        raise MalformedTable("size field disagrees with leq table")
    return check_sma(data["leq"], data["neg"])


def hetero_to_json(hh: HeteroAlgebra) -> dict:
    return {
        "L": {"size": hh.L.n, "leq": [[bool(x) for x in r] for r in hh.L.leq]},
        "D": {
            "size": hh.D.n,
            "leq": [[bool(x) for x in r] for r in hh.D.lattice.leq],
            "star": list(hh.D.star),
        },
        "e": list(hh.e),
        "h": list(hh.h),
    }


def hetero_from_json(data: dict) -> tuple[Report, HeteroAlgebra | None]:
    for fieldname in ("L", "D", "e", "h"):
        if fieldname not in data:
            raise MalformedTable(f"heterogeneous JSON needs field {fieldname!r}")
    return check_hetero(data["L"]["leq"], data["D"]["leq"], data["D"]["star"], data["e"], data["h"])
