"""Finite bounded distributive lattices and their generation from posets.

Lattices are given by an order table; meets and joins are precomputed.
Generation goes through downset lattices of small posets, which covers
every finite distributive lattice up to isomorphism.
"""

from __future__ import annotations

from itertools import permutations


class MalformedTable(Exception):
    """Non-square table, index out of range, or not a lattice order."""


class FiniteLattice:
    __slots__ = ("n", "leq", "meet", "join", "bot", "top")

    def __init__(self, n, leq, meet, join, bot, top):
        self.n = n
        self.leq = leq
        self.meet = meet
        self.join = join
        self.bot = bot
        self.top = top

    @classmethod
    def from_leq(cls, leq) -> "FiniteLattice":
        problems = lattice_problems(leq)
        if problems:
            raise MalformedTable(problems[0])
        return cls._build(leq)

    @classmethod
    def _build(cls, leq) -> "FiniteLattice":
        n = len(leq)
        leq = tuple(tuple(bool(x) for x in row) for row in leq)
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                meet[i][j] = _glb(leq, i, j)
                join[i][j] = _lub(leq, i, j)
        bot = next(i for i in range(n) if all(leq[i][j] for j in range(n)))
        top = next(i for i in range(n) if all(leq[j][i] for j in range(n)))
        return cls(n, leq, tuple(map(tuple, meet)), tuple(map(tuple, join)), bot, top)

    def join_irreducibles(self) -> tuple[int, ...]:
        out = []
        for j in range(self.n):
            if j == self.bot:
                continue
            below = [x for x in range(self.n) if self.leq[x][j] and x != j]
            if not below:
                out.append(j)
                continue
            sup = below[0]
            for x in below[1:]:
                sup = self.join[sup][x]
            if sup != j:
                out.append(j)
        return tuple(out)

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All order automorphisms (n is small, brute force is fine)."""
        n = self.n
        out = []
        for perm in permutations(range(n)):
            if all(self.leq[i][j] == self.leq[perm[i]][perm[j]] for i in range(n) for j in range(n)):
                out.append(perm)
        return out

    def key(self) -> tuple:
        return (self.n, self.leq)

    def __repr__(self):
        return f"FiniteLattice(n={self.n})"


def _glb(leq, i, j):
    cands = [k for k in range(len(leq)) if leq[k][i] and leq[k][j]]
    for k in cands:
        if all(leq[c][k] for c in cands):
            return k
    raise MalformedTable(f"no meet for ({i},{j})")


def _lub(leq, i, j):
    cands = [k for k in range(len(leq)) if leq[i][k] and leq[j][k]]
    for k in cands:
        if all(leq[k][c] for c in cands):
            return k
    raise MalformedTable(f"no join for ({i},{j})")


def lattice_problems(leq) -> list[str]:
    """All reasons the table fails to be a bounded distributive lattice."""
    n = len(leq)
    if n < 2:
        return ["carrier must have at least two elements"]
    if any(len(row) != n for row in leq):
        return ["leq table is not square"]
    rows = [tuple(bool(x) for x in row) for row in leq]
    problems = []
    for i in range(n):
        if not rows[i][i]:
            problems.append(f"not reflexive at {i}")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] and rows[j][i]:
                problems.append(f"not antisymmetric at ({i},{j})")
            for k in range(n):
                if rows[i][j] and rows[j][k] and not rows[i][k]:
                    problems.append(f"not transitive at ({i},{j},{k})")
    if problems:
        return problems
    try:
        lat = FiniteLattice._build(rows)
    except MalformedTable as e:
        return [str(e)]
    if lat.bot == lat.top:
        problems.append("bottom equals top")
    m, j = lat.meet, lat.join
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                    problems.append(f"not distributive at ({a},{b},{c})")
                    return problems
    return problems


def _triangle_posets(k: int):
    """All posets on ``range(k)`` whose order respects the integer order.

    Every finite poset can be relabeled along a linear extension, so every
    isomorphism class shows up here (possibly several times).
    """
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for bits in range(1 << len(pairs)):
        rel = [[i == j for j in range(k)] for i in range(k)]
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                rel[i][j] = True
        ok = True
        for i, j in pairs:
            if not rel[i][j]:
                continue
            for m in range(j + 1, k):
                if rel[j][m] and not rel[i][m]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(tuple(row) for row in rel)


def _poset_canon(rel) -> tuple:
    k = len(rel)
    return min(
        tuple(sorted((p[i], p[j]) for i in range(k) for j in range(k) if i != j and rel[i][j]))
        for p in permutations(range(k))
    )


def posets_up_to_iso(k: int) -> list[tuple[tuple[bool, ...], ...]]:
    """All posets on k points, one representative per isomorphism class."""
    if k == 0:
        return [()]
    seen = set()
    out = []
    for rel in _triangle_posets(k):
        canon = _poset_canon(rel)
        if canon not in seen:
            seen.add(canon)
            out.append(rel)
    return out


def downsets(poset_leq) -> list[int]:
    """All downward closed subsets as bitmasks, sorted (popcount, mask)."""
    k = len(poset_leq)
    below = [sum(1 << x for x in range(k) if poset_leq[x][i]) for i in range(k)]
    out = []
    for mask in range(1 << k):
        if all(below[i] & mask == below[i] for i in range(k) if mask >> i & 1):
            out.append(mask)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def downset_lattice(poset_leq) -> tuple[FiniteLattice, tuple[int, ...]]:
    """Lattice of downsets ordered by inclusion.

    Also returns, for each poset point, the index of its principal downset
    (these are exactly the join-irreducibles).
    """
    k = len(poset_leq)
    ds = downsets(poset_leq)
    index = {m: i for i, m in enumerate(ds)}
    n = len(ds)
    leq = tuple(tuple(ds[i] & ds[j] == ds[i] for j in range(n)) for i in range(n))
    lat = FiniteLattice._build(leq)
    principal = tuple(
        index[sum(1 << x for x in range(k) if poset_leq[x][i])] for i in range(k)
    )
    return lat, principal


def distributive_lattices(max_size: int) -> list[tuple[FiniteLattice, tuple[int, ...]]]:
    """All bounded distributive lattices with 2 <= size <= max_size, up to iso.

    A k-point poset has at least k+1 downsets, with equality only for chains,
    so posets with more than max_size - 1 points never contribute.
    """
    if max_size > 8:
        raise MalformedTable("size bound exceeds the configured maximum of 8")
    out = []
    for k in range(1, max_size):
        if k <= 6:
            seen = set()
            posets = []
            for rel in _triangle_posets(k):
                if len(downsets(rel)) > max_size:
                    continue
                canon = _poset_canon(rel)
                if canon not in seen:
                    seen.add(canon)
                    posets.append(rel)
        else:
            # a non-chain on k points has at least k+2 downsets
            posets = [tuple(tuple(i <= j for j in range(k)) for i in range(k))]
        for p in posets:
            if len(downsets(p)) <= max_size:
                out.append(downset_lattice(p))
    out.sort(key=lambda pair: pair[0].key())
    return out
