"""Bounded backward proof search, cut-free by construction.

Display rules are invertible, so all sequents a goal can reach by display
moves alone are interderivable.  The search treats each such orbit as one
node: an orbit is explored once, every member is probed with the remaining
(non-invertible) rules, and the final tree is stitched together through
recorded display edges.  The depth budget counts non-display inferences;
exhausting a budget says nothing about derivability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .proofs import ProofTree
from .rules import RuleIndex, RuleSchema, apply_subst, match, system_rules
from .terms import Term, atoms_of, sequent_sort


@dataclass
class Budget:
    max_depth: int = 40
    max_visited: int = 400_000


class BudgetExhausted(Exception):
    pass


# invertible display moves and exchange span the orbits
_DISPLAY = {
    "res_L1.dn", "res_L1.up", "res_L2.dn", "res_L2.up",
    "res_D1.dn", "res_D1.up", "res_D2.dn", "res_D2.up",
    "adj_star1.dn", "adj_star1.up", "adj_star2.dn", "adj_star2.up",
    "adj_LD.dn", "adj_LD.up", "adj_DL1.dn", "adj_DL1.up",
    "adj_DL2.dn", "adj_DL2.up", "cont.dn", "cont.up",
    "tcirc_cbox.dn", "tcirc_cbox.up", "res_B.dn", "res_B.up",
    "E_L.l", "E_L.r", "E_D.l", "E_D.r",
}

# size-increasing main moves sit behind a per-branch quota
_GROWERS = {
    "top_hat.up", "bot_check.up", "one_hat.up", "zero_check.up",
    "C_L.l", "C_L.r", "C_D.l", "C_D.r",
    "box_zero", "bullet", "uqm",
}

_WEAKENINGS = {"W_L.l", "W_L.r", "W_D.l", "W_D.r"}

_MAIN_ORDER = {
    "Id": 0, "top_R": 0, "bot_L": 0, "one_R": 0, "zero_L": 0,
    "top_L": 1, "bot_R": 1, "one_L": 1, "zero_R": 1,
    "and_L": 1, "or_R": 1, "cap_L": 1, "cup_R": 1,
    "sim_L": 1, "sim_R": 1, "circ_L": 1, "circ_R": 1, "box_L": 1, "box_R": 1,
    "and_R": 2, "or_L": 2, "cap_R": 2, "cup_L": 2,
    "tcirc_mono": 3, "lqm": 3, "ws": 3, "ap": 3, "loz_one": 3,
    "top_hat.dn": 3, "bot_check.dn": 3, "one_hat.dn": 3, "zero_check.dn": 3,
    "W_L.l": 4, "W_L.r": 4, "W_D.l": 4, "W_D.r": 4,
    "box_zero": 5, "bullet": 5, "uqm": 5,
    "top_hat.up": 6, "bot_check.up": 6, "one_hat.up": 6, "zero_check.up": 6,
    "C_L.l": 7, "C_L.r": 7, "C_D.l": 7, "C_D.r": 7,
    "A_L.l.dn": 8, "A_L.l.up": 8, "A_L.r.dn": 8, "A_L.r.up": 8,
    "A_D.l.dn": 8, "A_D.l.up": 8, "A_D.r.dn": 8, "A_D.r.up": 8,
}

_ORBIT_SLACK = 6
_ORBIT_CAP = 400
_GROW_QUOTA = 3
_WEAK_QUOTA = 6

# flag a guiding algebra must carry to be sound for each system
_SYSTEM_FLAG = {"SM": None, "LQM": "LQMA", "UQM": "UQMA", "DP": "DPL", "AP": "APL", "WS": "WSA"}

_GUIDES: dict[str, list] = {}


def _guide_models(system: str):
    """Small sound algebras; a subgoal failing on one is not derivable.

    Every sequent inside a cut-free proof is derivable outright, so pruning
    refuted subgoals never loses a proof.
    """
    tag = system.upper()
    cached = _GUIDES.get(tag)
    if cached is not None:
        return cached
    from .algebra import classify, derived_ops, enumerate_smas, heterogenize

    need = _SYSTEM_FLAG[tag]
    picked = []
    for sma in enumerate_smas(4):
        if need is not None and need not in classify(sma):
            continue
        hh = heterogenize(sma)
        picked.append((sma.n, hh, derived_ops(hh)))
    picked.sort(key=lambda t: -t[0])
    models = [(hh, ops) for _, hh, ops in picked[:4]]
    _GUIDES[tag] = models
    return models


class _Orbit:
    __slots__ = ("members", "edges", "rep")

    def __init__(self, members, edges, rep):
        self.members = members
        self.edges = edges  # member -> list[(rule, premise member)]
        self.rep = rep


class _Searcher:
    def __init__(self, rules: list[RuleSchema], budget: Budget, size_cap: int, models=()):
        noncut = [r for r in rules if not r.is_cut]
        self.display = RuleIndex([r for r in noncut if r.name in _DISPLAY])
        main = sorted(
            (r for r in noncut if r.name not in _DISPLAY),
            key=lambda r: _MAIN_ORDER.get(r.name, 9),
        )
        self.main = RuleIndex(main)
        self.budget = budget
        self.size_cap = size_cap
        self.models = models
        self.visited = 0
        self.orbit_of: dict[Term, _Orbit] = {}
        self.failed: dict[Term, list] = {}
        self.proved: dict[Term, tuple[Term, ProofTree]] = {}
        self.expansions: dict[Term, list] = {}
        self.plausible_cache: dict[Term, bool] = {}

    def plausible(self, sequent: Term) -> bool:
        """False only when a sound guiding algebra refutes the sequent."""
        if not self.models:
            return True
        hit = self.plausible_cache.get(sequent)
        if hit is not None:
            return hit
        from .algebra import validate

        ok = True
        if len(atoms_of(sequent)) <= 4:
            for hh, ops in self.models:
                valid, _ = validate(sequent, hh, ops)
                if not valid:
                    ok = False
                    break
        self.plausible_cache[sequent] = ok
        return ok

    def _charge(self, units: int = 1) -> None:
        self.visited += units
        if self.visited > self.budget.max_visited:
            raise BudgetExhausted(f"visited more than {self.budget.max_visited} states")

    def orbit(self, entry: Term) -> _Orbit:
        found = self.orbit_of.get(entry)
        if found is not None:
            return found
        cap = min(entry.size + _ORBIT_SLACK, self.size_cap)
        members = [entry]
        edges: dict[Term, list] = {entry: []}
        queue = [entry]
        while queue and len(members) < _ORBIT_CAP:
            s = queue.pop()
            self._charge()
            for rule in self.display.candidates(s):
                subst = match(rule.conclusion, s)
                if subst is None:
                    continue
                t = apply_subst(rule.premises[0], subst)
                edges[s].append((rule.name, t))
                if t not in edges:
                    edges[t] = []
                    members.append(t)
                    if t.size <= cap:
                        queue.append(t)
        rep = min(members, key=lambda m: (m.size, m._hash))
        orb = _Orbit(members, edges, rep)
        for m in members:
            self.orbit_of.setdefault(m, orb)
        return orb

    def _main_expansions(self, member: Term):
        cached = self.expansions.get(member)
        if cached is not None:
            return cached
        out = []
        for rule in self.main.candidates(member):
            subst = match(rule.conclusion, member)
            if subst is None:
                continue
            try:
                premises = tuple(apply_subst(p, subst) for p in rule.premises)
            except KeyError:
                continue
            if any(p.size > self.size_cap for p in premises):
                continue
            out.append((_MAIN_ORDER.get(rule.name, 9), rule.name, premises))
        self.expansions[member] = out
        return out

    def _wrap(self, orb: _Orbit, goal: Term, member: Term, tree: ProofTree) -> ProofTree:
        """Display chain turning a proof of ``member`` into one of ``goal``."""
        if goal == member:
            return tree
        parents: dict[Term, tuple[Term, str]] = {goal: (goal, "")}
        queue = [goal]
        i = 0
        while i < len(queue) and member not in parents:
            s = queue[i]
            i += 1
            for rule, t in orb.edges.get(s, ()):
                if t not in parents:
                    parents[t] = (s, rule)
                    queue.append(t)
        if member not in parents:
            raise BudgetExhausted("orbit reconstruction failed")
        tree_goal = tree
        chain = []
        s = member
        while s != goal:
            parent, rule = parents[s]
            chain.append((rule, parent))
            s = parent
        for rule, conclusion in chain:
            tree_goal = ProofTree(rule, conclusion, (tree_goal,))
        return tree_goal

    def _known_failure(self, rep: Term, remaining: int, grow: int, weak: int) -> bool:
        for r, g, w in self.failed.get(rep, ()):
            if r >= remaining and g >= grow and w >= weak:
                return True
        return False

    def _record_failure(self, rep: Term, remaining: int, grow: int, weak: int) -> None:
        entries = self.failed.setdefault(rep, [])
        entries[:] = [
            (r, g, w) for r, g, w in entries
            if not (remaining >= r and grow >= g and weak >= w)
        ]
        entries.append((remaining, grow, weak))

    def prove(
        self, goal: Term, remaining: int, path: frozenset, grow: int, weak: int
    ) -> ProofTree | None:
        if remaining <= 0:
            return None
        orb = self.orbit(goal)
        rep = orb.rep
        hit = self.proved.get(rep)
        if hit is not None:
            member, tree = hit
            return self._wrap(orb, goal, member, tree)
        if self._known_failure(rep, remaining, grow, weak) or rep in path:
            return None
        self._charge()
        subpath = path | {rep}
        candidates = []
        for member in orb.members:
            for order, name, premises in self._main_expansions(member):
                total = sum(p.size for p in premises)
                candidates.append((order, total, member, name, premises))
        candidates.sort(key=lambda c: (c[0], c[1]))
        for _, _, member, name, premises in candidates:
            ngrow, nweak = grow, weak
            if name in _GROWERS:
                if grow <= 0:
                    continue
                ngrow = grow - 1
            elif name in _WEAKENINGS:
                if weak <= 0:
                    continue
                nweak = weak - 1
            if not all(self.plausible(p) for p in premises):
                continue
            children = []
            for p in premises:
                sub = self.prove(p, remaining - 1, subpath, ngrow, nweak)
                if sub is None:
                    break
                children.append(sub)
            else:
                tree = ProofTree(name, member, tuple(children))
                self.proved[rep] = (member, tree)
                return self._wrap(orb, goal, member, tree)
        self._record_failure(rep, remaining, grow, weak)
        return None


def search(goal: Term, system: str, budget: Budget | None = None) -> ProofTree | None:
    """Backward search; a returned tree always passes the checker.

    None means the budget ran out, which is not a disproof; countermodels
    are the other half of the story.
    """
    budget = budget or Budget()
    sequent_sort(goal)
    rules = system_rules(system)
    size_cap = max(goal.size + 24, 40)
    searcher = _Searcher(rules, budget, size_cap, _guide_models(system))
    try:
        return searcher.prove(goal, budget.max_depth, frozenset(), _GROW_QUOTA, _WEAK_QUOTA)
    except BudgetExhausted:
        return None
