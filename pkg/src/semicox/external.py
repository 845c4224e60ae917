"""External semidirect products W~ x| W' that are Coxeter groups.

Two converse constructions.  ``check_external`` starts from abstract
data: Coxeter systems (W', I) and (W~, J~), an action of W' on J~ by
diagram automorphisms, and a set J of orbit representatives.  It decides
whether (W~ x| W', I + J) is a Coxeter system and, if so, returns its
Coxeter matrix.  ``construct_from_roots`` starts from two based root
systems in one space and produces the simple roots of the product.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coxeter import INF, CoxMatrix, CoxeterGroup, Elem, format_entry
from .errors import BoundExceeded, PreconditionError
from .rootsys import BasedRootSystem, positively_independent

__all__ = [
    "ExtData",
    "ExternalResult",
    "SemiElem",
    "ConstructResult",
    "check_external",
    "construct_from_roots",
    "export_decomposition",
    "roots_from_decomposition",
    "in_cos_prime",
]

ACCEPTED = "accepted"
REJECTED = "rejected"
INCONCLUSIVE = "inconclusive"


@dataclass
class ExtData:
    """Input of the algebraic test.

    ``theta`` maps each label of I to a permutation (tuple of indices) of
    the generators of ``tilde``; ``J`` lists labels of ``tilde``.
    """

    prime: CoxMatrix
    tilde: CoxMatrix
    theta: dict
    J: tuple

    def perm(self, s) -> tuple:
        return tuple(self.theta[self.prime.labels[s] if isinstance(s, int) else s])

    @classmethod
    def from_text(cls, text: str) -> ExtData:
        from .formats import cycles_to_perm, parse_cycles, read_sections

        sec = read_sections(text)
        for name in ("prime", "tilde", "action", "j"):
            if name not in sec:
                raise ValueError(f"missing section [{name}]")
        prime = CoxMatrix.from_text("\n".join(sec["prime"]))
        tilde = CoxMatrix.from_text("\n".join(sec["tilde"]))
        theta = {s: tuple(range(tilde.rank)) for s in prime.labels}
        for line in sec["action"]:
            s, cyc = line.split(":", 1)
            s = s.strip()
            if s not in prime.labels:
                raise ValueError(f"action given for unknown generator {s!r}")
            theta[s] = cycles_to_perm(parse_cycles(cyc, tilde.labels), tilde.labels)
        J = tuple(x for line in sec["j"] for x in line.replace(",", " ").split())
        for x in J:
            if x not in tilde.labels:
                raise ValueError(f"J contains unknown generator {x!r}")
        return cls(prime, tilde, theta, J)

    def to_text(self) -> str:
        out = ["[prime]", self.prime.to_text().rstrip(), "", "[tilde]", self.tilde.to_text().rstrip(), "", "[action]"]
        for s in self.prime.labels:
            p = self.perm(s)
            seen, cycles = set(), []
            for i in range(len(p)):
                if i in seen or p[i] == i:
                    continue
                c, j = [], i
                while j not in seen:
                    seen.add(j)
                    c.append(self.tilde.labels[j])
                    j = p[j]
                cycles.append("(" + " ".join(c) + ")")
            out.append(f"{s}: " + ("".join(cycles) or "()"))
        out += ["", "[J]", " ".join(self.J)]
        return "\n".join(out) + "\n"


class SemiElem:
    """A pair (w~, w') in W~ x| W' with (a~, a)(b~, b) = (a~ theta(a)(b~), ab)."""

    __slots__ = ("ctx", "tilde", "prime")

    def __init__(self, ctx: _Context, tilde: Elem, prime: Elem):
        self.ctx = ctx
        self.tilde = tilde
        self.prime = prime

    def __mul__(self, other: SemiElem) -> SemiElem:
        moved = self.ctx.act(self.prime, other.tilde)
        return SemiElem(self.ctx, self.tilde * moved, self.prime * other.prime)

    def __eq__(self, other):
        return isinstance(other, SemiElem) and self.tilde == other.tilde and self.prime == other.prime

    def __hash__(self):
        return hash((self.tilde, self.prime))

    def is_identity(self) -> bool:
        return self.tilde.is_identity() and self.prime.is_identity()

    def order(self, bound: int = 200):
        """Smallest k <= bound with self^k = 1, else None."""
        q = self
        for k in range(1, bound + 1):
            if q.is_identity():
                return k
            q = q * self
        return None

    def __repr__(self):
        return f"SemiElem({self.tilde!r}, {self.prime!r})"


class _Context:
    def __init__(self, d: ExtData):
        self.d = d
        self.Gp = CoxeterGroup(d.prime)
        self.Gt = CoxeterGroup(d.tilde)
        self.gen_perm = [d.perm(s) for s in range(d.prime.rank)]
        self._perm_cache: dict = {}

    def perm_of(self, u: Elem) -> tuple:
        """theta(u) as a permutation; theta(u1...uk) = theta(u1) o ... o theta(uk)."""
        hit = self._perm_cache.get(u)
        if hit is not None:
            return hit
        k = self.d.tilde.rank
        p = tuple(range(k))
        for s in reversed(u.word):
            g = self.gen_perm[s]
            p = tuple(g[i] for i in p)
        self._perm_cache[u] = p
        return p

    def act(self, u: Elem, w: Elem) -> Elem:
        p = self.perm_of(u)
        return self.Gt.element([p[i] for i in w.word])

    def pair(self, tilde_word=(), prime_word=()) -> SemiElem:
        return SemiElem(self, self.Gt.element(tilde_word), self.Gp.element(prime_word))


@dataclass
class Violation:
    condition: str
    detail: str
    witness: tuple = ()


@dataclass
class ExternalResult:
    status: str
    matrix: CoxMatrix | None = None
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == ACCEPTED

    def summary(self) -> str:
        lines = [f"status: {self.status}"]
        for v in self.violations:
            lines.append(f"violation {v.condition}: {v.detail}")
        for n in self.notes:
            lines.append(f"note: {n}")
        if self.matrix is not None:
            lines.append(self.matrix.to_text().rstrip())
        return "\n".join(lines) + "\n"


def _precheck(d: ExtData, ctx: _Context) -> list:
    bad = []
    Mt, Mp = d.tilde, d.prime
    k = Mt.rank
    clash = set(Mp.labels) & set(d.J)
    if clash:
        bad.append(Violation("input", f"labels {sorted(clash)} used in both I and J", tuple(sorted(clash))))
    for s in Mp.labels:
        p = d.perm(s)
        if sorted(p) != list(range(k)):
            bad.append(Violation("theta", f"theta({s}) is not a permutation", (s,)))
            continue
        for i, j in itertools.combinations(range(k), 2):
            if Mt.entries[p[i]][p[j]] != Mt.entries[i][j]:
                bad.append(Violation("theta", f"theta({s}) does not preserve m({Mt.labels[i]}, {Mt.labels[j]})",
                                     (s, Mt.labels[i], Mt.labels[j])))
                break
    if bad:
        return bad
    ident = tuple(range(k))
    for a in range(Mp.rank):
        for b in range(a, Mp.rank):
            m = Mp.entries[a][b]
            if m == INF:
                continue
            pa, pb = ctx.gen_perm[a], ctx.gen_perm[b]
            q = ident
            for _ in range(m):
                q = tuple(pa[pb[i]] for i in q)
            if q != ident:
                bad.append(Violation("theta", f"theta violates ({Mp.labels[a]} {Mp.labels[b]})^{m} = 1",
                                     (Mp.labels[a], Mp.labels[b])))
    if len(set(d.J)) != len(d.J):
        bad.append(Violation("J", "J lists a generator twice", d.J))
    J = [Mt.index(x) for x in d.J]
    # orbits of W' on J~
    orbit_of = {}
    for i in range(k):
        if i in orbit_of:
            continue
        orb, frontier = {i}, [i]
        while frontier:
            x = frontier.pop()
            for p in ctx.gen_perm:
                if p[x] not in orb:
                    orb.add(p[x])
                    frontier.append(p[x])
        for x in orb:
            orbit_of[x] = min(orb)
    hit = {}
    for r in J:
        o = orbit_of[r]
        if o in hit:
            bad.append(Violation("J", f"{Mt.labels[hit[o]]} and {Mt.labels[r]} lie in one orbit",
                                 (Mt.labels[hit[o]], Mt.labels[r])))
        hit[o] = r
    for o in sorted(set(orbit_of.values())):
        if o not in hit:
            bad.append(Violation("J", f"the orbit of {Mt.labels[o]} misses J", (Mt.labels[o],)))
    return bad


def check_external(d: ExtData, bound: int | None = None, order_bound: int = 200) -> ExternalResult:
    """Decide whether (W~ x| W', I + J) is a Coxeter system.

    W' is enumerated completely when finite; otherwise ``bound`` limits the
    ball of W' that is searched and a clean run is reported inconclusive.
    """
    ctx = _Context(d)
    bad = _precheck(d, ctx)
    if bad:
        return ExternalResult(REJECTED, violations=bad)
    Mt, Mp = d.tilde, d.prime
    Gp = ctx.Gp
    notes = []
    partial = False
    if Gp.is_finite():
        Wp = Gp.enumerate_group()
    elif bound is None:
        raise PreconditionError("W' is infinite; pass an explicit bound")
    else:
        Wp = Gp.enumerate_ball(bound)
        partial = True
        notes.append(f"W' is infinite; searched words of length <= {bound}")
    J = [Mt.index(x) for x in d.J]
    Jset = set(J)

    def perp(r):
        return frozenset(v for v in range(Mp.rank) if ctx.gen_perm[v][r] == r)

    def inside(u, K):
        return set(u.word) <= K

    violations = []
    # (1): r = u s u^-1 with r, s in J forces r = s and u in W'_{I cap r-perp}
    for u in Wp:
        p = ctx.perm_of(u)
        for s in J:
            r = p[s]
            if r not in Jset:
                continue
            if r != s:
                violations.append(Violation("(1)", f"{Mt.labels[r]} = u {Mt.labels[s]} u^-1 with "
                                            f"u = {' '.join(u.labels()) or '1'}", (Mt.labels[r], Mt.labels[s], u.word)))
            elif not inside(u, perp(r)):
                violations.append(Violation("(1)", f"u = {' '.join(u.labels())} fixes {Mt.labels[r]} but is not in "
                                            f"W'_(I cap {Mt.labels[r]}-perp)", (Mt.labels[r], u.word)))
    # (2): every s with r s of finite order comes from (i) or (ii)
    for r in J:
        K = perp(r)
        WK = [u for u in Wp if inside(u, K)]
        reach = set()
        for t in J:
            if t != r and Mt.entries[r][t] != INF:
                reach.update(ctx.perm_of(u)[t] for u in WK)
        for v in range(Mp.rank):
            rv = ctx.gen_perm[v][r]
            if rv != r and Mt.entries[r][rv] != INF:
                reach.update(ctx.perm_of(u)[rv] for u in WK)
        for s in range(Mt.rank):
            if s != r and Mt.entries[r][s] != INF and s not in reach:
                violations.append(Violation("(2)", f"{Mt.labels[r]} {Mt.labels[s]} has order "
                                            f"{format_entry(Mt.entries[r][s])} but neither (i) nor (ii) applies",
                                            (Mt.labels[r], Mt.labels[s])))
    if violations:
        return ExternalResult(REJECTED, violations=violations, notes=notes)
    labels = Mp.labels + tuple(Mt.labels[r] for r in J)
    nI = Mp.rank
    rows = [[1] * len(labels) for _ in labels]
    for a, b in itertools.combinations(range(len(labels)), 2):
        if b < nI:
            m = Mp.entries[a][b]
        elif a >= nI:
            m = Mt.entries[J[a - nI]][J[b - nI]]
        else:
            r = J[b - nI]
            image = ctx.gen_perm[a][r]
            half = Mt.entries[r][image]
            m = INF if half == INF else 2 * half
            got = ctx.pair((r,), (a,)).order(order_bound)
            if m != INF and got != m:
                violations.append(Violation("order", f"({labels[a]} {labels[b]}) has order {got}, expected {m}",
                                            (labels[a], labels[b])))
        rows[a][b] = rows[b][a] = m
    if violations:
        return ExternalResult(REJECTED, violations=violations, notes=notes)
    M = CoxMatrix(labels, tuple(tuple(r) for r in rows))
    return ExternalResult(INCONCLUSIVE if partial else ACCEPTED, M, [], notes)


def export_decomposition(D) -> ExtData:
    """The data (W_I, J~, action, J) of an internal decomposition."""
    M = D.M
    prime = M.restrict(D.I)
    tilde = D.tilde_matrix
    theta = {M.labels[s]: D.action_of(s) for s in D.I}
    J = tuple(tg.label for tg in D.tilde_J if tg.x.is_identity())
    return ExtData(prime, tilde, theta, J)


# -- the root-system version ----------------------------------------------------


def in_cos_prime(c) -> bool:
    """c in {cos(pi/2m) : m >= 1} or c >= 1."""
    F = c.field
    if (c - 1).sign() >= 0:
        return True
    m = F.recognize_cos(c)
    return m is not None and m % 2 == 0


@dataclass
class ConstructResult:
    status: str
    Pi: list = field(default_factory=list)
    new: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == ACCEPTED


def construct_from_roots(gram, Delta, Pi_tilde, budget: int = 1000) -> ConstructResult:
    """Simple roots Pi = Delta + (Pi~ cap -C) of the product, when they exist.

    ``gram`` is the form on the ambient space in the coordinates of the
    given vectors.  Tits cone membership of -pi~ is decided by moving it
    into the chamber of W' with at most ``budget`` reflections.
    """
    Delta = [tuple(v) for v in Delta]
    Pi_tilde = [tuple(v) for v in Pi_tilde]
    bad = []
    sys_d = BasedRootSystem(gram, Delta)
    sys_t = BasedRootSystem(gram, Pi_tilde)
    for name, sysm in (("Delta", sys_d), ("Pi~", sys_t)):
        if sysm.simple:
            v = sysm.validate()
            if not v.ok:
                bad += [Violation("input", f"{name}: {x}") for x in v.violations]
    if bad:
        return ConstructResult(REJECTED, violations=bad)
    stable = set(Pi_tilde)
    for i, a in enumerate(Delta):
        for j, p in enumerate(Pi_tilde):
            if sys_d.reflect(a, p) not in stable:
                bad.append(Violation("stability", f"s_{i} moves Pi~[{j}] outside Pi~", (i, j)))
    if bad:
        return ConstructResult(REJECTED, violations=bad)
    if not positively_independent(Delta + Pi_tilde):
        return ConstructResult(REJECTED, violations=[Violation("(ii)", "Delta + Pi~ is not positively independent")])
    for j, p in enumerate(Pi_tilde):
        try:
            sys_d.to_chamber(tuple(-x for x in p), max_iters=budget)
        except BoundExceeded:
            return ConstructResult(INCONCLUSIVE, violations=[
                Violation("(ii)", f"-Pi~[{j}] not moved into the chamber within {budget} steps", (j,))])
    new = [p for p in Pi_tilde if all(sys_d.inner(a, p).sign() <= 0 for a in Delta)]
    Pi = Delta + new
    v = BasedRootSystem(gram, Pi).validate()
    if not v.ok:
        return ConstructResult(REJECTED, Pi, new, [Violation("result", x) for x in v.violations])
    for a in Delta:
        for p in new:
            c = -sys_d.inner(a, p)
            if not in_cos_prime(c):
                bad.append(Violation("result", f"mixed inner product {-c} is not in -COS'"))
    # Pi~ = W'(Pi \ Delta)
    orbit, frontier = set(new), list(new)
    while frontier:
        p = frontier.pop()
        for a in Delta:
            q = sys_d.reflect(a, p)
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    if orbit != set(Pi_tilde):
        bad.append(Violation("result", "the W'-orbit of Pi \\ Delta differs from Pi~"))
    return ConstructResult(REJECTED if bad else ACCEPTED, Pi, new, bad)


def roots_from_decomposition(D):
    """(gram, Delta, Pi~) of an internal decomposition in the ambient root space."""
    G = D.G
    return G.gram, [G.simple_roots[s] for s in D.I], [tg.root for tg in D.tilde_J]
