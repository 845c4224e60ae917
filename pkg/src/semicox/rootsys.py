"""Based root systems, reflection subgroups and their canonical generators.

A based root system lives in an ambient space with a symmetric bilinear
form (its Gram matrix in ambient coordinates).  The simple roots need not
be linearly independent; they must be positively independent unit vectors
whose pairwise inner products lie in ``-COS``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .coxeter import INF, CoxMatrix, CoxeterGroup, Reflection, normalize_root
from .errors import BoundExceeded, ConsistencyError
from .linalg import classify_gram, rank, rref, sgn

__all__ = [
    "BasedRootSystem",
    "ChamberResult",
    "Validation",
    "brink_check",
    "chi",
    "chi_by_cone",
    "classify_gram",
    "in_cone",
    "nonneg_feasible",
    "positively_independent",
    "reflection_closure",
    "standard_system",
    "subsystem",
    "support",
]


# -- cones and positive independence --------------------------------------


def nonneg_feasible(vectors, target) -> bool:
    """Decide whether some x >= 0 satisfies sum_i x_i v_i = target.

    The equalities are solved by elimination; the remaining free variables
    are removed by Fourier-Motzkin elimination on the nonnegativity
    constraints.
    """
    k = len(vectors)
    D = len(target)
    rows = [[vectors[i][r] for i in range(k)] + [target[r]] for r in range(D)]
    R, piv = rref(rows)
    if k in piv:
        return False
    free = [j for j in range(k) if j not in piv]
    # x_p = rhs - sum_f a_f x_f >= 0  <=>  sum_f a_f x_f <= rhs ;  -x_f <= 0
    ineqs = []
    for i, p in enumerate(piv):
        ineqs.append(([R[i][f] for f in free], R[i][k]))
    for j in range(len(free)):
        ineqs.append(([-1 if i == j else 0 for i in range(len(free))], 0))
    for v in range(len(free)):
        pos, neg, rest = [], [], []
        for a, b in ineqs:
            s = sgn(a[v])
            (pos if s > 0 else neg if s < 0 else rest).append((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[v], ap[v]
                rest.append(([lp * x + ln * y for x, y in zip(ap, an)], lp * bp + ln * bn))
        ineqs = _dedupe(rest)
    return all(sgn(b) >= 0 for _, b in ineqs)


def _dedupe(ineqs):
    seen = set()
    out = []
    for a, b in ineqs:
        if all(x == 0 for x in a):
            key = ("const", sgn(b) >= 0)
        else:
            key = (tuple(a), b)
        if key in seen:
            continue
        seen.add(key)
        out.append((a, b))
    return out


def positively_independent(vectors) -> bool:
    """No nonzero nonnegative combination of the vectors vanishes."""
    if not vectors:
        return True
    D = len(vectors[0])
    ext = [tuple(v) + (1,) for v in vectors]
    target = (0,) * D + (1,)
    return not nonneg_feasible(ext, target)


def in_cone(gamma, vectors) -> bool:
    """gamma lies in the cone spanned by vectors (Caratheodory search)."""
    D = len(gamma)
    if all(x == 0 for x in gamma):
        return True
    for size in range(1, min(D, len(vectors)) + 1):
        for sub in itertools.combinations(vectors, size):
            if rank([list(v) for v in sub]) < size:
                continue
            rows = [[sub[i][r] for i in range(size)] + [gamma[r]] for r in range(D)]
            R, piv = rref(rows)
            if size in piv:
                continue
            if all(sgn(R[i][size]) >= 0 for i in range(size)):
                return True
    return False


# -- based root systems ----------------------------------------------------


@dataclass
class Validation:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass
class ChamberResult:
    word: tuple  # rho = s_word[0] ... s_word[-1] (rho')
    point: tuple  # rho' in the closed chamber
    stabilizer: tuple  # simple indices fixing rho'


class BasedRootSystem:
    """Simple roots ``simple`` in an ambient space with Gram matrix ``gram``."""

    def __init__(self, gram, simple, parent=None):
        self.gram = tuple(tuple(r) for r in gram)
        self.simple = tuple(tuple(v) for v in simple)
        self.parent = parent
        self.dim = len(self.gram)
        self.field = self.gram[0][0].field if self.dim else None

    def inner(self, u, v):
        acc = self.field.zero()
        for i in range(self.dim):
            if u[i]:
                for j in range(self.dim):
                    if v[j] and self.gram[i][j]:
                        acc = acc + u[i] * self.gram[i][j] * v[j]
        return acc

    def reflect(self, alpha, v) -> tuple:
        c = self.inner(v, alpha) * 2
        if not c:
            return tuple(v)
        return tuple(x - c * a for x, a in zip(v, alpha))

    def validate(self) -> Validation:
        bad = []
        if not positively_independent(self.simple):
            bad.append("(i) simple roots are not positively independent")
        F = self.field
        for i, a in enumerate(self.simple):
            if self.inner(a, a) != 1:
                bad.append(f"(ii) root {i} does not have unit norm")
        for i, j in itertools.combinations(range(len(self.simple)), 2):
            c = -self.inner(self.simple[i], self.simple[j])
            if not F.in_cos_set(c):
                bad.append(f"(iii) inner product of roots {i},{j} is {-c}, not in -COS")
        return Validation(not bad, bad)

    def bond(self, i, j):
        """Order of s_i s_j from the inner product; None if not recognised."""
        if i == j:
            return 1
        c = -self.inner(self.simple[i], self.simple[j])
        if (c - 1).sign() >= 0:
            return INF
        return self.field.recognize_cos(c)

    def coxeter_matrix(self, labels=None) -> CoxMatrix:
        n = len(self.simple)
        labels = labels or [f"r{i}" for i in range(n)]
        rows = tuple(tuple(self.bond(i, j) for j in range(n)) for i in range(n))
        return CoxMatrix(tuple(labels), rows)

    def positive_roots(self, depth=None, limit=100000) -> list:
        """Positive roots reachable from the simple roots in at most ``depth`` steps.

        Uses that s_a permutes the positive roots other than a, so no sign
        test is needed.  With depth=None the closure runs to completion.
        """
        seen = {r: 0 for r in self.simple}
        order = list(self.simple)
        frontier = list(self.simple)
        d = 0
        while frontier and (depth is None or d < depth):
            nxt = []
            for g in frontier:
                for a in self.simple:
                    if a == g:
                        continue
                    r = self.reflect(a, g)
                    if r not in seen:
                        seen[r] = d + 1
                        order.append(r)
                        nxt.append(r)
            if len(order) > limit:
                raise BoundExceeded(f"more than {limit} positive roots")
            frontier = nxt
            d += 1
        return order

    def in_chamber(self, rho) -> bool:
        return all(self.inner(a, rho).sign() >= 0 for a in self.simple)

    def to_chamber(self, rho, max_iters=1000) -> ChamberResult:
        """Move rho into the closed fundamental chamber.

        Reflects in the least-index simple root pairing negatively with the
        current point.  Raises BoundExceeded when the budget runs out, which
        is an inconclusive verdict on Tits cone membership.
        """
        rho = tuple(rho)
        word = []
        for _ in range(max_iters + 1):
            for i, a in enumerate(self.simple):
                if self.inner(a, rho).sign() < 0:
                    rho = self.reflect(a, rho)
                    word.append(i)
                    break
            else:
                stab = tuple(i for i, a in enumerate(self.simple) if not self.inner(a, rho))
                return ChamberResult(tuple(word), rho, stab)
        raise BoundExceeded(f"point not moved into the chamber within {max_iters} steps")


def standard_system(G: CoxeterGroup) -> BasedRootSystem:
    return BasedRootSystem(G.gram, G.simple_roots)


# -- reflection subgroups ----------------------------------------------------


def _reflect(G, alpha, v):
    c = G.inner(v, alpha) * 2
    if not c:
        return tuple(v)
    return tuple(x - c * a for x, a in zip(v, alpha))


def reflection_closure(G: CoxeterGroup, roots, limit=5000) -> list:
    """Positive roots of all reflections in the group generated by s_r, r in roots.

    Every reflection of a reflection subgroup is conjugate within it to one of
    any generating set of reflections, so the orbit of the given roots suffices.
    """
    gens = []
    for r in roots:
        r = normalize_root(r)
        if r not in gens:
            gens.append(r)
    seen = set(gens)
    out = list(gens)
    queue = list(gens)
    while queue:
        g = queue.pop()
        for r in gens:
            d = normalize_root(_reflect(G, r, g))
            if d not in seen:
                seen.add(d)
                out.append(d)
                queue.append(d)
                if len(out) > limit:
                    raise BoundExceeded(f"reflection subgroup has more than {limit} reflections")
    return out


def _sort_reflections(G, roots):
    return sorted(roots, key=lambda r: (G.reflection_elem(r).length, G.reflection_elem(r).word))


def chi(G: CoxeterGroup, reflections, limit=5000) -> list:
    """Canonical generators of the reflection subgroup generated by ``reflections``.

    Defined by N(t) meeting the subgroup only in t: the root g of t is kept
    when no other positive root of the subgroup is sent negative by s_g.
    """
    roots = [t.root if isinstance(t, Reflection) else normalize_root(t) for t in reflections]
    psi = reflection_closure(G, roots, limit)
    delta = []
    for g in psi:
        if all(b == g or G.is_positive(_reflect(G, g, b)) for b in psi):
            delta.append(g)
    return [Reflection(G, r) for r in _sort_reflections(G, delta)]


def chi_by_cone(G: CoxeterGroup, reflections, limit=5000) -> list:
    """Canonical generators as the extreme rays of the cone over the positive roots.

    Independent of ``chi``; only meaningful when the subgroup is finite.
    """
    roots = [t.root if isinstance(t, Reflection) else normalize_root(t) for t in reflections]
    psi = reflection_closure(G, roots, limit)
    delta = [g for g in psi if not in_cone(g, [b for b in psi if b != g])]
    return [Reflection(G, r) for r in _sort_reflections(G, delta)]


def subsystem(G: CoxeterGroup, reflections, limit=5000) -> BasedRootSystem:
    """The based root system attached to a reflection subgroup."""
    delta = chi(G, reflections, limit)
    return BasedRootSystem(G.gram, [t.root for t in delta], parent=standard_system(G))


def support(G: CoxeterGroup, gamma):
    """Support of a positive root and whether its Coxeter subgraph is connected.

    Also checks that s_gamma only involves generators from the support.
    """
    A = frozenset(i for i, c in enumerate(gamma) if c)
    letters = set(G.reflection_elem(gamma).word)
    if not letters <= A:
        raise ConsistencyError(f"reflection uses letters {sorted(letters - A)} outside the support", gamma)
    comps = [c for c in G.M.restrict(sorted(A)).components()]
    return A, len(comps) == 1


def brink_check(G: CoxeterGroup, gamma) -> list:
    """Coefficients of gamma violating c/2 in COS or the sqrt(2) gap; empty means ok."""
    F = G.field
    bad = []
    for i, c in enumerate(gamma):
        if not F.in_cos_set(c / 2):
            bad.append((i, c, "c/2 not in COS"))
        elif c != 0 and c != 1 and (c * c - 2).sign() < 0:
            bad.append((i, c, "0 < c < sqrt(2), c != 1"))
    return bad
