"""Semidirect decompositions W = W~ x| W_I.

Given a split S = I + J in which no odd bond joins I to J, the reflection
subgroup W~ generated by the W_I-conjugates of J is normal, complemented
by W_I, and a Coxeter group on the generators x t x^-1 with t in J and x a
minimal representative of W_I / W_{I cap t-perp}.  This module builds
those generators, their Coxeter matrix and the W_I action, and verifies
the structural statements around them by direct computation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .coxeter import INF, CoxMatrix, CoxeterGroup, Elem, format_entry, odd_classes, power_order
from .errors import BoundExceeded, ConsistencyError, PartitionError, PreconditionError
from .linalg import classify_gram, rank

__all__ = [
    "Decomposition",
    "TildeGen",
    "odd_path",
    "validate_partition",
]


def odd_path(M: CoxMatrix, I):
    """Shortest path along odd bonds from I to J (as indices), or None."""
    n = M.rank
    I = {M.index(s) for s in I}
    prev = {s: None for s in I}
    queue = sorted(I)
    while queue:
        nxt = []
        for a in queue:
            for b in range(n):
                m = M.entries[a][b]
                if a != b and m != INF and m % 2 == 1 and b not in prev:
                    prev[b] = a
                    if b not in I:
                        path = [b]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(b)
        queue = nxt
    return None


def validate_partition(M: CoxMatrix, I) -> None:
    """Raise PartitionError with an odd path when some s in I is conjugate into J."""
    for s in I:
        M.index(s)
    path = odd_path(M, I)
    if path is not None:
        labels = [M.labels[i] for i in path]
        raise PartitionError("odd path joins I to J: " + " - ".join(labels), labels)


@dataclass(frozen=True)
class TildeGen:
    """The generator x t x^-1 of W~, with x minimal in x W_{I cap t-perp}."""

    x: Elem
    t: int
    elem: Elem
    root: tuple
    label: str

    def sort_key(self):
        return (self.t, len(self.x.word), self.x.word)


def _word_label(labels, word) -> str:
    return ".".join(labels[s] for s in word) if word else "1"


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


class Decomposition:
    """All data of the decomposition attached to (W, I)."""

    def __init__(self, G: CoxeterGroup | CoxMatrix, I, bound=None):
        if isinstance(G, CoxMatrix):
            G = CoxeterGroup(G)
        self.G = G
        self.M = G.M
        validate_partition(self.M, I)
        self.I = G.indices(I)
        self.J = tuple(s for s in range(G.n) if s not in self.I)
        self.bound = bound
        self.WI_finite = G.is_finite(self.I)
        self.partial = False
        if not self.WI_finite and bound is None:
            raise PreconditionError("W_I is infinite; pass an explicit bound")

    # -- the projection --------------------------------------------------

    def phi(self, w: Elem) -> Elem:
        """Image under the letter map keeping I and deleting J."""
        return self.G.element([s for s in w.word if s in self.I])

    def in_tilde(self, w: Elem) -> bool:
        return self.phi(w).is_identity()

    def factorize(self, w: Elem):
        """(w~, a) with w = w~ a, a in W_I, w~ in W~."""
        a = self.phi(w)
        return w * a.inverse(), a

    # -- W_I and the generators ----------------------------------------

    @cached_property
    def WI(self) -> list:
        if self.WI_finite:
            return self.G.enumerate_group(self.I)
        self.partial = True
        return self.G.enumerate_ball(self.bound, self.I)

    def perp(self, t) -> tuple:
        """I cap t-perp."""
        return tuple(s for s in self.I if self.M.entries[s][t] == 2)

    @cached_property
    def tilde_J(self) -> list:
        G = self.G
        gens = []
        seen = {}
        for t in self.J:
            C = self.perp(t)
            for x in self.WI:
                if not G.in_coset_reps(x, C):
                    continue
                elem = x * G.gen(t) * x.inverse()
                root = x.apply(G.simple_roots[t])
                word = x.word
                tg = TildeGen(x, t, elem, root, _word_label(self.M.labels, word + (t,) + word[::-1]))
                if elem in seen:
                    raise ConsistencyError(
                        f"generators {seen[elem].label} and {tg.label} coincide", (seen[elem], tg)
                    )
                seen[elem] = tg
                gens.append(tg)
        gens.sort(key=TildeGen.sort_key)
        for tg in gens:
            if not G.is_positive(tg.root) or G.reflection_elem(tg.root) != tg.elem:
                raise ConsistencyError(f"{tg.label} is not the reflection of its root", tg)
        return gens

    @cached_property
    def _lookup(self) -> dict:
        return {(tg.t, tg.x): i for i, tg in enumerate(self.tilde_J)}

    @cached_property
    def _elem_lookup(self) -> dict:
        return {tg.elem: i for i, tg in enumerate(self.tilde_J)}

    def index_of(self, a: Elem, t) -> int:
        """Index of a t a^-1 for a in W_I."""
        x = self.G.min_coset_rep(a, self.perp(t), "right")
        try:
            return self._lookup[(t, x)]
        except KeyError:
            raise BoundExceeded(f"a {self.M.labels[t]} a^-1 lies outside the enumerated generators") from None

    def nu(self, i) -> int:
        return self.tilde_J[i].t

    def labels(self) -> tuple:
        return tuple(tg.label for tg in self.tilde_J)

    def f_elem(self, i, j) -> Elem:
        """Minimal element of W_{I cap s-perp} x^-1 y W_{I cap t-perp}."""
        a, b = self.tilde_J[i], self.tilde_J[j]
        return self.G.min_double_coset_rep(a.x.inverse() * b.x, self.perp(a.t), self.perp(b.t))

    def m_tilde(self, i, j):
        if i == j:
            return 1
        a, b = self.tilde_J[i], self.tilde_J[j]
        f = self.f_elem(i, j)
        s, t = a.t, b.t
        if s == t:
            if f.length == 0:
                raise ConsistencyError(f"distinct generators {a.label}, {b.label} with trivial f", (i, j))
            if f.length == 1:
                u = f.word[0]
                m = self.M.entries[s][u]
                if m == INF:
                    return INF
                if m % 2:
                    raise ConsistencyError(f"odd bond between {self.M.labels[s]} and {self.M.labels[u]}")
                return m // 2
            return INF
        return self.M.entries[s][t] if f.length == 0 else INF

    @cached_property
    def tilde_matrix(self) -> CoxMatrix:
        k = len(self.tilde_J)
        rows = [[1] * k for _ in range(k)]
        for i, j in itertools.combinations(range(k), 2):
            rows[i][j] = rows[j][i] = self.m_tilde(i, j)
        return CoxMatrix(self.labels(), tuple(tuple(r) for r in rows))

    def tilde_matrix_via_roots(self) -> CoxMatrix:
        """Bonds read from inner products of the generator roots."""
        G = self.G
        F = G.field
        k = len(self.tilde_J)
        rows = [[1] * k for _ in range(k)]
        for i, j in itertools.combinations(range(k), 2):
            c = -G.inner(self.tilde_J[i].root, self.tilde_J[j].root)
            if (c - 1).sign() >= 0:
                m = INF
            else:
                m = F.recognize_cos(c)
                if m is None:
                    raise ConsistencyError(
                        f"<{self.tilde_J[i].label}, {self.tilde_J[j].label}> = {-c} is not in -COS", (i, j)
                    )
            rows[i][j] = rows[j][i] = m
        return CoxMatrix(self.labels(), tuple(tuple(r) for r in rows))

    def tilde_matrix_via_orders(self) -> dict:
        """Orders of products for the finite entries of the formula matrix."""
        out = {}
        M = self.tilde_matrix
        for i, j in itertools.combinations(range(len(self.tilde_J)), 2):
            m = M.entries[i][j]
            if m != INF:
                out[(i, j)] = power_order(self.tilde_J[i].elem * self.tilde_J[j].elem, m)
        return out

    def triple_check(self) -> CoxMatrix:
        """Formula, root route and power iteration must agree entrywise."""
        M = self.tilde_matrix
        R = self.tilde_matrix_via_roots()
        for i, j in itertools.combinations(range(M.rank), 2):
            if M.entries[i][j] != R.entries[i][j]:
                raise ConsistencyError(
                    f"m~({M.labels[i]}, {M.labels[j]}): formula {format_entry(M.entries[i][j])}, "
                    f"roots {format_entry(R.entries[i][j])}",
                    (i, j),
                )
        for (i, j), m in self.tilde_matrix_via_orders().items():
            if m != M.entries[i][j]:
                raise ConsistencyError(
                    f"order of {M.labels[i]}*{M.labels[j]} is {m}, formula gives {M.entries[i][j]}", (i, j)
                )
        return M

    def check_symmetry(self) -> None:
        """M~ is invariant under the W_I action."""
        M = self.tilde_matrix
        for s in self.I:
            p = self.action_of(s)
            for i, j in itertools.combinations(range(M.rank), 2):
                if M.entries[p[i]][p[j]] != M.entries[i][j]:
                    raise ConsistencyError(f"action of {self.M.labels[s]} does not preserve m~", (s, i, j))

    # -- lengths ----------------------------------------------------------

    def ell_J(self, w: Elem) -> int:
        return sum(1 for s in w.word if s in self.J)

    @cached_property
    def tilde_group(self) -> CoxeterGroup:
        """A fresh geometric representation of (W~, J~) built from M~."""
        return CoxeterGroup(self.tilde_matrix)

    def tilde_word(self, w: Elem) -> tuple:
        """A word over J~ for w in W~, one letter per J-letter of the canonical word."""
        G = self.G
        a = G.identity()
        out = []
        for s in w.word:
            if s in self.I:
                a = a * G.gen(s)
            else:
                out.append(self.index_of(a, s))
        if not a.is_identity():
            raise PreconditionError("element does not lie in W~")
        return tuple(out)

    def to_tilde_elem(self, w: Elem) -> Elem:
        return self.tilde_group.element(self.tilde_word(w))

    def tilde_length(self, w: Elem) -> int:
        return self.to_tilde_elem(w).length

    def verify_semidirect(self, elements) -> int:
        """Factorization checks over a finite set of elements (a ball or all of W).

        For each w: w = w~ a with phi(w~) = 1 and a in W_I; a has no descent
        t~ in J~ (so it is minimal in W~ a); no element of the set in the coset
        W~ a is shorter than a, and W~ meets W_I trivially.
        """
        Iset = set(self.I)
        gens = [tg.elem for tg in self.tilde_J]
        shortest = {}
        for w in elements:
            wt, a = self.factorize(w)
            if not self.in_tilde(wt) or not set(a.word) <= Iset or wt * a != w:
                raise ConsistencyError(f"bad factorization of {w.labels()}", w)
            if a.is_identity() is False and self.in_tilde(a):
                raise ConsistencyError(f"{a.labels()} lies in W~ and W_I", a)
            prev = shortest.get(a)
            if prev is None or w.length < prev.length:
                shortest[a] = w
        for a, w in shortest.items():
            if w != a and w.length <= a.length:
                raise ConsistencyError(f"{w.labels()} is no longer than {a.labels()} in its coset", (w, a))
            for g in gens:
                if (a * g).length < a.length:
                    raise ConsistencyError(f"{a.labels()} has a descent in J~", (a, g))
        return len(shortest)

    def verify_lengths(self, elements) -> int:
        """l_J(w~) equals the length of w~ in (W~, J~), also after multiplying by W_I."""
        n = 0
        for w in elements:
            wt, a = self.factorize(w)
            lt = self.tilde_length(wt)
            if self.ell_J(wt) != lt or self.ell_J(w) != lt or self.ell_J(a * wt) != lt:
                raise ConsistencyError(f"l_J and l~ disagree on {wt.labels()}", wt)
            if self.tilde_length(a * wt * a.inverse()) != lt:
                raise ConsistencyError(f"l~ is not conjugation invariant at {wt.labels()}", wt)
            n += 1
        return n

    # -- palindromes and the action ---------------------------------------

    def palindromic_expr(self, i) -> tuple:
        tg = self.tilde_J[i]
        word = tg.x.word + (tg.t,) + tg.x.word[::-1]
        e = self.G.element(word)
        if e != tg.elem or e.length != len(word):
            raise ConsistencyError(f"palindrome for {tg.label} is not a reduced expression", i)
        return word

    def action_of(self, s) -> tuple:
        """Permutation p of generator indices with s t~_i s = t~_p[i]."""
        s = self.M.index(s)
        if s not in self.I:
            raise PreconditionError(f"{self.M.labels[s]} is not in I")
        g = self.G.gen(s)
        return tuple(self.index_of(g * tg.x, tg.t) for tg in self.tilde_J)

    def action_cycles(self, s) -> list:
        p = self.action_of(s)
        seen = set()
        cycles = []
        for i in range(len(p)):
            if i in seen or p[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = p[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = p[j]
            cycles.append(tuple(cyc))
        return cycles

    def components(self) -> list:
        """Components of the M~ diagram, checked against the nu-map and the action."""
        comps = self.tilde_matrix.components()
        Wcomps = [set(c) for c in self.M.components()]
        for comp in comps:
            image = {self.nu(i) for i in comp}
            home = next(c for c in Wcomps if image & c)
            if image != home & set(self.J):
                raise ConsistencyError("nu is not onto J on a component", comp)
        if self.M.is_irreducible() and comps and not self.partial:
            orbit = {0}
            frontier = [0]
            comp_of = {i: k for k, c in enumerate(comps) for i in c}
            perms = [self.action_of(s) for s in self.I]
            while frontier:
                k = frontier.pop()
                for p in perms:
                    nk = comp_of[p[comps[k][0]]]
                    if nk not in orbit:
                        orbit.add(nk)
                        frontier.append(nk)
            if len(orbit) != len(comps):
                raise ConsistencyError("W_I does not permute the components transitively", comps)
        return comps

    def orbits(self) -> list:
        """W_I-orbits on the generators."""
        k = len(self.tilde_J)
        parent = list(range(k))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for s in self.I:
            for i, j in enumerate(self.action_of(s)):
                parent[find(i)] = find(j)
        groups = {}
        for i in range(k):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    # -- canonical generators --------------------------------------------

    def verify_canonical(self, i) -> None:
        """N(t~) meets W~ exactly in t~."""
        tg = self.tilde_J[i]
        hits = [r for r in self.G.N_set(tg.elem) if self.in_tilde(r.elem)]
        if len(hits) != 1 or hits[0].elem != tg.elem:
            raise ConsistencyError(f"N({tg.label}) meets W~ in {len(hits)} reflections", (i, hits))

    def tilde_roots_rank(self) -> int:
        return rank([list(tg.root) for tg in self.tilde_J])

    def classify_components(self) -> list:
        """Gram classification of each component of M~ in its own representation."""
        out = []
        GT = self.tilde_group
        for comp in self.tilde_matrix.components():
            out.append(classify_gram([[GT.gram[i][j] for j in comp] for i in comp]))
        return out

    # -- parabolic subgroups -----------------------------------------------

    def k_plus(self, K) -> frozenset:
        """{w t w^-1 : w in W_{I cap K}, t in J cap K} as generator indices."""
        K = set(self.G.indices(K))
        IK = [s for s in self.I if s in K]
        sub = self.G.enumerate_group(IK) if self.G.is_finite(IK) else self.G.enumerate_ball(self.bound or 0, IK)
        return frozenset(self.index_of(w, t) for t in self.J if t in K for w in sub)

    def verify_parabolic(self, K, table=None) -> None:
        """Exhaustive checks of the parabolic statements for one K (finite W).

        * K+ equals the generators lying in W_K, and W_K cap W~ = W~_{K+};
        * every d minimal in W_I / W_{I cap K} is the unique minimum of W~ d W_K
          and W~ cap d W_K d^-1 is generated by the generators it contains;
        * for L = K+ the map W_I x X~_L -> X_L, (a, x) -> a x, is bijective.
        """
        from .table import FiniteGroupTable

        T = table or FiniteGroupTable(self.G)
        G = self.G
        K = G.indices(K)
        Kset = set(K)
        IK = tuple(s for s in self.I if s in Kset)
        phi_idx = self._phi_indices(T)
        tilde_mask = phi_idx == 0
        inWK = T.in_parabolic(K)
        gen_idx = np.array([T.index[tg.elem] for tg in self.tilde_J], dtype=np.int64)
        kp = self.k_plus(K)
        direct = frozenset(i for i in range(len(gen_idx)) if inWK[gen_idx[i]])
        if kp != direct:
            raise ConsistencyError(f"K+ differs from the generators inside W_K for K={K}", (kp, direct))
        sub = T.closure(gen_idx[sorted(kp)])
        if not np.array_equal(sub, inWK & tilde_mask):
            raise ConsistencyError(f"W_K cap W~ differs from W~_(K+) for K={K}")
        lengths = T.length
        mult = T.mult
        tilde_idx = np.nonzero(tilde_mask)[0]
        wk_idx = np.nonzero(inWK)[0]
        WI_mask = T.in_parabolic(self.I)
        reps = np.nonzero(WI_mask & T.min_left_coset_reps(IK))[0]
        covered = np.zeros(T.order, dtype=bool)
        for d in reps:
            left = mult[tilde_idx, d]
            dc = np.unique(mult[np.ix_(left, wk_idx)].ravel())
            if covered[dc].any():
                raise ConsistencyError(f"double cosets of {T.words[d]} overlap", d)
            covered[dc] = True
            best = lengths[dc].min()
            if lengths[d] != best or (lengths[dc] == best).sum() != 1:
                raise ConsistencyError(f"{T.words[d]} is not the unique minimum of its double coset", d)
            conj = T.conjugate(d, wk_idx)
            inter = np.zeros(T.order, dtype=bool)
            inter[conj[tilde_mask[conj]]] = True
            inside = [g for g in gen_idx if inter[g]]
            if not np.array_equal(T.closure(inside), inter):
                raise ConsistencyError(f"W~ cap d W_K d^-1 is not standard for d={T.words[d]}", d)
        if not covered.all():
            raise ConsistencyError("double cosets do not cover W")
        self._check_product_x(T, [int(gen_idx[i]) for i in sorted(kp)], tilde_mask, WI_mask)

    def _check_product_x(self, T, L_idx, tilde_mask, WI_mask):
        """W_I x X~_L -> X_L is a bijection; X~_L uses lengths in (W~, J~)."""
        sub = T.closure(L_idx)
        sub_idx = np.nonzero(sub)[0]
        tl = self._tilde_lengths(T)
        mult = T.mult
        # X~_L: elements of W~ of minimal tilde length in their coset w W~_L
        tilde_idx = np.nonzero(tilde_mask)[0]
        Xt = [w for w in tilde_idx if tl[mult[w, sub_idx]].min() == tl[w] and (tl[mult[w, sub_idx]] == tl[w]).sum() == 1]
        # X_L: elements of W of minimal length in w W~_L
        XL = set(int(w) for w in range(T.order) if T.length[mult[w, sub_idx]].min() == T.length[w])
        prods = [int(mult[a, x]) for a in np.nonzero(WI_mask)[0] for x in Xt]
        if len(set(prods)) != len(prods) or set(prods) != XL:
            raise ConsistencyError("W_I x X~_L -> X_L is not a bijection", (len(prods), len(XL)))

    def _phi_indices(self, T) -> np.ndarray:
        cache = getattr(self, "_phi_cache", None)
        if cache is not None and cache[0] is T:
            return cache[1]
        out = np.empty(T.order, dtype=np.int64)
        for i, word in enumerate(T.words):
            out[i] = T.word_index([s for s in word if s in self.I])
        self._phi_cache = (T, out)
        return out

    def _tilde_lengths(self, T) -> np.ndarray:
        cache = getattr(self, "_tl_cache", None)
        if cache is not None and cache[0] is T:
            return cache[1]
        phi_idx = self._phi_indices(T)
        tl = np.full(T.order, -1, dtype=np.int64)
        for i in np.nonzero(phi_idx == 0)[0]:
            tl[i] = self.tilde_length(T.elements[i])
        self._tl_cache = (T, tl)
        return tl

    def verify_parafine(self, L, max_len=None):
        """Find (K, d) with W_K finite, d minimal in W_I / W_{I cap K} and
        W~_L = W~ cap d W_K d^-1.  Returns the witness or None."""
        G = self.G
        L = sorted(L)
        GT = self.tilde_group
        if L and not GT.is_finite(L):
            raise PreconditionError("W~_L is not finite")
        target = self._generated([self.tilde_J[i].elem for i in L])
        for size in range(G.n + 1):
            for K in itertools.combinations(range(G.n), size):
                if not G.is_finite(K):
                    continue
                WK = G.enumerate_group(K)
                IK = [s for s in self.I if s in K]
                for d in self.WI:
                    if not G.in_coset_reps(d, IK):
                        continue
                    dinv = d.inverse()
                    inter = {w for w in (d * k * dinv for k in WK) if self.in_tilde(w)}
                    if inter == target:
                        return tuple(K), d
        return None

    def _generated(self, gens) -> set:
        G = self.G
        out = {G.identity()}
        frontier = [G.identity()]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    v = w * g
                    if v not in out:
                        out.add(v)
                        nxt.append(v)
            frontier = nxt
        return out

    # -- report -------------------------------------------------------------

    def report(self, name=None) -> DecompReport:
        from .catalog import recognize

        M = self.triple_check()
        comps = self.components()
        types = [recognize(M.restrict(c)) for c in comps]
        MI = self.M.restrict(self.I)
        WI_type = " x ".join(recognize(MI.restrict(c)) for c in MI.components()) if self.I else "1"
        return DecompReport(
            name=name or "",
            ambient=self.M,
            I=tuple(self.M.labels[s] for s in self.I),
            J=tuple(self.M.labels[s] for s in self.J),
            generators=[
                GenInfo(
                    tg.label,
                    " ".join(self.M.labels[s] for s in self.palindromic_expr(i)),
                    self.M.labels[tg.t],
                    _word_label(self.M.labels, tg.x.word),
                    tuple(tg.root),
                )
                for i, tg in enumerate(self.tilde_J)
            ],
            tilde_matrix=M,
            actions={self.M.labels[s]: [tuple(M.labels[i] for i in c) for c in self.action_cycles(s)] for s in self.I},
            components=[tuple(M.labels[i] for i in c) for c in comps],
            component_types=types,
            orbits=[tuple(M.labels[i] for i in o) for o in self.orbits()],
            WI_type=WI_type,
            partial=self.partial,
        )


@dataclass
class GenInfo:
    label: str
    word: str
    nu: str
    x: str
    root: tuple


@dataclass
class DecompReport:
    name: str
    ambient: CoxMatrix
    I: tuple
    J: tuple
    generators: list
    tilde_matrix: CoxMatrix
    actions: dict
    components: list
    component_types: list
    orbits: list
    WI_type: str
    partial: bool = False
    extra: dict = field(default_factory=dict)

    def semidirect_label(self) -> str:
        tilde = " x ".join(f"W({t})" for t in self.component_types) or "1"
        return f"{tilde} x| W({self.WI_type})"

    def to_text(self) -> str:
        from .formats import format_vector

        out = ["[decomposition]"]
        if self.name:
            out.append(f"ambient: {self.name}")
        out.append("labels: " + " ".join(self.ambient.labels))
        out.append("I: " + " ".join(self.I))
        out.append("J: " + " ".join(self.J))
        out.append(f"W_I: {self.WI_type}")
        out.append("tilde_types: " + " ".join(self.component_types))
        out.append(f"structure: {self.semidirect_label()}")
        out.append(f"generators: {len(self.generators)}")
        out.append(f"partial: {'yes' if self.partial else 'no'}")
        for k, v in self.extra.items():
            out.append(f"{k}: {v}")
        out.append("")
        out.append("[generators]")
        for g in self.generators:
            out.append(f"{g.label}: word=({g.word}) nu={g.nu} x={g.x} root={format_vector(g.root)}")
        out.append("")
        out.append("[ambient_matrix]")
        out.append(self.ambient.to_text().rstrip())
        out.append("")
        out.append("[tilde_matrix]")
        out.append(self.tilde_matrix.to_text().rstrip())
        out.append("")
        out.append("[actions]")
        for s, cycles in self.actions.items():
            txt = "".join("(" + " ".join(c) + ")" for c in cycles) or "()"
            out.append(f"{s}: {txt}")
        out.append("")
        out.append("[components]")
        for c, t in zip(self.components, self.component_types):
            out.append(f"{t}: " + " ".join(c))
        out.append("")
        out.append("[orbits]")
        for o in self.orbits:
            out.append(" ".join(o))
        return "\n".join(out) + "\n"

    def to_dot(self) -> str:
        from .formats import dot_diagram

        return dot_diagram(self.tilde_matrix, self.orbits)
