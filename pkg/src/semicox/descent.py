"""Solomon descent algebras of W and W~ and the map between them.

Group-algebra elements are integer vectors indexed by the elements of a
finite group table.  Every coefficient in this module is an integer or a
Fraction, so all identities are checked exactly.

For K in S, x_K is the sum of the minimal representatives of the cosets
w W_K, i.e. of the elements without right descents in K.  The same
definition applied to (W~, J~) with its own length function gives x~_L.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, GroupNotFinite
from .linalg import rank
from .table import FiniteGroupTable

__all__ = ["SolomonAlgebra", "DescentMap", "subsets"]


def subsets(items):
    items = tuple(items)
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def _mul(T: FiniteGroupTable, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    A = np.nonzero(a)[0]
    B = np.nonzero(b)[0]
    out = np.zeros(T.order, dtype=object if a.dtype == object or b.dtype == object else np.int64)
    if A.size == 0 or B.size == 0:
        return out
    if out.dtype != object:
        bound = int(np.abs(a).sum()) * int(np.abs(b).sum())
        if bound >= 2**62:
            a, b = a.astype(object), b.astype(object)
            out = out.astype(object)
    idx = T.mult[np.ix_(A, B)].ravel()
    vals = np.multiply.outer(a[A], b[B]).ravel()
    np.add.at(out, idx, vals)
    return out


class SolomonAlgebra:
    """Descent algebra of a Coxeter system realised inside a group table.

    ``domain`` lists the table indices of the group, ``gens`` the table
    indices of its Coxeter generators and ``lengths`` the length function
    on the whole table (only read on ``domain``).
    """

    def __init__(self, T: FiniteGroupTable, domain, gens, lengths):
        self.T = T
        self.domain = np.asarray(domain, dtype=np.int64)
        self.gens = tuple(int(g) for g in gens)
        self.k = len(self.gens)
        self.lengths = np.asarray(lengths)
        self.in_domain = np.zeros(T.order, dtype=bool)
        self.in_domain[self.domain] = True
        mult = T.mult
        desc = np.zeros(T.order, dtype=np.int64)
        for i, g in enumerate(self.gens):
            moved = mult[self.domain, g]
            if not self.in_domain[moved].all():
                raise ConsistencyError("a generator leaves the group")
            shorter = self.lengths[moved] < self.lengths[self.domain]
            desc[self.domain[shorter]] |= 1 << i
        self.descents = desc
        self._x = {}
        self._parabolic = {}

    def mask(self, L) -> int:
        return sum(1 << i for i in L)

    def x(self, L) -> np.ndarray:
        """x_L as a group-algebra vector."""
        L = frozenset(L)
        hit = self._x.get(L)
        if hit is None:
            v = np.zeros(self.T.order, dtype=np.int64)
            dom = self.domain
            v[dom[(self.descents[dom] & self.mask(L)) == 0]] = 1
            self._x[L] = hit = v
        return hit

    def parabolic(self, L) -> np.ndarray:
        """Boolean mask of the standard parabolic subgroup generated by L."""
        L = frozenset(L)
        hit = self._parabolic.get(L)
        if hit is None:
            hit = self.T.closure([self.gens[i] for i in sorted(L)])
            self._parabolic[L] = hit
        return hit

    def multiply(self, a, b) -> np.ndarray:
        return _mul(self.T, a, b)

    def express(self, v) -> dict:
        """Coefficients c_L with v = sum c_L x_L; ConsistencyError when v is outside."""
        if v[~self.in_domain].any():
            raise ConsistencyError("element has support outside the group")
        dom = self.domain
        full = (1 << self.k) - 1
        g = {}
        for D in range(full + 1):
            cls = dom[self.descents[dom] == D]
            if cls.size == 0:
                vals = set()
            else:
                vals = set(v[cls].tolist())
            if len(vals) > 1:
                raise ConsistencyError(f"coefficients vary on the descent class {D:b}")
            g[D] = Fraction(vals.pop()) if vals else Fraction(0)
        # x_L = sum over D disjoint from L of y_D, so g(D) = sum_{L within S - D} c_L
        h = {E: g[full & ~E] for E in range(full + 1)}
        coeffs = {}
        for K in range(full + 1):
            c = Fraction(0)
            E = K
            while True:
                c += (-1) ** bin(K & ~E).count("1") * h[E]
                if E == 0:
                    break
                E = (E - 1) & K
            if c:
                coeffs[frozenset(i for i in range(self.k) if K >> i & 1)] = c
        rebuilt = self.combine(coeffs)
        if not np.array_equal(rebuilt.astype(object), v.astype(object)):
            raise ConsistencyError("element is not in the descent algebra")
        return coeffs

    def combine(self, coeffs) -> np.ndarray:
        out = np.zeros(self.T.order, dtype=object)
        for L, c in coeffs.items():
            out = out + self.x(L).astype(object) * c
        if all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1) for x in out):
            return np.array([int(x) for x in out], dtype=np.int64)
        return out

    def sigma_product(self, A, B) -> dict:
        """x_A x_B re-expressed in the basis {x_L}."""
        return self.express(self.multiply(self.x(A), self.x(B)))

    def character(self, L) -> np.ndarray:
        """Permutation character of the group on cosets of W_L, on the whole domain.

        theta(x_L)(w) = #{x minimal in x W_L : x^-1 w x in W_L}.
        """
        T = self.T
        mult, inv = T.mult, T.inv
        WL = self.parabolic(L)
        dom = self.domain
        out = np.zeros(T.order, dtype=np.int64)
        for x in np.nonzero(self.x(L))[0]:
            conj = mult[inv[x], mult[dom, x]]
            out[dom] += WL[conj]
        return out

    def character_of(self, coeffs) -> np.ndarray:
        out = np.zeros(self.T.order, dtype=object)
        for L, c in coeffs.items():
            out = out + self.character(L).astype(object) * c
        return out


class DescentMap:
    """The map x_K -> sum_d x~_(J~ cap d W_K d^-1) from Sigma(W) to Sigma(W~)."""

    def __init__(self, D, table: FiniteGroupTable | None = None):
        G = D.G
        if not G.is_finite():
            raise GroupNotFinite("the descent algebra needs a finite group")
        self.D = D
        self.T = T = table or FiniteGroupTable(G)
        self.S = tuple(range(G.n))
        self.W = SolomonAlgebra(T, np.arange(T.order), [T.index[g] for g in G.gens()], T.length)
        phi = D._phi_indices(T)
        tilde_idx = np.nonzero(phi == 0)[0]
        tl = D._tilde_lengths(T)
        self.Wt = SolomonAlgebra(T, tilde_idx, [T.index[tg.elem] for tg in D.tilde_J], tl)
        self.k = len(D.tilde_J)
        WI = T.in_parabolic(D.I)
        self.WI_idx = np.nonzero(WI)[0]
        self.z = WI.astype(np.int64)
        self._perm = {}

    def _K(self, K) -> frozenset:
        return frozenset(self.D.G.indices(K))

    def x(self, K) -> np.ndarray:
        return self.W.x(self._K(K))

    def x_tilde(self, L) -> np.ndarray:
        return self.Wt.x(frozenset(L))

    def x_tilde_by_ambient_length(self, L) -> np.ndarray:
        """Sum of the elements of W~ of minimal W-length in their coset w W~_L."""
        T = self.T
        sub = np.nonzero(self.Wt.parabolic(L))[0]
        v = np.zeros(T.order, dtype=np.int64)
        for w in self.Wt.domain:
            coset = T.mult[w, sub]
            if T.length[coset].min() == T.length[w]:
                v[w] = 1
        return v

    def perm_of(self, d) -> tuple:
        """Permutation of J~ induced by conjugation with table element d in W_I."""
        d = int(d)
        hit = self._perm.get(d)
        if hit is None:
            T = self.T
            gidx = self.Wt.gens
            pos = {g: i for i, g in enumerate(gidx)}
            hit = tuple(pos[int(T.mult[T.mult[d, g], T.inv[d]])] for g in gidx)
            self._perm[d] = hit
        return hit

    def restilde(self, K) -> dict:
        """Coefficients over subsets L of J~ (indices) of the image of x_K."""
        K = self._K(K)
        T = self.T
        IK = [s for s in self.D.I if s in K]
        kp = self.D.k_plus(K)
        out = {}
        mask = sum(1 << s for s in IK)
        for d in self.WI_idx:
            if T.right_descents[d] & mask:
                continue
            p = self.perm_of(d)
            L = frozenset(p[i] for i in kp)
            out[L] = out.get(L, 0) + 1
        return {L: Fraction(c) for L, c in out.items()}

    def restilde_of(self, coeffs) -> dict:
        """Linear extension to combinations {K: c} of the x_K."""
        out = {}
        for K, c in coeffs.items():
            for L, e in self.restilde(K).items():
                out[L] = out.get(L, 0) + c * e
        return {L: c for L, c in out.items() if c}

    def vector(self, coeffs) -> np.ndarray:
        return self.Wt.combine(coeffs)

    # -- checks -------------------------------------------------------------

    def check_z_identity(self, K) -> None:
        """z restilde(x_K) = x_K z with z the sum of W_I."""
        left = _mul(self.T, self.z, self.vector(self.restilde(K)))
        right = _mul(self.T, self.x(K), self.z)
        if not np.array_equal(left.astype(object), right.astype(object)):
            raise ConsistencyError(f"z restilde(x_K) differs from x_K z for K={sorted(K)}")

    def check_morphism(self, K1, K2) -> None:
        W = self.W
        prod = W.sigma_product(self._K(K1), self._K(K2))
        lhs = self.restilde_of(prod)
        a = self.vector(self.restilde(K1))
        b = self.vector(self.restilde(K2))
        rhs = self.Wt.express(self.Wt.multiply(a, b))
        if lhs != rhs:
            raise ConsistencyError(f"restilde is not multiplicative on ({sorted(K1)}, {sorted(K2)})", (lhs, rhs))

    def verify_morphism(self) -> int:
        n = 0
        for K1 in subsets(self.S):
            self.check_z_identity(K1)
            for K2 in subsets(self.S):
                self.check_morphism(K1, K2)
                n += 1
        return n

    def is_fixed(self, coeffs) -> bool:
        for d in self.WI_idx:
            p = self.perm_of(d)
            moved = {frozenset(p[i] for i in L): c for L, c in coeffs.items()}
            if moved != coeffs:
                return False
        return True

    def image_fixed_check(self):
        """Rank of the image equals the dimension of the W_I-fixed part of Sigma(W~)."""
        basis = list(subsets(range(self.k)))
        pos = {L: i for i, L in enumerate(basis)}
        rows = []
        for K in subsets(self.S):
            r = self.restilde(K)
            if not self.is_fixed(r):
                raise ConsistencyError(f"restilde(x_K) is not W_I-fixed for K={sorted(K)}")
            row = [Fraction(0)] * len(basis)
            for L, c in r.items():
                row[pos[L]] = c
            rows.append(row)
        seen = set()
        orbits = 0
        for L in basis:
            if L in seen:
                continue
            orbits += 1
            for d in self.WI_idx:
                p = self.perm_of(d)
                seen.add(frozenset(p[i] for i in L))
        r = rank(rows) if rows else 0
        if r != orbits:
            raise ConsistencyError(f"image has rank {r}, fixed subspace has dimension {orbits}")
        return r, orbits

    def theta(self, K) -> np.ndarray:
        return self.W.character(self._K(K))

    def theta_tilde(self, coeffs) -> np.ndarray:
        return self.Wt.character_of(coeffs)

    def verify_diagram(self) -> int:
        """Res theta(x_K) = theta~(restilde(x_K)) on W~ for every K."""
        dom = self.Wt.domain
        n = 0
        for K in subsets(self.S):
            left = self.theta(K)[dom].astype(object)
            right = self.theta_tilde(self.restilde(K))[dom]
            if not np.array_equal(left, right):
                raise ConsistencyError(f"character diagram fails for K={sorted(K)}")
            n += 1
        return n
