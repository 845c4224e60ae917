"""Coxeter matrices, the geometric representation and exact group elements.

Generators are addressed by their index ``0 .. n-1``; labels are only used
for input and display.  ShortLex order on words follows the index order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundExceeded, GroupNotFinite, PreconditionError
from .linalg import is_positive_definite
from .scalar import CycReal, field_for

INF = math.inf

__all__ = [
    "INF",
    "CoxMatrix",
    "CoxeterGroup",
    "Elem",
    "Reflection",
    "odd_classes",
    "parse_entry",
    "format_entry",
]


def parse_entry(tok: str):
    tok = tok.strip()
    if tok.lower() in ("inf", "oo", "∞", "infinity"):
        return INF
    v = int(tok)
    return v


def format_entry(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True)
class CoxMatrix:
    """Symmetric Coxeter matrix with string labels; infinite bonds are ``INF``."""

    labels: tuple
    entries: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        rows = tuple(tuple(INF if m == INF else int(m) for m in r) for r in self.entries)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", rows)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError("generator labels must be distinct")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("Coxeter matrix must be square and match the labels")
        for i in range(n):
            if rows[i][i] != 1:
                raise ValueError(f"diagonal entry at {labels[i]} must be 1")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({labels[i]}, {labels[j]})")
                if i != j and not rows[i][j] >= 2:
                    raise ValueError(f"off-diagonal entry at ({labels[i]}, {labels[j]}) must be >= 2")

    @classmethod
    def from_bonds(cls, labels, bonds):
        """Build from a sparse dict {(a, b): m}; unlisted pairs commute."""
        labels = tuple(labels)
        idx = {s: i for i, s in enumerate(labels)}
        rows = [[1 if i == j else 2 for j in range(len(labels))] for i in range(len(labels))]
        for (a, b), m in bonds.items():
            i, j = idx[a], idx[b]
            rows[i][j] = rows[j][i] = m
        return cls(labels, tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        if isinstance(label, int):
            return label
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown generator {label!r}") from None

    def m(self, i, j):
        return self.entries[self.index(i)][self.index(j)]

    def restrict(self, subset) -> CoxMatrix:
        keep = [self.index(s) for s in subset]
        return CoxMatrix(
            tuple(self.labels[i] for i in keep),
            tuple(tuple(self.entries[i][j] for j in keep) for i in keep),
        )

    def relabel(self, labels) -> CoxMatrix:
        return CoxMatrix(tuple(labels), self.entries)

    def edges(self):
        """Pairs i < j with m >= 3, as (i, j, m)."""
        n = self.rank
        return [(i, j, self.entries[i][j]) for i in range(n) for j in range(i + 1, n) if self.entries[i][j] != 2]

    def components(self):
        """Connected components of the Coxeter graph as sorted index lists."""
        n = self.rank
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i, j, _ in self.edges():
            parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def is_irreducible(self) -> bool:
        return len(self.components()) <= 1

    # text format ------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> CoxMatrix:
        labels = None
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.lower().startswith("labels:"):
                labels = line.split(":", 1)[1].split()
                continue
            rows.append(tuple(parse_entry(t) for t in line.replace(",", " ").split()))
        if labels is None:
            labels = [f"s{i + 1}" for i in range(len(rows))]
        return cls(tuple(labels), tuple(rows))

    def to_text(self) -> str:
        width = max([len(format_entry(m)) for r in self.entries for m in r] + [1])
        lines = ["labels: " + " ".join(self.labels)]
        for r in self.entries:
            lines.append(" ".join(format_entry(m).rjust(width) for m in r))
        return "\n".join(lines) + "\n"


def odd_classes(M: CoxMatrix):
    """Components of the graph whose edges are the odd finite bonds."""
    n = M.rank
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            m = M.entries[i][j]
            if m != INF and m % 2 == 1:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


class Elem:
    """A group element: exact matrices of w and w^-1, canonical word on demand."""

    __slots__ = ("group", "mat", "inv", "_word", "_hash")

    def __init__(self, group, mat, inv, word=None):
        self.group = group
        self.mat = mat
        self.inv = inv
        self._word = word
        self._hash = None

    @property
    def word(self) -> tuple:
        if self._word is None:
            self._word = self.group._strip_left(self.mat, self.inv)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def labels(self) -> tuple:
        return tuple(self.group.M.labels[s] for s in self.word)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __lt__(self, other):
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        G = self.group
        if other._word is not None and (self._word is None or len(other._word) <= len(self._word)):
            mat, inv = self.mat, self.inv
            for s in other._word:
                mat = G._rmul(mat, s)
                inv = G._lmul(s, inv)
            return Elem(G, mat, inv)
        mat, inv = other.mat, other.inv
        for s in reversed(self.word):
            mat = G._lmul(s, mat)
            inv = G._rmul(inv, s)
        return Elem(G, mat, inv)

    def inverse(self) -> Elem:
        return Elem(self.group, self.inv, self.mat)

    def is_identity(self) -> bool:
        return self.mat == self.group._id_mat

    def right_descents(self) -> frozenset:
        G = self.group
        return frozenset(s for s in range(G.n) if G._col_negative(self.mat, s))

    def left_descents(self) -> frozenset:
        G = self.group
        return frozenset(s for s in range(G.n) if G._col_negative(self.inv, s))

    def has_right_descent(self, s) -> bool:
        return self.group._col_negative(self.mat, s)

    def has_left_descent(self, s) -> bool:
        return self.group._col_negative(self.inv, s)

    def apply(self, vec) -> tuple:
        """w(v) for a coordinate vector over the simple roots."""
        n = self.group.n
        zero = self.group.field.zero()
        out = []
        for r in range(n):
            acc = zero
            for c in range(n):
                v = vec[c]
                if v:
                    e = self.mat[r * n + c]
                    if e:
                        acc = acc + e * v
            out.append(acc)
        return tuple(out)

    def column(self, s) -> tuple:
        n = self.group.n
        return tuple(self.mat[r * n + s] for r in range(n))

    def __repr__(self):
        w = self.labels()
        return f"Elem({' '.join(w) if w else '1'})"


def _positive(vec) -> bool:
    for v in vec:
        if v:
            return v.sign() > 0
    raise ValueError("zero vector has no sign")


def normalize_root(vec) -> tuple:
    """Return the positive one of +-vec."""
    return tuple(vec) if _positive(vec) else tuple(-v for v in vec)


class Reflection:
    """A reflection of W identified by its positive root."""

    __slots__ = ("group", "root", "_elem")

    def __init__(self, group, root):
        self.group = group
        self.root = normalize_root(root)
        self._elem = None

    @property
    def elem(self) -> Elem:
        if self._elem is None:
            self._elem = self.group.reflection_elem(self.root)
        return self._elem

    def __eq__(self, other):
        if not isinstance(other, Reflection):
            return NotImplemented
        return self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f"Reflection({' '.join(self.elem.labels())})"


class CoxeterGroup:
    """The standard geometric representation of a Coxeter matrix.

    Simple roots form a basis, ``<a_s, a_t> = -cos(pi/m)`` with value -1 for
    infinite bonds, and ``s(v) = v - 2<v, a_s> a_s``.
    """

    def __init__(self, M: CoxMatrix):
        self.M = M
        n = self.n = M.rank
        F = self.field = field_for(M.entries[i][j] for i in range(n) for j in range(i + 1, n))
        self.gram = tuple(
            tuple(F.one() if i == j else -F.cos_pi_over(M.entries[i][j]) for j in range(n)) for i in range(n)
        )
        self._nbrs = []
        for s in range(n):
            row = []
            for j in range(n):
                if j != s and self.gram[s][j]:
                    row.append((j, self.gram[s][j] * -2))
            self._nbrs.append(tuple(row))
        one, zero = F.one(), F.zero()
        self._id_mat = tuple(one if r == c else zero for r in range(n) for c in range(n))
        self._identity = Elem(self, self._id_mat, self._id_mat, ())
        self._gens = []
        for s in range(n):
            m = self._lmul(s, self._id_mat)
            self._gens.append(Elem(self, m, m, (s,)))
        self.simple_roots = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))

    def __repr__(self):
        return f"CoxeterGroup({' '.join(self.M.labels)})"

    # raw matrix operations -------------------------------------------

    def _rmul(self, mat, s):
        """mat * s: column s is negated, neighbouring columns pick up multiples of it."""
        n = self.n
        new = list(mat)
        nb = self._nbrs[s]
        for r in range(0, n * n, n):
            v = mat[r + s]
            if v:
                new[r + s] = -v
                for j, k in nb:
                    new[r + j] = new[r + j] + k * v
        return tuple(new)

    def _lmul(self, s, mat):
        """s * mat: only row s changes."""
        n = self.n
        new = list(mat)
        base = s * n
        nb = self._nbrs[s]
        for c in range(n):
            acc = -mat[base + c]
            for j, k in nb:
                v = mat[j * n + c]
                if v:
                    acc = acc + k * v
            new[base + c] = acc
        return tuple(new)

    def _col_negative(self, mat, s) -> bool:
        n = self.n
        fallback = None
        for r in range(s, n * n, n):
            v = mat[r]
            if v:
                if v.is_rational():
                    return v.num[0] < 0
                if fallback is None:
                    fallback = v
        return fallback.sign() < 0

    def _strip_left(self, mat, inv) -> tuple:
        word = []
        n = self.n
        while True:
            for s in range(n):
                if self._col_negative(inv, s):
                    break
            else:
                return tuple(word)
            word.append(s)
            mat = self._lmul(s, mat)
            inv = self._rmul(inv, s)

    # elements --------------------------------------------------------

    def identity(self) -> Elem:
        return self._identity

    def gen(self, s) -> Elem:
        return self._gens[self.M.index(s)]

    def gens(self):
        return list(self._gens)

    def indices(self, subset) -> tuple:
        return tuple(sorted(self.M.index(s) for s in subset))

    def element(self, word) -> Elem:
        """normal_form: the element of a word over indices or labels."""
        if isinstance(word, str):
            word = word.split()
        mat = inv = self._id_mat
        for x in word:
            s = self.M.index(x)
            mat = self._rmul(mat, s)
            inv = self._lmul(s, inv)
        return Elem(self, mat, inv)

    normal_form = element

    def is_finite(self, subset=None) -> bool:
        idx = range(self.n) if subset is None else self.indices(subset)
        G = [[self.gram[i][j] for j in idx] for i in idx]
        return is_positive_definite(G)

    def enumerate_ball(self, radius, subset=None, limit=None) -> list:
        """All elements of length <= radius (of W_subset), sorted ShortLex.

        A candidate s*w is kept only when s is its least left descent, so every
        element arises exactly once and its canonical word is s followed by
        the canonical word of w.
        """
        K = tuple(range(self.n)) if subset is None else self.indices(subset)
        level = [self._identity]
        out = [self._identity]
        k = 0
        while level and k < radius:
            nxt = []
            for w in level:
                for s in K:
                    if self._col_negative(w.inv, s):
                        continue
                    inv = self._rmul(w.inv, s)
                    if any(self._col_negative(inv, r) for r in K if r < s):
                        continue
                    nxt.append(Elem(self, self._lmul(s, w.mat), inv, (s,) + w.word))
            nxt.sort(key=lambda e: e.word)
            out.extend(nxt)
            if limit is not None and len(out) > limit:
                raise BoundExceeded(f"more than {limit} elements")
            level = nxt
            k += 1
        return out

    def enumerate_group(self, subset=None) -> list:
        if not self.is_finite(subset):
            raise GroupNotFinite("Gram matrix is not positive definite")
        return self.enumerate_ball(INF, subset)

    def longest_element(self, subset=None) -> Elem:
        return self.enumerate_group(subset)[-1]

    # roots and reflections -------------------------------------------

    def inner(self, u, v):
        acc = self.field.zero()
        for i in range(self.n):
            if u[i]:
                for j in range(self.n):
                    if v[j] and self.gram[i][j]:
                        acc = acc + u[i] * self.gram[i][j] * v[j]
        return acc

    def apply_gen(self, s, vec) -> tuple:
        """s(v); only coordinate s changes."""
        acc = -vec[s]
        for j, k in self._nbrs[s]:
            if vec[j]:
                acc = acc + k * vec[j]
        out = list(vec)
        out[s] = acc
        return tuple(out)

    def is_positive(self, vec) -> bool:
        return _positive(vec)

    def reflection_elem(self, root) -> Elem:
        n = self.n
        F = self.field
        Bg = [self.inner(self.simple_roots[j], root) for j in range(n)]
        mat = []
        for r in range(n):
            for c in range(n):
                v = (F.one() if r == c else F.zero()) - Bg[c] * root[r] * 2
                mat.append(v)
        mat = tuple(mat)
        return Elem(self, mat, mat)

    def reflection(self, root) -> Reflection:
        return Reflection(self, root)

    def conj_reflection(self, w: Elem, t: Reflection) -> Reflection:
        """w t w^-1."""
        return Reflection(self, w.apply(t.root))

    def n_roots(self, w: Elem) -> list:
        """Positive roots of N(w) in the order of the canonical word (left to right)."""
        word = w.word
        k = len(word)
        roots = [None] * k
        P = self._id_mat
        for i in range(k - 1, -1, -1):
            s = word[i]
            roots[i] = tuple(P[r * self.n + s] for r in range(self.n))
            P = self._rmul(P, s)
        return roots

    def N_set(self, w: Elem) -> frozenset:
        """N(w) = {t in T : l(wt) < l(w)} as reflections."""
        return frozenset(Reflection(self, r) for r in self.n_roots(w))

    def root_of_reflection(self, w: Elem):
        """Positive root of w if w is a reflection, else None."""
        if w.length % 2 == 0:
            return None
        for r in self.n_roots(w):
            if self.reflection_elem(r) == w:
                return normalize_root(r)
        return None

    def reflection_order(self, alpha, beta):
        """Order of s_alpha s_beta read off the inner product of the roots."""
        alpha, beta = normalize_root(alpha), normalize_root(beta)
        if alpha == beta:
            return 1
        ip = self.inner(alpha, beta)
        if (ip - 1).sign() >= 0 or (ip + 1).sign() <= 0:
            return INF
        F = self.field
        # ip = cos(j pi / N) means rotation by 2 j pi / N
        for j in range(1, F.N):
            if F.cos_k(j) == ip:
                return F.N // math.gcd(j, F.N)
        return None

    def order_of_product(self, a: Elem, b: Elem, bound: int = 200, root_a=None, root_b=None):
        """Order of ab; INF when known infinite, None when the bound is exceeded."""
        if root_a is None:
            root_a = self.root_of_reflection(a)
        if root_a is not None and root_b is None:
            root_b = self.root_of_reflection(b)
        if root_a is not None and root_b is not None:
            m = self.reflection_order(root_a, root_b)
            if m is not None:
                return m
        return power_order(a * b, bound)

    # cosets -----------------------------------------------------------

    def min_coset_rep(self, w: Elem, K, side="right") -> Elem:
        """Minimal element of w W_K (side='right') or W_K w (side='left')."""
        K = self.indices(K)
        while True:
            for s in K:
                if side == "right" and w.has_right_descent(s):
                    w = w * self._gens[s]
                    break
                if side == "left" and w.has_left_descent(s):
                    w = self._gens[s] * w
                    break
            else:
                return w

    def min_double_coset_rep(self, w: Elem, B, C) -> Elem:
        """Minimal element of W_B w W_C."""
        B, C = self.indices(B), self.indices(C)
        while True:
            moved = False
            for s in B:
                if w.has_left_descent(s):
                    w = self._gens[s] * w
                    moved = True
            for s in C:
                if w.has_right_descent(s):
                    w = w * self._gens[s]
                    moved = True
            if not moved:
                return w

    def in_coset_reps(self, w: Elem, K) -> bool:
        """w has no right descent in K."""
        return not any(w.has_right_descent(s) for s in self.indices(K))

    def deodhar(self, w: Elem, s, C):
        """For w with no right descent in C and s*w not so: the r in C with s w = w r."""
        C = self.indices(C)
        s = self.M.index(s)
        if not self.in_coset_reps(w, C):
            raise PreconditionError("w has a right descent in C")
        sw = self._gens[s] * w
        if self.in_coset_reps(sw, C):
            raise PreconditionError("s*w has no right descent in C")
        if not sw.length > w.length:
            raise PreconditionError("l(sw) <= l(w)")
        for r in C:
            if w * self._gens[r] == sw:
                return r
        raise PreconditionError("no r in C with sw = wr")


def power_order(p: Elem, bound: int = 200):
    """Smallest k <= bound with p^k = 1, else None."""
    q = p
    for k in range(1, bound + 1):
        if q.is_identity():
            return k
        q = q * p
    return None
