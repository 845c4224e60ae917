"""Index tables for finite Coxeter groups.

Elements are numbered in ShortLex order of their canonical words, so index
0 is the identity.  The multiplication table is built column by column:
column ``b`` is obtained from the column of ``b`` with its last letter
removed by one lookup in the right-generator table.
"""
from __future__ import annotations

import numpy as np

from .coxeter import CoxeterGroup, Elem


class FiniteGroupTable:
    def __init__(self, G: CoxeterGroup, subset=None):
        self.G = G
        self.elements: list[Elem] = G.enumerate_group(subset)
        self.order = len(self.elements)
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.words = [w.word for w in self.elements]
        self.length = np.array([len(w) for w in self.words], dtype=np.int64)
        n = G.n
        gens = G.gens()
        # right[s, i] = index of w_i * s (-1 if outside the enumerated subgroup)
        self.right = np.full((n, self.order), -1, dtype=np.int64)
        for s in range(n):
            g = gens[s]
            for i, w in enumerate(self.elements):
                j = self.index.get(w * g)
                if j is not None:
                    self.right[s, i] = j
        self.support = np.array([sum(1 << s for s in set(wd)) for wd in self.words], dtype=np.int64)
        rdes = np.zeros(self.order, dtype=np.int64)
        for s in range(n):
            ok = self.right[s] >= 0
            desc = ok & (self.length[np.where(ok, self.right[s], 0)] < self.length)
            rdes |= np.where(desc, 1 << s, 0)
        self.right_descents = rdes
        self._mult = None
        self._inv = None

    @property
    def mult(self) -> np.ndarray:
        """mult[a, b] = index of w_a w_b."""
        if self._mult is None:
            N = self.order
            M = np.empty((N, N), dtype=np.int32 if N < 2**31 else np.int64)
            M[:, 0] = np.arange(N)
            pos = {wd: i for i, wd in enumerate(self.words)}
            for b in range(1, N):
                wd = self.words[b]
                M[:, b] = self.right[wd[-1]][M[:, pos[wd[:-1]]]]
            self._mult = M
        return self._mult

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            r, c = np.nonzero(self.mult == 0)
            inv = np.empty(self.order, dtype=np.int64)
            inv[r] = c
            self._inv = inv
        return self._inv

    def mask(self, subset) -> int:
        return sum(1 << s for s in self.G.indices(subset))

    def in_parabolic(self, subset) -> np.ndarray:
        """Boolean array: element lies in W_subset."""
        m = self.mask(subset)
        return (self.support & ~m) == 0

    def min_left_coset_reps(self, subset) -> np.ndarray:
        """Boolean array: no right descent in subset (minimal in w W_K)."""
        return (self.right_descents & self.mask(subset)) == 0

    def word_index(self, word) -> int:
        i = 0
        for s in word:
            i = int(self.right[self.G.M.index(s), i])
        return i

    def closure(self, gens) -> np.ndarray:
        """Boolean array of the subgroup generated by the given element indices."""
        N = self.order
        inside = np.zeros(N, dtype=bool)
        inside[0] = True
        frontier = np.array([0])
        gens = np.asarray(list(gens), dtype=np.int64)
        if gens.size == 0:
            return inside
        mult = self.mult
        while frontier.size:
            cand = mult[np.ix_(frontier, gens)].ravel()
            cand = np.unique(cand[~inside[cand]])
            inside[cand] = True
            frontier = cand
        return inside

    def conjugate(self, d: int, idx: np.ndarray) -> np.ndarray:
        """Indices of d w d^-1 for w in idx."""
        return self.mult[self.mult[d, idx], self.inv[d]]
