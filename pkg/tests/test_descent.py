from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
import sympy

from semicox.catalog import builtin
from semicox.decomp import Decomposition
from semicox.descent import DescentMap, subsets
from semicox.errors import ConsistencyError, GroupNotFinite


def dmap(label, I):
    return DescentMap(Decomposition(builtin(label), I))


class BruteAlgebra:
    """Group algebra of a finite Coxeter group as dicts {Elem: coefficient}."""

    def __init__(self, G):
        self.G = G
        self.els = G.enumerate_group()
        self.S = tuple(range(G.n))

    def x(self, K):
        return {w: 1 for w in self.els if not any(w.has_right_descent(s) for s in K)}

    def mul(self, a, b):
        out = Counter()
        for u, c in a.items():
            for v, d in b.items():
                out[u * v] += c * d
        return {w: c for w, c in out.items() if c}

    def express(self, v):
        basis = list(subsets(self.S))
        A = sympy.Matrix([[self.x(K).get(w, 0) for K in basis] for w in self.els])
        b = sympy.Matrix([v.get(w, 0) for w in self.els])
        sol, params = A.gauss_jordan_solve(b)
        assert params.shape[0] == 0
        return {K: Fraction(int(c.p), int(c.q)) for K, c in zip(basis, sol) if c != 0}

    def character(self, K):
        WK = self.G.enumerate_group(K)
        cosets = {frozenset(w * k for k in WK) for w in self.els}
        return {w: sum(1 for C in cosets if frozenset(w * c for c in C) == C) for w in self.els}


def as_dict(T, v):
    return {T.elements[i]: int(c) for i, c in enumerate(v) if c}


def test_basis_examples():
    R = dmap("B2", ["t"])
    T = R.T
    assert as_dict(T, R.x(["t", "s1"])) == {T.elements[0]: 1}
    assert int(R.x([]).sum()) == 8
    assert int(R.x(["t"]).sum()) == 4


@pytest.mark.parametrize("label", ["B2", "A3", "I2(5)"])
def test_sigma_products_agree_with_brute_force(label):
    R = dmap(label, [] if label != "B2" else ["t"])
    W = R.W
    B = BruteAlgebra(R.D.G)
    for K1 in subsets(range(R.D.G.n)):
        for K2 in subsets(range(R.D.G.n)):
            assert W.sigma_product(K1, K2) == B.express(B.mul(B.x(K1), B.x(K2)))


def test_sigma_product_examples():
    R = dmap("B3", ["t"])
    W = R.W
    S = frozenset(range(3))
    for K in subsets(S):
        assert W.sigma_product(S, K) == {K: 1}
        assert W.sigma_product(frozenset(), K) == {frozenset(): int(W.x(K).sum())}
    for K1 in subsets(S):
        for K2 in subsets(S):
            assert all(c.denominator == 1 for c in W.sigma_product(K1, K2).values())


def test_express_rejects_elements_outside_the_algebra():
    R = dmap("B2", ["t"])
    v = np.zeros(R.T.order, dtype=np.int64)
    v[1] = 1
    with pytest.raises(ConsistencyError):
        R.W.express(v)


def test_restilde_examples():
    R = dmap("B2", ["t"])
    k = len(R.D.tilde_J)
    assert R.restilde(["t", "s1"]) == {frozenset(range(k)): 1}
    assert R.restilde(["t"]) == {frozenset(): 1}
    assert np.array_equal(R.vector(R.restilde(["t"])), (R.D._phi_indices(R.T) == 0).astype(np.int64))
    R = dmap("B3", ["t"])
    img = R.restilde(["t", "s1"])
    labels = {frozenset(R.D.tilde_J[i].label for i in L): c for L, c in img.items()}
    assert labels == {frozenset({"s1", "t.s1.t"}): 1}
    img = R.restilde(["s1", "s2"])
    labels = {frozenset(R.D.tilde_J[i].label for i in L): c for L, c in img.items()}
    assert labels == {frozenset({"s1", "s2"}): 1, frozenset({"t.s1.t", "s2"}): 1}


def test_restilde_equals_brute_force_definition():
    # sum over d in W_I without right descent in I cap K of x~ for J~ cap d W_K d^-1
    R = dmap("B3", ["t"])
    D, T = R.D, R.T
    G = D.G
    for K in subsets(range(G.n)):
        WK = set(G.enumerate_group(K))
        expect = Counter()
        for d in G.enumerate_group(D.I):
            if any(d.has_right_descent(s) for s in K if s in D.I):
                continue
            L = frozenset(i for i, tg in enumerate(D.tilde_J) if d.inverse() * tg.elem * d in WK)
            expect[L] += 1
        assert R.restilde(K) == {L: Fraction(c) for L, c in expect.items()}


def test_tilde_basis_is_independent_of_the_length_used():
    R = dmap("B3", ["t"])
    for L in subsets(range(len(R.D.tilde_J))):
        assert np.array_equal(R.x_tilde(L), R.x_tilde_by_ambient_length(L))


@pytest.mark.parametrize("label,pairs", [("B2", 16), ("B3", 64)])
def test_morphism(label, pairs):
    assert dmap(label, ["t"]).verify_morphism() == pairs


def test_image_is_fixed_part():
    assert dmap("B3", ["t"]).image_fixed_check() == (6, 6)
    R = dmap("B3", [])
    assert R.image_fixed_check() == (8, 8)
    R = dmap("B3", ["t", "s1", "s2"])
    assert R.k == 0 and R.image_fixed_check() == (1, 1)


def test_restilde_is_fixed_by_the_action():
    R = dmap("B4", ["t"])
    for K in subsets(range(4)):
        assert R.is_fixed(R.restilde(K))


def test_character_examples():
    R = dmap("B2", ["t"])
    reg = R.theta([])
    assert reg[0] == 8 and not reg[1:].any()
    assert (R.theta(["t", "s1"]) == 1).all()
    assert R.verify_diagram() == 4


@pytest.mark.parametrize("label", ["B2", "B3"])
def test_characters_agree_with_fixed_cosets(label):
    R = dmap(label, ["t"])
    B = BruteAlgebra(R.D.G)
    for K in subsets(range(R.D.G.n)):
        assert as_dict(R.T, R.W.character(K)) == {w: c for w, c in B.character(K).items() if c}


def test_character_map_is_multiplicative():
    R = dmap("B3", ["t"])
    W = R.W
    for K1 in subsets(range(3)):
        for K2 in subsets(range(3)):
            prod = W.character_of(W.sigma_product(K1, K2))
            assert np.array_equal(prod, W.character(K1).astype(object) * W.character(K2))


def test_infinite_group_is_refused():
    with pytest.raises(GroupNotFinite):
        DescentMap(Decomposition(builtin("~C2"), ["t"]))


def test_overflow_falls_back_to_exact_integers():
    R = dmap("B2", ["t"])
    big = R.W.x([]) * (2**40)
    prod = R.W.multiply(big, big)
    assert prod.dtype == object and prod[0] == 8 * 2**80
