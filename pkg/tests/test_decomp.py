from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from semicox.catalog import builtin, recognize
from semicox.coxeter import INF, CoxeterGroup, odd_classes
from semicox.decomp import Decomposition, validate_partition
from semicox.errors import PartitionError, PreconditionError
from semicox.rootsys import chi


def decomp(label, I, **kw):
    return Decomposition(builtin(label), I, **kw)


def gen_index(D, word):
    e = D.G.element(word.split("."))
    return next(i for i, tg in enumerate(D.tilde_J) if tg.elem == e)


def closure(G, gens):
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


# -- partitions -------------------------------------------------------------


def test_partition_examples():
    for n in (2, 3, 4):
        validate_partition(builtin(f"B{n}"), ["t"])
    validate_partition(builtin("A3"), [])
    with pytest.raises(PartitionError) as exc:
        validate_partition(builtin("A3"), ["s1"])
    assert exc.value.path == ("s1", "s2")


@pytest.mark.parametrize("label", ["B3", "F4", "~C2", "~G2", "I2(6)", "A3", "~A2"])
def test_partition_valid_iff_union_of_odd_classes(label):
    M = builtin(label)
    classes = [set(c) for c in odd_classes(M)]
    for k in range(M.rank + 1):
        for I in combinations(range(M.rank), k):
            ok = all(c <= set(I) or not (c & set(I)) for c in classes)
            labels = [M.labels[i] for i in I]
            if ok:
                validate_partition(M, labels)
            else:
                with pytest.raises(PartitionError):
                    validate_partition(M, labels)


def test_infinite_parabolic_needs_a_bound():
    with pytest.raises(PreconditionError):
        decomp("~C2", ["t", "s1", "t'"])
    from semicox.coxeter import CoxMatrix

    M = CoxMatrix.from_bonds(("a", "b", "c"), {("a", "b"): INF})
    D = Decomposition(M, ["a", "b"], bound=3)
    assert [tg.label for tg in D.tilde_J] == ["c"] and D.partial
    D = Decomposition(builtin("I2(inf)"), ["s"])
    assert [tg.label for tg in D.tilde_J] == ["t", "s.t.s"]


# -- phi and factorization ------------------------------------------------------


def test_phi_examples():
    D = decomp("B2", ["s1"])
    G = D.G
    assert D.phi(G.element("s1")) == G.element("s1")
    assert D.phi(G.element("t")).is_identity()
    assert D.phi(G.element("t s1 t")) == G.element("s1")


def test_factorize_examples():
    D = decomp("B2", ["s1"])
    G = D.G
    assert D.factorize(G.element("s1")) == (G.identity(), G.element("s1"))
    assert D.factorize(G.element("t")) == (G.element("t"), G.identity())
    assert D.factorize(G.element("s1 t")) == (G.element("s1 t s1"), G.element("s1"))


@given(st.lists(st.integers(0, 2), max_size=16), st.lists(st.integers(0, 2), max_size=16))
def test_phi_is_a_homomorphism(u, v):
    D = decomp("~C2", ["t"])
    x, y = D.G.element(u), D.G.element(v)
    assert D.phi(x * y) == D.phi(x) * D.phi(y)
    assert D.phi(D.phi(x)) == D.phi(x)


def test_factorization_is_a_bijection_on_a_ball():
    D = decomp("~G2", ["s1", "s2"])
    ball = D.G.enumerate_ball(8)
    pairs = {D.factorize(w) for w in ball}
    assert len(pairs) == len(ball)
    for wt, a in pairs:
        assert D.in_tilde(wt) and set(a.word) <= set(D.I)


# -- the generators -------------------------------------------------------------


def test_dihedral_generators():
    for m in (2, 3, 4, 5, 6):
        D = decomp(f"I2({2 * m})", ["s"])
        assert [tg.label for tg in D.tilde_J] == ["t", "s.t.s"]
        assert D.tilde_matrix.entries[0][1] == m


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_b_generators(n):
    D = decomp(f"B{n}", ["t"])
    expected = {"s1", "t.s1.t"} | {f"s{i}" for i in range(2, n)}
    assert {tg.label for tg in D.tilde_J} == expected
    assert len(D.tilde_J) == n
    i, j = gen_index(D, "t.s1.t"), gen_index(D, "s1")
    assert D.nu(i) == D.G.M.index("s1")
    assert D.m_tilde(i, j) == 2
    if n > 2:
        k = gen_index(D, "s2")
        assert D.f_elem(i, k).is_identity()


def test_f4_generators():
    D = decomp("F4", ["s1", "s2"])
    assert {tg.label for tg in D.tilde_J} == {"t1", "t2", "s1.t1.s1", "s2.s1.t1.s1.s2"}
    i = gen_index(D, "s2.s1.t1.s1.s2")
    assert D.nu(i) == D.G.M.index("t1")
    assert D.palindromic_expr(i) == D.G.element("s2 s1 t1 s1 s2").word
    assert len(D.palindromic_expr(i)) == 5
    assert recognize(D.tilde_matrix) == "D4"
    D.verify_canonical(i)


@pytest.mark.parametrize(
    "label,I",
    [("B3", ["t"]), ("B4", ["s1", "s2", "s3"]), ("F4", ["s1", "s2"]), ("F4", ["t1", "t2"]), ("I2(6)", ["s"]), ("B3", ["s1", "s2"])],
)
def test_generators_are_the_canonical_generators_of_the_subgroup(label, I):
    D = decomp(label, I)
    G = D.G
    WI = G.enumerate_group(D.I)
    conj = {a * G.gen(t) * a.inverse() for a in WI for t in D.J}
    roots = [G.root_of_reflection(c) for c in conj]
    assert {r.elem for r in chi(G, roots)} == {tg.elem for tg in D.tilde_J}
    # W~ is the kernel of phi
    Wt = closure(G, [tg.elem for tg in D.tilde_J])
    assert Wt == {w for w in G.enumerate_group() if D.in_tilde(w)}
    assert len(Wt) * len(WI) == len(G.enumerate_group())


def test_f_examples():
    D = decomp("I2(4)", ["s"])
    i, j = gen_index(D, "s.t.s"), gen_index(D, "t")
    assert D.f_elem(i, j) == D.G.element("s")
    assert D.f_elem(i, i).is_identity()
    D = decomp("B4", ["t"])
    for i in range(len(D.tilde_J)):
        for j in range(len(D.tilde_J)):
            assert D.f_elem(i, j) == D.f_elem(j, i).inverse()
            assert (i == j) == (D.nu(i) == D.nu(j) and D.f_elem(i, j).is_identity())


def test_infinite_bond_between_t_and_its_partner():
    D = decomp("~C3", ["s1", "s2"])
    i, j = gen_index(D, "t"), gen_index(D, "s1.s2.t'.s2.s1")
    assert D.m_tilde(i, j) == INF
    assert D.tilde_matrix_via_roots().entries[i][j] == INF


@pytest.mark.parametrize(
    "label,I,types",
    [
        ("I2(4)", ["s"], "A1 x A1"),
        ("F4", ["s1", "s2"], "D4"),
        ("~G2", ["s1", "s2"], "~A2"),
        ("~G2", ["t"], "~A2"),
        ("B4", ["t"], "D4"),
        ("~C2", ["t"], "~C2"),
    ],
)
def test_tilde_matrix_types(label, I, types):
    D = decomp(label, I)
    assert D.triple_check() == D.tilde_matrix_via_roots()
    assert recognize(D.tilde_matrix) == types


def test_ell_j_examples():
    D = decomp("B3", ["t"])
    G = D.G
    assert D.ell_J(G.element("t")) == 0
    for i, tg in enumerate(D.tilde_J):
        assert D.ell_J(tg.elem) == 1 == D.tilde_length(tg.elem)
    w = G.element("s1 t s1 t")
    assert D.in_tilde(w)
    assert D.ell_J(w) == 2 == D.tilde_length(w)
    assert recognize(D.tilde_matrix) == "A3"


def test_tilde_length_is_the_word_metric_of_the_subgroup():
    for label, I in (("B3", ["t"]), ("F4", ["s1", "s2"]), ("I2(6)", ["s"])):
        D = decomp(label, I)
        gens = [tg.elem for tg in D.tilde_J]
        dist = {D.G.identity(): 0}
        frontier = [D.G.identity()]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    v = w * g
                    if v not in dist:
                        dist[v] = dist[w] + 1
                        nxt.append(v)
            frontier = nxt
        for w, d in dist.items():
            assert D.tilde_length(w) == d == D.ell_J(w)


def test_palindromes_in_dihedral_group():
    D = decomp("I2(6)", ["s"])
    i = gen_index(D, "s.t.s")
    assert D.palindromic_expr(i) == (0, 1, 0)
    assert D.palindromic_expr(gen_index(D, "t")) == (1,)


# -- action and components ---------------------------------------------------------


def labelled_cycles(D, s):
    return {frozenset(D.tilde_J[i].label for i in c) for c in D.action_cycles(s)}


def test_action_examples():
    D = decomp("B4", ["t"])
    assert labelled_cycles(D, "t") == {frozenset({"s1", "t.s1.t"})}
    D = decomp("B4", ["s1", "s2", "s3"])
    for i in (1, 2, 3):
        (cyc,) = D.action_cycles(f"s{i}")
        assert sorted(cyc) == [i - 1, i]
    D = decomp("~C3", ["s1", "s2", "t'"])
    (cyc,) = labelled_cycles(D, "t'")
    assert cyc == {"s2.s1.t.s1.s2", "t'.s2.s1.t.s1.s2.t'"}


@pytest.mark.parametrize("label,I", [("F4", ["s1", "s2"]), ("~C3", ["s1", "s2"]), ("~B3", ["t"]), ("B3", ["s1", "s2"])])
def test_action_is_conjugation_and_diagram_automorphism(label, I):
    D = decomp(label, I)
    D.check_symmetry()
    for s in D.I:
        g = D.G.gen(s)
        p = D.action_of(s)
        for i, tg in enumerate(D.tilde_J):
            assert g * tg.elem * g == D.tilde_J[p[i]].elem


def test_component_examples():
    D = decomp("B4", ["s1", "s2", "s3"])
    assert len(D.components()) == 4
    assert len(decomp("F4", ["s1", "s2"]).components()) == 1
    D = decomp("~C4", ["s1", "s2", "s3"])
    comps = D.components()
    assert len(comps) == 4
    assert all(recognize(D.tilde_matrix.restrict(c)) == "~A1" for c in comps)
    assert D.classify_components() == ["affine"] * 4


def test_reducible_ambient_group():
    from semicox.coxeter import CoxMatrix

    M = CoxMatrix.from_bonds(("a", "b", "c", "d"), {("a", "b"): 4, ("c", "d"): 6})
    D = Decomposition(M, ["a", "c"])
    assert len(D.tilde_J) == 4
    assert recognize(D.tilde_matrix) == "A1 x A1 x A2"


# -- canonical generators, conjugacy and parabolic subgroups ----------------------


def test_canonical_examples():
    D = decomp("I2(6)", ["s"])
    i = gen_index(D, "s.t.s")
    N = {r.elem for r in D.G.N_set(D.tilde_J[i].elem)}
    assert N == {D.G.element(w) for w in ("s", "s t s", "s t s t s")}
    assert {w for w in N if D.in_tilde(w)} == {D.tilde_J[i].elem}
    D.verify_canonical(gen_index(D, "t"))


def test_conjugate_generators_have_conjugate_types():
    D = decomp("~C2", ["t"])
    G = D.G
    classes = odd_classes(G.M)
    cls = {s: k for k, c in enumerate(classes) for s in c}
    ball = [w for w in G.enumerate_ball(6) if D.in_tilde(w)]
    for i, j in combinations(range(len(D.tilde_J)), 2):
        a, b = D.tilde_J[i].elem, D.tilde_J[j].elem
        if any(w * a * w.inverse() == b for w in ball):
            assert cls[D.nu(i)] == cls[D.nu(j)]


def test_k_plus_examples():
    D = decomp("B3", ["t"])
    assert D.k_plus(["t", "s1", "s2"]) == frozenset(range(len(D.tilde_J)))
    assert D.k_plus(["t"]) == frozenset()
    assert {D.tilde_J[i].label for i in D.k_plus(["t", "s1"])} == {"s1", "t.s1.t"}
    WK = D.G.enumerate_group(["t"])
    assert [w for w in WK if D.in_tilde(w)] == [D.G.identity()]


@pytest.mark.parametrize("label,I", [("B3", ["t"]), ("B3", ["s1", "s2"]), ("F4", ["s1", "s2"]), ("I2(6)", ["s"])])
def test_parabolic_statements_for_every_k(label, I):
    from semicox.descent import subsets
    from semicox.table import FiniteGroupTable

    D = decomp(label, I)
    T = FiniteGroupTable(D.G)
    for K in subsets(range(D.G.n)):
        D.verify_parabolic(K, T)


def test_parafine_witnesses():
    D = decomp("~C2", ["t"])
    K, d = D.verify_parafine([])
    assert K == () and d.is_identity()
    GT = D.tilde_group
    k = len(D.tilde_J)
    found = 0
    for size in (1, 2):
        for L in combinations(range(k), size):
            if not GT.is_finite(L):
                with pytest.raises(PreconditionError):
                    D.verify_parafine(L)
                continue
            K, d = D.verify_parafine(L)
            assert D.G.is_finite(K)
            found += 1
    assert found >= 4
