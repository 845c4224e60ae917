from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from semicox.catalog import builtin, recognize, table_rows
from semicox.coxeter import INF, CoxMatrix, CoxeterGroup
from semicox.decomp import Decomposition
from semicox.errors import BoundExceeded
from semicox.external import (
    ExtData,
    _Context,
    check_external,
    construct_from_roots,
    export_decomposition,
    in_cos_prime,
    roots_from_decomposition,
)
from semicox.scalar import CycField

TILDE = {
    "A1": CoxMatrix.from_bonds("a", {}),
    "A1xA1": CoxMatrix.from_bonds("ab", {}),
    "A1^3": CoxMatrix.from_bonds("abc", {}),
    "A1^4": CoxMatrix.from_bonds("abcd", {}),
    "A2": CoxMatrix.from_bonds("ab", {("a", "b"): 3}),
    "B2": CoxMatrix.from_bonds("ab", {("a", "b"): 4}),
    "A3": CoxMatrix.from_bonds("abc", {("a", "b"): 3, ("b", "c"): 3}),
    "A2xA1": CoxMatrix.from_bonds("abc", {("a", "b"): 3}),
    "I2(6)": CoxMatrix.from_bonds("ab", {("a", "b"): 6}),
}
PRIME = {
    "A1": CoxMatrix.from_bonds("u", {}),
    "A1xA1": CoxMatrix.from_bonds("uv", {}),
    "A2": CoxMatrix.from_bonds("uv", {("u", "v"): 3}),
    "B2": CoxMatrix.from_bonds("uv", {("u", "v"): 4}),
}


def automorphisms(M):
    n = M.rank
    return [p for p in permutations(range(n)) if all(M.entries[p[i]][p[j]] == M.entries[i][j] for i in range(n) for j in range(n))]


def orbits(d):
    k = d.tilde.rank
    seen, out = set(), []
    for i in range(k):
        if i in seen:
            continue
        orb, frontier = {i}, [i]
        while frontier:
            x = frontier.pop()
            for s in d.prime.labels:
                y = d.perm(s)[x]
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        seen |= orb
        out.append(sorted(orb))
    return out


def semidirect_oracle(d):
    """Coxeter matrix of pair orders in the product group, if (I + J) is a Coxeter system there.

    Builds the product group by brute force, reads off the orders of products
    of the proposed generators and compares the order of the Coxeter group
    of that matrix with the order of the product.
    """
    ctx = _Context(d)
    gens = [ctx.pair((), (s,)) for s in range(d.prime.rank)] + [ctx.pair((d.tilde.index(x),), ()) for x in d.J]
    one = ctx.pair()
    group = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = w * g
                if v not in group:
                    group.add(v)
                    nxt.append(v)
        frontier = nxt
    total = len(ctx.Gt.enumerate_group()) * len(ctx.Gp.enumerate_group())
    if len(group) != total:
        return None
    labels = d.prime.labels + tuple(d.J)
    rows = [[1] * len(gens) for _ in gens]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            rows[i][j] = rows[j][i] = (gens[i] * gens[j]).order(100)
    U = CoxMatrix(labels, tuple(tuple(r) for r in rows))
    try:
        size = len(CoxeterGroup(U).enumerate_ball(INF, limit=total))
    except BoundExceeded:
        return None
    return U if size == total else None


@st.composite
def ext_data(draw):
    tilde = TILDE[draw(st.sampled_from(sorted(TILDE)))]
    prime = PRIME[draw(st.sampled_from(sorted(PRIME)))]
    auts = automorphisms(tilde)
    theta = {s: draw(st.sampled_from(auts)) for s in prime.labels}
    d = ExtData(prime, tilde, theta, ())
    J = tuple(tilde.labels[draw(st.sampled_from(orb))] for orb in orbits(d))
    return ExtData(prime, tilde, theta, J)


@given(ext_data())
def test_verdict_matches_brute_force_product(d):
    res = check_external(d)
    if any(v.condition == "theta" for v in res.violations):
        return  # not an action of W'
    U = semidirect_oracle(d)
    if U is None:
        assert res.status == "rejected", res.summary()
    else:
        assert res.status == "accepted", res.summary()
        assert res.matrix == U


def test_trivial_action_gives_a_direct_product():
    tilde = TILDE["A3"]
    prime = PRIME["A2"]
    d = ExtData(prime, tilde, {s: (0, 1, 2) for s in prime.labels}, tilde.labels)
    res = check_external(d)
    assert res.ok
    M = res.matrix
    for s in prime.labels:
        for r in tilde.labels:
            assert M.m(s, r) == 2
    assert recognize(M) == "A2 x A3"


def test_b3_round_trip():
    D = Decomposition(builtin("B3"), ["t"])
    d = export_decomposition(D)
    res = check_external(d)
    assert res.ok
    assert res.matrix == builtin("B3").restrict(res.matrix.labels)


def test_triality_gives_f4():
    D4 = builtin("D4")  # s2 is the branch node
    prime = PRIME["A2"]
    theta = {"u": (2, 1, 0, 3), "v": (0, 1, 3, 2)}
    res = check_external(ExtData(prime, D4, theta, ("s2", "s1")))
    assert res.ok
    assert recognize(res.matrix) == "F4"
    assert res.matrix.m("u", "s1") == 4
    short = check_external(ExtData(prime, D4, theta, ("s1",)))
    assert short.status == "rejected"
    assert any("misses J" in v.detail for v in short.violations)


@pytest.mark.parametrize("row", [r for r in table_rows() if not r.affine], ids=lambda r: r.name)
def test_round_trip_on_finite_rows(row):
    M = builtin(row.ambient)
    d = export_decomposition(Decomposition(M, row.I))
    res = check_external(d)
    assert res.ok, res.summary()
    assert res.matrix == M.restrict(res.matrix.labels)
    for s in row.I:
        for r in d.J:
            assert res.matrix.m(s, r) == INF or res.matrix.m(s, r) % 2 == 0


def test_condition_one_violation():
    # W' = A2 with both generators swapping b and c in A1^3: W' does not act
    # faithfully on the orbit and J = {a, b} fails condition (1)
    tilde = TILDE["A1^3"]
    d = ExtData(PRIME["A2"], tilde, {"u": (0, 2, 1), "v": (0, 2, 1)}, ("a", "b"))
    res = check_external(d)
    assert res.status == "rejected"
    assert {v.condition for v in res.violations} == {"(1)"}
    assert semidirect_oracle(d) is None


def test_condition_two_violation():
    # u swaps a <-> d and b <-> c; with J = {a, b} the commuting pair (a, c)
    # is produced neither inside J nor through a generator moving a
    d = ExtData(PRIME["A1"], TILDE["A1^4"], {"u": (3, 2, 1, 0)}, ("a", "b"))
    res = check_external(d)
    assert res.status == "rejected"
    assert [(v.condition, v.witness) for v in res.violations] == [("(2)", ("a", "c")), ("(2)", ("b", "d"))]
    assert semidirect_oracle(d) is None


def test_condition_one_violation_commuting_swaps():
    tilde = TILDE["A3"]
    d = ExtData(PRIME["A1xA1"], tilde, {"u": (2, 1, 0), "v": (2, 1, 0)}, ("a", "b"))
    res = check_external(d)
    assert res.status == "rejected"
    assert any(v.condition == "(1)" for v in res.violations)
    assert semidirect_oracle(d) is None


def test_small_known_products():
    res = check_external(ExtData(PRIME["A1"], TILDE["A3"], {"u": (2, 1, 0)}, ("a", "b")))
    assert res.ok and recognize(res.matrix) == "B3"
    res = check_external(ExtData(PRIME["A1"], TILDE["A2"], {"u": (1, 0)}, ("a",)))
    assert res.ok and recognize(res.matrix) == "G2"


def test_precheck_rejections():
    tilde = TILDE["A3"]
    bad_perm = check_external(ExtData(PRIME["A1"], tilde, {"u": (1, 0, 2)}, ("a", "b", "c")))
    assert bad_perm.violations[0].condition == "theta"
    clash = ExtData(CoxMatrix.from_bonds("a", {}), TILDE["A1"], {"a": (0,)}, ("a",))
    assert check_external(clash).violations[0].condition == "input"
    twice = check_external(ExtData(PRIME["A1"], tilde, {"u": (2, 1, 0)}, ("a", "c", "b")))
    assert any("one orbit" in v.detail for v in twice.violations)


def test_infinite_prime_group_is_inconclusive():
    prime = CoxMatrix.from_bonds("uv", {("u", "v"): INF})
    d = ExtData(prime, TILDE["A1"], {"u": (0,), "v": (0,)}, ("a",))
    res = check_external(d, bound=4)
    assert res.status == "inconclusive"
    assert res.matrix is not None


def test_ext_data_text_round_trip():
    D = Decomposition(builtin("F4"), ["s1", "s2"])
    d = export_decomposition(D)
    back = ExtData.from_text(d.to_text())
    assert back.prime == d.prime and back.tilde == d.tilde and back.J == d.J
    assert all(back.perm(s) == d.perm(s) for s in d.prime.labels)
    with pytest.raises(ValueError):
        ExtData.from_text("[prime]\nlabels: u\n1\n")


def test_cos_prime_membership():
    F = CycField(12)
    assert in_cos_prime(F.one())
    assert in_cos_prime(F.zero())  # cos(pi/2)
    assert in_cos_prime(F.cos_pi_over(4))
    assert in_cos_prime(F.cos_pi_over(6))
    assert not in_cos_prime(F.cos_pi_over(3))
    assert not in_cos_prime(F.rational(Fraction(1, 3)))


# -- root data ------------------------------------------------------------------------


def test_empty_delta_returns_pi_tilde():
    G = CoxeterGroup(builtin("A2"))
    res = construct_from_roots(G.gram, [], G.simple_roots)
    assert res.ok and res.Pi == list(G.simple_roots)


@pytest.mark.parametrize("label,I", [("I2(4)", ["s"]), ("B2", ["t"]), ("F4", ["s1", "s2"]), ("B3", ["t"]), ("I2(6)", ["s"])])
def test_root_round_trip(label, I):
    D = Decomposition(builtin(label), I)
    gram, Delta, Pi_tilde = roots_from_decomposition(D)
    res = construct_from_roots(gram, Delta, Pi_tilde)
    assert res.ok, res.violations
    assert set(res.Pi) == set(D.G.simple_roots)
    # Pi \ Delta lies in -C and generates Pi~ under W'
    assert set(res.new) == {D.G.simple_roots[t] for t in D.J}


def test_positively_dependent_input_is_rejected():
    Q = CycField(2)
    gram = [[Q.rational(x) for x in r] for r in ((1, -1, 0), (-1, 1, 0), (0, 0, 1))]
    e = lambda *v: tuple(Q.rational(x) for x in v)
    res = construct_from_roots(gram, [e(1, 0, 0), e(0, 1, 0)], [e(-1, -1, 1), e(-1, -1, -1)])
    assert res.status == "rejected"
    assert res.violations[0].condition == "(ii)"


def test_unstable_input_is_rejected():
    G = CoxeterGroup(builtin("B2"))
    res = construct_from_roots(G.gram, [G.simple_roots[0]], [G.simple_roots[1]])
    assert res.status == "rejected" and res.violations[0].condition == "stability"


def test_budget_exhaustion_is_inconclusive():
    D = Decomposition(builtin("B2"), ["t"])
    gram, Delta, Pi_tilde = roots_from_decomposition(D)
    res = construct_from_roots(gram, Delta, Pi_tilde, budget=0)
    assert res.status == "inconclusive"
