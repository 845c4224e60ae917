"""Built-in Coxeter types, diagram recognition and the golden decomposition table.

Type labels are ASCII: ``A3``, ``B4``, ``D5``, ``I2(6)``, ``H3``, ``F4``,
``E7`` for finite types and ``~A3``, ``~B4``, ``~C2``, ``~D4``, ``~G2``,
``~F4`` for affine ones.  Generator names follow a fixed convention per
family so that table rows can refer to them:

* ``B_n``:  t =4= s1 - s2 - ... - s_{n-1}
* ``F4``:   s2 - s1 =4= t1 - t2
* ``~B_n``: t =4= s1 - ... - s_{n-2}, with s_{n-2} joined to s_{n-1} and s_n
* ``~C_n``: t =4= s1 - ... - s_{n-1} =4= t'
* ``~G2``:  t =6= s1 - s2
* ``~F4``:  s2 - s1 =4= t1 - t2 - t3
* ``I2(m)``: s, t
"""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .coxeter import INF, CoxMatrix, CoxeterGroup, format_entry, parse_entry
from .linalg import classify_gram

__all__ = [
    "TableRow",
    "RowResult",
    "builtin",
    "canonical_type",
    "recognize",
    "table_rows",
    "verify_row",
    "row_from_text",
    "row_to_text",
]


# -- built-in types ---------------------------------------------------------


def _chain(labels, bonds=None):
    b = {(labels[i], labels[i + 1]): 3 for i in range(len(labels) - 1)}
    b.update(bonds or {})
    return CoxMatrix.from_bonds(labels, b)


def _s(a, b):
    return [f"s{i}" for i in range(a, b + 1)]


def _need(cond, label):
    if not cond:
        raise ValueError(f"bad rank for type {label}")


@lru_cache(maxsize=None)
def builtin(label: str) -> CoxMatrix:
    """Coxeter matrix of a built-in type; generator names are the matrix labels."""
    label = label.strip()
    m = re.fullmatch(r"I2\((\d+|inf)\)", label)
    if m:
        k = parse_entry(m.group(1))
        _need(k == INF or k >= 2, label)
        return CoxMatrix.from_bonds(("s", "t"), {("s", "t"): k})
    m = re.fullmatch(r"(~?)([A-HI])(\d+)", label)
    if not m:
        raise ValueError(f"unknown type {label!r}")
    aff, fam, n = m.group(1) == "~", m.group(2), int(m.group(3))
    if not aff:
        if fam == "A":
            _need(n >= 1, label)
            return _chain(_s(1, n))
        if fam == "B":
            _need(n >= 2, label)
            return _chain(["t"] + _s(1, n - 1), {("t", "s1"): 4})
        if fam == "D":
            _need(n >= 4, label)
            b = {(f"s{i}", f"s{i + 1}"): 3 for i in range(1, n - 1)}
            b[(f"s{n - 2}", f"s{n}")] = 3
            return CoxMatrix.from_bonds(_s(1, n), b)
        if fam == "H":
            _need(n in (3, 4), label)
            return _chain(_s(1, n), {("s1", "s2"): 5})
        if fam == "F":
            _need(n == 4, label)
            return _chain(["s2", "s1", "t1", "t2"], {("s1", "t1"): 4})
        if fam == "E":
            _need(n in (6, 7, 8), label)
            labels = _s(1, n)
            b = {("s1", "s3"): 3, ("s2", "s4"): 3}
            b.update({(f"s{i}", f"s{i + 1}"): 3 for i in range(3, n)})
            return CoxMatrix.from_bonds(labels, b)
        if fam == "G":
            _need(n == 2, label)
            return builtin("I2(6)")
        raise ValueError(f"unknown type {label!r}")
    if fam == "A":
        _need(n >= 1, label)
        if n == 1:
            return CoxMatrix.from_bonds(("s0", "s1"), {("s0", "s1"): INF})
        labels = _s(0, n)
        b = {(labels[i], labels[(i + 1) % (n + 1)]): 3 for i in range(n + 1)}
        return CoxMatrix.from_bonds(labels, b)
    if fam == "B":
        _need(n >= 3, label)
        labels = ["t"] + _s(1, n)
        b = {("t", "s1"): 4}
        b.update({(f"s{i}", f"s{i + 1}"): 3 for i in range(1, n - 2)})
        b.update({(f"s{n - 2}", f"s{n - 1}"): 3, (f"s{n - 2}", f"s{n}"): 3})
        return CoxMatrix.from_bonds(labels, b)
    if fam == "C":
        _need(n >= 2, label)
        return _chain(["t"] + _s(1, n - 1) + ["t'"], {("t", "s1"): 4, (f"s{n - 1}", "t'"): 4})
    if fam == "D":
        _need(n >= 4, label)
        labels = _s(0, n)
        b = {("s0", "s2"): 3, ("s1", "s2"): 3, (f"s{n - 2}", f"s{n}"): 3}
        b.update({(f"s{i}", f"s{i + 1}"): 3 for i in range(2, n - 1)})
        return CoxMatrix.from_bonds(labels, b)
    if fam == "G":
        _need(n == 2, label)
        return _chain(["t", "s1", "s2"], {("t", "s1"): 6})
    if fam == "F":
        _need(n == 4, label)
        return _chain(["s2", "s1", "t1", "t2", "t3"], {("s1", "t1"): 4})
    raise ValueError(f"unknown type {label!r}")


# -- recognition ------------------------------------------------------------


def _candidates(r):
    """Built-in labels of rank r in preference order (first match names the type)."""
    out = []
    if r == 1:
        return ["A1"]
    if r == 2:
        return ["A2", "B2", "G2", "~A1"] + [f"I2({m})" for m in (5, 7, 8, 9, 10, 11, 12)]
    out.append(f"A{r}")
    out.append(f"B{r}")
    if r >= 4:
        out.append(f"D{r}")
    if r in (6, 7, 8):
        out.append(f"E{r}")
    if r == 4:
        out += ["F4", "H4"]
    if r == 3:
        out += ["H3", "~A2", "~C2", "~G2"]
    n = r - 1
    if n >= 3:
        out += [f"~A{n}", f"~B{n}", f"~C{n}"]
    if n >= 4:
        out.append(f"~D{n}")
    if n == 4:
        out.append("~F4")
    return list(dict.fromkeys(out))


def _signature(M: CoxMatrix):
    n = M.rank
    return sorted(tuple(sorted(M.entries[i][j] for j in range(n) if j != i)) for i in range(n))


def isomorphism(A: CoxMatrix, B: CoxMatrix):
    """A bijection p with A[i][j] == B[p[i]][p[j]], or None (backtracking)."""
    n = A.rank
    if n != B.rank or _signature(A) != _signature(B):
        return None
    profile_a = [sorted(A.entries[i]) for i in range(n)]
    profile_b = [sorted(B.entries[i]) for i in range(n)]
    order = sorted(range(n), key=lambda i: -sum(1 for m in A.entries[i] if m != 2))
    p = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or profile_a[i] != profile_b[j]:
                continue
            if all(A.entries[i][order[q]] == B.entries[j][p[order[q]]] for q in range(k)):
                p[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
        p[i] = -1
        return False

    return tuple(p) if extend(0) else None


def _recognize_irreducible(M: CoxMatrix) -> str:
    if M.rank == 2:
        m = M.entries[0][1]
        names = {3: "A2", 4: "B2", 6: "G2", INF: "~A1"}
        if m in names:
            return names[m]
        return f"I2({format_entry(m)})"
    if M.rank <= 12:
        for lab in _candidates(M.rank):
            if isomorphism(M, builtin(lab)) is not None:
                return lab
    return "unrecognized:" + classify_gram(CoxeterGroup(M).gram)


def recognize(M: CoxMatrix) -> str:
    """Type of a Coxeter diagram; reducible diagrams give 'X x Y' by component."""
    if M.rank == 0:
        return "1"
    parts = []
    for comp in M.components():
        parts.append(_recognize_irreducible(M.restrict(comp)))
    return " x ".join(parts)


_ALIASES = {"D3": "A3", "B2": "B2", "C2": "B2", "~B2": "~C2", "~D3": "~A3", "I2(3)": "A2", "I2(4)": "B2",
            "I2(6)": "G2", "I2(inf)": "~A1", "D2": "A1 x A1", "~D2": "~A1 x ~A1"}


def canonical_type(label: str) -> str:
    """Normal form of a (possibly reducible) type label, components sorted."""
    parts = []
    for p in label.split(" x "):
        p = p.strip()
        if p in ("", "1"):
            continue
        m = re.fullmatch(r"C(\d+)", p)
        if m:
            p = f"B{m.group(1)}"
        p = _ALIASES.get(p, p)
        if p == "I2(2)":
            p = "A1 x A1"
        parts.extend(x.strip() for x in p.split(" x "))
    return " x ".join(sorted(parts)) or "1"


# -- golden table -------------------------------------------------------------


@dataclass
class TableRow:
    """One expected decomposition.

    Nodes are words joined by '.', read as group elements.  ``bonds`` lists
    the entries of M~ other than 2; ``actions`` gives, for each s in I, the
    cycles of the permutation t~ -> s t~ s.
    """

    ambient: str
    I: tuple
    structure: str
    nodes: tuple
    bonds: tuple
    actions: dict
    types: tuple
    WI_type: str
    note: str = "none"
    affine: bool = False
    extra: bool = False

    @property
    def name(self) -> str:
        return f"{self.ambient} I={{{','.join(self.I)}}}"

    def expected_matrix(self) -> CoxMatrix:
        return CoxMatrix.from_bonds(self.nodes, {(a, b): m for a, b, m in self.bonds})


def _w(*parts) -> str:
    return ".".join(p for part in parts for p in part.split(".") if p)


def _conj(s: str, node: str) -> str:
    return _w(s, node, s)


def _rev(word: str) -> str:
    return ".".join(word.split(".")[::-1])


def _dihedral_rows(m):
    rows = []
    k = m if m != INF else INF
    tname = {2: "A1 x A1", 3: "A2", 4: "B2", 6: "G2", INF: "~A1"}.get(k, f"I2({k})")
    amb = f"I2({format_entry(2 * m if m != INF else INF)})"
    for a, b in (("s", "t"), ("t", "s")):
        bonds = () if k == 2 else ((b, _w(a, b, a), k),)
        rows.append(
            TableRow(
                ambient=amb,
                I=(a,),
                structure=f"Z/2 x| W({tname})",
                nodes=(b, _w(a, b, a)),
                bonds=bonds,
                actions={a: ((b, _w(a, b, a)),)},
                types=tuple(tname.split(" x ")),
                WI_type="A1",
                affine=m == INF,
                extra=m == INF,
            )
        )
    return rows


def _b_rows(n):
    rows = []
    # I = {t}: the generator t s1 t copies the J-edges of s1
    s = _s(1, n - 1)
    ts1t = "t.s1.t"
    bonds = [(s[i], s[i + 1], 3) for i in range(len(s) - 1)]
    if n >= 3:
        bonds.append((ts1t, "s2", 3))
    wt = {2: "A1 x A1", 3: "A3"}.get(n, f"D{n}")
    rows.append(
        TableRow(f"B{n}", ("t",), f"Z/2 x| W({wt})", tuple([ts1t] + s), tuple(bonds), {"t": (("s1", ts1t),)},
                 tuple(wt.split(" x ")), "A1")
    )
    # I = {s1..s_{n-1}}: t_1 = t, t_{i+1} = s_i t_i s_i, all commuting
    t = ["t"]
    for i in range(1, n):
        t.append(_conj(f"s{i}", t[-1]))
    acts = {f"s{i}": ((t[i - 1], t[i]),) for i in range(1, n)}
    rows.append(
        TableRow(f"B{n}", tuple(s), f"S{n} x| (Z/2)^{n}", tuple(t), (), acts, ("A1",) * n, f"A{n - 1}")
    )
    return rows


def _f4_rows():
    a1 = "s1.t1.s1"
    a2 = "s2.s1.t1.s1.s2"
    b1 = "t1.s1.t1"
    b2 = "t2.t1.s1.t1.t2"
    return [
        TableRow("F4", ("s2", "s1"), "S3 x| W(D4)", ("t1", "t2", a1, a2),
                 (("t2", "t1", 3), ("t2", a1, 3), ("t2", a2, 3)),
                 {"s1": (("t1", a1),), "s2": ((a1, a2),)}, ("D4",), "A2"),
        TableRow("F4", ("t1", "t2"), "S3 x| W(D4)", ("s1", "s2", b1, b2),
                 (("s2", "s1", 3), ("s2", b1, 3), ("s2", b2, 3)),
                 {"t1": (("s1", b1),), "t2": ((b1, b2),)}, ("D4",), "A2", extra=True),
    ]


def _g2_affine_rows():
    return [
        TableRow("~G2", ("t",), "Z/2 x| W(~A2)", ("s1", "s2", "t.s1.t"),
                 (("s1", "s2", 3), ("s2", "t.s1.t", 3), ("s1", "t.s1.t", 3)),
                 {"t": (("s1", "t.s1.t"),)}, ("~A2",), "A1", affine=True),
        TableRow("~G2", ("s1", "s2"), "S3 x| W(~A2)", ("t", "s1.t.s1", "s2.s1.t.s1.s2"),
                 (("t", "s1.t.s1", 3), ("s1.t.s1", "s2.s1.t.s1.s2", 3), ("t", "s2.s1.t.s1.s2", 3)),
                 {"s1": (("t", "s1.t.s1"),), "s2": (("s1.t.s1", "s2.s1.t.s1.s2"),)}, ("~A2",), "A2", affine=True),
    ]


def _f4_affine_rows():
    a1 = "s1.t1.s1"
    a2 = "s2.s1.t1.s1.s2"
    b1 = "t1.s1.t1"
    b2 = "t2.t1.s1.t1.t2"
    b3 = "t3.t2.t1.s1.t1.t2.t3"
    return [
        TableRow("~F4", ("s2", "s1"), "S3 x| W(~D4)", ("t1", "t2", "t3", a1, a2),
                 (("t2", "t1", 3), ("t2", "t3", 3), ("t2", a1, 3), ("t2", a2, 3)),
                 {"s1": (("t1", a1),), "s2": ((a1, a2),)}, ("~D4",), "A2", affine=True),
        TableRow("~F4", ("t1", "t2", "t3"), "S4 x| W(~D4)", ("s1", "s2", b1, b2, b3),
                 (("s2", "s1", 3), ("s2", b1, 3), ("s2", b2, 3), ("s2", b3, 3)),
                 {"t1": (("s1", b1),), "t2": ((b1, b2),), "t3": ((b2, b3),)}, ("~D4",), "A3", affine=True),
    ]


def _b_affine_rows(n):
    rows = []
    s = _s(1, n)
    ts1t = "t.s1.t"
    bonds = [(f"s{i}", f"s{i + 1}", 3) for i in range(1, n - 2)]
    bonds += [(f"s{n - 2}", f"s{n - 1}", 3), (f"s{n - 2}", f"s{n}", 3)]
    # t s1 t copies the J-edges of s1
    bonds += [(ts1t, b if a == "s1" else a, 3) for a, b, _ in list(bonds) if "s1" in (a, b)]
    wt = "~A3" if n == 3 else f"~D{n}"
    rows.append(
        TableRow(f"~B{n}", ("t",), f"Z/2 x| W({wt})", tuple([ts1t] + s), tuple(bonds), {"t": (("s1", ts1t),)},
                 (wt,), "A1", note="(1)" if n == 3 else "none", affine=True)
    )
    # I = {s1..s_n}, J = {t}
    t = ["t"]
    for i in range(1, n):
        t.append(_conj(f"s{i}", t[-1]))
    tp = [None] * (n + 1)
    tp[n] = _conj(f"s{n}", t[n - 2])
    for i in range(n - 1, 0, -1):
        tp[i] = _conj(f"s{i}", tp[i + 1])
    T = [None] + t  # 1-based
    acts = {f"s{i}": ((T[i], T[i + 1]), (tp[i], tp[i + 1])) for i in range(1, n)}
    acts[f"s{n}"] = ((T[n - 1], tp[n]), (tp[n - 1], T[n]))
    nodes = tuple(T[1:] + tp[1:])
    bonds = tuple((T[i], tp[i], INF) for i in range(1, n + 1))
    wi = "A3" if n == 3 else f"D{n}"
    rows.append(
        TableRow(f"~B{n}", tuple(s), f"W({wi}) x| W(~A1)^{n}", nodes, bonds, acts, ("~A1",) * n, wi, affine=True)
    )
    return rows


def _c_affine_rows(n):
    rows = []
    s = _s(1, n - 1)
    ts1t = "t.s1.t"
    # I = {t}
    bonds = [(s[i], s[i + 1], 3) for i in range(len(s) - 1)] + [(s[-1], "t'", 4)]
    bonds += [(ts1t, b if a == "s1" else a, m) for a, b, m in list(bonds) if "s1" in (a, b)]
    wt = "~C2" if n == 2 else f"~B{n}"
    rows.append(
        TableRow(f"~C{n}", ("t",), f"Z/2 x| W({wt})", tuple([ts1t] + s + ["t'"]), tuple(bonds),
                 {"t": (("s1", ts1t),)}, (wt,), "A1", note="(2)" if n == 2 else "none", affine=True)
    )
    # t_1 = t, t_{i+1} = s_i t_i s_i
    T = [None, "t"]
    for i in range(1, n):
        T.append(_conj(f"s{i}", T[-1]))

    def primes(top):
        tp = [None] * (n + 1)
        tp[n] = top
        for i in range(n - 1, 0, -1):
            tp[i] = _conj(f"s{i}", tp[i + 1])
        return tp

    def row(I, tp, extra_act, wi, structure):
        acts = {f"s{i}": ((T[i], T[i + 1]), (tp[i], tp[i + 1])) for i in range(1, n)}
        acts.update(extra_act)
        return TableRow(f"~C{n}", I, structure, tuple(T[1:] + tp[1:]),
                        tuple((T[i], tp[i], INF) for i in range(1, n + 1)), acts, ("~A1",) * n, wi, affine=True)

    # I = {s1..s_{n-1}}, J = {t, t'}
    rows.append(row(tuple(s), primes("t'"), {}, f"A{n - 1}", f"S{n} x| W(~A1)^{n}"))
    # I = {s1..s_{n-1}, t'}, J = {t}
    tp = primes(_w("t'", T[n], "t'"))
    rows.append(row(tuple(s) + ("t'",), tp, {"t'": ((T[n], tp[n]),)}, f"B{n}", f"W(B{n}) x| W(~A1)^{n}"))
    # I = {t, t'}
    if n == 2:
        a, b, c = "t.s1.t", "t'.s1.t'", "t.t'.s1.t'.t"
        rows.append(
            TableRow("~C2", ("t", "t'"), "(S2 x S2) x| W(~A1 x ~A1)", ("s1", a, b, c),
                     (("s1", c, INF), (a, b, INF)),
                     {"t": (("s1", a), (b, c)), "t'": (("s1", b), (a, c))},
                     ("~A1", "~A1"), "A1 x A1", note="(3)", affine=True)
        )
        return rows
    last = f"s{n - 1}"
    tpl = _w("t'", last, "t'")
    bonds = [(s[i], s[i + 1], 3) for i in range(len(s) - 1)]
    bonds += [(ts1t, b if a == "s1" else a, 3) for a, b, _ in list(bonds) if "s1" in (a, b)]
    bonds += [(tpl, b if a == last else a, 3) for a, b, _ in list(bonds) if last in (a, b) and ts1t not in (a, b)]
    if n == 3:
        bonds.append((ts1t, tpl, 3))
    wt = "~A3" if n == 3 else f"~D{n}"
    rows.append(
        TableRow(f"~C{n}", ("t", "t'"), f"(S2 x S2) x| W({wt})", tuple([ts1t] + s + [tpl]), tuple(bonds),
                 {"t": (("s1", ts1t),), "t'": ((last, tpl),)}, (wt,), "A1 x A1",
                 note="(3)" if n == 3 else "none", affine=True)
    )
    return rows


def table_rows(max_n: int = 5, max_m: int = 6, extras: bool = True) -> list:
    """All golden rows at the given scale; ``extras`` adds mirror and I2(inf) rows."""
    rows = []
    for m in range(2, max_m + 1):
        rows += _dihedral_rows(m)
    rows += _dihedral_rows(INF)
    for n in range(2, max_n + 1):
        rows += _b_rows(n)
    rows += _f4_rows()
    rows += _g2_affine_rows()
    rows += _f4_affine_rows()
    for n in range(3, min(max_n, 4) + 1):
        rows += _b_affine_rows(n)
    for n in range(2, min(max_n, 4) + 1):
        rows += _c_affine_rows(n)
    if not extras:
        rows = [r for r in rows if not r.extra]
    return rows


# -- verification -------------------------------------------------------------


@dataclass
class RowResult:
    row: TableRow
    ok: bool
    problems: list = field(default_factory=list)
    seconds: float = 0.0
    decomposition: object = None

    @property
    def first_problem(self) -> str:
        return self.problems[0] if self.problems else ""


def _cycles_as_perm(cycles, index):
    p = {}
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[index[a]] = index[b]
    return p


def verify_row(row: TableRow, deep: bool = True) -> RowResult:
    """Run the decomposition for a row and compare everything it states.

    With ``deep`` the canonical-generator property and the root-rank and
    Gram checks are run as well.
    """
    from .decomp import Decomposition
    from .errors import ConsistencyError

    t0 = time.perf_counter()
    problems = []
    M = builtin(row.ambient)
    G = CoxeterGroup(M)
    D = Decomposition(G, row.I)
    gens = D.tilde_J
    by_elem = {tg.elem: i for i, tg in enumerate(gens)}
    expected = {}
    for node in row.nodes:
        e = G.element(node.split("."))
        if e not in by_elem:
            problems.append(f"node {node} is not a generator")
        elif by_elem[e] in expected.values():
            problems.append(f"node {node} repeats a generator")
        else:
            expected[node] = by_elem[e]
    if len(gens) != len(row.nodes):
        problems.append(f"{len(gens)} generators, expected {len(row.nodes)}")
    if problems:
        return RowResult(row, False, problems, time.perf_counter() - t0, D)
    try:
        Mt = D.triple_check()
    except ConsistencyError as exc:
        return RowResult(row, False, [f"M~ routes disagree: {exc}"], time.perf_counter() - t0, D)
    E = row.expected_matrix()
    for a in range(E.rank):
        for b in range(a + 1, E.rank):
            got = Mt.entries[expected[E.labels[a]]][expected[E.labels[b]]]
            want = E.entries[a][b]
            if got != want:
                problems.append(
                    f"m~({E.labels[a]}, {E.labels[b]}) = {format_entry(got)}, expected {format_entry(want)}"
                )
    for s in D.I:
        lab = M.labels[s]
        got = D.action_of(s)
        want = _cycles_as_perm(row.actions.get(lab, ()), expected)
        for node, i in expected.items():
            if got[i] != want.get(i, i):
                problems.append(f"action of {lab} moves {node} to {gens[got[i]].label}")
                break
    for lab in row.actions:
        if M.index(lab) not in D.I:
            problems.append(f"action listed for {lab}, which is not in I")
    comps = D.components()
    want_comps = sorted(sorted(expected[E.labels[i]] for i in c) for c in E.components())
    if sorted(sorted(c) for c in comps) != want_comps:
        problems.append("components differ")
    got_types = canonical_type(" x ".join(recognize(Mt.restrict(c)) for c in comps))
    if got_types != canonical_type(" x ".join(row.types)):
        problems.append(f"component types {got_types}, expected {canonical_type(' x '.join(row.types))}")
    MI = M.restrict(D.I)
    wi = canonical_type(" x ".join(recognize(MI.restrict(c)) for c in MI.components()))
    if wi != canonical_type(row.WI_type):
        problems.append(f"W_I type {wi}, expected {canonical_type(row.WI_type)}")
    if deep:
        for i in range(len(gens)):
            try:
                D.verify_canonical(i)
            except ConsistencyError as exc:
                problems.append(str(exc))
        if row.affine:
            for c, cls in zip(Mt.components(), D.classify_components()):
                if cls != "affine":
                    problems.append(f"component {[Mt.labels[i] for i in c]} is {cls}, not affine")
        elif M.is_irreducible() and D.J:
            if len(gens) != M.rank:
                problems.append(f"|J~| = {len(gens)} differs from |S| = {M.rank}")
            if D.tilde_roots_rank() != len(gens):
                problems.append("generator roots are linearly dependent")
    return RowResult(row, not problems, problems, time.perf_counter() - t0, D)


# -- text form ------------------------------------------------------------------


def row_to_text(row: TableRow) -> str:
    out = ["[row]", f"ambient: {row.ambient}", "I: " + " ".join(row.I), f"structure: {row.structure}",
           "types: " + " , ".join(row.types), f"W_I: {row.WI_type}", f"note: {row.note}",
           f"affine: {'yes' if row.affine else 'no'}", "", "[nodes]"]
    out += list(row.nodes)
    out += ["", "[bonds]"]
    out += [f"{a} {b} {format_entry(m)}" for a, b, m in row.bonds]
    out += ["", "[actions]"]
    for s, cycles in row.actions.items():
        out.append(f"{s}: " + "".join("(" + " ".join(c) + ")" for c in cycles))
    return "\n".join(out) + "\n"


def row_from_text(text: str) -> TableRow:
    from .formats import parse_cycles, read_sections

    sec = read_sections(text)
    meta = dict(line.split(":", 1) for line in sec.get("row", []))
    meta = {k.strip(): v.strip() for k, v in meta.items()}
    nodes = tuple(sec.get("nodes", []))
    bonds = []
    for line in sec.get("bonds", []):
        a, b, m = line.split()
        bonds.append((a, b, parse_entry(m)))
    actions = {}
    for line in sec.get("actions", []):
        s, cyc = line.split(":", 1)
        actions[s.strip()] = tuple(parse_cycles(cyc, nodes))
    return TableRow(
        ambient=meta["ambient"],
        I=tuple(meta["I"].split()),
        structure=meta.get("structure", ""),
        nodes=nodes,
        bonds=tuple(bonds),
        actions=actions,
        types=tuple(t.strip() for t in meta.get("types", "").split(",") if t.strip()),
        WI_type=meta.get("W_I", ""),
        note=meta.get("note", "none"),
        affine=meta.get("affine", "no") == "yes",
    )
