"""Build Coxeter groups as external semidirect products.

Exports each finite decomposition of the table and rebuilds the ambient
matrix, then runs a few hand-made inputs, including one rejection.
"""
from semicox.catalog import builtin, table_rows
from semicox.decomp import Decomposition
from semicox.external import ExtData, check_external, construct_from_roots, export_decomposition, roots_from_decomposition

HANDMADE = """\
# A3 with the diagram flip gives B3
[prime]
labels: u
1

[tilde]
labels: a b c
1 3 2
3 1 3
2 3 1

[action]
u: (a c)

[J]
a b
"""

REJECTED = """\
# four commuting nodes, J meets the pairs badly
[prime]
labels: u
1

[tilde]
labels: a b c d
1 2 2 2
2 1 2 2
2 2 1 2
2 2 2 1

[action]
u: (a d)(b c)

[J]
a b
"""


def main():
    for row in table_rows():
        if row.affine:
            continue
        M = builtin(row.ambient)
        res = check_external(export_decomposition(Decomposition(M, row.I)))
        same = res.matrix is not None and res.matrix == M.restrict(list(res.matrix.labels))
        print(f"{row.name:24s} {res.status:9s} round trip {'ok' if same else 'DIFFERS'}")

    for text in (HANDMADE, REJECTED):
        print()
        print(text.splitlines()[0])
        print(check_external(ExtData.from_text(text)).summary(), end="")

    print()
    for label, I in (("B2", ["t"]), ("F4", ["s1", "s2"])):
        res = construct_from_roots(*roots_from_decomposition(Decomposition(builtin(label), I)))
        print(f"{label} from roots: {res.status}, {len(res.Pi)} simple roots, {len(res.new)} new")


if __name__ == "__main__":
    main()
