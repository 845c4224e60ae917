"""Plain-text serialization: scalars, vectors, sectioned files and DOT."""
from __future__ import annotations

from fractions import Fraction

from .coxeter import INF, CoxMatrix
from .scalar import CycReal

PALETTE = ["lightblue", "palegreen", "lightsalmon", "khaki", "plum", "lightgrey", "pink", "aquamarine"]


def format_scalar(x) -> str:
    if not isinstance(x, CycReal):
        return str(Fraction(x))
    if x.is_rational():
        return str(x.to_fraction())
    N = x.field.N
    parts = []
    for k, q in x.cos_coords().items():
        if k == 0:
            parts.append(str(q))
            continue
        angle = f"{k}pi/{N}" if k != 1 else f"pi/{N}"
        coef = "" if q == 1 else "-" if q == -1 else f"{q}*"
        parts.append(f"{coef}cos({angle})")
    return "+".join(parts).replace("+-", "-")


def format_vector(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def read_sections(text: str) -> dict:
    """Split '[name]' sections; each maps to its non-empty, comment-free lines."""
    sections: dict[str, list[str]] = {}
    cur = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        s = line.strip()
        if s.startswith("[") and s.endswith("]"):
            cur = s[1:-1].strip().lower()
            sections[cur] = []
            continue
        if cur is None:
            raise ValueError(f"content before the first section: {s!r}")
        sections[cur].append(s)
    return sections


def parse_cycles(text: str, labels) -> list:
    """'(a b)(c d e)' -> [('a','b'), ('c','d','e')]; labels are validated."""
    out = []
    text = text.strip()
    if text in ("", "()", "id", "1"):
        return out
    for chunk in text.split(")"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not chunk.startswith("("):
            raise ValueError(f"bad cycle notation near {chunk!r}")
        items = chunk[1:].split()
        for it in items:
            if it not in labels:
                raise ValueError(f"unknown label {it!r} in cycle")
        out.append(tuple(items))
    return out


def cycles_to_perm(cycles, labels) -> tuple:
    idx = {s: i for i, s in enumerate(labels)}
    p = list(range(len(labels)))
    seen = set()
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            if a in seen:
                raise ValueError(f"label {a!r} appears twice in the cycles")
            seen.add(a)
            p[idx[a]] = idx[b]
    return tuple(p)


def dot_diagram(M: CoxMatrix, orbits=None) -> str:
    """Coxeter diagram in DOT; bonds > 3 are labelled, infinite bonds as 'inf'."""
    color = {}
    for k, orb in enumerate(orbits or []):
        for lab in orb:
            color[lab] = PALETTE[k % len(PALETTE)]
    lines = ["graph coxeter {", "  node [shape=circle, style=filled];"]
    for lab in M.labels:
        lines.append(f'  "{lab}" [fillcolor="{color.get(lab, "white")}"];')
    for i, j, m in M.edges():
        attr = "" if m == 3 else f' [label="{"inf" if m == INF else m}"]'
        lines.append(f'  "{M.labels[i]}" -- "{M.labels[j]}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
