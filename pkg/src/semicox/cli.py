"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 inconclusive (a search bound was reached).
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from .catalog import builtin, table_rows, verify_row
from .coxeter import CoxMatrix, CoxeterGroup
from .decomp import Decomposition
from .errors import BoundExceeded, ConsistencyError, GroupNotFinite, PartitionError, PreconditionError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    type: str | None = None
    matrix: str | None = None
    I: tuple = ()
    bound: int | None = None
    dot: str | None = None
    out: str | None = None
    data: str | None = None
    max_n: int = 5
    max_m: int = 6
    extras: list = field(default_factory=list)

    def validate(self):
        if self.command in ("decompose", "verify", "descent") or (self.command == "external" and not self.data):
            if bool(self.type) == bool(self.matrix):
                raise InputError("give exactly one of --type and --matrix")
            if not self.I:
                raise InputError("--I is required")
        if self.bound is not None and self.bound < 0:
            raise InputError("--bound must be non-negative")


def load_matrix(spec: JobSpec) -> tuple[CoxMatrix, str]:
    if spec.type:
        try:
            return builtin(spec.type), spec.type
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        with open(spec.matrix, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {spec.matrix}: {exc.strerror}") from None
    try:
        return CoxMatrix.from_text(text), spec.matrix
    except ValueError as exc:
        raise InputError(f"{spec.matrix}: {exc}") from None


def _decomposition(spec: JobSpec):
    M, name = load_matrix(spec)
    for s in spec.I:
        if s not in M.labels:
            raise InputError(f"unknown generator {s!r}; generators are {' '.join(M.labels)}")
    return Decomposition(M, spec.I, bound=spec.bound), name


def _emit(spec: JobSpec, text: str, stdout):
    if spec.out:
        with open(spec.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    stdout.write(text)


def cmd_decompose(spec, stdout):
    D, name = _decomposition(spec)
    rep = D.report(name)
    _emit(spec, rep.to_text(), stdout)
    if spec.dot:
        with open(spec.dot, "w", encoding="utf-8") as fh:
            fh.write(rep.to_dot())
    return EXIT_INCONCLUSIVE if D.partial else EXIT_OK


def _check(lines, name, fn):
    try:
        detail = fn()
        lines.append(f"PASS {name}" + (f" ({detail})" if detail not in (None, "") else ""))
        return True
    except ConsistencyError as exc:
        lines.append(f"FAIL {name}: {exc}")
        return False


def cmd_verify(spec, stdout):
    D, name = _decomposition(spec)
    G = D.G
    lines = [f"# {name} I={{{','.join(spec.I)}}}"]
    ok = True
    ok &= _check(lines, "m~ formula = roots = orders", lambda: f"{D.triple_check().rank} generators")
    ok &= _check(lines, "m~ invariant under W_I", D.check_symmetry)
    ok &= _check(lines, "canonical generators", lambda: [D.verify_canonical(i) for i in range(len(D.tilde_J))] and None)
    ok &= _check(lines, "components", lambda: f"{len(D.components())} components")
    finite = G.is_finite()
    if finite:
        elements = G.enumerate_group()
        scope = f"all {len(elements)} elements"
    else:
        radius = spec.bound if spec.bound is not None else 6
        elements = G.enumerate_ball(radius)
        scope = f"{len(elements)} elements of length <= {radius}"
    ok &= _check(lines, f"semidirect factorization on {scope}", lambda: f"{D.verify_semidirect(elements)} cosets")
    ok &= _check(lines, f"l_J = l~ on {scope}", lambda: D.verify_lengths(elements) and None)
    if finite:
        from .descent import subsets
        from .table import FiniteGroupTable

        T = FiniteGroupTable(G)
        for K in subsets(range(G.n)):
            lab = ",".join(G.M.labels[s] for s in sorted(K)) or "-"
            ok &= _check(lines, f"parabolic K={{{lab}}}", lambda K=K: D.verify_parabolic(K, T))
    _emit(spec, "\n".join(lines) + "\n", stdout)
    if not ok:
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE if D.partial else EXIT_OK


def cmd_descent(spec, stdout):
    from .descent import DescentMap

    D, name = _decomposition(spec)
    try:
        R = DescentMap(D)
    except GroupNotFinite as exc:
        raise InputError(str(exc)) from None
    lines = [f"# {name} I={{{','.join(spec.I)}}}"]
    ok = True
    ok &= _check(lines, "restilde is multiplicative; z restilde(x) = x z", lambda: f"{R.verify_morphism()} pairs")
    ok &= _check(lines, "image = W_I-fixed part", lambda: "rank %d, dimension %d" % R.image_fixed_check())
    ok &= _check(lines, "character diagram commutes", lambda: f"{R.verify_diagram()} subsets")
    _emit(spec, "\n".join(lines) + "\n", stdout)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_external(spec, stdout):
    from .external import ExtData, check_external, export_decomposition

    if spec.data:
        try:
            with open(spec.data, encoding="utf-8") as fh:
                d = ExtData.from_text(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {spec.data}: {exc.strerror}") from None
        except (ValueError, KeyError) as exc:
            raise InputError(f"{spec.data}: {exc}") from None
        original = None
    else:
        D, _ = _decomposition(spec)
        d = export_decomposition(D)
        original = D.M
    res = check_external(d, bound=spec.bound)
    text = res.summary()
    if original is not None and res.matrix is not None:
        same = res.matrix == original.restrict(list(res.matrix.labels))
        text += f"round trip: {'reproduces' if same else 'DIFFERS FROM'} the ambient matrix\n"
        if not same:
            _emit(spec, text, stdout)
            return EXIT_FAIL
    _emit(spec, text, stdout)
    return {"accepted": EXIT_OK, "rejected": EXIT_FAIL}.get(res.status, EXIT_INCONCLUSIVE)


def cmd_table(spec, stdout):
    lines = []
    ok = True
    t0 = time.perf_counter()
    for row in table_rows(spec.max_n, spec.max_m):
        res = verify_row(row)
        ok &= res.ok
        status = "PASS" if res.ok else "FAIL"
        note = f" note {row.note}" if row.note != "none" else ""
        lines.append(f"{status} {row.name:28s} {row.structure}{note}" + ("" if res.ok else f": {res.first_problem}"))
    lines.append(f"# {len(lines)} rows in {time.perf_counter() - t0:.1f}s")
    _emit(spec, "\n".join(lines) + "\n", stdout)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "descent": cmd_descent,
    "external": cmd_external,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semicox", description="Semidirect decompositions of Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_input=True):
        sp.add_argument("--type", help="built-in type, e.g. B4, F4, ~C3, I2(6)")
        sp.add_argument("--matrix", metavar="FILE", help="Coxeter matrix file")
        sp.add_argument("--I", dest="I", metavar="LIST", default="", help="comma-separated generators in I")
        sp.add_argument("--bound", type=int, metavar="N", help="search bound (ball radius)")
        sp.add_argument("--out", metavar="FILE", help="also write the report to FILE")

    sp = sub.add_parser("decompose", help="print the decomposition report")
    common(sp)
    sp.add_argument("--dot", metavar="FILE", help="write the diagram of W~ in DOT format")
    common(sub.add_parser("verify", help="check the structural statements"))
    common(sub.add_parser("descent", help="check the descent-algebra statements"))
    sp = sub.add_parser("external", help="test an external semidirect product")
    common(sp)
    sp.add_argument("--data", metavar="FILE", help="structured data file; otherwise export from --type/--I")
    sp = sub.add_parser("table", help="verify the golden table")
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--max-m", type=int, default=6)
    sp.add_argument("--out", metavar="FILE")
    return p


def spec_from_args(ns) -> JobSpec:
    I = tuple(x.strip() for x in getattr(ns, "I", "").split(",") if x.strip())
    return JobSpec(
        command=ns.command,
        type=getattr(ns, "type", None),
        matrix=getattr(ns, "matrix", None),
        I=I,
        bound=getattr(ns, "bound", None),
        dot=getattr(ns, "dot", None),
        out=getattr(ns, "out", None),
        data=getattr(ns, "data", None),
        max_n=getattr(ns, "max_n", 5),
        max_m=getattr(ns, "max_m", 6),
    )


def run(spec: JobSpec, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        spec.validate()
        return COMMANDS[spec.command](spec, stdout)
    except PartitionError as exc:
        stderr.write(f"error: invalid partition: {exc}\n")
        return EXIT_INPUT
    except (InputError, PreconditionError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"error: {msg}\n")
        return EXIT_INPUT
    except BoundExceeded as exc:
        stderr.write(f"inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    except ConsistencyError as exc:
        stderr.write(f"verification failed: {exc}\n")
        return EXIT_FAIL


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return run(spec_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
