import io

import pytest

from semicox.cli import JobSpec, build_parser, main, run, spec_from_args


def call(*argv):
    ns = build_parser().parse_args(list(argv))
    out, err = io.StringIO(), io.StringIO()
    code = run(spec_from_args(ns), out, err)
    return code, out.getvalue(), err.getvalue()


def test_decompose_f4(tmp_path):
    dot = tmp_path / "f4.dot"
    code, out, _ = call("decompose", "--type", "F4", "--I", "s1,s2", "--dot", str(dot))
    assert code == 0
    assert "tilde_types: D4" in out
    assert "structure: W(D4) x| W(A2)" in out
    text = dot.read_text()
    assert text.startswith("graph") and "s2.s1.t1.s1.s2" in text


def test_invalid_partition_exits_2():
    code, out, err = call("decompose", "--type", "A3", "--I", "s1")
    assert code == 2 and out == ""
    assert "odd path" in err and "s1 - s2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("decompose", "--type", "Q7", "--I", "s1"),
        ("decompose", "--type", "B3", "--I", "x"),
        ("decompose", "--type", "B3"),
        ("decompose", "--type", "B3", "--matrix", "m.txt", "--I", "t"),
        ("decompose", "--matrix", "/nonexistent/m.txt", "--I", "t"),
        ("descent", "--type", "~C2", "--I", "t"),
        ("external", "--data", "/nonexistent/ext.txt"),
    ],
)
def test_input_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2 and err.startswith("error:")


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    call("decompose", "--type", "~C3", "--I", "s1,s2", "--out", str(a))
    call("decompose", "--type", "~C3", "--I", "s1,s2", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_matrix_file_input(tmp_path):
    m = tmp_path / "g2.txt"
    m.write_text("labels: t s1 s2\n1 6 2\n6 1 3\n2 3 1\n")
    code, out, _ = call("decompose", "--matrix", str(m), "--I", "t")
    assert code == 0 and "tilde_types: ~A2" in out


def test_verify_finite_and_affine():
    code, out, _ = call("verify", "--type", "B3", "--I", "t")
    assert code == 0 and "FAIL" not in out
    assert out.count("PASS parabolic") == 8
    code, out, _ = call("verify", "--type", "~G2", "--I", "s1,s2", "--bound", "4")
    assert code == 0 and "length <= 4" in out


def test_descent_command():
    code, out, _ = call("descent", "--type", "B3", "--I", "t")
    assert code == 0
    assert "64 pairs" in out and "rank 6, dimension 6" in out


def test_external_round_trip_and_data_file(tmp_path):
    code, out, _ = call("external", "--type", "F4", "--I", "s1,s2")
    assert code == 0 and "reproduces" in out
    data = tmp_path / "ext.txt"
    data.write_text(
        "[prime]\nlabels: u v\n1 3\n3 1\n\n"
        "[tilde]\nlabels: a b c d\n1 3 2 2\n3 1 3 3\n2 3 1 2\n2 3 2 1\n\n"
        "[action]\nu: (a c)\nv: (c d)\n\n[J]\nb a\n"
    )
    code, out, _ = call("external", "--data", str(data))
    assert code == 0 and out.startswith("status: accepted")
    data.write_text(data.read_text().replace("b a", "a"))
    code, out, _ = call("external", "--data", str(data))
    assert code == 1 and "misses J" in out


def test_external_inconclusive_exit_code(tmp_path):
    data = tmp_path / "ext.txt"
    data.write_text("[prime]\nlabels: u v\n1 inf\ninf 1\n\n[tilde]\nlabels: a\n1\n\n[action]\n\n[J]\na\n")
    code, out, _ = call("external", "--data", str(data), "--bound", "3")
    assert code == 3 and "inconclusive" in out


def test_partial_decomposition_exit_code(tmp_path):
    m = tmp_path / "m.txt"
    m.write_text("labels: a b c\n1 inf 2\ninf 1 2\n2 2 1\n")
    code, out, _ = call("decompose", "--matrix", str(m), "--I", "a,b", "--bound", "3")
    assert code == 3 and "partial: yes" in out


def test_table_command():
    code, out, _ = call("table", "--max-n", "3", "--max-m", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith(f"# {len(lines) - 1} rows")


def test_jobspec_validation():
    with pytest.raises(Exception):
        JobSpec("decompose", type="B3", I=("t",), bound=-1).validate()
    assert run(JobSpec("decompose", type="B3", I=("t",), bound=-1), io.StringIO(), io.StringIO()) == 2


def test_main_entry_point(capsys):
    assert main(["decompose", "--type", "B2", "--I", "t"]) == 0
    assert "tilde_types: A1 A1" in capsys.readouterr().out
