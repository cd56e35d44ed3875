import io
import subprocess
import sys

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from mixmult.cli import run_command

SESSION = """\
ring R = QQ[x,y,z];
ideal I = x^2, y^2, x*z;
ideal P = x, y;
ideal B = y^3 + z^3, x*y;
poly f = x^2*y + y^2*z + z^3;
polytope T = (0,0) (1,0) (0,1);
polytope S = (0,0) (1,0) (0,1) (1,1);
polytope Q3 = (1,1,0) (2,1,0) (1,3,0) (1,1,3);
polytope Q4 = (0,0,0,0) (1,0,0,0) (0,1,0,0) (0,0,1,0) (0,0,0,1);
"""


@pytest.fixture
def session(tmp_path):
    path = tmp_path / "s.mm"
    path.write_text(SESSION)
    return str(path)


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return dict(line.split(" = ", 1) for line in text.splitlines())


def test_mixed_volume(session):
    code, out, err = run(["mixed-volume", session, "--polytopes", "T,S", "--format", "records"])
    assert code == 0 and err == ""
    assert records(out) == {"mixed_volume": "2"}


def test_text_format(session):
    code, out, _ = run(["mixed-volume", session, "--polytopes", "S,S"])
    assert out == "mixed volume: 2\n"


def test_dimension_four_needs_slow(session):
    code, out, err = run(["mixed-volume", session, "--polytopes", "Q4,Q4,Q4,Q4"])
    assert code == 1 and out == ""
    assert err.startswith("error: precondition:") and "--slow" in err


def test_mixed_multiplicity(session):
    code, out, _ = run(["mixed-mult", session, "--ideals", "m,I,I", "--index", "0,1,1",
                        "--format", "records"])
    # height two: e(I at (x, y)) = e(x, y^2) = 2
    assert code == 0
    assert records(out) == {"index": "0,1,1", "mixed_multiplicity": "2"}


def test_rees(session):
    code, out, _ = run(["rees", session, "--ideals", "P", "--format", "records"])
    rec = records(out)
    assert code == 0
    assert rec["generators"] == "1"
    assert rec["variables"] == "K_1, K_2"
    terms = {t.strip(" -") for t in rec["generator_1"].replace("+", "-").split(" - ")}
    assert {frozenset(t.split("*")) for t in terms} == {frozenset({"x", "K_2"}), frozenset({"y", "K_1"})}


def test_milnor_inline_and_session(session):
    inline = run(["milnor", "--ring", "QQ[x,y,z]", "--poly", "x^2*y + y^2*z + z^3",
                  "--format", "records"])
    stored = run(["milnor", session, "--poly", "f", "--format", "records"])
    assert inline[0] == stored[0] == 0
    assert inline[1] == stored[1]
    assert records(inline[1]) == {"e_0": "1", "e_1": "2", "e_2": "4", "milnor_number": "8"}


def test_milnor_parameter(session):
    argv = ["milnor", "--ring", "QQ[x,y]", "--poly", "x^3 + t*x*y^2 + y^4", "--format", "records"]
    one = records(run(argv)[1])
    zero = records(run(argv + ["--param", "t=0"])[1])
    assert one["e_1"] == "2" and zero["e_1"] == "2"
    assert zero["milnor_number"] == "6"


def test_milnor_infinite_and_euler():
    code, out, _ = run(["milnor", "--ring", "QQ[x,y,z]", "--poly", "x*y*z", "--euler",
                        "--format", "records"])
    rec = records(out)
    assert code == 0
    assert rec["milnor_number"] == "infinite"
    assert rec["euler_terms"] == "1,2,1"
    assert rec["euler_signs"] == "+1,-1,+1"
    assert rec["euler_characteristic"] == "0"


def test_hilbert_and_colength(session):
    code, out, err = run(["colength", session, "--ideals", "I", "--format", "records"])
    assert code == 1 and out == "" and err.startswith("error: precondition:")
    code, out, _ = run(["hilbert", session, "--ideals", "P", "--quotient", "--format", "records"])
    rec = records(out)
    assert code == 0
    assert rec["denominator_exponents"] == "1"
    code, out, _ = run(["hilbert", session, "--ideals", "m,P", "--format", "records"])
    assert code == 0 and records(out)["denominator_exponents"] == "3,2"


def test_colength_of_primary_ideal(tmp_path):
    path = tmp_path / "c.mm"
    path.write_text("ring R = QQ[x,y];\nideal J = x^2, y^3;\n")
    code, out, _ = run(["colength", str(path), "--ideals", "J", "--format", "records"])
    assert code == 0 and records(out) == {"colength": "6"}


def test_bernstein():
    code, out, _ = run(["bernstein", "--ring", "QQ[x,y]", "--poly", "x + y + 1",
                        "--poly", "x^2 + y^2 - 1", "--format", "records"])
    assert code == 0 and records(out) == {"bernstein_bound": "2"}


def test_timing_goes_to_stderr(session):
    code, out, err = run(["mixed-volume", session, "--polytopes", "T,T", "--timing"])
    assert out == "mixed volume: 1\n"
    assert err.startswith("timing = ")


def test_repeated_runs_are_identical(session):
    argv = ["mixed-mult", session, "--ideals", "m,B,B", "--index", "0,1,1", "--format", "records"]
    assert run(argv) == run(argv)


@pytest.mark.parametrize("argv,category", [
    (["frobnicate"], "precondition"),
    (["mixed-mult", "/nonexistent/file"], "precondition"),
    (["mixed-mult", "--ring", "QQ[x]"], "precondition"),
    (["milnor", "--ring", "QQ[x,y", "--poly", "x"], "parse"),
    (["milnor", "--ring", "QQ[x,y]", "--poly", "x^^2"], "parse"),
    (["milnor", "--ring", "QQ[x,y]", "--poly", "5"], "precondition"),
])
def test_errors(argv, category):
    code, out, err = run(argv)
    assert code == 1 and out == ""
    assert err.startswith(f"error: {category}:")
    assert err.count("\n") == 1


def test_session_errors(session):
    code, _, err = run(["mixed-mult", session, "--ideals", "m,Z", "--index", "1,1"])
    assert code == 1 and "no ideal named 'Z'" in err
    code, _, err = run(["mixed-mult", session, "--ideals", "m,I", "--index", "2,1"])
    assert code == 1 and "dim R - 1" in err
    code, _, err = run(["mixed-mult", session, "--ideals", "m,I,I", "--index", "0,x,1"])
    assert code == 1 and "malformed index" in err


def test_warning_is_reported():
    code, out, err = run(["milnor", "--ring", "QQ[x,y]", "--field", "GF(3)", "--poly", "x^3 + y^4"])
    assert code == 0
    assert err.startswith("warning: characteristic 3")


def test_console_script_entry_point(session):
    proc = subprocess.run([sys.executable, "-m", "mixmult.cli", "mixed-volume", session,
                           "--polytopes", "S,T", "--format", "records"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "mixed_volume = 2\n"


flag_values = {
    "--ideals": st.sampled_from(["m", "I", "m,I", "m,I,I", "P,B", "m,B", "m,Z", ""]),
    "--polytopes": st.sampled_from(["T", "T,S", "S,Q3", "Q3,Q3,Q3", ""]),
    "--index": st.sampled_from(["0,1", "1,0", "0,1,1", "2,0,0", "a", "-1,3"]),
    "--field": st.sampled_from(["QQ", "GF(2)", "GF(32003)", "GF(4)", "ZZ"]),
    "--order": st.sampled_from(["lex", "grevlex", "elim"]),
    "--format": st.sampled_from(["text", "records", "json"]),
    "--poly": st.sampled_from(["f", "g"]),
}
switches = ["--raw-coefficient", "--euler", "--quotient", "--timing"]


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.sampled_from(["rees", "mixed-mult", "mixed-volume", "milnor", "hilbert", "colength",
                        "bernstein"]),
       st.dictionaries(st.sampled_from(sorted(flag_values)), st.none(), max_size=3).flatmap(
           lambda keys: st.fixed_dictionaries({k: flag_values[k] for k in keys})),
       st.lists(st.sampled_from(switches), unique=True, max_size=2))
def test_flag_matrix_never_crashes(session, command, flags, extra):
    argv = [command, session]
    for k, v in flags.items():
        argv += [k, v]
    argv += extra
    code, out, err = run(argv)
    if code == 0:
        assert out
    else:
        assert out == ""
        assert err.splitlines()[-1].split(":")[0] == "error"
        assert err.splitlines()[-1].split(":")[1].strip() in ("precondition", "parse")
