import io
import json

import pytest

from skewlambek import lskg, lskt, prooftext, skmbic
from skewlambek.cli import INPUT_ERROR, OK, REFUTED, UNKNOWN, main
from skewlambek.semantics import SKMBICA, frame_from_json, satisfies, valid_in_model
from skewlambek.syntax import Atom, StoupSequent, TensL, TensR

X, Y = Atom("X"), Atom("Y")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("calculus,sequent,code", [
    ("lskt", "(I , X) |- X", OK),
    ("lskt", "X |- I *L X", REFUTED),
    ("lskt", "X |- X *L I", OK),
    ("lskt", "X *L I |- X", REFUTED),
    ("lskg", "X -oL Y | X |- Y", OK),
    ("lskg", "X | |- I *L X", REFUTED),
    ("skmbict", "X ; Y |- X *R Y", OK),
    ("skmbica", "X *L Y |- Y *R X", OK),
])
def test_decide_exit_codes(calculus, sequent, code):
    c, out, _ = run("decide", calculus, sequent)
    assert c == code
    if code == OK:
        assert out.startswith("derivable\n")
        calc, d = prooftext.from_text(out.split("\n", 1)[1])
        assert calc == calculus and prooftext.check(calc, d).ok


def test_decide_refutes_with_a_countermodel():
    c, out, _ = run("decide", "skmbict", "X *R Y |- X *L Y")
    assert c == REFUTED
    lines = out.splitlines()
    assert lines[0] == "refuted"
    fr = frame_from_json(lines[1].removeprefix("frame: "))
    v = json.loads(lines[2].removeprefix("valuation: "))
    assert satisfies(fr, SKMBICA)
    assert not valid_in_model(TensR(X, Y), TensL(X, Y), v, fr)


def test_decide_unknown_at_tiny_bounds():
    c, out, _ = run("decide", "skmbict", "X *R Y |- X *L Y", "--max-worlds", "1")
    assert c == UNKNOWN and out.startswith("unknown")


def test_input_errors():
    assert run("decide", "lskt", "X |-")[0] == INPUT_ERROR
    assert run("decide", "lskt", "X ; Y |- X")[0] == INPUT_ERROR
    assert run("decide", "nope", "X |- X")[0] == INPUT_ERROR
    assert run()[0] == INPUT_ERROR
    c, _, err = run("check-frame", "/nonexistent/frame.json")
    assert c == INPUT_ERROR and err.startswith("error:")


def test_prove_latex():
    c, out, _ = run("prove", "lskt", "X |- X *L I", "--format", "latex")
    assert c == OK and out.startswith(r"\begin{prooftree}")
    c, out, _ = run("prove", "lskt", "X |- I *L X")
    assert c == REFUTED


def _write(tmp_path, name, d, calculus=None):
    p = tmp_path / name
    p.write_text(prooftext.to_text(d, calculus))
    return str(p)


def test_translate(tmp_path):
    g = lskg.prove_g(StoupSequent(X, (Y,), TensL(X, Y)))
    c, out, _ = run("translate", "g2t", _write(tmp_path, "g.txt", g))
    assert c == OK and out.startswith("#calculus lskt")
    t = _write(tmp_path, "t.txt", lskt.unitr(lskt.tensr(lskt.ax(X), lskt.ir()), ()))
    c, out, _ = run("translate", "t2g", t)
    assert c == OK and "X | |- X *L I" in out
    a = _write(tmp_path, "a.txt", skmbic.gamma(X, Y))
    c, out, _ = run("translate", "a2g", a)
    assert c == OK and out.startswith("#calculus skmbict")
    bt = _write(tmp_path, "bt.txt", lskt.comm(lskt.tensr(lskt.ax(X), lskt.ax(Y))), "skmbict")
    c, out, _ = run("translate", "g2a", bt)
    assert c == OK and out.startswith("#calculus skmbica")
    # wrong calculus for the direction
    assert run("translate", "t2g", a)[0] == INPUT_ERROR


def test_translate_rejects_unchecked_proof(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("#calculus lskt\nax :: Y |- X\n")
    c, _, err = run("translate", "t2g", str(p))
    assert c == INPUT_ERROR and "does not check" in err


def test_cut(tmp_path):
    f = _write(tmp_path, "f.txt", lskt.tensr(lskt.ax(X), lskt.ax(Y)))
    g = _write(tmp_path, "g.txt", lskt.tensl(lskt.tensr(lskt.ax(X), lskt.ax(Y)), ()))
    c, out, _ = run("cut", f, g)
    assert c == OK and "X , Y |- X *L Y" in out.splitlines()[1]
    c, out, _ = run("cut", f, g, "--position", "")
    assert c == OK
    assert run("cut", f, g, "--position", "0")[0] == INPUT_ERROR
    assert run("cut", f, f)[0] == INPUT_ERROR
    gf = _write(tmp_path, "gf.txt", lskg.ax(X))
    assert run("cut", f, gf)[0] == INPUT_ERROR
    a1 = _write(tmp_path, "a1.txt", skmbic.gamma(X, Y))
    a2 = _write(tmp_path, "a2.txt", skmbic.gamma_inv(Y, X))
    c, out, _ = run("cut", a1, a2)
    assert c == OK and "X *L Y |- X *L Y" in out


def test_check_frame(tmp_path):
    p = tmp_path / "fr.json"
    p.write_text('{"worlds": 1, "leq": [[0, 0]], "I": [0], "L": [[0, 0, 0]], "R": "lr-reverse"}')
    c, out, _ = run("check-frame", str(p))
    assert c == OK and "LSA         holds" in out and "law gamma    valid" in out
    p.write_text('{"worlds": 2, "leq": [[0, 0], [1, 1], [0, 1]], "I": [1], "L": []}')
    c, out, _ = run("check-frame", str(p))
    assert c == REFUTED and out.startswith("invalid frame")


def test_correspondence_modes(tmp_path):
    c, out, _ = run("correspondence", "--enumerate", "1")
    assert c == OK and out.rstrip().endswith("8 frames")
    assert out.count("agree") == 14  # header plus 13 rows
    c, out, _ = run("correspondence", "--random", "5", "--worlds", "2")
    assert c == OK and "5 frames" in out
    p = tmp_path / "fr.json"
    p.write_text('{"worlds": 1, "leq": [[0, 0]], "I": [], "L": []}')
    assert run("correspondence", str(p))[0] == OK
    assert run("correspondence", "--enumerate", "0")[0] == INPUT_ERROR


def test_countermodel_command():
    c, out, _ = run("countermodel", "X |- I *L X")
    assert c == REFUTED and out.startswith("refuted")
    c, out, _ = run("countermodel", "I *L X |- X", "--max-worlds", "2")
    assert c == UNKNOWN


def test_equations():
    c, out, _ = run("equations")
    assert c == OK and "Mac Lane axioms" in out and out.endswith("\n")
