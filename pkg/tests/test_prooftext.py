import pytest

from skewlambek import enumeration, lskg, lskt, skmbic
from skewlambek.prooftext import ProofFormatError, calculus_of, check, from_text, to_latex, to_text
from skewlambek.syntax import Atom, I, parse_tree_sequent

X, Y = Atom("X"), Atom("Y")


def _roundtrip(d):
    calc, back = from_text(to_text(d))
    assert back == d and calc == calculus_of(d)
    assert check(calc, back).ok


def test_roundtrip_enumerated_derivations():
    for d in enumeration.flat(enumeration.g_derivations(4, [X, I])):
        _roundtrip(d)
    for d in enumeration.flat(enumeration.t_derivations(4, [X], lskt.ALL_RULES)):
        _roundtrip(d)
    for d in enumeration.flat(enumeration.a_derivations(3, [X])):
        _roundtrip(d)


def test_calculus_detection():
    assert calculus_of(lskg.ax(X)) == "lskg"
    assert calculus_of(lskt.ax(X)) == "lskt"
    assert calculus_of(lskt.comm(lskt.tensr(lskt.ax(X), lskt.ax(Y)))) == "skmbict"
    assert calculus_of(skmbic.gamma(X, Y)) == "skmbica"


def test_text_layout():
    d = lskt.unitr(lskt.tensr(lskt.ax(X), lskt.ir()), ())
    assert to_text(d).splitlines() == [
        "#calculus lskt",
        "unitR [] :: X |- X *L I",
        "  tensR :: X , - |- X *L I",
        "    ax :: X |- X",
        "    IR :: - |- I",
    ]


def test_parsed_proofs_are_not_trusted():
    text = "#calculus lskt\nax :: Y |- X\n"
    calc, d = from_text(text)
    assert d.conclusion == parse_tree_sequent("Y |- X")
    assert not check(calc, d).ok


def test_comments_and_blank_lines_are_skipped():
    text = "% a comment\n\n#calculus lskt\n  % inner\nax :: X |- X\n"
    assert from_text(text) == ("lskt", lskt.ax(X))


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("ax :: X |- X\n", 1),
    ("#calculus nope\nax :: X |- X\n", 1),
    ("#calculus lskt\n", 1),
    ("#calculus lskt\nfoo :: X |- X\n", 2),
    ("#calculus lskt\nax :: X |-\n", 2),
    ("#calculus lskt\nax X |- X\n", 2),
    ("#calculus lskt\n   ax :: X |- X\n", 2),
    ("#calculus lskt\ntensR :: X , Y |- X *L Y\n      ax :: X |- X\n", 3),
    ("#calculus lskt\nax :: X |- X\nax :: X |- X\n", 3),
])
def test_format_errors_report_lines(text, line):
    with pytest.raises(ProofFormatError) as e:
        from_text(text)
    assert e.value.line == line


def test_latex_output():
    d = lskt.unitr(lskt.tensr(lskt.ax(X), lskt.ir()), ())
    tex = to_latex(d)
    lines = tex.splitlines()
    assert lines[0] == r"\begin{prooftree}" and lines[-1] == r"\end{prooftree}"
    assert tex.count(r"\AxiomC{}") == 2
    assert r"\BinaryInfC{$X , \cdot \vdash X \otimes_{L} \mathsf{I}$}" in tex
    assert r"\UnaryInfC{$X \vdash X \otimes_{L} \mathsf{I}$}" in lines[-2]
    tex = to_latex(skmbic.gamma_inv(X, Y))
    assert r"\mathsf{gamma^{-1}}" in tex and r"\otimes_{R}" in tex
