"""Reading and writing derivations as indented text, and LaTeX output.

A proof file starts with a ``#calculus NAME`` header, then one node per line::

    #calculus lskt
    tensR :: X , Y |- X *L Y
      ax :: X |- X
      ax :: Y |- Y

Premises are indented two spaces more than their conclusion.  Positioned tree
rules carry their path in brackets (``assoc [0,1] :: ...``; ``[]`` is the
root) and LSkG two-premise rules may carry their context split (``tensR [1]``).
Parsing builds the nodes exactly as written, so a parsed proof must still go
through :func:`check` before it is trusted.
"""
from __future__ import annotations

import re
from typing import Union

from . import lskg, lskt, skmbic
from .lskg import GDerivation, GRule
from .lskt import TDerivation, TRule
from .report import CheckReport
from .skmbic import ADerivation, ARule
from .syntax import (
    SyntaxErrorAt, parse_arrow, parse_stoup_sequent, parse_tree_sequent, show,
    show_stoup_sequent, show_tree_sequent,
)

Derivation = Union[GDerivation, TDerivation, ADerivation]
CALCULI = ("lskg", "lskt", "skmbict", "skmbica")


class ProofFormatError(ValueError):
    def __init__(self, msg: str, line: int):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def calculus_of(d: Derivation) -> str:
    if isinstance(d, GDerivation):
        return "lskg"
    if isinstance(d, ADerivation):
        return "skmbica"
    return "lskt" if lskt.check_t(d).ok else "skmbict"


def _sequent_text(d: Derivation) -> str:
    if isinstance(d, GDerivation):
        return show_stoup_sequent(d.conclusion)
    if isinstance(d, TDerivation):
        return show_tree_sequent(d.conclusion)
    return str(d.conclusion)


def _annotation(d: Derivation) -> str:
    if isinstance(d, TDerivation) and d.pos is not None:
        return " [" + ",".join(map(str, d.pos)) + "]"
    if isinstance(d, GDerivation) and d.split is not None:
        return f" [{d.split}]"
    return ""


def to_text(d: Derivation, calculus: str | None = None) -> str:
    lines = [f"#calculus {calculus or calculus_of(d)}"]
    stack = [(d, 0)]
    while stack:
        node, depth = stack.pop()
        lines.append(f"{'  ' * depth}{node.rule.value}{_annotation(node)} :: {_sequent_text(node)}")
        stack.extend((p, depth + 1) for p in reversed(node.premises))
    return "\n".join(lines) + "\n"


_LINE = re.compile(r"^(?P<indent> *)(?P<rule>\S+)(?: \[(?P<ann>[0-9, ]*)\])? :: (?P<seq>.+?)\s*$")
_RULES = {"lskg": GRule, "lskt": TRule, "skmbict": TRule, "skmbica": ARule}


def _node(calculus: str, rule, ann, text: str, premises: tuple, line: int) -> Derivation:
    try:
        if calculus == "lskg":
            split = None if ann is None or ann == () else ann[0]
            return GDerivation(parse_stoup_sequent(text), rule, premises, split)
        if calculus == "skmbica":
            return ADerivation(parse_arrow(text), rule, premises)
        return TDerivation(parse_tree_sequent(text), rule, premises, ann)
    except SyntaxErrorAt as e:
        raise ProofFormatError(str(e), line) from None


def from_text(text: str) -> tuple[str, Derivation]:
    """Parse a proof file into (calculus, derivation) without checking it."""
    rows = [(i + 1, ln) for i, ln in enumerate(text.splitlines())
            if ln.strip() and not ln.lstrip().startswith("%")]
    if not rows:
        raise ProofFormatError("empty proof", 1)
    first_no, first = rows[0]
    m = re.fullmatch(r"\s*#calculus\s+(\S+)\s*", first)
    if not m or m.group(1) not in CALCULI:
        raise ProofFormatError(f"expected '#calculus <{'|'.join(CALCULI)}>'", first_no)
    calculus = m.group(1)
    rule_enum = _RULES[calculus]
    parsed = []
    for no, ln in rows[1:]:
        mm = _LINE.match(ln)
        if not mm or len(mm.group("indent")) % 2:
            raise ProofFormatError("expected '<indent>rule [annotation] :: sequent'", no)
        try:
            rule = rule_enum(mm.group("rule"))
        except ValueError:
            raise ProofFormatError(f"unknown {calculus} rule {mm.group('rule')!r}", no) from None
        ann = mm.group("ann")
        path = None
        if ann is not None:
            path = tuple(int(x) for x in ann.replace(" ", "").split(",") if x)
        parsed.append((len(mm.group("indent")) // 2, rule, path, mm.group("seq"), no))
    if not parsed:
        raise ProofFormatError("no derivation after the header", first_no)

    def build(i: int) -> tuple[Derivation, int]:
        depth, rule, path, seq, no = parsed[i]
        premises = []
        j = i + 1
        while j < len(parsed) and parsed[j][0] > depth:
            if parsed[j][0] != depth + 1:
                raise ProofFormatError("premise indented too far", parsed[j][4])
            p, j = build(j)
            premises.append(p)
        return _node(calculus, rule, path, seq, tuple(premises), no), j

    if parsed[0][0] != 0:
        raise ProofFormatError("the conclusion must not be indented", parsed[0][4])
    d, end = build(0)
    if end != len(parsed):
        raise ProofFormatError("more than one root", parsed[end][4])
    return calculus, d


def check(calculus: str, d: Derivation) -> CheckReport:
    if calculus == "lskg":
        return lskg.check_g(d)
    if calculus == "lskt":
        return lskt.check_t(d)
    if calculus == "skmbict":
        return skmbic.check_bt(d)
    if calculus == "skmbica":
        return skmbic.check_a(d)
    raise ValueError(f"unknown calculus {calculus!r}")


# ---------------------------------------------------------------------------
# LaTeX (bussproofs)

_TEX = [
    ("|-", r"\vdash"), ("*L", r"\otimes_{L}"), ("*R", r"\otimes_{R}"),
    ("-oL", r"\multimap_{L}"), ("-oR", r"\multimap_{R}"),
]
_TEX_TOKEN = re.compile(r"\|-|\*L|\*R|-oL|-oR|\||\bI\b|-")


def tex_sequent(text: str) -> str:
    table = dict(_TEX)

    def sub(m: re.Match) -> str:
        tok = m.group(0)
        if tok in table:
            return table[tok]
        if tok == "|":
            return r"\mid"
        if tok == "I":
            return r"\mathsf{I}"
        return r"\cdot"

    return _TEX_TOKEN.sub(sub, text)


def _tex_label(d: Derivation) -> str:
    name = d.rule.value.replace("-1", "^{-1}")
    return f"$\\mathsf{{{name}}}$" if "^" in name else f"\\textsf{{{name}}}"


def to_latex(d: Derivation) -> str:
    out = [r"\begin{prooftree}"]

    def emit(node: Derivation) -> None:
        for p in node.premises:
            emit(p)
        if not node.premises:
            out.append(r"\AxiomC{}")
        out.append(f"\\RightLabel{{\\scriptsize {_tex_label(node)}}}")
        cmd = {0: "UnaryInfC", 1: "UnaryInfC", 2: "BinaryInfC"}[len(node.premises)]
        out.append(f"\\{cmd}{{${tex_sequent(_sequent_text(node))}$}}")

    emit(d)
    out.append(r"\end{prooftree}")
    return "\n".join(out) + "\n"


def formula_latex(f) -> str:
    return tex_sequent(show(f))
