"""Formulas, tree antecedents, one-hole contexts and their concrete syntax.

Concrete syntax (ASCII only)::

    atoms      [A-Za-z][A-Za-z0-9_]*   (``I`` is reserved for the unit)
    tensors    *L  *R                  left-associative
    implies    -oL -oR                 right-associative, bind loosest
    trees      -  ,  ;                 empty tree, comma node, semicolon node
    sequents   T |- A                  tree sequent
               S | A1 , ... , An |- A  stoup sequent (S is a formula or -)

Paths into trees are tuples of 0 (left child) and 1 (right child).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union


class SyntaxErrorAt(ValueError):
    """Malformed concrete syntax; ``pos`` is a character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class FragmentError(ValueError):
    """A connective or tree node outside the fragment a calculus accepts."""


class PathError(ValueError):
    """A path that leaves the tree it is supposed to address."""


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class Unit:
    def __str__(self) -> str:
        return "I"


@dataclass(frozen=True)
class TensL:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class TensR:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class LolliL:
    arg: "Formula"
    res: "Formula"

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class LolliR:
    arg: "Formula"
    res: "Formula"

    def __str__(self) -> str:
        return show(self)


Formula = Union[Atom, Unit, TensL, TensR, LolliL, LolliR]
I = Unit()


def size(f: Formula) -> int:
    """Number of atom, unit and connective occurrences."""
    if isinstance(f, (Atom, Unit)):
        return 1
    if isinstance(f, (TensL, TensR)):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.arg) + size(f.res)


def connectives(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Unit):
        return 1
    if isinstance(f, (TensL, TensR)):
        return 1 + connectives(f.left) + connectives(f.right)
    return 1 + connectives(f.arg) + connectives(f.res)


def atoms(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Unit):
        return set()
    if isinstance(f, (TensL, TensR)):
        return atoms(f.left) | atoms(f.right)
    return atoms(f.arg) | atoms(f.res)


def in_lsk(f: Formula) -> bool:
    """True iff ``f`` uses no right-skew connective."""
    if isinstance(f, (Atom, Unit)):
        return True
    if isinstance(f, (TensR, LolliR)):
        return False
    if isinstance(f, TensL):
        return in_lsk(f.left) and in_lsk(f.right)
    return in_lsk(f.arg) and in_lsk(f.res)


def require_lsk(*fs: Formula) -> None:
    for f in fs:
        if not in_lsk(f):
            raise FragmentError(f"{show(f)} uses *R or -oR")


# ---------------------------------------------------------------------------
# Trees and contexts


@dataclass(frozen=True)
class Leaf:
    f: Formula


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Comma:
    l: "Tree"
    r: "Tree"


@dataclass(frozen=True)
class Semi:
    l: "Tree"
    r: "Tree"


Tree = Union[Leaf, Empty, Comma, Semi]
EMPTY = Empty()
Path = tuple[int, ...]


@dataclass(frozen=True)
class Hole:
    pass


@dataclass(frozen=True)
class CommaL:
    c: "Context"
    r: Tree


@dataclass(frozen=True)
class CommaR:
    l: Tree
    c: "Context"


@dataclass(frozen=True)
class SemiL:
    c: "Context"
    r: Tree


@dataclass(frozen=True)
class SemiR:
    l: Tree
    c: "Context"


Context = Union[Hole, CommaL, CommaR, SemiL, SemiR]
HOLE = Hole()


def subst(ctx: Context, u: Tree) -> Tree:
    if isinstance(ctx, Hole):
        return u
    if isinstance(ctx, CommaL):
        return Comma(subst(ctx.c, u), ctx.r)
    if isinstance(ctx, CommaR):
        return Comma(ctx.l, subst(ctx.c, u))
    if isinstance(ctx, SemiL):
        return Semi(subst(ctx.c, u), ctx.r)
    return Semi(ctx.l, subst(ctx.c, u))


def find_context(t: Tree, path: Sequence[int]) -> tuple[Context, Tree]:
    """Split ``t`` at ``path`` into a context and the addressed subtree."""
    if not path:
        return HOLE, t
    if not isinstance(t, (Comma, Semi)):
        raise PathError(f"path {tuple(path)} leaves the tree at a leaf")
    step, rest = path[0], path[1:]
    if step == 0:
        ctx, u = find_context(t.l, rest)
        return (CommaL(ctx, t.r) if isinstance(t, Comma) else SemiL(ctx, t.r)), u
    if step == 1:
        ctx, u = find_context(t.r, rest)
        return (CommaR(t.l, ctx) if isinstance(t, Comma) else SemiR(t.l, ctx)), u
    raise PathError(f"path step {step!r} is neither 0 nor 1")


def subtree(t: Tree, path: Sequence[int]) -> Tree:
    for step in path:
        if not isinstance(t, (Comma, Semi)) or step not in (0, 1):
            raise PathError(f"path {tuple(path)} leaves the tree")
        t = t.l if step == 0 else t.r
    return t


def replace(t: Tree, path: Sequence[int], u: Tree) -> Tree:
    """``t`` with the subtree at ``path`` replaced by ``u``."""
    spine = []
    for step in path:
        if not isinstance(t, (Comma, Semi)):
            raise PathError(f"path {tuple(path)} leaves the tree at a leaf")
        if step == 0:
            spine.append((t, 0))
            t = t.l
        elif step == 1:
            spine.append((t, 1))
            t = t.r
        else:
            raise PathError(f"path step {step!r} is neither 0 nor 1")
    for node, step in reversed(spine):
        u = type(node)(u, node.r) if step == 0 else type(node)(node.l, u)
    return u


def positions(t: Tree, prefix: Path = ()) -> list[tuple[Path, Tree]]:
    """All (path, subtree) pairs, preorder."""
    out = []
    stack = [(prefix, t)]
    while stack:
        p, u = stack.pop()
        out.append((p, u))
        if isinstance(u, (Comma, Semi)):
            stack.append((p + (1,), u.r))
            stack.append((p + (0,), u.l))
    return out


def tree_formulas(t: Tree) -> list[Formula]:
    return [u.f for _, u in positions(t) if isinstance(u, Leaf)]


def has_semi(t: Tree) -> bool:
    if isinstance(t, Semi):
        return True
    if isinstance(t, Comma):
        return has_semi(t.l) or has_semi(t.r)
    return False


def tree_in_lsk(t: Tree) -> bool:
    if isinstance(t, Leaf):
        return in_lsk(t.f)
    if isinstance(t, Comma):
        return tree_in_lsk(t.l) and tree_in_lsk(t.r)
    return isinstance(t, Empty)


def flatten_star(t: Tree) -> Formula:
    """Commas to left tensors, the empty tree to I."""
    if isinstance(t, Leaf):
        return t.f
    if isinstance(t, Empty):
        return I
    if isinstance(t, Semi):
        raise FragmentError("semicolon node in a left-skew tree")
    return TensL(flatten_star(t.l), flatten_star(t.r))


def flatten_sharp(t: Tree) -> Formula:
    """Commas to left tensors, semicolons to right tensors, the empty tree to I."""
    if isinstance(t, Leaf):
        return t.f
    if isinstance(t, Empty):
        return I
    if isinstance(t, Comma):
        return TensL(flatten_sharp(t.l), flatten_sharp(t.r))
    return TensR(flatten_sharp(t.l), flatten_sharp(t.r))


def encode(t: Tree, gamma: Sequence[Formula]) -> Tree:
    """Extend ``t`` by the list ``gamma``, associating to the left."""
    for f in gamma:
        t = Comma(t, Leaf(f))
    return t


def stoup_formula(s: Optional[Formula]) -> Formula:
    return I if s is None else s


# ---------------------------------------------------------------------------
# Sequents


@dataclass(frozen=True)
class StoupSequent:
    stoup: Optional[Formula]
    context: tuple[Formula, ...]
    succedent: Formula

    def __str__(self) -> str:
        return show_stoup_sequent(self)


@dataclass(frozen=True)
class TreeSequent:
    antecedent: Tree
    succedent: Formula

    def __str__(self) -> str:
        return show_tree_sequent(self)


@dataclass(frozen=True)
class Arrow:
    """An axiomatic-calculus sequent ``source |- target``."""

    source: Formula
    target: Formula

    def __str__(self) -> str:
        return f"{show(self.source)} |- {show(self.target)}"


# ---------------------------------------------------------------------------
# Printing

_TENS = {TensL: "*L", TensR: "*R"}
_LOLLI = {LolliL: "-oL", LolliR: "-oR"}


def show(f: Formula, full: bool = False) -> str:
    """Print a formula; minimal parentheses unless ``full``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Unit):
        return "I"
    if full:
        if isinstance(f, (TensL, TensR)):
            return f"({show(f.left, True)} {_TENS[type(f)]} {show(f.right, True)})"
        return f"({show(f.arg, True)} {_LOLLI[type(f)]} {show(f.res, True)})"
    if isinstance(f, (TensL, TensR)):
        left = show(f.left)
        if isinstance(f.left, (LolliL, LolliR)):
            left = f"({left})"
        right = show(f.right)
        if not isinstance(f.right, (Atom, Unit)):
            right = f"({right})"
        return f"{left} {_TENS[type(f)]} {right}"
    arg = show(f.arg)
    if isinstance(f.arg, (LolliL, LolliR)):
        arg = f"({arg})"
    return f"{arg} {_LOLLI[type(f)]} {show(f.res)}"


def show_tree(t: Tree, full: bool = False) -> str:
    if isinstance(t, Leaf):
        return show(t.f, full)
    if isinstance(t, Empty):
        return "-"
    sep = "," if isinstance(t, Comma) else ";"
    return f"{_show_subtree(t.l, full)} {sep} {_show_subtree(t.r, full)}"


def _show_subtree(t: Tree, full: bool) -> str:
    if isinstance(t, (Comma, Semi)):
        return f"({show_tree(t, full)})"
    return show_tree(t, full)


def show_tree_sequent(s: TreeSequent, full: bool = False) -> str:
    return f"{show_tree(s.antecedent, full)} |- {show(s.succedent, full)}"


def show_stoup_sequent(s: StoupSequent, full: bool = False) -> str:
    stoup = "-" if s.stoup is None else show(s.stoup, full)
    ctx = " , ".join(show(f, full) for f in s.context)
    mid = f" {ctx} " if ctx else " "
    return f"{stoup} |{mid}|- {show(s.succedent, full)}"


# ---------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<op>-oL|-oR|\*L|\*R|\|-|[|,;()\-])|(?P<id>[A-Za-z][A-Za-z0-9_]*))"
)


def tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise SyntaxErrorAt(f"unexpected character {text[start]!r}", start)
        tok = m.group("op") or m.group("id")
        tokens.append((tok, m.start("op") if m.group("op") else m.start("id")))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> str:
        return self.toks[self.i][0]

    @property
    def where(self) -> int:
        return self.toks[self.i][1]

    def fail(self, message: str) -> SyntaxErrorAt:
        return SyntaxErrorAt(message, self.where)

    def eat(self, tok: str) -> None:
        if self.tok != tok:
            raise self.fail(f"expected {tok!r}, found {self.tok!r}")
        self.i += 1

    def done(self) -> None:
        if self.tok != "<eof>":
            raise self.fail(f"trailing input {self.tok!r}")

    # formula := tensor (('-oL' | '-oR') formula)?
    def formula(self) -> Formula:
        left = self.tensor()
        if self.tok in ("-oL", "-oR"):
            op = self.tok
            self.i += 1
            right = self.formula()
            return LolliL(left, right) if op == "-oL" else LolliR(left, right)
        return left

    def tensor(self) -> Formula:
        f = self.primary()
        while self.tok in ("*L", "*R"):
            op = self.tok
            self.i += 1
            g = self.primary()
            f = TensL(f, g) if op == "*L" else TensR(f, g)
        return f

    def primary(self) -> Formula:
        tok = self.tok
        if tok == "(":
            self.i += 1
            f = self.formula()
            self.eat(")")
            return f
        if tok == "I":
            self.i += 1
            return I
        if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            self.i += 1
            return Atom(tok)
        raise self.fail(f"expected a formula, found {tok!r}")

    # tree := item ((',' | ';') item)*       (left-associative)
    def tree(self) -> Tree:
        t = self.item()
        while self.tok in (",", ";"):
            sep = self.tok
            self.i += 1
            u = self.item()
            t = Comma(t, u) if sep == "," else Semi(t, u)
        return t

    def item(self) -> Tree:
        if self.tok == "-":
            self.i += 1
            return EMPTY
        if self.tok == "(":
            save = self.i
            try:
                f = self.formula()
                if self.tok in (",", ";", ")", "|-", "<eof>"):
                    return Leaf(f)
            except SyntaxErrorAt:
                pass
            self.i = save
            self.eat("(")
            t = self.tree()
            self.eat(")")
            return t
        return Leaf(self.formula())


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_tree(text: str) -> Tree:
    p = _Parser(text)
    t = p.tree()
    p.done()
    return t


def parse_tree_sequent(text: str) -> TreeSequent:
    p = _Parser(text)
    t = p.tree()
    p.eat("|-")
    c = p.formula()
    p.done()
    return TreeSequent(t, c)


def parse_stoup_sequent(text: str) -> StoupSequent:
    p = _Parser(text)
    if p.tok == "-":
        p.i += 1
        stoup = None
    else:
        stoup = p.formula()
    p.eat("|")
    ctx = []
    if p.tok != "|-":
        ctx.append(p.formula())
        while p.tok == ",":
            p.i += 1
            ctx.append(p.formula())
    p.eat("|-")
    c = p.formula()
    p.done()
    return StoupSequent(stoup, tuple(ctx), c)


def parse_arrow(text: str) -> Arrow:
    p = _Parser(text)
    a = p.formula()
    p.eat("|-")
    b = p.formula()
    p.done()
    return Arrow(a, b)


def parse_sequent(text: str) -> Union[TreeSequent, StoupSequent]:
    """Stoup sequent if a lone ``|`` occurs, tree sequent otherwise."""
    if any(tok == "|" for tok, _ in tokenize(text)):
        return parse_stoup_sequent(text)
    return parse_tree_sequent(text)
