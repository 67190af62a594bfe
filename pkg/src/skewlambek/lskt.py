"""Tree-antecedent sequent calculi.

The engine here covers every rule of the bi-closed tree calculus; LSkT is the
sub-calculus with only commas and the left-skew connectives, selected by
:data:`LSKT_RULES`.  Left and structural rules carry the path of the subtree
they rewrite.  That path is the same in the conclusion and the premise, so
rebuilding a node after changing its premises never needs re-inference.

Orientation of the structural rules, premise over conclusion::

    assoc    T[U0,(U1,U2)]   /  T[(U0,U1),U2]
    unitL    T[U]            /  T[-,U]
    unitR    T[U,-]          /  T[U]
    rassoc   T[(U0;U1);U2]   /  T[U0;(U1;U2)]
    runitL   T[U]            /  T[U;-]
    runitR   T[-;U]          /  T[U]
    comm     T[U0,U1]        /  T[U1;U0]
    comm-1   T[U1;U0]        /  T[U0,U1]
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional

from .report import CheckReport, Issue, MismatchError
from .syntax import (
    EMPTY, I, Comma, Empty, FragmentError, Formula, Leaf, LolliL, LolliR, Path,
    PathError, Semi, TensL, TensR, Tree, TreeSequent, Unit, in_lsk, positions,
    replace, subtree, tree_in_lsk,
)


class TRule(str, Enum):
    AX = "ax"
    IR = "IR"
    IL = "IL"
    TENS_L = "tensL"
    TENS_R = "tensR"
    LOLLI_L = "lolliL"
    LOLLI_R = "lolliR"
    ASSOC = "assoc"
    UNIT_L = "unitL"
    UNIT_R = "unitR"
    # right-skew connectives and structure
    RTENS_L = "rtensL"
    RTENS_R = "rtensR"
    RLOLLI_L = "rlolliL"
    RLOLLI_R = "rlolliR"
    RASSOC = "rassoc"
    RUNIT_L = "runitL"
    RUNIT_R = "runitR"
    COMM = "comm"
    COMM_INV = "comm-1"


LSKT_RULES = frozenset({
    TRule.AX, TRule.IR, TRule.IL, TRule.TENS_L, TRule.TENS_R, TRule.LOLLI_L,
    TRule.LOLLI_R, TRule.ASSOC, TRule.UNIT_L, TRule.UNIT_R,
})
ALL_RULES = frozenset(TRule)

POSITIONED = frozenset({
    TRule.IL, TRule.TENS_L, TRule.LOLLI_L, TRule.ASSOC, TRule.UNIT_L, TRule.UNIT_R,
    TRule.RTENS_L, TRule.RLOLLI_L, TRule.RASSOC, TRule.RUNIT_L, TRule.RUNIT_R,
    TRule.COMM, TRule.COMM_INV,
})
RIGHT_RULES = frozenset({
    TRule.IR, TRule.TENS_R, TRule.LOLLI_R, TRule.RTENS_R, TRule.RLOLLI_R,
})
TWO_PREMISE = frozenset({TRule.TENS_R, TRule.RTENS_R, TRule.LOLLI_L, TRule.RLOLLI_L})


@dataclass(frozen=True)
class TDerivation:
    conclusion: TreeSequent
    rule: TRule
    premises: tuple["TDerivation", ...] = ()
    pos: Optional[Path] = None

    @property
    def antecedent(self) -> Tree:
        return self.conclusion.antecedent

    @property
    def succedent(self) -> Formula:
        return self.conclusion.succedent

    def nodes(self) -> int:
        return 1 + sum(p.nodes() for p in self.premises)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


BiTDerivation = TDerivation


# ---------------------------------------------------------------------------
# Local rewrites for one-premise left rules.  ``up`` maps the conclusion
# subtree to the premise subtree, ``down`` the other way; both return None
# when the subtree has the wrong shape.

def _up_il(t):
    return EMPTY if t == Leaf(I) else None


def _down_il(t):
    return Leaf(I) if isinstance(t, Empty) else None


def _up_tens(node, conn):
    def up(t):
        if isinstance(t, Leaf) and isinstance(t.f, conn):
            return node(Leaf(t.f.left), Leaf(t.f.right))
        return None
    return up


def _down_tens(node, conn):
    def down(t):
        if isinstance(t, node) and isinstance(t.l, Leaf) and isinstance(t.r, Leaf):
            return Leaf(conn(t.l.f, t.r.f))
        return None
    return down


def _up_assoc(t):
    if isinstance(t, Comma) and isinstance(t.l, Comma):
        return Comma(t.l.l, Comma(t.l.r, t.r))
    return None


def _down_assoc(t):
    if isinstance(t, Comma) and isinstance(t.r, Comma):
        return Comma(Comma(t.l, t.r.l), t.r.r)
    return None


def _up_rassoc(t):
    if isinstance(t, Semi) and isinstance(t.r, Semi):
        return Semi(Semi(t.l, t.r.l), t.r.r)
    return None


def _down_rassoc(t):
    if isinstance(t, Semi) and isinstance(t.l, Semi):
        return Semi(t.l.l, Semi(t.l.r, t.r))
    return None


def _up_unitl(t):
    return t.r if isinstance(t, Comma) and isinstance(t.l, Empty) else None


def _down_unitl(t):
    return Comma(EMPTY, t)


def _up_unitr(t):
    return Comma(t, EMPTY)


def _down_unitr(t):
    return t.l if isinstance(t, Comma) and isinstance(t.r, Empty) else None


def _up_runitl(t):
    return t.l if isinstance(t, Semi) and isinstance(t.r, Empty) else None


def _down_runitl(t):
    return Semi(t, EMPTY)


def _up_runitr(t):
    return Semi(EMPTY, t)


def _down_runitr(t):
    return t.r if isinstance(t, Semi) and isinstance(t.l, Empty) else None


def _up_comm(t):
    return Comma(t.r, t.l) if isinstance(t, Semi) else None


def _down_comm(t):
    return Semi(t.r, t.l) if isinstance(t, Comma) else None


LOCAL: dict[TRule, tuple[Callable, Callable]] = {
    TRule.IL: (_up_il, _down_il),
    TRule.TENS_L: (_up_tens(Comma, TensL), _down_tens(Comma, TensL)),
    TRule.RTENS_L: (_up_tens(Semi, TensR), _down_tens(Semi, TensR)),
    TRule.ASSOC: (_up_assoc, _down_assoc),
    TRule.RASSOC: (_up_rassoc, _down_rassoc),
    TRule.UNIT_L: (_up_unitl, _down_unitl),
    TRule.UNIT_R: (_up_unitr, _down_unitr),
    TRule.RUNIT_L: (_up_runitl, _down_runitl),
    TRule.RUNIT_R: (_up_runitr, _down_runitr),
    TRule.COMM: (_up_comm, _down_comm),
    TRule.COMM_INV: (_down_comm, _up_comm),
}

_LOLLI_LEFT = {TRule.LOLLI_L: (Comma, LolliL), TRule.RLOLLI_L: (Semi, LolliR)}
_RIGHT_BIN = {TRule.TENS_R: (Comma, TensL), TRule.RTENS_R: (Semi, TensR)}
_RIGHT_LOLLI = {TRule.LOLLI_R: (Comma, LolliL), TRule.RLOLLI_R: (Semi, LolliR)}


# ---------------------------------------------------------------------------
# Building nodes from premises


def ax(a: Formula) -> TDerivation:
    return TDerivation(TreeSequent(Leaf(a), a), TRule.AX)


def ir() -> TDerivation:
    return TDerivation(TreeSequent(EMPTY, I), TRule.IR)


def rebuild(rule: TRule, pos: Optional[Path], premises: Iterable[TDerivation]) -> TDerivation:
    """The node for ``rule`` whose conclusion is computed from ``premises``."""
    ps = tuple(premises)
    if rule in LOCAL:
        (d,) = ps
        try:
            sub = subtree(d.antecedent, pos)
        except PathError as e:
            raise MismatchError(f"{rule.value}: {e}") from None
        new = LOCAL[rule][1](sub)
        if new is None:
            raise MismatchError(f"{rule.value} does not apply at {pos} in the premise")
        ant = replace(d.antecedent, pos, new)
        return TDerivation(TreeSequent(ant, d.succedent), rule, ps, tuple(pos))
    if rule in _LOLLI_LEFT:
        node, conn = _LOLLI_LEFT[rule]
        d1, d2 = ps
        try:
            sub = subtree(d2.antecedent, pos)
        except PathError as e:
            raise MismatchError(f"{rule.value}: {e}") from None
        if not isinstance(sub, Leaf):
            raise MismatchError(f"{rule.value}: no formula at {pos} in the right premise")
        new = node(Leaf(conn(d1.succedent, sub.f)), d1.antecedent)
        ant = replace(d2.antecedent, pos, new)
        return TDerivation(TreeSequent(ant, d2.succedent), rule, ps, tuple(pos))
    if rule in _RIGHT_BIN:
        node, conn = _RIGHT_BIN[rule]
        d1, d2 = ps
        s = TreeSequent(node(d1.antecedent, d2.antecedent), conn(d1.succedent, d2.succedent))
        return TDerivation(s, rule, ps)
    if rule in _RIGHT_LOLLI:
        node, conn = _RIGHT_LOLLI[rule]
        (d,) = ps
        ant = d.antecedent
        if not (isinstance(ant, node) and isinstance(ant.r, Leaf)):
            raise MismatchError(f"{rule.value}: premise antecedent must end in a formula")
        return TDerivation(TreeSequent(ant.l, conn(ant.r.f, d.succedent)), rule, ps)
    if rule is TRule.AX:
        raise MismatchError("ax has no premises; use ax(A)")
    if rule is TRule.IR:
        return ir()
    raise MismatchError(f"unknown rule {rule}")


def il(d, pos=()):
    return rebuild(TRule.IL, pos, [d])


def tensl(d, pos=()):
    return rebuild(TRule.TENS_L, pos, [d])


def tensr(d1, d2):
    return rebuild(TRule.TENS_R, None, [d1, d2])


def lollil(d1, d2, pos=()):
    return rebuild(TRule.LOLLI_L, pos, [d1, d2])


def lollir(d):
    return rebuild(TRule.LOLLI_R, None, [d])


def assoc(d, pos=()):
    return rebuild(TRule.ASSOC, pos, [d])


def unitl(d, pos=()):
    return rebuild(TRule.UNIT_L, pos, [d])


def unitr(d, pos=()):
    return rebuild(TRule.UNIT_R, pos, [d])


def rtensl(d, pos=()):
    return rebuild(TRule.RTENS_L, pos, [d])


def rtensr(d1, d2):
    return rebuild(TRule.RTENS_R, None, [d1, d2])


def rlollil(d1, d2, pos=()):
    return rebuild(TRule.RLOLLI_L, pos, [d1, d2])


def rlollir(d):
    return rebuild(TRule.RLOLLI_R, None, [d])


def rassoc(d, pos=()):
    return rebuild(TRule.RASSOC, pos, [d])


def runitl(d, pos=()):
    return rebuild(TRule.RUNIT_L, pos, [d])


def runitr(d, pos=()):
    return rebuild(TRule.RUNIT_R, pos, [d])


def comm(d, pos=()):
    return rebuild(TRule.COMM, pos, [d])


def comm_inv(d, pos=()):
    return rebuild(TRule.COMM_INV, pos, [d])


# ---------------------------------------------------------------------------
# Reading rules upwards


def premise_sequents(rule: TRule, pos: Optional[Path], s: TreeSequent) -> Optional[list[TreeSequent]]:
    """Premises of ``rule`` at ``pos`` with conclusion ``s``; None if it does not apply."""
    t, c = s.antecedent, s.succedent
    if rule is TRule.AX:
        return [] if t == Leaf(c) else None
    if rule is TRule.IR:
        return [] if isinstance(t, Empty) and c == I else None
    if rule in LOCAL or rule in _LOLLI_LEFT:
        try:
            sub = subtree(t, pos)
        except PathError:
            return None
        if rule in LOCAL:
            new = LOCAL[rule][0](sub)
            return None if new is None else [TreeSequent(replace(t, pos, new), c)]
        node, conn = _LOLLI_LEFT[rule]
        if not (isinstance(sub, node) and isinstance(sub.l, Leaf) and isinstance(sub.l.f, conn)):
            return None
        f = sub.l.f
        return [TreeSequent(sub.r, f.arg), TreeSequent(replace(t, pos, Leaf(f.res)), c)]
    if rule in _RIGHT_BIN:
        node, conn = _RIGHT_BIN[rule]
        if not (isinstance(t, node) and isinstance(c, conn)):
            return None
        return [TreeSequent(t.l, c.left), TreeSequent(t.r, c.right)]
    if rule in _RIGHT_LOLLI:
        node, conn = _RIGHT_LOLLI[rule]
        if not isinstance(c, conn):
            return None
        return [TreeSequent(node(t, Leaf(c.arg)), c.res)]
    return None


# ---------------------------------------------------------------------------
# Checking


def check_tree(d: TDerivation, rules: frozenset = ALL_RULES,
               fragment: Optional[Callable[[TreeSequent], bool]] = None,
               verified: Optional[dict] = None) -> CheckReport:
    """Validate every node of ``d``.

    ``verified`` maps ``id(node)`` to nodes already known to be valid, which
    are then skipped; nodes that pass are added.  It must only be shared
    between calls using the same ``rules`` and ``fragment``.
    """
    report = CheckReport()

    def walk(node: TDerivation, path: tuple[int, ...]) -> None:
        if verified is not None and id(node) in verified:
            return
        report.nodes += 1
        before = len(report.issues)
        msg = None
        if node.rule not in rules:
            msg = "rule not available in this calculus"
        elif (node.rule in POSITIONED) != (node.pos is not None):
            msg = "position missing" if node.rule in POSITIONED else "unexpected position"
        elif fragment is not None and not fragment(node.conclusion):
            msg = "sequent outside the calculus fragment"
        else:
            expected = premise_sequents(node.rule, node.pos, node.conclusion)
            actual = [p.conclusion for p in node.premises]
            if expected is None:
                msg = f"does not apply at {node.pos} to {node.conclusion}"
            elif expected != actual:
                shown = ", ".join(map(str, expected)) or "no premises"
                msg = f"expects premises [{shown}]"
        if msg is not None:
            report.issues.append(Issue(path, node.rule.value, msg))
        for i, p in enumerate(node.premises):
            walk(p, path + (i,))
        if verified is not None and len(report.issues) == before:
            verified[id(node)] = node

    walk(d, ())
    return report


def lsk_sequent(s: TreeSequent) -> bool:
    return tree_in_lsk(s.antecedent) and in_lsk(s.succedent)


def check_t(d: TDerivation, verified: Optional[dict] = None) -> CheckReport:
    """Validate ``d`` as an LSkT derivation."""
    return check_tree(d, LSKT_RULES, lsk_sequent, verified)


# ---------------------------------------------------------------------------
# Cut and the admissible inverse rules


def _trace(g: TDerivation, p: Path) -> Optional[tuple[int, Path]]:
    """Where the leaf at ``p`` in g's conclusion sits in g's premises.

    None means the leaf is principal in the last rule of g.
    """
    r, q = g.rule, g.pos
    if r is TRule.AX:
        return None
    if r in _RIGHT_BIN:
        return p[0], p[1:]
    if r in _RIGHT_LOLLI:
        return 0, (0,) + p
    n = len(q)
    inside = p[:n] == q
    rel = p[n:]
    if r in (TRule.IL, TRule.TENS_L, TRule.RTENS_L):
        return None if p == q else (0, p)
    if r in _LOLLI_LEFT:
        if not inside:
            return 1, p
        if rel == (0,):
            return None
        return 0, rel[1:]
    if not inside:
        return 0, p
    if r is TRule.ASSOC:
        mapped = {(0, 0): (0,), (0, 1): (1, 0), (1,): (1, 1)}
    elif r is TRule.RASSOC:
        mapped = {(0,): (0, 0), (1, 0): (0, 1), (1, 1): (1,)}
    elif r is TRule.UNIT_L:
        mapped = {(1,): ()}
    elif r is TRule.UNIT_R:
        mapped = {(): (0,)}
    elif r is TRule.RUNIT_L:
        mapped = {(0,): ()}
    elif r is TRule.RUNIT_R:
        mapped = {(): (1,)}
    else:  # COMM, COMM_INV
        mapped = {(0,): (1,), (1,): (0,)}
    for k in sorted(mapped, key=len, reverse=True):
        if rel[:len(k)] == k:
            return 0, q + mapped[k] + rel[len(k):]
    raise MismatchError(f"{r.value}: no formula of the conclusion at {p}")


def cut(f: TDerivation, g: TDerivation, pos: Path, memo: Optional[dict] = None) -> TDerivation:
    """From ``U |- A`` and ``T[A] |- C`` (A at ``pos``) build a cut-free ``T[U] |- C``.

    ``memo`` may be shared across calls to reuse results for sub-derivations;
    it keeps references to its keys, so identities stay valid.
    """
    pos = tuple(pos)
    try:
        leaf = subtree(g.antecedent, pos)
    except PathError as e:
        raise MismatchError(f"cut: {e}") from None
    if leaf != Leaf(f.succedent):
        raise MismatchError(f"cut: {g.conclusion} has no {f.succedent} at {pos}")
    return _cut(f, g, pos, memo)


def _cut(f: TDerivation, g: TDerivation, pos: Path, memo: Optional[dict] = None) -> TDerivation:
    if memo is None:
        return _cut_step(f, g, pos, None)
    key = (id(f), id(g), pos)
    hit = memo.get(key)
    if hit is None:
        hit = memo[key] = (f, g, _cut_step(f, g, pos, memo))
    return hit[2]


def _cut_step(f: TDerivation, g: TDerivation, pos: Path, memo) -> TDerivation:
    r = f.rule
    if r is TRule.AX:
        return g
    if r in _LOLLI_LEFT:
        return rebuild(r, pos + f.pos, [f.premises[0], _cut(f.premises[1], g, pos, memo)])
    if r in LOCAL:
        return rebuild(r, pos + f.pos, [_cut(f.premises[0], g, pos, memo)])
    # f ends in a right rule: its succedent is principal
    if g.rule is TRule.AX:
        return f
    where = _trace(g, pos)
    if where is not None:
        i, p = where
        ps = list(g.premises)
        ps[i] = _cut(f, ps[i], p, memo)
        return rebuild(g.rule, g.pos, ps)
    gr = g.rule
    if gr is TRule.IL and r is TRule.IR:
        return g.premises[0]
    if (gr, r) in ((TRule.TENS_L, TRule.TENS_R), (TRule.RTENS_L, TRule.RTENS_R)):
        f1, f2 = f.premises
        h = _cut(f2, g.premises[0], pos + (1,), memo)
        return _cut(f1, h, pos + (0,), memo)
    if (gr, r) in ((TRule.LOLLI_L, TRule.LOLLI_R), (TRule.RLOLLI_L, TRule.RLOLLI_R)):
        g1, g2 = g.premises
        q = g.pos
        h = _cut(f.premises[0], g2, q, memo)  # T[(U, A)] |- C
        return _cut(g1, h, q + (1,), memo)
    raise MismatchError(f"cut: {r.value} against principal {gr.value}")


def cut_t(f: TDerivation, g: TDerivation, pos: Path) -> TDerivation:
    """Cut restricted to LSkT derivations."""
    for d in (f, g):
        rep = check_t(d)
        if not rep.ok:
            raise MismatchError(f"cut_t: premise is not an LSkT derivation: {rep}")
    return cut(f, g, pos)


def il_inverse(d: TDerivation, pos: Path) -> TDerivation:
    """From ``T[I] |- C`` build ``T[-] |- C``."""
    pos = tuple(pos)
    try:
        leaf = subtree(d.antecedent, pos)
    except PathError as e:
        raise MismatchError(f"IL inverse: {e}") from None
    if leaf != Leaf(I):
        raise MismatchError(f"IL inverse: no I at {pos} in {d.conclusion}")
    return _cut(ir(), d, pos)


def tensl_inverse(d: TDerivation, pos: Path) -> TDerivation:
    """From ``T[A *L B] |- C`` build ``T[A , B] |- C``."""
    sub = subtree(d.antecedent, pos)
    if not (isinstance(sub, Leaf) and isinstance(sub.f, TensL)):
        raise MismatchError(f"tensL inverse: no *L formula at {pos}")
    return cut(tensr(ax(sub.f.left), ax(sub.f.right)), d, pos)


def rtensl_inverse(d: TDerivation, pos: Path) -> TDerivation:
    """From ``T[A *R B] |- C`` build ``T[A ; B] |- C``."""
    sub = subtree(d.antecedent, pos)
    if not (isinstance(sub, Leaf) and isinstance(sub.f, TensR)):
        raise MismatchError(f"rtensL inverse: no *R formula at {pos}")
    return cut(rtensr(ax(sub.f.left), ax(sub.f.right)), d, pos)


def lollir_inverse(d: TDerivation) -> TDerivation:
    """From ``T |- A -oL B`` build ``T , A |- B``."""
    c = d.succedent
    if not isinstance(c, LolliL):
        raise MismatchError("lolliR inverse: succedent is not -oL")
    return cut(d, lollil(ax(c.arg), ax(c.res)), (0,))


def rlollir_inverse(d: TDerivation) -> TDerivation:
    """From ``T |- A -oR B`` build ``T ; A |- B``."""
    c = d.succedent
    if not isinstance(c, LolliR):
        raise MismatchError("rlolliR inverse: succedent is not -oR")
    return cut(d, rlollil(ax(c.arg), ax(c.res)), (0,))


# ---------------------------------------------------------------------------
# Bounded backward search
#
# The search works on comma normal forms.  comm is invertible, so every
# semicolon U;V is eagerly read back as V,U.  On comma trees rassoc, runitL
# and runitR coincide with assoc, unitL and unitR, so only the left-skew
# structural rules are tried.  The right-skew rules are applied through comm-1
# (rtensR, rlolliL) or followed by comm (rtensL, rlolliR).  unitR is used only
# where IR can consume the empty leaf it introduces: as the right premise of a
# tensor rule or as the argument of lolliL.  Every returned derivation is an
# ordinary derivation in the full rule set.

Build = Callable[[list], TDerivation]


def _eager_step(s: TreeSequent, rules: frozenset) -> Optional[tuple[TreeSequent, Build]]:
    """An invertible step for ``s``, if any: (premise, builder)."""
    t, c = s.antecedent, s.succedent
    if isinstance(c, LolliL) and TRule.LOLLI_R in rules:
        return TreeSequent(Comma(t, Leaf(c.arg)), c.res), lambda ds: lollir(ds[0])
    if isinstance(c, LolliR) and TRule.RLOLLI_R in rules:
        return (TreeSequent(Comma(Leaf(c.arg), t), c.res),
                lambda ds: rlollir(comm(ds[0], ())))
    for p, u in positions(t):
        if isinstance(u, Semi) and TRule.COMM in rules:
            return (TreeSequent(replace(t, p, Comma(u.r, u.l)), c),
                    lambda ds, p=p: comm(ds[0], p))
        if not isinstance(u, Leaf):
            continue
        f = u.f
        if isinstance(f, Unit) and TRule.IL in rules:
            return TreeSequent(replace(t, p, EMPTY), c), lambda ds, p=p: il(ds[0], p)
        if isinstance(f, TensL) and TRule.TENS_L in rules:
            new = Comma(Leaf(f.left), Leaf(f.right))
            return TreeSequent(replace(t, p, new), c), lambda ds, p=p: tensl(ds[0], p)
        if isinstance(f, TensR) and TRule.RTENS_L in rules and TRule.COMM in rules:
            new = Comma(Leaf(f.right), Leaf(f.left))
            return (TreeSequent(replace(t, p, new), c),
                    lambda ds, p=p: rtensl(comm(ds[0], p), p))
    return None


def _candidates(s: TreeSequent, rules: frozenset) -> list[tuple[list[TreeSequent], Build]]:
    """Non-invertible steps for ``s``: (premises, builder) pairs."""
    t, c = s.antecedent, s.succedent
    out: list[tuple[list[TreeSequent], Build]] = []
    if t == Leaf(c):
        out.append(([], lambda ds: ax(c)))
    if isinstance(t, Empty) and isinstance(c, Unit):
        out.append(([], lambda ds: ir()))
    right = TRule.RTENS_R in rules and TRule.COMM_INV in rules
    if isinstance(c, TensL) and TRule.TENS_R in rules:
        if isinstance(t, Comma):
            out.append(([TreeSequent(t.l, c.left), TreeSequent(t.r, c.right)],
                        lambda ds: tensr(ds[0], ds[1])))
        if TRule.UNIT_R in rules:
            out.append(([TreeSequent(t, c.left), TreeSequent(EMPTY, c.right)],
                        lambda ds: unitr(tensr(ds[0], ds[1]), ())))
    if isinstance(c, TensR) and right:
        if isinstance(t, Comma):
            out.append(([TreeSequent(t.r, c.left), TreeSequent(t.l, c.right)],
                        lambda ds: comm_inv(rtensr(ds[0], ds[1]), ())))
        if TRule.UNIT_R in rules:
            out.append(([TreeSequent(EMPTY, c.left), TreeSequent(t, c.right)],
                        lambda ds: unitr(comm_inv(rtensr(ds[0], ds[1]), ()), ())))
    structural = []
    for p, u in positions(t):
        if isinstance(u, Leaf) and isinstance(u.f, LolliL) and TRule.LOLLI_L in rules \
                and TRule.UNIT_R in rules:
            rest = TreeSequent(replace(t, p, Leaf(u.f.res)), c)
            out.append(([TreeSequent(EMPTY, u.f.arg), rest],
                        lambda ds, p=p: unitr(lollil(ds[0], ds[1], p), p)))
        if not isinstance(u, Comma):
            continue
        l, r = u.l, u.r
        if isinstance(l, Leaf) and isinstance(l.f, LolliL) and TRule.LOLLI_L in rules:
            rest = TreeSequent(replace(t, p, Leaf(l.f.res)), c)
            out.append(([TreeSequent(r, l.f.arg), rest],
                        lambda ds, p=p: lollil(ds[0], ds[1], p)))
        if isinstance(r, Leaf) and isinstance(r.f, LolliR) and TRule.RLOLLI_L in rules \
                and TRule.COMM_INV in rules:
            rest = TreeSequent(replace(t, p, Leaf(r.f.res)), c)
            out.append(([TreeSequent(l, r.f.arg), rest],
                        lambda ds, p=p: comm_inv(rlollil(ds[0], ds[1], p), p)))
        if isinstance(l, Empty) and TRule.UNIT_L in rules:
            structural.append(([TreeSequent(replace(t, p, r), c)],
                               lambda ds, p=p: unitl(ds[0], p)))
        if isinstance(l, Comma) and TRule.ASSOC in rules:
            new = Comma(l.l, Comma(l.r, r))
            structural.append(([TreeSequent(replace(t, p, new), c)],
                               lambda ds, p=p: assoc(ds[0], p)))
    return out + structural


_UNBOUNDED = 1 << 30


class _Search:
    """Memoised depth-bounded search.

    Every step strictly decreases (connectives, tree size, left nesting), so
    the search space is finite; a failure that never hit the depth bound is
    final and memoised as such.
    """

    def __init__(self, rules: frozenset):
        self.rules = rules
        self.proved: dict[TreeSequent, TDerivation] = {}
        self.failed: dict[TreeSequent, int] = {}

    def run(self, s: TreeSequent, depth: int) -> tuple[Optional[TDerivation], bool]:
        """Returns (derivation or None, whether the depth bound cut something off)."""
        if s in self.proved:
            return self.proved[s], False
        if self.failed.get(s, -1) >= depth:
            return None, self.failed[s] < _UNBOUNDED
        step = _eager_step(s, self.rules)
        if step is not None:
            prem, build = step
            d, cut_off = self.run(prem, depth)
            return self._record(s, depth, build([d]) if d is not None else None, cut_off)
        if depth <= 0:
            return None, True
        cut_any = False
        for prems, build in _candidates(s, self.rules):
            found = []
            for ps in prems:
                d, cut_off = self.run(ps, depth - 1)
                cut_any |= cut_off
                if d is None:
                    break
                found.append(d)
            else:
                return self._record(s, depth, build(found), cut_any)
        return self._record(s, depth, None, cut_any)

    def _record(self, s, depth, result, cut_off):
        if result is not None:
            self.proved[s] = result
        else:
            self.failed[s] = max(depth if cut_off else _UNBOUNDED, self.failed.get(s, -1))
        return result, cut_off


def prove_bounded(s: TreeSequent, depth: int, rules: frozenset = ALL_RULES,
                  search: Optional[_Search] = None) -> Optional[TDerivation]:
    """Iterative deepening up to ``depth`` non-invertible steps.

    Passing the same ``search`` object to several calls shares its memo.
    """
    search = search if search is not None else _Search(rules)
    for k in range(depth + 1):
        d, cut_off = search.run(s, k)
        if d is not None or not cut_off:
            return d
    return None


def prove_t_bounded(s: TreeSequent, depth: int = 6) -> Optional[TDerivation]:
    """Sound, depth-bounded LSkT search.  Not a decision procedure."""
    if not lsk_sequent(s):
        raise FragmentError(f"{s} is outside the LSk fragment")
    return prove_bounded(s, depth, LSKT_RULES)
