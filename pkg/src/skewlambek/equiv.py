"""Translations between stoup derivations (LSkG) and tree derivations (LSkT).

``g2t`` sends ``S | G |- C`` to ``[[s(S) | G]] |- C``, where the tree is the
stoup formula (or ``I``) extended to the left by the context.  ``t2g`` sends
``T |- C`` to ``T* | |- C``.  Both are total on checked derivations and produce
checked derivations, so deciding LSkG decides LSkT.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import lskg, lskt
from .lskg import GDerivation, GRule
from .lskt import TDerivation, TRule
from .report import MismatchError
from .syntax import (
    Comma, CommaL, CommaR, Context, Empty, FragmentError, Hole, Leaf, StoupSequent,
    Tree, TreeSequent, encode, find_context, flatten_star, stoup_formula,
)


def subst_lift(ctx: Context, f: GDerivation) -> GDerivation:
    """From ``A | |- B`` build ``T[A]* | |- T[B]*`` for the context ``T``."""
    if f.stoup is None or f.context:
        raise MismatchError("subst_lift needs a derivation of A | |- B")
    if isinstance(ctx, Hole):
        return f
    if isinstance(ctx, CommaL):
        inner = subst_lift(ctx.c, f)
        r = flatten_star(ctx.r)
        return lskg.tensl(lskg.tensr(inner, lskg.pass_(lskg.ax(r))))
    if isinstance(ctx, CommaR):
        inner = subst_lift(ctx.c, f)
        l = flatten_star(ctx.l)
        return lskg.tensl(lskg.tensr(lskg.ax(l), lskg.pass_(inner)))
    raise FragmentError("semicolon in a left-skew context")


def _left_spine(n: int) -> tuple[int, ...]:
    return (0,) * n


def _graft(d: TDerivation, base: tuple[int, ...], n: int) -> TDerivation:
    """Turn ``T[(V, [[- | D]])]`` into ``T[[[V | D]]]`` where ``len(D) = n``.

    ``base`` addresses the comma node (V, [[- | D]]).
    """
    for k in range(n):
        d = lskt.assoc(d, base + _left_spine(k))
    return lskt.unitr(d, base + _left_spine(n))


def g2t(f: GDerivation) -> TDerivation:
    r = f.rule
    if r is GRule.AX:
        return lskt.ax(f.succedent)
    if r is GRule.IR:
        return lskt.il(lskt.ir(), ())
    if r is GRule.IL:
        return g2t(f.premises[0])
    if r is GRule.PASS:
        d = g2t(f.premises[0])
        p = _left_spine(len(f.premises[0].context))
        return lskt.il(lskt.unitl(d, p), p + (0,))
    if r is GRule.TENS_L:
        d = g2t(f.premises[0])
        return lskt.tensl(d, _left_spine(len(f.context)))
    if r is GRule.LOLLI_R:
        return lskt.lollir(g2t(f.premises[0]))
    if r is GRule.TENS_R:
        f1, f2 = f.premises
        n = len(f2.context)
        right = lskt.il_inverse(g2t(f2), _left_spine(n))
        return _graft(lskt.tensr(g2t(f1), right), (), n)
    if r is GRule.LOLLI_L:
        f1, f2 = f.premises
        m = len(f1.context)
        p0 = _left_spine(len(f2.context))
        arg = lskt.il_inverse(g2t(f1), _left_spine(m))
        return _graft(lskt.lollil(arg, g2t(f2), p0), p0, m)
    raise MismatchError(f"g2t: unknown rule {r}")


def g2t_sequent(s: StoupSequent) -> TreeSequent:
    return TreeSequent(encode(Leaf(stoup_formula(s.stoup)), s.context), s.succedent)


# local LSkG derivations V* | |- V'* for each left rule read downwards


def _assoc_local(a, b, c) -> GDerivation:
    inner = lskg.pass_(lskg.tensr(lskg.ax(b), lskg.pass_(lskg.ax(c))))
    return lskg.tensl(lskg.tensl(lskg.tensr(lskg.ax(a), inner)))


def _local(f: TDerivation, v: Tree) -> GDerivation:
    r = f.rule
    if r is TRule.ASSOC:
        return _assoc_local(flatten_star(v.l.l), flatten_star(v.l.r), flatten_star(v.r))
    if r is TRule.UNIT_L:
        return lskg.tensl(lskg.il(lskg.pass_(lskg.ax(flatten_star(v.r)))))
    if r is TRule.UNIT_R:
        return lskg.tensr(lskg.ax(flatten_star(v)), lskg.ir())
    if r is TRule.LOLLI_L:
        arg = lskg.pass_(t2g(f.premises[0]))
        return lskg.tensl(lskg.lollil(arg, lskg.ax(v.l.f.res)))
    raise FragmentError(f"{r.value} is not an LSkT rule")


def t2g(f: TDerivation) -> GDerivation:
    r = f.rule
    if r is TRule.AX:
        return lskg.ax(f.succedent)
    if r is TRule.IR:
        return lskg.il(lskg.ir())
    if r in (TRule.IL, TRule.TENS_L):
        return t2g(f.premises[0])
    if r is TRule.LOLLI_R:
        t_star = flatten_star(f.antecedent)
        a = f.succedent.arg
        d = lskg.scut(lskg.tensr(lskg.ax(t_star), lskg.pass_(lskg.ax(a))), t2g(f.premises[0]))
        return lskg.lollir(d)
    if r is TRule.TENS_R:
        f1, f2 = f.premises
        return lskg.tensl(lskg.tensr(t2g(f1), lskg.pass_(t2g(f2))))
    ctx, v = find_context(f.antecedent, f.pos)
    rest = f.premises[-1]
    return lskg.scut(subst_lift(ctx, _local(f, v)), t2g(rest))


def t2g_sequent(s: TreeSequent) -> StoupSequent:
    return StoupSequent(flatten_star(s.antecedent), (), s.succedent)


def _unfold(t: Tree) -> TDerivation:
    """Right rules only: ``T |- T*``."""
    if isinstance(t, Leaf):
        return lskt.ax(t.f)
    if isinstance(t, Empty):
        return lskt.ir()
    if isinstance(t, Comma):
        return lskt.tensr(_unfold(t.l), _unfold(t.r))
    raise FragmentError("semicolon in a left-skew tree")


@dataclass(frozen=True)
class Decision:
    derivable: bool
    witness: Optional[TDerivation] = None
    stoup_proof: Optional[GDerivation] = None

    def __bool__(self) -> bool:
        return self.derivable


def decide_lskt(s: TreeSequent) -> Decision:
    """Decide an LSkT sequent through LSkG search; witnesses are LSkT derivations."""
    if not lskt.lsk_sequent(s):
        raise FragmentError(f"{s} is outside the LSk fragment")
    g = lskg.prove_g(t2g_sequent(s))
    if g is None:
        return Decision(False)
    witness = lskt.cut(_unfold(s.antecedent), g2t(g), ())
    return Decision(True, witness, g)
