"""Skew monoidal bi-closed categories: the axiomatic calculus and its link
to the tree calculus.

Axiomatic derivations prove arrows ``A |- B``.  ``a2g`` turns one into a tree
derivation of ``A |- B`` (composition goes through admissible cut) and
``g2a`` turns a tree derivation of ``T |- C`` into an arrow ``T# |- C``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import lskt
from .lskt import TDerivation, TRule, check_tree, cut
from .report import CheckReport, Issue, MismatchError
from .syntax import (
    I, Arrow, Comma, CommaL, CommaR, Context, Formula, Hole, LolliL, LolliR,
    SemiL, SemiR, TensL, TensR, Tree, TreeSequent, find_context, flatten_sharp,
)


class ARule(str, Enum):
    ID = "id"
    COMP = "comp"
    TENS_L = "tensL"
    LOLLI_L = "lolliL"
    LOLLI_R = "lolliR"
    LAMBDA = "lambda"
    RHO = "rho"
    ALPHA = "alpha"
    GAMMA = "gamma"
    GAMMA_INV = "gamma-1"
    PI = "pi"
    PI_INV = "pi-1"
    PI_R = "piR"
    PI_R_INV = "piR-1"


AXIOMS = frozenset({ARule.ID, ARule.LAMBDA, ARule.RHO, ARule.ALPHA, ARule.GAMMA, ARule.GAMMA_INV})


@dataclass(frozen=True)
class ADerivation:
    conclusion: Arrow
    rule: ARule
    premises: tuple["ADerivation", ...] = ()

    @property
    def source(self) -> Formula:
        return self.conclusion.source

    @property
    def target(self) -> Formula:
        return self.conclusion.target

    def nodes(self) -> int:
        return 1 + sum(p.nodes() for p in self.premises)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


def _axiom(rule, src, tgt):
    return ADerivation(Arrow(src, tgt), rule)


def id_(a):
    return _axiom(ARule.ID, a, a)


def lam(a):
    return _axiom(ARule.LAMBDA, TensL(I, a), a)


def rho(a):
    return _axiom(ARule.RHO, a, TensL(a, I))


def alpha(a, b, c):
    return _axiom(ARule.ALPHA, TensL(TensL(a, b), c), TensL(a, TensL(b, c)))


def gamma(a, b):
    return _axiom(ARule.GAMMA, TensL(a, b), TensR(b, a))


def gamma_inv(a, b):
    return _axiom(ARule.GAMMA_INV, TensR(a, b), TensL(b, a))


def comp(f: ADerivation, g: ADerivation) -> ADerivation:
    """``f : A |- B`` then ``g : B |- C``."""
    if f.target != g.source:
        raise MismatchError(f"comp: {f.conclusion} does not compose with {g.conclusion}")
    return ADerivation(Arrow(f.source, g.target), ARule.COMP, (f, g))


def tens(f: ADerivation, g: ADerivation) -> ADerivation:
    return ADerivation(Arrow(TensL(f.source, g.source), TensL(f.target, g.target)), ARule.TENS_L, (f, g))


def lolli(f: ADerivation, g: ADerivation) -> ADerivation:
    """``f : C |- A`` and ``g : B |- D`` give ``A -oL B |- C -oL D``."""
    return ADerivation(Arrow(LolliL(f.target, g.source), LolliL(f.source, g.target)), ARule.LOLLI_L, (f, g))


def rlolli(f: ADerivation, g: ADerivation) -> ADerivation:
    return ADerivation(Arrow(LolliR(f.target, g.source), LolliR(f.source, g.target)), ARule.LOLLI_R, (f, g))


def pi(f: ADerivation) -> ADerivation:
    """``A *L B |- C`` to ``A |- B -oL C``."""
    if not isinstance(f.source, TensL):
        raise MismatchError("pi: source must be a *L formula")
    a, b = f.source.left, f.source.right
    return ADerivation(Arrow(a, LolliL(b, f.target)), ARule.PI, (f,))


def pi_inv(f: ADerivation) -> ADerivation:
    if not isinstance(f.target, LolliL):
        raise MismatchError("pi-1: target must be a -oL formula")
    t = f.target
    return ADerivation(Arrow(TensL(f.source, t.arg), t.res), ARule.PI_INV, (f,))


def pi_r(f: ADerivation) -> ADerivation:
    if not isinstance(f.source, TensR):
        raise MismatchError("piR: source must be a *R formula")
    a, b = f.source.left, f.source.right
    return ADerivation(Arrow(a, LolliR(b, f.target)), ARule.PI_R, (f,))


def pi_r_inv(f: ADerivation) -> ADerivation:
    if not isinstance(f.target, LolliR):
        raise MismatchError("piR-1: target must be a -oR formula")
    t = f.target
    return ADerivation(Arrow(TensR(f.source, t.arg), t.res), ARule.PI_R_INV, (f,))


_BUILD = {
    ARule.COMP: comp, ARule.TENS_L: tens, ARule.LOLLI_L: lolli, ARule.LOLLI_R: rlolli,
    ARule.PI: pi, ARule.PI_INV: pi_inv, ARule.PI_R: pi_r, ARule.PI_R_INV: pi_r_inv,
}
_ARITY = {ARule.COMP: 2, ARule.TENS_L: 2, ARule.LOLLI_L: 2, ARule.LOLLI_R: 2}


def _axiom_instance(rule: ARule, src: Formula) -> Optional[ADerivation]:
    """The unique instance of an axiom with the given source, if any."""
    if rule is ARule.ID:
        return id_(src)
    if rule is ARule.RHO:
        return rho(src)
    if rule is ARule.LAMBDA and isinstance(src, TensL) and src.left == I:
        return lam(src.right)
    if rule is ARule.ALPHA and isinstance(src, TensL) and isinstance(src.left, TensL):
        return alpha(src.left.left, src.left.right, src.right)
    if rule is ARule.GAMMA and isinstance(src, TensL):
        return gamma(src.left, src.right)
    if rule is ARule.GAMMA_INV and isinstance(src, TensR):
        return gamma_inv(src.left, src.right)
    return None


def check_a(d: ADerivation) -> CheckReport:
    report = CheckReport()

    def walk(node: ADerivation, path):
        report.nodes += 1
        msg = None
        if node.rule in AXIOMS:
            inst = _axiom_instance(node.rule, node.source)
            if node.premises:
                msg = "axioms take no premises"
            elif inst is None or inst.conclusion != node.conclusion:
                msg = f"{node.conclusion} is not an instance"
        else:
            want = _ARITY.get(node.rule, 1)
            if len(node.premises) != want:
                msg = f"expected {want} premises, got {len(node.premises)}"
            else:
                try:
                    rebuilt = _BUILD[node.rule](*node.premises)
                    if rebuilt.conclusion != node.conclusion:
                        msg = f"premises give {rebuilt.conclusion}"
                except MismatchError as e:
                    msg = str(e)
        if msg is not None:
            report.issues.append(Issue(path, node.rule.value, msg))
        for i, p in enumerate(node.premises):
            walk(p, path + (i,))

    walk(d, ())
    return report


# ---------------------------------------------------------------------------
# Derived morphisms


def derived_tensR(f: ADerivation, g: ADerivation) -> ADerivation:
    """``f *R g`` as ``gamma . (g *L f) . gamma^-1``."""
    a, c = f.source, g.source
    b, d = f.target, g.target
    return comp(gamma_inv(a, c), comp(tens(g, f), gamma(d, b)))


def lam_r(a: Formula) -> ADerivation:
    """``A |- I *R A``."""
    return comp(rho(a), gamma(a, I))


def rho_r(a: Formula) -> ADerivation:
    """``A *R I |- A``."""
    return comp(gamma_inv(a, I), lam(a))


def alpha_r(a: Formula, b: Formula, c: Formula) -> ADerivation:
    """``A *R (B *R C) |- (A *R B) *R C``."""
    steps = [
        gamma_inv(a, TensR(b, c)),
        tens(gamma_inv(b, c), id_(a)),
        alpha(c, b, a),
        tens(id_(c), gamma(b, a)),
        gamma(c, TensR(a, b)),
    ]
    d = steps[-1]
    for s in reversed(steps[:-1]):
        d = comp(s, d)
    return d


def derived_right_structurals(a: Formula, b: Formula, c: Formula) -> dict[str, ADerivation]:
    return {"lambdaR": lam_r(a), "rhoR": rho_r(a), "alphaR": alpha_r(a, b, c)}


# Equation schemas of the congruence on axiomatic derivations.  Shipped as
# data only; nothing here decides equality of derivations.
EQUATIONS: dict[str, tuple[str, ...]] = {
    "category laws": ("id . f = f", "f = f . id", "(f . g) . h = f . (g . h)"),
    "*L functorial": ("id *L id = id", "(h . f) *L (k . g) = (h *L k) . (f *L g)"),
    "-oL functorial": ("id -oL id = id", "(f . h) -oL (k . g) = (h -oL k) . (f -oL g)"),
    "-oR functorial": ("id -oR id = id", "(f . h) -oR (k . g) = (h -oR k) . (f -oR g)"),
    "lambda, rho, alpha natural": (
        "lambda . (id *L f) = f . lambda",
        "rho . f = (f *L id) . rho",
        "alpha . ((f *L g) *L h) = (f *L (g *L h)) . alpha",
    ),
    "Mac Lane axioms": (
        "lambda . rho = id",
        "id = (id *L lambda) . alpha . (rho *L id)",
        "lambda . alpha = lambda *L id",
        "alpha . rho = id *L rho",
        "alpha . alpha = (id *L alpha) . alpha . (alpha *L id)",
    ),
    "gamma isomorphism": ("gamma . gamma^-1 = id", "gamma^-1 . gamma = id"),
    "pi natural": (
        "pi f . g = pi (f . (g *L id))",
        "pi (f . g) = (id -oL f) . pi g",
        "pi (id *L f) = (g -oL id) . pi id",
        "piR (id *R f) = (g -oR id) . piR id",
        "piR f . g = piR (f . (g *R id))",
        "piR (f . g) = (id -oR f) . piR g",
    ),
    "pi isomorphism": (
        "pi (pi^-1 f) = f", "pi^-1 (pi f) = f",
        "piR (piR^-1 f) = f", "piR^-1 (piR f) = f",
    ),
}


def equation_table() -> str:
    lines = []
    for name, eqs in EQUATIONS.items():
        for e in eqs:
            lines.append(f"{name:28} {e}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Tree calculus: checking, cut, search and the macros mixing the two products


def check_bt(d: TDerivation) -> CheckReport:
    return check_tree(d, lskt.ALL_RULES)


def cut_bt(f: TDerivation, g: TDerivation, pos) -> TDerivation:
    for d in (f, g):
        rep = check_bt(d)
        if not rep.ok:
            raise MismatchError(f"cut_bt: premise does not check: {rep}")
    return cut(f, g, pos)


def prove_bt_bounded(s: TreeSequent, depth: int = 6) -> Optional[TDerivation]:
    """Sound, depth-bounded search in the full tree calculus."""
    return lskt.prove_bounded(s, depth, lskt.ALL_RULES)


def rtensl_prime(d: TDerivation, pos=()) -> TDerivation:
    """``T[A , B] |- C`` to ``T[B *R A] |- C``."""
    return lskt.rtensl(lskt.comm(d, pos), pos)


def rtensr_prime(d1: TDerivation, d2: TDerivation) -> TDerivation:
    """``T |- A`` and ``U |- B`` to ``U , T |- A *R B``."""
    return lskt.comm_inv(lskt.rtensr(d1, d2), ())


def rlollil_prime(d1: TDerivation, d2: TDerivation, pos=()) -> TDerivation:
    """``U |- A`` and ``T[B] |- C`` to ``T[U , A -oR B] |- C``."""
    return lskt.comm_inv(lskt.rlollil(d1, d2, pos), pos)


# ---------------------------------------------------------------------------
# Axiomatic to tree


def a2g(f: ADerivation) -> TDerivation:
    r = f.rule
    src = f.source
    if r is ARule.ID:
        return lskt.ax(src)
    if r is ARule.COMP:
        return cut(a2g(f.premises[0]), a2g(f.premises[1]), ())
    if r is ARule.TENS_L:
        return lskt.tensl(lskt.tensr(a2g(f.premises[0]), a2g(f.premises[1])))
    if r is ARule.LOLLI_L:
        return lskt.lollir(lskt.lollil(a2g(f.premises[0]), a2g(f.premises[1])))
    if r is ARule.LOLLI_R:
        return lskt.rlollir(lskt.rlollil(a2g(f.premises[0]), a2g(f.premises[1])))
    if r is ARule.LAMBDA:
        return lskt.tensl(lskt.il(lskt.unitl(lskt.ax(f.target)), (0,)))
    if r is ARule.RHO:
        return lskt.unitr(lskt.tensr(lskt.ax(src), lskt.ir()))
    if r is ARule.ALPHA:
        a, b, c = src.left.left, src.left.right, src.right
        d = lskt.tensr(lskt.ax(a), lskt.tensr(lskt.ax(b), lskt.ax(c)))
        return lskt.tensl(lskt.tensl(lskt.assoc(d), (0,)))
    if r is ARule.GAMMA:
        d = lskt.rtensr(lskt.ax(src.right), lskt.ax(src.left))
        return lskt.tensl(lskt.comm_inv(d))
    if r is ARule.GAMMA_INV:
        d = lskt.tensr(lskt.ax(src.right), lskt.ax(src.left))
        return lskt.rtensl(lskt.comm(d))
    if r is ARule.PI:
        inner = f.premises[0].source
        unfolded = lskt.tensr(lskt.ax(inner.left), lskt.ax(inner.right))
        return lskt.lollir(cut(unfolded, a2g(f.premises[0]), ()))
    if r is ARule.PI_R:
        inner = f.premises[0].source
        unfolded = lskt.rtensr(lskt.ax(inner.left), lskt.ax(inner.right))
        return lskt.rlollir(cut(unfolded, a2g(f.premises[0]), ()))
    if r is ARule.PI_INV:
        return lskt.tensl(lskt.lollir_inverse(a2g(f.premises[0])))
    if r is ARule.PI_R_INV:
        return lskt.rtensl(lskt.rlollir_inverse(a2g(f.premises[0])))
    raise MismatchError(f"a2g: unknown rule {r}")


# ---------------------------------------------------------------------------
# Tree to axiomatic


def lift(ctx: Context, h: ADerivation) -> ADerivation:
    """From ``X |- Y`` build ``T[X]# |- T[Y]#`` by functoriality."""
    if isinstance(ctx, Hole):
        return h
    if isinstance(ctx, CommaL):
        return tens(lift(ctx.c, h), id_(flatten_sharp(ctx.r)))
    if isinstance(ctx, CommaR):
        return tens(id_(flatten_sharp(ctx.l)), lift(ctx.c, h))
    if isinstance(ctx, SemiL):
        return derived_tensR(lift(ctx.c, h), id_(flatten_sharp(ctx.r)))
    if isinstance(ctx, SemiR):
        return derived_tensR(id_(flatten_sharp(ctx.l)), lift(ctx.c, h))
    raise TypeError(ctx)


def _local(f: TDerivation, v: Tree) -> ADerivation:
    """The arrow ``V# |- V'#`` for the subtree rewritten by a left rule."""
    r = f.rule
    sh = flatten_sharp
    if r is TRule.ASSOC:
        return alpha(sh(v.l.l), sh(v.l.r), sh(v.r))
    if r is TRule.RASSOC:
        return alpha_r(sh(v.l), sh(v.r.l), sh(v.r.r))
    if r is TRule.UNIT_L:
        return lam(sh(v.r))
    if r is TRule.UNIT_R:
        return rho(sh(v))
    if r is TRule.RUNIT_L:
        return rho_r(sh(v.l))
    if r is TRule.RUNIT_R:
        return lam_r(sh(v))
    if r is TRule.COMM:
        return gamma_inv(sh(v.l), sh(v.r))
    if r is TRule.COMM_INV:
        return gamma(sh(v.l), sh(v.r))
    if r is TRule.LOLLI_L:
        fl = v.l.f
        return comp(tens(id_(fl), g2a(f.premises[0])), pi_inv(id_(fl)))
    if r is TRule.RLOLLI_L:
        fl = v.l.f
        return comp(derived_tensR(id_(fl), g2a(f.premises[0])), pi_r_inv(id_(fl)))
    raise MismatchError(f"g2a: {r.value} is not a left rule")


def g2a(f: TDerivation) -> ADerivation:
    r = f.rule
    if r is TRule.AX:
        return id_(f.succedent)
    if r is TRule.IR:
        return id_(I)
    if r in (TRule.IL, TRule.TENS_L, TRule.RTENS_L):
        return g2a(f.premises[0])
    if r is TRule.TENS_R:
        return tens(g2a(f.premises[0]), g2a(f.premises[1]))
    if r is TRule.RTENS_R:
        return derived_tensR(g2a(f.premises[0]), g2a(f.premises[1]))
    if r is TRule.LOLLI_R:
        return pi(g2a(f.premises[0]))
    if r is TRule.RLOLLI_R:
        return pi_r(g2a(f.premises[0]))
    ctx, v = find_context(f.antecedent, f.pos)
    return comp(lift(ctx, _local(f, v)), g2a(f.premises[-1]))
