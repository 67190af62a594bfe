"""LSkG: the stoup sequent calculus for left skew monoidal closed categories.

Sequents are ``S | Gamma |- A``.  Left rules act only on the stoup; ``pass``
moves the head of the context into an empty stoup.  Cut is not a rule but two
total functions, :func:`scut` and :func:`ccut`, which rewrite a pair of
derivations into a single cut-free one.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from .report import CheckReport, Issue, MismatchError
from .syntax import (
    Formula, LolliL, StoupSequent, TensL, Unit, I, FragmentError, in_lsk, size,
)


class GRule(str, Enum):
    AX = "ax"
    IR = "IR"
    IL = "IL"
    TENS_L = "tensL"
    TENS_R = "tensR"
    LOLLI_L = "lolliL"
    LOLLI_R = "lolliR"
    PASS = "pass"


ARITY = {
    GRule.AX: 0, GRule.IR: 0, GRule.IL: 1, GRule.TENS_L: 1, GRule.PASS: 1,
    GRule.LOLLI_R: 1, GRule.TENS_R: 2, GRule.LOLLI_L: 2,
}


@dataclass(frozen=True)
class GDerivation:
    conclusion: StoupSequent
    rule: GRule
    premises: tuple["GDerivation", ...] = ()
    split: Optional[int] = None  # length of the context handed to the left premise

    @property
    def stoup(self) -> Optional[Formula]:
        return self.conclusion.stoup

    @property
    def context(self) -> tuple[Formula, ...]:
        return self.conclusion.context

    @property
    def succedent(self) -> Formula:
        return self.conclusion.succedent

    def nodes(self) -> int:
        return 1 + sum(p.nodes() for p in self.premises)

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


# ---------------------------------------------------------------------------
# Smart constructors: build the conclusion from the premises.


def ax(a: Formula) -> GDerivation:
    return GDerivation(StoupSequent(a, (), a), GRule.AX)


def ir() -> GDerivation:
    return GDerivation(StoupSequent(None, (), I), GRule.IR)


def il(d: GDerivation) -> GDerivation:
    if d.stoup is not None:
        raise MismatchError("IL needs an empty stoup in its premise")
    return GDerivation(StoupSequent(I, d.context, d.succedent), GRule.IL, (d,))


def tensl(d: GDerivation) -> GDerivation:
    if d.stoup is None or not d.context:
        raise MismatchError("tensL needs a stoup and a nonempty context")
    s = StoupSequent(TensL(d.stoup, d.context[0]), d.context[1:], d.succedent)
    return GDerivation(s, GRule.TENS_L, (d,))


def pass_(d: GDerivation) -> GDerivation:
    if d.stoup is None:
        raise MismatchError("pass needs a formula in the stoup of its premise")
    s = StoupSequent(None, (d.stoup,) + d.context, d.succedent)
    return GDerivation(s, GRule.PASS, (d,))


def lollir(d: GDerivation) -> GDerivation:
    if not d.context:
        raise MismatchError("lolliR needs a nonempty context in its premise")
    s = StoupSequent(d.stoup, d.context[:-1], LolliL(d.context[-1], d.succedent))
    return GDerivation(s, GRule.LOLLI_R, (d,))


def tensr(d1: GDerivation, d2: GDerivation) -> GDerivation:
    if d2.stoup is not None:
        raise MismatchError("tensR needs an empty stoup in its right premise")
    s = StoupSequent(d1.stoup, d1.context + d2.context, TensL(d1.succedent, d2.succedent))
    return GDerivation(s, GRule.TENS_R, (d1, d2), len(d1.context))


def lollil(d1: GDerivation, d2: GDerivation) -> GDerivation:
    if d1.stoup is not None or d2.stoup is None:
        raise MismatchError("lolliL needs premises - | G |- A and B | D |- C")
    s = StoupSequent(LolliL(d1.succedent, d2.stoup), d1.context + d2.context, d2.succedent)
    return GDerivation(s, GRule.LOLLI_L, (d1, d2), len(d1.context))


# ---------------------------------------------------------------------------
# Checking


def _node_issue(d: GDerivation) -> Optional[str]:
    rule, c, ps = d.rule, d.conclusion, d.premises
    if len(ps) != ARITY[rule]:
        return f"expected {ARITY[rule]} premises, got {len(ps)}"
    if rule is GRule.AX:
        if c.context or c.stoup != c.succedent:
            return "ax concludes A | |- A"
        return None
    if rule is GRule.IR:
        if c.stoup is not None or c.context or c.succedent != I:
            return "IR concludes - | |- I"
        return None
    if rule in (GRule.TENS_R, GRule.LOLLI_L):
        if d.split is None or not 0 <= d.split <= len(c.context):
            return f"split index {d.split} out of range"
    build = {
        GRule.IL: lambda: il(ps[0]),
        GRule.TENS_L: lambda: tensl(ps[0]),
        GRule.PASS: lambda: pass_(ps[0]),
        GRule.LOLLI_R: lambda: lollir(ps[0]),
        GRule.TENS_R: lambda: tensr(ps[0], ps[1]),
        GRule.LOLLI_L: lambda: lollil(ps[0], ps[1]),
    }[rule]
    try:
        expected = build()
    except MismatchError as e:
        return str(e)
    if expected.conclusion != c:
        return f"premises give {expected.conclusion}, node states {c}"
    if expected.split != d.split:
        return f"premises give split {expected.split}, node states {d.split}"
    return None


def check_g(d: GDerivation, lsk_only: bool = True) -> CheckReport:
    """Validate every node of ``d`` against its rule schema."""
    report = CheckReport()

    def walk(node: GDerivation, path: tuple[int, ...]) -> None:
        report.nodes += 1
        msg = _node_issue(node)
        if msg is None and lsk_only:
            c = node.conclusion
            fs = list(c.context) + [c.succedent] + ([c.stoup] if c.stoup is not None else [])
            if not all(in_lsk(f) for f in fs):
                msg = "formula outside the *L/-oL fragment"
        if msg is not None:
            report.issues.append(Issue(path, node.rule.value, msg))
        for i, p in enumerate(node.premises):
            walk(p, path + (i,))

    walk(d, ())
    return report


# ---------------------------------------------------------------------------
# Proof search


def measure(s: StoupSequent) -> int:
    """Strictly decreases from conclusion to every premise.

    Twice the total formula size, plus one for an empty stoup; the factor two
    makes IL (which trades the unit for an empty stoup) decrease as well.
    """
    total = sum(size(f) for f in s.context) + size(s.succedent)
    if s.stoup is None:
        return 2 * total + 1
    return 2 * (total + size(s.stoup))


def _require_fragment(s: StoupSequent) -> None:
    fs = list(s.context) + [s.succedent] + ([s.stoup] if s.stoup is not None else [])
    for f in fs:
        if not in_lsk(f):
            raise FragmentError(f"{s} is outside the LSk fragment")


def prove_g(s: StoupSequent) -> Optional[GDerivation]:
    """Decide ``s`` by exhaustive backward search; return a derivation or None."""
    _require_fragment(s)
    return _search(s)


@lru_cache(maxsize=None)
def _search(s: StoupSequent) -> Optional[GDerivation]:
    stoup, ctx, c = s.stoup, s.context, s.succedent
    if stoup is not None and not ctx and stoup == c:
        return ax(c)
    if stoup is None and not ctx and c == I:
        return ir()
    # invertible steps first
    if isinstance(c, LolliL):
        d = _search(StoupSequent(stoup, ctx + (c.arg,), c.res))
        return lollir(d) if d else None
    if isinstance(stoup, Unit):
        d = _search(StoupSequent(None, ctx, c))
        return il(d) if d else None
    if isinstance(stoup, TensL):
        d = _search(StoupSequent(stoup.left, (stoup.right,) + ctx, c))
        return tensl(d) if d else None
    if stoup is None and ctx:
        d = _search(StoupSequent(ctx[0], ctx[1:], c))
        if d:
            return pass_(d)
    if isinstance(stoup, LolliL):
        for k in range(len(ctx) + 1):
            d1 = _search(StoupSequent(None, ctx[:k], stoup.arg))
            if d1 is None:
                continue
            d2 = _search(StoupSequent(stoup.res, ctx[k:], c))
            if d2 is not None:
                return lollil(d1, d2)
    if isinstance(c, TensL):
        for k in range(len(ctx) + 1):
            d1 = _search(StoupSequent(stoup, ctx[:k], c.left))
            if d1 is None:
                continue
            d2 = _search(StoupSequent(None, ctx[k:], c.right))
            if d2 is not None:
                return tensr(d1, d2)
    return None


# ---------------------------------------------------------------------------
# Cut admissibility


def scut(f: GDerivation, g: GDerivation) -> GDerivation:
    """From ``S | G |- A`` and ``A | D |- C`` build a cut-free ``S | G, D |- C``."""
    if g.stoup is None or g.stoup != f.succedent:
        raise MismatchError(f"scut: stoup of {g.conclusion} is not {f.succedent}")
    return _scut(f, g)


def _scut(f: GDerivation, g: GDerivation) -> GDerivation:
    r = f.rule
    if r is GRule.AX:
        return g
    if r is GRule.IL:
        return il(_scut(f.premises[0], g))
    if r is GRule.TENS_L:
        return tensl(_scut(f.premises[0], g))
    if r is GRule.PASS:
        return pass_(_scut(f.premises[0], g))
    if r is GRule.LOLLI_L:
        return lollil(f.premises[0], _scut(f.premises[1], g))
    # f ends in a right rule, so the cut formula is principal in f
    gr = g.rule
    if gr is GRule.AX:
        return f
    if gr is GRule.LOLLI_R:
        return lollir(_scut(f, g.premises[0]))
    if gr is GRule.TENS_R:
        return tensr(_scut(f, g.premises[0]), g.premises[1])
    if r is GRule.IR and gr is GRule.IL:
        return g.premises[0]
    if r is GRule.LOLLI_R and gr is GRule.LOLLI_L:
        f1 = f.premises[0]  # S | G, A |- B
        g1, g2 = g.premises  # - | D |- A  and  B | L |- C
        h = _scut(f1, g2)  # S | G, A, L |- C
        return _ccut(g1, h, len(f1.context) - 1)
    if r is GRule.TENS_R and gr is GRule.TENS_L:
        f1, f2 = f.premises  # S | G1 |- A  and  - | G2 |- B
        h = _ccut(f2, g.premises[0], 0)  # A | G2, D |- C
        return _scut(f1, h)
    raise MismatchError(f"scut: no case for {r.value} against {gr.value}")


def ccut(f: GDerivation, g: GDerivation, pos: int) -> GDerivation:
    """From ``- | G |- A`` and ``S | D0, A, D1 |- C`` build ``S | D0, G, D1 |- C``."""
    if f.stoup is not None:
        raise MismatchError("ccut: left premise must have an empty stoup")
    if not 0 <= pos < len(g.context) or g.context[pos] != f.succedent:
        raise MismatchError(f"ccut: position {pos} of {g.conclusion} is not {f.succedent}")
    return _ccut(f, g, pos)


def _ccut(f: GDerivation, g: GDerivation, pos: int) -> GDerivation:
    r = g.rule
    if r is GRule.IL:
        return il(_ccut(f, g.premises[0], pos))
    if r is GRule.TENS_L:
        return tensl(_ccut(f, g.premises[0], pos + 1))
    if r is GRule.LOLLI_R:
        return lollir(_ccut(f, g.premises[0], pos))
    if r is GRule.PASS:
        if pos == 0:
            return _scut(f, g.premises[0])
        return pass_(_ccut(f, g.premises[0], pos - 1))
    if r in (GRule.TENS_R, GRule.LOLLI_L):
        g1, g2 = g.premises
        if pos < g.split:
            left = _ccut(f, g1, pos)
            return tensr(left, g2) if r is GRule.TENS_R else lollil(left, g2)
        right = _ccut(f, g2, pos - g.split)
        return tensr(g1, right) if r is GRule.TENS_R else lollil(g1, right)
    raise MismatchError(f"ccut: {r.value} has no context formula at {pos}")
