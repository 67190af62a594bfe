"""Exhaustive enumeration of small derivations and formulas.

Derivations are grown bottom-up by node count.  Every derivation is built by
the smart constructors, so each one is well formed by construction; the test
suites still run the checkers over them.  Axiom leaves range over a caller
supplied finite set of formulas, which keeps every universe finite.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from . import lskg, lskt, skmbic
from .report import MismatchError
from .syntax import (
    EMPTY, I, Atom, Comma, Formula, Leaf, LolliL, LolliR, Semi, TensL, TensR, Tree,
    TreeSequent, connectives, positions,
)


def formulas(atom_names: Sequence[str], max_connectives: int, unit: bool = True,
             lsk_only: bool = True) -> list[Formula]:
    """All formulas with at most ``max_connectives`` binary connectives."""
    base: list[Formula] = [Atom(a) for a in atom_names] + ([I] if unit else [])
    by_size: list[list[Formula]] = [base]
    conns = (TensL, LolliL) if lsk_only else (TensL, LolliL, TensR, LolliR)
    for k in range(1, max_connectives + 1):
        level = []
        for i in range(k):
            for left in by_size[i]:
                for right in by_size[k - 1 - i]:
                    for c in conns:
                        level.append(c(left, right))
        by_size.append(level)
    return [f for level in by_size for f in level]


def formulas_by_connectives(atom_names: Sequence[str], max_connectives: int,
                            unit: bool = True, lsk_only: bool = True) -> list[list[Formula]]:
    """``formulas`` grouped by connective count, the unit counting as one."""
    out: list[list[Formula]] = [[] for _ in range(max_connectives + 1)]
    for f in formulas(atom_names, max_connectives, unit, lsk_only):
        if connectives(f) <= max_connectives:
            out[connectives(f)].append(f)
    return out


def trees(by_connectives: list[list[Formula]], max_connectives: int,
          semicolons: bool = False) -> list[list[Tree]]:
    """Trees grouped by connective count, commas and semicolons included.

    Leaves are the empty leaf and the given formulas.
    """
    levels: list[list[Tree]] = [[EMPTY] + [Leaf(f) for f in by_connectives[0]]]
    nodes = (Comma, Semi) if semicolons else (Comma,)
    for k in range(1, max_connectives + 1):
        level = [Leaf(f) for f in by_connectives[k]] if k < len(by_connectives) else []
        for i in range(k):
            for l in levels[i]:
                for r in levels[k - 1 - i]:
                    level.extend(node(l, r) for node in nodes)
        levels.append(level)
    return levels


def tree_sequents(atom_names: Sequence[str], max_connectives: int,
                  lsk_only: bool = True) -> Iterator[TreeSequent]:
    """Every ``T |- C`` whose tree and succedent together use at most
    ``max_connectives`` binary nodes."""
    fs = formulas_by_connectives(atom_names, max_connectives, lsk_only=lsk_only)
    ts = trees(fs, max_connectives, semicolons=not lsk_only)
    for i in range(max_connectives + 1):
        for j in range(max_connectives + 1 - i):
            for t in ts[i]:
                for c in fs[j]:
                    yield TreeSequent(t, c)


def _split_sizes(total: int):
    for i in range(1, total):
        yield i, total - i


def _grow(max_nodes: int, leaves, unary, binary):
    """Generic bottom-up growth: returns a list indexed by node count."""
    levels: list[list] = [[], list(leaves)]
    for k in range(2, max_nodes + 1):
        level = []
        for d in levels[k - 1]:
            level.extend(unary(d))
        for i, j in _split_sizes(k - 1):
            for d1 in levels[i]:
                for d2 in levels[j]:
                    level.extend(binary(d1, d2))
        levels.append(level)
    return levels


def _attempt(fn, *args):
    try:
        return [fn(*args)]
    except MismatchError:
        return []


# ---------------------------------------------------------------------------
# LSkG


def g_derivations(max_nodes: int, ax_formulas: Iterable[Formula]) -> list[list]:
    leaves = [lskg.ax(a) for a in ax_formulas] + [lskg.ir()]

    def unary(d):
        out = []
        for fn in (lskg.il, lskg.tensl, lskg.pass_, lskg.lollir):
            out += _attempt(fn, d)
        return out

    def binary(d1, d2):
        return _attempt(lskg.tensr, d1, d2) + _attempt(lskg.lollil, d1, d2)

    return _grow(max_nodes, leaves, unary, binary)


# ---------------------------------------------------------------------------
# Tree calculi


def t_derivations(max_nodes: int, ax_formulas: Iterable[Formula],
                  rules=lskt.LSKT_RULES) -> list[list]:
    leaves = [lskt.ax(a) for a in ax_formulas]
    if lskt.TRule.IR in rules:
        leaves.append(lskt.ir())
    local = [r for r in lskt.LOCAL if r in rules]
    lolli_left = [r for r in (lskt.TRule.LOLLI_L, lskt.TRule.RLOLLI_L) if r in rules]
    right_bin = [r for r in (lskt.TRule.TENS_R, lskt.TRule.RTENS_R) if r in rules]
    right_un = [r for r in (lskt.TRule.LOLLI_R, lskt.TRule.RLOLLI_R) if r in rules]

    def unary(d):
        out = []
        for r in right_un:
            out += _attempt(lskt.rebuild, r, None, [d])
        paths = [p for p, _ in positions(d.antecedent)]
        for r in local:
            for p in paths:
                out += _attempt(lskt.rebuild, r, p, [d])
        return out

    def binary(d1, d2):
        out = []
        for r in right_bin:
            out += _attempt(lskt.rebuild, r, None, [d1, d2])
        for r in lolli_left:
            for p, u in positions(d2.antecedent):
                if hasattr(u, "f"):
                    out += _attempt(lskt.rebuild, r, p, [d1, d2])
        return out

    return _grow(max_nodes, leaves, unary, binary)


# ---------------------------------------------------------------------------
# Axiomatic calculus


def a_derivations(max_nodes: int, params: Sequence[Formula]) -> list[list]:
    """Axioms are instantiated with formulas from ``params``."""
    leaves = []
    for a in params:
        leaves += [skmbic.id_(a), skmbic.lam(a), skmbic.rho(a)]
    for a, b in itertools.product(params, repeat=2):
        leaves += [skmbic.gamma(a, b), skmbic.gamma_inv(a, b)]
    for a, b, c in itertools.product(params, repeat=3):
        leaves.append(skmbic.alpha(a, b, c))

    def unary(d):
        out = []
        for fn in (skmbic.pi, skmbic.pi_inv, skmbic.pi_r, skmbic.pi_r_inv):
            out += _attempt(fn, d)
        return out

    def binary(d1, d2):
        out = _attempt(skmbic.comp, d1, d2)
        for fn in (skmbic.tens, skmbic.lolli, skmbic.rlolli):
            out.append(fn(d1, d2))
        return out

    return _grow(max_nodes, leaves, unary, binary)


def flat(levels: list[list], max_nodes: int | None = None) -> list:
    top = len(levels) - 1 if max_nodes is None else max_nodes
    return [d for k in range(1, top + 1) for d in levels[k]]
