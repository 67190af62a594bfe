"""Skew monoidal (bi-)closed Lambek calculi: proof search, cut elimination,
translations between calculi and ternary frame semantics."""

from .syntax import (
    Arrow, I, Atom, Comma, Empty, EMPTY, Leaf, LolliL, LolliR, Semi, StoupSequent,
    TensL, TensR, TreeSequent, parse_arrow, parse_formula, parse_sequent,
    parse_stoup_sequent, parse_tree, parse_tree_sequent, show,
)

__version__ = "0.1.0"
