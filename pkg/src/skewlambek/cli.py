"""Command-line front end.

Exit codes: 0 derivable / valid / holds, 1 not derivable / refuted, 2 unknown
at the given bound, 3 input error, 4 an internal self-check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import equiv, lskg, lskt, prooftext, semantics, skmbic
from .report import MismatchError
from .syntax import (
    Arrow, FragmentError, Leaf, PathError, StoupSequent, SyntaxErrorAt, TreeSequent,
    flatten_sharp, parse_arrow, parse_stoup_sequent, parse_tree_sequent, positions, replace,
)

OK, REFUTED, UNKNOWN, INPUT_ERROR, SELF_CHECK = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class SelfCheckError(Exception):
    pass


def _emit_proof(calculus: str, d, fmt: str, out) -> None:
    """Print ``d`` after re-checking it; a failing check is fatal."""
    rep = prooftext.check(calculus, d)
    if not rep.ok:
        raise SelfCheckError(f"produced {calculus} derivation does not check:\n{rep}")
    out.write(prooftext.to_latex(d) if fmt == "latex" else prooftext.to_text(d, calculus))


def _emit_countermodel(cm: semantics.Countermodel, src, tgt, out) -> None:
    fr, v = cm.frame, cm.valuation
    if not semantics.validate_frame(fr).ok or semantics.valid_in_model(src, tgt, v, fr):
        raise SelfCheckError("countermodel does not re-validate")
    out.write("frame: " + semantics.frame_to_json(fr) + "\n")
    out.write("valuation: " + json.dumps({k: sorted(s) for k, s in sorted(v.items())}) + "\n")


def _parse(kind: str, text: str):
    try:
        if kind == "lskg":
            return parse_stoup_sequent(text)
        if kind == "skmbica":
            return parse_arrow(text)
        return parse_tree_sequent(text)
    except SyntaxErrorAt as e:
        raise InputError(f"cannot parse {text!r}: {e}") from None


def _search(calculus: str, goal, depth: int):
    """Proof search: (derivation or None, whether the answer is exact)."""
    if calculus == "lskg":
        try:
            return lskg.prove_g(goal), True
        except FragmentError as e:
            raise InputError(str(e)) from None
    if calculus == "lskt":
        try:
            return equiv.decide_lskt(goal).witness, True
        except FragmentError as e:
            raise InputError(str(e)) from None
    if calculus == "skmbict":
        return skmbic.prove_bt_bounded(goal, depth), False
    d = skmbic.prove_bt_bounded(TreeSequent(Leaf(goal.source), goal.target), depth)
    return (skmbic.g2a(d) if d is not None else None), False


def _source_target(calculus: str, goal):
    if calculus == "skmbica":
        return goal.source, goal.target
    return flatten_sharp(goal.antecedent), goal.succedent


def cmd_decide(args, out) -> int:
    goal = _parse(args.calculus, args.sequent)
    d, exact = _search(args.calculus, goal, args.depth)
    if d is not None:
        out.write("derivable\n")
        _emit_proof(args.calculus, d, args.format, out)
        return OK
    if exact:
        out.write("not derivable\n")
        return REFUTED
    src, tgt = _source_target(args.calculus, goal)
    cm = semantics.countermodel(src, tgt, args.max_worlds, seed=args.seed)
    if cm is not None:
        out.write("refuted\n")
        _emit_countermodel(cm, src, tgt, out)
        return REFUTED
    out.write(f"unknown (no proof within depth {args.depth}, "
              f"no countermodel within {args.max_worlds} worlds)\n")
    return UNKNOWN


def cmd_prove(args, out) -> int:
    goal = _parse(args.calculus, args.sequent)
    d, exact = _search(args.calculus, goal, args.depth)
    if d is None:
        out.write("no proof found\n" if exact else f"no proof within depth {args.depth}\n")
        return REFUTED if exact else UNKNOWN
    _emit_proof(args.calculus, d, args.format, out)
    return OK


def _read_proof(path: str, expected: Optional[str] = None):
    try:
        with open(path, encoding="utf-8") as fh:
            calculus, d = prooftext.from_text(fh.read())
    except OSError as e:
        raise InputError(str(e)) from None
    except prooftext.ProofFormatError as e:
        raise InputError(f"{path}: {e}") from None
    if expected is not None and calculus != expected:
        raise InputError(f"{path}: expected a {expected} proof, got {calculus}")
    rep = prooftext.check(calculus, d)
    if not rep.ok:
        raise InputError(f"{path}: the proof does not check:\n{rep}")
    return calculus, d


_TRANSLATIONS = {
    "g2t": ("lskg", "lskt", equiv.g2t,
            lambda d: equiv.g2t_sequent(d.conclusion)),
    "t2g": ("lskt", "lskg", equiv.t2g,
            lambda d: equiv.t2g_sequent(d.conclusion)),
    "a2g": ("skmbica", "skmbict", skmbic.a2g,
            lambda d: TreeSequent(Leaf(d.source), d.target)),
    "g2a": ("skmbict", "skmbica", skmbic.g2a,
            lambda d: Arrow(flatten_sharp(d.antecedent), d.succedent)),
}


def cmd_translate(args, out) -> int:
    src_calc, tgt_calc, fn, expected = _TRANSLATIONS[args.direction]
    _, d = _read_proof(args.proof, src_calc)
    r = fn(d)
    if r.conclusion != expected(d):
        raise SelfCheckError(f"translation has endsequent {r.conclusion}, expected {expected(d)}")
    _emit_proof(tgt_calc, r, args.format, out)
    return OK


def _parse_path(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InputError(f"bad position {text!r}; use e.g. 0,1") from None


def cmd_cut(args, out) -> int:
    cf, f = _read_proof(args.left)
    cg, g = _read_proof(args.right)
    if cf != cg:
        raise InputError(f"cannot cut a {cf} proof against a {cg} proof")
    try:
        if cf == "lskg":
            if args.position is None:
                r = lskg.scut(f, g)
                expected = StoupSequent(f.stoup, f.context + g.context, g.succedent)
            else:
                k = int(args.position)
                r = lskg.ccut(f, g, k)
                ctx = g.context[:k] + f.context + g.context[k + 1:]
                expected = StoupSequent(g.stoup, ctx, g.succedent)
        elif cf == "skmbica":
            r = skmbic.comp(f, g)
            expected = Arrow(f.source, g.target)
        else:
            if args.position is None:
                hits = [p for p, u in positions(g.antecedent) if u == Leaf(f.succedent)]
                if not hits:
                    raise InputError(f"{g.conclusion} has no {f.succedent} to cut")
                pos = hits[0]
            else:
                pos = _parse_path(args.position)
            r = lskt.cut_t(f, g, pos) if cf == "lskt" else skmbic.cut_bt(f, g, pos)
            expected = TreeSequent(replace(g.antecedent, pos, f.antecedent), g.succedent)
    except (MismatchError, PathError, ValueError) as e:
        raise InputError(f"cut does not apply: {e}") from None
    if r.conclusion != expected:
        raise SelfCheckError(f"cut produced {r.conclusion}, expected {expected}")
    _emit_proof(cf, r, args.format, out)
    return OK


def _read_frame(path: str) -> semantics.Frame:
    try:
        with open(path, encoding="utf-8") as fh:
            return semantics.frame_from_json(fh.read())
    except OSError as e:
        raise InputError(str(e)) from None
    except semantics.FrameFormatError as e:
        raise InputError(f"{path}: {e}") from None


def cmd_check_frame(args, out) -> int:
    fr = _read_frame(args.frame)
    rep = semantics.validate_frame(fr)
    if not rep.ok:
        out.write(f"invalid frame\n{rep}\n")
        return REFUTED
    out.write(f"valid frame with {fr.n} worlds\n")
    for c in semantics.Cond:
        res = semantics.check_condition(fr, c)
        extra = "" if res.holds else f"  (witness {res.witness})"
        out.write(f"{c.value:<11} {'holds' if res.holds else 'fails'}{extra}\n")
    for law in semantics.Law:
        out.write(f"law {law.value:<8} {'valid' if semantics.law_valid(fr, law).valid else 'invalid'}\n")
    return OK


def cmd_correspondence(args, out) -> int:
    if args.frame is not None:
        fr = _read_frame(args.frame)
        rep = semantics.validate_frame(fr)
        if not rep.ok:
            raise InputError(f"invalid frame\n{rep}")
        frames = [fr]
    elif args.enumerate is not None:
        if args.enumerate < 1:
            raise InputError("--enumerate needs at least one world")
        frames = semantics.enumerate_frames(args.enumerate)
    else:
        frames = (semantics.random_frame(args.worlds, args.seed + i, independent_r=bool(i % 2))
                  for i in range(args.random))
    totals: dict[str, list] = {}
    count = 0
    for fr in frames:
        count += 1
        for row in semantics.correspondence_report(fr):
            t = totals.setdefault(row.name, [row, 0, 0])
            t[1] += row.agree
            t[2] += row.left_value
    out.write(f"{'row':<11} {'condition':<11} {'law':<16} {'agree':>9} {'holds':>7}\n")
    all_agree = True
    for row, agree, holds in totals.values():
        all_agree &= agree == count
        verdict = "agree" if agree == count else f"DISAGREE {count - agree}"
        out.write(f"{row.name:<11} {row.left:<11} {row.right:<16} {agree:>9} {holds:>7}  {verdict}\n")
    out.write(f"{count} frames\n")
    return OK if all_agree else REFUTED


def cmd_countermodel(args, out) -> int:
    text = args.sequent
    try:
        if "," in text or ";" in text:
            s = parse_tree_sequent(text)
            src, tgt = flatten_sharp(s.antecedent), s.succedent
        else:
            a = parse_arrow(text)
            src, tgt = a.source, a.target
    except SyntaxErrorAt as e:
        raise InputError(f"cannot parse {text!r}: {e}") from None
    cm = semantics.countermodel(src, tgt, args.max_worlds, seed=args.seed)
    if cm is None:
        out.write(f"no countermodel within {args.max_worlds} worlds\n")
        return UNKNOWN
    out.write("refuted\n")
    _emit_countermodel(cm, src, tgt, out)
    return REFUTED


def cmd_equations(args, out) -> int:
    out.write(skmbic.equation_table())
    if not skmbic.equation_table().endswith("\n"):
        out.write("\n")
    return OK


CALCULI = ("lskg", "lskt", "skmbica", "skmbict")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "latex"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--depth", type=int, default=8, help="bound for tree-calculus search")
    common.add_argument("--max-worlds", type=int, default=4, help="bound for countermodel search")

    p = argparse.ArgumentParser(prog="skewlambek", description="Skew Lambek calculi toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", parents=[common], help="decide a sequent")
    d.add_argument("calculus", choices=CALCULI)
    d.add_argument("sequent")
    d.set_defaults(run=cmd_decide)

    pr = sub.add_parser("prove", parents=[common], help="print a proof of a sequent")
    pr.add_argument("calculus", choices=CALCULI)
    pr.add_argument("sequent")
    pr.set_defaults(run=cmd_prove)

    t = sub.add_parser("translate", parents=[common], help="translate a proof file")
    t.add_argument("direction", choices=sorted(_TRANSLATIONS))
    t.add_argument("proof")
    t.set_defaults(run=cmd_translate)

    c = sub.add_parser("cut", parents=[common], help="eliminate a cut between two proof files")
    c.add_argument("left")
    c.add_argument("right")
    c.add_argument("--position", help="context index (lskg) or tree path such as 0,1")
    c.set_defaults(run=cmd_cut)

    f = sub.add_parser("check-frame", parents=[common], help="validate a frame file")
    f.add_argument("frame")
    f.set_defaults(run=cmd_check_frame)

    co = sub.add_parser("correspondence", parents=[common],
                        help="check conditions against structural laws")
    src = co.add_mutually_exclusive_group(required=True)
    src.add_argument("frame", nargs="?")
    src.add_argument("--enumerate", type=int, metavar="N", help="all frames with N worlds")
    src.add_argument("--random", type=int, metavar="K", help="K random frames")
    co.add_argument("--worlds", type=int, default=3, help="world count for --random")
    co.set_defaults(run=cmd_correspondence)

    cm = sub.add_parser("countermodel", parents=[common], help="search a refuting model")
    cm.add_argument("sequent")
    cm.set_defaults(run=cmd_countermodel)

    e = sub.add_parser("equations", parents=[common], help="print the equation table")
    e.set_defaults(run=cmd_equations)
    return p


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    try:
        return args.run(args, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return INPUT_ERROR
    except SelfCheckError as e:
        err.write(f"self-check failed: {e}\n")
        return SELF_CHECK


if __name__ == "__main__":
    sys.exit(main())
