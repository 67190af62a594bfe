"""Ternary-frame semantics.

A frame has worlds ``0..n-1``, a preorder ``leq``, a downward closed unit set
and two ternary relations, ``rel_l`` for the left-skew connectives and
``rel_r`` for the right-skew ones.  Formulas denote downward closed sets.

Internally a set of worlds is an int bitmask; the public API speaks
frozensets.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .report import CheckReport, Issue
from .syntax import Atom, Formula, LolliL, LolliR, TensL, TensR, Unit, atoms

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Frame:
    n: int
    leq: frozenset[tuple[int, int]]
    unit: frozenset[int]
    rel_l: frozenset[Triple]
    rel_r: frozenset[Triple]

    @property
    def worlds(self) -> range:
        return range(self.n)


def make_frame(n, leq, unit, rel_l, rel_r=None) -> Frame:
    """Build a frame; ``rel_r=None`` means the reverse of ``rel_l``."""
    rel_l = frozenset(tuple(t) for t in rel_l)
    if rel_r is None:
        rel_r = reverse(rel_l)
    return Frame(n, frozenset(tuple(p) for p in leq), frozenset(unit), rel_l,
                 frozenset(tuple(t) for t in rel_r))


def reverse(rel: Iterable[Triple]) -> frozenset[Triple]:
    return frozenset((b, a, c) for a, b, c in rel)


def derive_relR(fr: Frame) -> Frame:
    return Frame(fr.n, fr.leq, fr.unit, fr.rel_l, reverse(fr.rel_l))


# ---------------------------------------------------------------------------
# Validation


def validate_frame(fr: Frame) -> CheckReport:
    rep = CheckReport()
    W = range(fr.n)

    def bad(what, msg):
        rep.issues.append(Issue((), what, msg))

    for rel_name, rel in (("leq", fr.leq), ("I", {(x,) for x in fr.unit}),
                          ("L", fr.rel_l), ("R", fr.rel_r)):
        for t in rel:
            if any(not 0 <= x < fr.n for x in t):
                bad(rel_name, f"world out of range in {t}")
    if rep.issues:
        return rep
    for a in W:
        rep.nodes += 1
        if (a, a) not in fr.leq:
            bad("leq", f"not reflexive at {a}")
    for a, b in fr.leq:
        for c in W:
            if (b, c) in fr.leq and (a, c) not in fr.leq:
                bad("leq", f"not transitive: {a}<={b}<={c}")
    for e in fr.unit:
        for d in W:
            if (d, e) in fr.leq and d not in fr.unit:
                bad("I", f"not downward closed: {d}<={e}, {e} in I, {d} not")
    for name, rel in (("L", fr.rel_l), ("R", fr.rel_r)):
        for a, b, c in rel:
            for a2, b2, c2 in itertools.product(W, repeat=3):
                if (a, a2) in fr.leq and (b, b2) in fr.leq and (c2, c) in fr.leq:
                    if (a2, b2, c2) not in rel:
                        bad(name, f"not closed: {(a, b, c)} in, {(a2, b2, c2)} out")
    return rep


# ---------------------------------------------------------------------------
# Downsets and connectives on bitmasks


def _down(mask: int, leq, n: int) -> int:
    out = mask
    for a, b in leq:
        if mask >> b & 1:
            out |= 1 << a
    return out


def _is_down(mask: int, leq) -> bool:
    return all(not (mask >> b & 1) or (mask >> a & 1) for a, b in leq)


def _tens(x: int, y: int, rel) -> int:
    out = 0
    for a, b, c in rel:
        if x >> a & 1 and y >> b & 1:
            out |= 1 << c
    return out


def _lolli(x: int, y: int, rel, n: int) -> int:
    bad = 0
    for c, a, b in rel:
        if x >> a & 1 and not y >> b & 1:
            bad |= 1 << c
    return ((1 << n) - 1) & ~bad


def _mask(s: Iterable[int]) -> int:
    m = 0
    for x in s:
        m |= 1 << x
    return m


def _members(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@lru_cache(maxsize=4096)
def _downsets(n: int, leq: frozenset) -> tuple[int, ...]:
    return tuple(m for m in range(1 << n) if _is_down(m, leq))


def downsets(fr: Frame) -> list[frozenset[int]]:
    return [_members(m) for m in _downsets(fr.n, fr.leq)]


class UnassignedAtom(KeyError):
    pass


def _eval(f: Formula, v: dict[str, int], fr: Frame) -> int:
    if isinstance(f, Atom):
        if f.name not in v:
            raise UnassignedAtom(f.name)
        return v[f.name]
    if isinstance(f, Unit):
        return _mask(fr.unit)
    if isinstance(f, TensL):
        return _tens(_eval(f.left, v, fr), _eval(f.right, v, fr), fr.rel_l)
    if isinstance(f, TensR):
        return _tens(_eval(f.left, v, fr), _eval(f.right, v, fr), fr.rel_r)
    if isinstance(f, LolliL):
        return _lolli(_eval(f.arg, v, fr), _eval(f.res, v, fr), fr.rel_l, fr.n)
    return _lolli(_eval(f.arg, v, fr), _eval(f.res, v, fr), fr.rel_r, fr.n)


def evaluate(f: Formula, v: dict[str, Iterable[int]], fr: Frame) -> frozenset[int]:
    """The set of worlds where ``f`` holds; asserts it is downward closed."""
    masks = {k: _mask(s) for k, s in v.items()}
    for k, m in masks.items():
        if not _is_down(m, fr.leq):
            raise ValueError(f"valuation of {k} is not downward closed")
    out = _eval(f, masks, fr)
    assert _is_down(out, fr.leq), "frame closure violated"
    return _members(out)


def valid_in_model(src: Formula, tgt: Formula, v, fr: Frame) -> bool:
    return evaluate(src, v, fr) <= evaluate(tgt, v, fr)


def valuations(fr: Frame, names: Iterable[str]) -> Iterator[dict[str, frozenset[int]]]:
    names = sorted(names)
    ds = downsets(fr)
    for combo in itertools.product(ds, repeat=len(names)):
        yield dict(zip(names, combo))


def valid_in_frame(src: Formula, tgt: Formula, fr: Frame) -> Optional[dict]:
    """None if valid under every valuation, else a refuting valuation."""
    names = sorted(atoms(src) | atoms(tgt))
    ds = _downsets(fr.n, fr.leq)
    for combo in itertools.product(ds, repeat=len(names)):
        v = dict(zip(names, combo))
        s, t = _eval(src, v, fr), _eval(tgt, v, fr)
        if s & ~t:
            return {k: _members(m) for k, m in v.items()}
    return None


# ---------------------------------------------------------------------------
# Frame conditions


class Cond(str, Enum):
    LSA = "LSA"
    LSLU = "LSLU"
    LSRU = "LSRU"
    RSA = "RSA"
    RSLU = "RSLU"
    RSRU = "RSRU"
    LR_REVERSE = "LR-reverse"


SKMBICA = frozenset(Cond)


@dataclass(frozen=True)
class CondResult:
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def _sa_left(rel, n) -> Optional[tuple]:
    by_first: dict[int, list] = {}
    for t in rel:
        by_first.setdefault(t[0], []).append(t)
    for a, b, x in rel:
        for _, c, d in by_first.get(x, ()):
            if not any((b, c, y) in rel and (a, y, d) in rel for y in range(n)):
                return (a, b, c, d, x)
    return None


def _sa_right(rel, n) -> Optional[tuple]:
    by_second: dict[int, list] = {}
    for t in rel:
        by_second.setdefault(t[1], []).append(t)
    for b, c, x in rel:
        for a, _, d in by_second.get(x, ()):
            if not any((a, b, y) in rel and (y, c, d) in rel for y in range(n)):
                return (a, b, c, d, x)
    return None


def _cond_on(rel, c: Cond, fr: Frame) -> CondResult:
    n, leq, unit = fr.n, fr.leq, fr.unit
    w = None
    if c is Cond.LSA:
        w = _sa_left(rel, n)
    elif c is Cond.RSA:
        w = _sa_right(rel, n)
    elif c is Cond.LSLU:
        w = next(((e, a, b) for e, a, b in rel if e in unit and (b, a) not in leq), None)
    elif c is Cond.RSRU:
        w = next(((a, e, b) for a, e, b in rel if e in unit and (b, a) not in leq), None)
    elif c is Cond.LSRU:
        w = next(((a,) for a in range(n) if not any((a, e, a) in rel for e in unit)), None)
    elif c is Cond.RSLU:
        w = next(((a,) for a in range(n) if not any((e, a, a) in rel for e in unit)), None)
    return CondResult(w is None, w)


def check_condition(fr: Frame, c: Cond, on: Optional[str] = None) -> CondResult:
    """Evaluate a condition.  L-conditions default to ``rel_l``, R-conditions
    to ``rel_r``; ``on`` ("L" or "R") overrides."""
    if c is Cond.LR_REVERSE:
        for a, b, cc in fr.rel_l:
            if (b, a, cc) not in fr.rel_r:
                return CondResult(False, ("L", a, b, cc))
        for b, a, cc in fr.rel_r:
            if (a, b, cc) not in fr.rel_l:
                return CondResult(False, ("R", b, a, cc))
        return CondResult(True)
    if on is None:
        on = "L" if c.value.startswith("L") else "R"
    return _cond_on(fr.rel_l if on == "L" else fr.rel_r, c, fr)


def satisfies(fr: Frame, conds: Iterable[Cond]) -> bool:
    return all(check_condition(fr, c) for c in conds)


# ---------------------------------------------------------------------------
# Structural laws, evaluated over all downset assignments


class Law(str, Enum):
    LAMBDA = "lambda"
    RHO = "rho"
    ALPHA = "alpha"
    LAMBDA_R = "lambdaR"
    RHO_R = "rhoR"
    ALPHA_R = "alphaR"
    GAMMA = "gamma"
    GAMMA_INV = "gamma-1"
    J = "j"
    I = "i"
    L = "L"
    J_R = "jR"
    I_R = "iR"
    L_R = "LR"


@dataclass(frozen=True)
class _Side:
    """Connective tables for one relation, indexed by downset number."""
    ds: tuple[int, ...]
    tens: tuple[tuple[int, ...], ...]
    lolli: tuple[tuple[int, ...], ...]
    sub: tuple[tuple[bool, ...], ...]
    u: int


@lru_cache(maxsize=8192)
def _side(n: int, leq: frozenset, unit: frozenset, rel: frozenset) -> _Side:
    ds = _downsets(n, leq)
    idx = {m: i for i, m in enumerate(ds)}
    tens = tuple(tuple(idx[_tens(x, y, rel)] for y in ds) for x in ds)
    lolli = tuple(tuple(idx[_lolli(x, y, rel, n)] for y in ds) for x in ds)
    sub = tuple(tuple(not (x & ~y) for y in ds) for x in ds)
    return _Side(ds, tens, lolli, sub, idx[_mask(unit)])


@dataclass(frozen=True)
class LawResult:
    valid: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.valid


def _law_left(law: Law, s: _Side):
    """First refuting tuple of downset indices for a one-relation law."""
    t, l, sub, u = s.tens, s.lolli, s.sub, s.u
    r = range(len(s.ds))
    if law in (Law.LAMBDA, Law.J, Law.I, Law.RHO, Law.I_R, Law.LAMBDA_R, Law.RHO_R):
        for a in r:
            ok = {
                Law.LAMBDA: lambda: sub[t[u][a]][a],
                Law.RHO: lambda: sub[a][t[a][u]],
                Law.J: lambda: sub[u][l[a][a]],
                Law.I: lambda: sub[l[u][a]][a],
                Law.LAMBDA_R: lambda: sub[a][t[u][a]],
                Law.RHO_R: lambda: sub[t[a][u]][a],
                Law.I_R: lambda: sub[a][l[u][a]],
            }[law]()
            if not ok:
                return (a,)
        return None
    if law is Law.J_R:
        for a, b in itertools.product(r, repeat=2):
            if sub[u][l[a][b]] and not sub[a][b]:
                return (a, b)
        return None
    if law in (Law.ALPHA, Law.ALPHA_R, Law.L):
        for a, b, c in itertools.product(r, repeat=3):
            if law is Law.ALPHA:
                ok = sub[t[t[a][b]][c]][t[a][t[b][c]]]
            elif law is Law.ALPHA_R:
                ok = sub[t[a][t[b][c]]][t[t[a][b]][c]]
            else:
                ok = sub[l[b][c]][l[l[a][b]][l[a][c]]]
            if not ok:
                return (a, b, c)
        return None
    if law is Law.L_R:
        for a, b, c, d in itertools.product(r, repeat=4):
            if sub[a][l[b][l[c][d]]]:
                if not any(sub[a][l[x][d]] and sub[b][l[c][x]] for x in r):
                    return (a, b, c, d)
        return None
    raise ValueError(law)


_LEFT_LAWS = {Law.LAMBDA, Law.RHO, Law.ALPHA, Law.J, Law.I, Law.L}
_RIGHT_LAWS = {Law.LAMBDA_R, Law.RHO_R, Law.ALPHA_R, Law.J_R, Law.I_R, Law.L_R}
_LAW_ATOMS = {
    Law.LAMBDA: "A", Law.RHO: "A", Law.J: "A", Law.I: "A", Law.LAMBDA_R: "A",
    Law.RHO_R: "A", Law.I_R: "A", Law.J_R: "AB", Law.GAMMA: "AB", Law.GAMMA_INV: "AB",
    Law.ALPHA: "ABC", Law.ALPHA_R: "ABC", Law.L: "ABC", Law.L_R: "ABCD",
}


def law_valid(fr: Frame, law: Law) -> LawResult:
    """Exact check of a structural law over every downset assignment."""
    if law in (Law.GAMMA, Law.GAMMA_INV):
        sl = _side(fr.n, fr.leq, fr.unit, fr.rel_l)
        sr = _side(fr.n, fr.leq, fr.unit, fr.rel_r)
        src, tgt = (sl, sr) if law is Law.GAMMA else (sr, sl)
        w = _gamma_witness(src, tgt)
        ds = sl.ds
    else:
        rel = fr.rel_l if law in _LEFT_LAWS else fr.rel_r
        s = _side(fr.n, fr.leq, fr.unit, rel)
        w = _law_left(law, s)
        ds = s.ds
    if w is None:
        return LawResult(True)
    return LawResult(False, {k: _members(ds[i]) for k, i in zip(_LAW_ATOMS[law], w)})


def _gamma_witness(src: _Side, tgt: _Side):
    r = range(len(src.ds))
    for a, b in itertools.product(r, repeat=2):
        if not src.sub[src.tens[a][b]][tgt.tens[b][a]]:
            return (a, b)
    return None


# ---------------------------------------------------------------------------
# The correspondence table


@dataclass(frozen=True)
class Row:
    name: str
    left: str
    left_value: bool
    right: str
    right_value: bool

    @property
    def agree(self) -> bool:
        return self.left_value == self.right_value


ROWS = (
    ("LR-reverse", None, ("gamma", "gamma-1")),
    ("alpha", Cond.LSA, (Law.ALPHA,)), ("L", Cond.LSA, (Law.L,)),
    ("alphaR", Cond.RSA, (Law.ALPHA_R,)), ("LR", Cond.RSA, (Law.L_R,)),
    ("lambda", Cond.LSLU, (Law.LAMBDA,)), ("j", Cond.LSLU, (Law.J,)),
    ("lambdaR", Cond.RSLU, (Law.LAMBDA_R,)), ("jR", Cond.RSLU, (Law.J_R,)),
    ("rho", Cond.LSRU, (Law.RHO,)), ("i", Cond.LSRU, (Law.I,)),
    ("rhoR", Cond.RSRU, (Law.RHO_R,)), ("iR", Cond.RSRU, (Law.I_R,)),
)


@lru_cache(maxsize=65536)
def _side_rows(n, leq, unit, rel, left: bool) -> tuple[tuple[bool, bool], ...]:
    fr = Frame(n, leq, unit, rel, rel)
    s = _side(n, leq, unit, rel)
    out = []
    for name, cond, laws in ROWS[1:]:
        if (cond.value[0] == "L") != left:
            continue
        (law,) = laws
        out.append((bool(_cond_on(rel, cond, fr)), _law_left(law, s) is None))
    return tuple(out)


def correspondence_report(fr: Frame) -> list[Row]:
    """Condition against law(s) for each row; every row should agree."""
    rows = [Row("LR-reverse", "LR-reverse", bool(check_condition(fr, Cond.LR_REVERSE)),
                "gamma & gamma-1",
                bool(law_valid(fr, Law.GAMMA)) and bool(law_valid(fr, Law.GAMMA_INV)))]
    lv = iter(_side_rows(fr.n, fr.leq, fr.unit, fr.rel_l, True))
    rv = iter(_side_rows(fr.n, fr.leq, fr.unit, fr.rel_r, False))
    for name, cond, (law,) in ROWS[1:]:
        c, l = next(lv) if cond.value[0] == "L" else next(rv)
        rows.append(Row(name, cond.value, c, law.value, l))
    return rows


# ---------------------------------------------------------------------------
# Enumeration and sampling


def _closure_leq(n, pairs) -> frozenset:
    leq = set(pairs) | {(a, a) for a in range(n)}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return frozenset(leq)


def close_rel(rel, leq, n) -> frozenset[Triple]:
    """Saturate: upward in the first two arguments, downward in the third."""
    ups = {a: [b for b in range(n) if (a, b) in leq] for a in range(n)}
    downs = {a: [b for b in range(n) if (b, a) in leq] for a in range(n)}
    out = set()
    for a, b, c in rel:
        for a2 in ups[a]:
            for b2 in ups[b]:
                for c2 in downs[c]:
                    out.add((a2, b2, c2))
    return frozenset(out)


def _preorders(n):
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    seen = set()
    for bits in range(1 << len(pairs)):
        chosen = {p for i, p in enumerate(pairs) if bits >> i & 1}
        leq = _closure_leq(n, chosen)
        if leq in seen:
            continue
        seen.add(leq)
        yield leq


def _perm_triples(rel, g):
    return frozenset((g[a], g[b], g[c]) for a, b, c in rel)


def _canon_key(unit, rel_l, rel_r):
    return (sorted(unit), sorted(rel_l), sorted(rel_r))


@lru_cache(maxsize=None)
def _closed_relations(n, leq) -> tuple[frozenset, ...]:
    cells = list(itertools.product(range(n), repeat=3))
    out = []
    for bits in range(1 << len(cells)):
        rel = frozenset(c for i, c in enumerate(cells) if bits >> i & 1)
        if close_rel(rel, leq, n) == rel:
            out.append(rel)
    return tuple(out)


def enumerate_frames(n: int, lr_reverse: bool = False) -> Iterator[Frame]:
    """Every frame on ``n`` worlds up to renaming.

    With ``lr_reverse`` the right relation is the reverse of the left one,
    otherwise it ranges independently.  Practical for ``n <= 2``.
    """
    perms = list(itertools.permutations(range(n)))
    reps, seen = [], set()
    for leq in _preorders(n):
        if leq in seen:
            continue
        orbit = {frozenset((g[a], g[b]) for a, b in leq) for g in perms}
        seen |= orbit
        autos = [g for g in perms if frozenset((g[a], g[b]) for a, b in leq) == leq]
        reps.append((leq, autos))
    for leq, autos in reps:
        units = [_members(m) for m in _downsets(n, leq)]
        rels = _closed_relations(n, leq)
        for unit in units:
            for rl in rels:
                for rr in ([reverse(rl)] if lr_reverse else rels):
                    if len(autos) > 1:
                        key = _canon_key(unit, rl, rr)
                        if any(_canon_key({g[x] for x in unit}, _perm_triples(rl, g),
                                          _perm_triples(rr, g)) < key for g in autos):
                            continue
                    yield Frame(n, leq, frozenset(unit), rl, rr)


def random_frame(n: int, seed: int, independent_r: bool = False) -> Frame:
    """A random valid frame; the right relation is the reverse of the left
    one unless ``independent_r``.  Deterministic per seed."""
    rng = random.Random(seed)
    p_leq = rng.choice((0.0, 0.2, 0.4))
    leq = _closure_leq(n, [(a, b) for a in range(n) for b in range(n)
                           if a != b and rng.random() < p_leq])
    unit = _members(_down(_mask(a for a in range(n) if rng.random() < 0.4), leq, n))
    cells = list(itertools.product(range(n), repeat=3))

    def rel():
        p = rng.choice((0.05, 0.1, 0.2, 0.35))
        return close_rel({c for c in cells if rng.random() < p}, leq, n)

    rl = rel()
    rr = rel() if independent_r else reverse(rl)
    return Frame(n, leq, frozenset(unit), rl, rr)


def random_skmbica_frame(n: int, seed: int) -> Frame:
    """A random frame satisfying every SkMBiCA condition, built by repair."""
    rng = random.Random(seed)
    p_leq = rng.choice((0.0, 0.2, 0.4))
    leq = _closure_leq(n, [(a, b) for a in range(n) for b in range(n)
                           if a != b and rng.random() < p_leq])
    unit_mask = _mask(a for a in range(n) if rng.random() < 0.5)
    if not unit_mask:
        unit_mask = 1 << rng.randrange(n)
    unit = _members(_down(unit_mask, leq, n))
    cells = list(itertools.product(range(n), repeat=3))
    p = rng.choice((0.05, 0.15, 0.3))
    rel = set(close_rel({c for c in cells if rng.random() < p}, leq, n))
    # drop left-unit violators; the rest stays closed
    rel = {(e, a, b) for e, a, b in rel if e not in unit or (b, a) in leq}
    for a in range(n):
        if not any((a, e, a) in rel for e in unit):
            e = a if a in unit else rng.choice(sorted(unit))
            rel |= close_rel({(a, e, a)}, leq, n)
    while True:
        w = _sa_left(rel, n)
        if w is None:
            break
        a, b, c, d, x = w
        if b in unit:
            y = c
        elif a in unit:
            y = d
        else:
            y = rng.randrange(n)
        rel |= close_rel({(b, c, y), (a, y, d)}, leq, n)
    rl = frozenset(rel)
    fr = Frame(n, leq, frozenset(unit), rl, reverse(rl))
    assert satisfies(fr, SKMBICA), "repair left a condition unsatisfied"
    return fr


# ---------------------------------------------------------------------------
# Countermodels


@dataclass(frozen=True)
class Countermodel:
    frame: Frame
    valuation: dict = field(hash=False)


def countermodel(src: Formula, tgt: Formula, max_worlds: int = 4,
                 require: Iterable[Cond] = SKMBICA, seed: int = 0,
                 samples: int = 300) -> Optional[Countermodel]:
    """Search small frames satisfying ``require`` for a model where
    ``src |- tgt`` fails.  Exhaustive up to two worlds, sampled beyond."""
    require = frozenset(require)
    for n in range(1, max_worlds + 1):
        for fr in _candidates(n, require, seed, samples):
            if not satisfies(fr, require):
                continue
            v = valid_in_frame(src, tgt, fr)
            if v is not None:
                return Countermodel(fr, v)
    return None


def _candidates(n, require, seed, samples):
    if n <= 2:
        yield from enumerate_frames(n, lr_reverse=Cond.LR_REVERSE in require)
        return
    skew = require <= SKMBICA and Cond.LR_REVERSE in require
    for i in range(samples):
        s = seed * 100003 + n * 7919 + i
        yield random_skmbica_frame(n, s) if skew else random_frame(n, s)


# ---------------------------------------------------------------------------
# JSON


def frame_to_json(fr: Frame) -> str:
    data = {
        "worlds": fr.n,
        "leq": sorted(list(p) for p in fr.leq),
        "I": sorted(fr.unit),
        "L": sorted(list(t) for t in fr.rel_l),
    }
    data["R"] = "lr-reverse" if fr.rel_r == reverse(fr.rel_l) else sorted(list(t) for t in fr.rel_r)
    return json.dumps(data)


class FrameFormatError(ValueError):
    pass


def frame_from_json(text: str) -> Frame:
    try:
        data = json.loads(text)
        n = int(data["worlds"])
        leq = [tuple(p) for p in data["leq"]]
        unit = list(data["I"])
        rl = [tuple(t) for t in data["L"]]
        r = data.get("R", "lr-reverse")
        rr = None if r == "lr-reverse" else [tuple(t) for t in r]
    except (KeyError, TypeError, ValueError) as e:
        raise FrameFormatError(f"bad frame file: {e}") from None
    if n < 1:
        raise FrameFormatError("a frame needs at least one world")
    shapes = [(leq, 2), (rl, 3)] + ([(rr, 3)] if rr is not None else [])
    for items, width in shapes:
        for t in items:
            if len(t) != width or any(not isinstance(x, int) or not 0 <= x < n for x in t):
                raise FrameFormatError(f"bad tuple {list(t)} for {n} worlds")
    for x in unit:
        if not isinstance(x, int) or not 0 <= x < n:
            raise FrameFormatError(f"unit world {x} out of range")
    return make_frame(n, leq, unit, rl, rr)
