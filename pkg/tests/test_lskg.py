from functools import lru_cache

import pytest

from skewlambek import enumeration, lskg
from skewlambek.lskg import GDerivation, GRule, ccut, check_g, measure, prove_g, scut
from skewlambek.report import MismatchError
from skewlambek.syntax import (
    I, Atom, FragmentError, LolliL, LolliR, StoupSequent, TensL, Unit, parse_stoup_sequent,
)

X, Y, Z = Atom("X"), Atom("Y"), Atom("Z")


def S(text):
    return parse_stoup_sequent(text)


def test_smart_constructors_build_expected_conclusions():
    d = lskg.tensl(lskg.il(lskg.pass_(lskg.ax(X))))
    assert d.conclusion == S("I *L X | |- X")
    assert check_g(d).ok
    d = lskg.lollil(lskg.pass_(lskg.ax(X)), lskg.ax(Y))
    assert d.conclusion == S("X -oL Y | X |- Y")
    assert d.split == 1


def test_constructor_mismatches():
    with pytest.raises(MismatchError):
        lskg.il(lskg.ax(X))
    with pytest.raises(MismatchError):
        lskg.tensr(lskg.ax(X), lskg.ax(Y))
    with pytest.raises(MismatchError):
        lskg.lollir(lskg.ax(X))


def test_checker_rejects_schema_violations():
    bad_ax = GDerivation(S("X | Y |- X"), GRule.AX)
    assert not check_g(bad_ax).ok
    # tensR whose stoup went to the right premise
    left = lskg.pass_(lskg.ax(X))
    right = lskg.ax(Y)
    bad = GDerivation(S("Y | X |- X *L Y"), GRule.TENS_R, (left, right), 1)
    rep = check_g(bad)
    assert not rep.ok and rep.issues[0].path == ()
    wrong_split = GDerivation(S("X | Y |- X *L Y"), GRule.TENS_R,
                              (lskg.ax(X), lskg.pass_(lskg.ax(Y))), 1)
    assert not check_g(wrong_split).ok
    nested = lskg.il(GDerivation(S("- | |- I"), GRule.AX))
    rep = check_g(nested)
    assert [i.path for i in rep.issues] == [(0,)]


def test_checker_fragment_flag():
    d = lskg.ax(LolliR(X, Y))
    assert not check_g(d).ok
    assert check_g(d, lsk_only=False).ok


@pytest.mark.parametrize("text,expected", [
    ("- | |- I", True),
    ("X -oL Y | X |- Y", True),
    ("- | |- (X *L Y) -oL (X *L Y)", True),
    ("X *L Y | |- X *L Y", True),
    ("X | |- I *L X", False),
    ("I *L X | |- X", True),
    ("X | |- X *L I", True),
    ("X *L I | |- X", False),
    ("X *L (Y *L Z) | |- (X *L Y) *L Z", False),
    ("(X *L Y) *L Z | |- X *L (Y *L Z)", True),
])
def test_prove_g_examples(text, expected):
    s = S(text)
    d = prove_g(s)
    assert (d is not None) == expected
    if d is not None:
        assert d.conclusion == s and check_g(d).ok


def test_prove_g_rejects_right_skew_input():
    with pytest.raises(FragmentError):
        prove_g(S("X *R Y | |- X"))


# Independent oracle: plain backward search trying every rule instance, no
# invertibility shortcuts.  The measure must drop on every premise.


def _premise_options(s):
    st, ctx, c = s.stoup, s.context, s.succedent
    if st is not None and not ctx and st == c:
        yield []
    if st is None and not ctx and c == I:
        yield []
    if isinstance(c, LolliL):
        yield [StoupSequent(st, ctx + (c.arg,), c.res)]
    if isinstance(st, Unit):
        yield [StoupSequent(None, ctx, c)]
    if isinstance(st, TensL):
        yield [StoupSequent(st.left, (st.right,) + ctx, c)]
    if st is None and ctx:
        yield [StoupSequent(ctx[0], ctx[1:], c)]
    for k in range(len(ctx) + 1):
        if isinstance(st, LolliL):
            yield [StoupSequent(None, ctx[:k], st.arg), StoupSequent(st.res, ctx[k:], c)]
        if isinstance(c, TensL):
            yield [StoupSequent(st, ctx[:k], c.left), StoupSequent(None, ctx[k:], c.right)]


@lru_cache(maxsize=None)
def naive_derivable(s):
    for prems in _premise_options(s):
        assert all(measure(p) < measure(s) for p in prems)
        if all(naive_derivable(p) for p in prems):
            return True
    return False


def _lists(by_conn, budget, length):
    """Formula lists of the given length using at most ``budget`` connectives."""
    if length == 0:
        yield ()
        return
    for k in range(budget + 1):
        for f in by_conn[k]:
            for rest in _lists(by_conn, budget - k, length - 1):
                yield (f,) + rest


def _stoup_universe(budget=3):
    by_conn = enumeration.formulas_by_connectives(["X", "Y"], budget)
    for n in range(4):
        for fs in _lists(by_conn, budget, n + 1):
            *ctx, c = fs
            yield StoupSequent(None, tuple(ctx), c)
            if ctx:
                yield StoupSequent(ctx[0], tuple(ctx[1:]), c)


def test_decision_matches_naive_oracle():
    seen = derivable = 0
    for s in _stoup_universe():
        d = prove_g(s)
        assert (d is not None) == naive_derivable(s), s
        if d is not None:
            assert d.conclusion == s and check_g(d).ok
            derivable += 1
        seen += 1
    assert seen > 5000 and 0 < derivable < seen


def test_measure_decreases_along_every_enumerated_derivation():
    levels = enumeration.g_derivations(5, [X, Y])
    for d in enumeration.flat(levels):
        stack = [d]
        while stack:
            node = stack.pop()
            for p in node.premises:
                assert measure(p.conclusion) < measure(node.conclusion)
                stack.append(p)


# Cut


def test_scut_against_ax_is_identity():
    f = prove_g(S("X -oL Y | X |- Y"))
    assert scut(f, lskg.ax(Y)) == f


def test_scut_permutes_past_left_lolli():
    f1 = lskg.pass_(lskg.ax(X))
    f2 = lskg.ax(Y)
    f = lskg.lollil(f1, f2)  # X -oL Y | X |- Y
    g = prove_g(S("Y | Z |- Y *L Z"))
    r = scut(f, g)
    assert r.rule is GRule.LOLLI_L and r.premises[0] is f1
    assert r.premises[1] == scut(f2, g)
    assert r.conclusion == S("X -oL Y | X , Z |- Y *L Z")


def test_scut_principal_lolli_reduces_to_ccut():
    f1 = prove_g(S("Z | X |- Z *L X"))
    f = lskg.lollir(f1)  # Z | |- X -oL Z *L X
    g1 = lskg.pass_(lskg.ax(X))
    g2 = prove_g(S("Z *L X | Y |- (Z *L X) *L Y"))
    g = lskg.lollil(g1, g2)
    r = scut(f, g)
    assert r == ccut(g1, scut(f1, g2), 0)
    assert r.conclusion == S("Z | X , Y |- (Z *L X) *L Y") and check_g(r).ok


def test_ccut_cases():
    f = prove_g(S("- | X , Y |- X *L Y"))
    # pass on the cut formula
    g = lskg.pass_(lskg.tensl(lskg.tensr(lskg.ax(X), lskg.pass_(lskg.ax(Y)))))
    assert g.conclusion == S("- | X *L Y |- X *L Y")
    r = ccut(f, g, 0)
    assert r.conclusion == S("- | X , Y |- X *L Y") and check_g(r).ok
    # lolliR permutes
    g = lskg.lollir(prove_g(S("Z | X *L Y , Z |- (Z *L (X *L Y)) *L Z")))
    r = ccut(f, g, 0)
    assert r.rule is GRule.LOLLI_R and check_g(r).ok
    # lolliL with the cut formula in the left premise's context
    g1 = lskg.pass_(lskg.ax(TensL(X, Y)))
    g = lskg.lollil(g1, lskg.ax(Z))
    r = ccut(f, g, 0)
    assert r.rule is GRule.LOLLI_L and r.premises[0] == ccut(f, g1, 0)
    assert r.conclusion == S("X *L Y -oL Z | X , Y |- Z")


def test_cut_mismatches():
    with pytest.raises(MismatchError):
        scut(lskg.ax(X), lskg.ax(Y))
    with pytest.raises(MismatchError):
        ccut(lskg.ax(X), lskg.pass_(lskg.ax(X)), 0)
    with pytest.raises(MismatchError):
        ccut(lskg.ir(), lskg.pass_(lskg.ax(X)), 0)


def test_cut_on_small_enumerated_pairs():
    ds = enumeration.flat(enumeration.g_derivations(4, [X, I]))
    count = 0
    for f in ds:
        for g in ds:
            if g.stoup == f.succedent:
                r = scut(f, g)
                assert check_g(r).ok
                assert r.conclusion == StoupSequent(f.stoup, f.context + g.context, g.succedent)
                count += 1
            if f.stoup is None:
                for k, a in enumerate(g.context):
                    if a == f.succedent:
                        r = ccut(f, g, k)
                        ctx = g.context[:k] + f.context + g.context[k + 1:]
                        assert check_g(r).ok and r.conclusion == StoupSequent(g.stoup, ctx, g.succedent)
                        count += 1
    assert count > 100
