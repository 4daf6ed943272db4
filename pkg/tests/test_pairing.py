"""Dual pairing recursion, module actions and the pairing checkers.

Word-level values are frozen from hand computations: pairing a length-n
word means splitting n-1 coproducts, and for short words every summand
can be written out on paper.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jqsphere import scalars as sc
from jqsphere.hopf import HopfStructure
from jqsphere.jordanian import build_catalog
from jqsphere.ncalg import FreePoly, TensorPoly
from jqsphere.pairing import (
    SPLIT_ENV,
    SPLIT_FUN,
    STRATEGIES,
    DualPairing,
    check_invariance,
    check_pairing_annihilates,
    check_pairing_axioms,
    check_twisted_primitive,
)

CAT = build_catalog()
DP = CAT.pairing()
FUN = CAT.algebra("funh")
ENV = CAT.algebra("uh")

A, B, C, D = (FreePoly.gen(FUN, n) for n in "abcd")
T, TI, Y, H = (FreePoly.gen(ENV, n) for n in ("T", "Tinv", "Y", "H"))


def val(u, a, strategy=SPLIT_FUN):
    return DP.pair(u, a, strategy)


# -- base table and frozen word values ----------------------------------


def test_generator_table():
    spec = CAT.data.pairings["jordanian_duality"]
    for (ug, ag), want in spec.table.items():
        got = val(FreePoly.gen(ENV, ug), FreePoly.gen(FUN, ag))
        assert got == want
    # spot values straight from the table
    assert val(T, B) == sc.h
    assert val(TI, B) == -sc.h
    assert val(Y, C) == sc.ONE
    assert val(H, A) == sc.ONE
    assert val(H, D) == -sc.ONE


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_frozen_length_two_values(strategy):
    # split through the coproducts by hand:
    #   <H, ab> = <H,a><T,b> + <Tinv,a><H,b> = h
    #   <H, ba> = <H,b><T,a> + <Tinv,b><H,a> = -h
    #   <H, a^2> = 2, <Y, ca> = 1, <T, ab> = <T,a><T,b> = h
    assert val(H, A * B, strategy) == sc.h
    assert val(H, B * A, strategy) == -sc.h
    assert val(H, A * A, strategy) == 2 * sc.ONE
    assert val(Y, C * A, strategy) == sc.ONE
    assert val(T, A * B, strategy) == sc.h


def test_grouplike_pairs_multiplicatively():
    # T is group-like, so the value on a word is the product over letters
    for letters in (("a", "b"), ("b", "d"), ("a", "a", "d"), ("c", "b", "a")):
        w = FreePoly.unit(FUN)
        prod = sc.ONE
        for name in letters:
            w = w * FreePoly.gen(FUN, name)
            prod = prod * val(T, FreePoly.gen(FUN, name))
        assert val(T, w) == prod


def test_unit_rows_reduce_to_counits():
    eps_fun = CAT.hopf("funh").counit
    eps_env = CAT.hopf("uh").counit
    for a in (A, B, C * D, A * B - B):
        assert val(FreePoly.unit(ENV), a) == eps_fun.scalar(a)
    for u in (T, Y, H * Y, T * T - H):
        assert val(u, FreePoly.unit(FUN)) == eps_env.scalar(u)


def test_bilinearity():
    lhs = val(H + Y.scale(sc.h), A * B)
    assert lhs == val(H, A * B) + sc.h * val(Y, A * B)
    rhs = val(H, A * B - (B * A).scale(sc.rational(1, 2)))
    assert rhs == val(H, A * B) - sc.rational(1, 2) * val(H, B * A)


def test_pairing_normalizes_before_splitting():
    # d*a and its normal form c*b - h*c*a + 1 must pair identically
    for u in (T, Y, H, Y * H):
        assert val(u, D * A) == val(u, C * B - (C * A).scale(sc.h) + 1)


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError, match="strategy"):
        DP.pair(T, A, strategy="sideways")


# -- strategy agreement and cache behaviour -----------------------------

ENV_WORDS = st.lists(st.sampled_from(["T", "Tinv", "Y", "H"]), min_size=0, max_size=3)
FUN_WORDS = st.lists(st.sampled_from(["a", "b", "c", "d"]), min_size=0, max_size=3)


@settings(max_examples=120, deadline=None)
@given(ENV_WORDS, FUN_WORDS)
def test_split_directions_agree(uls, als):
    u = FreePoly.from_word(ENV, tuple(ENV.index(n) for n in uls))
    a = FreePoly.from_word(FUN, tuple(FUN.index(n) for n in als))
    assert DP.pair(u, a, SPLIT_FUN) == DP.pair(u, a, SPLIT_ENV)


def test_cache_is_transparent():
    u, a = Y * H, A * B * C
    first = DP.pair(u, a)
    assert DP._memo
    DP.clear_cache()
    assert not DP._memo
    assert DP.pair(u, a) == first


# -- module actions ------------------------------------------------------


def test_action_values_on_generators():
    assert DP.left_action(H, A) == A
    assert DP.left_action(H, B) == -B
    assert DP.left_action(Y, A) == B
    assert DP.left_action(Y, B).is_zero()
    assert DP.right_action(A, H) == A
    assert DP.right_action(C, Y) == A
    assert DP.right_action(B, Y).is_zero()


def test_left_action_is_a_module_action():
    for u, v in ((H, Y), (Y, T), (H, H)):
        for a in (A, B, C * D):
            assert DP.left_action(u * v, a) == DP.left_action(u, DP.left_action(v, a))


def test_right_action_is_a_right_module_action():
    for u, v in ((H, Y), (Y, T)):
        for a in (A, B * C):
            assert DP.right_action(a, u * v) == DP.right_action(
                DP.right_action(a, u), v
            )


def test_actions_respect_relations():
    # acting on a defining relation gives zero, the action lives on the quotient
    rels = CAT.relations("funh")
    for _, rel in rels:
        assert DP.left_action(H, rel).is_zero()
        assert DP.right_action(rel, Y).is_zero()


# -- checker entry points ------------------------------------------------


def short_words(system, deg):
    return list(system.normal_words(deg))


def test_pairing_axioms_pass_on_short_words():
    ew = short_words(CAT.system("uh"), 2)
    fw = short_words(CAT.system("funh"), 2)
    assert check_pairing_axioms(DP, ew, fw, product_depth=1) == []


def test_pairing_annihilates_relations():
    ew = short_words(CAT.system("uh"), 2)
    fw = short_words(CAT.system("funh"), 2)
    assert check_pairing_annihilates(DP, CAT.relations("funh"), "fun", ew) == []
    assert check_pairing_annihilates(DP, CAT.relations("uh"), "env", fw) == []


def test_twisted_primitive_checker():
    elt = CAT.element("PL_cleared")
    assert check_twisted_primitive(DP, elt, T) == []
    # a group-like element fails all three twisted-primitivity conditions
    out = check_twisted_primitive(DP, T, T)
    assert [label for label, _ in out] == ["coproduct", "counit", "antipode"]


def test_invariance_checker_reports_failures():
    out = check_invariance(DP, H, [("b", B)], "left")
    assert ("gen:b", "-b") in out


# -- construction validation ---------------------------------------------


def test_base_table_must_be_total():
    spec = CAT.data.pairings["jordanian_duality"]
    partial = dict(spec.table)
    partial.pop(("H", "d"))
    with pytest.raises(ValueError, match="base table misses"):
        DualPairing(CAT.hopf("uh"), CAT.hopf("funh"), partial)


def test_letterwise_coproducts_required():
    env = CAT.hopf("uh")
    fun = CAT.hopf("funh")
    fat = HopfStructure(
        env.system,
        # a coproduct with a length-2 tensor factor cannot drive the recursion
        _fat_coproduct(env),
        env.counit,
        env.antipode,
    )
    with pytest.raises(ValueError, match="length > 1"):
        DualPairing(fat, fun, CAT.data.pairings["jordanian_duality"].table)


def _fat_coproduct(env):
    from jqsphere.hopf import GenMorphism

    alg = env.alg
    images = {}
    for i, name in enumerate(alg.gens):
        p = FreePoly.from_word(alg, (i,))
        images[name] = TensorPoly.of(p * p, FreePoly.unit(alg))
    return GenMorphism("fat", alg, (alg, alg), images)
