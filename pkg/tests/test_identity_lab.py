"""Finite-group lab: catalog, products, exhaustive identity verdicts."""

import numpy as np
import pytest

from miflab import BudgetExceeded, small_group
from miflab import identity_lab as il
from miflab import mixed_words as mw
from miflab.parser import parse_mixed_word


# -- independent oracle: a hand-rolled exhaustive loop -------------------------


def oracle_holds(word, group):
    ids = word.variable_ids
    if not ids:
        return group.is_identity(word.constant_value())
    from itertools import product

    for combo in product(range(group.size), repeat=len(ids)):
        if not group.is_identity(mw.evaluate(word, dict(zip(ids, combo)))):
            return False
    return True


def comm_word(group, *constants):
    return mw.left_normed(
        [mw.variable(group)] + [mw.constant(group, c) for c in constants]
    )


# -- catalog --------------------------------------------------------------------


def test_catalog_orders():
    assert small_group("C5").size == 5
    assert small_group("D4").size == 8
    assert small_group("S4").size == 24
    assert small_group("V4").size == 4
    assert small_group("C2xC3").size == 6


def test_direct_product_examples():
    assert il.direct_product(il.cyclic(2), il.cyclic(2)).size == 4
    b = small_group("S3")
    one = il.direct_product(il.cyclic(1), b)
    assert one.size == b.size
    # C1 x B is isomorphic to B: the multiplication tables agree elementwise
    assert np.array_equal(one.table, b.table)
    assert il.direct_product(small_group("S3"), il.cyclic(2)).size == 12


def test_group_axiom_validation_rejects_bad_table():
    with pytest.raises(ValueError):
        il.FiniteGroup([[0, 1], [0, 1]])  # no identity
    # C5 with one row bent out of associativity
    bad = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    bad[2][3], bad[2][4] = bad[2][4], bad[2][3]
    with pytest.raises(ValueError):
        il.FiniteGroup(bad)


def test_wreath_orders():
    assert il.wreath_product(2, il.cyclic(2)).group.size == 8
    assert il.wreath_product(2, il.cyclic(3)).group.size == 18
    assert il.wreath_product(3, il.cyclic(2)).group.size == 24


def test_wreath_base_decomposition():
    data = il.wreath_product(2, il.cyclic(2))
    G = data.group
    assert len(data.base) == 4  # base subgroup C2 x C2
    assert G.is_subgroup(data.base)
    assert G.is_normal(data.base)
    assert len(data.first_factor) == 2
    assert len(data.rest_factor) == 2
    # the two factors intersect trivially and commute
    assert set(data.first_factor) & set(data.rest_factor) == {G.identity}


# -- canned identities ------------------------------------------------------------


def test_direct_product_identity_all_pairs():
    A, B = il.cyclic(2), small_group("S3")
    G = il.direct_product(A, B)
    for a in range(1, A.size):
        for b in range(1, B.size):
            word = comm_word(G, il.product_left(a, B.size), il.product_right(b, B.size))
            verdict = il.is_mixed_identity(word, G)
            assert verdict.holds
            assert verdict.substitutions_checked == G.size


def test_wreath_identity():
    for k, base in [(2, il.cyclic(2)), (2, il.cyclic(3)), (3, il.cyclic(2))]:
        data = il.wreath_product(k, base)
        G = data.group
        for a in data.first_factor:
            if G.is_identity(a):
                continue
            for b in data.rest_factor:
                if G.is_identity(b):
                    continue
                word = comm_word(G, a, a, b)
                assert il.is_mixed_identity(word, G).holds


def test_wreath_doubled_commutator_is_needed():
    # over a nonabelian base the plain [[x, a], b] can fail; the doubled
    # [[[x, a], a], b] always holds
    data = il.wreath_product(2, il.symmetric(3))
    G = data.group
    a = data.first_factor[data.base_group.element_by_label("(23)")]
    b = data.rest_factor[data.base_group.element_by_label("(23)")]
    plain = comm_word(G, a, b)
    verdict = il.is_mixed_identity(plain, G)
    assert not verdict.holds
    assert verdict.counterexample is not None
    # the counterexample re-checks and is the lexicographically first one
    x = verdict.counterexample[1]
    assert not G.is_identity(mw.evaluate(plain, {1: x}))
    for earlier in range(x):
        assert G.is_identity(mw.evaluate(plain, {1: earlier}))
    assert il.is_mixed_identity(comm_word(G, a, a, b), G).holds


def test_s3_explicit_word_false():
    S3 = small_group("S3")
    word = parse_mixed_word("[[x,(12)],(13)]", S3, constants=S3.constants())
    verdict = il.is_mixed_identity(word, S3)
    assert not verdict.holds
    assert oracle_holds(word, S3) is False
    x = verdict.counterexample[1]
    assert not S3.is_identity(mw.evaluate(word, {1: x}))


def test_s3_commutator_into_abelian_derived_subgroup_is_identity():
    # [x, (12)] always lands in A3, which is abelian and contains (123),
    # so [[x,(12)],(123)] = 1 does hold on S3
    S3 = small_group("S3")
    word = parse_mixed_word("[[x,(12)],(123)]", S3, constants=S3.constants())
    assert il.is_mixed_identity(word, S3).holds
    assert oracle_holds(word, S3) is True


def test_center_identity_property():
    for name in ["C4", "D4", "C2xC3", "S3xC2"]:
        G = small_group(name)
        for z in G.center():
            if G.is_identity(z):
                continue
            assert il.is_mixed_identity(comm_word(G, z), G).holds


def test_verdicts_match_oracle_on_small_words():
    S3 = small_group("S3")
    consts = S3.constants()
    for text in ["[x, (123)]", "[[x,(12)],(23)]", "[x1, x2]", "[[x,(123)],(132)]"]:
        word = parse_mixed_word(text, S3, constants=consts)
        assert il.is_mixed_identity(word, S3).holds == oracle_holds(word, S3)


# -- the factorial identity ---------------------------------------------------------


def test_factorial_identity_s4_v4():
    S4 = small_group("S4")
    N = S4.closure([S4.element_by_label("(12)(34)"), S4.element_by_label("(13)(24)")])
    assert len(N) == 4 and S4.is_normal(N)
    for g in sorted(N):
        if S4.is_identity(g):
            continue
        assert il.factorial_identity_check(S4, N, g)


def test_factorial_identity_d4_center():
    D4 = small_group("D4")
    z = [e for e in D4.center() if not D4.is_identity(e)]
    assert len(z) == 1
    assert il.factorial_identity_check(D4, D4.closure(z), z[0])


def test_factorial_identity_rejects_bad_input():
    S4 = small_group("S4")
    N = S4.closure([S4.element_by_label("(12)(34)"), S4.element_by_label("(13)(24)")])
    with pytest.raises(ValueError):
        il.factorial_identity_check(S4, N, S4.identity)
    with pytest.raises(ValueError):
        il.factorial_identity_check(S4, {S4.identity, S4.element_by_label("(12)")}, S4.element_by_label("(12)"))


# -- subnormal lifting ------------------------------------------------------------------


def test_sub_commutator_lifting():
    # if w = 1 holds on a normal subgroup N, then w([x, n]) = 1 holds on G
    S4 = small_group("S4")
    N = S4.closure([S4.element_by_label("(12)(34)"), S4.element_by_label("(13)(24)")])
    v = S4.element_by_label("(12)(34)")
    word = comm_word(S4, v)  # [x, v]: a mixed identity of the abelian N
    for x in N:
        assert S4.is_identity(mw.evaluate(word, {1: x}))
    for n in sorted(N):
        if S4.is_identity(n):
            continue
        lifted = mw.sub_commutator(word, n)
        assert il.is_mixed_identity(lifted, S4).holds


# -- budget guards ------------------------------------------------------------------------


def test_budget_guards():
    with pytest.raises(BudgetExceeded):
        il.wreath_product(12, il.cyclic(4))
    S5 = small_group("S5")
    G = il.direct_product(S5, small_group("S4"))  # order 2880
    word = mw.reduce(G, [mw.var_syllable(1, 1), mw.var_syllable(2, 1)])
    with pytest.raises(BudgetExceeded):
        il.is_mixed_identity(word, G)


def test_subgroup_enumeration_small():
    V4 = small_group("V4")
    subs = V4.all_subgroups()
    assert [len(s) for s in subs] == [1, 2, 2, 2, 4]


def test_group_with_constants_validation():
    S3 = small_group("S3")
    bound = il.GroupWithConstants(S3, S3.constants())
    assert bound.constants["(12)"] == S3.element_by_label("(12)")
    with pytest.raises(ValueError):
        il.GroupWithConstants(S3, {"bad": 99})
