import random
from fractions import Fraction

import pytest

import builders as B
from rootfold.exact_lattice import LatticeMap, smith_normal_form
from rootfold.root_datum import (
    RootDatum,
    based_from_datum,
    cartan_type,
    classify_length,
    dual_based,
    dual_root_datum,
    form_value,
    generate_datum,
    invariant_inner_product,
    is_closed_subsystem,
    length_classes,
    same_type,
    validate,
    weyl_group,
)


def test_validate_accepts_standard_data():
    for base in (B.gl(2), B.gl(4), B.sp(2), B.so_odd(3), B.so_even(4),
                 B.from_cartan_sc(B.G2_CARTAN), B.sl2_weight()):
        rep = validate(base)
        assert rep.ok, rep.problems


def test_validate_catches_scaled_coroot():
    bad = RootDatum(2, [(1, -1), (-1, 1)], [(2, -2), (-2, 2)])
    rep = validate(bad)
    assert not rep.ok
    assert any("2" in p for p in rep.problems)


def test_validate_torus():
    assert validate(RootDatum(1, [], [])).ok


def test_validate_unreduced_rejected():
    bad = RootDatum(1, [(1,), (-1,), (2,), (-2,)], [(2,), (-2,), (1,), (-1,)])
    rep = validate(bad)
    assert not rep.ok


def test_root_counts():
    assert len(B.gl(4).datum.roots) == 12
    assert len(B.sp(2).datum.roots) == 8
    assert len(B.from_cartan_sc(B.G2_CARTAN).datum.roots) == 12
    assert len(B.from_cartan_sc(B.F4_CARTAN).datum.roots) == 48
    assert len(B.from_cartan_sc(B.E6_CARTAN).datum.roots) == 72


# --- Weyl groups ---

def test_weyl_sizes_small():
    assert len(weyl_group(B.sl2_weight())) == 2
    assert len(weyl_group(B.from_cartan_sc(B.A2_CARTAN))) == 6
    assert len(weyl_group(B.sp(2))) == 8
    assert len(weyl_group(B.from_cartan_sc(B.G2_CARTAN))) == 12
    assert len(weyl_group(B.gl(4))) == 24
    assert len(weyl_group(B.so_odd(3))) == 48
    assert len(weyl_group(B.so_even(4))) == 192


def test_weyl_sizes_exceptional():
    assert len(weyl_group(B.from_cartan_sc(B.F4_CARTAN))) == 1152
    assert len(weyl_group(B.from_cartan_sc(B.E6_CARTAN))) == 51840


def test_weyl_torus_is_trivial():
    els = weyl_group(RootDatum(2, [], []))
    assert len(els) == 1
    assert els[0].matrix == LatticeMap.identity(2)
    assert els[0].word == ()


def test_weyl_cap():
    from rootfold.root_datum import WeylCapError
    with pytest.raises(WeylCapError):
        weyl_group(B.from_cartan_sc(B.F4_CARTAN), cap=100)


def test_a2_canonical_words():
    els = weyl_group(B.from_cartan_sc(B.A2_CARTAN))
    assert [list(e.word) for e in els] == [[], [0], [1], [0, 1], [1, 0], [0, 1, 0]]


def test_words_multiply_to_matrix():
    base = B.sp(2)
    gens = [base.datum.reflection(i) for i in base.simple_indices]
    for e in weyl_group(base):
        m = LatticeMap.identity(base.datum.rank)
        for g in e.word:
            m = m @ gens[g]
        assert m == e.matrix


def test_weyl_closure_under_generators():
    base = B.so_odd(3)
    els = weyl_group(base)
    mats = {e.matrix for e in els}
    gens = [base.datum.reflection(i) for i in base.simple_indices]
    rng = random.Random(7)
    for _ in range(30):
        a = rng.choice(els).matrix @ rng.choice(gens)
        assert a in mats


def test_weyl_matrices_permute_roots():
    base = B.from_cartan_sc(B.G2_CARTAN)
    roots = set(base.datum.roots)
    for e in weyl_group(base):
        assert {e.matrix(r) for r in roots} == roots


# --- invariant form and lengths ---

def test_form_sl2_normalization():
    form = invariant_inner_product(B.sl2_weight().datum)
    assert form == ((Fraction(1, 2),),)
    assert form_value(form, (2,), (2,)) == 2


def test_form_ratios():
    sp4 = B.sp(2).datum
    form = invariant_inner_product(sp4)
    long_sq = form_value(form, (2, 0, *[0] * 0)[:2], (2, 0))
    short_sq = form_value(form, (1, -1), (1, -1))
    assert long_sq == 2 and short_sq == 1

    g2 = B.from_cartan_sc(B.G2_CARTAN).datum
    form = invariant_inner_product(g2)
    sq = sorted({form_value(form, r, r) for r in g2.roots})
    assert sq == [Fraction(2, 3), Fraction(2)]


def test_form_weyl_invariance_exact():
    for base in (B.sp(2), B.so_odd(3), B.from_cartan_sc(B.G2_CARTAN), B.gl(3)):
        rd = base.datum
        form = invariant_inner_product(rd)
        n = rd.rank
        basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        for i in base.simple_indices:
            s = rd.reflection(i)
            for x in basis:
                for y in basis:
                    assert form_value(form, s(x), s(y)) == form_value(form, x, y)


def test_form_radical_is_center():
    gl3 = B.gl(3).datum
    form = invariant_inner_product(gl3)
    z = (1, 1, 1)
    assert all(form_value(form, z, e) == 0
               for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_classify_length():
    g2 = B.from_cartan_sc(B.G2_CARTAN).datum
    form = invariant_inner_product(g2)
    highest = max(g2.roots, key=lambda r: form_value(form, r, r))
    assert classify_length(g2, highest) == "long"

    sp4 = B.sp(2).datum
    assert classify_length(sp4, (1, -1)) == "short"
    assert classify_length(sp4, (2, 0)) == "long"

    a2 = B.from_cartan_sc(B.A2_CARTAN).datum
    assert all(classify_length(a2, r) == "long" for r in a2.roots)

    with pytest.raises(ValueError):
        classify_length(a2, (5, 5))


def test_length_constant_on_weyl_orbits():
    base = B.sp(3)
    rd = base.datum
    lens = length_classes(rd)
    for e in weyl_group(base)[:50]:
        for i, r in enumerate(rd.roots):
            assert lens[rd.root_index(e.matrix(r))] == lens[i]


# --- cartan type recognition ---

def test_cartan_types():
    assert cartan_type(B.gl(4).datum) == ((("A", 3),), 1)
    assert cartan_type(B.sp(2).datum) == ((("C", 2),), 0)
    assert cartan_type(B.sp(3).datum) == ((("C", 3),), 0)
    assert cartan_type(B.so_odd(3).datum) == ((("B", 3),), 0)
    assert cartan_type(B.so_even(4).datum) == ((("D", 4),), 0)
    assert cartan_type(B.from_cartan_sc(B.G2_CARTAN).datum) == ((("G", 2),), 0)
    assert cartan_type(B.from_cartan_sc(B.F4_CARTAN).datum) == ((("F", 4),), 0)
    assert cartan_type(B.from_cartan_sc(B.E6_CARTAN).datum) == ((("E", 6),), 0)
    assert cartan_type(B.from_cartan_sc(B.D4_CARTAN).datum) == ((("D", 4),), 0)


def test_cartan_type_b2_reported_as_c2():
    assert cartan_type(B.so_odd(2).datum) == ((("C", 2),), 0)


def test_cartan_type_product():
    gl2 = B.gl(2).datum
    n = 2
    roots = [r + (0,) * n for r in gl2.roots] + [(0,) * n + r for r in gl2.roots]
    rd = RootDatum(2 * n, roots, roots)
    assert cartan_type(rd) == ((("A", 1), ("A", 1)), 2)


def test_cartan_type_torus():
    assert cartan_type(RootDatum(3, [], [])) == ((), 3)


def test_same_type_aliases():
    assert same_type([("B", 2)], [("C", 2)])
    assert same_type([("D", 3)], [("A", 3)])
    assert same_type([("D", 2)], [("D", 2)])
    assert not same_type([("B", 3)], [("C", 3)])


def test_so_even_rank3_is_a3():
    assert cartan_type(B.so_even(3).datum) == ((("A", 3),), 0)


# --- closed subsystems ---

def test_closed_subsystem_long_c2():
    sp4 = B.sp(2).datum
    longs = [r for r in sp4.roots if classify_length(sp4, r) == "long"]
    assert is_closed_subsystem(sp4, longs)


def test_closed_subsystem_a2():
    a2 = B.from_cartan_sc(B.A2_CARTAN)
    a1, a2r = a2.simple_roots
    rd = a2.datum
    neg = lambda v: tuple(-x for x in v)
    assert is_closed_subsystem(rd, [a1, neg(a1)])
    assert not is_closed_subsystem(rd, [a1, a2r, neg(a1), neg(a2r)])
    assert not is_closed_subsystem(rd, [a1])  # missing the negative
    with pytest.raises(ValueError):
        is_closed_subsystem(rd, [(9, 9)])


# --- duality ---

def test_double_dual_identity():
    for base in (B.gl(3), B.sp(2), B.from_cartan_sc(B.E6_CARTAN)):
        rd = base.datum
        assert dual_root_datum(dual_root_datum(rd)) == rd


def test_dual_swaps_b_and_c():
    assert cartan_type(dual_root_datum(B.sp(3).datum)) == ((("B", 3),), 0)
    assert cartan_type(dual_root_datum(B.so_odd(3).datum)) == ((("C", 3),), 0)


def test_gl_self_dual():
    rd = B.gl(4).datum
    assert dual_root_datum(rd) == rd


def test_dual_of_weight_convention_is_root_convention():
    # with a symmetric Cartan matrix the two conventions are literally dual
    sc = B.from_cartan_sc(B.E6_CARTAN)
    ad = B.from_cartan_ad(B.E6_CARTAN)
    dsc = dual_based(sc)
    assert set(dsc.datum.roots) == set(ad.datum.roots)
    assert dsc.simple_roots == ad.simple_roots


def test_e6_fundamental_group_from_root_lattice_index():
    # index of the root lattice inside weights = elementary divisors of the
    # Cartan matrix; for this datum the quotient is cyclic of order 3
    _, d, _ = smith_normal_form(LatticeMap(B.E6_CARTAN))
    divisors = [d.rows[i][i] for i in range(6)]
    assert divisors == [1, 1, 1, 1, 1, 3]


# --- base machinery ---

def test_positive_roots_split():
    base = B.from_cartan_sc(B.F4_CARTAN)
    pos = base.positive_roots()
    assert len(pos) == 24
    neg = {tuple(-x for x in base.datum.roots[i]) for i in pos}
    assert neg == {base.datum.roots[i] for i in range(len(base.datum.roots))
                   if i not in set(pos)}


def test_heights():
    base = B.from_cartan_sc(B.A2_CARTAN)
    a1, a2 = base.simple_roots
    s = tuple(x + y for x, y in zip(a1, a2))
    assert base.height(a1) == 1
    assert base.height(s) == 2
    assert base.height(tuple(-x for x in s)) == -2


def test_based_from_datum_gives_valid_base():
    for base in (B.gl(3), B.sp(2), B.so_even(4)):
        chosen = based_from_datum(base.datum)
        assert validate(chosen).ok
        assert len(chosen.simple_indices) == len(base.simple_indices)


def test_generate_datum_roundtrip():
    base = B.so_odd(3)
    regen = generate_datum(3, base.simple_roots, base.simple_coroots)
    assert set(regen.datum.roots) == set(base.datum.roots)
    assert validate(regen).ok


def test_generate_datum_rejects_infinite_type():
    # an affine-style matrix closes on infinitely many vectors
    with pytest.raises(ValueError):
        generate_datum(2, [(1, 0), (0, 1)], [(2, -2), (-2, 2)], cap=500)
