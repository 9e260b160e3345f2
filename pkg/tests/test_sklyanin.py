"""Classification, the substitution chain, the recursion, orbits, isomorphism."""

import itertools
import random
from fractions import Fraction

import pytest

from ncquad import GF, QQ, QQ_THETA, NoCubeRootError, PreconditionViolatedError, ThetaRational
from ncquad.groebner import complete, graded_dim_oracle, hilbert_coeffs, normal_words
from ncquad.linalg import row_space_equal
from ncquad.ncpoly import apply_sub, degree_lex
from ncquad.sklyanin import (
    ChainResult,
    IsoDecision,
    ParamTriple,
    RecursionOutcome,
    SklyaninKind,
    are_isomorphic,
    classify,
    expected_normal_words,
    group_invariants,
    in_m_set,
    iso_group_orbit,
    one_dimensional_representations,
    coefficient_recursion,
    root1_sub,
    root2_sub,
    sklyanin_presentation,
    staircase_presentation,
    staircase_relations,
    substitution_chain,
)

ORD3 = degree_lex(3)
WORDS2 = sorted(((i, j) for i in range(3) for j in range(3)), key=ORD3.key, reverse=True)
X, Y, Z = 0, 1, 2


def spans_equal(polys_a, polys_b, field):
    ra = [[f.coeff(w) for w in WORDS2] for f in polys_a]
    rb = [[f.coeff(w) for w in WORDS2] for f in polys_b]
    return row_space_equal(ra, rb, field)


def transported(sub, presentation):
    return [apply_sub(rel, sub) for rel in presentation.relations]


def check_witness(sub, t_from, t_to):
    assert spans_equal(
        transported(sub, t_from.presentation()), list(t_to.presentation().relations), t_from.field
    )


# ---------------------------------------------------------------------------
# classification


def test_classify_requires_cube_root():
    with pytest.raises(NoCubeRootError):
        classify(ParamTriple.make(QQ, 1, 1, 1))


def test_classify_free():
    c = classify(ParamTriple.make(QQ_THETA, 0, 0, 0))
    assert c.kind is SklyaninKind.FREE_ALGEBRA


def test_classify_symmetric_is_mono_xx():
    t = ParamTriple.make(QQ_THETA, 1, 1, 1)
    c = classify(t)
    assert c.kind is SklyaninKind.MONO_XX
    check_witness(c.witness, t, c.canonical)


def test_classify_two_zero_cases():
    for triple, kind in (
        ((1, 0, 0), SklyaninKind.MONO_XY),
        ((0, 1, 0), SklyaninKind.MONO_XY),
        ((0, 0, 1), SklyaninKind.MONO_XX),
    ):
        t = ParamTriple.make(QQ_THETA, *triple)
        c = classify(t)
        assert c.kind is kind
        check_witness(c.witness, t, c.canonical)


def test_classify_cube_equal_distinct_is_mono_xy():
    w = QQ_THETA.theta()
    t = ParamTriple(QQ_THETA, QQ_THETA.one, w, w * w)
    c = classify(t)
    assert c.kind is SklyaninKind.MONO_XY
    check_witness(c.witness, t, c.canonical)


def test_classify_quantum_r_zero():
    t = ParamTriple.make(QQ_THETA, 1, 2, 0)
    c = classify(t)
    assert c.kind is SklyaninKind.QUANTUM_POLY
    assert c.alpha == QQ_THETA.parse("-2")
    check_witness(c.witness, t, c.canonical)


def test_classify_quantum_sum_cube_case():
    w = QQ_THETA.theta()
    one = QQ_THETA.one
    t = ParamTriple.make(QQ_THETA, 2, -1, -1)
    c = classify(t)
    assert c.kind is SklyaninKind.QUANTUM_POLY
    assert c.alpha == w * (one * 2 + w * w) / (one * 2 + w)
    check_witness(c.witness, t, c.canonical)


def test_classify_generic():
    t = ParamTriple.make(QQ_THETA, 1, 2, 1)
    c = classify(t)
    assert c.kind is SklyaninKind.GENERIC_M1
    assert c.pair == (QQ_THETA.one, QQ_THETA.parse("2"))


def test_classification_partition():
    rng = random.Random(313)
    f = GF(31)
    for _ in range(200):
        t = ParamTriple(f, *(f.from_int(rng.randrange(31)) for _ in range(3)))
        kinds = [t.is_free(), t.is_degenerate(), t.in_m1(), t.in_m2()]
        if t.is_free():
            assert t.is_degenerate() and not t.in_m1() and not t.in_m2()
        elif t.is_degenerate():
            assert not t.in_m1() and not t.in_m2()
        else:
            assert t.in_m1() != t.in_m2()
        classify(t)  # must not raise


def test_series_dichotomy_samples():
    rng = random.Random(59)
    f = GF(31)
    binom = [(d + 1) * (d + 2) // 2 for d in range(7)]
    for _ in range(12):
        t = ParamTriple(f, *(f.from_int(rng.randrange(31)) for _ in range(3)))
        g = complete(t.presentation(), 6)
        h = hilbert_coeffs(g, 6)
        c = classify(t)
        if c.kind in (SklyaninKind.QUANTUM_POLY, SklyaninKind.GENERIC_M1):
            assert h == binom
        elif c.kind is SklyaninKind.FREE_ALGEBRA:
            assert h == [3**d for d in range(7)]
        else:
            assert h == [1] + [3 * 2 ** (d - 1) for d in range(1, 7)]


# ---------------------------------------------------------------------------
# elementary moves


def test_root1_examples():
    w = QQ_THETA.theta()
    t, sub = root1_sub(ParamTriple.make(QQ_THETA, 1, 1, 1))
    assert (t.p, t.q, t.r) == (QQ_THETA.one, QQ_THETA.one, w)
    t0, sub0 = root1_sub(ParamTriple.make(QQ_THETA, 2, 5, 0))
    assert (t0.p, t0.q, t0.r) == (QQ_THETA.parse("2"), QQ_THETA.parse("5"), QQ_THETA.zero)
    t2, _ = root1_sub(t)
    assert t2.r == w * w


def test_root2_examples():
    w = QQ_THETA.theta()
    one = QQ_THETA.one
    t, sub = root2_sub(ParamTriple.make(QQ_THETA, 1, 1, 1))
    assert (t.p, t.q, t.r) == (QQ_THETA.zero, QQ_THETA.zero, one * 3)
    # with the canonical cube root, (1, w, w^2) lands on (3w^2, 0, 0), in the
    # same class as the monomial xy-type algebra
    t2, _ = root2_sub(ParamTriple(QQ_THETA, one, w, w * w))
    assert (t2.p, t2.q, t2.r) == (3 * w * w, QQ_THETA.zero, QQ_THETA.zero)
    t3, _ = root2_sub(ParamTriple.make(QQ_THETA, 0, 0, 0))
    assert t3.is_free()


# ---------------------------------------------------------------------------
# the substitution chain


def test_chain_on_one_two():
    f = QQ_THETA
    res = substitution_chain(f, f.one, f.parse("2"))
    ap, bp = res.ab_coeffs
    assert ap == ThetaRational(Fraction(-135, 28), Fraction(-27, 28))
    assert bp == ThetaRational(Fraction(-108, 28), Fraction(27, 28))
    assert res.alpha == f.parse("-7")
    assert res.gamma == f.parse("49")
    assert res.alpha_matches_formula
    assert res.gamma_matches_formula


def test_chain_transport_and_leads():
    rng = random.Random(6161)
    f = GF(31)
    done = 0
    while done < 8:
        a, b = f.from_int(rng.randrange(31)), f.from_int(rng.randrange(31))
        if not in_m_set(f, a, b) or not (a + b) or a**3 == b**3:
            continue
        res = substitution_chain(f, a, b)
        moved = transported(res.composed, sklyanin_presentation(f, a, b, f.one))
        from ncquad.linalg import rref

        _, pivots = rref([[m.coeff(w) for w in WORDS2] for m in moved], f)
        assert [WORDS2[c] for c in pivots] == [(X, X), (X, Y), (Y, Z)]
        assert spans_equal(moved, staircase_relations(f, res.alpha, res.gamma), f)
        assert res.alpha or res.gamma
        assert res.alpha_matches_formula and res.gamma_matches_formula
        done += 1


def test_chain_preconditions():
    f = QQ_THETA
    with pytest.raises(PreconditionViolatedError):
        substitution_chain(f, f.one, -f.one)  # a + b = 0
    with pytest.raises(PreconditionViolatedError):
        substitution_chain(f, f.parse("2"), f.parse("2"))  # a^3 = b^3
    with pytest.raises(PreconditionViolatedError):
        substitution_chain(f, f.zero, f.zero)  # outside the admissible set


# ---------------------------------------------------------------------------
# the recursion and normal words


def test_recursion_sigma_immediately():
    states = coefficient_recursion(QQ, QQ.zero, QQ.one, 8)
    assert len(states) == 1
    assert states[0].outcome is RecursionOutcome.SIGMA
    assert (states[0].a, states[0].b) == (QQ.zero, QQ.zero)


def test_recursion_rejects_zero_parameters():
    with pytest.raises(PreconditionViolatedError):
        coefficient_recursion(QQ, QQ.zero, QQ.zero, 5)


def test_recursion_generic_continues():
    f = GF(31)
    states = coefficient_recursion(f, f.from_int(4), f.from_int(4), 8)
    assert len(states) == 9
    assert all(s.outcome is RecursionOutcome.CONTINUE for s in states)


def test_recursion_matches_basis_coefficients():
    # the element with leading word x z^k x carries -a_k on x z^{k+1}, and
    # likewise for y
    f = GF(31)
    al, ga = f.from_int(4), f.from_int(4)
    states = coefficient_recursion(f, al, ga, 6)
    g = complete(staircase_presentation(f, al, ga), 8)
    by_lead = {e.leading_word(ORD3): e for e in g.elements}
    for s in states[:7]:
        ex = by_lead[(X,) + (Z,) * s.k + (X,)]
        ey = by_lead[(X,) + (Z,) * s.k + (Y,)]
        assert ex.coeff((X,) + (Z,) * (s.k + 1)) == -s.a
        assert ey.coeff((X,) + (Z,) * (s.k + 1)) == -s.b


def test_case1_normal_words_and_counts():
    f = GF(31)
    g = complete(staircase_presentation(f, f.from_int(4), f.from_int(4)), 8)
    for d in range(9):
        words = expected_normal_words(d)
        assert len(words) == (d + 1) * (d + 2) // 2
        assert normal_words(g, d) == words
    leads = set(g.lead_words())
    expected_leads = {(Y, Z)} | {(X,) + (Z,) * k + (g2,) for k in range(7) for g2 in (X, Y)}
    assert leads == expected_leads


def test_case1_word_shapes():
    words = expected_normal_words(2)
    assert set(words) == {(Z, Z), (Z, Y), (Y, Y), (Z, X), (Y, X), (X, Z)}


def test_case2_count_property():
    for k in (0, 1, 2):
        for d in range(9):
            assert len(expected_normal_words(d, sigma_k=k)) == (d + 1) * (d + 2) // 2


def test_sigma_zero_one_finite_basis():
    # the ideal for (0,1) closes up with seven elements: the six with the
    # short staircase leads plus an oracle-verified element with lead xzyyy
    f = QQ
    g = complete(staircase_presentation(f, f.zero, f.one), 10)
    leads = [e.leading_word(ORD3) for e in g.elements]
    assert leads == [
        (X, X),
        (X, Y),
        (Y, Z),
        (X, Z, X),
        (X, Z, Z),
        (X, Z, Y, X),
        (X, Z, Y, Y, Y),
    ]
    assert hilbert_coeffs(g, 8) == [(d + 1) * (d + 2) // 2 for d in range(9)]


def test_sigma_extra_element_is_forced():
    # without the seventh element the degree-5 normal-word count would exceed
    # the exact dimension, so a six-element basis cannot be complete
    f = QQ
    pres = staircase_presentation(f, f.zero, f.one)
    oracle_dim5 = graded_dim_oracle(pres, 5)
    g = complete(pres, 10)
    short_leads = [w for w in g.lead_words() if w != (X, Z, Y, Y, Y)]
    count = 0
    for word in itertools.product(range(3), repeat=5):
        if not any(
            word[i : i + len(l)] == l
            for i in range(5)
            for l in short_leads
        ):
            count += 1
    assert count == oracle_dim5 + 1


def test_case2_family_agrees_through_low_degrees():
    # the combinatorial family matches the actual normal words up to the
    # degree where the extra element enters (k + 5)
    f = QQ
    g = complete(staircase_presentation(f, f.zero, f.one), 10)
    for d in range(5):
        assert normal_words(g, d) == expected_normal_words(d, sigma_k=0)
    assert normal_words(g, 5) != expected_normal_words(5, sigma_k=0)
    assert len(normal_words(g, 5)) == len(expected_normal_words(5, sigma_k=0))


# ---------------------------------------------------------------------------
# orbits, the group, isomorphism


def test_orbit_size_and_members():
    f = QQ_THETA
    w = f.theta()
    two, three = f.parse("2"), f.parse("3")
    orbit = iso_group_orbit(f, two, three)
    assert len(orbit) == 24
    assert (three, two) in set(orbit)
    assert (w * two, w * three) in set(orbit)
    for a, b in orbit:
        assert in_m_set(f, a, b)


def test_orbit_closure_and_swap_symmetry():
    f = QQ_THETA
    w = f.theta()
    one = f.one
    orbit = set(iso_group_orbit(f, f.parse("2"), f.parse("3")))
    for a, b in orbit:
        assert (b, a) in orbit
        assert (w * a, w * b) in orbit
        d = a + b + one
        assert ((w * a + w * w * b + one) / d, (w * w * a + w * b + one) / d) in orbit


def test_orbit_matches_map_family():
    # 3 rescalings, 3 swapped rescalings, 18 fractional maps with numerator
    # twists j != k and denominator twist n = j + k + m
    f = QQ_THETA
    th = f.theta()
    one = f.one
    a, b = f.parse("2"), f.parse("3")
    family = set()
    for j in range(3):
        family.add((th**j * a, th**j * b))
        family.add((th**j * b, th**j * a))
    for j in range(3):
        for k in range(3):
            if j == k:
                continue
            for m in range(3):
                n = (j + k + m) % 3
                d = a + b + th**n
                family.add(((th**j * a + th**k * b + th**m) / d, (th**k * a + th**j * b + th**m) / d))
    assert len(family) == 24
    assert family == set(iso_group_orbit(f, a, b))


def test_orbit_rejects_inadmissible_pair():
    f = QQ_THETA
    with pytest.raises(PreconditionViolatedError):
        iso_group_orbit(f, f.zero, f.zero)


def test_group_invariants():
    inv = group_invariants()
    assert inv.order == 24
    assert inv.center_order == 2
    assert max(inv.element_orders) == 6
    assert inv.element_orders == inv.sl2_f3_element_orders
    assert inv.sl2_f3_order == 24 and inv.sl2_f3_center_order == 2
    assert inv.matches_sl2_f3


def test_orbit_members_share_hilbert_series():
    f = QQ_THETA
    orbit = iso_group_orbit(f, f.parse("2"), f.parse("3"))
    reference = None
    for a, b in orbit[:5]:
        g = complete(sklyanin_presentation(f, a, b, f.one), 5)
        h = hilbert_coeffs(g, 5)
        reference = reference or h
        assert h == reference


def test_are_isomorphic_examples():
    f = QQ_THETA
    dec = are_isomorphic(ParamTriple.make(f, 1, 1, 1), ParamTriple.make(f, 0, 0, 1))
    assert dec.isomorphic
    dec = are_isomorphic(ParamTriple.make(f, 1, -2, 0), ParamTriple.make(f, 2, -1, 0))
    assert dec.isomorphic
    dec = are_isomorphic(ParamTriple.make(f, 1, 2, 1), ParamTriple.make(f, 2, 1, 1))
    assert dec.isomorphic
    dec = are_isomorphic(ParamTriple.make(f, 1, 2, 1), ParamTriple.make(f, 1, 5, 1))
    assert not dec.isomorphic


def test_are_isomorphic_witnesses_transport():
    f = QQ_THETA
    pairs = [
        ((1, 1, 1), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 0)),
        ((1, -2, 0), (2, -1, 0)),
        ((1, 2, 1), (2, 1, 1)),
    ]
    for a, b in pairs:
        t1, t2 = ParamTriple.make(f, *a), ParamTriple.make(f, *b)
        dec = are_isomorphic(t1, t2)
        assert dec.isomorphic
        check_witness(dec.witness, t1, t2)


def test_degenerate_never_isomorphic_to_nondegenerate():
    f = QQ_THETA
    dec = are_isomorphic(ParamTriple.make(f, 1, 1, 1), ParamTriple.make(f, 1, 2, 1))
    assert not dec.isomorphic
    dec = are_isomorphic(ParamTriple.make(f, 1, 0, 0), ParamTriple.make(f, 1, 1, 0))
    assert not dec.isomorphic


def test_quantum_never_isomorphic_to_generic():
    f = QQ_THETA
    dec = are_isomorphic(ParamTriple.make(f, 1, 1, 0), ParamTriple.make(f, 1, 2, 1))
    assert not dec.isomorphic
    assert not are_isomorphic(ParamTriple.make(f, 1, 2, 1), ParamTriple.make(f, 1, 1, 0)).isomorphic


def test_quantum_distinct_parameters_not_isomorphic():
    f = QQ_THETA
    dec = are_isomorphic(ParamTriple.make(f, 1, -2, 0), ParamTriple.make(f, 1, -3, 0))
    assert not dec.isomorphic


def test_isomorphism_preserves_series():
    f = QQ_THETA
    t1 = ParamTriple.make(f, 1, 2, 1)
    t2 = ParamTriple.make(f, 2, 1, 1)
    assert are_isomorphic(t1, t2).isomorphic
    h1 = hilbert_coeffs(complete(t1.presentation(), 5), 5)
    h2 = hilbert_coeffs(complete(t2.presentation(), 5), 5)
    assert h1 == h2


# ---------------------------------------------------------------------------
# one-dimensional representations


def check_rep(t, rep):
    a, b, c = rep
    p, q, r = t.p, t.q, t.r
    assert (p + q) * a * b == -r * c * c
    assert (p + q) * b * c == -r * a * a
    assert (p + q) * a * c == -r * b * b


def test_one_dim_reps_trivial_on_m1():
    rng = random.Random(404)
    f = GF(31)
    found = 0
    while found < 10:
        t = ParamTriple(f, *(f.from_int(rng.randrange(31)) for _ in range(3)))
        if not t.in_m1():
            continue
        assert one_dimensional_representations(t) == []
        found += 1


def test_one_dim_reps_exhaustive_cross_check():
    rng = random.Random(405)
    f = GF(7)
    for _ in range(20):
        t = ParamTriple(f, *(f.from_int(rng.randrange(7)) for _ in range(3)))
        witnesses = one_dimensional_representations(t)
        brute = []
        for vals in itertools.product(range(7), repeat=3):
            if not any(vals):
                continue
            a, b, c = (f.from_int(v) for v in vals)
            if (
                (t.p + t.q) * a * b == -t.r * c * c
                and (t.p + t.q) * b * c == -t.r * a * a
                and (t.p + t.q) * a * c == -t.r * b * b
            ):
                brute.append((a, b, c))
        assert bool(witnesses) == bool(brute)
        for wit in witnesses:
            check_rep(t, wit)


def test_one_dim_reps_quantum_has_witness():
    f = QQ_THETA
    t = ParamTriple.make(f, 1, 1, 0)
    reps = one_dimensional_representations(t)
    assert reps
    check_rep(t, reps[0])
