"""Root datum / Weyl combinatorics: pinned examples and structural properties."""

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qweyl.rootdata import (
    AffineWeight,
    cartan_datum,
    dominant,
    parse_weight,
    weyl_orbit,
)


def test_reflect_examples():
    A2 = cartan_datum("A2")
    assert A2.reflect(1, (1, 0)) == (-1, 1)
    A1 = cartan_datum("A1")
    for lam in range(-4, 5):
        assert A1.shifted_reflect(1, (lam,)) == (-lam - 2,)


def test_shifted_reflect_involution():
    for tag in ("A2", "B2", "G2"):
        D = cartan_datum(tag)
        for lam in [(0, 0), (3, 1), (-2, 5)]:
            for i in D.letters:
                assert D.shifted_reflect(i, D.shifted_reflect(i, lam)) == lam


def test_shifted_action_is_group_action():
    D = cartan_datum("B2")
    rng = random.Random(7)
    for _ in range(25):
        w1 = tuple(rng.choice(D.letters) for _ in range(rng.randint(0, 4)))
        w2 = tuple(rng.choice(D.letters) for _ in range(rng.randint(0, 4)))
        lam = (rng.randint(-5, 5), rng.randint(-5, 5))
        assert D.shifted_act(w1 + w2, lam) == D.shifted_act(w1, D.shifted_act(w2, lam))


def test_weyl_group_sizes_and_longest():
    expect = {"A1": (2, 1), "A2": (6, 3), "B2": (8, 4), "C2": (8, 4),
              "G2": (12, 6), "A3": (24, 6)}
    for tag, (order, l0) in expect.items():
        D = cartan_datum(tag)
        assert D.order() == order
        w0 = D.longest_element()
        assert len(w0) == l0
        assert D.is_reduced(w0)
        # w0 sends the dominant chamber to the antidominant one
        img = D.act(w0, D.rho)
        assert all(x == -1 for x in img)


def test_canonical_words_unique_and_minimal():
    D = cartan_datum("B2")
    seen = set()
    for w, M in D.weyl_elements():
        assert M not in seen
        seen.add(M)
        assert D.is_reduced(w)
    assert len(seen) == 8


def test_alpha_sequence_a2():
    D = cartan_datum("A2")
    seq = D.alpha_sequence((1, 2, 1))
    omegas = [s[0] for s in seq]
    assert omegas == [(-1, 2), (1, 1), (2, -1)]  # alpha2, alpha1+alpha2, alpha1
    roots = [s[1] for s in seq]
    assert roots == [(0, 1), (1, 1), (1, 0)]


def test_alpha_sequence_sl2_exponent():
    D = cartan_datum("A1")
    for lam in range(6):
        [(n1, d1)] = D.n_exponents((lam,), (1,))
        assert n1 == lam + 1 and d1 == 1


def test_n_exponents_word_independent():
    for tag in ("A2", "B2", "G2"):
        D = cartan_datum(tag)
        w0 = D.longest_element()
        words = D.reduced_words(w0)
        assert len(words) >= 2
        lam = (2, 3)
        ref = Counter(D.n_exponents(lam, words[0]))
        for w in words[1:]:
            assert Counter(D.n_exponents(lam, w)) == ref
        # dominant lam gives positive integers
        assert all(n > 0 for n, _ in ref)


def test_non_reduced_word_rejected():
    D = cartan_datum("A2")
    with pytest.raises(ValueError):
        D.alpha_sequence((1, 1))


def test_reduced_words_counts():
    assert cartan_datum("A2").reduced_words((1, 2, 1)) == [(1, 2, 1), (2, 1, 2)]
    B2 = cartan_datum("B2")
    assert len(B2.reduced_words(B2.longest_element())) == 2
    A3 = cartan_datum("A3")
    assert len(A3.reduced_words(A3.longest_element())) == 16


def test_braid_equivalent():
    D = cartan_datum("A2")
    assert D.braid_equivalent((1, 2, 1), (2, 1, 2))
    assert not D.braid_equivalent((1, 2), (2, 1))


def test_length_subadditive():
    D = cartan_datum("G2")
    rng = random.Random(3)
    for _ in range(30):
        w1 = tuple(rng.choice(D.letters) for _ in range(rng.randint(0, 5)))
        w2 = tuple(rng.choice(D.letters) for _ in range(rng.randint(0, 5)))
        assert D.length(w1 + w2) <= D.length(w1) + D.length(w2)


def test_positive_roots():
    counts = {"A1": 1, "A2": 3, "B2": 4, "C2": 4, "G2": 6, "A3": 6}
    for tag, n in counts.items():
        D = cartan_datum(tag)
        roots = D.positive_roots
        assert len(roots) == n
        # each root's coroot pairs to 2 against itself
        for om, rc, co, dd in roots:
            assert sum(c * o for c, o in zip(co, om)) == 2
    # B2 highest root is long: alpha1 + 2 alpha2
    B2 = cartan_datum("B2")
    assert B2.theta[1] == (1, 2) and B2.theta[3] == 2


def test_root_lengths_match_symmetrizers():
    for tag in ("A2", "B2", "C2", "G2"):
        D = cartan_datum(tag)
        for om, rc, co, dd in D.positive_roots:
            assert D.weight_form(om, om) == 2 * dd


def test_minuscule_sets():
    assert cartan_datum("A1").minuscule_coweights() == {1}
    assert cartan_datum("A2").minuscule_coweights() == {1, 2}
    assert cartan_datum("A3").minuscule_coweights() == {1, 2, 3}
    assert cartan_datum("B2").minuscule_coweights() == {1}
    assert cartan_datum("G2").minuscule_coweights() == set()


def test_dual_coxeter_numbers():
    assert cartan_datum("A1").dual_coxeter_number() == 2
    assert cartan_datum("A2").dual_coxeter_number() == 3
    assert cartan_datum("A3").dual_coxeter_number() == 4


def test_weight_form_sl2():
    D = cartan_datum("A1")
    for l in range(-3, 4):
        for m in range(-3, 4):
            assert D.weight_form((l,), (m,)) == Fraction(l * m, 2)


def test_weyl_orbits():
    D = cartan_datum("A2")
    assert len(weyl_orbit(D, (1, 0))) == 3
    assert len(weyl_orbit(D, (1, 1))) == 6
    assert len(weyl_orbit(D, (0, 0))) == 1


# ----------------------------------------------------------------------
# affine machinery (type A)
# ----------------------------------------------------------------------

def aw(lam, k, delta=0):
    return AffineWeight(tuple(lam), Fraction(k), Fraction(delta))


def test_affine_pairing_node0():
    D = cartan_datum("A1~")
    x = aw((5,), 3)
    assert D.affine_pairing(0, x) == 3 - 5  # k - lam(theta_vee)
    assert D.affine_pairing(1, x) == 5
    rho = D.affine_rho
    assert D.affine_pairing(0, rho) == 1 and D.affine_pairing(1, rho) == 1


def test_affine_reflections_are_involutions():
    for tag in ("A1~", "A2~"):
        D = cartan_datum(tag)
        x = aw(tuple(range(2, 2 + D.finite.rank)), 4, Fraction(1, 3))
        for i in D.letters:
            assert D.affine_reflect(i, D.affine_reflect(i, x)) == x


def test_translation_additivity():
    D = cartan_datum("A2~")
    rng = random.Random(11)
    for _ in range(20):
        mu = (rng.randint(-2, 2), rng.randint(-2, 2))
        nu = (rng.randint(-2, 2), rng.randint(-2, 2))
        x = aw((rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(1, 5),
               Fraction(rng.randint(-4, 4), 3))
        both = D.translation(mu)(D.translation(nu)(x))
        once = D.translation(tuple(a + b for a, b in zip(mu, nu)))(x)
        assert both == once
    assert D.translation((0, 0))(x) == x


def test_s0_is_translation_times_theta_reflection():
    for tag in ("A1~", "A2~", "A3~"):
        D = cartan_datum(tag)
        fin = D.finite
        th_om, _, th_co, _ = fin.theta
        x = aw(tuple(range(1, fin.rank + 1)), 3, Fraction(5, 2))
        lhs = D.affine_reflect(0, x)
        # s_theta on the finite part, then t_{theta_vee}
        pairing = sum(c * l for c, l in zip(th_co, x.lam))
        s_theta = AffineWeight(tuple(l - pairing * t for l, t in zip(x.lam, th_om)),
                               x.k, x.delta)
        rhs = D.translation(th_om)(s_theta)
        assert lhs == rhs


def test_fundamental_translation_sl2():
    D = cartan_datum("A1~")
    perm, word = D.fundamental_translation(1)
    assert perm == (1, 0)
    assert word == (1,)
    # pi conjugates s_0 to s_1 and vice versa
    pi = D.pi_action(1)
    xs = [aw((3,), 2, Fraction(1, 2)), aw((-1,), 5, 0)]
    for x in xs:
        lhs = pi(D.affine_reflect(0, _pi_inverse_sl2(D, pi, x)))
        assert lhs == D.affine_reflect(1, x)


def _pi_inverse_sl2(D, pi, x):
    # pi is an involution on affine sl2
    return pi(x)


def test_pi_conjugation_rotates_nodes():
    for tag, n in (("A2~", 3), ("A3~", 4)):
        D = cartan_datum(tag)
        for i in D.minuscule_coweights():
            perm, word = D.fundamental_translation(i)
            assert sorted(perm) == list(range(n))
            pi = D.pi_action(i)
            t = D.translation(tuple(1 if j == i else 0 for j in D.finite.letters))
            samples = [aw(tuple(range(2, 2 + D.finite.rank)), 3, Fraction(1, 5)),
                       aw((1,) * D.finite.rank, 2, Fraction(-2, 3))]
            for x in samples:
                # definition t = pi . w_i
                assert pi(D.affine_act(word, x)) == t(x)
                # conjugation permutes the simple reflections by the node map
                for j in D.letters:
                    lhs = pi(D.affine_reflect(j, x))
                    rhs = D.affine_reflect(perm[j], pi(x))
                    assert lhs == rhs


def test_parse_weight():
    assert parse_weight("1,0", 2) == (1, 0)
    assert parse_weight("-3", 1) == (-3,)
    with pytest.raises(ValueError):
        parse_weight("1,2", 3)
    assert dominant((0, 2)) and not dominant((-1, 2))
