import pytest
from hypothesis import given, settings, strategies as st

from conftest import W, LetterCrystal
from d4sca.core import seq_f
from d4sca.insertion import (B1_SET, B10, B11, B112, B12, B121, classify, eta,
                             eta_inv, insert, reading_word, render_bumps,
                             reverse_bump, star, xi, xi_inv)
from d4sca.type_d43 import D43Crystal, LETTER_COORD, coord_to_word


def test_word_set_cardinalities():
    assert len(B1_SET) == 7
    assert len(B10) == 7
    assert len(B12) == 14
    assert len(B11) == 27
    assert len(B112) == 64
    assert len(B121) == 64
    for group in (B1_SET, B10, B12, B11, B112, B121):
        assert len(set(group)) == len(group)


def test_word_sets_disjoint_by_length():
    assert not set(B10) & set(B11)
    assert not set(B10) & set(B12)
    assert not set(B11) & set(B12)
    assert not set(B112) & set(B121)


def test_classify_goldens():
    assert classify(W("2b2")) == "B10"
    assert classify(W("3b3")) == "B12"
    assert classify(W("1b1")) is None
    assert classify(W("1")) == "B1"
    assert classify(W("b31")) == "B11"


def test_xi_goldens():
    assert xi(W("2b2")) == "0"
    assert xi_inv("3") == W("1b2")
    for word in B10:
        assert xi_inv(xi(word)) == word
    assert sorted(xi(w) for w in B10) == sorted(a for (a,) in B1_SET)


def test_eta_goldens():
    assert eta(W("0b21")) == W("030")
    assert eta_inv(W("b100")) == W("b3b20")
    for word in B121:
        assert eta_inv(eta(word)) == word
    assert set(eta(w) for w in B121) == set(B112)


def test_insert_goldens():
    assert insert("b2", (W("2b2b1"), ())) == (W("0b2b1"), ())
    assert insert("b3", (W("30b1"), ())) == (W("30b1"), W("b3"))
    assert insert("2", ((), ())) == (W("2"), ())
    # the annihilating pair eats the leading 1
    assert insert("b1", (W("123"), ())) == (W("23"), ())


def test_star_goldens():
    for n in (1, 2, 3):
        assert star(("1",) * n, "1") == (("1",) * (n + 1), ())
    assert len(star(("1",) * 3, "b3")[0]) == 2
    assert star(W("2b2b1"), "b2") == (W("0b2b1"), ())
    assert star(W("123"), "e") == (W("123"), ())
    assert star((), "e") == ((), ())
    assert star((), "2") == (W("2"), ())


def test_reverse_bump_goldens():
    assert reverse_bump((W("0b2b1"), ())) == W("0b2b1")
    assert reverse_bump((W("30b1"), W("b3"))) == W("2b2b2b3")
    assert reverse_bump((W("30b1"), W("b3")), split_last=True) == W("2b2b2b12")
    assert render_bumps(W("0b2b1")) == "(0 -> (b2 -> (b1 -> ())))"


def _reinsert(seq):
    tab = ((), ())
    for ch in reversed(seq):
        tab = insert(ch, tab)
    return tab


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_reinsertion_round_trip_exhaustive(l):
    letters = list(LETTER_COORD)
    for b in D43Crystal(l).elements():
        word = coord_to_word(b)
        for beta in letters:
            tab = star(word, beta)
            if not tab[0] and not tab[1]:
                continue
            seq = reverse_bump(tab)
            assert _reinsert(seq) == tab
            seq = reverse_bump(tab, split_last=True)
            assert _reinsert(seq) == tab


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5), st.data())
def test_reinsertion_round_trip_random(l, data):
    elems = list(D43Crystal(l).elements())
    b = data.draw(st.sampled_from(elems))
    beta = data.draw(st.sampled_from(sorted(LETTER_COORD)))
    tab = star(coord_to_word(b), beta)
    if tab[0] or tab[1]:
        assert _reinsert(reverse_bump(tab)) == tab


def _tableau_f(i, tab):
    """f_i through the column reading word; None when the action vanishes."""
    LC = LetterCrystal()
    word = reading_word(tab)
    new = seq_f(LC, i, word)
    if new is None:
        return None
    row1, row2 = tab
    if row2:
        letters = (new[-2],) + tuple(reversed(new[:len(row1) - 1]))
        return (letters, (new[-1],))
    return (tuple(reversed(new)), ())


@pytest.mark.parametrize("l", [1, 2, 3])
def test_insertion_is_a_classical_morphism(l):
    """star intertwines f_1, f_2 with the tableau action via reading words."""
    from d4sca.core import TensorCrystal

    B1 = D43Crystal(1)
    Bl = D43Crystal(l)
    T = TensorCrystal(Bl, B1)
    from d4sca.type_d43 import COORD_LETTER

    for b1 in Bl.elements():
        word = coord_to_word(b1)
        for b2 in B1.elements():
            beta = COORD_LETTER[b2]
            tab = star(word, beta)
            for i in (1, 2):
                nxt = T.f(i, (b1, b2))
                if nxt is None:
                    assert _tableau_f(i, tab) is None or not (tab[0] or tab[1])
                    continue
                nb1, nb2 = nxt
                want = star(coord_to_word(nb1), COORD_LETTER[nb2])
                assert _tableau_f(i, tab) == want
