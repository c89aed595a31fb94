"""Combinatorial R matrix on B_l (x) B_1 and on the vertex-2 crystal.

The image of b1 (x) b2 is assembled from the insertion tableau b1 * b2
in two independent ways: by reverse bumping plus a case dispatch, and by
the closed-form letter recursions.  Both run on every call (the results
are compared under ``__debug__``), and both are checked against the
axiom-level graph oracle in the tests.

The energy H takes values in {-2, -1, 0} and is normalized by
H(u_l (x) u_1) = 0.
"""

from functools import lru_cache

from .insertion import (B11, B12, classify, eta_inv, reverse_bump, star,
                        xi, xi_inv)
from .type_d43 import (BNatural, D43Crystal, LETTER_COORD, coord_to_word,
                       is_word, s_value, word_to_coord, col, single)
from .core import graph_iso_r


def _b10_continuation(word, beta):
    """For alpha1 beta in B(10): the set tag of the bumped continuation."""
    gamma = xi((word[0], beta))
    if len(word) == 1:
        return "B11"  # the bump lands in an empty row
    return classify((word[1], gamma))


def energy(l, word, beta):
    """H(b1 (x) b2) for b1 a word of B_l and b2 a letter or "e"."""
    word = tuple(word)
    if word and beta != "e" and classify((word[0], beta)) == "B10":
        if _b10_continuation(word, beta) == "B11":
            return -2
    rows = star(word, beta)
    return max(-2, len(rows[0]) - l - 1)


# Case tags name how the image pair is assembled from the extraction
# sequence t_1 .. t_m of b1 * b2:
#   I    (t_m) (x) (t_1 .. t_{m-1})
#   II   (t')  (x) (t_1 .. t_{m-1} t'')   with t' t'' = xi^{-1}(t_m)
#   III  (1)   (x) (t_1 .. t_m b1)
#   IV   (t_1) (x) (phi)                  [m <= 1]
#   V    (phi) (x) (t_1 .. t_m)
#   PHI  (phi) (x) (phi)

def case_tag(l, word, beta):
    n = len(word)
    if n == 0 and beta == "e":
        return "PHI"
    if n == 0:
        return "V" if l == 1 else "III"
    if beta == "e":
        if l == 1:
            return "IV"
        return "V" if n < l else "I"
    head = word[0]
    if (head, beta) == ("1", "b1"):
        return "III" if n == 1 else ("IV" if n == 2 else "I")
    tag = classify((head, beta))
    if tag == "B11":
        if n < l - 1:
            return "III"
        return "V" if n == l - 1 else "I"
    if tag == "B12":
        return "II" if n < l else "I"
    if tag == "B10":
        return "II" if _b10_continuation(word, beta) == "B11" else "I"
    raise RuntimeError("unclassifiable pair %r, %r" % (word, beta))


def _assemble(tag, seq):
    if tag == "PHI":
        return "e", ()
    if tag == "I":
        return seq[-1], seq[:-1]
    if tag == "II":
        first, second = xi_inv(seq[-1])
        return first, seq[:-1] + (second,)
    if tag == "III":
        return "1", seq + ("b1",)
    if tag == "IV":
        return seq[0], ()
    return "e", seq  # V


def _image_bump(l, word, beta):
    tag = case_tag(l, word, beta)
    seq = () if tag == "PHI" else reverse_bump(star(word, beta))
    return _assemble(tag, seq)


def _eta_chain(letters):
    """Run p_{i-1} q_{i-1} r'_i = eta^{-1}(r_i p_i q_i) down a letter list.

    letters = (r_1, .., r_k, p_k, q_k); returns (p_0, q_0, [r'_k .. r'_1]).
    """
    rs, p, q = letters[:-2], letters[-2], letters[-1]
    out = []
    for r in reversed(rs):
        p, q, extracted = eta_inv((r, p, q))
        out.append(extracted)
    return p, q, out


def _image_table(l, word, beta):
    """Closed-form image, written directly on the input letters."""
    n = len(word)
    if n == 0 and beta == "e":
        return "e", ()
    if n == 0:
        return ("e", (beta,)) if l == 1 else ("1", (beta, "b1"))
    if beta == "e":
        if l == 1:
            return word[0], ()
        if n < l:
            return "e", word
        return word[-1], word[:-1]
    head = word[0]
    if (head, beta) == ("1", "b1"):
        if n == 1:
            return "1", ("b1",)
        if n == 2:
            return word[1], ()
        return word[-1], word[1:-1]
    tag = classify((head, beta))
    if tag == "B11":
        if n < l - 1:
            return "1", (beta,) + word + ("b1",)
        if n == l - 1:
            return "e", (beta,) + word
        return word[-1], (beta,) + word[:-1]
    if tag == "B12":
        p0, q0, rps = _eta_chain(tuple(reversed(word)) + (beta,))
        if n == l:
            return p0, tuple(rps) + (q0,)
        first, second = xi_inv(p0)
        return first, tuple(rps) + (q0, second)
    if tag == "B10":
        gamma = xi((head, beta))
        if _b10_continuation(word, beta) == "B11":
            if n == 1:
                first, second = xi_inv(gamma)
                return first, (second,)
            first, second = xi_inv(word[-1])
            return first, (gamma,) + word[1:-1] + (second,)
        p0, q0, rps = _eta_chain(tuple(reversed(word[1:])) + (gamma,))
        return p0, tuple(rps) + (q0,)
    raise RuntimeError("unclassifiable pair %r, %r" % (word, beta))


def r_image(l, word, beta):
    """Image pair (b2', b1') of the isomorphism B_l (x) B_1 -> B_1 (x) B_l."""
    word = tuple(word)
    out = _image_table(l, word, beta)
    if __debug__:
        assert out == _image_bump(l, word, beta), (l, word, beta)
        letter, new_word = out
        assert is_word(new_word) and s_value(word_to_coord(new_word)) <= l
    return out


def comb_r(l, b1, b2):
    """(b2', b1', H) with words for B_l and letters for B_1."""
    letter, new_word = r_image(l, b1, b2)
    return letter, new_word, energy(l, b1, b2)


def comb_r_affine(l, zb1, zb2):
    """Affine R: (g1, b1) (x) (g2, b2) -> (g2 + H, b2') (x) (g1 - H, b1')."""
    (g1, b1), (g2, b2) = zb1, zb2
    letter, new_word, h = comb_r(l, b1, b2)
    return (g2 + h, letter), (g1 - h, new_word)


@lru_cache(maxsize=None)
def _inverse_table(l):
    table = {}
    for b in D43Crystal(l).elements():
        word = coord_to_word(b)
        for c in LETTER_COORD:
            table[r_image(l, word, c)] = (word, c)
    return table


def r_image_inverse(l, letter, word):
    """Preimage of (b2', b1') under the isomorphism."""
    return _inverse_table(l)[(letter, tuple(word))]


# ---------------------------------------------------------------------------
# Highest-weight data used as an independent check of the R matrix.

def hwe_expected(l, n, beta):
    """Printed image of (1^n) (x) (beta) for the classical highest pairs."""
    ones = ("1",) * n
    if beta == "1":
        if n <= l - 2:
            return "1", ("1",) * (n + 1) + ("b1",)
        return ("e", ("1",) * l) if n == l - 1 else ("1", ("1",) * l)
    if beta == "2":
        if n <= l - 1:
            return "1", ("1",) * (n - 1) + ("2", "0")
        return "1", ("1",) * (l - 1) + ("2",)
    if beta == "0":
        return "1", ("1",) * (n - 1) + ("0",)
    if beta == "b3":
        return "1", ("1",) * (n - 2) + ("2",)
    if beta == "b1":
        if n == 1:
            return "1", ("b1",)
        return ("1", ()) if n == 2 else ("1", ("1",) * (n - 2))
    if beta == "e":
        return ("e", ones) if n <= l - 1 else ("1", ("1",) * (l - 1))
    raise ValueError(beta)


def hwe_expected_energy(l, n, beta):
    if beta == "1":
        if n == l:
            return 0
        return -1 if n == l - 1 else -2
    if n == l and beta in ("2", "e"):
        return -1
    return -2


def hwe_domain(l):
    """(n, beta) pairs indexing the classical highest elements of B_l (x) B_1."""
    out = []
    for n in range(l + 1):
        for beta in ("1", "2", "3", "0", "b3", "b2", "b1", "e"):
            if beta in ("3", "b2"):
                continue
            if n == 0 and beta not in ("1", "e"):
                continue
            if n == 1 and beta == "b3":
                continue
            out.append((n, beta))
    return out


def verify_hwe_table(l):
    """Check comb_r against the printed highest-weight table.  Returns a
    list of mismatch descriptions (empty = pass)."""
    from .core import classical_highest, TensorCrystal

    crystal = TensorCrystal(D43Crystal(l), D43Crystal(1))
    bad = []
    seen = set()
    for b1c, b2c in classical_highest(crystal, (1, 2)):
        word = coord_to_word(b1c)
        n = len(word)
        if word != ("1",) * n:
            bad.append("highest pair with unexpected left word %r" % (word,))
            continue
        beta = "e" if b2c == (0, 0, 0, 0, 0, 0) else coord_to_word(b2c)[0]
        seen.add((n, beta))
        got = r_image(l, word, beta)
        want = hwe_expected(l, n, beta)
        if got != want:
            bad.append("image of (1^%d)(x)(%s): got %r want %r" % (n, beta, got, want))
        h_got = energy(l, word, beta)
        h_want = hwe_expected_energy(l, n, beta)
        if h_got != h_want:
            bad.append("H of (1^%d)(x)(%s): got %d want %d" % (n, beta, h_got, h_want))
    if seen != set(hwe_domain(l)):
        bad.append("highest pair set mismatch: %r" % (seen ^ set(hwe_domain(l))))
    return bad


def oracle(l):
    """Axiom-level graph oracle for B_l (x) B_1, anchored at u_l (x) u_1."""
    return _oracle(l)


@lru_cache(maxsize=None)
def _oracle(l):
    u_l = (l,) + (0,) * 5
    u_1 = (1, 0, 0, 0, 0, 0)
    return graph_iso_r(D43Crystal(l), D43Crystal(1), (u_l, u_1), (u_1, u_l), 0)


def verify_oracle_vs_insertion(l):
    """Exhaustive comparison of the insertion R against the graph oracle."""
    tab = oracle(l)
    bad = []
    if tab.unreached:
        bad.append("%d unreached pairs" % len(tab.unreached))
    for (b1c, b2c), (c2, c1) in tab.iso.items():
        word = coord_to_word(b1c)
        beta = "e" if b2c == (0, 0, 0, 0, 0, 0) else coord_to_word(b2c)[0]
        letter, new_word, h = comb_r(l, word, beta)
        want = (word_to_coord((letter,) if letter != "e" else ()), word_to_coord(new_word))
        if want != (c2, c1):
            bad.append("image mismatch at %r (x) %r" % (word, beta))
        if h != tab.energy[(b1c, b2c)]:
            bad.append("H mismatch at %r (x) %r: %d vs %d"
                       % (word, beta, h, tab.energy[(b1c, b2c)]))
    return bad


# ---------------------------------------------------------------------------
# The vertex-2 crystal: R on BNatural (x) B_1 comes from the graph oracle,
# anchored at t(12) (x) (1) -> (1) (x) t(12) with H = 0.

@lru_cache(maxsize=None)
def _nat_oracle():
    nat = BNatural()
    u, v = col("1", "2"), (1, 0, 0, 0, 0, 0)
    return graph_iso_r(nat, D43Crystal(1), (u, v), (v, u), 0)


class UnsupportedState(Exception):
    """Pair outside the supported domain of the vertex-2 isomorphism."""


def comb_r_natural(bn, letter):
    """(letter', bn') image of bn (x) letter under BNat (x) B1 -> B1 (x) BNat."""
    tab = _nat_oracle()
    key = (bn, LETTER_COORD[letter])
    if key not in tab.iso:
        raise UnsupportedState("pair %r (x) %r is outside the supported states"
                               % (bn, letter))
    c, nb = tab.iso[key]
    from .type_d43 import COORD_LETTER

    return COORD_LETTER[c], nb


def energy_natural(bn, letter):
    """Oracle energy on BNatural (x) B_1 (additive constant unanchored)."""
    tab = _nat_oracle()
    return tab.energy[(bn, LETTER_COORD[letter])]


# The printed reference table for the vertex-2 isomorphism (23 rows).
NATURAL_TABLE = (
    (col("1", "2"), "1", "1", col("1", "2")),
    (col("1", "2"), "2", "2", col("1", "2")),
    (col("1", "2"), "3", "1", single("1", 2)),
    (single("1", 2), "1", "1", single("1", 1)),
    (single("1", 1), "1", "1", col("2", "3")),
    (col("2", "3"), "1", "2", col("1", "3")),
    (col("1", "3"), "1", "1", col("1", "3")),
    (single("1", 2), "2", "1", single("2", 1)),
    (single("2", 1), "1", "1", col("2", "0")),
    (col("2", "0"), "1", "2", col("2", "3")),
    (single("2", 1), "2", "1", col("2", "b3")),
    (col("2", "b3"), "2", "2", col("2", "b3")),
    (col("2", "b3"), "1", "2", col("2", "0")),
    (single("1", 2), "3", "1", single("3", 1)),
    (single("3", 1), "1", "1", col("3", "0")),
    (col("3", "0"), "1", "3", col("2", "3")),
    (single("3", 1), "2", "1", col("3", "b3")),
    (col("3", "b3"), "1", "3", col("2", "0")),
    (col("3", "b3"), "2", "3", col("2", "b3")),
    (single("3", 1), "3", "1", col("3", "b2")),
    (col("3", "b2"), "1", "3", col("3", "0")),
    (col("3", "b2"), "3", "3", col("3", "b2")),
    (col("3", "b2"), "2", "3", col("3", "b3")),
)


def verify_natural_table():
    """Compare the oracle against the 23 printed rows; returns mismatches."""
    bad = []
    for bn, letter, want_letter, want_bn in NATURAL_TABLE:
        try:
            got = comb_r_natural(bn, letter)
        except UnsupportedState:
            bad.append("row %r (x) %r unreachable" % (bn, letter))
            continue
        if got != (want_letter, want_bn):
            bad.append("row %r (x) %r: got %r want %r"
                       % (bn, letter, got, (want_letter, want_bn)))
    return bad


# ---------------------------------------------------------------------------
# Yang-Baxter checks.

def word_of(v):
    """Normalize a letter-or-word value to a word tuple."""
    if isinstance(v, str):
        return () if v == "e" else (v,)
    return tuple(v)


def letter_of(v):
    if isinstance(v, str):
        return v
    if len(v) == 0:
        return "e"
    if len(v) == 1:
        return v[0]
    raise ValueError("not a letter: %r" % (v,))


def _apply_r(state, levels, pos):
    """Affine R on factors pos, pos+1 of a ((phase, word), ...) state."""
    if levels[pos + 1] != 1:
        raise ValueError("right factor must have level 1")
    (ga, a), (gb, b) = state[pos], state[pos + 1]
    letter, nw, h = comb_r(levels[pos], a, letter_of(b))
    state = list(state)
    state[pos] = (gb + h, word_of(letter))
    state[pos + 1] = (ga - h, nw)
    levels = list(levels)
    levels[pos], levels[pos + 1] = levels[pos + 1], levels[pos]
    return tuple(state), tuple(levels)


def verify_yang_baxter(l):
    """Exhaustive YBE check on Aff(B_l) (x) Aff(B_1) (x) Aff(B_1)."""
    bad = []
    letters = tuple(LETTER_COORD)
    for b1 in D43Crystal(l).elements():
        w = coord_to_word(b1)
        for c1 in letters:
            for c2 in letters:
                state = ((0, w), (0, word_of(c1)), (0, word_of(c2)))
                lhs, lv = _apply_r(state, (l, 1, 1), 0)
                lhs, lv = _apply_r(lhs, lv, 1)
                lhs, lv = _apply_r(lhs, lv, 0)
                rhs, rv = _apply_r(state, (l, 1, 1), 1)
                rhs, rv = _apply_r(rhs, rv, 0)
                rhs, rv = _apply_r(rhs, rv, 1)
                if lhs != rhs:
                    bad.append("YBE fails at %r (x) %r (x) %r" % (w, c1, c2))
    return bad


def verify_yang_baxter_natural():
    """Exhaustive YBE check on Aff(BNat) (x) Aff(B_1) (x) Aff(B_1)."""
    bad = []
    nat = BNatural()
    letters = tuple(LETTER_COORD)

    def nat_step(state, pos):
        (ga, a), (gb, b) = state[pos], state[pos + 1]
        letter, nb = comb_r_natural(a, letter_of(b))
        h = energy_natural(a, letter_of(b))
        state = list(state)
        state[pos] = (gb + h, word_of(letter))
        state[pos + 1] = (ga - h, nb)
        return tuple(state)

    def b11_step(state, pos):
        (ga, a), (gb, b) = state[pos], state[pos + 1]
        letter, nw, h = comb_r(1, a, letter_of(b))
        state = list(state)
        state[pos] = (gb + h, word_of(letter))
        state[pos + 1] = (ga - h, nw)
        return tuple(state)

    for bn in nat.elements():
        for c1 in letters:
            for c2 in letters:
                state = ((0, bn), (0, word_of(c1)), (0, word_of(c2)))
                try:
                    lhs = nat_step(state, 0)
                    lhs = nat_step(lhs, 1)
                    lhs = b11_step(lhs, 0)
                    rhs = b11_step(state, 1)
                    rhs = nat_step(rhs, 0)
                    rhs = nat_step(rhs, 1)
                except UnsupportedState:
                    bad.append("unsupported state %r (x) %r (x) %r" % (bn, c1, c2))
                    continue
                if lhs != rhs:
                    bad.append("YBE fails at %r (x) %r (x) %r" % (bn, c1, c2))
    return bad
