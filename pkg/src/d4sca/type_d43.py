"""Coordinate crystals for the exceptional affine type D4(3).

An element of the one-row family B_l is a 6-tuple
b = (x1, x2, x3, xb3, xb2, xb1) of nonnegative integers with
x3 = xb3 (mod 2) and s(b) <= l, where

    s(b) = x1 + x2 + (x3 + xb3)/2 + xb2 + xb1.

The same element can be written as a weakly ordered word over the
alphabet 1 < 2 < 3 < 0 < b3 < b2 < b1 (barred letters are spelled b3,
b2, b1 in ASCII, and "e" denotes the empty/null letter phi) with at
most one 0.

The module also provides the 29-element crystal attached to the second
Dynkin vertex (``BNatural``): one null element, two 7-letter chains and
the 14 two-letter columns whose words form the set B(12) of the
insertion calculus.
"""

from functools import lru_cache

LETTERS = ("1", "2", "3", "0", "b3", "b2", "b1")
PHI = "e"
ORDER = {a: k for k, a in enumerate(LETTERS)}

LETTER_COORD = {
    "1": (1, 0, 0, 0, 0, 0),
    "2": (0, 1, 0, 0, 0, 0),
    "3": (0, 0, 2, 0, 0, 0),
    "0": (0, 0, 1, 1, 0, 0),
    "b3": (0, 0, 0, 2, 0, 0),
    "b2": (0, 0, 0, 0, 1, 0),
    "b1": (0, 0, 0, 0, 0, 1),
    "e": (0, 0, 0, 0, 0, 0),
}
COORD_LETTER = {v: k for k, v in LETTER_COORD.items()}


def _pos(v):
    return v if v > 0 else 0


def _neg(v):
    return v if v < 0 else 0


def s_value(b):
    x1, x2, x3, xb3, xb2, xb1 = b
    return x1 + x2 + (x3 + xb3) // 2 + xb2 + xb1


def is_element(b, l):
    if any(v < 0 for v in b):
        return False
    if (b[2] - b[3]) % 2 != 0:
        return False
    return s_value(b) <= l


def word_to_coord(word):
    """Letter-count word -> coordinate tuple (the 0 letter fills one slot in
    both x3 and xb3)."""
    counts = {a: 0 for a in LETTERS}
    for a in word:
        counts[a] += 1
    if counts["0"] > 1:
        raise ValueError("more than one 0 letter: %r" % (word,))
    w0 = counts["0"]
    return (counts["1"], counts["2"], 2 * counts["3"] + w0,
            2 * counts["b3"] + w0, counts["b2"], counts["b1"])


def coord_to_word(b):
    x1, x2, x3, xb3, xb2, xb1 = b
    w0 = x3 % 2
    if xb3 % 2 != w0:
        raise ValueError("parity mismatch in %r" % (b,))
    parts = (["1"] * x1 + ["2"] * x2 + ["3"] * ((x3 - w0) // 2) + ["0"] * w0
             + ["b3"] * ((xb3 - w0) // 2) + ["b2"] * xb2 + ["b1"] * xb1)
    return tuple(parts)


def is_word(word):
    if any(a not in ORDER for a in word):
        return False
    if sum(1 for a in word if a == "0") > 1:
        return False
    return all(ORDER[word[i]] <= ORDER[word[i + 1]] for i in range(len(word) - 1))


# Coordinate moves of the six 0-action branches (raising direction).
_E0_MOVES = (
    (-1, 0, 0, 0, 0, 0),
    (0, 0, -1, -1, 0, 1),
    (0, 0, -2, 0, 1, 0),
    (0, -1, 0, 2, 0, 0),
    (-1, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1),
)
_F0_MOVES = tuple(tuple(-v for v in move) for move in _E0_MOVES)


def _guard0(k, z, raising):
    """Guard condition of 0-action branch k (0-based) at z = (z1, z2, z3, z4)."""
    z1, z2, z3, z4 = z
    if k == 0:
        v = z1 + _neg(z2 + _neg(3 * z4 + _neg(z3)))
        return v < 0 if raising else v <= 0
    if k == 1:
        v = z2 + _neg(3 * z4 + _neg(z1 + z3))
        return v < 0 <= z1 if raising else v <= 0 < z1
    if k == 2:
        v = 3 * z4 + _neg(z3 + _neg(z1))
        w = z2 + _pos(z1)
        return v < 0 <= w if raising else v <= 0 < w
    if k == 3:
        v = 3 * z4 + _pos(z2 + _pos(z1))
        w = z3 + _pos(z1)
        return v > 0 >= w if raising else v >= 0 > w
    if k == 4:
        v = z3 + _pos(3 * z4 + _pos(z1 + z2))
        return v >= 0 > z1 if raising else v > 0 >= z1
    v = z1 + _pos(z3 + _pos(3 * z4 + _pos(z2)))
    return v >= 0 if raising else v > 0


class D43Crystal:
    """The crystal B_l with index set {0, 1, 2}."""

    indices = (0, 1, 2)

    def __init__(self, l):
        if l < 0:
            raise ValueError("level must be nonnegative")
        self.l = l

    def __repr__(self):
        return "D43Crystal(%d)" % self.l

    # -- string statistics ------------------------------------------------

    def eps(self, i, b):
        x1, x2, x3, xb3, xb2, xb1 = b
        if i == 1:
            return xb1 + _pos(xb3 - xb2 + _pos(x2 - x3))
        if i == 2:
            return xb2 + _pos(x3 - xb3) // 2
        return self.phi(0, b) - self._wt0(b)

    def phi(self, i, b):
        x1, x2, x3, xb3, xb2, xb1 = b
        if i == 1:
            return x1 + _pos(x3 - x2 + _pos(xb2 - xb3))
        if i == 2:
            return x2 + _pos(xb3 - x3) // 2
        # phi_0 = l - s(b) + (z1 + (z2 + (3 z4 + (z3 + (z1)+)+)+)+)+ ; the
        # fully nested grouping is forced by string-length consistency with
        # the six 0-action branches (checked exhaustively in the tests).
        z1, z2, z3, z4 = self._z(b)
        inner = _pos(z1 + _pos(z2 + _pos(3 * z4 + _pos(z3 + _pos(z1)))))
        return self.l - s_value(b) + inner

    @staticmethod
    def _z(b):
        x1, x2, x3, xb3, xb2, xb1 = b
        return (xb1 - x1, xb2 - xb3, x3 - x2, (xb3 - x3) // 2)

    def _wt0(self, b):
        z1, z2, z3, z4 = self._z(b)
        return 2 * z1 + z2 + z3 + 3 * z4

    # -- operators ---------------------------------------------------------

    def e(self, i, b):
        if i == 0:
            return self._act0(b, raising=True)
        if i == 1:
            x1, x2, x3, xb3, xb2, xb1 = b
            a, d = xb2 - xb3, x2 - x3
            if a >= _pos(d):
                c = (x1, x2, x3, xb3, xb2 + 1, xb1 - 1)
            elif a < 0 <= -d:
                c = (x1, x2, x3 + 1, xb3 - 1, xb2, xb1)
            else:
                c = (x1 + 1, x2 - 1, x3, xb3, xb2, xb1)
        else:
            x1, x2, x3, xb3, xb2, xb1 = b
            if xb3 >= x3:
                c = (x1, x2, x3, xb3 + 2, xb2 - 1, xb1)
            else:
                c = (x1, x2 + 1, x3 - 2, xb3, xb2, xb1)
        return c if is_element(c, self.l) else None

    def f(self, i, b):
        if i == 0:
            return self._act0(b, raising=False)
        if i == 1:
            x1, x2, x3, xb3, xb2, xb1 = b
            a, d = xb2 - xb3, x2 - x3
            if _pos(a) <= d:
                c = (x1 - 1, x2 + 1, x3, xb3, xb2, xb1)
            elif a <= 0 < -d:
                c = (x1, x2, x3 - 1, xb3 + 1, xb2, xb1)
            else:
                c = (x1, x2, x3, xb3, xb2 - 1, xb1 + 1)
        else:
            x1, x2, x3, xb3, xb2, xb1 = b
            if xb3 <= x3:
                c = (x1, x2 - 1, x3 + 2, xb3, xb2, xb1)
            else:
                c = (x1, x2, x3, xb3 - 2, xb2 + 1, xb1)
        return c if is_element(c, self.l) else None

    def _act0(self, b, raising):
        return _zero_action(self.l, b, raising)

    def elements(self):
        return _enumerate(self.l)


_UNKNOWN = object()


@lru_cache(maxsize=None)
def _zero_action(l, b, raising):
    """The 0-action on B_l.

    The six guard conditions overlap as stated, so the branch is selected
    as the coordinate move that lands on a valid element and advances
    (eps0, phi0) by exactly one step.  Where that leaves a tie, it is
    broken by the orthogonality of nodes 0 and 2 (the 0-action commutes
    with e2/f2: resolve at the top of the 2-string and push back down),
    then by the printed guards, and as a last resort by equivariance of
    the insertion isomorphism B_l (x) B_1 -> B_1 (x) B_l, whose
    construction is independent of the 0-action.
    """
    out = _zero_partial(l, b, raising)
    if out is not _UNKNOWN:
        return out
    B = D43Crystal(l)
    hits = _zero_candidates(B, b, raising)
    out = _equivariant_zero_action(B, b, raising)
    if out is not _UNKNOWN and any(out == c for _, c in hits):
        return out
    raise RuntimeError("0-action not determined at %r (%d candidates)"
                       % (b, len(hits)))


def _zero_candidates(B, b, raising):
    if raising:
        want = (B.eps(0, b) - 1, B.phi(0, b) + 1)
        moves = _E0_MOVES
    else:
        want = (B.eps(0, b) + 1, B.phi(0, b) - 1)
        moves = _F0_MOVES
    hits = []
    for k, move in enumerate(moves):
        c = tuple(v + d for v, d in zip(b, move))
        if is_element(c, B.l) and (B.eps(0, c), B.phi(0, c)) == want:
            hits.append((k, c))
    return hits


@lru_cache(maxsize=None)
def _zero_partial(l, b, raising):
    """Filter + 2-string commutation + guard resolution; _UNKNOWN if stuck."""
    B = D43Crystal(l)
    if raising:
        if B.eps(0, b) == 0:
            return None
    elif B.phi(0, b) == 0:
        return None
    hits = _zero_candidates(B, b, raising)
    if len(hits) == 1:
        return hits[0][1]
    if not hits:
        raise RuntimeError("no 0-action branch applies at %r" % (b,))
    up = B.e(2, b)
    if up is not None:
        parent = _zero_partial(l, up, raising)
        if parent is _UNKNOWN:
            return _UNKNOWN
        c = B.f(2, parent)
        assert c is not None and any(c == h for _, h in hits)
        return c
    guarded = [(k, c) for k, c in hits if _guard0(k, B._z(b), raising)]
    if len(guarded) == 1:
        return guarded[0][1]
    return _UNKNOWN


def _equivariant_zero_action(B, b, raising):
    """Solve the 0-action at b through the insertion isomorphism.

    Either b sits in the left slot of a source pair and the image acts on
    its known B_1 slot, or b sits in the right slot of an image pair and
    the source acts on its known B_1 slot; in both situations the action
    at b is read off from word combinatorics plus already-settled values.
    """
    from . import rmatrix

    word = coord_to_word(b)
    # b as the left factor of a source pair
    for c in LETTER_COORD:
        eps_c = B1.eps(0, LETTER_COORD[c])
        if raising:
            if B.phi(0, b) < eps_c:
                continue
        elif B.phi(0, b) <= eps_c:
            continue
        cp, bp = rmatrix.r_image(B.l, word, c)
        cp_coord = LETTER_COORD[cp]
        bp_coord = word_to_coord(bp)
        left = (B1.phi(0, cp_coord) >= B.eps(0, bp_coord)) if raising \
            else (B1.phi(0, cp_coord) > B.eps(0, bp_coord))
        if left:
            ncp = B1.e(0, cp_coord) if raising else B1.f(0, cp_coord)
            if ncp is None:
                continue
            src_word, src_c = rmatrix.r_image_inverse(B.l, COORD_LETTER[ncp], bp)
        else:
            nbp = _zero_partial(B.l, bp_coord, raising)
            if nbp is _UNKNOWN or nbp is None:
                continue
            src_word, src_c = rmatrix.r_image_inverse(B.l, cp, coord_to_word(nbp))
        if src_c == c:
            return word_to_coord(src_word)
    # b as the right factor of an image pair
    for wc in B.elements():
        w = coord_to_word(wc)
        for c in LETTER_COORD:
            cp, bp = rmatrix.r_image(B.l, w, c)
            if word_to_coord(bp) != b:
                continue
            cp_coord = LETTER_COORD[cp]
            c_coord = LETTER_COORD[c]
            # the source pair must act on its B_1 slot, the image pair on b
            src_right = (B.phi(0, wc) < B1.eps(0, c_coord)) if raising \
                else (B.phi(0, wc) <= B1.eps(0, c_coord))
            img_right = (B1.phi(0, cp_coord) < B.eps(0, b)) if raising \
                else (B1.phi(0, cp_coord) <= B.eps(0, b))
            if not (src_right and img_right):
                continue
            nc = B1.e(0, c_coord) if raising else B1.f(0, c_coord)
            if nc is None:
                continue
            cp2, bp2 = rmatrix.r_image(B.l, w, COORD_LETTER[nc])
            if cp2 == cp:
                return word_to_coord(bp2)
    return _UNKNOWN


@lru_cache(maxsize=None)
def _enumerate(l):
    out = []
    for x1 in range(l + 1):
        for x2 in range(l + 1 - x1):
            for x3 in range(2 * (l - x1 - x2) + 1):
                for xb3 in range(x3 % 2, 2 * (l - x1 - x2) + 1 - x3 + 1, 2):
                    half = (x3 + xb3) // 2
                    rest = l - x1 - x2 - half
                    if rest < 0:
                        continue
                    for xb2 in range(rest + 1):
                        for xb1 in range(rest - xb2 + 1):
                            out.append((x1, x2, x3, xb3, xb2, xb1))
    out.sort()
    return tuple(out)


B1 = D43Crystal(1)


def letter_eps(i, a):
    return B1.eps(i, LETTER_COORD[a])


def letter_phi(i, a):
    return B1.phi(i, LETTER_COORD[a])


def letter_e(i, a):
    c = B1.e(i, LETTER_COORD[a])
    return None if c is None else COORD_LETTER[c]


def letter_f(i, a):
    c = B1.f(i, LETTER_COORD[a])
    return None if c is None else COORD_LETTER[c]


# ---------------------------------------------------------------------------
# The 29-element crystal at the second Dynkin vertex.

def col(a, b):
    return ("c", a, b)


def single(a, j):
    return ("s", a, j)


PHI_NAT = ("phi",)

_CHAIN_COLOR = (1, 2, 1, 1, 2, 1)  # arrow colors along 1 -> 2 -> ... -> b1

_F0_ARROWS = (
    (col("b3", "b1"), single("b3", 1)),
    (single("b3", 1), single("2", 2)),
    (single("2", 2), col("1", "2")),
    (col("b2", "b1"), single("b2", 1)),
    (single("b2", 1), single("3", 2)),
    (single("3", 2), col("1", "3")),
    (col("b3", "b2"), single("0", 1)),
    (single("0", 1), single("1", 2)),
    (single("b1", 1), single("0", 2)),
    (single("0", 2), col("2", "3")),
    (single("b1", 2), PHI_NAT),
    (PHI_NAT, single("1", 1)),
    (col("0", "b2"), single("3", 1)),
    (single("b3", 2), col("2", "0")),
    (col("0", "b3"), single("2", 1)),
    (single("b2", 2), col("3", "0")),
)


class BNatural:
    """The level-one crystal attached to the second Dynkin vertex.

    Columns t(a b) carry the classical {1,2}-action through the embedding
    t(a b) -> a (x) b into B1 (x) B1; the 0-action is the explicit arrow
    table above.  Elements without a listed 0-arrow have e0 = f0 = 0.
    """

    indices = (0, 1, 2)

    def __init__(self):
        from .insertion import B12  # deferred: insertion imports this module

        self._elements = ((PHI_NAT,)
                          + tuple(single(a, j) for j in (1, 2) for a in LETTERS)
                          + tuple(col(a, b) for a, b in B12))
        self._f0 = dict(_F0_ARROWS)
        self._e0 = {t: s for s, t in _F0_ARROWS}
        self._column_words = set(B12)

    def elements(self):
        return self._elements

    def e(self, i, b):
        if i == 0:
            return self._e0.get(b)
        return self._classical(b, i, raising=True)

    def f(self, i, b):
        if i == 0:
            return self._f0.get(b)
        return self._classical(b, i, raising=False)

    def eps(self, i, b):
        n, c = 0, b
        while True:
            c = self.e(i, c)
            if c is None:
                return n
            n += 1

    def phi(self, i, b):
        n, c = 0, b
        while True:
            c = self.f(i, c)
            if c is None:
                return n
            n += 1

    def _classical(self, b, i, raising):
        kind = b[0]
        if kind == "phi":
            return None
        if kind == "s":
            _, a, j = b
            k = LETTERS.index(a)
            if raising:
                if k > 0 and _CHAIN_COLOR[k - 1] == i:
                    return single(LETTERS[k - 1], j)
                return None
            if k < 6 and _CHAIN_COLOR[k] == i:
                return single(LETTERS[k + 1], j)
            return None
        _, a, c = b
        # tensor rule on the two-letter column word
        if raising:
            if letter_phi(i, a) >= letter_eps(i, c):
                na = letter_e(i, a)
                pair = None if na is None else (na, c)
            else:
                nc = letter_e(i, c)
                pair = None if nc is None else (a, nc)
        else:
            if letter_phi(i, a) > letter_eps(i, c):
                na = letter_f(i, a)
                pair = None if na is None else (na, c)
            else:
                nc = letter_f(i, c)
                pair = None if nc is None else (a, nc)
        if pair is None:
            return None
        if pair not in self._column_words:
            raise RuntimeError("column action left the B(12) word set: %r" % (pair,))
        return col(*pair)


def render_nat(b):
    if b == PHI_NAT:
        return "e"
    if b[0] == "s":
        return "(%s)_%d" % (b[1], b[2])
    return "t(%s %s)" % (b[1], b[2])
