"""Column insertion calculus for one- and two-row G2 tableaux.

Words are tuples over the alphabet 1 < 2 < 3 < 0 < b3 < b2 < b1.  A
tableau is a pair (row1, row2) with len(row2) <= 1; when row2 is
nonempty its single box sits under the first box of row1, so the shape
is (p+q, q) with q in {0, 1}.

The classified word sets B(1), B(10), B(12), B(11), B(112), B(121) are
fixed table data; xi and eta are the positional bijections between
B(10) -> B(1) and B(121) -> B(112).
"""


def _tok(word):
    out = []
    bar = False
    for ch in word:
        if ch == "b":
            bar = True
            continue
        out.append("b" + ch if bar else ch)
        bar = False
    if bar:
        raise ValueError("dangling bar in %r" % word)
    return tuple(out)


def _words(text):
    return tuple(_tok(w) for w in text.split())


B1_SET = _words("1 2 3 0 b3 b2 b1")

B10 = _words("10 1b3 1b2 2b2 2b1 3b1 0b1")

B12 = _words("12 13 23 20 2b3 30 3b3 3b2 00 0b3 0b2 b3b2 b3b1 b2b1")

B11 = _words(
    "11 21 22 31 32 33 01 02 03 b31 b32 b33 b30 b3b3"
    " b21 b22 b23 b20 b2b3 b2b2 b11 b12 b13 b10 b1b3 b1b2 b1b1")

B112 = _words(
    "112 113 212 213 223 220 22b3 312 313 323 320"
    " 32b3 330 33b3 33b2 012 013 023 020 02b3 030 03b3"
    " 03b2 b312 b313 b323 b320 b32b3 b330 b33b3 b33b2 b300 b30b3"
    " b30b2 b3b3b2 b3b3b1 b212 b213 b223 b220 b22b3 b230 b23b3 b23b2"
    " b200 b20b3 b20b2 b2b3b2 b2b3b1 b2b2b1 b112 b113 b123 b120 b12b3"
    " b130 b13b3 b13b2 b100 b10b3 b10b2 b1b3b2 b1b3b1 b1b2b1")

B121 = _words(
    "121 131 122 231 201 2b31 2b32 132 133 301 3b31"
    " 3b32 3b21 3b22 3b23 232 233 001 0b31 0b32 0b21 0b22"
    " 0b23 202 203 2b33 2b30 2b3b3 b3b21 b3b22 b3b23 b3b11 b3b12"
    " b3b13 b3b10 b3b1b3 302 303 3b33 3b30 3b3b3 3b20 3b2b3 3b2b2"
    " b2b11 b2b12 b2b13 b2b10 b2b1b3 b2b1b2 002 003 0b33 0b30 0b3b3"
    " 0b20 0b2b3 0b2b2 b3b20 b3b2b3 b3b2b2 b3b1b2 b3b1b1 b2b1b1")

_XI = dict(zip(B10, B1_SET))
_XI_INV = dict(zip(B1_SET, B10))
_ETA = dict(zip(B121, B112))
_ETA_INV = dict(zip(B112, B121))

_SETS2 = {w: "B10" for w in B10}
_SETS2.update({w: "B12" for w in B12})
_SETS2.update({w: "B11" for w in B11})
_SETS3 = {w: "B112" for w in B112}
_SETS3.update({w: "B121" for w in B121})


def classify(word):
    """Tag of the unique classified set containing the word, or None."""
    word = tuple(word)
    if len(word) == 1:
        return "B1" if word in B1_SET else None
    if len(word) == 2:
        return _SETS2.get(word)
    if len(word) == 3:
        return _SETS3.get(word)
    return None


def xi(word):
    return _XI[tuple(word)][0]


def xi_inv(letter):
    return _XI_INV[(letter,)] if isinstance(letter, str) else _XI_INV[tuple(letter)]


def eta(word):
    return _ETA[tuple(word)]


def eta_inv(word):
    return _ETA_INV[tuple(word)]


class UnsupportedInsertion(Exception):
    """Insertion hit a configuration outside the covered tableau shapes."""


EMPTY = ((), ())


def insert(ch, tab):
    """Column-insert a letter into a tableau of shape (p+q, q), q <= 1."""
    row1, row2 = tab
    if row2:
        word = (row1[0], row2[0], ch)
        if classify(word) != "B121":
            raise UnsupportedInsertion("no two-row case for %r" % (word,))
        bumped, top, bottom = eta(word)
        rest1, rest2 = _insert_row(bumped, row1[1:])
        if rest2:
            raise UnsupportedInsertion("shape would leave (p+q, q), q <= 1")
        return ((top,) + rest1, (bottom,))
    return _insert_row(ch, row1)


def _insert_row(ch, row):
    if not row:
        return ((ch,), ())
    head = row[0]
    if (head, ch) == ("1", "b1"):
        return (row[1:], ())
    tag = classify((head, ch))
    if tag == "B12":
        return (row, (ch,))
    if tag == "B11":
        return ((ch,) + row, ())
    if tag == "B10":
        return _insert_row(xi((head, ch)), row[1:])
    raise UnsupportedInsertion("no case for %r into %r" % (ch, row))


def star(word, letter):
    """b1 * b2: insert the single box b2 (or nothing, for "e") into b1."""
    if letter == "e":
        return (tuple(word), ())
    return insert(letter, (tuple(word), ()))


def reverse_bump(tab, split_last=False):
    """Extraction sequence t_1 .. t_m with tab == (t_1 -> (t_2 -> ... -> ())).

    With split_last=True the innermost insertion (t_m -> ()) is replaced
    by the xi-split (t'' -> t'), and the returned sequence ends t'', t'.
    """
    row1, row2 = tab
    if not row2:
        for i in range(len(row1) - 1):
            if classify((row1[i + 1], row1[i])) != "B11":
                raise UnsupportedInsertion("row not reachable by bumping: %r" % (row1,))
        seq = tuple(row1)
    else:
        out = []
        row = list(row1)
        bottom = row2[0]
        while len(row) >= 2:
            word = (row[1], row[0], bottom)
            if classify(word) != "B112":
                raise UnsupportedInsertion("no reverse two-row case for %r" % (word,))
            top, bottom, extracted = eta_inv(word)
            out.append(extracted)
            row = [top] + row[2:]
        out.extend([bottom, row[0]])
        seq = tuple(out)
    if split_last:
        if not seq:
            raise UnsupportedInsertion("cannot split an empty extraction")
        first, second = xi_inv(seq[-1])
        seq = seq[:-1] + (second, first)
    return seq


def reading_word(tab):
    """Column reading, right to left, top to bottom within a column.

    The order matches the embedding of a column t(a b) as a (x) b; with
    bottom-to-top order the insertion map fails to intertwine the
    classical operators (checked in the tests).
    """
    row1, row2 = tab
    if not row2:
        return tuple(reversed(row1))
    return tuple(reversed(row1[1:])) + (row1[0], row2[0])


def render_tableau(tab):
    row1, row2 = tab
    lines = [" ".join(row1) if row1 else "(empty)"]
    if row2:
        lines.append(" ".join(row2))
    return "\n".join(lines)


def render_bumps(seq):
    """Nested-arrow string for an extraction sequence."""
    out = "()"
    for ch in reversed(seq):
        out = "(%s -> %s)" % (ch, out)
    return out
