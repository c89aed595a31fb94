from d4sca.type_d43 import letter_e, letter_eps, letter_f, letter_phi


def W(s):
    """Parse a compact word like '2b2b1' into a letter tuple."""
    out = []
    bar = False
    for ch in s:
        if ch == "b":
            bar = True
            continue
        out.append("b" + ch if bar else ch)
        bar = False
    return tuple(out)


class LetterCrystal:
    """B_1 with plain letter strings as elements."""

    indices = (0, 1, 2)

    def e(self, i, a):
        return letter_e(i, a)

    def f(self, i, a):
        return letter_f(i, a)

    def eps(self, i, a):
        return letter_eps(i, a)

    def phi(self, i, a):
        return letter_phi(i, a)
