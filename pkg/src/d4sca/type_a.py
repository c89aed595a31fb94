"""Symmetric-power crystals for affine type A_n and their combinatorial R.

Elements of B_l are coordinate tuples (x_1, .., x_{n+1}) of nonnegative
integers summing to l; the tableau form is the weakly increasing word
with x_k copies of the letter k.  The R matrix and energy come from the
cyclic piecewise-linear minimum formula, normalized so that
H(u_l (x) u_l') = 0.
"""

from itertools import product


class AnCrystal:
    def __init__(self, n, l):
        self.n = n
        self.l = l
        self.indices = tuple(range(n + 1))

    def __repr__(self):
        return "AnCrystal(n=%d, l=%d)" % (self.n, self.l)

    def elements(self):
        n, l = self.n, self.l
        out = []
        for head in product(range(l + 1), repeat=n):
            rest = l - sum(head)
            if rest >= 0:
                out.append(head + (rest,))
        return tuple(sorted(out))

    def _shift(self, b, src, dst):
        if b[src] == 0:
            return None
        c = list(b)
        c[src] -= 1
        c[dst] += 1
        return tuple(c)

    def e(self, i, b):
        if i == 0:
            return self._shift(b, 0, self.n)
        return self._shift(b, i, i - 1)

    def f(self, i, b):
        if i == 0:
            return self._shift(b, self.n, 0)
        return self._shift(b, i - 1, i)

    def eps(self, i, b):
        return b[0] if i == 0 else b[i]

    def phi(self, i, b):
        return b[self.n] if i == 0 else b[i - 1]


def u(n, l):
    return (l,) + (0,) * n


def to_word(b):
    return tuple(k + 1 for k, mult in enumerate(b) for _ in range(mult))


def from_word(n, word):
    if any(word[i] > word[i + 1] for i in range(len(word) - 1)):
        raise ValueError("tableau word must be weakly increasing: %r" % (word,))
    if word and not 1 <= max(word) <= n + 1:
        raise ValueError("letters must lie in 1..%d" % (n + 1))
    return tuple(sum(1 for a in word if a == k + 1) for k in range(n + 1))


def an_r(n, x, y):
    """(y', x', H) for x (x) y in B_l (x) B_l' with cyclic index reading."""
    m = n + 1

    def q(i):
        vals = []
        for k in range(1, m + 1):
            vals.append(sum(x[(i + j - 1) % m] for j in range(1, k))
                        + sum(y[(i + j - 1) % m] for j in range(k + 1, m + 1)))
        return min(vals)

    qs = [q(i) for i in range(m + 1)]  # Q_0 .. Q_{n+1}
    assert qs[0] == qs[m], "cyclicity of Q failed"
    xp = tuple(x[i - 1] + qs[i] - qs[i - 1] for i in range(1, m + 1))
    yp = tuple(y[i - 1] + qs[i - 1] - qs[i] for i in range(1, m + 1))
    return yp, xp, -qs[m]


def an_r_affine(n, zx, zy):
    (d, x), (dp, y) = zx, zy
    yp, xp, h = an_r(n, x, y)
    return (dp + h, yp), (d - h, xp)


def verify_yang_baxter_an(n, levels):
    """Exhaustive YBE check on Aff(B_l) (x) Aff(B_l') (x) Aff(B_l'')."""
    l1, l2, l3 = levels
    bad = []
    for a in AnCrystal(n, l1).elements():
        for b in AnCrystal(n, l2).elements():
            for c in AnCrystal(n, l3).elements():
                state = ((0, a), (0, b), (0, c))

                def step(s, pos):
                    za, zb = s[pos], s[pos + 1]
                    nb, na = an_r_affine(n, za, zb)
                    s = list(s)
                    s[pos], s[pos + 1] = nb, na
                    return tuple(s)

                lhs = step(step(step(state, 0), 1), 0)
                rhs = step(step(step(state, 1), 0), 1)
                if lhs != rhs:
                    bad.append("YBE fails at %r" % (state,))
    return bad
