"""Generic crystal machinery.

Crystals are objects with an ``indices`` tuple and methods ``e(i, b)``,
``f(i, b)`` (returning an element or None), ``eps(i, b)``, ``phi(i, b)``
and ``elements()``.  Elements are opaque hashable values; None plays the
role of the null element 0, and operators never receive None.

``graph_iso_r`` computes the unique isomorphism B (x) B' -> B' (x) B
together with its energy function by breadth-first propagation from an
anchored pair, using nothing but the crystal axioms.  It is the
independent oracle against which the combinatorial algorithms are
checked.
"""

from collections import deque
from dataclasses import dataclass, field


class TensorCrystal:
    """Tensor product of two crystals over the same index set."""

    def __init__(self, left, right):
        if tuple(left.indices) != tuple(right.indices):
            raise ValueError("tensor factors must share the index set")
        self.left = left
        self.right = right
        self.indices = tuple(left.indices)

    def elements(self):
        return tuple((a, b) for a in self.left.elements()
                     for b in self.right.elements())

    def e(self, i, p):
        a, b = p
        if self.left.phi(i, a) >= self.right.eps(i, b):
            na = self.left.e(i, a)
            return None if na is None else (na, b)
        nb = self.right.e(i, b)
        return None if nb is None else (a, nb)

    def f(self, i, p):
        a, b = p
        if self.left.phi(i, a) > self.right.eps(i, b):
            na = self.left.f(i, a)
            return None if na is None else (na, b)
        nb = self.right.f(i, b)
        return None if nb is None else (a, nb)

    def eps(self, i, p):
        a, b = p
        return self.left.eps(i, a) + max(0, self.right.eps(i, b) - self.left.phi(i, a))

    def phi(self, i, p):
        a, b = p
        return self.right.phi(i, b) + max(0, self.left.phi(i, a) - self.right.eps(i, b))


def seq_eps(crystal, i, seq):
    eps_acc = phi_acc = 0
    for b in seq:
        eb, pb = crystal.eps(i, b), crystal.phi(i, b)
        eps_acc = eps_acc + max(0, eb - phi_acc)
        phi_acc = pb + max(0, phi_acc - eb)
    return eps_acc


def seq_phi(crystal, i, seq):
    eps_acc = phi_acc = 0
    for b in seq:
        eb, pb = crystal.eps(i, b), crystal.phi(i, b)
        eps_acc = eps_acc + max(0, eb - phi_acc)
        phi_acc = pb + max(0, phi_acc - eb)
    return phi_acc


def seq_e(crystal, i, seq):
    """Raising operator on a left-to-right tensor word (None for null)."""
    if not seq:
        return None
    head, tail = seq[0], seq[1:]
    if crystal.phi(i, head) >= seq_eps(crystal, i, tail):
        nh = crystal.e(i, head)
        return None if nh is None else (nh,) + tuple(tail)
    nt = seq_e(crystal, i, tail)
    return None if nt is None else (head,) + nt


def seq_f(crystal, i, seq):
    if not seq:
        return None
    head, tail = seq[0], seq[1:]
    if crystal.phi(i, head) > seq_eps(crystal, i, tail):
        nh = crystal.f(i, head)
        return None if nh is None else (nh,) + tuple(tail)
    nt = seq_f(crystal, i, tail)
    return None if nt is None else (head,) + nt


def count_raises(crystal, i, b):
    n = 0
    while True:
        b = crystal.e(i, b)
        if b is None:
            return n
        n += 1


def count_lowers(crystal, i, b):
    n = 0
    while True:
        b = crystal.f(i, b)
        if b is None:
            return n
        n += 1


def weight(crystal, b):
    """phi_i - eps_i per index."""
    return tuple(crystal.phi(i, b) - crystal.eps(i, b) for i in crystal.indices)


def classical_highest(crystal, indices=(1, 2)):
    return tuple(b for b in crystal.elements()
                 if all(crystal.e(i, b) is None for i in indices))


def component(crystal, b, indices=None):
    """All elements reachable from b by e_i/f_i for i in the given indices."""
    indices = crystal.indices if indices is None else indices
    seen = {b}
    queue = deque([b])
    while queue:
        c = queue.popleft()
        for i in indices:
            for op in (crystal.e, crystal.f):
                nxt = op(i, c)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


class IsoInconsistency(Exception):
    """Two propagation walks disagreed: the crystal actions are broken."""


@dataclass
class IsoTable:
    """Total isomorphism and energy tables over B (x) B'."""

    iso: dict
    energy: dict
    unreached: tuple
    forward: TensorCrystal = field(repr=False)
    backward: TensorCrystal = field(repr=False)

    def __call__(self, pair):
        return self.iso[pair]


def _h_step(forward, backward, p, q):
    """Energy increment along the raising 0-arrow out of p (with image q)."""
    left_p = forward.left.phi(0, p[0]) >= forward.right.eps(0, p[1])
    left_q = backward.left.phi(0, q[0]) >= backward.right.eps(0, q[1])
    if left_p and left_q:
        return 1
    if not left_p and not left_q:
        return -1
    return 0


def graph_iso_r(left, right, anchor, image, h0=0, lifo=False):
    """Propagate the pair anchor -> image (with energy h0) over all arrows.

    Returns an IsoTable.  Raises IsoInconsistency if two walks disagree on
    the image or the energy of some pair, or if an arrow present on one
    side is missing on the other.
    """
    forward = TensorCrystal(left, right)
    backward = TensorCrystal(right, left)
    iso = {anchor: image}
    energy = {anchor: h0}
    queue = deque([anchor])
    while queue:
        p = queue.pop() if lifo else queue.popleft()
        q = iso[p]
        h = energy[p]
        for i in forward.indices:
            for raising in (True, False):
                p2 = forward.e(i, p) if raising else forward.f(i, p)
                if p2 is None:
                    continue
                q2 = backward.e(i, q) if raising else backward.f(i, q)
                if q2 is None:
                    raise IsoInconsistency(
                        "arrow %s_%d exists at %r but not at image %r"
                        % ("e" if raising else "f", i, p, q))
                if i == 0:
                    dh = _h_step(forward, backward, p, q) if raising \
                        else -_h_step(forward, backward, p2, q2)
                else:
                    dh = 0
                h2 = h + dh
                if p2 in iso:
                    if iso[p2] != q2 or energy[p2] != h2:
                        raise IsoInconsistency(
                            "conflicting propagation at %r: %r/%d vs %r/%d"
                            % (p2, iso[p2], energy[p2], q2, h2))
                else:
                    iso[p2] = q2
                    energy[p2] = h2
                    queue.append(p2)
    unreached = tuple(p for p in forward.elements() if p not in iso)
    return IsoTable(iso=iso, energy=energy, unreached=unreached,
                    forward=forward, backward=backward)


def to_dot(crystal, name="crystal", label=None):
    """DOT text of the crystal graph (nodes labeled, edges colored by index)."""
    label = label or (lambda b: str(b))
    lines = ["digraph %s {" % name, "  rankdir=LR;"]
    elems = list(crystal.elements())
    for b in elems:
        lines.append('  "%s";' % label(b))
    for b in elems:
        for i in crystal.indices:
            c = crystal.f(i, b)
            if c is not None:
                lines.append('  "%s" -> "%s" [label="%d"];' % (label(b), label(c), i))
    lines.append("}")
    return "\n".join(lines) + "\n"
