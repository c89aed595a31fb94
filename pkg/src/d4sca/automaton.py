"""Soliton cellular automata driven by carrier sweeps of combinatorial R.

A state ("path") is a tuple of B_1 letters that ends in vacuum letters
"1".  The time evolution T_l sweeps the carrier u_l through the path by
B_l (x) B_1 -> B_1 (x) B_l; T_nat sweeps the vertex-2 carrier t(12).

Solitons are maximal blocks 3^{x2} 2^{x1}; a block whose rightmost cell
sits j cells from the right end of the lattice carries the phase
gamma = min(r, l) * t + j under T_r.
"""

import json
from dataclasses import dataclass, field

from . import rmatrix, type_a
from .insertion import classify
from .type_d43 import LETTERS, PHI, col

VACUUM = "1"
_ALPHABET = set(LETTERS) | {PHI}


def parse_path(text):
    """Tokenize a trace line in the fixed ASCII encoding (b3/b2/b1/e)."""
    out = []
    bar = False
    for ch in text.strip():
        if ch == "b":
            if bar:
                raise ValueError("dangling bar in %r" % text)
            bar = True
            continue
        tok = "b" + ch if bar else ch
        bar = False
        if tok not in _ALPHABET:
            raise ValueError("unknown letter %r in %r" % (tok, text))
        out.append(tok)
    if bar:
        raise ValueError("dangling bar in %r" % text)
    return tuple(out)


def render_path(path):
    return "".join(path)


@dataclass(frozen=True)
class Soliton:
    gamma: int
    x1: int
    x2: int

    @property
    def length(self):
        return self.x1 + self.x2

    @property
    def label(self):
        return (self.x1, self.x2)

    def __str__(self):
        return "z^%d(%d,%d)" % (self.gamma, self.x1, self.x2)


@dataclass(frozen=True)
class DetectResult:
    solitons: tuple
    interacting: bool


@dataclass(frozen=True)
class EvolutionRecord:
    path: tuple
    energy: int
    site_energies: tuple
    carrier: tuple


def evolve(path, l):
    """One T_l step; raises if the carrier fails to return to u_l."""
    carrier = (VACUUM,) * l
    out = []
    hs = []
    for cell in path:
        letter, carrier, h = rmatrix.comb_r(l, carrier, cell)
        out.append(letter)
        hs.append(h)
    if carrier != (VACUUM,) * l:
        raise ValueError("carrier did not return to rest: the path lacks a "
                         "vacuum tail (final carrier %r)" % (carrier,))
    return EvolutionRecord(path=tuple(out), energy=-sum(hs),
                           site_energies=tuple(hs), carrier=carrier)


def evolve_natural(path):
    """One T_nat step (vertex-2 carrier sweep)."""
    carrier = col("1", "2")
    out = []
    for j, cell in enumerate(path):
        try:
            letter, carrier = rmatrix.comb_r_natural(carrier, cell)
        except rmatrix.UnsupportedState:
            raise rmatrix.UnsupportedState(
                "cell %d (letter %r) drove the vertex-2 carrier outside the "
                "supported states" % (j + 1, cell)) from None
        out.append(letter)
    return tuple(out)


def energies(path, lmax=4):
    return {l: evolve(path, l).energy for l in range(1, lmax + 1)}


def detect_solitons(path):
    """Decompose into vacuum runs and blocks 3^{x2} 2^{x1} (left to right).

    Positions are measured as (cells right of the block's right end); a
    path containing any other letter, or a malformed block, is tagged as
    interacting and yields no labels.
    """
    L = len(path)
    blocks = []
    j = 0
    while j < L:
        if path[j] == VACUUM:
            j += 1
            continue
        k = j
        while k < L and path[k] != VACUUM:
            k += 1
        block = path[j:k]
        if any(a not in ("2", "3") for a in block):
            return DetectResult((), True)
        x2 = sum(1 for a in block if a == "3")
        if block != ("3",) * x2 + ("2",) * (len(block) - x2):
            return DetectResult((), True)
        blocks.append(Soliton(gamma=L - k, x1=len(block) - x2, x2=x2))
        j = k
    return DetectResult(tuple(blocks), False)


def make_state(specs, L=None, t_max=0):
    """Path with blocks 3^{x2} 2^{x1} separated by the given vacuum gaps.

    specs is a sequence of (x1, x2, gap-after) triples; the final gap is
    the minimum run of vacuum before the tail.  When L is omitted the
    lattice is sized for t_max evolution steps plus a safety margin.
    """
    cells = []
    lmax = 0
    for x1, x2, gap in specs:
        if x1 < 0 or x2 < 0 or x1 + x2 < 1:
            raise ValueError("bad soliton spec (%r, %r)" % (x1, x2))
        lmax = max(lmax, x1 + x2)
        cells.extend(["3"] * x2 + ["2"] * x1)
        cells.extend([VACUUM] * gap)
    if L is None:
        L = len(cells) + t_max * lmax + 4
    if L < len(cells) + 1:
        raise ValueError("lattice size %d too small for the specs" % L)
    cells.extend([VACUUM] * (L - len(cells)))
    return tuple(cells)


def a1_r_with_shift(left, right):
    """Two-body prediction: A_1 combinatorial R plus phase shift 2 l2 + 3 H."""
    (g1, b1), (g2, b2) = left, right
    l2 = sum(b2)
    b2p, b1p, h = type_a.an_r(1, b1, b2)
    delta = 2 * l2 + 3 * h
    return (g2 + delta, b2p), (g1 - delta, b1p)


def _reversal_orders(m):
    ltr = [i for width in range(m - 1, 0, -1) for i in range(width)]
    rtl = [width - 1 - i for width in range(m - 1, 0, -1) for i in range(width)]
    rtl = [m - 2 - i for i in ltr]
    return ltr, rtl


def compose_scattering(labels, two_body=a1_r_with_shift):
    """Compose adjacent two-body maps along both canonical orders.

    labels is a list of (gamma, (x1, x2)); returns the outgoing tuple and
    raises if the two bracketing orders disagree.
    """
    m = len(labels)
    if m < 2:
        return tuple(labels)
    outs = []
    for order in _reversal_orders(m):
        state = list(labels)
        for pos in order:
            state[pos], state[pos + 1] = two_body(state[pos], state[pos + 1])
        outs.append(tuple(state))
    if outs[0] != outs[1]:
        raise AssertionError("two-body composition orders disagree: %r vs %r"
                             % (outs[0], outs[1]))
    return outs[0]


@dataclass
class ScatterReport:
    r: int
    incoming: tuple
    outgoing: tuple = ()
    predicted: tuple = ()
    steps: int = 0
    ok: bool = False
    inconclusive: bool = False
    final_path: tuple = ()

    def lines(self):
        out = ["incoming: " + "  ".join(str(s) for s in self.incoming)]
        if self.inconclusive:
            out.append("inconclusive after %d steps" % self.steps)
            return out
        out.append("outgoing: " + "  ".join(str(s) for s in self.outgoing))
        out.append("predicted: " + "  ".join(str(s) for s in self.predicted))
        if len(self.incoming) == 2 and len(self.outgoing) == 2:
            measured = self.outgoing[0].gamma - self.incoming[1].gamma
            out.append("phase shift: measured %d" % measured)
        out.append("PASS" if self.ok else "FAIL")
        return out


def scatter_experiment(specs, r, t_max, L=None):
    """Evolve an initial multi-soliton state under T_r until the solitons
    are free and order-reversed, then compare against the two-body
    composition prediction."""
    path = make_state(specs, L=L, t_max=t_max)
    L = len(path)
    start = detect_solitons(path)
    if start.interacting:
        raise ValueError("initial state is not a free multi-soliton state")
    incoming = start.solitons
    lengths = [s.length for s in incoming]
    if lengths != sorted(lengths, reverse=True) or len(set(lengths)) != len(lengths):
        raise ValueError("soliton lengths must strictly decrease left to right")
    report = ScatterReport(r=r, incoming=incoming)
    if not incoming:
        report.ok = True
        report.final_path = path
        return report
    lmax = lengths[0]
    cur = path
    prev = None
    for t in range(1, t_max + 1):
        cur = evolve(cur, r).path
        result = detect_solitons(cur)
        if result.interacting or len(result.solitons) != len(incoming):
            prev = None
            continue
        out = result.solitons
        if [s.length for s in out] != sorted(lengths):
            prev = None
            continue
        measured = tuple(Soliton(gamma=min(r, s.length) * t + s.gamma,
                                 x1=s.x1, x2=s.x2) for s in out)
        gaps = [out[k].gamma - out[k + 1].gamma - out[k + 1].length
                for k in range(len(out) - 1)]
        # free once the gaps are comfortably wide, or once the corrected
        # phases have stopped moving (free propagation keeps them fixed)
        if all(g >= lmax + 1 for g in gaps) or measured == prev:
            predicted = compose_scattering([(s.gamma, s.label) for s in incoming])
            predicted = tuple(Soliton(gamma=g, x1=b[0], x2=b[1])
                              for g, b in predicted)
            report.outgoing = measured
            report.predicted = predicted
            report.steps = t
            report.ok = measured == predicted
            report.final_path = cur
            return report
        prev = measured
    report.inconclusive = True
    report.steps = t_max
    report.final_path = cur
    return report


# ---------------------------------------------------------------------------
# The reference automaton over the type-A crystals.

def an_evolve(path, l, n):
    """T_l sweep of the A_n automaton; cells are letters 1 .. n+1."""
    carrier = type_a.u(n, l)
    out = []
    hs = []
    for cell in path:
        unit = tuple(1 if k == cell - 1 else 0 for k in range(n + 1))
        yp, xp, h = type_a.an_r(n, carrier, unit)
        out.append(yp.index(1) + 1)
        carrier = xp
        hs.append(h)
    if carrier != type_a.u(n, l):
        raise ValueError("carrier did not return to rest: the path lacks a "
                         "vacuum tail (final carrier %r)" % (carrier,))
    return EvolutionRecord(path=tuple(out), energy=-sum(hs),
                           site_energies=tuple(hs), carrier=carrier)


def an_detect_solitons(path, n):
    """Blocks (n+1)^{x_n} .. (2)^{x_1}, labeled by A_{n-1} coordinates."""
    L = len(path)
    blocks = []
    j = 0
    while j < L:
        if path[j] == 1:
            j += 1
            continue
        k = j
        while k < L and path[k] != 1:
            k += 1
        block = path[j:k]
        if any(not 2 <= a <= n + 1 for a in block):
            return DetectResult((), True)
        if any(block[i] < block[i + 1] for i in range(len(block) - 1)):
            return DetectResult((), True)
        label = tuple(sum(1 for a in block if a == kk + 2) for kk in range(n))
        blocks.append((L - k, label))
        j = k
    return DetectResult(tuple(blocks), False)


def an_make_state(specs, n, L=None, t_max=0):
    cells = []
    lmax = 0
    for label, gap in specs:
        if len(label) != n:
            raise ValueError("label %r needs %d coordinates" % (label, n))
        lmax = max(lmax, sum(label))
        for k in range(n, 0, -1):
            cells.extend([k + 1] * label[k - 1])
        cells.extend([1] * gap)
    if L is None:
        L = len(cells) + t_max * lmax + 4
    cells.extend([1] * (L - len(cells)))
    return tuple(cells)


def an_two_body(n):
    """Two-body map for the A_n automaton: A_{n-1} R with shift 2 l2 + H."""

    def step(left, right):
        (g1, b1), (g2, b2) = left, right
        l2 = sum(b2)
        b2p, b1p, h = type_a.an_r(n - 1, b1, b2)
        delta = 2 * l2 + h
        return (g2 + delta, b2p), (g1 - delta, b1p)

    return step


# ---------------------------------------------------------------------------
# Trace export.

TRACE_SCHEMA = {
    "type": "object",
    "required": ["L", "r", "steps", "solitons", "energies"],
    "properties": {
        "L": {"type": "integer", "minimum": 1},
        "r": {"type": "integer", "minimum": 1},
        "steps": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
        "solitons": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["gamma", "x1", "x2"],
                "properties": {"gamma": {"type": "integer"},
                               "x1": {"type": "integer", "minimum": 0},
                               "x2": {"type": "integer", "minimum": 0}},
            },
        },
        "energies": {"type": "object",
                     "patternProperties": {"^E[0-9]+$": {"type": "integer"}}},
    },
}


def trace_json(path, r, t_max, lmax=4):
    """Run t_max steps of T_r and export the trace as a JSON string."""
    steps = [list(path)]
    cur = path
    for _ in range(t_max):
        cur = evolve(cur, r).path
        steps.append(list(cur))
    final = detect_solitons(cur)
    sol = [{"gamma": min(r, s.length) * t_max + s.gamma, "x1": s.x1, "x2": s.x2}
           for s in final.solitons]
    payload = {
        "L": len(path),
        "r": r,
        "steps": steps,
        "solitons": sol,
        "energies": {"E%d" % l: e for l, e in energies(path, lmax).items()},
    }
    return json.dumps(payload, indent=1)


def trace_from_json(text):
    data = json.loads(text)
    return [tuple(step) for step in data["steps"]]
