"""Acceptance suite: one test per numbered criterion, exact tolerances.

Each test prints a PASS/FAIL line (run with -s to see them all).  Item 1
records two golden images verbatim; its first value is inconsistent with
the axiom-level oracle and with items 2, 3 and 7, which this suite also
verifies exactly -- it is kept as recorded and is expected to stay red.
"""

import random

import pytest

from conftest import W
from d4sca import rmatrix, type_a
from d4sca.automaton import (Soliton, an_evolve, detect_solitons, evolve,
                             evolve_natural, make_state, parse_path,
                             render_path, scatter_experiment)
from d4sca.insertion import (B1_SET, B10, B11, B112, B12, B121, eta, eta_inv,
                             xi, xi_inv)
from d4sca.type_d43 import BNatural, D43Crystal


def _report(num, ok):
    print("ACCEPTANCE %2d: %s" % (num, "PASS" if ok else "FAIL"))
    assert ok, "acceptance criterion %d failed" % num


def test_01_golden_r_values():
    got_l3 = rmatrix.comb_r(3, W("2b2b1"), "b2")
    got_l4 = rmatrix.comb_r(4, W("30b1"), "b3")
    ok = got_l4 == ("2", W("2b2b2b1"), -2)
    ok = ok and got_l3 == ("b1", W("0b2"), -2)
    _report(1, ok)


def test_02_highest_weight_table():
    bad = []
    for l in (1, 2, 3, 4):
        bad += rmatrix.verify_hwe_table(l)
    _report(2, not bad)


def test_03_oracle_equivalence():
    bad = []
    for l in (1, 2, 3, 4):
        tab = rmatrix.oracle(l)
        assert len(tab.iso) == len(D43Crystal(l).elements()) * 8
        bad += rmatrix.verify_oracle_vs_insertion(l)
    _report(3, not bad)


def test_04_vertex2_table():
    bad = rmatrix.verify_natural_table()
    ok = not bad and len(rmatrix.NATURAL_TABLE) == 23
    _report(4, ok)


def test_05_zero_string_families():
    ok = True
    for l in range(2, 7):
        B = D43Crystal(l)
        families = [
            (lambda p: (0, 0, 0, 0, 0, l - p) if p <= l
             else (p - l, 0, 0, 0, 0, 0), 2 * l),
            (lambda p: (0, 0, 1, 1, 0, l - 1 - p) if p <= l - 1
             else (p - l + 1, 0, 1, 1, 0, 0), 2 * l - 2),
            (lambda p: (0, 0, 0, 2, 0, l - 1 - p) if p <= l - 1
             else (p - l, 1, 0, 0, 0, 0), 2 * l - 1),
            (lambda p: (0, 1, 0, 0, 0, l - 1 - p) if p <= l - 2
             else (p - l + 1, 1, 1, 1, 0, 0), 2 * l - 3),
            (lambda p: (1, 0, 0, 0, 0, l - 1 - p) if p <= l - 2
             else (p - l + 3, 0, 0, 0, 0, 1), 2 * l - 4),
        ]
        for fam, pmax in families:
            b = fam(0)
            for p in range(1, pmax + 1):
                b = B.f(0, b)
                ok = ok and b == fam(p)
            ok = ok and B.f(0, b) is None
    _report(5, ok)


def test_06_yang_baxter():
    bad = []
    for l in (1, 2, 3):
        bad += rmatrix.verify_yang_baxter(l)
    bad += rmatrix.verify_yang_baxter_natural()
    _report(6, not bad)


INTRO_D43 = [
    "22111311111111111111111111",
    "11221131111111111111111111",
    "11112213111111111111111111",
    "11111122311111111111111111",
    "11111111201111111111111111",
    "1111111111b3111111111111111",
    "11111111111e21111111111111",
    "11111111111110211111111111",
    "11111111111111232111111111",
    "11111111111111121321111111",
    "11111111111111112113211111",
    "11111111111111111211132111",
]

INTRO_AN = [
    "221113111111111111111111111",
    "112211311111111111111111111",
    "111122131111111111111111111",
    "111111223111111111111111111",
    "111111112321111111111111111",
    "111111111213211111111111111",
    "111111111121132111111111111",
    "111111111112111321111111111",
    "111111111111211113211111111",
    "111111111111121111132111111",
    "111111111111112111111321111",
    "111111111111111211111113211",
]


def test_07_golden_traces():
    ok = render_path(evolve(parse_path("b20b31111"), 3).path) == "113eb121"

    cur = parse_path(INTRO_D43[0])
    lines = [render_path(cur)]
    for _ in range(11):
        cur = evolve(cur, 2).path
        lines.append(render_path(cur))
    ok = ok and lines == INTRO_D43
    lead = detect_solitons(cur).solitons[0]
    ok = ok and (min(2, lead.length) * 11 + lead.gamma) - 20 == -1

    cur = tuple(int(c) for c in INTRO_AN[0])
    lines = ["".join(map(str, cur))]
    for _ in range(11):
        cur = an_evolve(cur, 2, 2).path
        lines.append("".join(map(str, cur)))
    ok = ok and lines == INTRO_AN
    from d4sca.automaton import an_detect_solitons

    gamma, label = an_detect_solitons(cur, 2).solitons[0]
    ok = ok and (min(2, sum(label)) * 11 + gamma) - 21 == 1
    _report(7, ok)


def test_08_scattering_experiments():
    rep = scatter_experiment([(4, 0, 5), (3, 0, 0)], r=4, t_max=8, L=50)
    ok = rep.ok and rep.outgoing == (Soliton(44, 3, 0), Soliton(40, 4, 0))
    rep = scatter_experiment([(3, 0, 4), (0, 2, 0)], r=3, t_max=20, L=50)
    ok = ok and rep.ok and rep.outgoing == (Soliton(39, 2, 0), Soliton(49, 1, 2))
    rep = scatter_experiment([(1, 2, 3), (1, 1, 3), (0, 1, 0)], r=3,
                             t_max=16, L=50)
    # the printed headline gives z^37 for the first factor, but both printed
    # two-body compositions and the printed trace itself give z^39
    ok = ok and rep.ok and rep.outgoing == (Soliton(39, 0, 1),
                                            Soliton(41, 2, 0),
                                            Soliton(47, 0, 3))
    _report(8, ok)


def test_09_phase_shift_law():
    rng = random.Random(123)
    ok = True
    for _ in range(50):
        l1 = rng.randint(2, 5)
        l2 = rng.randint(1, min(l1 - 1, 4))
        y1 = rng.randint(0, l2)
        rep = scatter_experiment([(l1, 0, l1 + 2), (y1, l2 - y1, 0)],
                                 r=l2 + 1, t_max=40)
        delta = rep.outgoing[0].gamma - rep.incoming[1].gamma
        ok = ok and rep.ok and not rep.inconclusive
        ok = ok and delta == 2 * l2 + 3 * (-min(l1, l2 - y1))
        ok = ok and rep.incoming[0].gamma - rep.outgoing[1].gamma == delta
    _report(9, ok)


def test_10_conservation_and_commutation():
    rng = random.Random(2026)
    letters = ("1", "2", "3", "0", "b3", "b2", "b1", "e")
    ok = True
    for _ in range(100):
        p = tuple(rng.choice(letters) for _ in range(16)) + ("1",) * 14
        assert len(p) == 30
        recs = {l: evolve(p, l) for l in (1, 2, 3, 4)}
        for l in (1, 2, 3, 4):
            for lp in (1, 2, 3, 4):
                after = evolve(recs[lp].path, l)
                ok = ok and after.path == evolve(recs[l].path, lp).path
                ok = ok and after.energy == recs[l].energy
    _report(10, ok)


def test_11_vertex2_evolution_laws():
    ok = True
    for l in range(2, 6):
        for k in range(1, l):
            for y2 in range(k + 1):
                p = make_state([(l, 0, l + 3), (k - y2, y2, 0)],
                               L=4 * l + k + 14)
                before = detect_solitons(p).solitons
                out = detect_solitons(evolve_natural(p)).solitons
                ok = ok and out[0] == before[0]
                if y2 == 0:
                    ok = ok and out[1] == before[1]
                else:
                    ok = ok and out[1] == Soliton(before[1].gamma - 3,
                                                  k - y2 + 1, y2 - 1)
                r = l
                ok = ok and evolve_natural(evolve(p, r).path) == \
                    evolve(evolve_natural(p), r).path
    _report(11, ok)


def test_12_structural_counts():
    ok = len(D43Crystal(1).elements()) == 8
    ok = ok and len(D43Crystal(2).elements()) == 35
    ok = ok and len(BNatural().elements()) == 29
    ok = ok and (len(B1_SET), len(B10), len(B12), len(B11),
                 len(B112), len(B121)) == (7, 7, 14, 27, 64, 64)
    ok = ok and all(xi_inv(xi(w)) == w for w in B10)
    ok = ok and sorted(xi(w) for w in B10) == sorted(a for (a,) in B1_SET)
    ok = ok and all(eta_inv(eta(w)) == w for w in B121)
    ok = ok and set(eta(w) for w in B121) == set(B112)
    _report(12, ok)
