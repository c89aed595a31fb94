"""Command-line front end.

Subcommands: evolve, scatter, verify, export, tables.  Exit codes:
0 success, 1 verification failure, 2 usage or configuration error.
"""

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field, replace

from . import automaton, core, rmatrix, type_a
from .type_d43 import BNatural, D43Crystal, coord_to_word, render_nat


@dataclass
class ExperimentConfig:
    algebra: str = "d43"           # "d43" or "an"
    rank: int = 2                  # rank n for the an algebra
    level: int = 2                 # carrier level r
    size: int = 0                  # lattice size L (0 = automatic)
    steps: int = 10
    seed: int = 0
    format: str = "text"           # text | json | dot
    state: str = ""                # initial path in the ASCII encoding
    solitons: list = field(default_factory=list)  # [[x1, x2, gap], ...]
    preset: str = ""

    @classmethod
    def from_file(cls, path):
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        return cls(**data)

    def to_json(self):
        return json.dumps(asdict(self), indent=1, sort_keys=True)


PRESETS = {
    "intro-d43": ExperimentConfig(algebra="d43", level=2, size=26, steps=11,
                                  state="22111311111111111111111111"),
    "intro-an": ExperimentConfig(algebra="an", rank=2, level=2, size=27, steps=11,
                                 state="221113111111111111111111111"),
    "two-body-r4": ExperimentConfig(level=4, size=50, steps=8,
                                    solitons=[[4, 0, 5], [3, 0, 0]]),
    "two-body-r3": ExperimentConfig(level=3, size=50, steps=20,
                                    solitons=[[3, 0, 4], [0, 2, 0]]),
    "three-body": ExperimentConfig(level=3, size=50, steps=16,
                                   solitons=[[1, 2, 3], [1, 1, 3], [0, 1, 0]]),
}


class UsageError(Exception):
    pass


def _config(args):
    if getattr(args, "config", None):
        cfg = ExperimentConfig.from_file(args.config)
    elif getattr(args, "preset", None):
        if args.preset not in PRESETS:
            raise UsageError("unknown preset %r (have: %s)"
                             % (args.preset, ", ".join(sorted(PRESETS))))
        cfg = replace(PRESETS[args.preset])
        cfg.solitons = [list(s) for s in cfg.solitons]
    else:
        cfg = ExperimentConfig()
    for name in ("algebra", "rank", "level", "size", "steps", "seed",
                 "format", "state"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    if getattr(args, "solitons", None):
        cfg.solitons = [[int(v) for v in part.split(",")]
                        for part in args.solitons.split(";")]
    return cfg


_UNICODE = {"b1": "1̄", "b2": "2̄", "b3": "3̄", "e": "φ"}


def _render_cells(path, unicode_bars=False):
    if unicode_bars:
        return "".join(_UNICODE.get(a, a) for a in path)
    return automaton.render_path(path)


def _marker_line(path, unicode_bars=False):
    out = []
    blocks = automaton.detect_solitons(path)
    starts = set()
    spans = {}
    if not blocks.interacting:
        for s in blocks.solitons:
            end = len(path) - s.gamma
            spans.update({j: True for j in range(end - s.length, end)})
    for j, a in enumerate(path):
        width = 1 if unicode_bars else len(a)
        out.append(("^" if j in spans else " ") * width)
    return "".join(out).rstrip()


def cmd_evolve(args):
    cfg = _config(args)
    if cfg.algebra == "an":
        if not cfg.state:
            raise UsageError("the an algebra needs --state")
        path = tuple(int(c) for c in cfg.state)
        if cfg.size and len(path) != cfg.size:
            raise UsageError("state length %d != size %d" % (len(path), cfg.size))
        lines = ["".join(map(str, path))]
        cur = path
        for _ in range(cfg.steps):
            cur = automaton.an_evolve(cur, cfg.level, cfg.rank).path
            lines.append("".join(map(str, cur)))
        print("\n".join(lines))
        return 0
    if cfg.state:
        path = automaton.parse_path(cfg.state)
    elif cfg.solitons:
        path = automaton.make_state([tuple(s) for s in cfg.solitons],
                                    L=cfg.size or None, t_max=cfg.steps)
    else:
        path = (automaton.VACUUM,) * (cfg.size or 12)
    if cfg.size and len(path) != cfg.size:
        raise UsageError("state length %d != size %d" % (len(path), cfg.size))
    if cfg.format == "json":
        print(automaton.trace_json(path, cfg.level, cfg.steps))
        return 0
    unicode_bars = bool(getattr(args, "unicode", False))
    markers = bool(getattr(args, "markers", False))
    lines = []
    cur = path
    for step in range(cfg.steps + 1):
        lines.append(_render_cells(cur, unicode_bars))
        if markers:
            lines.append(_marker_line(cur, unicode_bars))
        if step < cfg.steps:
            cur = automaton.evolve(cur, cfg.level).path
    print("\n".join(lines))
    return 0


def cmd_scatter(args):
    cfg = _config(args)
    if not cfg.solitons:
        import random

        rng = random.Random(cfg.seed)
        l1 = rng.randint(2, 4)
        l2 = rng.randint(1, l1 - 1)
        x1 = rng.randint(0, l1)
        y1 = rng.randint(0, l2)
        cfg.solitons = [[x1, l1 - x1, l1 + 2], [y1, l2 - y1, 0]]
        cfg.level = max(cfg.level, l2 + 1)
    report = automaton.scatter_experiment([tuple(s) for s in cfg.solitons],
                                          r=cfg.level, t_max=cfg.steps,
                                          L=cfg.size or None)
    if cfg.format == "json":
        print(json.dumps({
            "r": report.r,
            "incoming": [asdict(s) for s in report.incoming],
            "outgoing": [asdict(s) for s in report.outgoing],
            "predicted": [asdict(s) for s in report.predicted],
            "steps": report.steps,
            "ok": report.ok,
            "inconclusive": report.inconclusive,
        }, indent=1))
    else:
        print("\n".join(report.lines()))
    return 0 if report.ok and not report.inconclusive else 1


def _suite_axioms():
    lines = []
    ok = True
    for l in (1, 2, 3):
        B = D43Crystal(l)
        for b in B.elements():
            for i in (0, 1, 2):
                c = B.f(i, b)
                if c is not None and B.e(i, c) != b:
                    ok = False
                c = B.e(i, b)
                if c is not None and B.f(i, c) != b:
                    ok = False
                if B.eps(i, b) != core.count_raises(B, i, b):
                    ok = False
                if B.phi(i, b) != core.count_lowers(B, i, b):
                    ok = False
        lines.append("B_%d axioms: %s" % (l, "ok" if ok else "FAILED"))
    nat = BNatural()
    for b in nat.elements():
        for i in (0, 1, 2):
            c = nat.f(i, b)
            if c is not None and nat.e(i, c) != b:
                ok = False
    lines.append("vertex-2 axioms: %s" % ("ok" if ok else "FAILED"))
    return ok, lines


def _suite_yangbaxter(l):
    bad = rmatrix.verify_yang_baxter(l)
    bad += rmatrix.verify_yang_baxter_natural()
    bad += type_a.verify_yang_baxter_an(1, (2, 1, 1))
    return not bad, bad or ["no counterexamples (l=%d triples included)" % l]


def _suite_hwe(l):
    bad = []
    for k in range(1, l + 1):
        bad += rmatrix.verify_hwe_table(k)
    return not bad, bad or ["all highest-weight rows match for l <= %d" % l]


def _suite_appendix_b():
    bad = rmatrix.verify_natural_table()
    return not bad, bad or ["%d/%d rows matched" % (len(rmatrix.NATURAL_TABLE),
                                                    len(rmatrix.NATURAL_TABLE))]


def _suite_oracle(l):
    bad = []
    for k in range(1, l + 1):
        bad += rmatrix.verify_oracle_vs_insertion(k)
    return not bad, bad or ["insertion R equals the graph oracle for l <= %d" % l]


def _suite_conservation():
    import random

    rng = random.Random(7)
    letters = ("1", "2", "3", "0", "b3", "b2", "b1", "e")
    bad = []
    for _ in range(20):
        body = [rng.choice(letters) for _ in range(16)]
        p = tuple(body) + ("1",) * 14
        for l in (1, 2, 3):
            for lp in (1, 2, 3):
                if automaton.evolve(automaton.evolve(p, lp).path, l).path != \
                        automaton.evolve(automaton.evolve(p, l).path, lp).path:
                    bad.append("commutation fails (l=%d, l'=%d)" % (l, lp))
                if automaton.evolve(automaton.evolve(p, lp).path, l).energy != \
                        automaton.evolve(p, l).energy:
                    bad.append("E_%d not conserved under T_%d" % (l, lp))
    return not bad, bad or ["T_l commute and E_l conserved on 20 sampled paths"]


def _suite_scattering():
    bad = []
    for name in ("two-body-r4", "two-body-r3", "three-body"):
        cfg = PRESETS[name]
        rep = automaton.scatter_experiment([tuple(s) for s in cfg.solitons],
                                           r=cfg.level, t_max=cfg.steps,
                                           L=cfg.size)
        if not rep.ok:
            bad.append("%s failed" % name)
    return not bad, bad or ["all shipped scattering presets PASS"]


SUITES = {
    "axioms": lambda args: _suite_axioms(),
    "yangbaxter": lambda args: _suite_yangbaxter(args.level or 2),
    "hwe-table": lambda args: _suite_hwe(args.level or 3),
    "appendix-b": lambda args: _suite_appendix_b(),
    "oracle-vs-insertion": lambda args: _suite_oracle(args.level or 3),
    "conservation": lambda args: _suite_conservation(),
    "scattering": lambda args: _suite_scattering(),
}


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError("unknown suite %r (have: %s)"
                         % (args.suite, ", ".join(sorted(SUITES))))
    ok, lines = SUITES[args.suite](args)
    for line in lines:
        print(line)
    print("%s: %s" % (args.suite, "PASS" if ok else "FAIL"))
    return 0 if ok else 1


def _tables_text():
    out = ["highest-weight images on B_l (x) B_1 (l = 3):"]
    l = 3
    for n, beta in rmatrix.hwe_domain(l):
        letter, word = rmatrix.hwe_expected(l, n, beta)
        out.append("  (1^%d) (x) (%s)  ->  (%s) (x) (%s)   H = %d"
                   % (n, beta, letter, " ".join(word) or "e",
                      rmatrix.hwe_expected_energy(l, n, beta)))
    out.append("")
    out.append("vertex-2 isomorphism table:")
    for bn, letter, letter2, bn2 in rmatrix.NATURAL_TABLE:
        out.append("  %s (x) (%s)  ->  (%s) (x) %s"
                   % (render_nat(bn), letter, letter2, render_nat(bn2)))
    return "\n".join(out)


def cmd_tables(args):
    print(_tables_text())
    return 0


def cmd_export(args):
    target = args.target
    os.makedirs(target, exist_ok=True)
    written = []
    if args.what in ("graphs", "all"):
        for name, crystal, label in (
                ("b1", D43Crystal(1), lambda b: " ".join(coord_to_word(b)) or "e"),
                ("b2", D43Crystal(2), lambda b: " ".join(coord_to_word(b)) or "e"),
                ("bnat", BNatural(), render_nat)):
            path = os.path.join(target, name + ".dot")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(core.to_dot(crystal, name=name, label=label))
            written.append(path)
    if args.what in ("tables", "all"):
        path = os.path.join(target, "tables.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_tables_text() + "\n")
        written.append(path)
    for path in written:
        print("wrote", path)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="d4sca",
        description="Soliton cellular automata over exceptional-type crystals")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--algebra", choices=("d43", "an"))
        p.add_argument("--rank", type=int)
        p.add_argument("-l", "--level", type=int)
        p.add_argument("-L", "--size", type=int)
        p.add_argument("-t", "--steps", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--format", choices=("text", "json", "dot"))
        p.add_argument("--preset")
        p.add_argument("--config")

    p = sub.add_parser("evolve", help="print a time-evolution trace")
    common(p)
    p.add_argument("--state", help="initial path in the ASCII letter encoding")
    p.add_argument("--solitons", help='spec "x1,x2,gap;x1,x2,gap;..."')
    p.add_argument("--markers", action="store_true",
                   help="underline detected soliton blocks")
    p.add_argument("--unicode", action="store_true",
                   help="render barred letters with combining overlines")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("scatter", help="run a scattering experiment")
    common(p)
    p.add_argument("--solitons", help='spec "x1,x2,gap;x1,x2,gap;..."')
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("-l", "--level", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write DOT graphs / text tables")
    p.add_argument("--what", choices=("graphs", "tables", "all"), default="all")
    p.add_argument("--target", default="export")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("tables", help="print the reference tables")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
