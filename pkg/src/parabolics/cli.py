"""Command-line surface: verification suites with text or JSON reports.

Every report line carries the identifier of the item it verifies (case
id, table entry, deformation variant, identity name) so failures are
traceable to a single claim.  Runs are deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import ampleness, classify, cxlinalg, mpchar, walkdiag
from .grading import ColouredDiagram, compute_grading
from .rootsys import POSITIVE_ROOT_COUNTS, InvalidTypeError, build_root_system, parse_type
from .spinor import spin_module


@dataclass
class RunConfig:
    seed: int = 0
    tolerance: float = 1e-10
    output: str = "text"

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


class Report:
    def __init__(self):
        self.lines: list[dict] = []

    def add(self, anchor: str, ok: bool, detail: str = "") -> None:
        self.lines.append({"anchor": anchor, "ok": bool(ok), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(l["ok"] for l in self.lines)

    def emit(self, output: str) -> int:
        if output == "json":
            print(json.dumps({"passed": self.passed, "lines": self.lines}, indent=2))
        else:
            for l in self.lines:
                status = "PASS" if l["ok"] else "FAIL"
                detail = f"  {l['detail']}" if l["detail"] else ""
                print(f"[{status}] {l['anchor']}{detail}")
            print(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return 0 if self.passed else 1


def parse_diagram(s: str) -> ColouredDiagram:
    """Parse '<TYPE>/<black-list>' such as 'E7/1,3,5,7' or 'G2/'."""
    if "/" not in s:
        raise ValueError(f"{s!r}: expected '<TYPE>/<black-list>' (position {len(s)})")
    type_part, _, black_part = s.partition("/")
    kind, rank = parse_type(type_part)
    rs = build_root_system(kind, rank)
    black: set[int] = set()
    if black_part.strip():
        for tok in black_part.split(","):
            pos = s.index(black_part)
            if not tok.strip().isdigit():
                raise ValueError(f"{s!r}: bad vertex {tok!r} (position {pos})")
            v = int(tok)
            if not 1 <= v <= rank:
                raise ValueError(f"{s!r}: vertex {v} out of range 1..{rank}")
            if v in black:
                raise ValueError(f"{s!r}: duplicate vertex {v}")
            black.add(v)
    return ColouredDiagram(rs, frozenset(black))


def _parse_weights(s: str) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in part.split(",")) for part in s.split(";") if part]


# ------------------------------------------------------------ subcommands


def cmd_grade(args) -> int:
    g = compute_grading(parse_diagram(args.diagram))
    nonred = g.positive_nonreduced_weights()
    payload = {
        "diagram": str(g.diagram),
        "white": list(g.diagram.white),
        "positive_weights": [
            {"weight": list(w), "size": len(g.roots_of(w)),
             "reduced": g.is_reduced(w),
             "irreducible": g.is_irreducible_component(w)}
            for w in g.positive_weights
        ],
        "nonreduced": [list(w) for w in nonred],
        "levi_roots": len(g.zero_component),
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"{payload['diagram']}: white vertices {payload['white']}")
        for rec in payload["positive_weights"]:
            flags = "" if rec["reduced"] else "  non-reduced"
            print(f"  {tuple(rec['weight'])}  dim {rec['size']}{flags}")
        print(f"levi roots: {payload['levi_roots']}; "
              f"non-reduced positive weights: {len(nonred)}")
    return 0


def cmd_classify(args) -> int:
    kind, rank = parse_type(args.type)
    records = classify.scan_parabolics(build_root_system(kind, rank))
    rows = [{"black": list(r.black), "nonreduced": r.nonreduced,
             "basic_lemma_weakly_ample": r.basic_lemma_weakly_ample}
            for r in records]
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"black={','.join(map(str, r['black'])) or '-':16s} "
                  f"nonreduced={r['nonreduced']:3d} "
                  f"weakly-ample-by-count={r['basic_lemma_weakly_ample']}")
        print(f"{len(rows)} colourings")
    return 0


def cmd_diagram(args) -> int:
    g = compute_grading(parse_diagram(args.diagram))
    twisting = _parse_weights(args.twisting)
    wd = walkdiag.build_weight_diagram(g, twisting)
    payload = {
        "diagram": str(g.diagram),
        "twisting": [list(t) for t in wd.twisting],
        "nonreduced": [list(w) for w in wd.nonreduced],
        "rubbish": [list(w) for w in wd.rubbish],
        "arrows": [[list(a), list(m), list(b)] for a, m, b in wd.arrows],
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"{payload['diagram']}")
        print(f"  non-reduced: {[tuple(w) for w in payload['nonreduced']]}")
        print(f"  rubbish:     {[tuple(w) for w in payload['rubbish']]}")
        for a, m, b in wd.arrows:
            print(f"  {a} --{m}--> {b}")
    return 0


def cmd_verify_case(args) -> int:
    cases = walkdiag.load_cases()
    report = Report()
    if args.all:
        wanted = sorted(cases)
    else:
        if args.case not in cases:
            print(f"unknown case {args.case!r}; have {sorted(cases)}", file=sys.stderr)
            return 2
        wanted = [args.case]
    for cid in wanted:
        r = walkdiag.verify_case(cases[cid])
        entry = classify.match_table_entry(cases[cid].group, cases[cid].black)
        for c in r.checks:
            report.add(f"case {cid}: {c.item}", c.ok, "" if c.ok else c.detail)
        report.add(f"case {cid}: colouring matches table entry", entry is not None,
                   f"entry {entry}")
    return report.emit("json" if args.json else "text")


def cmd_check_table(args) -> int:
    tr = classify.check_table()
    report = Report()
    for idx, count in sorted(tr.counts.items()):
        report.add(f"table entry {idx}", count >= 2, f"nonreduced count {count}")
    return report.emit("json" if args.json else "text")


def cmd_mp_triple(args) -> int:
    dims = tuple(int(x) for x in args.blocks.split(","))
    rng = np.random.default_rng(args.seed)
    blocks = {}
    for i in range(1, len(dims)):
        for j in range(i + 1, len(dims) + 1):
            blocks[(i, j)] = (rng.standard_normal((dims[j - 1], dims[i - 1]))
                              + 1j * rng.standard_normal((dims[j - 1], dims[i - 1])))
    x = mpchar.BlockNilpotent(dims, blocks)
    triples = mpchar.gl_hermitian_characteristic(x)
    report = Report()
    for (i, j), t in sorted(triples.items()):
        report.add(f"block ({i},{j}) sl2 relations", t.accepted(),
                   "residuals " + ", ".join(f"{r:.2e}" for r in t.residuals))
    return report.emit("json" if args.json else "text")


def cmd_lemma(args) -> int:
    space = (cxlinalg.symmetric_space(args.w) if args.form == "sym"
             else cxlinalg.symplectic_space(args.w))
    rng = np.random.default_rng(args.seed)
    report = Report()
    worst = 0.0
    for t in range(args.trials):
        A = rng.standard_normal((args.w, args.u)) + 1j * rng.standard_normal((args.w, args.u))
        sol = mpchar.lemma_B_from_A(A, space)
        res = mpchar.lemma_residuals(sol, space)
        worst = max(worst, max(res.values()))
    report.add(f"characteristic equations ({args.form}, {args.trials} trials)",
               worst < 1e-9, f"worst residual {worst:.2e}")
    return report.emit("json" if args.json else "text")


def cmd_deform(args) -> int:
    if args.input:
        with open(args.input) as fh:
            raw = json.load(fh)

        def from_json(v):
            if isinstance(v, dict) and set(v) == {"re", "im"}:
                return np.asarray(v["re"], dtype=float) + 1j * np.asarray(v["im"])
            if isinstance(v, list):
                return np.asarray(v, dtype=complex)
            return v

        inputs = {k: from_json(v) for k, v in raw.items()}
        task = ampleness.DeformationTask(args.variant, inputs, seed=args.seed)
    elif args.variant == "7A" and args.k:
        task = ampleness.random_task_7a(args.k, args.seed)
    else:
        task = ampleness.random_task(args.variant, args.seed)
    res = ampleness.deform(task)

    def jsonable(v):
        if isinstance(v, (list, tuple)):
            return [jsonable(x) for x in v]
        arr = np.asarray(v)
        if np.iscomplexobj(arr):
            return {"re": arr.real.tolist(), "im": arr.imag.tolist()}
        return arr.tolist()

    payload = {
        "variant": res.variant,
        "verified": res.verified,
        "restarts": res.restarts,
        "witness": {k: jsonable(v) for k, v in res.witness.items()},
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"variant {res.variant}: verified={res.verified} restarts={res.restarts}")
        for k in res.witness:
            print(f"  witness component {k!r}")
    return 0 if res.verified else 1


def cmd_spinor(args) -> int:
    rng = np.random.default_rng(args.seed)
    sm = spin_module(args.m)
    report = Report()
    worst = 0.0
    for _ in range(100):
        v = rng.standard_normal(2 * args.m) + 1j * rng.standard_normal(2 * args.m)
        R = sm.rho(v)
        worst = max(worst, float(np.linalg.norm(
            R @ R - sm.pairing(v, v) * np.eye(sm.dim))))
    report.add(f"spinor m={args.m}: rho(v)^2 = (v,v) Id", worst < 1e-10,
               f"worst residual {worst:.2e}")
    if args.m % 2 == 0:
        Gp = sm.half_space("+").gram
        want_sym = args.m % 4 == 0
        ok = np.array_equal(Gp, Gp.T) if want_sym else np.array_equal(Gp, -Gp.T)
        report.add(f"spinor m={args.m}: form {'symmetric' if want_sym else 'skew'} on S+", ok)
        report.add(f"spinor m={args.m}: dim S+ = {2 ** (args.m - 1)}",
                   len(sm.even_indices) == 2 ** (args.m - 1))
    return report.emit("json" if args.json else "text")


def _verify_all(cfg: RunConfig, trials: int) -> Report:
    rng = np.random.default_rng(cfg.seed)
    report = Report()

    for fname in ("cases.txt", "table.txt"):
        report.add(f"data {fname}", True, f"sha256 {walkdiag.data_checksum(fname)}")

    kinds = ([("A", r) for r in range(1, 9)] + [("B", r) for r in range(2, 9)]
             + [("C", r) for r in range(2, 9)] + [("D", r) for r in range(4, 9)]
             + [("E", r) for r in (6, 7, 8)] + [("F", 4), ("G", 2)])
    for kind, rank in kinds:
        rs = build_root_system(kind, rank)
        want = POSITIVE_ROOT_COUNTS[kind](rank)
        report.add(f"root count {kind}{rank}", len(rs.positive_roots) == want,
                   f"{len(rs.positive_roots)} vs {want}")

    for cid, r in walkdiag.verify_all_cases().items():
        report.add(f"case {cid}", r.passed,
                   "" if r.passed else "; ".join(c.item for c in r.failures()))

    tr = classify.check_table()
    report.add("table: all 59 entries have >= 2 non-reduced weights", tr.passed,
               f"failures {tr.failures()}" if not tr.passed else "")

    worst = [0.0] * 4
    for _ in range(trials):
        m, n = rng.integers(1, 9, size=2)
        F = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
        P = cxlinalg.mp_inverse(F)
        worst = [max(w, r) for w, r in zip(worst, cxlinalg.penrose_residuals(F, P))]
    report.add(f"penrose equations ({trials} trials)", max(worst) < cfg.tolerance,
               "worst " + ", ".join(f"{w:.1e}" for w in worst))

    bad = 0
    for t in range(trials):
        dims = (2, 3, 2) if t % 2 == 0 else (1, 4, 2, 1)
        blocks = {}
        for i in range(1, len(dims)):
            for j in range(i + 1, len(dims) + 1):
                blocks[(i, j)] = (rng.standard_normal((dims[j - 1], dims[i - 1]))
                                  + 1j * rng.standard_normal((dims[j - 1], dims[i - 1])))
        triples = mpchar.gl_hermitian_characteristic(mpchar.BlockNilpotent(dims, blocks))
        bad += any(not t2.accepted() for t2 in triples.values())
    report.add(f"gl characteristic ({trials} trials)", bad == 0, f"{bad} rejected")

    for form, space in (("sym", cxlinalg.symmetric_space(6)),
                        ("skew", cxlinalg.symplectic_space(6))):
        w = 0.0
        for _ in range(trials):
            A = rng.standard_normal((6, 4)) + 1j * rng.standard_normal((6, 4))
            sol = mpchar.lemma_B_from_A(A, space)
            w = max(w, max(mpchar.lemma_residuals(sol, space).values()))
        report.add(f"characteristic equations ({form}, {trials} trials)", w < 1e-9,
                   f"worst {w:.2e}")

    sm = spin_module(4)
    w = 0.0
    for _ in range(trials):
        v = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        R = sm.rho(v)
        w = max(w, float(np.linalg.norm(R @ R - sm.pairing(v, v) * np.eye(16))))
    report.add(f"spinor rho(v)^2 = (v,v) Id ({trials} trials)", w < cfg.tolerance,
               f"worst {w:.2e}")

    for variant in ampleness.VARIANTS:
        ok = 0
        n_trials = max(1, trials // 10)
        for s in range(n_trials):
            res = ampleness.deform(ampleness.random_task(variant, cfg.seed * 1000 + s))
            ok += res.verified
        report.add(f"deform {variant} ({n_trials} trials)", ok == n_trials,
                   f"{ok}/{n_trials} verified")
    return report


def cmd_verify_all(args) -> int:
    cfg = RunConfig(seed=args.seed, tolerance=args.tolerance,
                    output="json" if args.json else "text")
    report = _verify_all(cfg, trials=args.trials)
    return report.emit(cfg.output)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="parabolics",
                                description="Parabolic grading and characteristic checks")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true")
        return sp

    sp = add("grade", cmd_grade, help="grading of a coloured diagram")
    sp.add_argument("diagram", help="e.g. E7/1,3,4,6,7")

    sp = add("classify", cmd_classify, help="scan all proper colourings of a type")
    sp.add_argument("type", help="e.g. E8")

    sp = add("diagram", cmd_diagram, help="weight diagram for chosen twisting weights")
    sp.add_argument("diagram")
    sp.add_argument("--twisting", required=True,
                    help="semicolon-separated weights, e.g. '1,0;0,1'")

    sp = add("verify-case", cmd_verify_case, help="verify bundled cases")
    sp.add_argument("--case")
    sp.add_argument("--all", action="store_true")

    add("check-table", cmd_check_table, help="non-reduced counts for the 59 entries")

    sp = add("mp-triple", cmd_mp_triple, help="block nilpotent sl2 triples")
    sp.add_argument("--blocks", default="2,3,2")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("lemma", cmd_lemma, help="solve the characteristic equations")
    sp.add_argument("--u", type=int, default=4)
    sp.add_argument("--w", type=int, default=6)
    sp.add_argument("--form", choices=("sym", "skew"), default="sym")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("deform", cmd_deform, help="run one deformation search")
    sp.add_argument("--variant", required=True, choices=ampleness.VARIANTS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k", type=int, help="tensor width for 7A")
    sp.add_argument("--input", help="JSON file with explicit inputs")

    sp = add("spinor", cmd_spinor, help="spinor identities")
    sp.add_argument("--m", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("verify-all", cmd_verify_all, help="run every verification suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--tolerance", type=float, default=1e-10)

    args = p.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, InvalidTypeError, walkdiag.CaseDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
