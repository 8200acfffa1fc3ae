"""csl command line: quadratic class tables, window-ring ideals, PVD towers,
and the example registry."""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import poly
from .errors import CslError
from .fields import field_from_tag
from .quadratic import QuadIdeals, QuadraticOrder, class_table_json, enumerate_class_semigroup
from .regularity import ring_verdict
from .semigroup import clifford_decomposition, is_boolean, is_clifford

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def jsonable(obj):
    """Plain JSON types only, so that json.loads(emit(x)) == jsonable(x)."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def emit_json(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


def _print_report(r, out):
    out.write(f"  ideal: {json.dumps(jsonable(r.ideal), sort_keys=True)}\n")
    out.write(f"  endo ring: {json.dumps(jsonable(r.endo_ring), sort_keys=True)}\n")
    out.write(f"  regular: {r.regular}\n  stable: {r.stable}\n")
    out.write(f"  strongly stable: {r.strongly_stable}")
    out.write(f" (generator {r.generator})\n" if r.generator else "\n")
    out.write(f"  I^2 = cI: {r.scalar_idempotent}\n")
    idx = f", index {r.l_stable_index}" if r.l_stable_index else ""
    out.write(f"  L-stable: {r.l_stable} ({r.l_stable_status}{idx})\n")


# ------------------------------------------------------------ quad


def cmd_quad(args, out):
    O = QuadraticOrder(args.d, args.f)
    ct = enumerate_class_semigroup(O)
    verdict = ring_verdict(QuadIdeals(O), ct.reps, exhaustive=True, noetherian=True)
    data = class_table_json(ct, verdict.reports)
    dec = clifford_decomposition(ct.semigroup)
    labels = ct.semigroup.labels
    data["idempotents"] = [labels[e] for e in dec.idempotents]
    data["group_orders"] = {labels[e]: len(g) for e, g in dec.groups.items()}
    if args.json:
        out.write(emit_json(data) + "\n")
    elif args.csv:
        buf = io.StringIO()
        cols = ["label", "norm", "multiplier_conductor", "idempotent", "regular", "stable", "strongly_stable"]
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for c in data["classes"]:
            w.writerow({k: c[k] for k in cols})
        out.write(buf.getvalue())
    else:
        out.write(f"order of conductor {O.f} in Q(sqrt({O.d_K})), D = {O.D}\n")
        out.write(f"{len(labels)} class{'es' if len(labels) != 1 else ''}\n")
        for k, c in enumerate(data["classes"]):
            flag = " *" if c["idempotent"] else ""
            out.write(f"  [{k}] {c['label']}  N={c['norm']}{flag}\n")
        out.write("table:\n")
        for row in ct.table:
            out.write("  " + " ".join(f"{v:>2}" for v in row) + "\n")
        out.write("constituent groups:\n")
        for e, g in dec.groups.items():
            out.write(f"  {labels[e]}: order {len(g)}\n")
        out.write(f"Clifford: {str(data['clifford']).lower()}\n")
        out.write(f"Boolean: {str(data['boolean']).lower()}\n")
    return EXIT_OK


# ------------------------------------------------------------ window


def _polys(text, F):
    return [poly.parse(t, F) for t in text.split(",") if t.strip()]


def cmd_window(args, out):
    from .regularity import regularity_report
    from .window import WindowRing

    F = field_from_tag(args.field)
    c = poly.parse(args.c, F)
    D = None if args.D.strip().lower() == "const" else _polys(args.D, F)
    R = WindowRing(F, c, D)
    gens = _polys(args.I, F)
    I = R.ideal(gens)
    r = regularity_report(R, I, generators=args.I)
    data = dict(R.describe(I))
    data.update(
        generators=args.I,
        regular=r.regular,
        stable=r.stable,
        strongly_stable=r.strongly_stable,
        generator=r.generator,
        l_stable=r.l_stable,
        l_stable_status=r.l_stable_status,
        endo_ring=r.endo_ring,
    )
    if args.json:
        out.write(emit_json(data) + "\n")
    else:
        out.write(f"R = {{h in {F.tag}[X] : h mod {poly.to_str(R.c)} in D}}, ideal ({args.I})\n")
        _print_report(r, out)
    return EXIT_OK


# ------------------------------------------------------------ pvd

PRESETS = {
    "q-sqrt2": "quadratic_over_Q",
    "q-sqrt2-sqrt3": "biquadratic_over_Q",
    "sqrt2-sqrt3-over-sqrt2": "intermediate_over_sqrt2",
    "f5-quartic": "prime_quartic",
    "f5-quartic-over-f25": "prime_quartic_over_quadratic",
}


def cmd_pvd(args, out):
    from . import pvd

    if args.tower:
        with open(args.tower) as fh:
            Rg = pvd.load_tower(json.load(fh))
    else:
        Rg = getattr(pvd, PRESETS[args.preset])()
    v = pvd.pvd_class_analysis(Rg)
    data = v.to_json(Rg)
    if args.json:
        out.write(emit_json(data) + "\n")
    else:
        out.write(f"[K:k] = {v.degree}\n")
        out.write(f"Clifford: {str(v.clifford).lower()}\nBoolean: {str(v.boolean).lower()}\n")
        if v.semigroup is not None:
            out.write(f"classes: {', '.join(v.classes)}\n")
        if v.witness is not None:
            w = data["witness"]
            out.write(f"non-regular ideal: X*(span{{{', '.join(w['W'])}}} + M)\n")
            out.write(f"  I^2 (I : I^2) = {json.dumps(w['I2_colon_product'])}, strict: {w['strict']}\n")
    return EXIT_OK


# ------------------------------------------------------------ examples


def cmd_examples(args, out):
    from .registry import EXAMPLES, run_all

    if args.id == "list":
        for e in EXAMPLES:
            out.write(f"{e.id}  {e.title}\n")
        return EXIT_OK
    results = run_all(None if args.id == "all" else [args.id])
    if args.json:
        out.write(emit_json([r.to_json() for r in results]) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.id}  {r.title}\n")
            for k, d in r.diff().items():
                out.write(f"    {k}: expected {d['expected']}, got {d['observed']}\n")
        n = sum(r.passed for r in results)
        out.write(f"{n}/{len(results)} passed\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


# ------------------------------------------------------------ main


def build_parser():
    p = argparse.ArgumentParser(prog="csl", description="Class semigroups of integral domains.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quad", help="class semigroup of an imaginary quadratic order")
    q.add_argument("-d", type=int, required=True, help="fundamental discriminant d_K < 0")
    q.add_argument("-f", type=int, default=1, help="conductor")
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_quad)

    w = sub.add_parser("window", help="ideal of a conductor-window ring")
    w.add_argument("-c", required=True, help="conductor polynomial, e.g. X^2")
    w.add_argument("-D", default="const", help="'const' or comma-separated generators of D mod c")
    w.add_argument("-I", required=True, help="comma-separated ideal generators")
    w.add_argument("--field", default="Q", help="Q or F_p")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_window)

    v = sub.add_parser("pvd", help="pseudo-valuation pullback k + M")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--tower", help="tower JSON file")
    src.add_argument("--preset", choices=sorted(PRESETS))
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_pvd)

    e = sub.add_parser("examples", help="replay registered examples")
    e.add_argument("id", help="example id, 'all' or 'list'")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CslError, ValueError, OSError) as exc:
        sys.stderr.write(f"csl: error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
