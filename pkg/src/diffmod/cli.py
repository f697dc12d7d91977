"""Command-line front door.

Subcommands:

  check    run an equation suite for a modality over a rig
  map      print one column of a structure map
  refute   exhaustive no-deriving-transformation search
  compare  closed-form oracle vs. the generic construction
  lemma27  the z2 two-coalgebra-morphisms witness

Exit status: 0 when everything passed, 1 when a check failed,
2 on usage errors.  All output is JSON on stdout.
"""

import argparse
import json
import sys

from .category import AtomsObject
from .equations import run_morphism_suite, run_suite
from .freediff import free_differential, rho, rho_sharp
from .labels import from_json, to_json
from .modalities import bag_modality, points_modality
from .rig import get_rig
from .verify import lemma27_witness, refute_deriving, rel_oracle_compare

SUITES = ("comonad", "coalgebra", "differential", "codereliction",
          "bialgebra", "monoidal", "seely", "action-lift",
          "coalg-morphism", "diff-morphism")

MAP_NAMES = ("epsilon", "delta", "e", "comul", "u", "nabla",
             "m-unit", "deriving", "codereliction", "zeta")


def parse_object(spec: str) -> AtomsObject:
    data = json.loads(spec)
    atoms = data.get("atoms")
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise ValueError('object spec must look like {"atoms": ["a", "b"]}')
    if len(set(atoms)) != len(atoms):
        raise ValueError("duplicate atom names in object spec")
    return AtomsObject(atoms)


def make_bundle(selector: str, rig):
    if selector == "points":
        return points_modality(rig)
    if selector == "bag":
        return bag_modality(rig)
    if selector == "free-diff(points)":
        return free_differential(points_modality(rig))
    if selector == "free-diff(bag)":
        return free_differential(bag_modality(rig))
    raise ValueError("unknown modality %r (try points, bag, "
                     "free-diff(points), free-diff(bag))" % selector)


def lookup_map(bundle, name: str, x):
    name = name.lower()
    if name.endswith("-partial"):
        name = name[:-len("-partial")]
    aliases = {
        "epsilon": lambda: bundle.eps(x),
        "eps": lambda: bundle.eps(x),
        "delta": lambda: bundle.delta(x),
        "e": lambda: bundle.e(x),
        "comul": lambda: bundle.comul(x),
        "split": lambda: bundle.comul(x),
        "u": lambda: bundle.u(x),
        "nabla": lambda: bundle.nabla(x),
        "m-unit": lambda: bundle.m_unit(),
        "m_i": lambda: bundle.m_unit(),
        "deriving": lambda: bundle.deriving(x),
        "d": lambda: bundle.deriving(x),
        "codereliction": lambda: bundle.codereliction(x),
        "eta": lambda: bundle.codereliction(x),
        "zeta": lambda: bundle.zeta(x) if hasattr(bundle, "zeta") else None,
    }
    if name not in aliases:
        raise ValueError("unknown map %r (known: %s)" % (name, ", ".join(sorted(aliases))))
    m = aliases[name]()
    if m is None:
        raise ValueError("modality %s does not provide %r" % (bundle.kind, name))
    return m


def cmd_check(args) -> int:
    rig = get_rig(args.rig)
    bundle = make_bundle(args.modality, rig)
    x = parse_object(args.object)
    y = parse_object(args.object2) if args.object2 else x
    if args.suite == "coalg-morphism":
        if not hasattr(bundle, "zeta"):
            raise ValueError("coalg-morphism checks the freeness unit; "
                             "pick a free-diff modality")
        reports = run_morphism_suite(bundle.zeta, bundle.base, bundle, x,
                                     args.weight, window=args.window)
    elif args.suite == "diff-morphism":
        if bundle.kind != "free-diff(points)":
            raise ValueError("diff-morphism checks the initial morphism out "
                             "of free-diff(points)")
        bag = bag_modality(rig)
        phi = lambda obj: rho_sharp(bundle, bag, obj)
        # the comultiplication square would need the lift of rho-sharp,
        # whose point images have infinite support; it is not representable
        reports = run_morphism_suite(phi, bundle, bag, x, args.weight,
                                     differential=True, window=args.window,
                                     skip=("morphism-delta",))
    else:
        reports = run_suite(args.suite, bundle, (x, y), args.weight,
                            window=args.window)
    payload = [r.to_json(rig) for r in reports]
    emit(args, {"reports": payload,
                "passed": sum(r.passed for r in reports),
                "failed": sum(not r.passed for r in reports)})
    return 0 if all(r.passed for r in reports) else 1


def cmd_map(args) -> int:
    rig = get_rig(args.rig)
    bundle = make_bundle(args.modality, rig)
    x = parse_object(args.object)
    m = lookup_map(bundle, args.name, x)
    label = from_json(json.loads(args.apply), rig)
    wmax = args.weight if not m.finite_columns else None
    column = m.column(label, wmax)
    out = {
        "map": args.name,
        "source": m.source.name,
        "target": m.target.name,
        "column": [[to_json(l, rig), rig.encode(v)] for l, v in
                   sorted(column.items(), key=lambda kv: kv[0].sort_key())],
    }
    if wmax is not None:
        out["window"] = wmax
    emit(args, out)
    return 0


def cmd_refute(args) -> int:
    if args.target != "points-deriving":
        raise ValueError("unknown refutation target %r" % args.target)
    result = refute_deriving(args.object_size, max_weight=args.weight)
    emit(args, result)
    return 0 if not result["survivors"] else 1


def cmd_compare(args) -> int:
    if args.oracle != "rel":
        raise ValueError("unknown oracle %r" % args.oracle)
    x = parse_object(args.x)
    y = parse_object(args.y) if args.y else x
    reports = rel_oracle_compare(x, y, max_weight=args.weight)
    from .rig import BOOL
    emit(args, {"reports": [r.to_json(BOOL) for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def cmd_lemma27(args) -> int:
    reports = lemma27_witness(args.weight)
    from .rig import Z2
    emit(args, {"reports": [r.to_json(Z2) for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def emit(args, payload):
    text = json.dumps(payload, indent=2, sort_keys=True)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffmod",
        description="exact verifier for differential modalities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run an equation suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--modality", required=True)
    p.add_argument("--rig", default="bool")
    p.add_argument("--object", required=True)
    p.add_argument("--object2")
    p.add_argument("--weight", type=int, default=3)
    p.add_argument("--window", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("map", help="print one column of a structure map")
    p.add_argument("--name", required=True)
    p.add_argument("--modality", required=True)
    p.add_argument("--rig", default="bool")
    p.add_argument("--object", required=True)
    p.add_argument("--apply", required=True)
    p.add_argument("--weight", type=int, default=6,
                   help="output window for maps with infinite columns")
    p.add_argument("--out")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("refute", help="exhaustive deriving-transformation search")
    p.add_argument("--target", default="points-deriving")
    p.add_argument("--object-size", type=int, default=1)
    p.add_argument("--weight", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("compare", help="oracle vs construction")
    p.add_argument("--oracle", default="rel")
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.add_argument("--weight", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lemma27", help="two distinct coalgebra morphisms over z2")
    p.add_argument("--weight", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemma27)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
