"""Command-line front end: classification reports, pointwise evaluations,
and the seeded verification battery.

Subcommands
-----------
classify  report algebra class, curvature data, and harmonic loci
check     evaluate harmonicity predicates of one invariant unit field
density   pointwise map-energy report from a Jacobian and two metrics
verify    run the full property battery with a seeded generator

Exit codes: 0 the request succeeded (and the checked predicate holds),
1 the checked predicate fails (or the battery found a failure), 2 invalid
input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import lie3, mapenergy, verify

SCHEMA_VERSION = "1"

_CHECK_KINDS = ("section", "unit-section", "map", "skyrmion")


# ---------------------------------------------------------------------------
# JSON with explicit 17-significant-digit floats
# ---------------------------------------------------------------------------


def dumps_report(doc, indent: int = 0) -> str:
    """Serialize a report to JSON with floats at 17 significant digits.

    The standard encoder offers no control over float formatting, and 17
    digits guarantee lossless round-trips, so this walks the (small, fixed)
    report structure directly.  Key order is preserved.
    """
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        parts = [
            f"{inner}{json.dumps(key)}: {dumps_report(value, indent + 2)}"
            for key, value in doc.items()
        ]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(doc, (list, tuple)):
        items = [dumps_report(v, indent + 2) for v in doc]
        flat = "[" + ", ".join(items) + "]"
        if len(flat) <= 72 and "\n" not in flat:
            return flat
        return "[\n" + ",\n".join(inner + it for it in items) + "\n" + pad + "]"
    if isinstance(doc, bool) or doc is None:
        return json.dumps(doc)
    if isinstance(doc, (int, np.integer)):
        return str(int(doc))
    if isinstance(doc, (float, np.floating)):
        value = float(doc)
        if value == 0.0:  # drop the sign of zero so round-trips are stable
            value = 0.0
        return format(value, ".17g")
    if isinstance(doc, str):
        return json.dumps(doc)
    raise TypeError(f"cannot serialize {type(doc)!r}")


def _vec(values) -> list[float]:
    return [float(v) for v in np.asarray(values).reshape(-1)]


def _mat(values) -> list[list[float]]:
    return [[float(v) for v in row] for row in np.asarray(values)]


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------


def _parse_triple(text: str, name: str) -> np.ndarray:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"could not parse {name} {text!r} as comma-separated reals")
    if len(parts) != 3:
        raise ValueError(f"{name} needs exactly three components, got {len(parts)}")
    return np.asarray(parts)


def _parse_matrix(text: str, name: str) -> np.ndarray:
    try:
        rows = [[float(p) for p in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise ValueError(f"could not parse {name} {text!r} as a ;-separated matrix")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError(f"{name} has ragged rows")
    return np.asarray(rows)


def _load_density_payload(args) -> mapenergy.PointData:
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        missing = [key for key in ("J", "G", "H") if key not in doc]
        if missing:
            raise ValueError(f"payload file is missing keys {missing}")
        jac, dom, cod = (np.asarray(doc[k], dtype=float) for k in ("J", "G", "H"))
    else:
        if args.J is None or args.G is None or args.H is None:
            raise ValueError("provide either --file or all of --J, --G, --H")
        jac = _parse_matrix(args.J, "--J")
        dom = _parse_matrix(args.G, "--G")
        cod = _parse_matrix(args.H, "--H")
    return mapenergy.PointData(jacobian=jac, domain_metric=dom, codomain_metric=cod)


# ---------------------------------------------------------------------------
# report builders
# ---------------------------------------------------------------------------


def _algebra_report(lam_input, sc: lie3.StructureConstants, md: lie3.MilnorData) -> dict:
    sets = lie3.classify_sets(sc)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"lambda": _vec(lam_input)},
        "normalized": {
            "lambda": _vec(md.lam),
            "permutation": [int(i) + 1 for i in sc.permutation],
            "sign_flipped": sc.sign_flipped,
        },
        "algebra_class": md.algebra_class,
        "mu": _vec(md.mu),
        "ricci": _vec(md.ricci),
        "sectional": _vec(md.sectional),
        "flat": md.flat,
        "ricci_kernel_dim": md.ricci_kernel_dim,
        "sets": {name: sets[name].to_json() for name in ("H1", "H2", "H3", "Z1", "Z2", "Z3")},
    }


def _print_classify_table(report: dict) -> None:
    print(f"algebra class    : {report['algebra_class']}")
    print(f"lambda (norm.)   : {report['normalized']['lambda']}")
    print(f"mu               : {report['mu']}")
    print(f"ricci            : {report['ricci']}")
    print(f"sectional K      : {report['sectional']}  (K23, K13, K12)")
    print(f"flat             : {report['flat']}")
    print(f"ricci kernel dim : {report['ricci_kernel_dim']}")
    for name in ("H1", "H2", "H3", "Z1", "Z2", "Z3"):
        print(f"{name:<16} : {_descriptor_text(report['sets'][name])}")


def _descriptor_text(doc: dict) -> str:
    kind = doc["kind"]
    if kind == "Union":
        return " U ".join(_descriptor_text(m) for m in doc["members"])
    if "indices" in doc:
        return f"{kind}({','.join(str(i) for i in doc['indices'])})"
    return kind


def cmd_classify(args) -> int:
    lam_input = _parse_triple(args.lam, "--lambda")
    sc = lie3.StructureConstants.normalize(lam_input)
    md = lie3.classify_algebra(sc)
    report = _algebra_report(lam_input, sc, md)
    if args.json:
        print(dumps_report(report))
    else:
        _print_classify_table(report)
    return 0


def cmd_check(args) -> int:
    lam_input = _parse_triple(args.lam, "--lambda")
    sigma_input = _parse_triple(args.sigma, "--sigma")
    norm = float(np.linalg.norm(sigma_input))
    if norm == 0.0:
        raise ValueError("--sigma must be nonzero")
    sc = lie3.StructureConstants.normalize(lam_input)
    md = lie3.classify_algebra(sc)
    sigma = sc.permute(sigma_input) / norm
    predicates = lie3.check_predicates(md, sigma, args.r, coupling=args.coupling)

    report = _algebra_report(lam_input, sc, md)
    report["input"]["sigma"] = _vec(sigma_input)
    report["input"]["r"] = args.r
    report["input"]["kind"] = args.kind
    report["input"]["coupling"] = args.coupling
    report["predicates"] = {
        "sigma_unit": _vec(sigma),
        "r_parallel": predicates.r_parallel,
        "r_harmonic_unit": predicates.r_harmonic_unit,
        "twisted_2_skyrmion": predicates.twisted_2_skyrmion,
        "r_harmonic_map": predicates.r_harmonic_map,
        "vertical_tension": _vec(predicates.vertical_tension),
        "horizontal_tension": None
        if predicates.horizontal_tension is None
        else _vec(predicates.horizontal_tension),
        "vertical_energy": predicates.vertical_energy,
    }

    verdicts = {
        "section": predicates.r_parallel,
        "unit-section": predicates.r_harmonic_unit,
        "map": predicates.r_harmonic_map,
        "skyrmion": predicates.twisted_2_skyrmion,
    }
    verdict = verdicts[args.kind]

    if args.json:
        print(dumps_report(report))
    else:
        block = report["predicates"]
        print(f"algebra class      : {report['algebra_class']}")
        print(f"sigma (unit, norm.): {block['sigma_unit']}")
        for key in ("r_parallel", "r_harmonic_unit", "twisted_2_skyrmion", "r_harmonic_map"):
            print(f"{key:<19}: {block[key]}")
        print(f"vertical tension   : {block['vertical_tension']}")
        print(f"horizontal tension : {block['horizontal_tension']}")
        print(f"requested ({args.kind}, r={args.r}): {'holds' if verdict else 'fails'}")
    return 0 if verdict else 1


def cmd_density(args) -> int:
    point = _load_density_payload(args)
    r = args.r
    if not 1 <= r <= point.m:
        raise ValueError(f"--r must be in 1..{point.m}, got {r}")
    report_data = mapenergy.density_report(point)
    conformal = mapenergy.r_conformal_check(point, r)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "J": _mat(point.jacobian),
            "G": _mat(point.domain_metric),
            "H": _mat(point.codomain_metric),
            "r": r,
        },
        "alpha": _mat(report_data.alpha),
        "eps": _vec(report_data.eps),
        "volume_density": report_data.volume_density,
        "newton": [_mat(nu) for nu in report_data.newton],
        "r_conformal": bool(conformal),
    }
    if point.m == 2 * r:
        doc["majorisation_gap"] = mapenergy.majorisation_gap(point)
        probe_rho = 1.7
        doc["conformal_invariance"] = {
            "probe_rho": probe_rho,
            "residual": mapenergy.conformal_scaling_residual(point, probe_rho, r),
        }
    if args.json:
        print(dumps_report(doc))
    else:
        print(f"eps             : {doc['eps']}")
        print(f"volume density  : {doc['volume_density']}")
        print(f"r-conformal     : {doc['r_conformal']} (r={r})")
        if "majorisation_gap" in doc:
            print(f"majorisation gap: {doc['majorisation_gap']}")
            print(
                "invariance resid: "
                f"{doc['conformal_invariance']['residual']} (rho={probe_rho})"
            )
    return 0


def cmd_verify(args) -> int:
    results = verify.run_battery(seed=args.seed, trials=args.trials)
    for result in results:
        print(result.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} properties passed (seed {args.seed})")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hpharmonics",
        description="Higher-power harmonicity of invariant vector fields on "
        "3-dimensional unimodular Lie groups, plus pointwise map-energy reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify a structure-constant triple")
    p_classify.add_argument("--lambda", dest="lam", required=True, metavar="a,b,c")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    p_check = sub.add_parser("check", help="evaluate predicates of one unit field")
    p_check.add_argument("--lambda", dest="lam", required=True, metavar="a,b,c")
    p_check.add_argument("--sigma", required=True, metavar="x,y,z")
    p_check.add_argument("--r", type=int, choices=(1, 2, 3), required=True)
    p_check.add_argument("--kind", choices=_CHECK_KINDS, required=True)
    p_check.add_argument("--coupling", type=float, default=0.5)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_density = sub.add_parser("density", help="pointwise map-energy report")
    p_density.add_argument("--file", help='JSON file {"J": [[...]], "G": [[...]], "H": [[...]]}')
    p_density.add_argument("--J", metavar="a,b;c,d")
    p_density.add_argument("--G", metavar="a,b;c,d")
    p_density.add_argument("--H", metavar="a,b;c,d")
    p_density.add_argument("--r", type=int, default=1)
    p_density.add_argument("--json", action="store_true")
    p_density.set_defaults(func=cmd_density)

    p_verify = sub.add_parser("verify", help="run the seeded property battery")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
