"""Command line front end emitting deterministic JSON reports.

Verdicts are data, not exit codes: the process exits 0 whenever a
report was produced, 2 on invalid input, and 3 on an internal
consistency failure. Reports are canonical (sorted keys, no floats) so
repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .rees import (
    bounded_normality_scan,
    check_R_fast,
    gap_probe,
    lambda_spec,
    rees_semigroup,
)
from .semigroup import new_semigroup
from .serre import HOLDS, check_R

REPORT_VERSION = 1


def _as_int(value):
    if isinstance(value, bool):
        raise ValueError("booleans are not integers here")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value, 10)
    raise ValueError(f"expected an integer (or an integer string), got {value!r}")


def _parse_semigroup_input(payload):
    if not isinstance(payload, dict):
        raise ValueError("input must be a JSON object")
    if "generators" not in payload or "ambient_dim" not in payload:
        raise ValueError('input needs "ambient_dim" and "generators"')
    n = _as_int(payload["ambient_dim"])
    gens = tuple(tuple(_as_int(e) for e in row) for row in payload["generators"])
    if any(len(row) != n for row in gens):
        raise ValueError("generator rows must match ambient_dim")
    return n, gens


def _parse_int_list(text):
    return tuple(int(part, 10) for part in text.split(","))


def _load_input(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _base_report(command, parameters):
    return {
        "report_version": REPORT_VERSION,
        "tool_version": __version__,
        "command": command,
        "parameters": parameters,
    }


def _facets_payload(cone):
    return [list(f.coeffs) for f in cone.facets]


def _incidence_payload(cone):
    return [sorted(inc) for inc in cone.incidence]


def _lattice_payload(basis):
    if basis is None:
        return None
    return [list(row) for row in basis.hnf_rows]


def _serre_payload(report):
    faces = []
    for v in report.verdicts:
        faces.append(
            {
                "facets": sorted(v.face.facet_set),
                "generators": sorted(v.face.generator_set),
                "codim": v.k,
                "facet_count_ok": v.facet_count_ok,
                "group_ok": v.group_ok,
                "status": v.status,
                "reason": v.reason,
                "witnesses": None
                if v.gammas is None
                else [list(g) for g in v.gammas],
                "face_group_hnf": _lattice_payload(v.face_lattice),
                "required_group_hnf": _lattice_payload(v.required_lattice),
            }
        )
    return {"faces": faces, "overall": report.overall}


def _rees_payload(check):
    subsets = []
    for sc in check.subsets:
        subsets.append(
            {
                "picked_axes": list(sc.picked),
                "complement_axes": list(sc.complement),
                "semigroup_gens": list(sc.sgp_gens),
                "targets": list(sc.targets),
                "member": list(sc.member),
                "combinations": [
                    None if combo is None else [[g, m] for g, m in combo]
                    for combo in sc.combos
                ],
                "ok": sc.ok,
            }
        )
    return {"verdict": HOLDS if check.holds else "fails", "subsets": subsets}


def cmd_facets(args):
    payload = _load_input(args.input)
    n, gens = _parse_semigroup_input(payload)
    s = new_semigroup(gens)
    report = _base_report("facets", {})
    report["input"] = {"ambient_dim": n, "generators": [list(g) for g in gens]}
    report["facets"] = _facets_payload(s.cone)
    report["incidence"] = _incidence_payload(s.cone)
    report["pointed"] = s.pointed
    return report


def cmd_serre(args):
    payload = _load_input(args.input)
    n, gens = _parse_semigroup_input(payload)
    s = new_semigroup(gens)
    result = check_R(s, args.l, args.bound)
    report = _base_report("serre", {"l": args.l, "bound": args.bound})
    report["input"] = {"ambient_dim": n, "generators": [list(g) for g in gens]}
    report["facets"] = _facets_payload(s.cone)
    report.update(_serre_payload(result))
    return report


def cmd_rees(args):
    spec = lambda_spec(_parse_int_list(args.lam))
    fast = check_R_fast(spec, args.r)
    report = _base_report(
        "rees", {"r": args.r, "bound": args.bound, "general": bool(args.general)}
    )
    report["input"] = {"lambda": list(spec.lam)}
    report["L"] = spec.L
    report["omega"] = list(spec.omega)
    report["d"] = spec.d
    report.update(_rees_payload(fast))
    if args.general:
        s = rees_semigroup(spec)
        general = check_R(s, args.r, args.bound)
        report["general"] = _serre_payload(general)
        report["general"]["facets"] = _facets_payload(s.cone)
        agree = fast.holds == (general.overall == HOLDS)
        report["agreement"] = agree
    return report


def cmd_normality(args):
    if (args.input is None) == (args.lam is None):
        raise ValueError("give exactly one of --input or --lambda")
    if args.input is not None:
        payload = _load_input(args.input)
        n, gens = _parse_semigroup_input(payload)
        s = new_semigroup(gens)
        echo = {"ambient_dim": n, "generators": [list(g) for g in gens]}
    else:
        spec = lambda_spec(_parse_int_list(args.lam))
        s = rees_semigroup(spec)
        echo = {"lambda": list(spec.lam)}
    report = _base_report(
        "normality",
        {"budget": args.budget, "probe": None if args.probe is None else args.probe},
    )
    report["input"] = echo
    if args.probe is not None:
        probe = gap_probe(s, _parse_int_list(args.probe))
        report["probe"] = {
            "vector": list(probe.vector),
            "in_cone": probe.in_cone,
            "in_semigroup": probe.in_semigroup,
            "is_gap": probe.is_gap,
        }
    else:
        if args.budget is None:
            raise ValueError("a gap scan needs --budget")
        gaps = bounded_normality_scan(s, args.budget)
        report["gaps"] = [list(g) for g in gaps]
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="serrecheck",
        description="Exact regularity-in-codimension checks for affine semigroup rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("facets", help="facet description of the positive cone")
    p.add_argument("--input", required=True, help="JSON semigroup input file")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_facets)

    p = sub.add_parser("serre", help="regularity in codimension l")
    p.add_argument("--input", required=True)
    p.add_argument("--l", type=int, required=True, dest="l")
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_serre)

    p = sub.add_parser("rees", help="Rees algebra check from an exponent tuple")
    p.add_argument("--lambda", required=True, dest="lam", help="comma separated exponents")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--general", action="store_true", help="also run the generic checker")
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_rees)

    p = sub.add_parser("normality", help="scan for cone points missing from S")
    p.add_argument("--input", default=None)
    p.add_argument("--lambda", default=None, dest="lam")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--probe", default=None, help="comma separated lattice point")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_normality)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.handler(args)
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
