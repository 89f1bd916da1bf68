"""Command-line front end: report, verify, construct, enumerate.

Exit codes: 0 success, 1 I/O or parse errors, 2 inadmissible parameter
array, 3 verification failure.  All JSON output has sorted keys and fixed
array ordering, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bases import (
    BasisId,
    basis_matrix,
    eta_vectors,
    represent,
    represent_formula,
    transition_formula,
    transition_numeric,
)
from .fields import Field, _inv_mod, _is_prime
from .linalg import Matrix, eigen_data
from .params import ParameterArray, admissible, construct, derived_params
from .tdsystem import VerificationReport, find_td_orderings, verify_td_system

EXIT_OK = 0
EXIT_IO = 1
EXIT_INADMISSIBLE = 2
EXIT_UNVERIFIED = 3

DEFAULT_MAX_PRIME = 7


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail_io(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_IO


def cmd_report(args) -> int:
    try:
        pa = ParameterArray.from_json(_load_json(args.parameter_array))
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_io(str(exc))

    report = admissible(pa)
    doc: dict = {
        "parameter_array": pa.to_json(),
        "admissibility": report.to_json(),
    }
    try:
        doc["derived_params"] = derived_params(pa).to_json()
    except ValueError:
        doc["derived_params"] = None

    if not report.ok:
        _emit(doc, args.out)
        return EXIT_INADMISSIBLE

    tds = construct(pa)
    eta = eta_vectors(tds)
    verification = verify_td_system(tds.A, tds.Astar, tds.theta, tds.thetastar)
    doc["verification"] = verification.to_json()

    cross = True
    bases_doc = {}
    reps_doc: dict = {"A": {}, "Astar": {}}
    trans_doc = []
    for basis in BasisId:
        bases_doc[basis.value] = basis_matrix(tds, basis, eta).to_json()
        for which in ("A", "Astar"):
            numeric = represent(tds, which, basis, eta)
            if numeric != represent_formula(pa, which, basis):
                cross = False
            reps_doc[which][basis.value] = numeric.to_json()
    for frm in BasisId:
        for to in BasisId:
            if frm is to:
                continue
            numeric = transition_numeric(tds, frm, to, eta)
            if numeric != transition_formula(pa, frm, to):
                cross = False
            trans_doc.append({"from": frm.value, "to": to.value,
                              "matrix": numeric.to_json()})
    doc["cross_check"] = cross
    if args.full:
        doc["bases"] = bases_doc
        doc["representations"] = reps_doc
        doc["transitions"] = trans_doc

    _emit(doc, args.out)
    return EXIT_OK if cross and verification.overall else EXIT_UNVERIFIED


def cmd_verify(args) -> int:
    try:
        data = _load_json(args.system)
        field = Field.from_json(data["field"])
        a = Matrix.from_json(field, data["A"])
        astar = Matrix.from_json(field, data["Astar"])
        theta = [field.parse(s) for s in data["theta"]] if "theta" in data else None
        thetastar = [field.parse(s) for s in data["thetastar"]] if "thetastar" in data else None
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_io(str(exc))

    doc: dict = {}
    if theta is not None and thetastar is not None:
        report = verify_td_system(a, astar, theta, thetastar)
    else:
        try:
            orderings = find_td_orderings(a, astar)
        except ValueError as exc:
            doc["orderings_found"] = 0
            doc["reason"] = str(exc)
            doc["verification"] = _unverifiable_report().to_json()
            _emit(doc, None)
            return EXIT_UNVERIFIED
        doc["orderings_found"] = len(orderings)
        if orderings:
            theta, thetastar = orderings[0]
        else:
            eda, eds = eigen_data(a), eigen_data(astar)
            theta, thetastar = eda.eigenvalues, eds.eigenvalues
        doc["theta"] = [str(x) for x in theta]
        doc["thetastar"] = [str(x) for x in thetastar]
        report = verify_td_system(a, astar, theta, thetastar)
    doc["verification"] = report.to_json()
    _emit(doc, None)
    ok = report.overall and report.shape == (1, 2, 1)
    return EXIT_OK if ok else EXIT_UNVERIFIED


def _unverifiable_report() -> VerificationReport:
    return VerificationReport(
        False, False, False, False, False, None, None,
        ("tridiagonal_AstarE", "tridiagonal_AEstar", "irreducible"),
    )


def cmd_construct(args) -> int:
    try:
        pa = ParameterArray.from_json(_load_json(args.parameter_array))
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail_io(str(exc))
    report = admissible(pa)
    if not report.ok:
        print(f"inadmissible parameter array, failed {list(report.failed)}",
              file=sys.stderr)
        return EXIT_INADMISSIBLE
    tds = construct(pa)
    _emit(tds.to_json(), args.out)
    return EXIT_OK


def _enumerate_counts(p: int, want_orbits: bool):
    """Counts over GF(p) of arrays passing (i), (i)+(ii), all three; with
    orbit statistics of the admissible set under the dihedral action."""
    triples = [
        (a, b, c)
        for a in range(p) for b in range(p) for c in range(p)
        if a != b and a != c and b != c
    ]
    n_triples = len(triples)
    count_i = n_triples * n_triples * p * p
    count_i_ii = n_triples * n_triples * (p - 1) * (p - 1)
    admissible_count = 0
    orbit_count = 0
    orbit_sizes: dict[int, int] = {}
    nonzero = range(1, p)
    for t in triples:
        t0, t1, t2 = t
        for s in triples:
            s0, s1, s2 = s
            den_inv = _inv_mod((t0 - t2) * (s0 - s2) % p, p)
            e1 = (t0 - t1) * (s0 - s1) % p
            e2 = (t1 - t2) * (s1 - s2) % p
            for f in nonzero:
                for g in nonzero:
                    d = (g - f) * den_inv % p
                    if (d - e1) * (d - e2) % p == f:
                        continue
                    admissible_count += 1
                    if want_orbits:
                        arr = (t0, t1, t2, s0, s1, s2, f, g)
                        orbit = _d4_orbit(arr)
                        if arr == min(orbit):
                            orbit_count += 1
                            size = len(orbit)
                            orbit_sizes[size] = orbit_sizes.get(size, 0) + 1
    result = {
        "p": p,
        "pass_i": count_i,
        "pass_i_ii": count_i_ii,
        "admissible": admissible_count,
    }
    if want_orbits:
        result["orbits"] = {
            "count": orbit_count,
            "sizes": {str(k): v for k, v in sorted(orbit_sizes.items())},
        }
    return result


def _d4_orbit(arr):
    seen = {arr}
    frontier = [arr]
    while frontier:
        t0, t1, t2, s0, s1, s2, f, g = frontier.pop()
        for nxt in (
            (s0, s1, s2, t0, t1, t2, f, g),
            (t0, t1, t2, s2, s1, s0, g, f),
            (t2, t1, t0, s0, s1, s2, g, f),
        ):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def cmd_enumerate(args) -> int:
    p = args.p
    if not _is_prime(p):
        return _fail_io(f"{p} is not prime")
    max_p = DEFAULT_MAX_PRIME
    env = os.environ.get("TDP_MAX_GRID")
    if env is not None:
        try:
            max_p = int(env)
        except ValueError:
            return _fail_io(f"TDP_MAX_GRID must be an integer, got {env!r}")
    if p > max_p and not args.force:
        return _fail_io(
            f"grid of size {p}^8 exceeds the guard (p <= {max_p}); "
            "pass --force or raise TDP_MAX_GRID")
    _emit(_enumerate_counts(p, args.orbits), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdpair121",
        description="Exact construction, verification and analysis of "
                    "tridiagonal pairs of shape (1,2,1).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser(
        "report", help="full report for a parameter array file")
    p_report.add_argument("parameter_array", help="parameter array JSON file")
    p_report.add_argument("--full", action="store_true",
                          help="embed all basis/representation/transition matrices")
    p_report.add_argument("--out", help="write the report here instead of stdout")
    p_report.set_defaults(func=cmd_report)

    p_verify = sub.add_parser(
        "verify", help="verify the axioms for a matrix pair file")
    p_verify.add_argument("system", help="system JSON file with A, Astar, field")
    p_verify.set_defaults(func=cmd_verify)

    p_construct = sub.add_parser(
        "construct", help="build the canonical system for a parameter array")
    p_construct.add_argument("parameter_array", help="parameter array JSON file")
    p_construct.add_argument("--out", help="write the system here instead of stdout")
    p_construct.set_defaults(func=cmd_construct)

    p_enum = sub.add_parser(
        "enumerate", help="count admissible parameter arrays over GF(p)")
    p_enum.add_argument("--p", type=int, required=True, help="prime field size")
    p_enum.add_argument("--orbits", action="store_true",
                        help="also count dihedral orbits of the admissible set")
    p_enum.add_argument("--force", action="store_true",
                        help="ignore the grid-size guard")
    p_enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
