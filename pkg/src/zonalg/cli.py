"""Command-line driver: verification suites, eta tables, decompositions and
statistics, with JSON/CSV output on stdout and logs on stderr.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import arrangement as arrg
from . import gfseries, hopfgp, permstat, polyclass, spectra, titsalgebra

BOUNDS = {
    ("eta", "A"): 5,
    ("eta", "B"): 4,
    ("eta", "C"): 5,
    ("ranks", "A"): 4,
    ("ranks", "C"): 4,
}


def _arr_of(type_name, d):
    t = type_name.upper()
    if t in ("A", "BRAID"):
        return arrg.braid(d)
    if t in ("B", "TYPEB"):
        return arrg.type_b(d)
    if t in ("C", "CUBE", "COORDINATE"):
        return arrg.coordinate(d)
    raise ValueError(f"unknown arrangement type {type_name!r}")


def _log(msg):
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# verification suites (each returns a JSON-able report with an "ok" flag)

def verify_brenti(type_name="A", dmax=None):
    results = []
    if type_name.upper() in ("A", "ALL"):
        top = dmax or 5
        for d in range(2, top + 1):
            ok = polyclass.permutahedron(d).h_polynomial() == gfseries.eulerian_A(d)
            results.append({"case": f"A d={d}", "ok": ok})
    if type_name.upper() in ("B", "ALL"):
        top = dmax or 4
        for d in range(2, top + 1):
            ok = polyclass.typeB_permutahedron(d).h_polynomial() == gfseries.eulerian_B(d)
            results.append({"case": f"B d={d}", "ok": ok})
    return {"suite": "brenti", "results": results, "ok": all(r["ok"] for r in results)}


def verify_thm_a(dmax=5, rank_dmax=4):
    results = []
    for d in range(2, dmax + 1):
        arr = arrg.braid(d)
        em = spectra.eta_mobius(arr)
        ep = spectra.eta_permutations(arr)
        ok = em.same_values(ep)
        entry = {"d": d, "mobius_vs_permutations": ok}
        if d <= rank_dmax:
            er = spectra.eta_idempotent_rank(d)
            entry["idempotent_rank_agrees"] = er.same_values(em)
            ok = ok and entry["idempotent_rank_agrees"]
        entry["flats"] = len(arrg.flats(arr))
        entry["ok"] = ok
        results.append(entry)
    return {"suite": "thm-a", "results": results, "ok": all(r["ok"] for r in results)}


def verify_thm_b(dmax=4):
    results = []
    for d in range(2, dmax + 1):
        arr = arrg.type_b(d)
        em = spectra.eta_mobius(arr)
        ep = spectra.eta_permutations(arr)
        ok = em.same_values(ep)
        bottom = em.value(arrg.bottom_flat(arr), 1)
        entry = {
            "d": d,
            "mobius_vs_permutations": ok,
            "eta_bottom_grade1": bottom,
            "lower_bound_2^(d-1)": bottom == 2 ** (d - 1),
        }
        entry["ok"] = ok and entry["lower_bound_2^(d-1)"]
        results.append(entry)
    return {"suite": "thm-b", "results": results, "ok": all(r["ok"] for r in results)}


def verify_cube(dmax=5, rank_dmax=4):
    results = []
    for d in range(1, dmax + 1):
        arr = arrg.coordinate(d)
        em = spectra.eta_mobius(arr)
        ok = True
        for x in arrg.flats(arr):
            for r in range(0, d + 1):
                want = 1 if r == len(x.data) else 0
                if em.value(x, r) != want:
                    ok = False
        entry = {"d": d, "mobius_indicator": ok}
        if d <= rank_dmax:
            er = spectra.eta_gamma_rank(d)
            entry["gamma_rank_agrees"] = er.same_values(em)
            ok = ok and entry["gamma_rank_agrees"]
        entry["ok"] = ok
        results.append(entry)
    return {"suite": "cube", "results": results, "ok": all(r["ok"] for r in results)}


def verify_gf(order_a=None, order_b=None):
    report = gfseries.verify_identities(order_a, order_b)
    return {"suite": "gf", "results": report, "ok": all(r["ok"] for r in report)}


def verify_idempotents(dmax=4):
    results = []
    for d in range(2, dmax + 1):
        entry = {"d": d, "adams": True, "gamma": True}
        fam = titsalgebra.adams_family(d)
        try:
            fam.check()
        except AssertionError:
            entry["adams"] = False
        for t in (2, 3, 5, -1):
            alpha = titsalgebra.adams_element(d, t)
            if not (
                titsalgebra.is_characteristic(alpha, t)
                and titsalgebra.family_reconstructs(alpha, fam, t)
            ):
                entry["adams"] = False
        gamma, gfam = titsalgebra.gamma_family(d, 2)
        try:
            gfam.check()
        except AssertionError:
            entry["gamma"] = False
        for t in (2, 3, 5, -1):
            gt = titsalgebra.gamma_element(d, t)
            if not (
                titsalgebra.is_characteristic(gt, t)
                and titsalgebra.family_reconstructs(gt, gfam, t)
            ):
                entry["gamma"] = False
        entry["ok"] = entry["adams"] and entry["gamma"]
        results.append(entry)
    return {"suite": "idempotents", "results": results, "ok": all(r["ok"] for r in results)}


def verify_conjecture(dmax=4):
    results = []
    for d in range(2, dmax + 1):
        rep = spectra.conjecture_check(d)
        results.append(
            {
                "d": d,
                "independent": rep["all_independent"],
                "extremal_products_fixed": rep["extremal_products_fixed"],
                "ok": rep["all_independent"] and rep["extremal_products_fixed"],
            }
        )
    return {"suite": "conjecture", "results": results, "ok": all(r["ok"] for r in results)}


def verify_b_gens(dmax=4, trials=10, seed=0):
    rng = random.Random(seed)
    results = []
    for d in range(2, dmax + 1):
        fam = spectra.b_generators(d)
        non_pts = fam.non_point_members()
        entry = {
            "d": d,
            "non_point_count": len(non_pts),
            "count_matches": len(non_pts) == 3 ** d - d - 1,
            "full_dimensional": len(fam.full_dimensional()) == 2 ** (d - 1),
        }
        _, gens, polys, face_order, cols = spectra._b_system(d)
        from . import linalg

        entry["full_column_rank"] = (
            linalg.rank([[col[i] for col in cols] for i in range(len(face_order))])
            == len(gens)
        )
        pb = polyclass.typeB_permutahedron(d)
        co = spectra.b_decompose(pb)
        entry["permutahedron_reconstructs"] = spectra.reconstruction_holds(pb, co, polys)
        share = max(1, -(-trials // (dmax - 1)))  # ceil: at least `trials` total
        random_ok = True
        for _ in range(share):
            p, used = spectra.random_b_deformation(d, rng)
            co = spectra.b_decompose(p)
            if not all(co.get(g, 0) == used.get(g, 0) for g in gens):
                random_ok = False
            if not spectra.reconstruction_holds(p, co, polys):
                random_ok = False
        entry["random_reconstruct"] = random_ok
        entry["ok"] = all(
            entry[k]
            for k in (
                "count_matches",
                "full_dimensional",
                "full_column_rank",
                "permutahedron_reconstructs",
                "random_reconstruct",
            )
        )
        results.append(entry)
    return {"suite": "b-gens", "results": results, "ok": all(r["ok"] for r in results)}


def verify_hopf(nmax=3, seed=0):
    results = []
    for n in range(2, nmax + 1):
        axioms = hopfgp.hopf_axiom_check(n, seed=seed)
        coideal = hopfgp.mc_coideal_check(n, seed=seed)
        two_one = hopfgp.two_one_monoid_check(n, seed=seed)
        results.append(
            {
                "n": n,
                "axioms": axioms["ok"],
                "coideal": coideal["ok"],
                "two_one": two_one["ok"],
                "ok": axioms["ok"] and coideal["ok"] and two_one["ok"],
            }
        )
    if nmax >= 4:
        two_one = hopfgp.two_one_monoid_check(4, seed=seed)
        results.append({"n": 4, "two_one": two_one["ok"], "ok": two_one["ok"]})
    return {"suite": "hopf", "results": results, "ok": all(r["ok"] for r in results)}


def verify_all(quick=True, seed=0):
    """Aggregate of all suites at CI bounds."""
    if quick:
        suites = [
            verify_brenti("A", 4),
            verify_brenti("B", 3),
            verify_thm_a(4, 3),
            verify_thm_b(3),
            verify_cube(4, 3),
            verify_gf(6, 4),
            verify_idempotents(3),
            verify_conjecture(3),
            verify_b_gens(3, 6, seed),
            verify_hopf(3, seed),
        ]
    else:
        suites = [
            verify_brenti("A", 5),
            verify_brenti("B", 4),
            verify_thm_a(5, 4),
            verify_thm_b(4),
            verify_cube(5, 4),
            verify_gf(),
            verify_idempotents(4),
            verify_conjecture(4),
            verify_b_gens(4, 10, seed),
            verify_hopf(3, seed),
        ]
    return {"suite": "all", "results": suites, "ok": all(s["ok"] for s in suites)}


_VERIFY = {
    "thm-a": lambda args: verify_thm_a(args.d or 5, min(args.d or 4, 4)),
    "thm-b": lambda args: verify_thm_b(args.d or 4),
    "brenti": lambda args: verify_brenti(args.type or "all", args.d),
    "gf": lambda args: verify_gf(args.order, args.order_b),
    "idempotents": lambda args: verify_idempotents(args.d or 4),
    "conjecture": lambda args: verify_conjecture(args.d or 4),
    "b-gens": lambda args: verify_b_gens(args.d or 4, args.trials, args.seed),
    "hopf": lambda args: verify_hopf(args.d or 3, args.seed),
    "cube": lambda args: verify_cube(args.d or 5, min(args.d or 4, 4)),
    "all": lambda args: verify_all(args.quick, args.seed),
}


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_eta(args):
    arr = _arr_of(args.type, args.d)
    bound = BOUNDS[("eta", arr.kind)]
    if args.d > bound:
        raise ValueError(f"d={args.d} exceeds the bound {bound} for eta tables")
    tables = [spectra.eta_mobius(arr)]
    if arr.kind in (arrg.KIND_A, arrg.KIND_B):
        tables.append(spectra.eta_permutations(arr))
    if arr.kind == arrg.KIND_A and args.d <= BOUNDS[("ranks", "A")]:
        tables.append(spectra.eta_idempotent_rank(args.d))
    if arr.kind == arrg.KIND_C and args.d <= BOUNDS[("ranks", "C")]:
        tables.append(spectra.eta_gamma_rank(args.d))
    agree = all(t.same_values(tables[0]) for t in tables[1:])
    rows = []
    flat_filter = arrg.parse_flat(arr, args.flat) if args.flat else None
    for (x, r), v in tables[0].entries:
        if flat_filter is not None and x != flat_filter:
            continue
        rows.append({"flat": arrg.flat_str(x), "r": r, "value": v})
    payload = {
        "arrangement": arr.kind,
        "d": args.d,
        "methods": [t.method for t in tables],
        "methods_agree": agree,
        "rows": rows,
    }
    _emit(payload, args.format, csv_rows=rows)
    return 0 if agree else 1


def _cmd_verify(args):
    runner = _VERIFY[args.suite]
    t0 = time.time()
    report = runner(args)
    _emit(report, args.format)
    _log(
        f"verify {args.suite}: {'pass' if report['ok'] else 'FAIL'} "
        f"({time.time() - t0:.2f}s)"
    )
    return 0 if report["ok"] else 1


def _cmd_decompose(args):
    with open(args.input) as fh:
        data = json.load(fh)
    p = polyclass.polytope_from_json(data)
    if args.type.upper() == "A":
        if p.arr.kind != arrg.KIND_A:
            raise ValueError("type A decomposition needs a braid-arrangement polytope")
        coeffs = spectra.a_decompose(p)
        gens, polys, _, _ = spectra._a_system(p.arr.d)
        rows = {
            "Delta{" + ",".join(str(i) for i in sorted(s)) + "}": str(c)
            for s, c in coeffs.items()
            if c
        }
        ok = spectra.reconstruction_holds(p, coeffs, polys)
    else:
        if p.arr.kind != arrg.KIND_B:
            raise ValueError("type B decomposition needs a type-B polytope")
        coeffs = spectra.b_decompose(p)
        fam, gens, polys, _, _ = spectra._b_system(p.arr.d)
        rows = {fam.label(g): str(c) for g, c in coeffs.items() if c}
        ok = spectra.reconstruction_holds(p, coeffs, polys)
    payload = {"type": args.type.upper(), "d": p.arr.d, "coefficients": rows, "reconstructs": ok}
    _emit(payload, args.format)
    return 0 if ok else 1


def _cmd_stats(args):
    d = args.d
    if args.group.upper() == "S":
        elems = permstat.symmetric_group(d)
        rows = [
            {
                "cycles": str(s),
                "exc": s.exc(),
                "des": s.des(),
                "supp": arrg.flat_str(s.supp()),
            }
            for s in elems
        ]
    else:
        elems = permstat.hyperoctahedral_group(d)
        rows = [
            {
                "cycles": str(s),
                "exc": s.exc(),
                "fneg": s.fneg(),
                "fexc": s.fexc(),
                "exc_B": s.exc_b(),
                "des": s.des(),
                "supp": arrg.flat_str(s.supp()),
            }
            for s in elems
        ]
    if args.flat:
        arr = arrg.braid(d) if args.group.upper() == "S" else arrg.type_b(d)
        want = arrg.flat_str(arrg.parse_flat(arr, args.flat))
        rows = [r for r in rows if r["supp"] == want]
    key = "exc" if args.group.upper() == "S" else "exc_B"
    hist = {}
    for r in rows:
        hist[r[key]] = hist.get(r[key], 0) + 1
    payload = {
        "group": args.group.upper(),
        "d": d,
        "count": len(rows),
        f"{key}_histogram": {str(k): v for k, v in sorted(hist.items())},
        "rows": rows if args.list else [],
    }
    _emit(payload, args.format, csv_rows=rows if args.list else None)
    return 0


def _emit(payload, fmt, csv_rows=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv" and csv_rows is not None:
        if csv_rows:
            cols = list(csv_rows[0])
            print(",".join(cols))
            for row in csv_rows:
                print(",".join(f"\"{row[c]}\"" for c in cols))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def build_parser():
    ap = argparse.ArgumentParser(
        prog="zonalg",
        description="Exact verification suites for the polytope algebra of "
        "Coxeter zonotope deformations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    eta = sub.add_parser("eta", help="multiplicity tables by all applicable methods")
    eta.add_argument("--type", required=True, help="A | B | cube")
    eta.add_argument("--d", type=int, required=True)
    eta.add_argument("--flat", help="restrict to one flat (serialized form)")
    eta.add_argument("--format", default="json", choices=("json", "csv", "text"))

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(_VERIFY))
    ver.add_argument("--d", type=int, help="largest size to check")
    ver.add_argument("--type", help="A | B | all (brenti)")
    ver.add_argument("--order", type=int, help="series truncation order (type A)")
    ver.add_argument("--order-b", dest="order_b", type=int, help="series order (type B)")
    ver.add_argument("--trials", type=int, default=10)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--quick", action="store_true", help="CI bounds for 'all'")
    ver.add_argument("--format", default="json", choices=("json", "csv", "text"))

    dec = sub.add_parser("decompose", help="signed-Minkowski decomposition")
    dec.add_argument("--type", required=True, choices=("A", "B", "a", "b"))
    dec.add_argument("--input", required=True, help="polytope JSON file")
    dec.add_argument("--format", default="json", choices=("json", "csv", "text"))

    st = sub.add_parser("stats", help="permutation statistics")
    st.add_argument("--group", required=True, choices=("S", "B", "s", "b"))
    st.add_argument("--d", type=int, required=True)
    st.add_argument("--flat", help="filter by support flat")
    st.add_argument("--list", action="store_true", help="include per-element rows")
    st.add_argument("--format", default="json", choices=("json", "csv", "text"))

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "eta":
            return _cmd_eta(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "decompose":
            return _cmd_decompose(args)
        if args.command == "stats":
            return _cmd_stats(args)
    except (ValueError, OSError, KeyError, permstat.BoundExceededError) as exc:
        _log(f"error: {exc}")
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
