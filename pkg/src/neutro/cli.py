"""Command-line entry point: `neutro <verb> <action> [options]`."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import algebra as A
from . import rings as R
from . import serialize as S
from .groups import analyze_group
from .magma import (
    EXHAUSTIVE_CAP, MagmaError, build_standard, cayley_csv, full_neutro_magma, neutrosophify_ambient,
    neutrosophify_tagged,
)
from .matrix import MatrixError, NeutroMatrix, one_sided_zero_divisor_search
from .poly import UNKNOWN, content, divides, parse_poly, reducibility_classify, classify_poly
from .scalars import BaseRing, base_ring_from_name
from . import semigroups as SG
from . import verification as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def max_threads() -> int:
    raw = os.environ.get("NEUTRO_MAX_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"NEUTRO_MAX_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("NEUTRO_MAX_THREADS must be at least 1")
    return n


# -- builders from arguments ------------------------------------------------------


def _magma_from_args(args):
    if args.base:
        family, param = args.base
        spec = f"{family}:{param}"
    elif args.magma:
        spec = args.magma
    else:
        raise UsageError("give --magma family:param or --base family param")
    family, _, param = spec.partition(":")
    mode = getattr(args, "neutro", "none")
    if mode == "none":
        return build_standard(spec)
    if mode == "tagged":
        return neutrosophify_tagged(build_standard(spec))
    if family not in ("add-mod", "mul-mod", "units-mod", "nonzero-mod"):
        raise UsageError(f"--neutro {mode} needs a residue family, not {family}")
    n = int(param)
    op = "add" if family == "add-mod" else "mul"
    if mode == "full":
        return full_neutro_magma(n, op)
    plain = build_standard(spec)
    return neutrosophify_ambient(BaseRing("Zn", n), op, [int(s) for s in plain.labels])


def _ring(name: str) -> BaseRing:
    try:
        return base_ring_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(payload: dict, fmt: str, csv_rows=None):
    print(S.render(payload, fmt, csv_rows))


# -- verbs -----------------------------------------------------------------------------


def cmd_ring(args):
    if args.zn is None:
        raise UsageError("ring needs --zn N")
    r = R.zn_neutro(args.zn)
    if args.action == "analyze":
        rep = R.analyze_ring(r)
        payload = S.ring_report_to_json(r, rep)
        rows = S.ideal_table(r, rep.ideals)
        _emit(payload, args.format, (rows, ["order", "kind", "mask", "elements"]))
    elif args.action == "ideals":
        rows = S.ideal_table(r, R.ideals(r))
        _emit({"ring": r.name, "enumeration_mode": "exhaustive", "ideals": rows}, args.format,
              (rows, ["order", "kind", "mask", "elements"]))
    elif args.action == "subrings":
        items = R.subring_taxonomy(r, max_order=args.max_carrier_ring)
        rows = [{"order": R.popcount(s), "kind": k, "elements": r.labels_of(s)} for s, k in items]
        _emit({"ring": r.name, "subrings": rows}, args.format, (rows, ["order", "kind", "elements"]))
    elif args.action == "quotient":
        if not args.ideal:
            raise UsageError("quotient needs --ideal 'a,b,...'")
        mask = r.subset([s.strip() for s in args.ideal.split(",")])
        q = R.quotient(r, mask)
        _emit({"ring": r.name, "ideal": r.labels_of(mask), "order": q.quotient.order, "class": q.klass,
               "ideal_kind": q.ideal_kind, "cosets": [r.labels_of(c) for c in q.cosets]}, args.format)
    return EXIT_OK


def cmd_group(args):
    m = _magma_from_args(args)
    if args.action == "table":
        if args.format == "csv":
            print(cayley_csv(m), end="")
        else:
            _emit(S.magma_to_json(m), args.format)
        return EXIT_OK
    rep = analyze_group(m, max_carrier=args.max_carrier)
    payload = {"magma": m.name, "elements": list(m.labels)}
    payload.update(rep.to_dict(m))
    rows = payload["substructures"]
    _emit(payload, args.format, (rows, ["order", "kind", "subset"]))
    return EXIT_OK


def cmd_semigroup(args):
    m = _magma_from_args(args)
    if args.action == "table":
        print(cayley_csv(m), end="") if args.format == "csv" else _emit(S.magma_to_json(m), args.format)
        return EXIT_OK
    subs, mode = SG.subsemigroups(m, max_carrier=args.max_carrier)
    recs = SG.ideals(m, side=args.side, max_carrier=max(args.max_carrier, SG.IDEAL_CAP))
    zd = SG.zero_divisors_and_units(m) if (m.zero is not None or m.identity is not None) else {}
    payload = {
        "magma": m.name,
        "order": m.order,
        "enumeration_mode": mode,
        "s_semigroup": m.is_s_semigroup,
        "idempotent_class": SG.idempotent_semigroup_classify(m),
        "subsemigroups": [{"subset": m.labels_of(s), "kind": k} for s, k in subs],
        "ideals": [
            {"subset": m.labels_of(i.subset), "side": i.sided, "neutrosophic": i.neutrosophic,
             "principal": i.principal, "maximal": i.maximal, "minimal": i.minimal}
            for i in recs
        ],
        "units": {m.labels[x]: m.labels[v["inverse"]] for x, v in zd.items() if v["inverse"] is not None},
        "zero_divisors": [m.labels[x] for x, v in zd.items() if v["right_witnesses"] or v["left_witnesses"]],
    }
    _emit(payload, args.format, (payload["subsemigroups"], ["kind", "subset"]))
    return EXIT_OK


def cmd_poly(args):
    base = _ring(args.ring)
    p = parse_poly(args.lhs, base)
    q = parse_poly(args.rhs, base) if args.rhs else None
    act = args.action
    if act in ("mul", "add", "sub", "divides") and q is None:
        raise UsageError(f"poly {act} needs --rhs")
    if act == "mul":
        res = p * q
        payload = {"result": str(res), "coefficients": [{"exp": list(e), "coef": str(c)} for e, c in res.sorted_terms()]}
    elif act == "add":
        payload = {"result": str(p + q)}
    elif act == "sub":
        payload = {"result": str(p - q)}
    elif act == "content":
        payload = {"content": str(content(p))}
    elif act == "classify":
        payload = {"class": classify_poly(p), "degree": p.degree()}
    elif act == "divides":
        res = divides(p, q)
        payload = {"divides": "UNKNOWN" if res is UNKNOWN else res is not None,
                   "quotient": None if res is None or res is UNKNOWN else str(res)}
    elif act == "reducibility":
        rep = reducibility_classify(p)
        payload = {"class": rep.klass, "complete": rep.complete, "note": rep.note,
                   "factorizations": [[str(a), str(b)] for a, b in rep.factorizations]}
    else:
        raise UsageError(f"unknown poly action {act}")
    if args.format == "csv" and act == "mul":
        _emit(payload, "csv", (payload["coefficients"], ["exp", "coef"]))
    else:
        _emit(payload, args.format)
    return EXIT_OK


def _matrix(text: str, base: BaseRing) -> NeutroMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        rows = [[c.strip() for c in r.split(",")] for r in text.split(";")]
    rows = [[str(c) for c in r] for r in rows]
    return NeutroMatrix(base, rows)


def cmd_matrix(args):
    base = _ring(args.ring)
    x = _matrix(args.lhs, base)
    act = args.action
    if act == "mul":
        if not args.rhs:
            raise UsageError("matrix mul needs --rhs")
        payload = {"result": str(x * _matrix(args.rhs, base))}
    elif act == "det":
        payload = {"determinant": str(x.determinant())}
    elif act == "inverse":
        payload = {"invertible": x.is_invertible(), "inverse": str(x.inverse()) if x.is_invertible() else None}
    elif act == "zero-divisor":
        w = one_sided_zero_divisor_search(x, side=args.side if args.side in ("left", "right") else "right",
                                          seed=args.seed)
        if w is UNKNOWN:
            payload = {"zero_divisor": "UNKNOWN"}
        elif w is None:
            payload = {"zero_divisor": False}
        else:
            payload = {"zero_divisor": True, "witness": str(w.witness), "side": w.side,
                       "one_sided": w.one_sided, "search": w.search}
    else:
        raise UsageError(f"unknown matrix action {act}")
    _emit(payload, args.format)
    return EXIT_OK


def _algebra_from_args(args) -> A.Algebra:
    base = _ring(args.coeff)
    m = _magma_from_args(args)
    scalars = A.Neutro(base) if args.scalars == "neutro" else A.Plain(base)
    return A.Algebra(scalars, m)


def cmd_algebra(args):
    A.ALGEBRA_CAP = args.max_algebra
    alg = _algebra_from_args(args)
    act = args.action
    info = {"algebra": alg.name, "kind": alg.kind, "order": alg.order if alg.order is not None else "infinite"}
    if act in ("build", "kind"):
        info["magma_elements"] = list(alg.magma.labels)
        info["containment"] = A.containment_lattice(alg)
        _emit(info, args.format)
        return EXIT_OK
    if act in ("units", "zero-divisor", "idempotent", "multiply"):
        if not args.element:
            raise UsageError(f"algebra {act} needs --element")
        x = alg.parse(args.element)
        info["element"] = str(x)
        if act == "units":
            info.update(A.unit_report(x))
        elif act == "zero-divisor":
            info.update(A.zero_divisor_report(x))
        elif act == "idempotent":
            info.update(A.idempotent_report(x))
        else:
            if not args.other:
                raise UsageError("algebra multiply needs --other")
            info["product"] = str(x * alg.parse(args.other))
        _emit(info, args.format)
        return EXIT_OK
    if act == "idempotents":
        res = A.idempotent_search(alg, cap=args.max_algebra)
        info["truncated"] = res["truncated"]
        info["idempotents"] = [str(e) for e in res["idempotents"]]
    elif act == "classify":
        if not args.subset:
            raise UsageError("algebra classify needs --subset 'x; y; ...'")
        r = alg.ring
        members = [alg.parse(t) for t in args.subset.split(";")]
        mask = r.codes(members)
        if not R.is_subring(r, mask):
            mask = R.subring_closure(r, mask)
            info["note"] = "subset was not closed; classified its generated subring"
        info["subset"] = [str(x) for x in r.sums(mask)]
        info["class"] = A.classify_algebra_subring(alg, mask)
        info["ideal"] = R.is_ideal(r, mask)
    elif act == "subrings":
        items = A.subring_taxonomy(alg)
        r = alg.ring
        info["subrings"] = [{"order": R.popcount(s), "kind": k, "elements": [str(x) for x in r.sums(s)]} for s, k in items]
    elif act == "ideals":
        tx = A.ideal_taxonomy(alg)
        r = alg.ring
        labs = lambda s: [str(x) for x in r.sums(s)]
        info["neutrosophic_ideals"] = [labs(s) for s, _ in tx["neutrosophic_ideals"]]
        info["pseudo_neutrosophic_ideals"] = [labs(s) for s, _ in tx["pseudo_neutrosophic_ideals"]]
        info["other_ideals"] = [labs(s) for s, _ in tx["other_ideals"]]
        info["loyal"] = [labs(s) for s in tx["loyal"]]
        info["bonded_pairs"] = len(tx["bonded"])
        info["strong_pseudo_pairs"] = len(tx["strong_pseudo"])
    elif act == "semiprime":
        info.update(A.prime_semiprime_semisimple(alg))
        if alg.scalars.base.is_finite and alg.scalars.base.is_field() and not alg.scalars.neutro:
            info["equivalence"] = A.semiprime_equivalence(alg)
    else:
        raise UsageError(f"unknown algebra action {act}")
    _emit(info, args.format)
    return EXIT_OK


def cmd_verify(args):
    sel = None
    if args.action != "all":
        try:
            sel = {int(t) for t in args.action.split(",")}
        except ValueError:
            raise UsageError("verify takes 'all' or a comma list of criterion numbers") from None
    outcomes = V.run(sel, seed=args.seed)
    if args.format == "json":
        payload = {"criteria": [
            {"number": o.number, "title": o.title, "pass": o.ok,
             "checks": [{"name": c.name, "pass": c.ok, "detail": c.detail} for c in o.checks]}
            for o in outcomes
        ]}
        print(S.dumps(payload))
    elif args.format == "csv":
        rows = [{"number": o.number, "title": o.title, "pass": o.ok} for o in outcomes]
        print(S.rows_to_csv(rows, ["number", "title", "pass"]), end="")
    else:
        print("\n".join(V.matrix_lines(outcomes, verbose=args.verbose)))
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_FAIL


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-carrier", type=int, default=EXHAUSTIVE_CAP)
    common.add_argument("--max-algebra", type=int, default=A.ALGEBRA_CAP)
    common.add_argument("--format", choices=S.FORMATS, default="text")

    p = argparse.ArgumentParser(prog="neutro", description="Finite neutrosophic algebra toolkit")
    sub = p.add_subparsers(dest="verb", required=True)

    def magma_args(sp):
        sp.add_argument("--magma", help="family:param, e.g. cyclic:4")
        sp.add_argument("--base", nargs=2, metavar=("FAMILY", "PARAM"))
        sp.add_argument("--neutro", choices=("none", "tagged", "ambient", "full"), default="none")

    sp = sub.add_parser("ring", parents=[common])
    sp.add_argument("action", choices=("analyze", "ideals", "subrings", "quotient"))
    sp.add_argument("--zn", type=int)
    sp.add_argument("--ideal")
    sp.add_argument("--max-carrier-ring", type=int, default=R.SUBRING_CAP)
    sp.set_defaults(fn=cmd_ring)

    sp = sub.add_parser("group", parents=[common])
    sp.add_argument("action", choices=("analyze", "table"))
    magma_args(sp)
    sp.set_defaults(fn=cmd_group)

    sp = sub.add_parser("semigroup", parents=[common])
    sp.add_argument("action", choices=("analyze", "table"))
    sp.add_argument("--side", choices=("left", "right", "two_sided"), default="two_sided")
    magma_args(sp)
    sp.set_defaults(fn=cmd_semigroup)

    sp = sub.add_parser("poly", parents=[common])
    sp.add_argument("action", choices=("mul", "add", "sub", "content", "classify", "divides", "reducibility"))
    sp.add_argument("--ring", default="Z")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs")
    sp.set_defaults(fn=cmd_poly)

    sp = sub.add_parser("matrix", parents=[common])
    sp.add_argument("action", choices=("mul", "det", "inverse", "zero-divisor"))
    sp.add_argument("--ring", default="Z2")
    sp.add_argument("--lhs", required=True, help='JSON rows, e.g. [["I",0],[1,"I"]], or "I,0;1,I"')
    sp.add_argument("--rhs")
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp.set_defaults(fn=cmd_matrix)

    sp = sub.add_parser("algebra", parents=[common])
    sp.add_argument("action", choices=("build", "kind", "units", "zero-divisor", "idempotent", "multiply",
                                       "idempotents", "classify", "subrings", "ideals", "semiprime"))
    sp.add_argument("--coeff", default="Z2")
    sp.add_argument("--scalars", choices=("plain", "neutro"), default="plain")
    sp.add_argument("--element")
    sp.add_argument("--other")
    sp.add_argument("--subset")
    magma_args(sp)
    sp.set_defaults(fn=cmd_algebra)

    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("action", nargs="?", default="all", help="'all' or e.g. 1,7,12")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        max_threads()
        return args.fn(args)
    except UsageError as exc:
        print(f"neutro: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MagmaError, MatrixError, R.RingError, A.AlgebraError, ValueError) as exc:
        print(f"neutro: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
