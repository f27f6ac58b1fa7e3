"""JSON, CSV and text renderings of the library's values and reports."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from . import rings as R
from .magma import FiniteMagma, cayley_csv
from .matrix import NeutroMatrix
from .poly import UNKNOWN, NeutroPoly
from .scalars import BaseRing, NeutroScalar, base_ring_from_name

SCHEMA_VERSION = 1
FORMATS = ("json", "text", "csv")


class FormatError(ValueError):
    pass


def _num(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


def _read_num(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def base_to_json(base: BaseRing):
    return {"Zn": base.modulus} if base.kind == "Zn" else base.kind


def scalar_to_json(s: NeutroScalar) -> dict:
    return {"a": _num(s.a), "b": _num(s.b)}


def scalar_from_json(d: dict, base: BaseRing) -> NeutroScalar:
    return NeutroScalar(base, _read_num(d["a"]), _read_num(d.get("b", 0)))


def poly_to_json(p: NeutroPoly) -> dict:
    return {
        "ring": base_to_json(p.ring),
        "vars": list(p.var_names),
        "terms": [{"exp": list(e), **scalar_to_json(c)} for e, c in p.sorted_terms()],
    }


def poly_from_json(d: dict) -> NeutroPoly:
    base = base_ring_from_name(d["ring"])
    names = d.get("vars") or ["x"]
    terms = {tuple(t["exp"]): scalar_from_json(t, base) for t in d["terms"]}
    return NeutroPoly(base, terms, nvars=len(names), var_names=names)


def matrix_to_json(x: NeutroMatrix) -> dict:
    return {"ring": base_to_json(x.ring), "rows": [[scalar_to_json(c) for c in row] for row in x.entries]}


def matrix_from_json(d: dict) -> NeutroMatrix:
    base = base_ring_from_name(d["ring"])
    return NeutroMatrix(base, [[scalar_from_json(c, base) for c in row] for row in d["rows"]])


def magma_to_json(m: FiniteMagma) -> dict:
    return {
        "name": m.name,
        "op": m.op_name,
        "labels": list(m.labels),
        "table": [list(r) for r in m.table],
        "neutro": list(m.neutro),
        "indeterminate": m.indeterminate,
    }


def magma_from_json(d: dict) -> FiniteMagma:
    return FiniteMagma(
        d["labels"], d["table"], neutro=d.get("neutro"), op_name=d.get("op", "*"),
        name=d.get("name", "magma"), indeterminate=d.get("indeterminate"),
    )


def ring_to_json(r: R.FiniteRing) -> dict:
    if isinstance(r, R.ZnNeutroRing):
        return {"parametric": r.n}
    n = r.order
    return {
        "tabular": {
            "labels": list(r.labels),
            "add": [[r.add(i, j) for j in range(n)] for i in range(n)],
            "mul": [[r.mul(i, j) for j in range(n)] for i in range(n)],
            "zero": r.zero,
            "indeterminate": r.indeterminate,
            "neutro": list(r.neutro),
        }
    }


def ring_from_json(d: dict) -> R.FiniteRing:
    if "parametric" in d:
        return R.zn_neutro(int(d["parametric"]))
    t = d["tabular"]
    return R.TabularRing(
        t["labels"], t["add"], t["mul"], zero=t.get("zero", 0), neutro=t.get("neutro"),
        indeterminate=t.get("indeterminate"),
    )


def formal_sum_to_json(x, magma_ref: str) -> dict:
    alg = x.algebra
    return {
        "scalars": {"base": base_to_json(alg.scalars.base), "neutro": alg.scalars.neutro},
        "magma_ref": magma_ref,
        "terms": [{"elem": alg.magma.labels[k], "coef": scalar_to_json(c)} for k, c in sorted(x.coeffs.items())],
    }


def formal_sum_from_json(d: dict, alg):
    base = alg.scalars.base
    return alg.element([(t["elem"], scalar_from_json(t["coef"], base)) for t in d["terms"]])


# -- reports -------------------------------------------------------------------


def ring_report_to_json(r: R.FiniteRing, rep: R.RingReport) -> dict:
    lab = r.labels_of
    rad = rep.radical
    return {
        "ring": r.name,
        "order": rep.order,
        "characteristic": rep.characteristic,
        "enumeration_mode": "exhaustive",
        "ideals": [{"elements": lab(i.subset), "kind": i.kind, "order": i.order} for i in rep.ideals],
        "quotients": [
            {"ideal": lab(s), "order": q.quotient.order, "class": q.klass, "ideal_kind": q.ideal_kind}
            for s, q in rep.quotients
        ],
        "jacobson_radical": lab(rad["jacobson"]),
        "semisimple": rad["semisimple"],
        "semiprime": rad["semiprime"],
        "prime": rad["prime"],
        "integral_domain": rad["integral_domain"],
        "division_ring": rad["division_ring"],
        "neutrosophic_field": rep.field["is_neutrosophic_field"],
        "prime_neutrosophic_field": rep.field["prime_neutrosophic_field"],
        "neutrosophic_subfields": [lab(s) for s in rep.field["neutrosophic_subfields"]],
    }


def jsonable(obj: Any):
    """Best-effort conversion of library values into JSON-ready data."""
    if obj is UNKNOWN:
        return "UNKNOWN"
    if isinstance(obj, NeutroScalar):
        return str(obj)
    if isinstance(obj, (NeutroPoly, NeutroMatrix)):
        return str(obj)
    if isinstance(obj, Fraction):
        return _num(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if hasattr(obj, "algebra") and hasattr(obj, "coeffs"):
        return str(obj)
    if isinstance(obj, float) and obj == float("inf"):
        return "infinite"
    return obj


def dumps(payload: dict) -> str:
    body = {"schema_version": SCHEMA_VERSION}
    body.update(jsonable(payload))
    return json.dumps(body, indent=2, ensure_ascii=False)


def to_text(payload: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k, v in payload.items():
        v = jsonable(v)
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(to_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(pad + "  - " + ", ".join(f"{a}={_flat(b)}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {_flat(v)}")
    return "\n".join(x for x in lines if x)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def rows_to_csv(rows: list, header: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_flat(jsonable(row.get(h))) for h in header])
    return buf.getvalue()


def ideal_table(r: R.FiniteRing, records) -> list:
    """Ideal rows sorted by order, then bitmask."""
    recs = sorted(records, key=lambda i: (i.order, i.subset))
    return [{"order": i.order, "kind": i.kind, "mask": i.subset, "elements": r.labels_of(i.subset)} for i in recs]


def render(payload: dict, fmt: str, csv_rows: tuple = None) -> str:
    """csv_rows: optional (rows, header) to use for CSV output."""
    if fmt == "json":
        return dumps(payload)
    if fmt == "text":
        return to_text(payload)
    if fmt == "csv":
        if csv_rows is None:
            flat = [{"key": k, "value": v} for k, v in payload.items()]
            return rows_to_csv(flat, ["key", "value"])
        rows, header = csv_rows
        return rows_to_csv(rows, header)
    raise FormatError(f"unknown format {fmt!r}")


__all__ = [
    "SCHEMA_VERSION", "FORMATS", "FormatError", "cayley_csv", "dumps", "render", "jsonable",
    "scalar_to_json", "scalar_from_json", "poly_to_json", "poly_from_json", "matrix_to_json",
    "matrix_from_json", "magma_to_json", "magma_from_json", "ring_to_json", "ring_from_json",
    "formal_sum_to_json", "formal_sum_from_json", "ring_report_to_json", "ideal_table", "to_text",
]
