"""JSON wire codecs for fields, polynomials, matrices, and problem instances.

Field elements travel as little-endian base-p digit vectors, polynomials as
ascending lists of those, and every composite object nests the field
description it needs to be decoded standalone.  ``canonical_dumps`` pins key
order and indentation so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import json

from .ffield import FiniteField, make_field
from .gabidulin import DecodeResult, GabCode
from .mglssr import MgLssrInstance, MgLssrSolution
from .mvinterp import MvInstance, MvSolution
from .skewmat import SkewMatrix
from .skewpoly import SkewPoly


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def field_to_json(field: FiniteField) -> dict:
    return {"p": field.p, "e": field.e, "s": field.s,
            "modulus": list(field.modulus), "frob_power": field.frob_power}


def field_from_json(obj: dict) -> FiniteField:
    return make_field(int(obj["p"]), int(obj["e"]), int(obj["s"]),
                      frob_power=int(obj.get("frob_power", 1)),
                      modulus=tuple(int(c) for c in obj["modulus"]))


def elem_to_json(field: FiniteField, a: int) -> list[int]:
    return field.digits(a)


def elem_from_json(field: FiniteField, digits) -> int:
    return field.from_digits([int(d) for d in digits])


def poly_to_json(p: SkewPoly) -> dict:
    return {"coeffs": [p.field.digits(c) for c in p.coeffs]}


def poly_from_json(field: FiniteField, obj: dict) -> SkewPoly:
    return SkewPoly(field, [elem_from_json(field, d) for d in obj["coeffs"]])


def matrix_to_json(V: SkewMatrix) -> dict:
    return {"field": field_to_json(V.field),
            "rows": [[poly_to_json(p) for p in row] for row in V.rows]}


def matrix_from_json(obj: dict, field: FiniteField | None = None) -> SkewMatrix:
    F = field if field is not None else field_from_json(obj["field"])
    return SkewMatrix(F, [[poly_from_json(F, p) for p in row]
                          for row in obj["rows"]])


def mglssr_to_json(inst: MgLssrInstance) -> dict:
    return {"field": field_to_json(inst.field),
            "s_list": [poly_to_json(s) for s in inst.s_list],
            "g_list": [poly_to_json(g) for g in inst.g_list],
            "gammas": list(inst.gammas)}


def mglssr_from_json(obj: dict) -> MgLssrInstance:
    F = field_from_json(obj["field"])
    return MgLssrInstance(F,
                          [poly_from_json(F, s) for s in obj["s_list"]],
                          [poly_from_json(F, g) for g in obj["g_list"]],
                          [int(g) for g in obj["gammas"]])


def mglssr_solution_to_json(sol: MgLssrSolution) -> dict:
    return {"lambda": poly_to_json(sol.lam),
            "omegas": [poly_to_json(w) for w in sol.omegas]}


def mglssr_solution_from_json(field: FiniteField, obj: dict) -> MgLssrSolution:
    return MgLssrSolution(poly_from_json(field, obj["lambda"]),
                          [poly_from_json(field, w) for w in obj["omegas"]])


def mv_to_json(inst: MvInstance) -> dict:
    return {"field": field_to_json(inst.field), "ell": inst.ell, "k": inst.k,
            "points": [[elem_to_json(inst.field, x),
                        [elem_to_json(inst.field, y) for y in ys]]
                       for x, ys in inst.points]}


def mv_from_json(obj: dict) -> MvInstance:
    F = field_from_json(obj["field"])
    points = [(elem_from_json(F, x), [elem_from_json(F, y) for y in ys])
              for x, ys in obj["points"]]
    return MvInstance(F, int(obj["ell"]), int(obj["k"]), points)


def mv_solution_to_json(sol: MvSolution) -> dict:
    return {"qs": [poly_to_json(q) for q in sol.qs]}


def gab_code_to_json(code: GabCode) -> dict:
    return {"field": field_to_json(code.field), "n": code.n,
            "k_list": list(code.k_list),
            "eval_points": [elem_to_json(code.field, pt)
                            for pt in code.eval_points]}


def gab_code_from_json(obj: dict) -> GabCode:
    F = field_from_json(obj["field"])
    return GabCode(F, int(obj["n"]), [int(k) for k in obj["k_list"]],
                   eval_points=[elem_from_json(F, pt)
                                for pt in obj["eval_points"]])


def words_to_json(field: FiniteField, words) -> list:
    return [[elem_to_json(field, c) for c in row] for row in words]


def words_from_json(field: FiniteField, obj) -> list[list[int]]:
    return [[elem_from_json(field, c) for c in row] for row in obj]


def gab_problem_to_json(code: GabCode, received) -> dict:
    return {"code": gab_code_to_json(code),
            "received": words_to_json(code.field, received)}


def gab_problem_from_json(obj: dict) -> tuple[GabCode, list[list[int]]]:
    code = gab_code_from_json(obj["code"])
    return code, words_from_json(code.field, obj["received"])


def decode_report_to_json(result: DecodeResult) -> dict:
    return {"success": result.success,
            "rank_used": result.rank_used,
            "reason": result.reason,
            "messages": None if result.messages is None
            else [poly_to_json(f) for f in result.messages]}
