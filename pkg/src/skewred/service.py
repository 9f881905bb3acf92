"""Shared application layer behind the CLI and the HTTP API.

Functions here speak wire JSON (plain dicts) on both sides: parse with
serialize, run the core engines, and package results plus a verification
flag the callers turn into exit codes or HTTP payloads.  Keeping this
separate means the CLI stays a thin client and the API handlers stay thin
adapters, with one implementation of each operation between them.
"""

from __future__ import annotations

import random
import time

from . import randgen, serialize
from .errors import InstanceError, SkewredError
from .ffield import make_field
from .gabidulin import GabCode, add_rank_error, decode, encode
from .mglssr import (MgLssrInstance, demand_driven_solve, intermediate_solve,
                     is_solution, solve)
from .mvinterp import interpolation_step, verify as mv_verify, weight_vector
from .rowreduce import mulders_storjohann, reduce_shifted
from .skewmat import mat_degree, shifted_degree, vec_degree
from .skewpoly import MINUS_INFINITY, SkewPoly


def _parse(decoder, payload):
    """Decode wire JSON, turning shape problems into domain errors."""
    try:
        return decoder(payload)
    except SkewredError:
        raise
    except (KeyError, IndexError, TypeError, AttributeError) as exc:
        raise InstanceError(f"malformed payload: {exc!r}") from exc


def _trace_json(traces) -> dict:
    if not isinstance(traces, list):
        traces = [traces]
    return {"lp_transforms": sum(t.lp_transforms for t in traces),
            "field_ops": sum(t.field_ops for t in traces)}


def default_field_params(params: dict) -> dict:
    out = {"p": 2, "e": 1, "s": 4, "frob_power": 1}
    out.update({k: v for k, v in params.items() if v is not None})
    return out


def gen_instance(kind: str, params: dict, seed: int) -> dict:
    """Deterministic instance JSON for a seed; kinds: mglssr, mv, gab."""
    rng = random.Random(seed)
    fp = default_field_params(params.get("field", {}))
    field = make_field(fp["p"], fp["e"], fp["s"], frob_power=fp["frob_power"])
    if kind == "mglssr":
        inst = randgen.random_mglssr(
            field, rng, params.get("ell", 2),
            max_g_deg=params.get("max_g_deg", 8),
            max_gamma=params.get("max_gamma", 4),
            binomial=params.get("binomial", False))
        return serialize.mglssr_to_json(inst)
    if kind == "mv":
        inst = randgen.random_mv(field, rng, params.get("ell", 2),
                                 params.get("k", 2), params.get("n", 7))
        return serialize.mv_to_json(inst)
    if kind == "gab":
        n = params.get("n", field.s)
        k_list = params.get("k_list") or [2]
        if params.get("subfield_points"):
            code = GabCode.subfield_points(field, n, k_list)
        else:
            code = GabCode(field, n, k_list)
        messages = randgen.random_messages(code, rng)
        received = add_rank_error(code, encode(code, messages),
                                  params.get("t", 0), rng)
        out = serialize.gab_problem_to_json(code, received)
        out["t"] = params.get("t", 0)
        return out
    raise ValueError(f"unknown instance kind {kind!r}")


def solve_sr(payload: dict, engine: str = "reduce", *, verify: bool = False,
             trace: bool = False) -> tuple[dict, bool]:
    inst = _parse(serialize.mglssr_from_json, payload)
    ops0 = inst.field.ops
    t0 = time.perf_counter()
    if engine == "reduce":
        sol, tr = solve(inst, with_trace=True)
        trace_out = _trace_json(tr)
    elif engine == "dd":
        sol = demand_driven_solve(inst)
        trace_out = {"field_ops": inst.field.ops - ops0}
    elif engine == "intermediate":
        sol = intermediate_solve(inst)
        trace_out = {"field_ops": inst.field.ops - ops0}
    else:
        raise ValueError(f"unknown engine {engine!r}")
    out = serialize.mglssr_solution_to_json(sol)
    out["degree"] = sol.lam.degree
    ok = True
    if verify:
        ok = is_solution(inst, sol)
        out["verified"] = ok
    if trace:
        trace_out["wall_time"] = time.perf_counter() - t0
        out["trace"] = trace_out
    return out, ok


def mv_interp(payload: dict, engine: str = "reduce", *, verify: bool = False,
              trace: bool = False) -> tuple[dict, bool]:
    inst = _parse(serialize.mv_from_json, payload)
    t0 = time.perf_counter()
    sol, traces = interpolation_step(inst, engine, with_trace=True)
    out = serialize.mv_solution_to_json(sol)
    out["shifted_degree"] = shifted_degree(sol.qs, weight_vector(inst))
    ok = True
    if verify:
        ok = mv_verify(inst, sol)
        out["verified"] = ok
    if trace:
        tj = _trace_json(traces)
        tj["wall_time"] = time.perf_counter() - t0
        out["trace"] = tj
    return out, ok


def decode_gab(payload: dict, engine: str = "solve") -> tuple[dict, bool]:
    code, received = _parse(serialize.gab_problem_from_json, payload)
    result = decode(code, received, engine=engine)
    return serialize.decode_report_to_json(result), result.success


def rowreduce_matrix(payload: dict, shift=None, *, trace: bool = False) -> dict:
    V = _parse(serialize.matrix_from_json, payload)
    t0 = time.perf_counter()
    if shift:
        reduced, tr = reduce_shifted(V, list(shift))
    else:
        reduced, tr = mulders_storjohann(V)
    out = serialize.matrix_to_json(reduced)
    if V.nrows == V.ncols and all(vec_degree(r) != MINUS_INFINITY
                                  for r in reduced.rows):
        # deg_det of the input: shifted row-degree sum net of the shift weight
        if shift:
            out["deg_det"] = (sum(shifted_degree(r, shift) for r in reduced.rows)
                              - sum(shift))
        else:
            out["deg_det"] = mat_degree(reduced.rows)
    else:
        out["deg_det"] = None
    if trace:
        tj = _trace_json(tr)
        tj["wall_time"] = time.perf_counter() - t0
        out["trace"] = tj
    return out


def bench(suite: str, sizes, seed: int = 0) -> list[dict]:
    """Counter rows for one suite; sizes vary mu (dd), n (walk), or m (reduce)."""
    rng = random.Random(seed)
    rows = []
    if suite == "dd":
        field = make_field(2, 1, 4)
        for mu in sizes:
            gs, ss = [], []
            for _ in range(2):
                g = SkewPoly.monomial(field, 1, mu) + SkewPoly.constant(
                    field, field.random_nonzero(rng))
                gs.append(g)
                ss.append(randgen.random_poly_upto(field, rng, mu - 1))
            inst = MgLssrInstance(field, ss, gs, [0, 0, 0])
            ops0 = field.ops
            t0 = time.perf_counter()
            demand_driven_solve(inst)
            rows.append({"size": mu, "lp_transforms": "",
                         "field_ops": field.ops - ops0,
                         "wall_time": round(time.perf_counter() - t0, 6)})
    elif suite == "walk":
        field = make_field(2, 1, 32)
        for n in sizes:
            inst = randgen.random_mv(field, rng, 2, 2, n)
            t0 = time.perf_counter()
            _, traces = interpolation_step(inst, "walk", with_trace=True)
            rows.append({"size": n,
                         "lp_transforms": sum(t.lp_transforms for t in traces),
                         "field_ops": sum(t.field_ops for t in traces),
                         "wall_time": round(time.perf_counter() - t0, 6)})
    elif suite == "reduce":
        field = make_field(2, 1, 4)
        for m in sizes:
            V = randgen.random_matrix(field, rng, m, m, 8)
            t0 = time.perf_counter()
            _, tr = mulders_storjohann(V)
            rows.append({"size": m, "lp_transforms": tr.lp_transforms,
                         "field_ops": tr.field_ops,
                         "wall_time": round(time.perf_counter() - t0, 6)})
    else:
        raise ValueError(f"unknown bench suite {suite!r}")
    return rows


def bench_csv(rows: list[dict]) -> str:
    lines = ["size,lp_transforms,field_ops,wall_time"]
    for r in rows:
        lines.append(f"{r['size']},{r['lp_transforms']},"
                     f"{r['field_ops']},{r['wall_time']}")
    return "\n".join(lines) + "\n"
