"""HTTP front end: thin adapters from JSON bodies to the service layer.

Run with ``skewred serve`` or ``uvicorn skewred.api:app``.  Domain errors
(bad instances, reducible moduli, dependent points, ...) come back as 422
with the exception class name; a decoding failure is a normal 200 whose body
has success false, matching the CLI's treatment of failure as a value.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import service
from .errors import SkewredError

app = FastAPI(title="skewred", version="0.1.0",
              description="Row reduction over skew polynomial rings, "
                          "shift register synthesis, and rank-metric decoding.")


@app.exception_handler(SkewredError)
async def _domain_error(request: Request, exc: SkewredError):
    return JSONResponse(status_code=422,
                        content={"error": type(exc).__name__,
                                 "detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(status_code=422,
                        content={"error": "ValueError", "detail": str(exc)})


class FieldParams(BaseModel):
    p: int = 2
    e: int = 1
    s: int = 4
    frob_power: int = 1


class GenRequest(BaseModel):
    seed: int = 0
    field: FieldParams = Field(default_factory=FieldParams)
    ell: int | None = None
    k: int | None = None
    n: int | None = None
    max_g_deg: int | None = None
    max_gamma: int | None = None
    binomial: bool = False
    k_list: list[int] | None = None
    t: int | None = None
    subfield_points: bool = False


class SolveRequest(BaseModel):
    instance: dict
    engine: str = "reduce"
    verify: bool = False
    trace: bool = False


class DecodeRequest(BaseModel):
    problem: dict
    engine: str = "solve"


class RowReduceRequest(BaseModel):
    matrix: dict
    shift: list[int] | None = None
    trace: bool = False


class SolveResponse(BaseModel):
    result: dict
    ok: bool


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}


@app.post("/gen/{kind}")
async def gen(kind: str, req: GenRequest) -> dict:
    params = {k: v for k, v in req.model_dump().items()
              if k not in ("seed", "field") and v is not None}
    params["field"] = req.field.model_dump()
    return service.gen_instance(kind, params, req.seed)


@app.post("/mglssr/solve", response_model=SolveResponse)
async def mglssr_solve(req: SolveRequest) -> SolveResponse:
    out, ok = service.solve_sr(req.instance, req.engine,
                               verify=req.verify, trace=req.trace)
    return SolveResponse(result=out, ok=ok)


@app.post("/mv/interpolate", response_model=SolveResponse)
async def mv_interpolate(req: SolveRequest) -> SolveResponse:
    out, ok = service.mv_interp(req.instance, req.engine,
                                verify=req.verify, trace=req.trace)
    return SolveResponse(result=out, ok=ok)


@app.post("/gabidulin/decode", response_model=SolveResponse)
async def gabidulin_decode(req: DecodeRequest) -> SolveResponse:
    out, ok = service.decode_gab(req.problem, req.engine)
    return SolveResponse(result=out, ok=ok)


@app.post("/rowreduce")
async def rowreduce(req: RowReduceRequest) -> dict:
    return service.rowreduce_matrix(req.matrix, req.shift, trace=req.trace)
