"""Command line front end.

Subcommands generate problem instances, run the solvers and decoders on
instance files, reduce matrices, and benchmark the counters.  Exit codes:
0 on success (and verified, when --verify is given), 1 when verification or
decoding fails, 2 on usage or parse errors.  --seed defaults to the
SKEWRED_SEED environment variable when set.
"""

from __future__ import annotations

import json
import sys

import click

from . import serialize, service
from .errors import SkewredError


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"could not parse {path}: {exc}") from exc
    except OSError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(obj: dict, out: str | None) -> None:
    text = serialize.canonical_dumps(obj)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _domain_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except SkewredError as exc:
        raise click.UsageError(f"{type(exc).__name__}: {exc}") from exc
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.version_option(package_name="skewred")
def main() -> None:
    """Row reduction over skew polynomial rings and its decoding applications."""


@main.command()
@click.argument("kind", type=click.Choice(["mglssr", "mv", "gab"]))
@click.option("--seed", type=int, default=0, envvar="SKEWRED_SEED",
              show_default=True, help="RNG seed; same seed, same file.")
@click.option("--p", type=int, default=2, show_default=True)
@click.option("--e", type=int, default=1, show_default=True)
@click.option("--s", type=int, default=4, show_default=True)
@click.option("--frob-power", type=int, default=1, show_default=True)
@click.option("--ell", type=int, default=None, help="Number of sequences / y-columns.")
@click.option("--k", type=int, default=None, help="Message degree bound (mv).")
@click.option("--n", type=int, default=None, help="Number of points / code length.")
@click.option("--max-g-deg", type=int, default=None, help="Max modulus degree (mglssr).")
@click.option("--max-gamma", type=int, default=None, help="Max shift (mglssr).")
@click.option("--binomial", is_flag=True, help="Binomial moduli x^d + a (mglssr).")
@click.option("--dim", "dims", type=int, multiple=True,
              help="Constituent dimension, repeatable (gab).")
@click.option("--t", type=int, default=None, help="Error rank to add (gab).")
@click.option("--subfield-points", is_flag=True,
              help="Evaluation points from the theta^n-fixed subfield (gab).")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout.")
def gen(kind, seed, p, e, s, frob_power, ell, k, n, max_g_deg, max_gamma,
        binomial, dims, t, subfield_points, out) -> None:
    """Generate a random problem instance as JSON."""
    params = {"field": {"p": p, "e": e, "s": s, "frob_power": frob_power},
              "binomial": binomial, "subfield_points": subfield_points}
    for name, val in (("ell", ell), ("k", k), ("n", n), ("max_g_deg", max_g_deg),
                      ("max_gamma", max_gamma), ("t", t)):
        if val is not None:
            params[name] = val
    if dims:
        params["k_list"] = list(dims)
    obj = _domain_guard(service.gen_instance, kind, params, seed)
    _emit(obj, out)


@main.command("solve-sr")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--engine", type=click.Choice(["reduce", "dd", "intermediate"]),
              default="reduce", show_default=True)
@click.option("--verify", is_flag=True, help="Check the output against the "
              "congruence and degree conditions; exit 1 on failure.")
@click.option("--trace", is_flag=True, help="Include operation counters.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def solve_sr(instance, engine, verify, trace, out) -> None:
    """Solve a shift register instance file."""
    payload = _load(instance)
    result, ok = _domain_guard(service.solve_sr, payload, engine,
                               verify=verify, trace=trace)
    _emit(result, out)
    if not ok:
        sys.exit(1)


@main.command("mv-interp")
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--engine", type=click.Choice(["reduce", "walk"]),
              default="reduce", show_default=True)
@click.option("--verify", is_flag=True, help="Check zero conditions and "
              "degree bounds; exit 1 on failure.")
@click.option("--trace", is_flag=True, help="Include operation counters.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def mv_interp(instance, engine, verify, trace, out) -> None:
    """Run the interpolation step on an instance file."""
    payload = _load(instance)
    result, ok = _domain_guard(service.mv_interp, payload, engine,
                               verify=verify, trace=trace)
    _emit(result, out)
    if not ok:
        sys.exit(1)


@main.command("decode-gab")
@click.argument("problem", type=click.Path(exists=True, dir_okay=False))
@click.option("--engine", type=click.Choice(["solve", "dd"]),
              default="solve", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def decode_gab(problem, engine, out) -> None:
    """Decode a received-words file; exit 1 on decoding failure."""
    payload = _load(problem)
    result, ok = _domain_guard(service.decode_gab, payload, engine)
    _emit(result, out)
    if not ok:
        sys.exit(1)


@main.command()
@click.argument("matrix", type=click.Path(exists=True, dir_okay=False))
@click.option("--shift", default=None,
              help="Comma-separated column shifts, e.g. 100,42,69.")
@click.option("--trace", is_flag=True, help="Include operation counters.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def rowreduce(matrix, shift, trace, out) -> None:
    """Reduce a matrix file to (shifted) weak Popov form; reports deg_det."""
    payload = _load(matrix)
    w = None
    if shift:
        try:
            w = [int(x) for x in shift.split(",")]
        except ValueError as exc:
            raise click.UsageError(f"bad shift {shift!r}: {exc}") from exc
    result = _domain_guard(service.rowreduce_matrix, payload, w, trace=trace)
    _emit(result, out)


@main.command()
@click.argument("suite", type=click.Choice(["dd", "walk", "reduce"]))
@click.option("--sizes", default="32,64,128", show_default=True,
              help="Comma-separated size parameters.")
@click.option("--seed", type=int, default=0, envvar="SKEWRED_SEED",
              show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False),
              default=None, help="Write CSV to a file instead of stdout.")
def bench(suite, sizes, seed, csv_path) -> None:
    """Benchmark counters: CSV of size, lp_transforms, field_ops, wall_time."""
    try:
        size_list = [int(x) for x in sizes.split(",")]
    except ValueError as exc:
        raise click.UsageError(f"bad sizes {sizes!r}: {exc}") from exc
    rows = _domain_guard(service.bench, suite, size_list, seed)
    text = service.bench_csv(rows)
    if csv_path:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port) -> None:
    """Serve the HTTP API."""
    import uvicorn

    uvicorn.run("skewred.api:app", host=host, port=port)


if __name__ == "__main__":
    main()
