"""End-to-end command line behavior, including exit codes."""

import json

from click.testing import CliRunner

from skewred.cli import main
from skewred.serialize import matrix_to_json
from skewred.skewmat import SkewMatrix
from skewred.skewpoly import SkewPoly


def _run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env, catch_exceptions=False)


def test_gen_same_seed_same_bytes(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        res = _run("gen", "mglssr", "--seed", "7", "--ell", "2",
                   "--out", str(path))
        assert res.exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    other = _run("gen", "mglssr", "--seed", "8", "--ell", "2")
    assert other.output.encode() != a.read_bytes()


def test_seed_env_var(tmp_path):
    direct = _run("gen", "mv", "--seed", "11", "--s", "12", "--n", "7")
    via_env = _run("gen", "mv", "--s", "12", "--n", "7",
                   env={"SKEWRED_SEED": "11"})
    assert direct.exit_code == 0 and via_env.exit_code == 0
    assert direct.output == via_env.output


def test_solve_sr_engines_and_verify(tmp_path):
    inst = tmp_path / "inst.json"
    assert _run("gen", "mglssr", "--seed", "3", "--ell", "2",
                "--out", str(inst)).exit_code == 0
    degrees = set()
    for engine in ("reduce", "dd", "intermediate"):
        res = _run("solve-sr", str(inst), "--engine", engine,
                   "--verify", "--trace")
        assert res.exit_code == 0
        body = json.loads(res.output)
        assert body["verified"] is True
        assert body["trace"]["field_ops"] > 0
        degrees.add(body["degree"])
    assert len(degrees) == 1


def test_mv_interp_engines(tmp_path):
    inst = tmp_path / "mv.json"
    assert _run("gen", "mv", "--seed", "4", "--s", "12", "--ell", "2",
                "--k", "2", "--n", "7", "--out", str(inst)).exit_code == 0
    shifted = set()
    for engine in ("reduce", "walk"):
        res = _run("mv-interp", str(inst), "--engine", engine, "--verify")
        assert res.exit_code == 0
        shifted.add(json.loads(res.output)["shifted_degree"])
    assert len(shifted) == 1


def test_decode_gab_success_and_failure(tmp_path):
    good = tmp_path / "good.json"
    res = _run("gen", "gab", "--seed", "2", "--s", "12", "--n", "12",
               "--dim", "4", "--dim", "4", "--dim", "4", "--t", "5",
               "--out", str(good))
    assert res.exit_code == 0
    ok = _run("decode-gab", str(good), "--engine", "dd")
    assert ok.exit_code == 0
    assert json.loads(ok.output)["success"] is True

    bad = tmp_path / "bad.json"
    res = _run("gen", "gab", "--seed", "2", "--s", "12", "--n", "12",
               "--dim", "4", "--dim", "4", "--dim", "4", "--t", "8",
               "--out", str(bad))
    assert res.exit_code == 0
    failed = _run("decode-gab", str(bad))
    assert failed.exit_code == 1
    body = json.loads(failed.output)
    assert body["success"] is False
    assert body["reason"]


def test_rowreduce_with_shift(tmp_path, f16):
    F = f16
    z = SkewPoly.zero(F)
    g1 = SkewPoly.monomial(F, 1, 3)
    g2 = SkewPoly.monomial(F, 1, 4)
    M = SkewMatrix(F, [[SkewPoly.one(F), SkewPoly(F, [1, 1]), SkewPoly(F, [2])],
                       [z, g1, z], [z, z, g2]])
    path = tmp_path / "mat.json"
    path.write_text(json.dumps(matrix_to_json(M)))
    res = _run("rowreduce", str(path), "--shift", "5,1,2", "--trace")
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["deg_det"] == 0 + 3 + 4
    assert "trace" in body


def test_usage_errors_exit_2(tmp_path):
    # unknown option
    assert _run("gen", "mglssr", "--nope").exit_code == 2
    # unreadable instance file
    assert _run("solve-sr", str(tmp_path / "missing.json")).exit_code == 2
    # unparseable JSON
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert _run("solve-sr", str(junk)).exit_code == 2
    # domain error surfaces as usage error
    bad = tmp_path / "bad.json"
    res = _run("gen", "mv", "--seed", "1", "--n", "2", "--out", str(bad))
    assert res.exit_code == 2  # n below the parameter bound
    # malformed shift list
    mat = tmp_path / "m.json"
    res2 = _run("gen", "mglssr", "--seed", "1", "--out", str(mat))
    assert res2.exit_code == 0
    assert _run("rowreduce", str(mat), "--shift", "1,x").exit_code == 2
    # a file with the wrong schema for the subcommand
    assert _run("rowreduce", str(mat)).exit_code == 2
    assert _run("mv-interp", str(mat)).exit_code == 2


def test_bench_csv_shape(tmp_path):
    out = tmp_path / "bench.csv"
    res = _run("bench", "reduce", "--sizes", "2,3", "--seed", "1",
               "--csv", str(out))
    assert res.exit_code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "size,lp_transforms,field_ops,wall_time"
    assert len(lines) == 3
    assert lines[1].startswith("2,") and lines[2].startswith("3,")


def test_version_flag():
    res = _run("--version")
    assert res.exit_code == 0
    assert "version" in res.output
