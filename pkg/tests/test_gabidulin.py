"""Interleaved Gabidulin round trips through the rank-error channel."""

import pytest

from skewred.errors import ChannelError, EncodeError, InstanceError
from skewred.gabidulin import (GabCode, add_rank_error, decode, encode,
                               gao_instance)
from skewred.oracle import rank_over_fq
from skewred.randgen import random_messages
from skewred.skewpoly import SkewPoly, annihilator


def test_code_validation(f212):
    F = f212
    with pytest.raises(InstanceError):
        GabCode(F, 0, [1])
    with pytest.raises(InstanceError):
        GabCode(F, 13, [1])
    with pytest.raises(InstanceError):
        GabCode(F, 4, [])
    with pytest.raises(InstanceError):
        GabCode(F, 4, [5])
    with pytest.raises(InstanceError):
        GabCode(F, 4, [2], eval_points=[1, 2])
    with pytest.raises(InstanceError):
        GabCode(F, 2, [1], eval_points=[1, 1])


def test_default_points_and_radius(f212):
    code = GabCode(f212, 12, [4, 4, 4])
    assert code.eval_points == list(f212.fq_basis())
    assert code.ell == 3
    assert code.radius == (8 + 8 + 8) // 4
    assert GabCode(f212, 12, [4]).radius == 8 // 2


def test_encode_values(f212, rng):
    F = f212
    code = GabCode(F, 6, [3, 2])
    msgs = random_messages(code, rng)
    words = encode(code, msgs)
    assert len(words) == 2 and all(len(w) == 6 for w in words)
    for f, word in zip(msgs, words):
        for pt, c in zip(code.eval_points, word):
            assert c == f.evaluate(pt)
    # a constant message scales every point by that constant
    const = encode(GabCode(F, 4, [1]), [SkewPoly.constant(F, 3)])
    assert const[0] == [F.mul(3, pt) for pt in code.eval_points[:4]]


def test_encode_errors(f212, rng):
    code = GabCode(f212, 6, [3, 2])
    msgs = random_messages(code, rng)
    with pytest.raises(EncodeError):
        encode(code, msgs[:1])
    with pytest.raises(EncodeError):
        encode(code, [SkewPoly.monomial(f212, 1, 3), msgs[1]])


def test_subfield_points_annihilator_is_binomial(f212):
    code = GabCode.subfield_points(f212, 6, [2])
    G = annihilator(f212, code.eval_points)
    assert G.degree == 6
    assert G.coefficient(0) == f212.neg(1)
    assert all(G.coefficient(i) == 0 for i in range(1, 6))
    with pytest.raises(ValueError):
        GabCode.subfield_points(f212, 5, [2])


def test_channel_rank_is_exact(f212, rng):
    F = f212
    code = GabCode(F, 8, [3, 3])
    words = encode(code, random_messages(code, rng))
    for t in (0, 1, 3):
        rec = add_rank_error(code, words, t, seed=rng.randrange(2**30))
        diffs = [F.sub(a, b) for wa, wb in zip(rec, words) for a, b in zip(wa, wb)]
        assert rank_over_fq(F, diffs) == t
        assert F.fq_rank(diffs) == t


def test_channel_determinism_and_bounds(f212, rng):
    code = GabCode(f212, 8, [3, 3])
    words = encode(code, random_messages(code, rng))
    a = add_rank_error(code, words, 2, seed=99)
    b = add_rank_error(code, words, 2, seed=99)
    assert a == b
    assert add_rank_error(code, words, 0, seed=1) == words
    with pytest.raises(ChannelError):
        add_rank_error(code, words, 9, seed=1)
    with pytest.raises(ChannelError):
        add_rank_error(code, words, -1, seed=1)


def test_gao_instance_shape(f212, rng):
    F = f212
    code = GabCode(F, 8, [4, 2])
    words = encode(code, random_messages(code, rng))
    inst = gao_instance(code, words)
    G = annihilator(F, code.eval_points)
    assert inst.g_list == [G, G]
    assert inst.gammas == [4, 0, 2]
    # with no channel error, s_i interpolates the codeword
    for s, word in zip(inst.s_list, words):
        for pt, c in zip(code.eval_points, word):
            assert s.evaluate(pt) == c


def test_decode_identity_when_clean(f212, rng):
    code = GabCode(f212, 8, [3, 2])
    msgs = random_messages(code, rng)
    words = encode(code, msgs)
    for engine in ("solve", "dd"):
        res = decode(code, words, engine=engine)
        assert res.success
        assert res.messages == msgs
        assert res.rank_used == 0


def test_decode_up_to_radius(f212, rng):
    code = GabCode(f212, 10, [4, 2])
    assert code.radius == 4
    msgs = random_messages(code, rng)
    words = encode(code, msgs)
    for t in range(code.radius + 1):
        rec = add_rank_error(code, words, t, seed=rng.randrange(2**30))
        for engine in ("solve", "dd"):
            res = decode(code, rec, engine=engine)
            assert res.success, (t, engine)
            assert res.messages == msgs
            assert res.rank_used == t


def test_decode_subfield_binomial_path(f212, rng):
    code = GabCode.subfield_points(f212, 6, [2, 2])
    msgs = random_messages(code, rng)
    words = encode(code, msgs)
    rec = add_rank_error(code, words, code.radius, seed=7)
    res = decode(code, rec, engine="dd")
    assert res.success and res.messages == msgs


def test_no_silent_miscorrection(f212, rng):
    # far beyond the radius the decoder must fail loudly, never hand back
    # messages that do not re-encode close to the received word
    code = GabCode(f212, 12, [4, 4, 4])
    msgs = random_messages(code, rng)
    words = encode(code, msgs)
    failures = 0
    for seed in range(6):
        rec = add_rank_error(code, words, 8, seed=seed)
        res = decode(code, rec)
        if not res.success:
            failures += 1
            assert res.messages is None
            assert res.reason in ("inexact division",
                                  "quotient degree out of range",
                                  "residual rank exceeds radius")
        else:
            diff = [f212.sub(a, b) for wa, wb in
                    zip(rec, encode(code, res.messages))
                    for a, b in zip(wa, wb)]
            assert f212.fq_rank(diff) <= code.radius
    assert failures > 0


def test_unknown_engine(f212, rng):
    code = GabCode(f212, 6, [2])
    words = encode(code, random_messages(code, rng))
    with pytest.raises(ValueError):
        decode(code, words, engine="turbo")
