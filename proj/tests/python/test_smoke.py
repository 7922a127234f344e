"""Smoke tests for the python bindings against the C++ core."""

import math
import random

import pytest

import cpfec


def test_component_code_round_trip():
    code = cpfec.build_ebch(113)
    assert (code.n, code.k, code.d_min) == (128, 113, 6)
    rng = random.Random(7)
    info = [rng.randint(0, 1) for _ in range(113)]
    cw = code.encode(info)
    assert cw[:113] == info
    assert code.is_codeword(cw)
    assert sum(cw) % 2 == 0


def test_flipping_set_sizes():
    assert cpfec.flipping_set_size("t0+t1+t2(40,29)", 113) == 839
    assert cpfec.flipping_set_size("t0+t1+t2(40,29)", 106) == 832
    assert cpfec.flipping_set_size("t0+t1+t2(40,29)", 99) == 825
    assert cpfec.flipping_set_size("t0+t1", 106) == 107


def test_boxplus():
    assert cpfec.boxplus(3.0, 0.0) == 0.0
    direct = 2.0 * math.atanh(math.tanh(1.0) ** 2)
    assert cpfec.boxplus(2.0, 2.0) == pytest.approx(direct, abs=1e-9)
    assert cpfec.boxplus_reduce([4.0, 4.0, 4.0]) == pytest.approx(
        2.0 * math.atanh(math.tanh(2.0) ** 3), abs=1e-9
    )


def test_osd_corrects_noiseless_codeword():
    code = cpfec.build_ebch(106)
    rng = random.Random(3)
    info = [rng.randint(0, 1) for _ in range(106)]
    cw = code.encode(info)
    llr = [8.0 * (1 - 2 * b) for b in cw]
    out = cpfec.osd_decode(code, llr, "t0+t1+t2(40,29)")
    assert out["codeword"] == cw
    assert out["info"] == info
    assert out["score"] == 0.0
    assert out["candidates_evaluated"] == 832


def test_scheme_round_trip():
    scheme = cpfec.make_scheme({"scheme.kind": "cp-mlc-id"})
    assert scheme.iterations == 3
    nbits = cpfec.info_bit_count(scheme)
    assert nbits == 2 * 106 + 128
    rng = random.Random(11)
    info = [rng.randint(0, 1) for _ in range(nbits)]
    lanes = cpfec.scheme_encode(scheme, info)
    assert len(lanes) == 3
    llrs = [[40.0 * (1 - 2 * b) for b in lane] for lane in lanes]
    out = cpfec.scheme_decode(scheme, llrs)
    assert out["info"] == info
    assert [lane for (_, lane, _) in out["trace"]] == [1, 2, 1]


def test_overheads_match_the_reported_table():
    concat = cpfec.make_scheme({"scheme.kind": "concatenated"})
    mlc = cpfec.make_scheme({"scheme.kind": "cp-mlc"})
    mlcid = cpfec.make_scheme({"scheme.kind": "cp-mlc-id"})
    assert cpfec.scheme_overhead(concat) == pytest.approx(19.89, abs=0.01)
    assert cpfec.scheme_overhead(mlcid) == pytest.approx(19.53, abs=0.01)
    assert cpfec.scheme_overhead(mlc) == pytest.approx(19.36, abs=0.01)
    assert cpfec.sdd_count_per3(concat) == 3.0
    assert cpfec.sdd_count_per3(mlcid) == 3.0


def test_interleaver_involution():
    perm = cpfec.build_interleaver("digit-swap(8)", 128)
    assert sorted(perm) == list(range(128))
    assert all(perm[perm[i]] == i for i in range(128))


def test_run_point_deterministic():
    scheme = cpfec.make_scheme({"scheme.kind": "uncoded"})
    a = cpfec.run_point(scheme, snr_db=4.0, seed=42, min_errors=50, min_frames=200, max_frames=400)
    b = cpfec.run_point(scheme, snr_db=4.0, seed=42, min_errors=50, min_frames=200, max_frames=400, workers=4)
    assert a["bit_errors"] == b["bit_errors"]
    assert a["frames"] == b["frames"]
    assert a["bit_errors"] > 0


def test_message_schedule():
    sched = cpfec.message_schedule(3, 3)
    assert [lane for (_, lane, _) in sched] == [1, 2, 1]
    assert sched[0][2][0] == "phi(S1,dH1)[1]"


def test_kp4_model():
    assert cpfec.outer_success(2.2e-4)
    assert not cpfec.outer_success(1e-3)
    assert cpfec.KP4_RATE == pytest.approx(514 / 544)
    assert cpfec.uncoded_snr_db_at(1e-15) == pytest.approx(14.99, abs=0.01)
