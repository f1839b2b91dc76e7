"""Exit criteria. Each test prints one line in the "acceptance criteria" summary."""

import hashlib
import itertools
import random
import struct
import time

import numpy as np
import pytest

import oracles
from md192 import MD192, SHA1, kat, md192, padding, sha1
from md192 import analysis, cli
from md192.core import expand_schedule, round_f1, trace_compression
from md192.sha1 import sha1_expand

MASK = 0xFFFFFFFF


@pytest.fixture(autouse=True, scope="module")
def compiled_kernels():
    # JIT compilation happens once per environment; keep it out of the timings.
    md192(b"")
    sha1(b"")


class timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "SHA-1 published vectors bit-exact")
def test_sha1_table3(record):
    entries = [e for e in kat.load_bundled("table3") if e.algorithm == "sha1"]
    with timer() as t:
        report = kat.run_kats(entries)
    passed = sum(r.passed for r in report.results)
    record(f"{passed}/{len(entries)} rows, {t.elapsed:.3f}s")
    assert len(entries) == 8
    assert passed == 8
    assert t.elapsed < 1.0


@pytest.mark.criterion(2, "MD-192 published vectors / frozen goldens")
def test_md192_table3(record):
    published = [e for e in kat.load_bundled("table3") if e.algorithm == "md192"]
    frozen = {e.payload: e.digest for e in kat.load_bundled("frozen") if e.algorithm == "md192"}
    exact = sum(md192(e.message).hex() == e.digest for e in published)
    goldens = sum(md192(e.message).hex() == frozen[e.payload] for e in published)
    oracle = sum(oracles.md192(e.message) == frozen[e.payload] for e in published)
    record(
        f"published digests bit-exact {exact}/8 (documented mismatch); "
        f"frozen goldens {goldens}/8, oracle agreement {oracle}/8"
    )
    if exact == 8:
        return
    assert goldens == 8
    assert oracle == 8


@pytest.mark.criterion(3, "streaming == one-shot over randomized chunkings")
def test_streaming_equivalence(record):
    rng = random.Random(20240601)
    chunkings = 0
    with timer() as t:
        for alg, cls, oneshot in (("md192", MD192, md192), ("sha1", SHA1, sha1)):
            for _ in range(100):
                msg = rng.randbytes(rng.randrange(0, 600))
                want = oneshot(msg)
                if alg == "sha1":
                    assert want == hashlib.sha1(msg).digest()
                for _ in range(10):
                    cuts = sorted(rng.randrange(0, len(msg) + 1) for _ in range(rng.randrange(0, 12)))
                    h = cls()
                    for lo, hi in zip([0] + cuts, cuts + [len(msg)]):
                        h.update(msg[lo:hi])
                    assert h.digest() == want
                    chunkings += 1
    record(f"{chunkings} chunkings of 200 messages, {t.elapsed:.2f}s")
    assert chunkings >= 2000
    assert t.elapsed < 10


@pytest.mark.criterion(4, "padding invariants for lengths 0..1024")
def test_padding_properties(record):
    with timer() as t:
        for n in range(1025):
            msg = bytes((n + i) & 0xFF for i in range(n))
            padded = msg + padding(n)
            assert len(padded) % 64 == 0
            assert padded[n] == 0x80
            assert padded[n + 1 : -8] == bytes(len(padded) - n - 9)
            assert struct.unpack(">Q", padded[-8:])[0] == 8 * n
            assert len(padded) - n >= 9
    record(f"1025 lengths, {t.elapsed:.2f}s")
    assert t.elapsed < 5


@pytest.mark.criterion(5, "schedule GF(2)-linearity (MD-192 and SHA-1)")
def test_schedule_linearity(record):
    rng = random.Random(5)
    with timer() as t:
        for _ in range(1000):
            b1 = [rng.getrandbits(32) for _ in range(16)]
            b2 = [rng.getrandbits(32) for _ in range(16)]
            x = [p ^ q for p, q in zip(b1, b2)]
            for expand in (expand_schedule, sha1_expand):
                assert expand(x) == [p ^ q for p, q in zip(expand(b1), expand(b2))]
    record(f"1000 block pairs x 2 schedules, {t.elapsed:.2f}s")
    assert t.elapsed < 5


@pytest.mark.criterion(6, "step algebra at all 80 steps")
def test_step_algebra(record):
    rng = random.Random(6)
    steps = 0
    with timer() as t:
        for _ in range(100):
            state = [rng.getrandbits(32) for _ in range(6)]
            block = [rng.getrandbits(32) for _ in range(16)]
            trace = trace_compression(state, block)
            assert len(trace) == 80
            for s in trace:
                old, new = s.before, s.after
                assert (s.q - s.p) % 2**32 == old.f
                assert new.b == old.a
                assert new.c == oracles.rotl(old.b, 30)
                assert new.e == oracles.rotl(old.d, 15)
                assert new.d == old.c
                steps += 1
    record(f"{steps} steps checked, {t.elapsed:.2f}s")
    assert t.elapsed < 5


@pytest.mark.criterion(7, "avalanche: 10000 single-bit flips on 64-byte messages")
def test_avalanche(record):
    with timer() as t:
        md = analysis.avalanche_test("md192", 64, 10000, seed=1)
        sh = analysis.avalanche_test("sha1", 64, 10000, seed=1)
    rates = md.flip_rates
    record(
        f"md192 mean {md.mean_flipped_bits:.3f} (rates {rates.min():.4f}..{rates.max():.4f}), "
        f"sha1 mean {sh.mean_flipped_bits:.3f}, {t.elapsed:.1f}s"
    )
    assert 94.5 <= md.mean_flipped_bits <= 97.5
    assert np.all((rates >= 0.45) & (rates <= 0.55))
    assert 78.5 <= sh.mean_flipped_bits <= 81.5
    assert t.elapsed < 30


@pytest.mark.criterion(8, "expansion minimum weight: md192 >= sha1 >= sha0")
def test_expansion_distance(record, capsys):
    with timer() as t:
        code = cli.main(["expand", "--variant", "all", "--sample", "single-bit"])
    text = capsys.readouterr().out
    reports = {v: analysis.expansion_weight_study(v, "single-bit") for v in ("md192", "sha1", "sha0")}
    mins = {v: r.min_total_weight for v, r in reports.items()}
    record(
        f"min total weight md192 {mins['md192']}, sha1 {mins['sha1']}, sha0 {mins['sha0']} "
        f"(t>=16: {reports['md192'].min_weight_from16}/{reports['sha1'].min_weight_from16}/"
        f"{reports['sha0'].min_weight_from16}), {t.elapsed:.2f}s"
    )
    assert code == 0
    for v, m in mins.items():
        assert f"min weight        {m} " in text
    assert all(r.cases == 512 for r in reports.values())
    assert mins["md192"] >= mins["sha1"] >= mins["sha0"]
    assert t.elapsed < 60


@pytest.mark.criterion(9, "benchmark: 1 MiB x 30 reps, ratio reported")
def test_benchmark(record, capsys):
    with timer() as t:
        code = cli.main(["bench", "--size", str(1 << 20), "--reps", "30", "--format", "kv"])
    values = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    ratio = float(values["ratio"])
    record(
        f"md192 {float(values['md192.median_throughput']) / 1e6:.1f} MB/s, "
        f"sha1 {float(values['sha1.median_throughput']) / 1e6:.1f} MB/s, ratio {ratio:.3f} "
        f"({'md192 slower' if ratio < 1 else 'md192 not slower'}), {t.elapsed:.1f}s"
    )
    assert code == 0
    assert values["md192.repetitions"] == values["sha1.repetitions"] == "30"
    assert values["md192.input_size"] == str(1 << 20)
    assert float(values["md192.median_throughput"]) > 0
    assert float(values["sha1.median_throughput"]) > 0
    assert t.elapsed < 60


@pytest.mark.criterion(10, "IF / MAJ truth tables")
def test_truth_tables(record):
    rows = 0
    for b, c, d in itertools.product((0, 1), repeat=3):
        lift = lambda bit: MASK if bit else 0
        assert round_f1(0, lift(b), lift(c), lift(d)) == lift((b & c) | ((1 - b) & d))
        assert round_f1(2, lift(b), lift(c), lift(d)) == lift((b & c) | (c & d) | (d & b))
        rows += 1
    record(f"{rows} rows each")
    assert rows == 8
