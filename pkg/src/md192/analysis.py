"""Diffusion, schedule-weight and throughput measurements.

Three studies, each returning a small report dataclass that renders as
human-readable text (``to_text``) or as ``key=value`` lines (``to_kv``), and
parses back from the latter (``from_kv``) without loss.

* :func:`avalanche_test`: flip one random input bit, count flipped digest bits.
* :func:`expansion_weight_study`: Hamming weight of the expanded schedule
  difference for a set of input differences. The schedules are GF(2)-linear,
  so the expansion of a difference is the difference of the expansions and no
  message pairs are needed.
* :func:`benchmark`: median wall-clock throughput over repeated digests.
"""

from __future__ import annotations

import dataclasses
import re
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import ALGORITHMS, new
from .core import expand_schedule
from .sha1 import sha1_expand

AVALANCHE_METRIC = "single-bit-flip digest Hamming distance (diffusion proxy)"
WEIGHT_METRIC = "sum of popcount over expanded difference words"

SCHEDULES: dict[str, Callable[[Sequence[int]], list[int]]] = {
    "md192": expand_schedule,
    "sha1": sha1_expand,
    "sha0": lambda block: sha1_expand(block, rotation=0),
}


def digest_bits(algorithm: str) -> int:
    return ALGORITHMS[algorithm].digest_size * 8


# -- key=value serialization -------------------------------------------------


def _encode(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return ",".join(str(v) for v in value)
    return str(value)


def _decode(kind: str, text: str):
    if kind == "int":
        return int(text)
    if kind == "float":
        return float(text)
    if kind.startswith("tuple"):
        return tuple(int(v) for v in text.split(",")) if text else ()
    return text


class _KVReport:
    def to_kv(self, prefix: str = "") -> str:
        return "".join(f"{prefix}{f.name}={_encode(getattr(self, f.name))}\n" for f in dataclasses.fields(self))

    @classmethod
    def from_kv(cls, text: str, prefix: str = ""):
        raw = {}
        for line in text.splitlines():
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"not a key=value line: {line!r}")
            if key.startswith(prefix):
                raw[key[len(prefix) :]] = value
        kwargs = {}
        for f in dataclasses.fields(cls):
            if f.name not in raw:
                raise ValueError(f"missing key {prefix}{f.name}")
            kwargs[f.name] = _decode(str(f.type), raw[f.name])
        return cls(**kwargs)


# -- avalanche ----------------------------------------------------------------


@dataclass(frozen=True)
class AvalancheReport(_KVReport):
    algorithm: str
    message_length: int
    trials: int
    seed: int
    mean_flipped_bits: float
    stddev: float
    min_flipped_bits: int
    max_flipped_bits: int
    # Index d counts the trials whose digests differed in exactly d bits.
    distance_histogram: tuple[int, ...]
    # Index b counts the trials in which output bit b flipped.
    flip_counts: tuple[int, ...]

    @property
    def digest_bits(self) -> int:
        return len(self.flip_counts)

    @property
    def flip_rates(self) -> np.ndarray:
        return np.asarray(self.flip_counts, dtype=float) / self.trials

    def to_text(self) -> str:
        rates = self.flip_rates
        return (
            f"avalanche  {self.algorithm}\n"
            f"  metric            {AVALANCHE_METRIC}\n"
            f"  messages          {self.trials} x {self.message_length} bytes, seed {self.seed}\n"
            f"  mean flipped      {self.mean_flipped_bits:.4f} of {self.digest_bits}"
            f" ({self.mean_flipped_bits / self.digest_bits:.4%})\n"
            f"  stddev            {self.stddev:.4f}\n"
            f"  min / max         {self.min_flipped_bits} / {self.max_flipped_bits}\n"
            f"  per-bit flip rate {rates.min():.4f} .. {rates.max():.4f}\n"
        )


def avalanche_trials(
    algorithm: str, message_length: int = 64, trials: int = 10000, seed: int = 0, engine: str = "auto"
) -> tuple[np.ndarray, np.ndarray]:
    """Raw avalanche data: per-trial distances and a (trials, bits) flip matrix.

    Trial ``i`` hashes a random ``message_length``-byte message and the same
    message with one uniformly chosen bit flipped. All randomness is drawn up
    front from ``seed``, so results do not depend on evaluation order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if message_length < 1:
        raise ValueError("message_length must be >= 1")
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    rng = np.random.default_rng(seed)
    messages = rng.integers(0, 256, size=(trials, message_length), dtype=np.uint8)
    positions = rng.integers(0, 8 * message_length, size=trials)

    diffs = np.empty((trials, ALGORITHMS[algorithm].digest_size), dtype=np.uint8)
    for i in range(trials):
        msg = messages[i]
        flipped = msg.copy()
        flipped[positions[i] // 8] ^= 0x80 >> (positions[i] % 8)
        d0 = new(algorithm, msg.tobytes(), engine=engine).digest()
        d1 = new(algorithm, flipped.tobytes(), engine=engine).digest()
        diffs[i] = np.frombuffer(d0, np.uint8) ^ np.frombuffer(d1, np.uint8)
    flips = np.unpackbits(diffs, axis=1).astype(bool)
    return flips.sum(axis=1), flips


def summarize_avalanche(
    algorithm: str, message_length: int, seed: int, distances: np.ndarray, flips: np.ndarray
) -> AvalancheReport:
    trials, bits = flips.shape
    return AvalancheReport(
        algorithm=algorithm,
        message_length=message_length,
        trials=trials,
        seed=seed,
        mean_flipped_bits=float(np.mean(distances)),
        stddev=float(np.std(distances)),
        min_flipped_bits=int(distances.min()),
        max_flipped_bits=int(distances.max()),
        distance_histogram=tuple(int(c) for c in np.bincount(distances, minlength=bits + 1)),
        flip_counts=tuple(int(c) for c in flips.sum(axis=0)),
    )


def avalanche_test(
    algorithm: str, message_length: int = 64, trials: int = 10000, seed: int = 0, engine: str = "auto"
) -> AvalancheReport:
    distances, flips = avalanche_trials(algorithm, message_length, trials, seed, engine)
    return summarize_avalanche(algorithm, message_length, seed, distances, flips)


# -- schedule weights ---------------------------------------------------------


_RANDOM_SPEC = re.compile(r"random:(\d+):(\d+)")


def parse_sample(spec: str) -> tuple[str, int, int]:
    """Parse ``"single-bit"`` or ``"random:K:N"`` (N random K-bit differences)."""
    if spec == "single-bit":
        return ("single-bit", 1, 512)
    m = _RANDOM_SPEC.fullmatch(spec)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if 1 <= k <= 512 and n >= 1:
            return ("random", k, n)
    raise ValueError(f"invalid sample spec {spec!r}; use 'single-bit' or 'random:K:N' with 1 <= K <= 512")


def _difference(bits: Sequence[int]) -> list[int]:
    words = [0] * 16
    for i in bits:
        words[i // 32] |= 1 << (31 - i % 32)
    return words


def _differences(spec: str, seed: int) -> list[list[int]]:
    kind, k, n = parse_sample(spec)
    if kind == "single-bit":
        return [_difference([i]) for i in range(512)]
    rng = np.random.default_rng(seed)
    return [_difference(rng.choice(512, size=k, replace=False)) for _ in range(n)]


def schedule_weight(schedule: Sequence[int], start: int = 0) -> int:
    return sum(w.bit_count() for w in schedule[start:])


@dataclass(frozen=True)
class ExpansionWeightReport(_KVReport):
    variant: str
    sample: str
    seed: int
    cases: int
    min_total_weight: int
    max_total_weight: int
    mean_total_weight: float
    median_total_weight: float
    # Same statistic restricted to the expanded words t = 16..79.
    min_weight_from16: int
    # Input difference (16 words, hex) attaining min_total_weight.
    min_difference: str

    def to_text(self) -> str:
        return (
            f"expansion  {self.variant}\n"
            f"  metric            {WEIGHT_METRIC}\n"
            f"  sample            {self.sample} ({self.cases} differences, seed {self.seed})\n"
            f"  min weight        {self.min_total_weight} (t=0..79), {self.min_weight_from16} (t=16..79)\n"
            f"  max / mean / med  {self.max_total_weight} / {self.mean_total_weight:.3f} / {self.median_total_weight:g}\n"
            f"  argmin difference {self.min_difference}\n"
        )


def expansion_weight_study(variant: str, sample: str = "single-bit", seed: int = 0) -> ExpansionWeightReport:
    """Schedule-difference weights of ``variant`` ("md192", "sha1", "sha0")."""
    try:
        expand = SCHEDULES[variant]
    except KeyError:
        raise ValueError(f"unknown schedule variant {variant!r}; expected one of {sorted(SCHEDULES)}") from None
    deltas = _differences(sample, seed)
    totals, tails = [], []
    for delta in deltas:
        w = expand(delta)
        totals.append(schedule_weight(w))
        tails.append(schedule_weight(w, 16))
    best = min(range(len(totals)), key=totals.__getitem__)
    return ExpansionWeightReport(
        variant=variant,
        sample=sample,
        seed=seed,
        cases=len(deltas),
        min_total_weight=min(totals),
        max_total_weight=max(totals),
        mean_total_weight=float(statistics.fmean(totals)),
        median_total_weight=float(statistics.median(totals)),
        min_weight_from16=min(tails),
        min_difference="".join(f"{x:08x}" for x in deltas[best]),
    )


# -- throughput ---------------------------------------------------------------


@dataclass(frozen=True)
class BenchReport(_KVReport):
    algorithm: str
    engine: str
    input_size: int
    repetitions: int
    warmup: int
    median_seconds: float
    median_throughput: float
    digest: str

    def to_text(self) -> str:
        return (
            f"bench  {self.algorithm} ({self.engine})\n"
            f"  input             {self.input_size} bytes x {self.repetitions} reps ({self.warmup} warm-up)\n"
            f"  median time       {self.median_seconds * 1e3:.3f} ms per digest\n"
            f"  median throughput {self.median_throughput / 1e6:.3f} MB/s\n"
        )


def benchmark(
    algorithm: str,
    input_size: int = 1 << 20,
    repetitions: int = 30,
    warmup: int = 2,
    engine: str = "auto",
    seed: int = 0,
) -> BenchReport:
    """Time ``repetitions`` digests of one fixed pseudorandom buffer."""
    if input_size < 1:
        raise ValueError("input_size must be >= 1 byte")
    if repetitions < 10:
        raise ValueError("repetitions must be >= 10")
    buf = np.random.default_rng(seed).integers(0, 256, size=input_size, dtype=np.uint8).tobytes()
    resolved = new(algorithm, engine=engine).engine
    for _ in range(warmup):
        new(algorithm, buf, engine=engine).digest()
    times, digests = [], set()
    for _ in range(repetitions):
        start = time.perf_counter()
        h = new(algorithm, engine=engine)
        h.update(buf)
        d = h.finalize()
        times.append(time.perf_counter() - start)
        digests.add(d)
    if len(digests) != 1:
        raise RuntimeError(f"{algorithm} produced {len(digests)} distinct digests for one buffer")
    median = statistics.median(times)
    return BenchReport(
        algorithm=algorithm,
        engine=resolved,
        input_size=input_size,
        repetitions=repetitions,
        warmup=warmup,
        median_seconds=median,
        median_throughput=input_size / median,
        digest=digests.pop().hex(),
    )


def throughput_ratio(md192_report: BenchReport, sha1_report: BenchReport) -> float:
    """MD-192 throughput over SHA-1 throughput; below 1 means MD-192 is slower."""
    return md192_report.median_throughput / sha1_report.median_throughput
