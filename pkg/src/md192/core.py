"""MD-192: a SHA-1-style hash with six chaining words and a denser schedule.

The block schedule mixes in a rotated XOR of the three (later four) nearest
back-taps on top of the SHA-0 recurrence, and the step function carries a
sixth register ``F`` that receives the SHA-1-style step value while ``A``
gets that value plus the old ``F``.

Everything in this module is plain Python and written for clarity; the
streaming :class:`MD192` hasher delegates bulk work to the compiled kernel in
:mod:`md192._kernels` when numba is available.
"""

from __future__ import annotations

import struct
from typing import Iterator, NamedTuple, Sequence

from . import _kernels
from ._merkle import (
    BLOCK_SIZE,
    MASK,
    MerkleDamgardHash,
    pad_message,
    parse_block,
    rotl,
)

__all__ = [
    "ChainState",
    "IV",
    "ROUND_CONSTANTS",
    "pad_message",
    "parse_block",
    "StepTrace",
    "round_f1",
    "expand_schedule",
    "compress_block",
    "compress_rounds",
    "trace_compression",
    "MD192",
    "md192",
    "md192_reference",
    "new",
]


class ChainState(NamedTuple):
    """Six-word MD-192 chaining value (registers A..F)."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def to_bytes(self) -> bytes:
        return struct.pack(">6I", *self)

    def hex(self) -> str:
        return self.to_bytes().hex()


IV = ChainState(0x01234567, 0x89ABCDEF, 0xFEDCBA98, 0x76543210, 0xC3D2E1F0, 0x1F83D9AB)

# The third value is 0x8fabbcde, not SHA-1's 0x8f1bbcdc.
ROUND_CONSTANTS = (0x5A827999, 0x6ED6EBA1, 0x8FABBCDE, 0xCA62C1D6)

ROTATE_A = 5
ROTATE_B = 30
ROTATE_D = 15


def _if(b: int, c: int, d: int) -> int:
    return (b & c) | (~b & d & MASK)


def _xor(b: int, c: int, d: int) -> int:
    return b ^ c ^ d


def _maj(b: int, c: int, d: int) -> int:
    return (b & c) | (c & d) | (d & b)


_ROUND_FUNCTIONS = (_if, _xor, _maj, _xor)


def round_f1(round_index: int, b: int, c: int, d: int) -> int:
    """Boolean function of round ``round_index`` (0..3): IF, XOR, MAJ, XOR."""
    return _ROUND_FUNCTIONS[round_index](b, c, d)


def expand_schedule(block: Sequence[int]) -> list[int]:
    """Expand sixteen block words into the 80-word MD-192 schedule.

    For ``t >= 16``::

        W[t] = W[t-3] ^ W[t-8] ^ W[t-14] ^ W[t-16] ^ rotl(X, r)
        X    = W[t-1] ^ W[t-2] ^ W[t-15] (^ W[t-20] once t >= 20)
        r    = 1 for t < 64, 13 afterwards
    """
    if len(block) != 16:
        raise ValueError(f"a block has 16 words, got {len(block)}")
    w = [x & MASK for x in block]
    for t in range(16, 80):
        x = w[t - 1] ^ w[t - 2] ^ w[t - 15]
        if t >= 20:
            x ^= w[t - 20]
        w.append(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16] ^ rotl(x, 1 if t < 64 else 13))
    return w


class StepTrace(NamedTuple):
    """Registers before one step, and the two sums computed from them."""

    t: int
    before: ChainState
    p: int
    q: int
    after: ChainState


def _steps(state: Sequence[int], schedule: Sequence[int]) -> Iterator[StepTrace]:
    a, b, c, d, e, f = state
    for t in range(80):
        r = t // 20
        p = (rotl(a, ROTATE_A) + round_f1(r, b, c, d) + e + ROUND_CONSTANTS[r] + schedule[t]) & MASK
        q = (p + f) & MASK
        before = ChainState(a, b, c, d, e, f)
        a, b, c, d, e, f = q, a, rotl(b, ROTATE_B), c, rotl(d, ROTATE_D), p
        yield StepTrace(t, before, p, q, ChainState(a, b, c, d, e, f))


def compress_rounds(state: Sequence[int], block: Sequence[int]) -> ChainState:
    """Run the 80 steps on ``block`` and return the registers without feed-forward."""
    last = None
    for last in _steps(state, expand_schedule(block)):
        pass
    return last.after


def compress_block(state: Sequence[int], block: Sequence[int]) -> ChainState:
    """Compress one 16-word block into the chaining value ``state``."""
    out = compress_rounds(state, block)
    return ChainState(*((x + y) & MASK for x, y in zip(out, state)))


def trace_compression(state: Sequence[int], block: Sequence[int]) -> list[StepTrace]:
    """Per-step register trace of one compression, for inspection and tests."""
    return list(_steps(state, expand_schedule(block)))


def _python_blocks(state: tuple[int, ...], data: bytes) -> tuple[int, ...]:
    for i in range(0, len(data), BLOCK_SIZE):
        state = compress_block(state, parse_block(data[i : i + BLOCK_SIZE]))
    return tuple(state)


class MD192(MerkleDamgardHash):
    """Streaming MD-192.

    >>> MD192(b"abc").hexdigest()
    '032e5c649a6b16067a5a1885ea2e98955eb82f3687576e15'
    """

    name = "md192"
    digest_size = 24
    initial_state = IV
    _python_blocks = staticmethod(_python_blocks)
    _kernel_blocks = staticmethod(_kernels.md192_blocks) if _kernels.AVAILABLE else None

    @property
    def state(self) -> ChainState:
        return ChainState(*self._state)


def new(data: bytes = b"", *, engine: str = "auto") -> MD192:
    return MD192(data, engine=engine)


def md192(data: bytes) -> bytes:
    """One-shot MD-192 digest (24 bytes)."""
    return MD192(data).digest()


def md192_reference(data: bytes) -> bytes:
    """One-shot digest through :func:`pad_message` and :func:`compress_block` only."""
    state = IV
    for block in pad_message(data):
        state = compress_block(state, block)
    return state.to_bytes()
