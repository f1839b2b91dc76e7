"""SHA-1 (FIPS 180-1), used as the correctness anchor and speed baseline.

``sha1_expand(block, rotation=0)`` gives the SHA-0 schedule. Only the
schedule is offered for SHA-0; there is no SHA-0 digest.
"""

from __future__ import annotations

import struct
from typing import NamedTuple, Sequence

from . import _kernels
from ._merkle import BLOCK_SIZE, MASK, MerkleDamgardHash, pad_message, parse_block, rotl

__all__ = ["Sha1State", "SHA1_IV", "SHA1_CONSTANTS", "sha1_expand", "sha1_compress", "SHA1", "sha1"]


class Sha1State(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int

    def to_bytes(self) -> bytes:
        return struct.pack(">5I", *self)

    def hex(self) -> str:
        return self.to_bytes().hex()


SHA1_IV = Sha1State(0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0)
SHA1_CONSTANTS = (0x5A827999, 0x6ED9EBA1, 0x8F1BBCDC, 0xCA62C1D6)


def sha1_expand(block: Sequence[int], rotation: int = 1) -> list[int]:
    """80-word SHA-1 schedule; ``rotation=0`` yields the SHA-0 schedule."""
    if len(block) != 16:
        raise ValueError(f"a block has 16 words, got {len(block)}")
    w = [x & MASK for x in block]
    for t in range(16, 80):
        w.append(rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], rotation))
    return w


def sha1_compress(state: Sequence[int], block: Sequence[int]) -> Sha1State:
    w = sha1_expand(block)
    a, b, c, d, e = state
    for t in range(80):
        if t < 20:
            f = (b & c) | (~b & d & MASK)
        elif t < 40 or t >= 60:
            f = b ^ c ^ d
        else:
            f = (b & c) | (c & d) | (d & b)
        tmp = (rotl(a, 5) + f + e + SHA1_CONSTANTS[t // 20] + w[t]) & MASK
        a, b, c, d, e = tmp, a, rotl(b, 30), c, d
    return Sha1State(*((x + y) & MASK for x, y in zip((a, b, c, d, e), state)))


def _python_blocks(state: tuple[int, ...], data: bytes) -> tuple[int, ...]:
    for i in range(0, len(data), BLOCK_SIZE):
        state = sha1_compress(state, parse_block(data[i : i + BLOCK_SIZE]))
    return tuple(state)


class SHA1(MerkleDamgardHash):
    name = "sha1"
    digest_size = 20
    initial_state = SHA1_IV
    _python_blocks = staticmethod(_python_blocks)
    _kernel_blocks = staticmethod(_kernels.sha1_blocks) if _kernels.AVAILABLE else None


def sha1(data: bytes) -> bytes:
    return SHA1(data).digest()


def sha1_reference(data: bytes) -> bytes:
    state = SHA1_IV
    for block in pad_message(data):
        state = sha1_compress(state, block)
    return state.to_bytes()
