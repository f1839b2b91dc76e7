"""Compiled multi-block compression loops.

These mirror :func:`md192.core.compress_block` and
:func:`md192.sha1.sha1_compress` step for step, but run whole buffers of
blocks under numba. The pure-Python functions stay the reference; the test
suite checks the two against each other.

Arithmetic is done in int64 with explicit 32-bit masks: numba promotes mixed
uint64/int64 expressions to float64, which silently breaks the words.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

M = 0xFFFFFFFF

AVAILABLE = njit is not None


def _md192_blocks(state, data):
    w = np.empty(80, np.int64)
    h0, h1, h2, h3, h4, h5 = state[0], state[1], state[2], state[3], state[4], state[5]
    for off in range(0, data.size, 64):
        for j in range(16):
            i = off + 4 * j
            w[j] = (
                (np.int64(data[i]) << 24)
                | (np.int64(data[i + 1]) << 16)
                | (np.int64(data[i + 2]) << 8)
                | np.int64(data[i + 3])
            )
        for t in range(16, 80):
            y = w[t - 1] ^ w[t - 2] ^ w[t - 15]
            if t >= 20:
                y ^= w[t - 20]
            r = 1 if t < 64 else 13
            w[t] = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16] ^ (((y << r) | (y >> (32 - r))) & M)
        a, b, c, d, e, f = h0, h1, h2, h3, h4, h5
        for t in range(80):
            if t < 20:
                fn = d ^ (b & (c ^ d))
                k = 0x5A827999
            elif t < 40:
                fn = b ^ c ^ d
                k = 0x6ED6EBA1
            elif t < 60:
                fn = (b & c) | (d & (b | c))
                k = 0x8FABBCDE
            else:
                fn = b ^ c ^ d
                k = 0xCA62C1D6
            p = ((((a << 5) | (a >> 27)) & M) + fn + e + k + w[t]) & M
            a, b, c, d, e, f = (p + f) & M, a, ((b << 30) | (b >> 2)) & M, c, ((d << 15) | (d >> 17)) & M, p
        h0 = (h0 + a) & M
        h1 = (h1 + b) & M
        h2 = (h2 + c) & M
        h3 = (h3 + d) & M
        h4 = (h4 + e) & M
        h5 = (h5 + f) & M
    state[0], state[1], state[2], state[3], state[4], state[5] = h0, h1, h2, h3, h4, h5


def _sha1_blocks(state, data):
    w = np.empty(80, np.int64)
    h0, h1, h2, h3, h4 = state[0], state[1], state[2], state[3], state[4]
    for off in range(0, data.size, 64):
        for j in range(16):
            i = off + 4 * j
            w[j] = (
                (np.int64(data[i]) << 24)
                | (np.int64(data[i + 1]) << 16)
                | (np.int64(data[i + 2]) << 8)
                | np.int64(data[i + 3])
            )
        for t in range(16, 80):
            x = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16]
            w[t] = ((x << 1) | (x >> 31)) & M
        a, b, c, d, e = h0, h1, h2, h3, h4
        for t in range(80):
            if t < 20:
                fn = d ^ (b & (c ^ d))
                k = 0x5A827999
            elif t < 40:
                fn = b ^ c ^ d
                k = 0x6ED9EBA1
            elif t < 60:
                fn = (b & c) | (d & (b | c))
                k = 0x8F1BBCDC
            else:
                fn = b ^ c ^ d
                k = 0xCA62C1D6
            tmp = ((((a << 5) | (a >> 27)) & M) + fn + e + k + w[t]) & M
            a, b, c, d, e = tmp, a, ((b << 30) | (b >> 2)) & M, c, d
        h0 = (h0 + a) & M
        h1 = (h1 + b) & M
        h2 = (h2 + c) & M
        h3 = (h3 + d) & M
        h4 = (h4 + e) & M
    state[0], state[1], state[2], state[3], state[4] = h0, h1, h2, h3, h4


if AVAILABLE:
    _md192_blocks = njit(cache=True, nogil=True)(_md192_blocks)
    _sha1_blocks = njit(cache=True, nogil=True)(_sha1_blocks)


def _run(fn, state: tuple[int, ...], data: bytes) -> tuple[int, ...]:
    arr = np.array(state, dtype=np.int64)
    # A writable copy keeps a single compiled signature (readonly arrays recompile).
    buf = np.frombuffer(data, dtype=np.uint8).copy()
    fn(arr, buf)
    return tuple(int(v) for v in arr)


def md192_blocks(state: tuple[int, ...], data: bytes) -> tuple[int, ...]:
    return _run(_md192_blocks, state, data)


def sha1_blocks(state: tuple[int, ...], data: bytes) -> tuple[int, ...]:
    return _run(_sha1_blocks, state, data)
