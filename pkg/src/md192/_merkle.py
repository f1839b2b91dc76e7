"""Word arithmetic, MD-strengthening padding and the streaming hasher base.

Both MD-192 and the SHA-1 baseline share everything here: 32-bit words,
512-bit blocks, big-endian byte order, and a 64-bit big-endian bit-length
trailer.
"""

from __future__ import annotations

import struct
from typing import Callable, Sequence

MASK = 0xFFFFFFFF
BLOCK_SIZE = 64
MAX_MESSAGE_BITS = 1 << 64

_BLOCK_WORDS = struct.Struct(">16I")


class MessageTooLongError(ValueError):
    """The message length does not fit the 64-bit length field."""


class FinalizedError(RuntimeError):
    """A hasher was used after :meth:`MerkleDamgardHash.finalize`."""


def rotl(x: int, n: int) -> int:
    """Rotate the 32-bit word ``x`` left by ``n`` positions (0 <= n < 32)."""
    n &= 31
    x &= MASK
    return ((x << n) | (x >> (32 - n))) & MASK


def add32(*words: int) -> int:
    return sum(words) & MASK


def padding(message_len: int) -> bytes:
    """Return the padding appended to a message of ``message_len`` bytes.

    The padding is a single ``0x80`` byte, the minimal run of zero bytes that
    brings the length to 56 mod 64, and the 64-bit big-endian bit count.
    """
    bits = message_len * 8
    if bits >= MAX_MESSAGE_BITS:
        raise MessageTooLongError(f"message of {bits} bits exceeds 2**64 - 1")
    zeros = (55 - message_len) % BLOCK_SIZE
    return b"\x80" + b"\x00" * zeros + struct.pack(">Q", bits)


def parse_block(data: bytes) -> tuple[int, ...]:
    """Split 64 bytes into sixteen big-endian 32-bit words."""
    if len(data) != BLOCK_SIZE:
        raise ValueError(f"a block is {BLOCK_SIZE} bytes, got {len(data)}")
    return _BLOCK_WORDS.unpack(data)


def pad_message(message: bytes, total_bits: int | None = None) -> list[tuple[int, ...]]:
    """Pad ``message`` and parse the result into 16-word blocks.

    ``total_bits`` overrides the length written into the trailer; it exists so
    the length limit can be exercised without materialising 2**61 bytes.
    """
    message = bytes(message)
    if total_bits is None:
        total_bits = len(message) * 8
    if total_bits >= MAX_MESSAGE_BITS:
        raise MessageTooLongError(f"message of {total_bits} bits exceeds 2**64 - 1")
    padded = message + padding(len(message))[:-8] + struct.pack(">Q", total_bits)
    return [parse_block(padded[i : i + BLOCK_SIZE]) for i in range(0, len(padded), BLOCK_SIZE)]


# Compresses a run of whole blocks: (state, data) -> new state.
BlockFunction = Callable[[tuple[int, ...], bytes], tuple[int, ...]]


class MerkleDamgardHash:
    """Streaming hasher with a ``hashlib``-style interface.

    Subclasses set ``name``, ``digest_size``, ``initial_state`` and the two
    block functions ``_python_blocks`` and ``_kernel_blocks`` (the latter may
    be ``None``). ``engine`` picks one: ``"python"``, ``"kernel"``, or
    ``"auto"`` (kernel when available). ``update`` may be called any number of times;
    ``finalize`` may be called once, after which the context rejects further
    use. ``digest``/``hexdigest`` are non-destructive and behave like their
    ``hashlib`` namesakes.
    """

    name = ""
    digest_size = 0
    block_size = BLOCK_SIZE
    initial_state: Sequence[int] = ()
    _python_blocks: BlockFunction | None = None
    _kernel_blocks: BlockFunction | None = None

    def __init__(self, data: bytes = b"", *, engine: str = "auto") -> None:
        if engine == "auto":
            engine = "kernel" if self._kernel_blocks is not None else "python"
        if engine == "kernel":
            if self._kernel_blocks is None:
                raise ValueError("compiled kernel unavailable (numba not installed)")
            self._compress_blocks = self._kernel_blocks
        elif engine == "python":
            self._compress_blocks = self._python_blocks
        else:
            raise ValueError(f"unknown engine {engine!r}")
        self.engine = engine
        self._state = tuple(self.initial_state)
        self._buffer = b""
        self._bits = 0
        self._final: bytes | None = None
        if data:
            self.update(data)

    @property
    def state(self) -> tuple[int, ...]:
        """Current chaining value (only whole blocks absorbed so far)."""
        return self._state

    @property
    def total_bits(self) -> int:
        return self._bits

    def update(self, data: bytes) -> None:
        if self._final is not None:
            raise FinalizedError(f"{self.name} context already finalized")
        data = bytes(data)
        bits = self._bits + 8 * len(data)
        if bits >= MAX_MESSAGE_BITS:
            raise MessageTooLongError(f"message of {bits} bits exceeds 2**64 - 1")
        self._bits = bits
        buf = self._buffer + data
        whole = len(buf) - len(buf) % BLOCK_SIZE
        if whole:
            self._state = self._compress_blocks(self._state, buf[:whole])
        self._buffer = buf[whole:]

    def _final_state(self) -> tuple[int, ...]:
        tail = self._buffer + padding(self._bits // 8)[:-8] + struct.pack(">Q", self._bits)
        return self._compress_blocks(self._state, tail)

    def _serialize(self, state: tuple[int, ...]) -> bytes:
        return struct.pack(f">{len(state)}I", *state)

    def finalize(self) -> bytes:
        """Pad, absorb the tail and return the digest; the context is spent."""
        if self._final is not None:
            raise FinalizedError(f"{self.name} context already finalized")
        self._final = self._serialize(self._final_state())
        return self._final

    def digest(self) -> bytes:
        if self._final is not None:
            return self._final
        return self._serialize(self._final_state())

    def hexdigest(self) -> str:
        return self.digest().hex()

    def copy(self):
        other = object.__new__(type(self))
        other.__dict__.update(self.__dict__)
        return other

    def __repr__(self) -> str:
        return f"<{self.name} hasher, {self._bits} bits absorbed>"
