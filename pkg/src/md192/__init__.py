"""MD-192 hash function, SHA-1 baseline, KAT corpus and analysis tools."""

from ._merkle import FinalizedError, MessageTooLongError, pad_message, padding, parse_block, rotl
from .core import IV, MD192, ROUND_CONSTANTS, ChainState, compress_block, expand_schedule, md192, round_f1
from .sha1 import SHA1, SHA1_IV, Sha1State, sha1, sha1_compress, sha1_expand

ALGORITHMS = {"md192": MD192, "sha1": SHA1}


def new(name: str, data: bytes = b"", *, engine: str = "auto"):
    """Return a fresh streaming hasher for ``name`` ("md192" or "sha1")."""
    try:
        cls = ALGORITHMS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; expected one of {sorted(ALGORITHMS)}") from None
    return cls(data, engine=engine)


__all__ = [
    "ALGORITHMS",
    "ChainState",
    "FinalizedError",
    "IV",
    "MD192",
    "MessageTooLongError",
    "ROUND_CONSTANTS",
    "SHA1",
    "SHA1_IV",
    "Sha1State",
    "compress_block",
    "expand_schedule",
    "md192",
    "new",
    "pad_message",
    "padding",
    "parse_block",
    "rotl",
    "round_f1",
    "sha1",
    "sha1_compress",
    "sha1_expand",
]
