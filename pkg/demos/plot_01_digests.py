"""
Hashing with MD-192 and SHA-1
=============================

One-shot and streaming digests, and the checksum-style command line.
"""

import hashlib

import md192

# One-shot helpers return raw bytes; the hasher objects mirror hashlib.
print(md192.md192(b"abc").hex())
print(md192.MD192(b"abc").hexdigest())

# SHA-1 is bit-exact with the standard library.
assert md192.sha1(b"abc") == hashlib.sha1(b"abc").digest()

# Streaming: feed the message in arbitrary pieces.
h = md192.MD192()
for piece in (b"ab", b"", b"c"):
    h.update(piece)
print(h.hexdigest() == md192.md192(b"abc").hex())

# finalize() spends the context; digest() does not.
h = md192.new("md192", b"hello")
print(h.digest().hex())
final = h.finalize()
try:
    h.update(b"more")
except md192.FinalizedError as exc:
    print("refused:", exc)

# The same from a shell:
#
#   $ printf abc | md192 digest
#   032e5c649a6b16067a5a1885ea2e98955eb82f3687576e15  -
#   $ md192 digest --alg sha1 --string abc
#   a9993e364706816aba3e25717850c26c9cd0d89d  "abc"
