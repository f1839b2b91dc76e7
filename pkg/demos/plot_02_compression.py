"""
Inside one MD-192 compression
=============================

Padding, the 80-word schedule and a step-by-step register trace for the
single block of ``"abc"``.
"""

from md192 import IV, pad_message
from md192.core import compress_block, expand_schedule, trace_compression

(block,) = pad_message(b"abc")
print("block words:", " ".join(f"{w:08x}" for w in block))

w = expand_schedule(block)
for t in range(0, 80, 8):
    print(f"W[{t:2d}..{t + 7:2d}]", " ".join(f"{x:08x}" for x in w[t : t + 8]))

# Each step computes P and Q = P + F; F takes P, A takes Q, and the other
# registers shift with rotations of 30 (B -> C) and 15 (D -> E).
trace = trace_compression(IV, block)
for step in trace[:3] + trace[-2:]:
    print(f"t={step.t:2d}  P={step.p:08x}  Q={step.q:08x}  ->", step.after.hex())

# The chaining value is the step output plus the input (feed-forward).
print("H1 =", compress_block(IV, block).hex())
