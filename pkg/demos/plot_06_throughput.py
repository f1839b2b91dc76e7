"""
Throughput
==========

MD-192 does more work per block than SHA-1: one more register, one more
addition per step and a schedule with up to eight taps. Compare both on a
1 MiB buffer with the compiled kernels, then on a smaller buffer with the
pure-Python reference code.
"""

from md192 import analysis

for engine, size, reps in (("kernel", 1 << 20, 30), ("python", 1 << 14, 10)):
    md = analysis.benchmark("md192", size, reps, engine=engine)
    sh = analysis.benchmark("sha1", size, reps, engine=engine)
    print(md.to_text())
    print(sh.to_text())
    print(f"{engine}: md192/sha1 throughput ratio {analysis.throughput_ratio(md, sh):.3f}\n")
