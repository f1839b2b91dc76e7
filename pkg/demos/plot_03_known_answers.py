"""
Known-answer tests
==================

Run the bundled vectors. The published SHA-1 digests are standard SHA-1 and
must match; the published MD-192 column does not match this implementation
and is shown as WARN. ``frozen.kat`` pins this implementation's own values.
"""

from md192 import kat

for name in kat.BUNDLED:
    print(f"--- {name}.kat")
    report = kat.run_kats(kat.load_bundled(name))
    print(report.to_text())

# Equivalent: `md192 kat`, or `md192 kat --file my_vectors.kat --format kv`.
