#!/usr/bin/env python3
"""Regenerates src/presentation_forms.inc from the Python unicodedata tables.

Covers the Arabic Presentation Forms-A/B blocks: every code point whose
compatibility decomposition is tagged <initial>, <medial>, <final> or
<isolated> maps to the decomposed sequence.
"""
import sys
import unicodedata

BLOCKS = [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]
FORM_TAGS = {"<initial>", "<medial>", "<final>", "<isolated>"}


def rows():
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            parts = unicodedata.decomposition(chr(cp)).split()
            if parts and parts[0] in FORM_TAGS:
                yield cp, [int(p, 16) for p in parts[1:]]


def main(out):
    pool = []
    entries = []
    for cp, seq in rows():
        entries.append((cp, len(pool), len(seq)))
        pool.extend(seq)
    w = out.write
    w("// Generated by tools/gen_presentation_forms.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("// NOLINTBEGIN\n")
    w("constexpr char32_t kFoldPool[] = {\n")
    for i in range(0, len(pool), 8):
        w("    " + " ".join("0x%04X," % c for c in pool[i:i + 8]) + "\n")
    w("};\n\n")
    w("constexpr FoldEntry kFoldTable[] = {\n")
    for cp, off, n in entries:
        w("    {0x%04X, %d, %d},\n" % (cp, off, n))
    w("};\n")
    w("// NOLINTEND\n")


if __name__ == "__main__":
    main(sys.stdout)
