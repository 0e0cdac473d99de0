#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.cpp from Python's unicodedata."""

import sys
import unicodedata

RANGES = [
    (0x0000, 0x007F),
    (0x00A0, 0x017F),
    (0x018F, 0x018F),
    (0x0259, 0x0259),
    (0x0300, 0x036F),
    (0x1EBC, 0x1EBD),
]


def name_of(cp):
    if cp < 0x20 or cp == 0x7F:
        return "<control>"
    return unicodedata.name(chr(cp), "")


def main(out):
    rows = []
    decomps = []
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            rows.append((cp, unicodedata.combining(ch), name_of(cp)))
            d = unicodedata.decomposition(ch)
            if d and not d.startswith("<"):
                parts = [int(p, 16) for p in d.split()]
                if len(parts) == 2:
                    decomps.append((cp, parts[0], parts[1]))

    w = out.write
    w("// Generated by tools/gen_unicode_tables.py from Unicode %s data.\n"
      % unicodedata.unidata_version)
    w("// Do not edit by hand.\n\n")
    w('#include "unicode_tables.hpp"\n\n')
    w("namespace idu::unicode::detail {\n\n")
    w("const CodepointRecord kCodepointRecords[] = {\n")
    for cp, ccc, name in rows:
        w('    {0x%04X, %d, "%s"},\n' % (cp, ccc, name))
    w("};\n\n")
    w("const DecompositionRecord kDecompositions[] = {\n")
    for cp, base, mark in decomps:
        w("    {0x%04X, 0x%04X, 0x%04X},\n" % (cp, base, mark))
    w("};\n\n")
    w("std::span<const CodepointRecord> codepoint_records() { return kCodepointRecords; }\n")
    w("std::span<const DecompositionRecord> decomposition_records() { return kDecompositions; }\n\n")
    w("}  // namespace idu::unicode::detail\n")


if __name__ == "__main__":
    main(sys.stdout)
