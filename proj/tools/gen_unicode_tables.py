#!/usr/bin/env python3
"""Regenerate src/unicode_data.inc from the Python unicodedata module.

Emits the lookup tables behind lingloop's text normalization:
  * alphabetic code point ranges (general category L*)
  * 1:1 lowercase fold pairs
  * nonzero canonical combining classes
  * fully expanded canonical decompositions (Hangul excluded, handled
    arithmetically at runtime)
  * primary composition pairs (composition exclusions already applied,
    since pairs are kept only when NFC actually recomposes them)
  * whitespace code points

Usage: python3 tools/gen_unicode_tables.py > src/unicode_data.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def canonical_decomposition(cp: int):
    """Direct (one-level) canonical decomposition, or None."""
    if is_hangul_syllable(cp):
        return None
    raw = unicodedata.decomposition(chr(cp))
    if not raw or raw.startswith("<"):
        return None
    return [int(f, 16) for f in raw.split()]


def full_decomposition(cp: int):
    parts = canonical_decomposition(cp)
    if parts is None:
        return [cp]
    out = []
    for p in parts:
        out.extend(full_decomposition(p))
    return out


def code_points():
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def gather():
    alpha_ranges = []
    for cp in code_points():
        if unicodedata.category(chr(cp)).startswith("L"):
            if alpha_ranges and alpha_ranges[-1][1] == cp - 1:
                alpha_ranges[-1][1] = cp
            else:
                alpha_ranges.append([cp, cp])

    folds = []
    for cp in code_points():
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            folds.append((cp, ord(low)))

    ccc = []
    for cp in code_points():
        k = unicodedata.combining(chr(cp))
        if k != 0:
            ccc.append((cp, k))

    decomp_index = []
    decomp_pool = []
    for cp in code_points():
        if canonical_decomposition(cp) is None:
            continue
        expanded = full_decomposition(cp)
        decomp_index.append((cp, len(decomp_pool), len(expanded)))
        decomp_pool.extend(expanded)

    pairs = []
    for cp in code_points():
        parts = canonical_decomposition(cp)
        if parts is None or len(parts) != 2:
            continue
        a, b = parts
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()

    spaces = [cp for cp in code_points() if chr(cp).isspace()]
    return alpha_ranges, folds, ccc, decomp_index, decomp_pool, pairs, spaces


def dump(out):
    alpha, folds, ccc, dindex, dpool, pairs, spaces = gather()
    w = out.write
    w("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n")
    w(f"// Source: Python unicodedata, UCD version {unicodedata.unidata_version}\n\n")

    w(f"inline constexpr CpRange kAlphabeticRanges[{len(alpha)}] = {{\n")
    for lo, hi in alpha:
        w(f"  {{0x{lo:X}, 0x{hi:X}}},\n")
    w("};\n\n")

    w(f"inline constexpr CpPair kFoldPairs[{len(folds)}] = {{\n")
    for cp, f in folds:
        w(f"  {{0x{cp:X}, 0x{f:X}}},\n")
    w("};\n\n")

    w(f"inline constexpr CpClass kCombiningClasses[{len(ccc)}] = {{\n")
    for cp, k in ccc:
        w(f"  {{0x{cp:X}, {k}}},\n")
    w("};\n\n")

    w(f"inline constexpr DecompEntry kDecompIndex[{len(dindex)}] = {{\n")
    for cp, off, n in dindex:
        w(f"  {{0x{cp:X}, {off}, {n}}},\n")
    w("};\n\n")

    w(f"inline constexpr char32_t kDecompPool[{len(dpool)}] = {{\n")
    for i in range(0, len(dpool), 12):
        w("  " + ", ".join(f"0x{c:X}" for c in dpool[i:i + 12]) + ",\n")
    w("};\n\n")

    w(f"inline constexpr ComposePair kComposePairs[{len(pairs)}] = {{\n")
    for a, b, c in pairs:
        w(f"  {{0x{a:X}, 0x{b:X}, 0x{c:X}}},\n")
    w("};\n\n")

    w(f"inline constexpr char32_t kWhitespace[{len(spaces)}] = {{\n")
    w("  " + ", ".join(f"0x{c:X}" for c in spaces) + ",\n")
    w("};\n")


if __name__ == "__main__":
    dump(sys.stdout)
