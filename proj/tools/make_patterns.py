#!/usr/bin/env python3
"""Writes the bundled Liang pattern file (data/fixture/hyphenation.pat).

The set is small and rule-generated: break before a single consonant between
vowels, between two consonants that cannot start a syllable, and before an
onset cluster that follows a consonant; keep silent final 'e' attached and
split common suffixes. A handful of word-anchored patterns
override the generic rules for words the tests pin down.
"""

import itertools
import re
import sys

VOWELS = "aeiou"
FOLLOWING_VOWELS = "aeiouy"
CONSONANTS = "bcdfghjklmnpqrstvwxz"
# Two-letter syllable onsets and digraphs that stay together.
ONSETS = {
    "bl", "br", "ch", "cl", "cr", "dr", "fl", "fr", "gl", "gr", "kn", "ph", "pl",
    "pr", "qu", "sc", "sh", "sk", "sl", "sm", "sn", "sp", "sq", "st", "sw", "th", "tr",
    "tw", "wh", "wr",
}
# Pairs that close a syllable instead.
CODAS = {"ck", "gh", "ng", "nk", "ll", "ss", "ff"}
# Three-letter onsets that must not be split internally.
LONG_ONSETS = {"chr", "phr", "sch", "scr", "shr", "spl", "spr", "squ", "str", "thr"}
# Suffixes that always start a new syllable.
SUFFIX_BREAKS = ["tion", "sion", "ture", "ware"]
SUFFIXES_AFTER_SILENT_E = ["ly", "ful", "ment", "less", "ness"]

OVERRIDES = [
    ".ap4p3l",        # app|li|ca|tion
    ".cre3a4t3ing",   # cre|at|ing
    ".wi2se",         # wise|ly
    ".fa2ce",         # face|book
] + ["1" + suffix for suffix in SUFFIX_BREAKS]


def generate():
    patterns = []
    # V1CV: a1ba
    for v1, c, v2 in itertools.product(VOWELS, CONSONANTS, FOLLOWING_VOWELS):
        if c == "x":
            patterns.append(f"{v1}x1{v2}")
        else:
            patterns.append(f"{v1}1{c}{v2}")
    # C1CV for pairs that are neither onsets nor codas; V1CCV for onsets.
    for c1, c2 in itertools.product(CONSONANTS, repeat=2):
        pair = c1 + c2
        for v in FOLLOWING_VOWELS:
            if pair in ONSETS:
                for v1 in VOWELS:
                    patterns.append(f"{v1}1{pair}{v}")
            elif pair in CODAS:
                patterns.append(f"{pair}1{v}")
            else:
                patterns.append(f"{c1}1{c2}{v}")
    # A consonant before an onset cluster closes the previous syllable: r1pro.
    for c, pair, v in itertools.product(CONSONANTS, sorted(ONSETS), FOLLOWING_VOWELS):
        if c + pair[0] in CODAS:
            continue
        # Leave the pair alone when a suffix break falls inside it (sof|tware).
        if any(suffix.startswith(pair[1] + v) for suffix in SUFFIX_BREAKS):
            continue
        patterns.append(f"{c}1{pair}{v}")
    # Long onsets stay whole and always start a syllable: wise|split.
    for onset in sorted(LONG_ONSETS):
        patterns.append(f"{onset[0]}2{onset[1]}2{onset[2]}")
        for prev, v in itertools.product(CONSONANTS + VOWELS, FOLLOWING_VOWELS):
            patterns.append(f"{prev}1{onset}{v}")
    # Silent final e never starts a syllable.
    for c in CONSONANTS:
        patterns.append(f"2{c}e.")
        for suffix in SUFFIXES_AFTER_SILENT_E:
            patterns.append(f"2{c}e1{suffix}")
    patterns.extend(OVERRIDES)
    skeletons = [re.sub(r"\d", "", p) for p in patterns]
    assert len(set(skeletons)) == len(skeletons), "two patterns share a skeleton"
    return patterns


def main(path):
    patterns = generate()
    with open(path, "w", encoding="utf-8") as out:
        out.write("# Liang hyphenation patterns for the bundled English fixture.\n")
        out.write("# Generated by tools/make_patterns.py; edit the script, not this file.\n")
        out.write("LEFTMIN=2\nRIGHTMIN=2\n")
        for p in patterns:
            out.write(p + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixture/hyphenation.pat")
