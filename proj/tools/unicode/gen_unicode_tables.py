#!/usr/bin/env python3
# Copyright 2026 The Stylopsy Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes include/stylopsy/detail/unicode_tables.hpp from Python's unicodedata."""

import sys
import unicodedata

MAX = 0x110000


def ranges(pred):
    out, start = [], None
    for cp in range(MAX):
        ok = pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX - 1))
    return out


def cat(cp):
    return unicodedata.category(chr(cp))


def emit_ranges(name, rs):
    lines = [f"inline constexpr CodeRange {name}[] = {{"]
    for i in range(0, len(rs), 4):
        chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in rs[i:i + 4])
        lines.append(f"    {chunk},")
    lines.append("};")
    return "\n".join(lines)


def main(path):
    letters = ranges(lambda c: cat(c).startswith("L"))
    upper = ranges(lambda c: cat(c) in ("Lu", "Lt"))
    lower = ranges(lambda c: cat(c) == "Ll")
    digits = ranges(lambda c: cat(c) == "Nd")
    space = ranges(lambda c: chr(c).isspace())
    to_lower = []
    for cp in range(MAX):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            to_lower.append((cp, ord(low)))

    body = [
        "// Generated by tools/unicode/gen_unicode_tables.py "
        f"(Unicode {unicodedata.unidata_version}). Do not edit.",
        "",
        "#pragma once",
        "",
        "#include <cstdint>",
        "",
        "namespace stylopsy::detail {",
        "",
        "struct CodeRange {",
        "  char32_t first;",
        "  char32_t last;",
        "};",
        "",
        "struct CaseMapping {",
        "  char32_t from;",
        "  char32_t to;",
        "};",
        "",
        emit_ranges("kLetterRanges", letters),
        "",
        emit_ranges("kUpperRanges", upper),
        "",
        emit_ranges("kLowerRanges", lower),
        "",
        emit_ranges("kDigitRanges", digits),
        "",
        emit_ranges("kSpaceRanges", space),
        "",
        "inline constexpr CaseMapping kToLower[] = {",
    ]
    for i in range(0, len(to_lower), 4):
        body.append("    " + ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in to_lower[i:i + 4]) + ",")
    body += ["};", "", "}  // namespace stylopsy::detail", ""]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(body))


if __name__ == "__main__":
    main(sys.argv[1])
