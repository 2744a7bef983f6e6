#!/usr/bin/env python3
"""Extract the digit matrices from the source text into a C++ asset file.

Keeps each row verbatim (minus TeX control characters) so the embedded assets
can be diffed against the source document by eye.
"""
import re
import sys

SRC = "paper.md"
OUT = "src/paper_assets.cpp"


def main():
    text = open(SRC).read()
    blocks = []
    for m in re.finditer(r"\\begin\{array\}\{[^}]*\}(.*?)\\end\{array\}", text, re.S):
        body = m.group(1)
        rows = []
        ok = True
        for raw in body.split("\\\\"):
            line = raw.replace("&", " ").replace("$", " ").strip()
            line = re.sub(r"\s+", " ", line)
            if not line:
                continue
            digits = line.replace(" ", "")
            if not digits or not re.fullmatch(r"[0-3]+", digits):
                ok = False
                break
            rows.append((line, len(digits)))
        if ok and len(rows) >= 2 and len({w for _, w in rows}) == 1:
            blocks.append(([r for r, _ in rows], rows[0][1]))

    # Identify blocks by shape.
    named = {}
    for rows, width in blocks:
        shape = (len(rows), width)
        if shape == (6, 32):
            name = "RM15"
        elif shape == (7, 40):
            name = "G40"
        elif shape == (7, 33):
            name = "C40_7PRIME_A"
        elif width == 32 - len(rows) and 7 <= len(rows) <= 15:
            name = f"C32_{len(rows)}"
        elif width == 40 - len(rows) and 8 <= len(rows) <= 19:
            name = f"C40_{len(rows)}"
        else:
            print(f"warning: unmatched block shape {shape}", file=sys.stderr)
            continue
        if name in named:
            print(f"error: duplicate block for {name}", file=sys.stderr)
            sys.exit(1)
        named[name] = rows

    expect = (
        ["RM15", "G40", "C40_7PRIME_A"]
        + [f"C32_{i}" for i in range(7, 16)]
        + [f"C40_{i}" for i in range(8, 20)]
    )
    missing = [n for n in expect if n not in named]
    if missing:
        print(f"error: missing blocks: {missing}", file=sys.stderr)
        sys.exit(1)

    with open(OUT, "w") as f:
        f.write("// Verbatim matrix transcriptions backing the paperdata registry.\n")
        f.write("// Generated by scripts/extract_assets.py; do not edit rows by hand.\n\n")
        f.write('#include "paper_assets.hpp"\n\nnamespace z4forge::paperdata::assets {\n\n')
        for name in expect:
            f.write(f"const char* const k{name} = R\"(\n")
            for row in named[name]:
                f.write(row + "\n")
            f.write(")\";\n\n")
        f.write("}  // namespace z4forge::paperdata::assets\n")
    print(f"wrote {OUT}: {len(named)} matrices")


if __name__ == "__main__":
    main()
