#!/usr/bin/env python3
"""Rasterize DejaVu Sans Mono into fixed-cell bitmap glyph tables.

Emits crates/core/src/font/data.rs with one bitmask row table per glyph for
the normal and bold variants plus a replacement-box glyph. The cell keeps an
empty border row/column on every side so rendered pages have clean glyph
boundaries, and all glyphs must be pairwise distinct.
"""

import sys

from PIL import Image, ImageDraw, ImageFont

CELL_W = 12
CELL_H = 20
THRESH = 112
FONTS = {
    "NORMAL": "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf",
    "BOLD": "/usr/share/fonts/truetype/dejavu/DejaVuSansMono-Bold.ttf",
}
SIZE = 16


def raster_glyph(font, ch):
    img = Image.new("L", (CELL_W * 3, CELL_H * 3), 0)
    draw = ImageDraw.Draw(img)
    ascent, descent = font.getmetrics()
    # Horizontal: center the advance width in the cell. Vertical: center
    # ascent+descent span.
    adv = font.getlength(ch)
    x = CELL_W + (CELL_W - adv) / 2.0
    y = CELL_H + (CELL_H - (ascent + descent)) / 2.0
    draw.text((x, y), ch, font=font, fill=255)
    rows = []
    for r in range(CELL_H):
        bits = 0
        for c in range(CELL_W):
            if img.getpixel((CELL_W + c, CELL_H + r)) >= THRESH:
                bits |= 1 << c
        rows.append(bits)
    return rows


def replacement_box():
    rows = []
    for r in range(CELL_H):
        bits = 0
        for c in range(CELL_W):
            on_border = r in (2, CELL_H - 3) and 1 <= c <= CELL_W - 2
            on_side = c in (1, CELL_W - 2) and 2 <= r <= CELL_H - 3
            if on_border or on_side:
                bits |= 1 << c
        rows.append(bits)
    return rows


def check(name, glyphs):
    ok = True
    for cp, rows in glyphs.items():
        ch = chr(cp)
        if rows[0] != 0 or rows[-1] != 0:
            print(f"{name} {ch!r}: ink in top/bottom padding row", file=sys.stderr)
            ok = False
        for r in rows:
            if r & 1 or r & (1 << (CELL_W - 1)):
                print(f"{name} {ch!r}: ink in left/right padding col", file=sys.stderr)
                ok = False
                break
        if cp != 0x20 and all(r == 0 for r in rows):
            print(f"{name} {ch!r}: empty glyph", file=sys.stderr)
            ok = False
    items = sorted(glyphs.items())
    for i, (cp_a, a) in enumerate(items):
        for cp_b, b in items[i + 1:]:
            if a == b:
                print(f"{name}: {chr(cp_a)!r} == {chr(cp_b)!r}", file=sys.stderr)
                ok = False
    return ok


def emit(out):
    out.write("// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.\n")
    out.write("// Each glyph is a fixed cell; row bit k (LSB-first) is pixel column k.\n\n")
    out.write(f"pub const CELL_W: usize = {CELL_W};\n")
    out.write(f"pub const CELL_H: usize = {CELL_H};\n\n")
    all_ok = True
    for name, path in FONTS.items():
        font = ImageFont.truetype(path, SIZE)
        glyphs = {cp: raster_glyph(font, chr(cp)) for cp in range(0x20, 0x7F)}
        all_ok &= check(name, glyphs)
        out.write(f"pub const GLYPHS_{name}: [[u16; CELL_H]; 95] = [\n")
        for cp in range(0x20, 0x7F):
            rows = ", ".join(f"0x{r:03x}" for r in glyphs[cp])
            out.write(f"    [{rows}], // {chr(cp)!r}\n")
        out.write("];\n\n")
    box = replacement_box()
    rows = ", ".join(f"0x{r:03x}" for r in box)
    out.write(f"pub const GLYPH_REPLACEMENT: [u16; CELL_H] = [{rows}];\n")
    return all_ok


if __name__ == "__main__":
    with open(sys.argv[1], "w") as f:
        if not emit(f):
            sys.exit(1)
    print("ok")
