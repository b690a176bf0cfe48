#!/usr/bin/env python3
"""Regenerate src/spamvision/fontdata.py from DejaVu Sans Mono.

The renderer uses a fixed-pitch 8x16 cell font in which every glyph's ink
is normalized to span columns 0..5 exactly (two blank columns of right
bearing). That normalization is what makes rasterized text unambiguous to
segment: between letters the blank gap is always 2 px per scale unit and a
space is always wider, and no glyph ever splits into two ink runs.

Run from the repository root:

    python tools/make_font_table.py

Requires Pillow and the DejaVuSansMono.ttf shipped with matplotlib. The
generated module is committed, so this only needs to run when changing the
font design.
"""

import os
import sys

import numpy as np
from PIL import Image, ImageDraw, ImageFont

SIZE = 13
CELL_W, CELL_H = 8, 16
INK_W = 6

# Target vertical zones inside the 16-row cell. The x-height band spans 12
# rows so that any line of lowercase text is at least as tall as the OCR's
# minimum legible glyph height at the base size; the em squashes into the
# two rows above, descenders into the two below.
DST_ASC_TOP = 0
DST_X_TOP = 2
DST_BASELINE = 14  # first row below the baseline
DST_BOTTOM = 16

HOMOGLYPHS = {
    0x0430: "a",  # cyrillic small a
    0x0435: "e",  # cyrillic small ie
    0x043E: "o",  # cyrillic small o
    0x0440: "p",  # cyrillic small er
    0x0441: "c",  # cyrillic small es
    0x0443: "y",  # cyrillic small u
    0x0445: "x",  # cyrillic small ha
    0x03BF: "o",  # greek small omicron
    0x03BD: "v",  # greek small nu
}

REPLACEMENT_CODEPOINT = 0x25A1  # white square, drawn for unsupported chars

# Hand-drawn overrides for glyphs whose stretched DejaVu shapes collide or
# degenerate (tight ink crops must stay pairwise distinct).
PATCHES = {
    "-": ["######",
          "#....#",
          "######"],
    ".": [".####.",
          "######",
          ".####."],
    "_": ["######",
          "##..##",
          "######"],
    "~": ["##..##",
          ".####."],
    "`": ["###...",
          ".#####"],
    "'": ["...###",
          "...###",
          "..###.",
          "###..."],
    '"': ["##..##",
          "######",
          "##..##"],
    "^": [".####.",
          "##..##",
          "#....#"],
    ":": [".####.",
          "######",
          "......",
          "......",
          "......",
          ".####.",
          "######"],
    ";": [".####.",
          "######",
          "......",
          "......",
          ".####.",
          "######",
          "..###.",
          ".###.."],
}
PATCH_TOP = {"-": 7, ".": 11, "_": 13, "~": 7, "`": 0, "'": 0, '"': 0, "^": 0,
             ":": 5, ";": 6}

REPLACEMENT_PATTERN = [
    "######",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "#....#",
    "######",
]
REPLACEMENT_TOP = 2


def find_ttf():
    import matplotlib

    path = os.path.join(
        os.path.dirname(matplotlib.__file__), "mpl-data", "fonts", "ttf",
        "DejaVuSansMono.ttf",
    )
    if not os.path.exists(path):
        sys.exit(f"font file not found: {path}")
    return path


def nn_resample_cols(block, new_w):
    idx = np.arange(new_w) * block.shape[1] // new_w
    return block[:, idx]


def pattern_cell(rows, top):
    cell = np.zeros((CELL_H, CELL_W), bool)
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            if ch == "#":
                cell[top + r, c] = True
    return cell


_RAW_BASELINE = 20


def raw_mask(font, ascent, ch):
    img = Image.new("L", (24, 30), 0)
    ImageDraw.Draw(img).text((6, _RAW_BASELINE - ascent), ch, fill=255, font=font)
    return np.asarray(img) > 127


def row_map(font, ascent):
    """Global dst-row -> src-row map realizing the large-x-height zones."""

    def ink_rows(ch):
        return raw_mask(font, ascent, ch).any(axis=1).nonzero()[0]

    asc_top = min(ink_rows("b").min(), ink_rows("X").min(), ink_rows("0").min())
    x_top = ink_rows("x").min()
    desc_bottom = ink_rows("g").max()
    src = np.empty(CELL_H, dtype=int)
    for dst in range(DST_ASC_TOP, DST_X_TOP):  # em zone (squashed)
        span = DST_X_TOP - DST_ASC_TOP
        src[dst] = asc_top + (dst - DST_ASC_TOP) * (x_top - asc_top) // span
    for dst in range(DST_X_TOP, DST_BASELINE):  # x zone (stretched)
        span = DST_BASELINE - DST_X_TOP
        src[dst] = x_top + (dst - DST_X_TOP) * (_RAW_BASELINE - x_top) // span
    for dst in range(DST_BASELINE, DST_BOTTOM):  # descender zone
        span = DST_BOTTOM - DST_BASELINE
        src[dst] = _RAW_BASELINE + (dst - DST_BASELINE) * (
            desc_bottom + 1 - _RAW_BASELINE) // span
    return src


def build_cell(font, ascent, ch, src_rows):
    mask = raw_mask(font, ascent, ch)
    remapped = mask[src_rows]
    cols = remapped.any(axis=0).nonzero()[0]
    if len(cols) == 0:
        return np.zeros((CELL_H, CELL_W), bool)
    block = nn_resample_cols(remapped[:, cols.min():cols.max() + 1], INK_W)
    rows = block.any(axis=1).nonzero()[0]
    for c in range(INK_W):  # bridge any internally blank column
        if not block[rows.min():rows.max() + 1, c].any():
            block[(rows.min() + rows.max()) // 2, c] = True
    cell = np.zeros((CELL_H, CELL_W), bool)
    cell[:, :INK_W] = block
    return cell


def tight_crop(cell):
    rows = cell.any(axis=1).nonzero()[0]
    if len(rows) == 0:
        return None
    return cell[rows.min():rows.max() + 1, :INK_W]


def nn_resample(block, new_h, new_w):
    rows = np.arange(new_h) * block.shape[0] // new_h
    cols = np.arange(new_w) * block.shape[1] // new_w
    return block[rows][:, cols]


def verify(cells):
    crops = {}
    for cp, cell in sorted(cells.items()):
        if cp == 32:
            assert not cell.any(), "space must be empty"
            continue
        crop = tight_crop(cell)
        assert crop is not None, f"empty glyph {cp}"
        assert crop.any(axis=0).all(), f"blank ink column in {chr(cp)!r}"
        assert not cell[:, INK_W:].any(), f"ink in bearing columns of {chr(cp)!r}"
        crops[cp] = crop

    # No template, resampled to another template's crop shape, may equal
    # that crop bit for bit: an exact tie would deterministically misread
    # the glyph with the higher codepoint. Near-ties are reported so the
    # margin to the OCR's 0.85 acceptance threshold stays visible.
    for cp_a, crop_a in crops.items():
        for cp_b, crop_b in crops.items():
            if cp_a == cp_b:
                continue
            resampled = nn_resample(crop_a, *crop_b.shape)
            agree = (resampled == crop_b).mean()
            if agree == 1.0:
                raise AssertionError(
                    f"{chr(cp_a)!r} resampled to {chr(cp_b)!r}'s shape is "
                    "bit-identical")
            if agree > 0.93:
                print(f"note: {chr(cp_a)!r} vs {chr(cp_b)!r} agreement "
                      f"{agree:.3f}")


def emit(cells, out_path):
    lines = [
        '"""Embedded 8x16 bitmap font (generated by tools/make_font_table.py).',
        "",
        "Each glyph is 16 row bytes, bit 7 = leftmost column. Ink always spans",
        "columns 0..5; columns 6..7 are blank right bearing. Homoglyph",
        "codepoints map onto their Latin partner's bitmap, bit for bit.",
        '"""',
        "",
        "CELL_WIDTH = 8",
        "CELL_HEIGHT = 16",
        "INK_WIDTH = 6",
        "",
        f"REPLACEMENT_CODEPOINT = {REPLACEMENT_CODEPOINT:#06x}",
        "",
        "HOMOGLYPH_TO_LATIN = {",
    ]
    for cp, latin in sorted(HOMOGLYPHS.items()):
        lines.append(f"    {cp:#06x}: {ord(latin)},  # {chr(cp)} -> {latin}")
    lines.append("}")
    lines.append("")
    lines.append("# codepoint -> 16 row bytes, hex encoded")
    lines.append("GLYPH_ROWS = {")
    for cp, cell in sorted(cells.items()):
        rows = []
        for r in range(CELL_H):
            byte = 0
            for c in range(CELL_W):
                if cell[r, c]:
                    byte |= 0x80 >> c
            rows.append(byte)
        hexrows = "".join(f"{b:02x}" for b in rows)
        label = chr(cp) if 33 <= cp < 127 else f"U+{cp:04X}"
        lines.append(f'    {cp}: "{hexrows}",  # {label}')
    lines.append("}")
    lines.append("")
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {out_path} ({len(cells)} glyphs)")


def main():
    font = ImageFont.truetype(find_ttf(), SIZE)
    ascent, _ = font.getmetrics()
    src_rows = row_map(font, ascent)
    cells = {32: np.zeros((CELL_H, CELL_W), bool)}
    for cp in range(33, 127):
        ch = chr(cp)
        if ch in PATCHES:
            cells[cp] = pattern_cell(PATCHES[ch], PATCH_TOP[ch])
        else:
            cells[cp] = build_cell(font, ascent, ch, src_rows)
    cells[REPLACEMENT_CODEPOINT] = pattern_cell(REPLACEMENT_PATTERN, REPLACEMENT_TOP)
    verify(cells)
    out = os.path.join(
        os.path.dirname(__file__), "..", "src", "spamvision", "fontdata.py"
    )
    emit(cells, os.path.normpath(out))


if __name__ == "__main__":
    main()
