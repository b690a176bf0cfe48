"""Runtime access to the embedded bitmap font.

Glyphs are 8x16 binary cells with ink normalized to columns 0..5. The
homoglyph codepoints (Cyrillic/Greek look-alikes) resolve to the same
bitmap object as their Latin partner, which is what makes source-level
character substitution invisible in the rendered image. Codepoints outside
the repertoire draw as a replacement box.
"""

from __future__ import annotations

import numpy as np

from . import fontdata

CELL_WIDTH = fontdata.CELL_WIDTH
CELL_HEIGHT = fontdata.CELL_HEIGHT
INK_WIDTH = fontdata.INK_WIDTH
REPLACEMENT_CODEPOINT = fontdata.REPLACEMENT_CODEPOINT
HOMOGLYPH_TO_LATIN = dict(fontdata.HOMOGLYPH_TO_LATIN)
LATIN_TO_HOMOGLYPHS: dict[int, tuple[int, ...]] = {}
for _homo, _latin in sorted(HOMOGLYPH_TO_LATIN.items()):
    LATIN_TO_HOMOGLYPHS.setdefault(_latin, ())
    LATIN_TO_HOMOGLYPHS[_latin] += (_homo,)


def _decode(hexrows: str) -> np.ndarray:
    rows = bytes.fromhex(hexrows)
    bits = np.unpackbits(np.frombuffer(rows, dtype=np.uint8).reshape(-1, 1), axis=1)
    return bits.astype(bool)


_BITMAPS: dict[int, np.ndarray] = {}
for _cp, _hexrows in fontdata.GLYPH_ROWS.items():
    bitmap = _decode(_hexrows)
    bitmap.setflags(write=False)
    _BITMAPS[_cp] = bitmap

# Codepoints the renderer draws with a real shape (homoglyphs included).
REPERTOIRE = frozenset(_BITMAPS) | frozenset(HOMOGLYPH_TO_LATIN)


def glyph_bitmap(codepoint: int) -> np.ndarray:
    """8x16 bool bitmap for a codepoint; replacement box if unsupported."""
    codepoint = HOMOGLYPH_TO_LATIN.get(codepoint, codepoint)
    bitmap = _BITMAPS.get(codepoint)
    if bitmap is None:
        return _BITMAPS[REPLACEMENT_CODEPOINT]
    return bitmap


def has_glyph(codepoint: int) -> bool:
    return codepoint in REPERTOIRE


def bold_bitmap(bitmap: np.ndarray) -> np.ndarray:
    """Double-strike variant: the bitmap OR-ed with itself shifted 1 px right."""
    out = bitmap.copy()
    out[:, 1:] |= bitmap[:, :-1]
    return out


def template_codepoints() -> list[int]:
    """Codepoints the OCR matches against: visible ASCII, lowest-first.

    Homoglyphs are deliberately absent (they share bitmaps with Latin, and
    the lowest-codepoint tie-break would pick the Latin form anyway); the
    replacement box is excluded so unreadable content never leaks into text.
    """
    return [cp for cp in sorted(_BITMAPS) if 33 <= cp < 127]
