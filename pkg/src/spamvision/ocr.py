"""Recover the perceived text from a rendered email image.

The approach is template matching against the renderer's own font, which
keeps the component deterministic and exactly testable: binarize against
the locally dominant background color, segment ink rows into lines and ink
columns into cells, then score each cell against every glyph template.
Content that a human cannot see (no contrast, sub-legible size, not drawn
at all) produces no ink and therefore no text, which is the entire point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import font
from .render import Raster, luminance


@dataclass
class OcrConfig:
    contrast_threshold: float = 32.0  # luminance units out of 255
    match_threshold: float = 0.85  # fraction of agreeing pixels
    min_glyph_height: int = 12  # px; smaller print is treated as illegible
    space_gap_factor: float = 0.5  # of the line's median cell width
    background_window: int = 24  # px side of the local-mode square

    def __post_init__(self):
        if not 0 < self.match_threshold <= 1:
            raise ValueError("match_threshold must be in (0, 1]")
        if self.contrast_threshold < 1:
            raise ValueError("contrast_threshold must be >= 1")


@dataclass
class InkMask:
    width: int
    height: int
    mask: np.ndarray  # (height, width) bool


@dataclass
class TextLine:
    top: int
    bottom: int  # inclusive ink row range of the line band
    cells: list[tuple[int, int]]  # inclusive (first, last) ink column runs


@dataclass
class OcrCell:
    x: int
    y: int
    width: int
    height: int
    codepoint: int | None
    score: float


@dataclass
class OcrResult:
    text: str
    cells: list[OcrCell] = field(default_factory=list)

    @property
    def n_unmatched(self) -> int:
        return sum(1 for c in self.cells if c.codepoint is None)


_MAX_PALETTE = 64


def _box_counts(mask: np.ndarray, window: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-pixel (count of True in window, pixels of window inside image)."""
    h, w = mask.shape
    sat = np.zeros((h + 1, w + 1), dtype=np.int32)
    np.cumsum(mask, axis=0, out=sat[1:, 1:])
    np.cumsum(sat[1:, 1:], axis=1, out=sat[1:, 1:])
    half = window // 2
    r0 = np.clip(np.arange(h) - half, 0, h)
    r1 = np.clip(np.arange(h) - half + window, 0, h)
    c0 = np.clip(np.arange(w) - half, 0, w)
    c1 = np.clip(np.arange(w) - half + window, 0, w)
    counts = sat[r1][:, c1] - sat[r0][:, c1] - sat[r1][:, c0] + sat[r0][:, c0]
    inside = np.outer(r1 - r0, c1 - c0).astype(np.int32)
    return counts, inside


def binarize(img: Raster, cfg: OcrConfig | None = None) -> InkMask:
    """Mark pixels as ink when they contrast with the local background.

    The local background of a pixel is the modal color inside the
    ``background_window`` square centered on it (clipped at the borders,
    ties to the numerically lowest RGB). A pixel is ink iff its luminance
    differs from the local background's by at least ``contrast_threshold``.
    """
    cfg = cfg or OcrConfig()
    pixels = img.pixels
    packed = (
        pixels[..., 0].astype(np.int32) << 16
        | pixels[..., 1].astype(np.int32) << 8
        | pixels[..., 2].astype(np.int32)
    )
    palette, totals = np.unique(packed, return_counts=True)
    if len(palette) > _MAX_PALETTE:
        # Adversarially colorful pages: quantize to 4 bits per channel for
        # the mode search so the pass stays linear in the pixel count.
        packed = packed & 0x0F0F0F0 | 0x080808
        palette, totals = np.unique(packed, return_counts=True)
    # Window area outside the image counts toward the page-wide modal
    # color, as if the page continued in its dominant background.
    page_mode = int(palette[np.argmax(totals)])
    window_area = cfg.background_window * cfg.background_window
    best_count = np.full(packed.shape, -1, dtype=np.int32)
    best_color = np.zeros(packed.shape, dtype=np.int32)
    for color in palette.tolist():  # ascending: lowest RGB wins ties
        counts, inside = _box_counts(packed == color, cfg.background_window)
        if color == page_mode:
            counts = counts + (window_area - inside)
        better = counts > best_count
        best_count[better] = counts[better]
        best_color[better] = color
    mode_rgb = np.stack(
        [best_color >> 16 & 0xFF, best_color >> 8 & 0xFF, best_color & 0xFF],
        axis=-1,
    )
    contrast = np.abs(luminance(pixels) - luminance(mode_rgb))
    return InkMask(img.width, img.height,
                   mask=contrast >= cfg.contrast_threshold)


def _runs(flags: np.ndarray) -> list[tuple[int, int]]:
    """Inclusive (start, end) index pairs of maximal True runs."""
    idx = np.flatnonzero(flags)
    if idx.size == 0:
        return []
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([idx[0]], idx[breaks + 1]))
    ends = np.concatenate((idx[breaks], [idx[-1]]))
    return list(zip(starts.tolist(), ends.tolist()))


def segment(mask: InkMask, cfg: OcrConfig | None = None) -> list[TextLine]:
    """Split the ink mask into line bands and per-line cell column runs.

    Bands shorter than ``min_glyph_height`` (tiny print) and cells
    narrower than 2 px (specks) are discarded.
    """
    cfg = cfg or OcrConfig()
    grid = mask.mask
    lines = []
    for top, bottom in _runs(grid.any(axis=1)):
        if bottom - top + 1 < cfg.min_glyph_height:
            continue
        band = grid[top:bottom + 1]
        cells = [(c0, c1) for c0, c1 in _runs(band.any(axis=0))
                 if c1 - c0 + 1 >= 2]
        if cells:
            lines.append(TextLine(top=top, bottom=bottom, cells=cells))
    return lines


class TemplateSet:
    """Glyph templates pre-cropped to their ink, with per-size caches."""

    def __init__(self, codepoints=None):
        self.codepoints = list(codepoints or font.template_codepoints())
        self.crops = []
        for cp in self.codepoints:
            bitmap = font.glyph_bitmap(cp)
            rows = bitmap.any(axis=1).nonzero()[0]
            cols = bitmap.any(axis=0).nonzero()[0]
            self.crops.append(
                bitmap[rows.min():rows.max() + 1, cols.min():cols.max() + 1])
        self._cache: dict[tuple[int, int], np.ndarray] = {}

    def _resample(self, crop, width, height):
        rows = np.arange(height) * crop.shape[0] // height
        cols = np.arange(width) * crop.shape[1] // width
        return crop[rows][:, cols]

    def stacks(self, width: int, height: int) -> np.ndarray:
        """(n_templates, 2, height, width): regular and bold variants.

        The bold variant mirrors rasterization exactly: the glyph resampled
        one pixel narrower, OR-ed with itself shifted one pixel right.
        """
        key = (width, height)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        n = len(self.crops)
        stack = np.zeros((n, 2, height, width), dtype=bool)
        for i, crop in enumerate(self.crops):
            stack[i, 0] = self._resample(crop, width, height)
            if width >= 2:
                thin = self._resample(crop, width - 1, height)
                stack[i, 1, :, :-1] = thin
                stack[i, 1, :, 1:] |= thin
        self._cache[key] = stack
        return stack


_DEFAULT_TEMPLATES = TemplateSet()


def match_glyph(cell: np.ndarray, templates: TemplateSet | None = None,
                cfg: OcrConfig | None = None) -> tuple[int | None, float]:
    """Match one cell bitmap against the template set.

    The cell is cropped to its ink, every template (regular and bold) is
    nearest-neighbor resampled to that box, and the score is the fraction
    of agreeing pixels. Returns the best codepoint if its score reaches
    ``match_threshold``, ties broken toward the lowest codepoint.
    """
    cfg = cfg or OcrConfig()
    templates = templates or _DEFAULT_TEMPLATES
    cell = np.asarray(cell, dtype=bool)
    rows = cell.any(axis=1).nonzero()[0]
    cols = cell.any(axis=0).nonzero()[0]
    if rows.size == 0:
        return None, 0.0
    crop = cell[rows.min():rows.max() + 1, cols.min():cols.max() + 1]
    stack = templates.stacks(crop.shape[1], crop.shape[0])
    agree = (stack == crop).mean(axis=(2, 3)).max(axis=1)
    best = int(np.argmax(agree))  # first (lowest) codepoint wins ties
    score = float(agree[best])
    if score >= cfg.match_threshold:
        return templates.codepoints[best], score
    return None, score


def _strip_weak_edges(cell: np.ndarray, divisor: int) -> np.ndarray:
    """Drop sparse leading/trailing columns (binarization specks).

    Only used as a second chance after an exact match failed, so clean
    renders are never touched by this heuristic. ``divisor`` sets how
    aggressive the sparseness floor is (cell height / divisor). Rows are
    left alone: thin but legitimate features (descender tails, dots) live
    on cell edges, while speck noise clings to columns between glyphs.
    """
    cell = np.asarray(cell, dtype=bool)
    col_floor = max(1, -(-cell.shape[0] // divisor))  # ceil(h / divisor)
    cols = cell.sum(axis=0)
    keep = np.flatnonzero(cols > col_floor)
    if keep.size >= 2:
        cell = cell[:, keep.min():keep.max() + 1]
    return cell


def _split_merged(c0: int, c1: int, pitch: float) -> list[tuple[int, int]]:
    width = c1 - c0 + 1
    if pitch <= 0:
        return [(c0, c1)]
    count = max(1, round(width / pitch + 0.25))
    if count < 2:
        return [(c0, c1)]
    bounds = [c0 + round(i * width / count) for i in range(count + 1)]
    return [(bounds[i], bounds[i + 1] - 1) for i in range(count)]


def ocr_text(img: Raster, cfg: OcrConfig | None = None,
             templates: TemplateSet | None = None) -> OcrResult:
    """Full OCR pass: binarize, segment, match, infer spaces and newlines.

    Within a line, a blank gap of at least ``space_gap_factor`` times the
    line's median cell width becomes one space. Cells wider than the
    recovered monospace pitch are split at pitch boundaries before
    matching (touching glyphs, e.g. bold at reduced sizes). Unmatched
    cells contribute nothing to the text.
    """
    cfg = cfg or OcrConfig()
    templates = templates or _DEFAULT_TEMPLATES
    mask = binarize(img, cfg)
    lines = segment(mask, cfg)
    out_lines = []
    cells_out: list[OcrCell] = []
    for line in lines:
        widths = sorted(c1 - c0 + 1 for c0, c1 in line.cells)
        median_width = float(np.median(widths))
        pitch = median_width * font.CELL_WIDTH / font.INK_WIDTH
        space_gap = cfg.space_gap_factor * median_width
        band = mask.mask[line.top:line.bottom + 1]
        height = line.bottom - line.top + 1
        chars: list[str] = []
        prev_end = None
        for c0, c1 in line.cells:
            if prev_end is not None and (c0 - prev_end - 1) >= space_gap:
                if chars and chars[-1] != " ":
                    chars.append(" ")
            prev_end = c1
            for s0, s1 in _split_merged(c0, c1, pitch):
                codepoint, score = match_glyph(band[:, s0:s1 + 1],
                                               templates, cfg)
                if codepoint is None:
                    for divisor in (8, 6, 4):
                        stripped = _strip_weak_edges(band[:, s0:s1 + 1],
                                                     divisor)
                        retry, retry_score = match_glyph(stripped,
                                                         templates, cfg)
                        if retry is not None:
                            codepoint, score = retry, retry_score
                            break
                cells_out.append(OcrCell(
                    x=s0, y=line.top, width=s1 - s0 + 1, height=height,
                    codepoint=codepoint, score=score))
                if codepoint is not None:
                    chars.append(chr(codepoint))
        out_lines.append("".join(chars).strip())
    return OcrResult(text="\n".join(out_lines), cells=cells_out)


def dump_cells(result: OcrResult) -> str:
    """Debug TSV: ``x y w h codepoint score`` per cell."""
    rows = []
    for cell in result.cells:
        char = chr(cell.codepoint) if cell.codepoint is not None else ""
        rows.append(f"{cell.x}\t{cell.y}\t{cell.width}\t{cell.height}"
                    f"\t{char}\t{cell.score:.4f}")
    return "\n".join(rows)
