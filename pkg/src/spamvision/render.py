"""Deterministic layout and rasterization of styled email trees.

Layout flows glyph cells left to right with word wrap, top-aligned lines
and monospaced advances (cell width = round(font_size / 2)). The result is
a trace of paint commands: background rectangles and placed glyphs in
paint order. Rasterization replays the trace onto an RGB canvas with
nearest-neighbor glyph scaling; bold is a 1 px horizontal double-strike at
device scale. Both steps are pure functions, so renders are bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import font
from .styles import RGB, Style, StyledNode, resolve_styles
from .dom import BLOCK_TAGS, COMMENT, ELEMENT, TEXT

IMG_BOX_SIZE = 32
IMG_BOX_COLOR: RGB = (128, 128, 128)

_ASCII_WS = " \t\r\n\f\v"


@dataclass
class RenderConfig:
    canvas_width: int = 800
    background: RGB = (255, 255, 255)
    line_spacing_factor: float = 1.25
    max_height: int = 4000

    def __post_init__(self):
        if self.canvas_width < 64:
            raise ValueError("canvas_width must be at least 64")


@dataclass
class PlacedGlyph:
    codepoint: int
    x: int
    y: int
    width: int
    height: int
    fg: RGB
    bg: RGB
    bold: bool = False
    drawn: bool = True


@dataclass
class BackgroundRect:
    x: int
    y: int
    width: int
    height: int
    color: RGB


@dataclass
class GlyphTrace:
    commands: list = field(default_factory=list)
    width: int = 0
    height: int = 0
    truncated: bool = False

    @property
    def glyphs(self) -> list[PlacedGlyph]:
        return [c for c in self.commands if isinstance(c, PlacedGlyph)]

    @property
    def rects(self) -> list[BackgroundRect]:
        return [c for c in self.commands if isinstance(c, BackgroundRect)]


@dataclass
class Raster:
    width: int
    height: int
    pixels: np.ndarray  # (height, width, 3) uint8

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()


def glyph_cell_size(font_size: int) -> tuple[int, int]:
    return max(1, round(font_size / 2)), font_size


class _RectFrame:
    """Pending background rectangle; geometry is known after layout ends."""

    __slots__ = ("slot", "color", "x0", "y0", "x1", "y1")

    def __init__(self, slot, color):
        self.slot = slot
        self.color = color
        self.x0 = self.y0 = None
        self.x1 = self.y1 = None

    def cover(self, x, y, w, h):
        if self.x0 is None:
            self.x0, self.y0, self.x1, self.y1 = x, y, x + w, y + h
        else:
            self.x0 = min(self.x0, x)
            self.y0 = min(self.y0, y)
            self.x1 = max(self.x1, x + w)
            self.y1 = max(self.y1, y + h)


class _Item:
    """One pending cell on the current line (glyph or image box)."""

    __slots__ = ("codepoint", "x", "width", "height", "fg", "bg", "bold",
                 "drawn", "owners", "is_box")

    def __init__(self, codepoint, x, width, height, fg, bg, bold, drawn,
                 owners, is_box=False):
        self.codepoint = codepoint
        self.x = x
        self.width = width
        self.height = height
        self.fg = fg
        self.bg = bg
        self.bold = bold
        self.drawn = drawn
        self.owners = owners
        self.is_box = is_box


class _Flow:
    """Line state for one flow context (the page or one absolute box)."""

    def __init__(self, engine, origin_x, origin_y):
        self.engine = engine
        self.origin_x = origin_x
        self.y = origin_y
        self.line: list[_Item] = []
        self.x = origin_x
        self.word: list[_Item] = []
        self.word_width = 0
        self.pending_space: tuple | None = None

    # -- words ---------------------------------------------------------

    def add_char(self, codepoint, style, bg, owners):
        w, h = glyph_cell_size(style.font_size)
        item = _Item(codepoint, 0, w, h, style.color, bg, style.bold,
                     not style.visibility_hidden, owners)
        self.word.append(item)
        self.word_width += w

    def add_box(self, style, bg, owners):
        self.flush_word()
        item = _Item(None, 0, IMG_BOX_SIZE, IMG_BOX_SIZE, IMG_BOX_COLOR, bg,
                     False, not style.visibility_hidden, owners, is_box=True)
        self._place([item], IMG_BOX_SIZE)

    def add_space(self, style, bg, owners):
        self.flush_word()
        self.pending_space = (style, bg, owners)

    def add_nbsp(self, style, bg, owners):
        # Non-breaking space: a real (ink-free) cell that never collapses.
        self.flush_word()
        w, h = glyph_cell_size(style.font_size)
        item = _Item(32, 0, w, h, style.color, bg, False,
                     not style.visibility_hidden, owners)
        self._place([item], w)

    def flush_word(self):
        if self.word:
            word, width = self.word, self.word_width
            self.word = []
            self.word_width = 0
            self._place(word, width)

    def _place(self, items, width):
        limit = self.engine.cfg.canvas_width
        space = self.pending_space
        self.pending_space = None
        space_width = 0
        if space is not None and self.line:
            space_width = glyph_cell_size(space[0].font_size)[0]
        if self.line and self.x + space_width + width > limit:
            self.commit_line()  # the separating space dies at the wrap
        elif space is not None and self.line:
            style, bg, owners = space
            w, h = glyph_cell_size(style.font_size)
            self._append(_Item(32, 0, w, h, style.color, bg, False,
                               not style.visibility_hidden, owners))
        for item in items:
            if self.line and self.x + item.width > limit:
                self.commit_line()  # oversized word: hard break mid-word
            self._append(item)

    def _append(self, item):
        item.x = self.x
        self.line.append(item)
        self.x += item.width

    # -- lines ---------------------------------------------------------

    def commit_line(self, advance_font_size=None):
        self.flush_word()
        self.pending_space = None
        engine = self.engine
        if self.line:
            max_h = max(item.height for item in self.line)
            line_h = round(engine.cfg.line_spacing_factor * max_h)
            for item in self.line:
                engine.emit(item, self.y)
            self.y += line_h
            engine.bottom = max(engine.bottom, self.y)
            self.line = []
        elif advance_font_size is not None:
            self.y += round(engine.cfg.line_spacing_factor * advance_font_size)
            engine.bottom = max(engine.bottom, self.y)
        self.x = self.origin_x


class _Engine:
    def __init__(self, cfg: RenderConfig):
        self.cfg = cfg
        self.commands: list = []
        self.frames: list[_RectFrame] = []
        self.bottom = 0

    def emit(self, item: _Item, y: int):
        for owner in item.owners:
            owner.cover(item.x, y, item.width, item.height)
        if item.is_box:
            if item.drawn:
                self.commands.append(BackgroundRect(
                    item.x + 1, y + 1, IMG_BOX_SIZE - 2, IMG_BOX_SIZE - 2,
                    item.fg))
            return
        self.commands.append(PlacedGlyph(
            codepoint=item.codepoint, x=item.x, y=y, width=item.width,
            height=item.height, fg=item.fg, bg=item.bg, bold=item.bold,
            drawn=item.drawn))

    def open_rect(self, color):
        frame = _RectFrame(len(self.commands), color)
        self.commands.append(frame)  # placeholder, resolved at the end
        self.frames.append(frame)
        return frame

    def resolve_rects(self):
        resolved = []
        for cmd in self.commands:
            if isinstance(cmd, _RectFrame):
                if cmd.x0 is None:
                    continue
                resolved.append(BackgroundRect(
                    cmd.x0, cmd.y0, cmd.x1 - cmd.x0, cmd.y1 - cmd.y0,
                    cmd.color))
            else:
                resolved.append(cmd)
        self.commands = resolved


def _walk(engine: _Engine, flow: _Flow, node: StyledNode, bg: RGB, owners):
    style = node.style
    if node.kind == COMMENT:
        return  # comments never render and never split adjacent glyphs
    if node.kind == TEXT:
        for ch in node.text:
            if ch in _ASCII_WS:
                flow.add_space(style, bg, owners)
            elif ch == " ":
                flow.add_nbsp(style, bg, owners)
            else:
                flow.add_char(ord(ch), style, bg, owners)
        return

    if style.display_none:
        return

    if node.tag == "br":
        flow.commit_line(advance_font_size=style.font_size)
        return
    if node.tag == "img":
        flow.add_box(style, bg, owners)
        return

    child_bg = bg
    child_owners = owners
    if style.background_set and not style.visibility_hidden:
        frame = engine.open_rect(style.background_color)
        child_owners = owners + (frame,)
        child_bg = style.background_color

    if style.absolute is not None:
        # Out of flow: the surrounding word buffer continues untouched.
        sub = _Flow(engine, style.absolute[0], style.absolute[1])
        for child in node.children:
            _walk(engine, sub, child, child_bg, child_owners)
        sub.commit_line()
        return

    block = node.tag in BLOCK_TAGS
    if block:
        flow.commit_line()
    for child in node.children:
        _walk(engine, flow, child, child_bg, child_owners)
    if block:
        flow.commit_line()
        if node.tag == "p":
            flow.commit_line(advance_font_size=style.font_size)


def layout(tree: StyledNode, cfg: RenderConfig | None = None) -> GlyphTrace:
    """Lay out a styled tree into a paint-ordered glyph trace.

    Content taller than ``cfg.max_height`` is truncated and the trace is
    flagged rather than raising, so callers can still classify the page.
    """
    cfg = cfg or RenderConfig()
    engine = _Engine(cfg)
    flow = _Flow(engine, 0, 0)
    _walk(engine, flow, tree, cfg.background, ())
    flow.commit_line()
    engine.resolve_rects()

    height = max(1, engine.bottom)
    truncated = height > cfg.max_height
    if truncated:
        height = cfg.max_height
        engine.commands = [c for c in engine.commands if c.y < cfg.max_height]
    return GlyphTrace(commands=engine.commands, width=cfg.canvas_width,
                      height=height, truncated=truncated)


def _scale_bitmap(bitmap: np.ndarray, width: int, height: int) -> np.ndarray:
    rows = np.arange(height) * bitmap.shape[0] // height
    cols = np.arange(width) * bitmap.shape[1] // width
    return bitmap[rows][:, cols]


def _paint_mask(canvas, mask, x, y, color):
    h, w = mask.shape
    ch, cw = canvas.shape[:2]
    x0, y0 = max(0, x), max(0, y)
    x1, y1 = min(cw, x + w), min(ch, y + h)
    if x0 >= x1 or y0 >= y1:
        return
    sub = mask[y0 - y:y1 - y, x0 - x:x1 - x]
    region = canvas[y0:y1, x0:x1]
    region[sub] = color


def rasterize(trace: GlyphTrace, cfg: RenderConfig | None = None) -> Raster:
    """Replay a trace onto an RGB canvas. Out-of-bounds pixels are clipped."""
    cfg = cfg or RenderConfig()
    canvas = np.empty((trace.height, trace.width, 3), dtype=np.uint8)
    canvas[:, :] = cfg.background
    for cmd in trace.commands:
        if isinstance(cmd, BackgroundRect):
            x0, y0 = max(0, cmd.x), max(0, cmd.y)
            x1 = min(trace.width, cmd.x + cmd.width)
            y1 = min(trace.height, cmd.y + cmd.height)
            if x0 < x1 and y0 < y1:
                canvas[y0:y1, x0:x1] = cmd.color
        elif cmd.drawn:
            bitmap = font.glyph_bitmap(cmd.codepoint)
            if not bitmap.any():
                continue
            scaled = _scale_bitmap(bitmap, cmd.width, cmd.height)
            _paint_mask(canvas, scaled, cmd.x, cmd.y, cmd.fg)
            if cmd.bold:
                _paint_mask(canvas, scaled, cmd.x + 1, cmd.y, cmd.fg)
    return Raster(width=trace.width, height=trace.height, pixels=canvas)


def render_email(doc, cfg: RenderConfig | None = None) -> tuple[Raster, GlyphTrace]:
    """Resolve styles, lay out and rasterize an email document."""
    cfg = cfg or RenderConfig()
    styled = resolve_styles(doc.body)
    trace = layout(styled, cfg)
    return rasterize(trace, cfg), trace


def visible_text(trace: GlyphTrace) -> str:
    """Reading-order text of the drawn glyphs; the OCR round-trip oracle.

    Lines follow the emission order; space runs collapse and edges are
    trimmed, mirroring what the OCR can actually recover from pixels.
    """
    lines: list[list[str]] = []
    current: list[str] = []
    last_y = None
    for glyph in trace.glyphs:
        if last_y is not None and glyph.y != last_y:
            lines.append(current)
            current = []
        last_y = glyph.y
        if glyph.drawn:
            current.append(chr(glyph.codepoint))
        elif current and current[-1] != " ":
            current.append(" ")  # hidden cells leave a visible gap
    lines.append(current)
    out = []
    for chars in lines:
        text = " ".join("".join(chars).split())
        if text:
            out.append(text)
    return "\n".join(out)


def luminance(pixels: np.ndarray) -> np.ndarray:
    """Float luminance per pixel: 0.299 R + 0.587 G + 0.114 B."""
    arr = pixels.astype(np.float64)
    return arr[..., 0] * 0.299 + arr[..., 1] * 0.587 + arr[..., 2] * 0.114


def write_ppm(raster: Raster) -> bytes:
    header = f"P6\n{raster.width} {raster.height}\n255\n".encode("ascii")
    return header + raster.pixels.tobytes()


def write_pgm(raster: Raster) -> bytes:
    gray = np.rint(luminance(raster.pixels)).clip(0, 255).astype(np.uint8)
    header = f"P5\n{raster.width} {raster.height}\n255\n".encode("ascii")
    return header + gray.tobytes()


def read_ppm(data: bytes) -> Raster:
    """Parse a binary P6 file written by :func:`write_ppm`."""
    parts = data.split(b"\n", 3)
    if len(parts) < 4 or parts[0] != b"P6":
        raise ValueError("not a binary PPM (P6) file")
    width, height = (int(v) for v in parts[1].split())
    if parts[2] != b"255":
        raise ValueError("unsupported maxval")
    pixels = np.frombuffer(parts[3][: width * height * 3], dtype=np.uint8)
    if pixels.size != width * height * 3:
        raise ValueError("truncated pixel data")
    return Raster(width=width, height=height,
                  pixels=pixels.reshape(height, width, 3).copy())
