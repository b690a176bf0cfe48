"""Inline style parsing and cascading onto the document tree.

Supported declarations: color, background-color, font-size (px),
font-weight, display:none, visibility:hidden, position:absolute with
left/top pixel offsets, plus the legacy ``<font color size>`` attributes.
Anything unparseable is ignored and the inherited or default value kept.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .dom import ELEMENT, TEXT, DomNode

RGB = tuple[int, int, int]

DEFAULT_COLOR: RGB = (0, 0, 0)
DEFAULT_BACKGROUND: RGB = (255, 255, 255)
DEFAULT_FONT_SIZE = 16

# Legacy HTML font size attribute (1..7) to pixels.
_FONT_SIZE_ATTR_PX = {1: 10, 2: 13, 3: 16, 4: 18, 5: 24, 6: 32, 7: 48}

_NAMED_COLORS = {
    "black": (0, 0, 0), "white": (255, 255, 255), "red": (255, 0, 0),
    "lime": (0, 255, 0), "green": (0, 128, 0), "blue": (0, 0, 255),
    "yellow": (255, 255, 0), "cyan": (0, 255, 255), "aqua": (0, 255, 255),
    "magenta": (255, 0, 255), "fuchsia": (255, 0, 255), "gray": (128, 128, 128),
    "grey": (128, 128, 128), "silver": (192, 192, 192), "maroon": (128, 0, 0),
    "olive": (128, 128, 0), "navy": (0, 0, 128), "teal": (0, 128, 128),
    "purple": (128, 0, 128), "orange": (255, 165, 0),
}

_HEX3_RE = re.compile(r"#([0-9a-fA-F]{3})$")
_HEX6_RE = re.compile(r"#([0-9a-fA-F]{6})$")
_RGB_RE = re.compile(r"rgb\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_LENGTH_RE = re.compile(r"(-?\d+(?:\.\d+)?)\s*(px)?$")


@dataclass(frozen=True)
class Style:
    """Fully materialized visual style; no field is ever left unset."""

    color: RGB = DEFAULT_COLOR
    background_color: RGB = DEFAULT_BACKGROUND
    background_set: bool = False  # true only where background-color was declared
    font_size: int = DEFAULT_FONT_SIZE
    bold: bool = False
    display_none: bool = False
    visibility_hidden: bool = False
    absolute: tuple[int, int] | None = None  # (left, top) px, or None for flow


DEFAULT_STYLE = Style()


@dataclass
class StyledNode:
    """Mirror of a :class:`DomNode` with a resolved style attached."""

    node: DomNode
    style: Style
    children: list["StyledNode"] = field(default_factory=list)

    @property
    def kind(self):
        return self.node.kind

    @property
    def tag(self):
        return self.node.tag

    @property
    def text(self):
        return self.node.text

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


def parse_color(value: str) -> RGB | None:
    value = value.strip().lower()
    match = _HEX6_RE.match(value)
    if match:
        digits = match.group(1)
        return tuple(int(digits[i:i + 2], 16) for i in (0, 2, 4))
    match = _HEX3_RE.match(value)
    if match:
        return tuple(int(ch * 2, 16) for ch in match.group(1))
    match = _RGB_RE.match(value)
    if match:
        channels = tuple(int(g) for g in match.groups())
        if all(c <= 255 for c in channels):
            return channels
        return None
    return _NAMED_COLORS.get(value)


def _parse_px(value: str) -> int | None:
    match = _LENGTH_RE.match(value.strip())
    if not match:
        return None
    return round(float(match.group(1)))


def parse_declarations(style_attr: str) -> dict:
    """Parse an inline style attribute into a property dict (lenient)."""
    props: dict = {}
    for part in style_attr.split(";"):
        name, sep, value = part.partition(":")
        if not sep:
            continue
        name = name.strip().lower()
        value = value.strip()
        if name == "color":
            color = parse_color(value)
            if color is not None:
                props["color"] = color
        elif name == "background-color":
            color = parse_color(value)
            if color is not None:
                props["background_color"] = color
        elif name == "font-size":
            px = _parse_px(value)
            if px is not None and px >= 1:
                props["font_size"] = px
        elif name == "font-weight":
            lowered = value.lower()
            if lowered == "bold" or (lowered.isdigit() and int(lowered) >= 600):
                props["bold"] = True
            elif lowered == "normal" or lowered.isdigit():
                props["bold"] = False
        elif name == "display":
            if value.lower() == "none":
                props["display_none"] = True
        elif name == "visibility":
            lowered = value.lower()
            if lowered == "hidden":
                props["visibility_hidden"] = True
            elif lowered == "visible":
                props["visibility_hidden"] = False
        elif name == "position":
            if value.lower() == "absolute":
                props["position_absolute"] = True
        elif name in ("left", "top"):
            px = _parse_px(value)
            if px is not None:
                props[name] = max(0, px)
    return props


def _element_style(node: DomNode, inherited: Style) -> Style:
    props: dict = {}
    if node.tag == "font":
        color_attr = node.attr("color")
        if color_attr is not None:
            color = parse_color(color_attr)
            if color is not None:
                props["color"] = color
        size_attr = node.attr("size")
        if size_attr is not None and size_attr.strip().lstrip("+-").isdigit():
            size = int(size_attr.strip())
            props["font_size"] = _FONT_SIZE_ATTR_PX[min(7, max(1, size))]
    style_attr = node.attr("style")
    if style_attr is not None:
        props.update(parse_declarations(style_attr))
    if node.tag in ("b", "strong"):
        props.setdefault("bold", True)

    absolute = None
    if props.pop("position_absolute", False):
        absolute = (props.pop("left", 0), props.pop("top", 0))
    else:
        props.pop("left", None)
        props.pop("top", None)

    return Style(
        color=props.get("color", inherited.color),
        background_color=props.get("background_color", DEFAULT_BACKGROUND),
        background_set="background_color" in props,
        font_size=props.get("font_size", inherited.font_size),
        bold=props.get("bold", inherited.bold),
        display_none=props.get("display_none", False) or inherited.display_none,
        visibility_hidden=props.get("visibility_hidden", inherited.visibility_hidden),
        absolute=absolute,
    )


def resolve_styles(tree: DomNode, defaults: Style = DEFAULT_STYLE) -> StyledNode:
    """Cascade styles over the tree, materializing one on every node.

    color, font_size, bold and visibility_hidden inherit; background_color
    and position do not. display:none does not inherit as a property but
    flags the whole subtree out of layout.
    """

    def build(node: DomNode, inherited: Style) -> StyledNode:
        if node.kind == ELEMENT:
            style = _element_style(node, inherited)
        else:
            style = replace(inherited, background_set=False, absolute=None)
        styled = StyledNode(node=node, style=style)
        if node.kind == ELEMENT:
            for child in node.children:
                styled.children.append(build(child, style))
        return styled

    return build(tree, defaults)
