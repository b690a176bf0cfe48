"""HTML-subset document tree: tolerant parser, canonical serializer, raw text.

The parser is total: any byte soup yields a tree. It recognises the tag set
used by the renderer, rewrites unknown tags to ``span``, keeps comments as
real nodes (the raw-text path later turns them into token-splitting spaces),
and auto-closes whatever the input left open.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

ELEMENT = "element"
TEXT = "text"
COMMENT = "comment"

# Tags the renderer understands. Unknown tags are rewritten to span so the
# pipeline stays total over arbitrary HTML-ish input.
SUPPORTED_TAGS = frozenset(
    {"body", "p", "div", "span", "br", "b", "strong", "i", "em", "a", "font", "img"}
)
VOID_TAGS = frozenset({"br", "img"})
BLOCK_TAGS = frozenset({"body", "p", "div"})

# Attributes that carry visual information; everything else is dropped.
KEPT_ATTRIBUTES = ("style", "color", "size")

MAX_DEPTH = 256

_ENTITIES = {"amp": "&", "lt": "<", "gt": ">", "quot": '"', "nbsp": " "}
_ENTITY_RE = re.compile(r"&(amp|lt|gt|quot|nbsp);")
_TAG_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9]*")
_ATTR_RE = re.compile(
    r"""\s*([a-zA-Z][a-zA-Z0-9_-]*)(?:\s*=\s*("[^"]*"|'[^']*'|[^\s>]*))?"""
)
_WHITESPACE_RE = re.compile(r"[ \t\r\n\f\v]+")


@dataclass
class DomNode:
    """One node of the document tree (element, text or comment)."""

    kind: str
    tag: str = ""
    attributes: list[tuple[str, str]] = field(default_factory=list)
    children: list["DomNode"] = field(default_factory=list)
    text: str = ""

    @classmethod
    def element(cls, tag, attributes=None, children=None):
        return cls(ELEMENT, tag=tag, attributes=list(attributes or []),
                   children=list(children or []))

    @classmethod
    def text_node(cls, text):
        return cls(TEXT, text=text)

    @classmethod
    def comment(cls, text):
        return cls(COMMENT, text=text)

    def attr(self, name):
        for key, value in self.attributes:
            if key == name:
                return value
        return None

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


def decode_entities(text: str) -> str:
    return _ENTITY_RE.sub(lambda m: _ENTITIES[m.group(1)], text)


def _filter_attributes(pairs):
    kept = []
    seen = set()
    for name, value in pairs:
        if name in KEPT_ATTRIBUTES and name not in seen:
            kept.append((name, value))
            seen.add(name)
    return kept


def _parse_attributes(chunk: str):
    pairs = []
    pos = 0
    while pos < len(chunk):
        match = _ATTR_RE.match(chunk, pos)
        if not match or not match.group(1):
            break
        name = match.group(1).lower()
        raw = match.group(2)
        if raw is None:
            value = ""
        elif raw[:1] in "\"'" and raw[-1:] == raw[:1] and len(raw) >= 2:
            value = raw[1:-1]
        else:
            value = raw
        pairs.append((name, decode_entities(value)))
        pos = match.end()
        if pos == match.start():  # defensive: never loop in place
            pos += 1
    return pairs


def parse_html(source: str) -> DomNode:
    """Parse an HTML-subset string into a tree rooted at a ``body`` element.

    Tolerance is total: stray ``<``, unclosed tags, unknown tags and
    truncated comments all produce a best-effort tree instead of errors.
    Nesting deeper than ``MAX_DEPTH`` flattens the rest of the input into a
    single text node.
    """
    root = DomNode.element("body")
    stack = [root]
    pos = 0
    n = len(source)

    def emit_text(raw):
        if raw:
            stack[-1].children.append(DomNode.text_node(decode_entities(raw)))

    while pos < n:
        lt = source.find("<", pos)
        if lt < 0:
            emit_text(source[pos:])
            break
        emit_text(source[pos:lt])
        pos = lt

        if source.startswith("<!--", pos):
            end = source.find("-->", pos + 4)
            if end < 0:
                stack[-1].children.append(DomNode.comment(source[pos + 4:]))
                break
            stack[-1].children.append(DomNode.comment(source[pos + 4:end]))
            pos = end + 3
            continue

        if source.startswith("<!", pos) or source.startswith("<?", pos):
            # Doctype and processing-instruction junk is dropped.
            end = source.find(">", pos)
            pos = n if end < 0 else end + 1
            continue

        if source.startswith("</", pos):
            match = _TAG_NAME_RE.match(source, pos + 2)
            end = source.find(">", pos)
            if not match or end < 0:
                emit_text("<")
                pos += 1
                continue
            tag = match.group(0).lower()
            if tag not in SUPPORTED_TAGS:
                tag = "span"
            open_tags = [node.tag for node in stack[1:]]
            if tag in open_tags:
                while stack[-1].tag != tag:
                    stack.pop()
                stack.pop()
            pos = end + 1
            continue

        match = _TAG_NAME_RE.match(source, pos + 1)
        if not match:
            emit_text("<")
            pos += 1
            continue
        end = source.find(">", pos)
        if end < 0:
            emit_text(source[pos:])
            break
        tag = match.group(0).lower()
        chunk = source[match.end():end]
        if chunk.endswith("/"):
            chunk = chunk[:-1]
        attributes = _filter_attributes(_parse_attributes(chunk))

        if tag == "body":
            pos = end + 1
            continue  # transparent: the synthetic root is the body
        if tag not in SUPPORTED_TAGS:
            tag = "span"
        if tag not in VOID_TAGS and len(stack) >= MAX_DEPTH:
            emit_text(source[pos:])  # markup beyond the cap becomes plain text
            break
        pos = end + 1
        node = DomNode.element(tag, attributes)
        stack[-1].children.append(node)
        if tag not in VOID_TAGS:
            stack.append(node)

    return root


def _escape_text(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace(" ", "&nbsp;")
    )


def _escape_attr(value: str) -> str:
    return _escape_text(value).replace('"', "&quot;")


def to_html(node: DomNode) -> str:
    """Serialize a tree to canonical HTML; re-parsing yields an equal tree."""
    if node.kind == TEXT:
        return _escape_text(node.text)
    if node.kind == COMMENT:
        return f"<!--{node.text}-->"
    attrs = "".join(f' {k}="{_escape_attr(v)}"' for k, v in node.attributes)
    if node.tag in VOID_TAGS:
        return f"<{node.tag}{attrs}>"
    inner = "".join(to_html(child) for child in node.children)
    return f"<{node.tag}{attrs}>{inner}</{node.tag}>"


def raw_text(tree: DomNode) -> str:
    """Naive source-text extraction: what a plain text-based filter sees.

    Element boundaries and comments each become one space, then whitespace
    runs collapse. Styling is ignored entirely, so hidden content leaks in
    and comment-split words fall apart; both effects are the point.
    """
    parts: list[str] = []

    def visit(node):
        if node.kind == TEXT:
            parts.append(node.text)
        elif node.kind == COMMENT:
            parts.append(" ")
        else:
            parts.append(" ")
            for child in node.children:
                visit(child)
            parts.append(" ")

    visit(tree)
    return _WHITESPACE_RE.sub(" ", "".join(parts)).strip()
