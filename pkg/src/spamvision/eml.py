"""Parsing of ``.eml-lite`` files: header block, blank line, body.

Only ``Content-Type`` is interpreted; every other header is stored verbatim
and ignored downstream. Bodies are parsed per content type into a DOM tree
so the rest of the pipeline has a single document shape to work with.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dom import DomNode, parse_html, to_html
from .errors import MalformedHeaders

TEXT_PLAIN = "text/plain"
TEXT_HTML = "text/html"


@dataclass
class EmailDocument:
    headers: list[tuple[str, str]] = field(default_factory=list)
    content_type: str = TEXT_PLAIN
    body: DomNode = field(default_factory=lambda: DomNode.element("body"))

    def header(self, name):
        lowered = name.lower()
        for key, value in self.headers:
            if key.lower() == lowered:
                return value
        return None


def _parse_header_lines(lines):
    headers = []
    have_content_type = False
    for line in lines:
        name, sep, value = line.partition(":")
        if not sep or not name or name != name.strip() or " " in name.strip():
            continue  # tolerate junk lines inside the header block
        name = name.strip()
        if name.lower() == "content-type":
            if have_content_type:
                continue  # keep the first, drop case-insensitive duplicates
            have_content_type = True
        headers.append((name, value.strip()))
    return headers


def _content_type_of(headers):
    for name, value in headers:
        if name.lower() == "content-type":
            if value.split(";")[0].strip().lower() == TEXT_HTML:
                return TEXT_HTML
            return TEXT_PLAIN
    return TEXT_PLAIN


def parse_email(data: bytes) -> EmailDocument:
    """Parse raw file content into an :class:`EmailDocument`.

    Raises :class:`MalformedHeaders` when there is no blank-line separator
    and the first line is not a ``Name: value`` header.
    """
    text = data.decode("utf-8", errors="replace").replace("\r\n", "\n")
    head, sep, body = text.partition("\n\n")
    if not sep:
        first = head.split("\n", 1)[0]
        name, colon, _ = first.partition(":")
        if not colon or not name.strip() or " " in name.strip():
            raise MalformedHeaders("no blank-line separator and no header line")
        body = ""
    headers = _parse_header_lines(head.split("\n"))
    content_type = _content_type_of(headers)

    if content_type == TEXT_HTML:
        tree = parse_html(body)
    else:
        tree = DomNode.element("body", children=[DomNode.text_node(body)])
    return EmailDocument(headers=headers, content_type=content_type, body=tree)


def email_to_bytes(doc: EmailDocument) -> bytes:
    """Serialize a document back to ``.eml-lite`` bytes (LF line endings)."""
    lines = [f"{name}: {value}" for name, value in doc.headers]
    if doc.content_type == TEXT_HTML:
        body = "".join(to_html(child) for child in doc.body.children)
    else:
        body = "".join(node.text for node in doc.body.children if node.kind == "text")
    return ("\n".join(lines) + "\n\n" + body).encode("utf-8")
