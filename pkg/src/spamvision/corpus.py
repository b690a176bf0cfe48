"""Synthetic labeled corpora exercising the hidden-text salting tricks.

Each generated spam email draws cover sentences plus two to four
designated spam phrases, then one trick transforms the body: comments
split spam words apart, homoglyphs swap their codepoints, hidden ham
words ride along invisibly (color-matched, tiny or display:none), visible
ham dilutes the top, or the spam phrases get shouty emphasis. Ground
truth records what each trick hid or mangled so tests can assert the
adversarial mechanics sample by sample.
"""

from __future__ import annotations

import copy
import os
import re
from dataclasses import dataclass, field

import numpy as np

from . import phrases
from .dom import DomNode, to_html
from .eml import TEXT_HTML, EmailDocument, email_to_bytes, parse_email
from .errors import IoFailure, ManifestMismatch
from .features import tokenize
from .font import LATIN_TO_HOMOGLYPHS

NONE = "none"
COMMENT_SPLIT = "comment_split"
HIDDEN_HAM_COLOR = "hidden_ham_color"
HIDDEN_HAM_TINY_FONT = "hidden_ham_tiny_font"
HIDDEN_HAM_DISPLAY_NONE = "hidden_ham_display_none"
HOMOGLYPH = "homoglyph"
INJECTION_VISIBLE_HAM = "injection_visible_ham"
EMPHASIS_SIZE_BOLD = "emphasis_size_bold"

TRICK_KINDS = (
    NONE, COMMENT_SPLIT, HIDDEN_HAM_COLOR, HIDDEN_HAM_TINY_FONT,
    HIDDEN_HAM_DISPLAY_NONE, HOMOGLYPH, INJECTION_VISIBLE_HAM,
    EMPHASIS_SIZE_BOLD,
)
HIDDEN_TRICKS = (HIDDEN_HAM_COLOR, HIDDEN_HAM_TINY_FONT,
                 HIDDEN_HAM_DISPLAY_NONE)

# Default share of spam carrying each trick (the rest stays clean). The
# mix leans on the two tricks that blind source-text models completely.
DEFAULT_TRICK_MIX = {
    COMMENT_SPLIT: 0.22,
    HOMOGLYPH: 0.14,
    HIDDEN_HAM_COLOR: 0.10,
    HIDDEN_HAM_DISPLAY_NONE: 0.05,
    HIDDEN_HAM_TINY_FONT: 0.05,
    INJECTION_VISIBLE_HAM: 0.02,
    EMPHASIS_SIZE_BOLD: 0.02,
}

# Near-background foreground colors for the color-matching trick; all are
# within the OCR's contrast threshold of the white page.
_GHOST_COLORS = ("#ffffff", "#fefefe", "#fcfcfc", "#f9f9f9")
_TINY_SIZES = (3, 4, 5, 6)

_SUBSTITUTABLE = frozenset(chr(cp) for cp in LATIN_TO_HOMOGLYPHS)
_WORD_RE = re.compile(r"[a-zA-Z0-9]+")


def spam_core_tokens(spam_bank=phrases.SPAM_PHRASES,
                     ham_bank=phrases.HAM_PHRASES) -> frozenset:
    """Spam-bank tokens that never occur in ham text (the learnable core)."""
    ham_tokens = set()
    for phrase in ham_bank:
        ham_tokens.update(tokenize(phrase))
    core = set()
    for phrase in spam_bank:
        core.update(t for t in tokenize(phrase) if t not in ham_tokens)
    return frozenset(core)


@dataclass
class CorpusSpec:
    n_ham: int = 4009
    n_spam: int = 3800
    trick_mix: dict = field(default_factory=lambda: dict(DEFAULT_TRICK_MIX))
    seed: int = 0
    spam_phrases: tuple = phrases.SPAM_PHRASES
    ham_phrases: tuple = phrases.HAM_PHRASES
    neutral_phrases: tuple = phrases.NEUTRAL_PHRASES
    hidden_pool: tuple = phrases.HIDDEN_WORD_POOL

    def __post_init__(self):
        if self.n_ham < 0 or self.n_spam < 0:
            raise ValueError("counts must be non-negative")
        unknown = set(self.trick_mix) - set(TRICK_KINDS)
        if unknown:
            raise ValueError(f"unknown tricks {sorted(unknown)}")
        if sum(self.trick_mix.values()) > 1.0 + 1e-9:
            raise ValueError("trick fractions must sum to at most 1")


@dataclass
class GenRecord:
    designated_phrases: list[str]
    designated_tokens: set[str]  # must appear in the perceived text
    evaded_tokens: set[str]  # must be absent from raw source tokens
    injected_tokens: set[str]  # hidden ham words (absent from perceived)
    trick: str


@dataclass
class CorpusItem:
    id: str
    doc: EmailDocument
    label: str  # "spam" | "ham"
    trick: str
    truth: GenRecord | None = None

    @property
    def y(self) -> int:
        return 1 if self.label == "spam" else 0


@dataclass
class LabeledCorpus:
    items: list[CorpusItem]

    def __len__(self):
        return len(self.items)

    @property
    def docs(self):
        return [item.doc for item in self.items]

    @property
    def labels(self) -> np.ndarray:
        return np.array([item.y for item in self.items], dtype=np.int64)


# -- body assembly -----------------------------------------------------


def _sentence(rng, phrase: str) -> str:
    mark = "!" if rng.random() < 0.1 else "."
    return phrase[0].upper() + phrase[1:] + mark


def _paragraphs(rng, sentences) -> str:
    out = []
    i = 0
    while i < len(sentences):
        take = int(rng.integers(1, 4))
        chunk = sentences[i:i + take]
        i += take
        text = " ".join(chunk)
        if rng.random() < 0.10:
            tag = "b" if rng.random() < 0.5 else "i"
            text = f"<{tag}>{text}</{tag}>"
        out.append(f"<p>{text}</p>")
    return "".join(out)


def _draw(rng, bank, count):
    picks = rng.choice(len(bank), size=min(count, len(bank)), replace=False)
    return [bank[int(i)] for i in picks]


class _TrickContext:
    def __init__(self, spec: CorpusSpec, designated_phrases):
        core = spam_core_tokens(spec.spam_phrases, spec.ham_phrases)
        self.spec = spec
        self.designated_phrases = list(designated_phrases)
        self.word_targets = set()
        for phrase in designated_phrases:
            self.word_targets.update(tokenize(phrase))
        self.core_targets = {t for t in self.word_targets if t in core}


def gen_email(rng, label: str, trick: str = NONE,
              spec: CorpusSpec | None = None):
    """One synthetic email plus its ground-truth record.

    Tricks apply to spam only (visible-ham injection decorates spam too).
    Comment-split and homoglyph spam camouflages itself with ham-bank
    cover; other spam uses neutral cover so hidden injections can be
    asserted absent from the visible text.
    """
    spec = spec or CorpusSpec()
    if label == "ham" and trick != NONE:
        raise ValueError("tricks apply to spam emails only")

    if label == "ham":
        sentences = [_sentence(rng, p)
                     for p in _draw(rng, spec.ham_phrases,
                                    int(rng.integers(3, 9)))]
        designated = []
    else:
        cover_bank = (spec.ham_phrases
                      if trick in (COMMENT_SPLIT, HOMOGLYPH)
                      else spec.neutral_phrases)
        sentences = [_sentence(rng, p)
                     for p in _draw(rng, cover_bank, int(rng.integers(3, 9)))]
        designated = _draw(rng, spec.spam_phrases, int(rng.integers(2, 5)))
        for phrase in designated:
            pos = int(rng.integers(0, len(sentences) + 1))
            sentences.insert(pos, _sentence(rng, phrase))

    subject = " ".join(_draw(rng, phrases.SUBJECT_WORDS,
                             int(rng.integers(2, 5))))
    body = _paragraphs(rng, sentences)
    doc = parse_email(
        f"Subject: {subject}\nContent-Type: text/html\n\n{body}".encode())

    context = _TrickContext(spec, designated)
    truth = GenRecord(
        designated_phrases=list(designated),
        designated_tokens={t for p in designated for t in tokenize(p)},
        evaded_tokens=set(),
        injected_tokens=set(),
        trick=trick,
    )
    if label == "spam" and trick != NONE:
        doc = apply_trick(doc, trick, rng, context, truth)
    return doc, truth


# -- trick transforms ---------------------------------------------------


def _map_text_nodes(node: DomNode, fn):
    new_children = []
    for child in node.children:
        if child.kind == "text":
            new_children.extend(fn(child.text))
        else:
            if child.kind == "element":
                _map_text_nodes(child, fn)
            new_children.append(child)
    node.children = new_children


def _comment_split(doc, rng, targets):
    noise = "abcdefghijklmnopqrstuvwxyz"

    def split_text(text):
        nodes = []
        cursor = 0
        for match in _WORD_RE.finditer(text):
            if match.group(0).lower() not in targets:
                continue
            if match.start() > cursor:
                nodes.append(DomNode.text_node(text[cursor:match.start()]))
            word = match.group(0)
            for i, ch in enumerate(word):
                if i:
                    filler = "".join(
                        noise[int(k)] for k in rng.integers(0, 26, size=3))
                    nodes.append(DomNode.comment(filler))
                nodes.append(DomNode.text_node(ch))
            cursor = match.end()
        nodes.append(DomNode.text_node(text[cursor:]))
        return [n for n in nodes if n.kind != "text" or n.text]

    _map_text_nodes(doc.body, split_text)
    return doc


def _homoglyph_word(word: str, rng) -> str:
    chars = list(word)
    eligible = [i for i, ch in enumerate(chars)
                if ch.lower() in _SUBSTITUTABLE]
    if not eligible:
        return word
    flips = [i for i in eligible if rng.random() < 0.5]
    if not flips:
        flips = [eligible[int(rng.integers(0, len(eligible)))]]
    for i in flips:
        partners = LATIN_TO_HOMOGLYPHS[ord(chars[i].lower())]
        chars[i] = chr(partners[int(rng.integers(0, len(partners)))])
    return "".join(chars)


def _homoglyph(doc, rng, targets):
    def rewrite(text):
        out = []
        cursor = 0
        for match in _WORD_RE.finditer(text):
            if match.group(0).lower() not in targets:
                continue
            out.append(text[cursor:match.start()])
            out.append(_homoglyph_word(match.group(0), rng))
            cursor = match.end()
        out.append(text[cursor:])
        return [DomNode.text_node("".join(out))]

    _map_text_nodes(doc.body, rewrite)
    return doc


def _hidden_block(doc, rng, pool, style):
    count = int(rng.integers(10, min(31, len(pool) + 1)))
    order = rng.permutation(len(pool))[:count]
    words = [pool[int(i)] for i in order]
    span = DomNode.element("span", [("style", style)],
                           [DomNode.text_node(" ".join(words))])
    doc.body.children.append(DomNode.element("div", children=[span]))
    return doc, set(words)


def _emphasize(doc, rng, designated_phrases):
    lowered = [p.lower() for p in designated_phrases]

    def rewrite(text):
        lower = text.lower()
        for phrase in lowered:
            at = lower.find(phrase)
            if at < 0:
                continue
            before, hit, after = (text[:at], text[at:at + len(phrase)],
                                  text[at + len(phrase):])
            nodes = []
            if before:
                nodes.append(DomNode.text_node(before))
            if rng.random() < 0.5:
                shout = DomNode.element(
                    "span", [("style", "font-size:32px")],
                    [DomNode.text_node(hit.upper())])
                nodes.append(DomNode.element("div", children=[shout]))
            else:
                nodes.append(DomNode.element(
                    "b", children=[DomNode.text_node(hit)]))
            if after:
                nodes.extend(rewrite(after))
            return nodes
        return [DomNode.text_node(text)]

    _map_text_nodes(doc.body, rewrite)
    return doc


def apply_trick(doc: EmailDocument, trick: str, rng,
                context: _TrickContext | None = None,
                truth: GenRecord | None = None) -> EmailDocument:
    """Apply one salting trick to an email document (returns a new doc).

    Without an explicit context, targets default to the embedded banks'
    spam-core vocabulary, so the transform works on arbitrary documents.
    """
    if trick == NONE:
        return doc
    if trick not in TRICK_KINDS:
        raise ValueError(f"unknown trick {trick!r}")
    if context is None:
        context = _TrickContext(CorpusSpec(), [])
        context.word_targets = set(spam_core_tokens())
        context.core_targets = set(context.word_targets)
    doc = copy.deepcopy(doc)
    spec = context.spec

    if trick == COMMENT_SPLIT:
        doc = _comment_split(doc, rng, context.word_targets)
        if truth:
            truth.evaded_tokens = set(context.core_targets)
    elif trick == HOMOGLYPH:
        doc = _homoglyph(doc, rng, context.word_targets)
        if truth:
            truth.evaded_tokens = {
                t for t in context.core_targets if set(t) & _SUBSTITUTABLE}
    elif trick in HIDDEN_TRICKS:
        if trick == HIDDEN_HAM_COLOR:
            color = _GHOST_COLORS[int(rng.integers(0, len(_GHOST_COLORS)))]
            style = f"color:{color}"
        elif trick == HIDDEN_HAM_TINY_FONT:
            size = _TINY_SIZES[int(rng.integers(0, len(_TINY_SIZES)))]
            style = f"font-size:{size}px"
        else:
            style = "display:none"
        doc, injected = _hidden_block(doc, rng, spec.hidden_pool, style)
        if truth:
            truth.injected_tokens = injected
    elif trick == INJECTION_VISIBLE_HAM:
        count = int(rng.integers(1, 4))
        extra = _draw(rng, phrases.HAMMY_PHRASES, count)
        nodes = [DomNode.element(
            "p", children=[DomNode.text_node(_sentence(rng, p))])
            for p in extra]
        doc.body.children[:0] = nodes
    elif trick == EMPHASIS_SIZE_BOLD:
        doc = _emphasize(doc, rng, context.designated_phrases)
    return doc


# -- corpus IO ----------------------------------------------------------


def _trick_assignment(spec: CorpusSpec, rng) -> list[str]:
    exact = {t: spec.trick_mix.get(t, 0.0) * spec.n_spam
             for t in TRICK_KINDS if t != NONE}
    counts = {t: int(np.floor(v)) for t, v in exact.items()}
    leftover = round(sum(exact.values())) - sum(counts.values())
    by_remainder = sorted(exact, key=lambda t: (-(exact[t] - counts[t]),
                                                TRICK_KINDS.index(t)))
    for t in by_remainder[:leftover]:
        counts[t] += 1
    tricks = []
    for t in TRICK_KINDS:
        if t != NONE:
            tricks.extend([t] * counts.get(t, 0))
    tricks.extend([NONE] * (spec.n_spam - len(tricks)))
    rng.shuffle(tricks)
    return tricks


def gen_corpus(spec: CorpusSpec, out_dir: str) -> LabeledCorpus:
    """Generate, write and return a labeled corpus (deterministic by seed).

    Layout: ``<out_dir>/emails/<id>.eml`` plus ``labels.tsv`` with columns
    id, label, trick.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    assignment = [("ham", NONE)] * spec.n_ham
    assignment += [("spam", t) for t in _trick_assignment(spec, rng)]
    order = rng.permutation(len(assignment))
    assignment = [assignment[int(i)] for i in order]

    emails_dir = os.path.join(out_dir, "emails")
    try:
        os.makedirs(emails_dir, exist_ok=True)
    except OSError as exc:
        raise IoFailure(str(exc)) from exc

    items = []
    manifest = ["id\tlabel\ttrick"]
    for i, (label, trick) in enumerate(assignment):
        email_id = f"m{i:06d}"
        doc, truth = gen_email(rng, label, trick, spec)
        data = email_to_bytes(doc)
        path = os.path.join(emails_dir, f"{email_id}.eml")
        try:
            with open(path, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            raise IoFailure(str(exc)) from exc
        manifest.append(f"{email_id}\t{label}\t{trick}")
        items.append(CorpusItem(id=email_id, doc=parse_email(data),
                                label=label, trick=trick, truth=truth))
    try:
        with open(os.path.join(out_dir, "labels.tsv"), "w",
                  encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(manifest) + "\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    return LabeledCorpus(items=items)


def load_corpus(corpus_dir: str) -> LabeledCorpus:
    """Load a corpus directory, strictly matching the manifest."""
    manifest_path = os.path.join(corpus_dir, "labels.tsv")
    if not os.path.exists(manifest_path):
        raise ManifestMismatch(f"missing labels.tsv in {corpus_dir}")
    with open(manifest_path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != "id\tlabel\ttrick":
        raise ManifestMismatch("labels.tsv must start with 'id\\tlabel\\ttrick'")

    emails_dir = os.path.join(corpus_dir, "emails")
    on_disk = {name[:-4] for name in os.listdir(emails_dir)
               if name.endswith(".eml")} if os.path.isdir(emails_dir) else set()

    items = []
    listed = set()
    for line in lines[1:]:
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ManifestMismatch(f"malformed manifest row: {line!r}")
        email_id, label, trick = parts
        if label not in ("spam", "ham") or trick not in TRICK_KINDS:
            raise ManifestMismatch(f"bad label/trick in row: {line!r}")
        if email_id in listed:
            raise ManifestMismatch(f"duplicate id {email_id}")
        listed.add(email_id)
        if email_id not in on_disk:
            raise ManifestMismatch(f"missing file for id {email_id}")
        path = os.path.join(emails_dir, f"{email_id}.eml")
        with open(path, "rb") as fh:
            try:
                doc = parse_email(fh.read())
            except Exception as exc:
                raise ManifestMismatch(
                    f"cannot parse {email_id}: {exc}") from exc
        items.append(CorpusItem(id=email_id, doc=doc, label=label,
                                trick=trick))
    extra = on_disk - listed
    if extra:
        raise ManifestMismatch(f"unlisted files present: {sorted(extra)[:5]}")
    return LabeledCorpus(items=items)
