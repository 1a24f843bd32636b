"""Plaintext screenplay parsing.

Input follows a line-oriented convention, classified per line after the
trailing whitespace is trimmed:

1. A line whose prefix is "INT.", "EXT." or "INT/EXT" (case-insensitive)
   is a scene heading.
2. A line made only of uppercase letters, spaces, periods and parentheses,
   at most 40 characters long and followed directly by a non-blank line,
   is a character cue; the non-blank lines below it, up to the next blank
   line, form one dialogue element.
3. Any other non-blank line is action; consecutive action lines merge into
   one element.
4. Blank lines terminate the current element.

Leading indentation is kept, so an indented heading is demoted to action.
Inside a dialogue block no reclassification happens: every non-blank line
belongs to the dialogue until a blank line closes it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyDocument, MalformedEncoding, NoDialogue

TOKEN_RE = re.compile(r"[^\W_]+")

_HEADING_PREFIXES = ("int.", "ext.", "int/ext")
_CUE_CHARS_RE = re.compile(r"^[A-Z .()]+$")
_TRAILING_PAREN_RE = re.compile(r"\s*\([^()]*\)\s*$")
_CUE_MAX_LEN = 40


class ElementKind(Enum):
    SCENE_HEADING = "scene_heading"
    ACTION = "action"
    DIALOGUE = "dialogue"


@dataclass
class ScreenplayElement:
    kind: ElementKind
    text: str
    ordinal: int
    character: str | None = None


@dataclass
class Screenplay:
    id: str
    title: str
    elements: list[ScreenplayElement]
    tokens: list[tuple[str, int]] = field(repr=False)  # (token, element ordinal)

    def token_list(self) -> list[str]:
        return [tok for tok, _ in self.tokens]

    def element_token_starts(self) -> dict[int, int]:
        """First document-token index of every element that has tokens."""
        starts: dict[int, int] = {}
        for pos, (_, ordinal) in enumerate(self.tokens):
            starts.setdefault(ordinal, pos)
        return starts


@dataclass
class CharacterProfile:
    name: str
    utterances: list[tuple[int, list[str]]]  # (element ordinal, tokens), document order
    total_tokens: int = 0


def tokenize(text: str) -> list[str]:
    """Lowercase and split on maximal runs of non-alphanumeric characters."""
    return TOKEN_RE.findall(text.lower())


def canonical_character(cue: str) -> str:
    """Canonical speaker name: trimmed cue with trailing parentheticals removed."""
    name = cue.strip()
    while True:
        stripped = _TRAILING_PAREN_RE.sub("", name)
        if stripped == name:
            return name.strip()
        name = stripped


def _is_heading(line: str) -> bool:
    return line.lower().startswith(_HEADING_PREFIXES)


def _cue_name(line: str) -> str | None:
    if len(line) > _CUE_MAX_LEN or not _CUE_CHARS_RE.match(line):
        return None
    name = canonical_character(line)
    # a cue needs at least one letter left once parentheticals are gone
    return name if any(ch.isalpha() for ch in name) else None


def parse_screenplay(raw: str | bytes, id: str, title: str | None = None) -> Screenplay:
    """Parse raw screenplay text into classified elements plus a token stream.

    Raises EmptyDocument when nothing tokenizes, MalformedEncoding when a
    bytes input is not valid UTF-8.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedEncoding(f"{id}: input is not valid UTF-8: {exc}") from exc

    lines = [line.rstrip() for line in raw.splitlines()]
    elements: list[ScreenplayElement] = []
    pending_action: list[str] = []

    def emit(kind: ElementKind, parts: list[str], character: str | None = None) -> None:
        text = " ".join(part.strip() for part in parts)
        elements.append(
            ScreenplayElement(kind=kind, text=text, ordinal=len(elements), character=character)
        )

    def close_action() -> None:
        if pending_action:
            emit(ElementKind.ACTION, pending_action)
            pending_action.clear()

    i = 0
    while i < len(lines):
        line = lines[i]
        if not line:
            close_action()
            i += 1
            continue
        if _is_heading(line):
            close_action()
            emit(ElementKind.SCENE_HEADING, [line])
            i += 1
            continue
        name = _cue_name(line) if i + 1 < len(lines) and lines[i + 1] else None
        if name:
            close_action()
            block: list[str] = []
            i += 1
            while i < len(lines) and lines[i]:
                block.append(lines[i])
                i += 1
            emit(ElementKind.DIALOGUE, block, character=name)
            continue
        pending_action.append(line)
        i += 1
    close_action()

    tokens = [(tok, el.ordinal) for el in elements for tok in tokenize(el.text)]
    if not tokens:
        raise EmptyDocument(f"{id}: no tokens survive parsing")
    return Screenplay(id=id, title=title if title is not None else id, elements=elements, tokens=tokens)


def top_speaking_characters(screenplay: Screenplay, k: int = 2) -> list[CharacterProfile]:
    """The k characters with the most spoken tokens, ties broken by name.

    Returns fewer than k profiles when the screenplay has fewer distinct
    speakers; raises NoDialogue when it has none at all.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    by_name: dict[str, CharacterProfile] = {}
    for el in screenplay.elements:
        if el.kind is not ElementKind.DIALOGUE:
            continue
        toks = tokenize(el.text)
        profile = by_name.setdefault(el.character, CharacterProfile(el.character, []))
        profile.utterances.append((el.ordinal, toks))
        profile.total_tokens += len(toks)
    if not by_name:
        raise NoDialogue(f"{screenplay.id}: no dialogue elements")
    ranked = sorted(by_name.values(), key=lambda p: (-p.total_tokens, p.name))
    return ranked[:k]
