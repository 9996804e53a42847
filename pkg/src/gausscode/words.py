"""Double occurrence words and paragraphs.

Characters are arbitrary string tokens, a word is a cyclic sequence of
characters, and a paragraph is a non-empty sequence of words whose
concatenation contains every character exactly twice.  Paragraphs are
the input language of the whole library: they are the unsigned Gauss
codes of collections of closed curves, with characters naming crossings.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from collections.abc import Iterable, Sequence

__all__ = [
    "DoubleOccurrenceViolation",
    "Word",
    "Paragraph",
    "parse_paragraph",
    "paragraph_from_words",
    "format_paragraph",
    "cyclic_equal",
    "parity_precheck",
]

_SEPARATORS = set(" \t\r\n,/")


class DoubleOccurrenceViolation(ValueError):
    """Raised when a character does not occur exactly twice in a paragraph."""

    def __init__(self, character: str, count: int) -> None:
        self.character = character
        self.count = count
        super().__init__(
            f"character {character!r} occurs {count} time(s), expected exactly 2"
        )


def _least_rotation(seq: tuple[str, ...]) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(seq)
    doubled = seq + seq
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


class Word:
    """A cyclic word.  Equality and hashing are rotation invariant."""

    __slots__ = ("letters", "_canonical")

    def __init__(self, letters: Iterable[str]) -> None:
        letters = tuple(letters)
        if not letters:
            raise ValueError("a word must contain at least one character")
        for tok in letters:
            if not isinstance(tok, str) or not tok:
                raise ValueError(f"invalid character token {tok!r}")
            if any(c in _SEPARATORS for c in tok):
                raise ValueError(f"character token {tok!r} contains a separator")
        self.letters = letters
        self._canonical: tuple[str, ...] | None = None

    def canonical(self) -> tuple[str, ...]:
        """The least rotation, used as the cyclic-equality key."""
        if self._canonical is None:
            self._canonical = self.rotated(_least_rotation(self.letters)).letters
        return self._canonical

    def rotated(self, i: int) -> "Word":
        i %= len(self.letters)
        return Word(self.letters[i:] + self.letters[:i])

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Word({' '.join(self.letters)!r})"


class Paragraph:
    """A sequence of cyclic words, every character occurring exactly twice."""

    __slots__ = ("words", "alphabet")

    def __init__(self, words: Iterable[Word | Sequence[str]]) -> None:
        ws = tuple(w if isinstance(w, Word) else Word(w) for w in words)
        if not ws:
            raise ValueError("a paragraph must contain at least one word")
        counts = Counter(tok for w in ws for tok in w.letters)
        for tok, cnt in counts.items():
            if cnt != 2:
                raise DoubleOccurrenceViolation(tok, cnt)
        self.words = ws
        self.alphabet = frozenset(counts)

    @property
    def length(self) -> int:
        """Total number of letters, always twice the alphabet size."""
        return sum(len(w) for w in self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Paragraph):
            return NotImplemented
        return self.words == other.words

    def __hash__(self) -> int:
        return hash(self.words)

    def __repr__(self) -> str:
        return f"Paragraph({format_paragraph(self)!r})"


def paragraph_from_words(words: Iterable[Sequence[str]]) -> Paragraph:
    """Build a validated paragraph from sequences of tokens."""
    return Paragraph(words)


def parse_paragraph(text: str) -> Paragraph:
    """Parse a paragraph from text.

    Tokens are separated by whitespace or commas and words by ``/`` or
    newlines, e.g. ``"1 2 / 1 2"``.  A JSON document of the form
    ``{"words": [["1", "2"], ...]}`` is also accepted.
    """
    if text is None or not text.strip():
        raise ValueError("empty input")
    s = text.strip()
    if s.startswith("{"):
        doc = json.loads(s)
        if not isinstance(doc, dict) or "words" not in doc:
            raise ValueError('JSON input must be of the form {"words": [[...], ...]}')
        return Paragraph([[str(tok) for tok in w] for w in doc["words"]])
    segments = re.split(r"[/\n]", s)
    words = [seg.replace(",", " ").split() for seg in segments]
    words = [w for w in words if w]
    if not words:
        raise ValueError("empty input")
    return Paragraph(words)


def format_paragraph(p: Paragraph) -> str:
    """Inverse of :func:`parse_paragraph` for the plain-text format."""
    return " / ".join(" ".join(w.letters) for w in p.words)


def cyclic_equal(a: Paragraph, b: Paragraph) -> bool:
    """Whether the words of ``a`` and ``b`` match up to rotation.

    True iff there is a bijection between the words of the two paragraphs
    matching each word with a cyclic rotation of itself.
    """
    if len(a.words) != len(b.words):
        return False
    return Counter(w.canonical() for w in a.words) == Counter(
        w.canonical() for w in b.words
    )


def parity_precheck(p: Paragraph) -> bool:
    """Evenness prefilter: a necessary condition for realizability.

    For every character whose two copies lie in the same word there must be
    an even number of letters (counted with multiplicity) between them.
    Character pairs split across two words are skipped.  This is a fast
    filter only; passing it does not imply the paragraph is a Gauss code.
    """
    for w in p.words:
        first: dict[str, int] = {}
        for i, tok in enumerate(w.letters):
            if tok in first:
                if (i - first[tok] - 1) % 2 != 0:
                    return False
            else:
                first[tok] = i
    return True
