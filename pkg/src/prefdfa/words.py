"""Alphabets, words, and the shortlex ordering.

Words are tuples of symbol tokens.  The empty word is the empty tuple and
is spelled ``eps`` in text formats; nonempty words are "."-joined tokens,
e.g. ``n.n.t.n.d``.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .errors import AlphabetError

Word = Tuple[str, ...]

EPSILON: Word = ()

EPSILON_TOKEN = "eps"

# The word separator, the sample relation symbols, and the comment marker
# may not occur inside symbol tokens; "eps" is the empty word's spelling.
_FORBIDDEN_CHARS = frozenset(".>=#")


def _check_token(token: str) -> None:
    if not token:
        raise AlphabetError("empty symbol token")
    if any(c in _FORBIDDEN_CHARS or c.isspace() for c in token):
        raise AlphabetError(f"symbol {token!r} contains whitespace or one of '.>=#'")
    if token == EPSILON_TOKEN:
        raise AlphabetError(f"symbol {token!r} is reserved for the empty word")


class Alphabet:
    """An ordered set of symbol tokens.

    The declaration order fixes the symbol order used for shortlex
    comparison; it is independent of the tokens' spelling.
    """

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        for token in symbols:
            _check_token(token)
        if len(set(symbols)) != len(symbols):
            raise AlphabetError(f"duplicate symbols in alphabet {symbols}")
        if not symbols:
            raise AlphabetError("alphabet must contain at least one symbol")
        self.symbols = symbols
        self._index = {a: i for i, a in enumerate(symbols)}

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self.symbols)})"

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise AlphabetError(f"symbol {token!r} not in alphabet") from None

    def check_word(self, word: Sequence[str]) -> Word:
        """Validate every symbol of *word* and return it as a tuple."""
        word = tuple(word)
        for token in word:
            if token not in self._index:
                raise AlphabetError(
                    f"symbol {token!r} of word {format_word(word)!r} not in alphabet"
                )
        return word

    def shortlex_key(self, word: Sequence[str]):
        """Sort key realizing the shortlex order: length first, then symbol order."""
        return (len(word), tuple(self._index[a] for a in word))


def shortlex_compare(alphabet: Alphabet, w1: Sequence[str], w2: Sequence[str]) -> int:
    """Return -1, 0, or 1 as *w1* is shortlex-less, equal, or greater than *w2*."""
    k1 = alphabet.shortlex_key(alphabet.check_word(w1))
    k2 = alphabet.shortlex_key(alphabet.check_word(w2))
    return (k1 > k2) - (k1 < k2)


def format_word(word: Sequence[str]) -> str:
    return ".".join(word) if word else EPSILON_TOKEN


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a "."-joined word; ``eps`` denotes the empty word."""
    text = text.strip()
    if not text:
        raise AlphabetError("empty word spelling (use 'eps' for the empty word)")
    word: Word = () if text == EPSILON_TOKEN else tuple(text.split("."))
    if alphabet is not None:
        word = alphabet.check_word(word)
    return word


def prefixes(word: Word) -> Iterable[Word]:
    """All prefixes of *word*, the empty word included."""
    for i in range(len(word) + 1):
        yield word[:i]
