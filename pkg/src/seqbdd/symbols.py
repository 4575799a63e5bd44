"""Interned alphabet symbols (POS tags or test letters)."""
from functools import total_ordering

from .errors import InputError


@total_ordering
class Symbol:
    """An interned alphabet element.

    Symbols compare by their text (code-point order, which equals UTF-8
    byte order), never by id; ids are only dense handles.
    """

    __slots__ = ("id", "text")

    def __init__(self, id, text):
        self.id = id
        self.text = text

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.text == other.text

    def __lt__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.text < other.text

    def __hash__(self):
        return hash(self.text)

    def __repr__(self):
        return f"Symbol({self.id}, {self.text!r})"

    def __str__(self):
        return self.text


class Alphabet:
    def __init__(self):
        self._by_text = {}
        self._symbols = []

    def __len__(self):
        return len(self._symbols)

    def __iter__(self):
        return iter(self._symbols)

    def intern(self, token):
        if isinstance(token, Symbol):
            token = token.text
        if not isinstance(token, str) or not token:
            raise InputError(f"symbol text must be a non-empty string, got {token!r}")
        sym = self._by_text.get(token)
        if sym is None:
            sym = Symbol(len(self._symbols), token)
            self._symbols.append(sym)
            self._by_text[token] = sym
        return sym

    def lookup(self, token):
        """Return the symbol for ``token`` or ``None`` without interning."""
        if isinstance(token, Symbol):
            token = token.text
        return self._by_text.get(token)

    def __getitem__(self, sid):
        return self._symbols[sid]

    def text(self, sid):
        return self._symbols[sid].text
