"""Exception hierarchy shared by every module in the package."""


class SeqBDDError(Exception):
    """Base class for all errors raised by :mod:`seqbdd`."""


class InputError(SeqBDDError, ValueError):
    """Malformed or empty input (phrases, files, flags)."""


class ParseError(InputError):
    """A tagged-corpus line could not be parsed."""

    def __init__(self, message, lineno=None, path=None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.lineno = lineno
        self.path = path


class StructuralError(SeqBDDError):
    """The graph violates a structural precondition (e.g. it contains a cycle)."""


class UsageError(SeqBDDError, ValueError):
    """An operation was applied to an object it is not defined for."""


class TracingError(SeqBDDError):
    """A phrase could not be traced through a graph that should accept it."""

    def __init__(self, phrase):
        super().__init__(f"phrase not accepted by graph: {' '.join(map(str, phrase))!r}")
        self.phrase = tuple(phrase)


class CapacityError(SeqBDDError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds the cap of {cap}")
        self.cap = cap
