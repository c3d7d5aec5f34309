"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SupertwistError(Exception):
    """Base class; ``code`` is the short machine-readable reason used by the CLI."""

    code = "error"


class PreconditionError(SupertwistError, ValueError):
    code = "precondition"


class WindowError(SupertwistError, LookupError):
    """A coefficient was requested outside the known truncation window."""

    code = "window"


class NotOneDimensionalError(PreconditionError):
    code = "not-one-dimensional"

    def __init__(self, root, value):
        self.root = root
        self.value = value
        super().__init__(f"weight does not vanish on h_{root}: value {value}")


class IncompatibleTwistError(PreconditionError):
    code = "incompatible-twist"

    def __init__(self, root):
        self.root = root
        super().__init__(f"N(w) meets the Levi roots: witness {root}")
