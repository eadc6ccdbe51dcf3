from __future__ import annotations


class InputError(ValueError):
    """Arguments violate an operation's preconditions."""


class ResourceError(RuntimeError):
    """A size or time limit was exceeded."""
