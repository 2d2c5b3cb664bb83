"""Exception types and the global degree cap."""

import os


class LextabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LextabError, ValueError):
    """An argument lies outside the domain of the operation."""


class SizeLimitError(LextabError):
    """The requested degree exceeds the configured cap."""


_DEFAULT_CAP = 12
_max_degree = int(os.environ.get("LEXTAB_MAX_DEGREE", _DEFAULT_CAP))


def max_degree() -> int:
    return _max_degree


def set_max_degree(n: int) -> None:
    global _max_degree
    if n < 0:
        raise DomainError(f"degree cap must be nonnegative, got {n}")
    _max_degree = n


def check_degree(n: int) -> None:
    if n > _max_degree:
        raise SizeLimitError(f"degree {n} exceeds the configured cap {_max_degree}")
