"""Exception types shared across the library.

The CLI maps these onto distinct exit codes, so user-input problems
(parse errors, dimension mismatches, malformed gauge files) must raise
one of the classes below rather than a bare ValueError.
"""


class AvmodError(ValueError):
    """Base class for all library errors."""


class DimensionError(AvmodError):
    """Two values of different ambient dimension were combined."""


class RestrictionError(AvmodError):
    """A generator outside the origin-vanishing subalgebra appeared where
    only origin-vanishing fields are allowed."""


class ParseError(AvmodError):
    """Syntax or dimension error in an input expression."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class SpecFormatError(AvmodError):
    """A gauge-module spec file is structurally invalid."""


def check_same_dimension(n_left: int, n_right: int, what: str = "operands") -> None:
    if n_left != n_right:
        raise DimensionError(f"{what} have mismatched dimensions {n_left} and {n_right}")
