"""Exceptions raised by neuralcanon."""

from typing import Optional


class NeuralCanonError(Exception):
    """Base class for all neuralcanon errors."""


class WidthMismatchError(NeuralCanonError):
    """Operands live in polynomial rings of different ambient width."""

    def __init__(self, left: int, right: int):
        super().__init__(f"incompatible ambient rings: n={left} vs n={right}")
        self.left = left
        self.right = right


class BooleanDivisibleError(NeuralCanonError):
    """A monomial that must be Boolean-free is divisible by x_i*y_i."""

    def __init__(self, index: int, monomial: Optional[str] = None):
        where = f" in {monomial}" if monomial else ""
        super().__init__(f"x{index}*y{index} divides the monomial{where}")
        self.index = index


class MonomialParseError(NeuralCanonError):
    """Text could not be parsed as a monomial, ideal or code."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DomainError(NeuralCanonError):
    """Input lies outside the setting the algorithms are defined for."""


class InvalidSubstitutionError(NeuralCanonError):
    """A placeholder image would introduce a shared index."""

    def __init__(self, placeholder: int, index: int):
        super().__init__(
            f"image of z{placeholder} shares index {index} with the base ideal"
        )
        self.placeholder = placeholder
        self.index = index
