"""Plain text model of a one-variable equation and its line format."""
from dataclasses import dataclass

VAR = "X"


class ParseError(ValueError):
    def __init__(self, message, column=None):
        super().__init__(message if column is None else f"{message} (column {column})")
        self.column = column


@dataclass(frozen=True)
class ParsedEquation:
    """Both sides as strings; ``X`` is the variable, any other codepoint a letter."""

    lhs: str
    rhs: str

    @property
    def letters(self):
        return sorted(set(self.lhs + self.rhs) - {VAR})

    @property
    def size(self):
        return len(self.lhs) + len(self.rhs)

    @property
    def x_count(self):
        return self.lhs.count(VAR) + self.rhs.count(VAR)

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


def parse_equation(line):
    """Parse ``LHS = RHS``; whitespace is ignored and ``#`` starts a comment."""
    text = line.split("#", 1)[0]
    eq_col = text.find("=")
    if eq_col < 0:
        raise ParseError("missing '='")
    if text.count("=") > 1:
        raise ParseError("more than one '='", text.find("=", eq_col + 1) + 1)
    lhs = "".join(text[:eq_col].split())
    rhs = "".join(text[eq_col + 1 :].split())
    if not lhs:
        raise ParseError("empty left side", eq_col + 1)
    if not rhs:
        raise ParseError("empty right side", eq_col + 2)
    if VAR not in lhs and VAR not in rhs:
        verdict = "sides are equal" if lhs == rhs else "sides differ"
        raise ParseError(f"no variable X in equation ({verdict})")
    return ParsedEquation(lhs, rhs)


def substitute(side, value):
    return side.replace(VAR, value)
