"""Brute-force reference: every nonempty solution is a prefix of A0^omega.

Works directly on the text of the equation and shares no code with the
solver, so agreement between the two is meaningful.
"""
from dataclasses import dataclass, field

from .model import VAR, ParsedEquation, parse_equation


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleResult:
    epsilon: bool
    lengths: tuple
    strings: tuple
    truncated_at: int
    universal: bool = False
    first_word: str = field(default="", compare=False)


def _strip_common_prefix(lhs, rhs):
    n = 0
    m = min(len(lhs), len(rhs))
    while n < m and lhs[n] == rhs[n]:
        n += 1
    return lhs[n:], rhs[n:]


def leading_word(lhs, rhs):
    """A0 after removing identical leading symbols, or None when no nonempty X can work.

    Returns ``""`` when the two sides are identical.
    """
    lhs, rhs = _strip_common_prefix(lhs, rhs)
    if not lhs and not rhs:
        return ""
    if not lhs or not rhs:
        return None
    if lhs[0] != VAR and rhs[0] != VAR:
        return None  # two different letters face each other
    side = rhs if lhs[0] == VAR else lhs
    cut = side.find(VAR)
    return side if cut < 0 else side[:cut]


def candidate_for_length(first_word, length):
    """The prefix of first_word^omega of the given length."""
    if not first_word:
        raise ValueError("first word must be nonempty")
    reps = -(-length // len(first_word))
    return (first_word * reps)[:length]


def _as_parsed(equation):
    if isinstance(equation, ParsedEquation):
        return equation
    return parse_equation(equation)


def oracle_solve(equation, bound, budget=5 * 10**8):
    """All solutions of length <= bound, by substituting every candidate."""
    eq = _as_parsed(equation)
    lhs, rhs = eq.lhs, eq.rhs
    epsilon = lhs.replace(VAR, "") == rhs.replace(VAR, "")
    a0 = leading_word(lhs, rhs)
    if a0 == "":
        return OracleResult(True, tuple(range(1, bound + 1)), (), bound, universal=True)
    if a0 is None:
        return OracleResult(epsilon, (), (), bound)
    cost = bound * bound * max(eq.x_count, 1) + bound * eq.size
    if cost > budget:
        raise OracleBudgetExceeded(f"oracle cost {cost} exceeds budget {budget}")
    lengths, strings = [], []
    for length in range(1, bound + 1):
        cand = candidate_for_length(a0, length)
        if lhs.replace(VAR, cand) == rhs.replace(VAR, cand):
            lengths.append(length)
            strings.append(cand)
    return OracleResult(epsilon, tuple(lengths), tuple(strings), bound, first_word=a0)
