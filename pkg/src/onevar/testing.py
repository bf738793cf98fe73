"""Testing candidate substitutions of the form a^l (and short run lists).

Sides are walked as maximal runs ``(letter, multiplicity)`` so a candidate
``a^l`` costs O(1) per occurrence of X no matter how large ``l`` is.
"""
from dataclasses import dataclass
from typing import Optional

from .equation import Family, FiniteSolution, letter_side

# ---------------------------------------------------------------------------
# run-length streaming


def _side_runs(system, eq, s, cand):
    """Maximal runs of side ``s`` of ``eq`` with X replaced by the runs ``cand``."""
    arr = system.arr(s)
    cur, cnt = None, 0
    lo, hi = eq.lo[s], eq.hi[s]
    for g in range(lo, hi):
        if g > lo:
            for c, k in cand:
                if c == cur:
                    cnt += k
                else:
                    if cnt:
                        yield cur, cnt
                    cur, cnt = c, k
        for c in arr[g].letters:
            if c == cur:
                cnt += 1
            else:
                if cnt:
                    yield cur, cnt
                cur, cnt = c, 1
    if cnt:
        yield cur, cnt


def equation_holds(system, eq, cand):
    sentinel = (None, 0)
    left = _side_runs(system, eq, 0, cand)
    right = _side_runs(system, eq, 1, cand)
    steps = 0
    while True:
        x = next(left, sentinel)
        y = next(right, sentinel)
        steps += 1
        if x != y:
            system.bump("work", steps)
            return False
        if x is sentinel:
            system.bump("work", steps)
            return True


def test_runs(system, cand):
    """True iff X := (the string given by runs ``cand``) solves every equation."""
    cand = [(c, k) for c, k in cand if k > 0]
    if not cand:
        raise ValueError("empty candidate")
    system.bump("tests")
    fast = getattr(system, "fast_test", None)
    if fast is not None:
        verdict = fast(cand)
        if verdict is not None:
            return verdict
    return all(equation_holds(system, eq, cand) for eq in system.equations)


def test_substitution(a, ell, system):
    """True iff X := a^ell makes every equation's sides equal."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return test_runs(system, [(a, ell)])


def runs_of(letters):
    out = []
    for c in letters:
        if out and out[-1][0] == c:
            out[-1][1] += 1
        else:
            out.append([c, 1])
    return [tuple(r) for r in out]


# ---------------------------------------------------------------------------
# the unique a^+ candidate


@dataclass(frozen=True)
class APrefixProfile:
    ell_A: int
    ell_B: int
    i: int
    found: bool  # whether the X side holds a letter other than a


def _symbols(system, eq, s, reverse=False):
    """Symbols of a side: letters, with ``None`` for X."""
    arr = system.arr(s)
    lo, hi = eq.lo[s], eq.hi[s]
    rng = range(hi - 1, lo - 1, -1) if reverse else range(lo, hi)
    for g in rng:
        if g != (hi - 1 if reverse else lo):
            yield None
        yield from (reversed(arr[g].letters) if reverse else arr[g].letters)


def _run_length(letters, a):
    n = 0
    while n < len(letters) and letters[n] == a:
        n += 1
    return n


def a_prefix_profile(a, system, eq_index=0, right=False):
    eq = system.equations[eq_index]
    ls = letter_side(system, eq)
    if right:
        ls = 0 if system.L[eq.hi[0] - 1].letters else 1
        word = list(reversed(system.arr(ls)[eq.hi[ls] - 1].letters))
    else:
        word = system.arr(ls)[eq.lo[ls]].letters
    ell_A = _run_length(word, a)
    ell_B = i = 0
    found = False
    for sym in _symbols(system, eq, 1 - ls, reverse=right):
        if sym is None:
            i += 1
        elif sym == a:
            ell_B += 1
        else:
            found = True
            break
    return APrefixProfile(ell_A, ell_B, i, found)


def test_simple_solution(a, system, right=False):
    """The only l with X := a^l a solution, or None (requires A0 not in a^+).

    With ``right`` set the mirrored test for the last letter is done.
    """
    eq = system.equations[0]
    word = (system.last_word() if right else system.first_word()).letters
    if all(c == a for c in word):
        raise ValueError("first word is a block: route to test_astar")
    prof = a_prefix_profile(a, system, 0, right)
    if not prof.found or prof.i == 0:
        return None
    diff = prof.ell_A - prof.ell_B
    if diff <= 0 or diff % prof.i:
        return None
    ell = diff // prof.i
    return ell if test_substitution(a, ell, system) else None


# ---------------------------------------------------------------------------
# all a^* solutions


@dataclass(frozen=True)
class AStarOutcome:
    kind: str  # "none" | "unique" | "all"
    ell: Optional[int] = None

    @classmethod
    def none(cls):
        return cls("none")

    @classmethod
    def all(cls):
        return cls("all")

    @classmethod
    def unique(cls, ell):
        return cls("unique", ell)


def _segments(system, eq, s, a):
    """Yield (#X, #a, separator) for the maximal {a, X} stretches of a side."""
    k = m = 0
    for sym in _symbols(system, eq, s):
        if sym is None:
            k += 1
        elif sym == a:
            m += 1
        else:
            yield k, m, sym
            k = m = 0
    yield k, m, None


def _solve_linear(k1, m1, k2, m2):
    """Solutions x >= 1 of k1*x + m1 = k2*x + m2: 'all', None, or the value."""
    if k1 == k2:
        return "all" if m1 == m2 else None
    num, den = m2 - m1, k1 - k2
    if num % den:
        return None
    x = num // den
    return x if x >= 1 else None


def test_astar(a, system):
    """Which a^l (l >= 1) solve the system: none, exactly one, or all."""
    steps = 0
    for eq in system.equations:
        left = _segments(system, eq, 0, a)
        right = _segments(system, eq, 1, a)
        while True:
            k1, m1, c1 = next(left)
            k2, m2, c2 = next(right)
            steps += 1
            sol = _solve_linear(k1, m1, k2, m2)
            if sol is None:
                system.bump("work", steps)
                return AStarOutcome.none()
            if sol != "all":
                system.bump("work", steps)
                return AStarOutcome.unique(sol) if test_substitution(a, sol, system) else AStarOutcome.none()
            if c1 != c2:
                system.bump("work", steps)
                return AStarOutcome.none()
            if c1 is None:
                break
    system.bump("work", steps)
    return AStarOutcome.all()


# ---------------------------------------------------------------------------
# reporting


@dataclass(frozen=True)
class Single:
    letter: int


@dataclass(frozen=True)
class Power:
    letter: int
    ell: int


@dataclass(frozen=True)
class Explicit:
    runs: tuple  # (current letter, count)


@dataclass(frozen=True)
class FamilyOf:
    letter: int


class Reporter:
    """Collects solutions of the current system as original-equation solutions."""

    def __init__(self, system):
        self.system = system
        self.finite = {}  # original length -> FiniteSolution
        self.family = None

    def _global_runs(self, runs):
        alph = self.system.alphabet
        return tuple((alph.glob(c), k) for c, k in runs)

    def add_runs(self, runs):
        alph = self.system.alphabet
        pre, suf, pw, sw = self.system.popped.snapshot()
        length = pw + sw + sum(k * alph.weight(c) for c, k in runs)
        if length not in self.finite:
            self.finite[length] = FiniteSolution(length, pre, self._global_runs(runs), suf)
        self.system.bump("reported")

    def add_family(self, a):
        if self.family is not None:
            raise RuntimeError("second infinite family reported")
        alph = self.system.alphabet
        pre, suf, pw, sw = self.system.popped.snapshot()
        witness = pre + ((alph.glob(a), 1),) + suf
        self.family = Family(pw + sw, alph.weight(a), witness, pw + sw + alph.weight(a))


def report(reporter, kind, system=None):
    if isinstance(kind, Single):
        reporter.add_runs([(kind.letter, 1)])
    elif isinstance(kind, Power):
        reporter.add_runs([(kind.letter, kind.ell)])
    elif isinstance(kind, Explicit):
        reporter.add_runs(list(kind.runs))
    elif isinstance(kind, FamilyOf):
        reporter.add_family(kind.letter)
    else:
        raise TypeError(f"unknown report kind {kind!r}")
