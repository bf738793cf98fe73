"""Systems of one-variable equations in normal form.

An equation stores each side as a contiguous range of the global word
arrays ``system.L`` / ``system.R`` (the words of the input's left and right
side); consecutive words of a range are separated by one occurrence of X.
Splitting an equation only cuts ranges, so word numbers stay the input's
numbers for the whole run.

Inner words (neither first nor last in their side) may be shared between
occurrences; boundary words are always private copies, because only they
are ever trimmed.
"""
import bisect
from dataclasses import dataclass, field
from typing import Optional

from .alphabet import Alphabet, PoppedRecord
from .model import VAR


class SolverInvariantError(RuntimeError):
    """An internal invariant of the solver does not hold."""


class Word:
    __slots__ = ("letters", "short_since")

    def __init__(self, letters, short_since=None):
        self.letters = letters
        self.short_since = short_since

    def copy(self):
        return Word(list(self.letters), self.short_since)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return f"Word({self.letters})"


class _Shared:
    """Registry entry of an inner word: its occurrences on both sides."""

    __slots__ = ("word", "occ")

    def __init__(self, word):
        self.word = word
        self.occ = ([], [])  # sorted global numbers in L and in R

    @property
    def refcount(self):
        return len(self.occ[0]) + len(self.occ[1])


@dataclass
class Equation:
    lo: list  # [lo_L, lo_R]
    hi: list  # [hi_L, hi_R], half-open

    def nwords(self, s):
        return self.hi[s] - self.lo[s]

    def x_count(self, s):
        return self.hi[s] - self.lo[s] - 1


@dataclass
class EqSystem:
    alphabet: Alphabet
    L: list
    R: list
    equations: list
    N: int = 100
    popped: PoppedRecord = field(default_factory=PoppedRecord)
    phase: int = 0
    registry: dict = field(default_factory=dict)  # id(word) -> _Shared
    stats: dict = field(default_factory=dict)

    def arr(self, s):
        return self.L if s == 0 else self.R

    def word(self, s, g):
        return (self.L if s == 0 else self.R)[g]

    def side_words(self, eq, s):
        a = self.arr(s)
        return a[eq.lo[s] : eq.hi[s]]

    def boundary_words(self):
        seen = set()
        for eq in self.equations:
            for s in (0, 1):
                a = self.arr(s)
                for g in (eq.lo[s], eq.hi[s] - 1):
                    w = a[g]
                    if id(w) not in seen:
                        seen.add(id(w))
                        yield w

    def distinct_words(self):
        """Every stored word object once: boundary copies then inner words."""
        yield from self.boundary_words()
        for entry in self.registry.values():
            yield entry.word

    def first_word(self, k=0):
        eq = self.equations[k]
        s = letter_side(self, eq)
        return self.arr(s)[eq.lo[s]]

    def last_word(self, k=0):
        eq = self.equations[k]
        for s in (0, 1):
            w = self.arr(s)[eq.hi[s] - 1]
            if w.letters:
                return w
        raise SolverInvariantError("equation without a last word")

    def total_size(self):
        size = 0
        for eq in self.equations:
            for s in (0, 1):
                a = self.arr(s)
                size += sum(len(a[g]) for g in range(eq.lo[s], eq.hi[s])) + eq.x_count(s)
        return size

    def x_total(self):
        return sum(eq.x_count(0) + eq.x_count(1) for eq in self.equations)

    def bump(self, key, amount=1):
        self.stats[key] = self.stats.get(key, 0) + amount

    # -- registry maintenance ------------------------------------------
    def _register(self, s, g):
        w = self.arr(s)[g]
        entry = self.registry.get(id(w))
        if entry is None:
            entry = self.registry[id(w)] = _Shared(w)
        bisect.insort(entry.occ[s], g)

    def release(self, s, g):
        """Drop the occurrence at (s, g) from the registry, if registered."""
        w = self.arr(s)[g]
        entry = self.registry.get(id(w))
        if entry is None:
            return None
        occ = entry.occ[s]
        k = bisect.bisect_left(occ, g)
        if k < len(occ) and occ[k] == g:
            occ.pop(k)
            if entry.refcount == 0:
                del self.registry[id(w)]
        return entry

    def own(self, s, g):
        """Make the word at (s, g) a private copy (it is becoming a boundary word)."""
        a = self.arr(s)
        w = a[g]
        entry = self.registry.get(id(w))
        if entry is None:
            return w
        self.release(s, g)
        if id(w) in self.registry:
            w = w.copy()
            a[g] = w
        return w

    def drop_equation(self, k):
        eq = self.equations.pop(k)
        for s in (0, 1):
            for g in range(eq.lo[s] + 1, eq.hi[s] - 1):
                self.release(s, g)


def make_system(parsed, N=100, share=False, alphabet=None):
    """Build a system with one equation from a :class:`ParsedEquation`.

    With ``share`` set, equal inner words (on either side) are backed by a
    single object.
    """
    alphabet = alphabet or Alphabet()
    arrays = []
    for side in (parsed.lhs, parsed.rhs):
        arrays.append([Word([alphabet.intern(c) for c in chunk]) for chunk in side.split(VAR)])
    system = EqSystem(alphabet, arrays[0], arrays[1], [Equation([0, 0], [len(arrays[0]), len(arrays[1])])], N=N)
    canon = {}
    for s in (0, 1):
        a = arrays[s]
        for g in range(1, len(a) - 1):
            if share:
                a[g] = canon.setdefault(tuple(a[g].letters), a[g])
            system._register(s, g)
    mark_short(system)
    return system


def mark_short(system):
    for w in system.distinct_words():
        if len(w.letters) > system.N:
            w.short_since = None
        elif w.short_since is None:
            w.short_since = system.phase


def letter_side(system, eq):
    """Index of the side whose first word is nonempty (0 if both are)."""
    if system.L[eq.lo[0]].letters or not system.R[eq.lo[1]].letters:
        return 0
    return 1


# ---------------------------------------------------------------------------
# Canonicalisation


OK = "ok"
NO_SOLUTION = "no-solution"
UNIVERSAL = "universal"
UNIQUE = "unique-explicit"


@dataclass
class CanonOutcome:
    kind: str
    eq_index: Optional[int] = None
    # candidate of a UNIQUE outcome: current letters, or None when no length fits
    candidate: Optional[list] = None

    def __bool__(self):
        return self.kind == OK


def _trim_front(system, eq):
    """Trim identical leading symbols.  Returns None, NO_SOLUTION or 'empty'."""
    L, R = system.L, system.R
    while True:
        wl, wr = L[eq.lo[0]].letters, R[eq.lo[1]].letters
        if wl and wr:
            if wl[0] != wr[0]:
                return NO_SOLUTION
            n = 0
            m = min(len(wl), len(wr))
            while n < m and wl[n] == wr[n]:
                n += 1
            if n < len(wl) and n < len(wr):
                return NO_SOLUTION
            del wl[:n]
            del wr[:n]
            continue
        xl, xr = eq.x_count(0), eq.x_count(1)
        if not wl and not wr:
            if xl and xr:
                eq.lo[0] += 1
                eq.lo[1] += 1
                system.own(0, eq.lo[0])
                system.own(1, eq.lo[1])
                continue
            if not xl and not xr:
                return "empty"
            return NO_SOLUTION  # one side is empty, the other still holds an X
        if not wl and not xl:
            return NO_SOLUTION
        if not wr and not xr:
            return NO_SOLUTION
        return None


def _trim_back(system, eq):
    L, R = system.L, system.R
    while True:
        wl, wr = L[eq.hi[0] - 1].letters, R[eq.hi[1] - 1].letters
        if wl and wr:
            if wl[-1] != wr[-1]:
                return NO_SOLUTION
            n = 0
            m = min(len(wl), len(wr))
            while n < m and wl[-1 - n] == wr[-1 - n]:
                n += 1
            if n < len(wl) and n < len(wr):
                return NO_SOLUTION
            del wl[len(wl) - n :]
            del wr[len(wr) - n :]
            continue
        xl, xr = eq.x_count(0), eq.x_count(1)
        if not wl and not wr:
            if xl and xr:
                eq.hi[0] -= 1
                eq.hi[1] -= 1
                system.own(0, eq.hi[0] - 1)
                system.own(1, eq.hi[1] - 1)
                continue
            if not xl and not xr:
                return "empty"
            return NO_SOLUTION
        if not wl and not xl:
            return NO_SOLUTION
        if not wr and not xr:
            return NO_SOLUTION
        return None


def _unique_candidate(system, eq):
    """Candidate for an equation with one X-free side: X-side vs explicit word."""
    xs = 0 if eq.x_count(0) else 1
    w = system.arr(1 - xs)[eq.lo[1 - xs]].letters
    a = system.arr(xs)
    fixed = sum(len(a[g]) for g in range(eq.lo[xs], eq.hi[xs]))
    k = eq.x_count(xs)
    rest = len(w) - fixed
    if rest <= 0 or rest % k:
        return None
    return list(w[: rest // k])


def _shape(system, eq):
    L, R = system.L, system.R
    return (
        tuple(eq.lo),
        tuple(eq.hi),
        len(L[eq.lo[0]]),
        len(R[eq.lo[1]]),
        len(L[eq.hi[0] - 1]),
        len(R[eq.hi[1] - 1]),
    )


def canonicalize(system):
    """Bring every equation to normal form, dropping trivially true ones."""
    k = 0
    while k < len(system.equations):
        eq = system.equations[k]
        while True:
            before = _shape(system, eq)
            res = _trim_front(system, eq) or _trim_back(system, eq)
            if res or _shape(system, eq) == before:
                break
        if res == NO_SOLUTION:
            return CanonOutcome(NO_SOLUTION, k)
        if res == "empty":
            system.drop_equation(k)
            continue
        if not eq.x_count(0) or not eq.x_count(1):
            return CanonOutcome(UNIQUE, k, _unique_candidate(system, eq))
        k += 1
    if not system.equations:
        return CanonOutcome(UNIVERSAL)
    return CanonOutcome(OK)


def epsilon_check(parsed):
    """True iff X := empty word solves the (original) equation."""
    return parsed.lhs.replace(VAR, "") == parsed.rhs.replace(VAR, "")


def is_letter_block(letters):
    return bool(letters) and all(c == letters[0] for c in letters)


@dataclass(frozen=True)
class Profile:
    a: int
    b: int
    a_prefix_len: int
    b_suffix_len: int


def first_last_profile(system):
    """First/last letter of every solution and their run lengths, read off equation 0."""
    first = system.first_word().letters
    last = system.last_word().letters
    a, b = first[0], last[-1]
    pa = 0
    while pa < len(first) and first[pa] == a:
        pa += 1
    pb = 0
    while pb < len(last) and last[-1 - pb] == b:
        pb += 1
    return Profile(a, b, pa, pb)


def split_equation(system, k, gl, gr):
    """Replace ``A' X C X A'' = B' X C X B''`` by ``A' = B'`` and ``A'' = B''``.

    ``gl``/``gr`` are the global numbers of the two matched copies of C.
    The caller re-canonicalises afterwards.
    """
    eq = system.equations[k]
    if not (eq.lo[0] < gl < eq.hi[0] - 1 and eq.lo[1] < gr < eq.hi[1] - 1):
        raise ValueError("cut points must be inner words of the equation")
    if system.L[gl].letters != system.R[gr].letters:
        raise ValueError("cut points not aligned across sides")
    system.release(0, gl)
    system.release(1, gr)
    first = Equation([eq.lo[0], eq.lo[1]], [gl, gr])
    second = Equation([gl + 1, gr + 1], [eq.hi[0], eq.hi[1]])
    system.equations[k : k + 1] = [first, second]
    for s, g in ((0, gl), (1, gr)):
        system.own(s, g - 1)
        system.own(s, g + 1)
    return first, second


def check_form(system):
    """List violations of the normal form (empty for a correct system)."""
    problems = []
    for k, eq in enumerate(system.equations):
        tag = f"@eq{k}"
        firsts = [system.arr(s)[eq.lo[s]].letters for s in (0, 1)]
        lasts = [system.arr(s)[eq.hi[s] - 1].letters for s in (0, 1)]
        if not firsts[0] and not firsts[1]:
            problems.append(f"A0 empty {tag}")
        elif firsts[0] and firsts[1]:
            problems.append(f"both sides start with a letter {tag}")
        if lasts[0] and lasts[1]:
            problems.append(f"both terminal words nonempty {tag}")
        elif not lasts[0] and not lasts[1]:
            problems.append(f"both terminal words empty {tag}")
        for s in (0, 1):
            if eq.x_count(s) < 1:
                problems.append(f"side {s} without X {tag}")
            a = system.arr(s)
            for g in (eq.lo[s], eq.hi[s] - 1):
                if id(a[g]) in system.registry:
                    problems.append(f"boundary word {s}:{g} is shared {tag}")
            for g in range(eq.lo[s] + 1, eq.hi[s] - 1):
                entry = system.registry.get(id(a[g]))
                if entry is None or g not in entry.occ[s]:
                    problems.append(f"inner word {s}:{g} not registered {tag}")
        if k and system.equations[k - 1].hi[0] > eq.lo[0]:
            problems.append(f"equations out of order {tag}")
    return problems


# ---------------------------------------------------------------------------
# Solution sets


@dataclass(frozen=True)
class FiniteSolution:
    length: int
    prefix: tuple  # (global id, count) runs
    middle: tuple
    suffix: tuple


@dataclass(frozen=True)
class Family:
    """Solutions of lengths ``base_length + l * period_length`` for ``l >= 1``.

    All of them are prefixes of one infinite word with period
    ``period_length``, so the family is ``{W^l V}`` where ``W`` and ``V`` are
    the prefixes of ``witness`` (a member, as global letter runs) of lengths
    ``period_length`` and ``base_length``.
    """

    base_length: int
    period_length: int
    witness: tuple
    witness_length: int

    def lengths(self, bound):
        return list(range(self.base_length + self.period_length, bound + 1, self.period_length))

    def contains(self, length):
        d = length - self.base_length
        return d > 0 and d % self.period_length == 0


@dataclass
class SolutionSet:
    epsilon: bool = False
    universal: bool = False
    finite: list = field(default_factory=list)
    family: Optional[Family] = None

    def lengths(self, bound):
        """Nonempty solution lengths up to ``bound``."""
        out = {s.length for s in self.finite if s.length <= bound}
        if self.family is not None:
            out.update(self.family.lengths(bound))
        return sorted(out)

    def finite_lengths(self):
        return sorted(s.length for s in self.finite)

    def signature(self):
        """Engine-independent key: solutions are determined by their lengths."""
        fam = None if self.family is None else (self.family.base_length, self.family.period_length)
        return (self.epsilon, self.universal, tuple(self.finite_lengths()), fam)
