"""Main loop: phases of block compression, popping and pair compression."""
import math
import time
from dataclasses import dataclass, field, replace
from typing import Optional

from .equation import (
    NO_SOLUTION,
    UNIQUE,
    UNIVERSAL,
    SolutionSet,
    SolverInvariantError,
    canonicalize,
    check_form,
    epsilon_check,
    is_letter_block,
    make_system,
    mark_short,
)
from .model import VAR, ParsedEquation, parse_equation
from .recompress import (
    Resolved,
    RouteToAStar,
    block_comp,
    compress_pairs,
    crossing_blocks,
    crossing_pairs,
    explicit_pairs,
    pair_comp,
    preproc,
    word_slots,
)
from .testing import Explicit, FamilyOf, Power, Reporter, report, runs_of, test_astar, test_runs

BASELINE = "baseline"
LINEAR = "linear"


@dataclass
class SolverOptions:
    N: int = 100
    engine: str = LINEAR
    overdue_delay: Optional[int] = 32  # None: never remove overdue words
    max_expand: int = 10**4
    collect_stats: bool = False
    check_invariants: bool = False
    verify: bool = True  # re-check expandable solutions against the input text

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be at least 2")
        if self.overdue_delay is not None and self.overdue_delay < 1:
            raise ValueError("overdue_delay must be at least 1")
        if self.engine not in (BASELINE, LINEAR):
            raise ValueError(f"unknown engine {self.engine!r}")


@dataclass
class PhaseStats:
    index: int
    size_before: int = 0
    size_after: int = 0
    long_before: int = 0
    long_after: int = 0
    crossing_after_preproc: int = 0
    crossing_blocks_after_block_comp: int = 0
    pairs_listed: int = 0
    pairs_compressed: int = 0
    engine: str = BASELINE
    violations: list = field(default_factory=list)


@dataclass
class SolveResult:
    solutions: SolutionSet
    stats: dict
    alphabet: object = field(default=None, repr=False, compare=False)

    @property
    def phases(self):
        return self.stats.get("phases", 0)


def phase_bound(n, N):
    """Phases allowed for an input of size n: geometric shrinking, then the short tail."""
    return math.ceil(math.log(max(n, 2), 4 / 3)) + N + 2


def shrink_limit(length, N):
    """Largest length a word of the given length may have after one phase."""
    if length > N and N >= 100:
        return (3 * length) // 4
    return (2 * length + 25) // 3


def _phase_snapshot(system):
    words = {}
    for w, _, _ in word_slots(system):
        words[id(w)] = (w, len(w.letters))
    first = system.first_word()
    return words, len(first.letters)


def _check_phase(system, snapshot, stats):
    words, first_len = snapshot
    N = system.N
    for w, _, _ in word_slots(system):
        entry = words.get(id(w))
        if entry is None or entry[0] is not w:
            continue
        before, after = entry[1], len(w.letters)
        if before > N and after > shrink_limit(before, N):
            stats.violations.append(f"long word {before} -> {after}")
        if N >= 100 and before <= N and after > N:
            stats.violations.append(f"short word {before} became long ({after})")
    if 2 <= first_len <= N and len(system.first_word().letters) >= first_len:
        stats.violations.append(f"short first word did not shrink ({first_len})")
    stats.violations.extend(check_form(system))


def run_phase(system, options, reporter, engine=BASELINE):
    """One phase; raises Resolved/RouteToAStar when the system is decided."""
    alph = system.alphabet
    alph.start_phase()
    stats = PhaseStats(system.phase, engine=engine)
    check = options.check_invariants
    if check:
        stats.size_before = system.total_size()
        snapshot = _phase_snapshot(system)
    block_comp(system, reporter)
    if check:
        stats.crossing_blocks_after_block_comp = len(crossing_blocks(system))
        if stats.crossing_blocks_after_block_comp:
            stats.violations.append("crossing block after block compression")
    preproc(system, reporter)
    crossing = crossing_pairs(system)
    stats.crossing_after_preproc = len(crossing)
    if len(crossing) > 2:
        stats.violations.append(f"{len(crossing)} crossing pairs after preproc")
    fresh = set(alph.block_letters)
    listed = explicit_pairs(system, exclude=fresh)
    stats.pairs_listed = len(listed | set(crossing))
    stats.pairs_compressed = compress_pairs(system, listed.difference(crossing))
    for a, b in crossing:
        if a not in fresh and b not in fresh:
            stats.pairs_compressed += pair_comp(a, b, system, reporter)
    end_phase(system)
    if check:
        stats.size_after = system.total_size()
        _check_phase(system, snapshot, stats)
    return stats


def end_phase(system):
    system.alphabet.renumber([w.letters for w, _, _ in word_slots(system)])
    system.phase += 1
    mark_short(system)


def guard_letter(system):
    """Letter c when the first or the last word of the first equation lies in c^+."""
    first = system.first_word().letters
    if is_letter_block(first):
        return first[0]
    last = system.last_word().letters
    if is_letter_block(last):
        return last[0]
    return None


def finish_astar(system, reporter, letter):
    out = test_astar(letter, system)
    if out.kind == "all":
        report(reporter, FamilyOf(letter))
    elif out.kind == "unique":
        report(reporter, Power(letter, out.ell))


def _solve_unique(system, reporter, outcome):
    if outcome.candidate:
        runs = runs_of(outcome.candidate)
        if test_runs(system, runs):
            report(reporter, Explicit(tuple(runs)))


def _engine_driver(options):
    if options.engine == LINEAR:
        from .linear_engine import LinearDriver

        return LinearDriver(options)
    return None


def solve(equation, options=None):
    """Solve a one-variable equation given as text or :class:`ParsedEquation`."""
    options = options or SolverOptions()
    parsed = equation if isinstance(equation, ParsedEquation) else parse_equation(equation)
    t0 = time.perf_counter()
    eps = epsilon_check(parsed)
    driver = _engine_driver(options)
    system = make_system(parsed, N=options.N, share=driver is not None)
    reporter = Reporter(system)
    phase_stats = []
    violations = []
    universal = False
    outcome = canonicalize(system)
    if outcome.kind == UNIVERSAL:
        universal = True
    elif outcome.kind == UNIQUE:
        _solve_unique(system, reporter, outcome)
    elif outcome.kind != NO_SOLUTION:
        if driver is not None:
            driver.attach(system, parsed)
        try:
            while True:
                letter = guard_letter(system)
                if letter is not None:
                    finish_astar(system, reporter, letter)
                    break
                engine = BASELINE
                if driver is not None and driver.before_phase(system, reporter):
                    engine = LINEAR
                st = run_phase(system, options, reporter, engine)
                violations.extend(f"phase {st.index}: {v}" for v in st.violations)
                if options.collect_stats:
                    phase_stats.append(st)
        except RouteToAStar as route:
            finish_astar(system, reporter, route.letter)
        except Resolved:
            pass
    solutions = assemble(reporter, eps, universal)
    if options.verify:
        verify_solutions(parsed, system.alphabet, solutions, options.max_expand)
    stats = dict(system.stats)
    stats["phases"] = system.phase
    stats["phase_bound"] = phase_bound(parsed.size, options.N)
    stats["size"] = parsed.size
    stats["engine"] = options.engine
    stats["violations"] = violations
    if stats["phases"] > stats["phase_bound"]:
        violations.append(f"phase count {stats['phases']} above bound {stats['phase_bound']}")
    if driver is not None:
        stats.update(driver.stats())
    if options.collect_stats:
        stats["phase_stats"] = phase_stats
    stats["wall_time"] = time.perf_counter() - t0
    return SolveResult(solutions, stats, system.alphabet)


def assemble(reporter, epsilon, universal):
    """Finite solutions and the family in canonical form.

    The family's base is lowered while its ``l = 0`` member was reported as a
    finite solution, and finite solutions inside the family are dropped, so
    equal solution sets always assemble identically.
    """
    family = reporter.family
    lengths = set(reporter.finite)
    if family is not None:
        base, period = family.base_length, family.period_length
        while base >= period and base in lengths:
            base -= period
        if base != family.base_length:
            family = replace(family, base_length=base)
        lengths = {n for n in lengths if not family.contains(n)}
    finite = [reporter.finite[n] for n in sorted(lengths)]
    return SolutionSet(epsilon=epsilon or universal, universal=universal, finite=finite, family=family)


def expand_runs(alphabet, runs, limit):
    parts = []
    for gid, count in runs:
        parts.append(alphabet.expand_global(gid, limit) * count)
    return "".join(parts)


def solution_string(alphabet, sol, limit):
    """The original-alphabet string of a finite solution, or None past ``limit``."""
    if sol.length > limit:
        return None
    return "".join(expand_runs(alphabet, part, limit) for part in (sol.prefix, sol.middle, sol.suffix))


def family_strings(alphabet, family, limit):
    """``(U, W, V)`` with ``U`` empty, or None past ``limit``."""
    if family.witness_length > limit:
        return None
    member = expand_runs(alphabet, family.witness, limit)
    return "", member[: family.period_length], member[: family.base_length]


def verify_solutions(parsed, alphabet, solutions, limit):
    """Substitute every expandable reported solution into the input."""
    lhs, rhs = parsed.lhs, parsed.rhs
    for sol in solutions.finite:
        if sol.length * parsed.x_count > 50 * limit:
            continue
        s = solution_string(alphabet, sol, limit)
        if s is not None and lhs.replace(VAR, s) != rhs.replace(VAR, s):
            raise SolverInvariantError(f"reported solution of length {sol.length} does not verify")
    fam = solutions.family
    if fam is not None:
        parts = family_strings(alphabet, fam, limit)
        if parts is not None:
            u, w, v = parts
            for ell in (1, 2, 3):
                s = u + w * ell + v
                if len(s) * parsed.x_count <= 50 * limit and lhs.replace(VAR, s) != rhs.replace(VAR, s):
                    raise SolverInvariantError(f"family member l={ell} does not verify")
