"""Succinct storage, overdue words and fast substitution testing.

While the first and last words of the first equation are long, equal inner
words share one stored copy (so compression work is proportional to the
distinct words), short words that no longer occur in any long word are
removed by splitting equations, and candidate solutions are tested by a
walker that skips aligned and periodic stretches in O(1) each.
"""
import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .equation import split_equation
from .recompress import Resolved, settle
from .strindex import build_index, lcp_query

# ---------------------------------------------------------------------------
# succinct representation


class ShortTail(Exception):
    """The first or the last word is short: the succinct representation is dropped."""


@dataclass
class SuccinctRep:
    system: object
    overdue: dict = field(default_factory=dict)  # id(word) -> (word, phase flagged)

    @property
    def N(self):
        return self.system.N

    def long_words(self, side):
        """(global number, word) of the long words of one side, in equation order."""
        system = self.system
        arr = system.arr(side)
        out = []
        for eq in system.equations:
            for g in range(eq.lo[side], eq.hi[side]):
                if len(arr[g].letters) > system.N:
                    out.append((g, arr[g]))
        return out

    def distinct_long(self):
        system = self.system
        seen = {}
        for w in system.distinct_words():
            if len(w.letters) > system.N:
                seen[id(w)] = w
        return list(seen.values())

    def short_table(self):
        """Content -> (stored word, occurrences on the left, on the right)."""
        out = {}
        for entry in self.system.registry.values():
            w = entry.word
            if len(w.letters) <= self.N:
                out[tuple(w.letters)] = (w, list(entry.occ[0]), list(entry.occ[1]))
        return out

    def size(self):
        return sum(len(w.letters) for w in self.system.distinct_words())

    def is_overdue(self, w):
        return id(w) in self.overdue


def build_succinct(system, rep=None):
    """Check the first/last words are long and return the (reused) representation."""
    first, last = system.first_word(), system.last_word()
    if len(first.letters) <= system.N or len(last.letters) <= system.N:
        raise ShortTail()
    return rep if rep is not None else SuccinctRep(system)


def unshare(system):
    """Give every occurrence of an inner word its own copy."""
    for entry in list(system.registry.values()):
        occ = [(s, g) for s in (0, 1) for g in entry.occ[s]]
        for s, g in occ[1:]:
            system.own(s, g)
            system._register(s, g)


# ---------------------------------------------------------------------------
# overdue words


def _long_region(rep):
    system = rep.system
    a0 = system.first_word().letters
    parts = [list(a0) + list(a0)]
    parts.extend(list(w.letters) for w in rep.distinct_long())
    return parts


def _candidates(rep):
    out = []
    for entry in rep.system.registry.values():
        w = entry.word
        if 0 < len(w.letters) <= rep.N and id(w) not in rep.overdue:
            out.append(w)
    return out


def detect_overdue(rep, phase):
    """Flag short inner words that occur in no long word and not in A0 A0."""
    cands = _candidates(rep)
    if not cands:
        return []
    long_parts = _long_region(rep)
    nsep = len(long_parts) + len(cands) + 1
    text = []
    is_long = []
    starts = []
    sep = 0
    for part in long_parts:
        text.extend(c + nsep for c in part)
        is_long.extend([True] * len(part))
        text.append(sep)
        is_long.append(False)
        sep += 1
    for w in cands:
        starts.append(len(text))
        text.extend(c + nsep for c in w.letters)
        is_long.extend([False] * len(w.letters))
        text.append(sep)
        is_long.append(False)
        sep += 1
    sa = kernels.suffix_array(text)
    rank, lcp = kernels.rank_and_lcp(text, sa)
    n = len(text)
    best = [0] * n
    run = -1  # -1: no long suffix seen yet
    for r in range(n):
        if r and run >= 0:
            run = min(run, lcp[r - 1])
        best[r] = max(run, 0)
        if is_long[sa[r]]:
            run = n
    run = -1
    for r in range(n - 1, -1, -1):
        if r < n - 1 and run >= 0:
            run = min(run, lcp[r])
        if run > best[r]:
            best[r] = run
        if is_long[sa[r]]:
            run = n
    fresh = []
    for w, p in zip(cands, starts):
        if best[rank[p]] < len(w.letters):
            rep.overdue[id(w)] = (w, phase)
            fresh.append(w)
    rep.system.bump("work", n)
    return fresh


def naive_overdue(rep):
    """Reference for :func:`detect_overdue`: ids of candidates not found by plain search."""
    def enc(letters):
        return "".join(chr(0x100 + c) for c in letters)

    hay = [enc(p) for p in _long_region(rep)]
    out = set()
    for w in _candidates(rep):
        needle = enc(w.letters)
        if not any(needle in h for h in hay):
            out.add(id(w))
    return out


def _equation_of(system, side, g):
    eqs = system.equations
    lo, hi = 0, len(eqs)
    while lo < hi:
        mid = (lo + hi) // 2
        if eqs[mid].hi[side] <= g:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(eqs) and eqs[lo].lo[side] <= g < eqs[lo].hi[side]:
        return lo
    return None


def remove_overdue(rep, system, reporter, phase, delay):
    """Split off every occurrence of words flagged ``delay`` or more phases ago.

    The i-th left occurrence of an overdue word must face its i-th right
    occurrence; when the first ones lie in different equations, or one side
    runs out first, no further solution exists.
    """
    if delay is None:
        return 0
    due = [(key, w) for key, (w, p) in rep.overdue.items() if phase - p >= delay]
    splits = 0
    for key, w in due:
        del rep.overdue[key]
        entry = system.registry.get(key)
        if entry is None or entry.word is not w:
            continue
        while system.registry.get(key) is entry:
            occ_l, occ_r = entry.occ
            if not occ_l or not occ_r:
                system.bump("overdue_unsat")
                raise Resolved("no-solution")
            gl, gr = occ_l[0], occ_r[0]
            k = _equation_of(system, 0, gl)
            if k is None or _equation_of(system, 1, gr) != k:
                system.bump("overdue_unsat")
                raise Resolved("no-solution")
            split_equation(system, k, gl, gr)
            splits += 1
    if splits:
        system.bump("splits", splits)
        settle(system, reporter)
    return splits


# ---------------------------------------------------------------------------
# aligned jumps over the input


VAR_SYMBOL = 2


class JumpIndex:
    """Suffix array over ``L-words joined by X | R-words joined by X`` of the input.

    Equal inner words stay equal (and unequal ones unequal) for the whole
    run, so equality of word sequences can be read off the input.
    """

    def __init__(self, system):
        text = []
        self.start = ([], [])
        for s in (0, 1):
            arr = system.arr(s)
            for g, w in enumerate(arr):
                if g:
                    text.append(VAR_SYMBOL)
                self.start[s].append(len(text))
                text.extend(c + 3 for c in w.letters)
            text.append(1 - s)  # 1 between the sides, 0 at the end
        self.index = build_index(text)
        pref = [0] * (len(text) + 1)
        acc = 0
        for p, c in enumerate(text):
            pref[p] = acc
            acc += c == VAR_SYMBOL
        pref[len(text)] = acc
        self.prefX = pref
        # run[s][g]: how many words from g on are the same stored word
        self.run = ([], [])
        for s in (0, 1):
            arr = system.arr(s)
            run = [1] * len(arr)
            for g in range(len(arr) - 2, -1, -1):
                if arr[g + 1] is arr[g]:
                    run[g] = run[g + 1] + 1
            self.run[s].extend(run)

    def matched_words(self, i, j):
        """Number of complete ``word X`` blocks shared by L from word i and R from word j."""
        pi, pj = self.start[0][i], self.start[1][j]
        h = lcp_query(self.index, pi, pj)
        return self.prefX[pi + h] - self.prefX[pi]


def aligned_jump(jump, i, j, hi_l, hi_r):
    """Words to skip from an aligned pair of equal inner words ``L[i] = R[j]``.

    The smallest k >= 1 such that ``L[i+k] != R[j+k]`` or such that word
    ``i+k`` (``j+k``) is the last word of its equation; ``hi_l``/``hi_r`` are
    the equation's end indices.
    """
    k = jump.matched_words(i, j)
    return max(1, min(k, hi_l - 1 - i, hi_r - 1 - j))


def aligned_jump_naive(system, i, j, hi_l, hi_r):
    L, R = system.L, system.R
    k = 1
    while i + k < hi_l - 1 and j + k < hi_r - 1 and L[i + k].letters == R[j + k].letters:
        k += 1
    return k


# ---------------------------------------------------------------------------
# test classification


class TestType(enum.Enum):
    PROTECTED = "protected"
    FAILED = "failed"
    ALIGNED = "aligned"
    MISALIGNED = "misaligned"
    PERIODICAL = "periodical"


@dataclass
class TestContext:
    """Letter tests starting at ``A_i`` (offset ``ua``) against ``B_j`` (offset ``ub``).

    ``words`` is ``(A_i, A_next, B_j, B_next)`` as letter lists, None where a
    word does not exist; ``protected`` marks long or first/last words.
    Offsets count into ``word S`` with S given by the runs ``cand``.
    """

    words: tuple
    protected: tuple
    offsets: tuple
    cand: tuple

    __test__ = False


def _expand(cand):
    out = []
    for c, k in cand:
        out.extend([c] * k)
    return out


def classify_test(ctx):
    if any(w is None for w in ctx.words) or any(ctx.protected):
        return TestType.PROTECTED
    ai, an, bj, bn = ctx.words
    s = _expand(ctx.cand)
    ua, ub = ctx.offsets
    left = (list(ai) + s + list(an) + s)[ua:]
    right = (list(bj) + s + list(bn) + s)[ub:]
    m = min(len(left), len(right))
    if left[:m] != right[:m]:
        return TestType.FAILED
    if ua == ub and list(ai) == list(bj) and list(an) == list(bn):
        return TestType.ALIGNED
    if list(an) != list(ai) or list(bn) != list(bj):
        return TestType.MISALIGNED
    return TestType.PERIODICAL


@dataclass
class PeriodContext:
    """``(A S)^count_a`` read from offset ``ua`` against ``(B S)^count_b`` from ``ub``."""

    len_a: int
    len_b: int
    x: int
    count_a: int
    count_b: int
    ua: int = 0
    ub: int = 0

    def span(self):
        pa, pb = self.len_a + self.x, self.len_b + self.x
        return min(self.count_a * pa - self.ua, self.count_b * pb - self.ub)

    def needed(self):
        """Letters whose agreement implies agreement on the whole span."""
        pa, pb = self.len_a + self.x, self.len_b + self.x
        return pa + pb - math.gcd(pa, pb)


def periodic_skip(ctx, compare):
    """Length of the verified span, -1 on a mismatch, 0 if the span is too short.

    ``compare(m)`` checks the first m letters.  Two words with periods p and
    q that agree on p + q - gcd(p, q) letters agree as far as both extend.
    """
    span, need = ctx.span(), ctx.needed()
    if span <= need:
        return 0
    return span if compare(need) else -1


def periodic_skip_naive(ctx, a_word, b_word, cand):
    s = _expand(cand)
    left = ((list(a_word) + s) * ctx.count_a)[ctx.ua :]
    right = ((list(b_word) + s) * ctx.count_b)[ctx.ub :]
    m = min(len(left), len(right))
    return left[:m] == right[:m]


# ---------------------------------------------------------------------------
# candidate of at most two runs


class _Cand:
    __slots__ = ("c1", "n1", "c2", "x")

    def __init__(self, runs):
        (self.c1, self.n1) = runs[0]
        if len(runs) == 2:
            self.c2 = runs[1][0]
            self.x = self.n1 + runs[1][1]
        else:
            self.c2 = self.c1
            self.x = self.n1

    def match(self, letters, start, count, t):
        """letters[start:start+count] == S[t:t+count]."""
        k1 = min(max(self.n1 - t, 0), count)
        if k1 and letters[start : start + k1].count(self.c1) != k1:
            return False
        k2 = count - k1
        return not k2 or letters[start + k1 : start + count].count(self.c2) == k2

    def shift_equal(self, u, v, m):
        """S[u:u+m] == S[v:v+m]."""
        if u == v or self.c1 == self.c2:
            return True
        return min(max(self.n1 - u, 0), m) == min(max(self.n1 - v, 0), m)


# ---------------------------------------------------------------------------
# the walker


class FastTester:
    """Substitution test for candidates of at most two runs."""

    def __init__(self, system, jump, delay):
        self.system = system
        self.jump = jump
        self.delay = delay
        self.counts = {t.value: 0 for t in TestType}
        self.early_exits = 0

    def __call__(self, runs):
        if len(runs) > 2:
            return None
        cand = _Cand(runs)
        system = self.system
        for eq in system.equations:
            if not self._equation(eq, cand):
                return False
        return True

    def _equation(self, eq, cand):
        system = self.system
        A, B = system.L, system.R
        loA, hiA, loB, hiB = eq.lo[0], eq.hi[0], eq.lo[1], eq.hi[1]
        x = cand.x
        N = system.N
        runA, runB = self.jump.run
        counts = self.counts
        work = 0
        ga, ua, gb, ub = loA, 0, loB, 0

        def seg(arr, g, hi):
            return len(arr[g].letters) + (x if g < hi - 1 else 0)

        def span(ga, ua, gb, ub, m):
            nonlocal work
            while m > 0:
                wa, wb = A[ga].letters, B[gb].letters
                la, lb = len(wa), len(wb)
                ea = la + (x if ga < hiA - 1 else 0)
                eb = lb + (x if gb < hiB - 1 else 0)
                ra = la - ua if ua < la else ea - ua
                rb = lb - ub if ub < lb else eb - ub
                c = min(ra, rb, m)
                if ua < la:
                    if ub < lb:
                        ok = wa[ua : ua + c] == wb[ub : ub + c]
                    else:
                        ok = cand.match(wa, ua, c, ub - lb)
                    work += c
                elif ub < lb:
                    ok = cand.match(wb, ub, c, ua - la)
                    work += c
                else:
                    ok = cand.shift_equal(ua - la, ub - lb, c)
                    work += 1
                if not ok:
                    return None
                ua += c
                ub += c
                m -= c
                if ua == ea:
                    ga, ua = ga + 1, 0
                if ub == eb:
                    gb, ub = gb + 1, 0
            return ga, ua, gb, ub

        try:
            while True:
                while ga < hiA and ua == seg(A, ga, hiA):
                    ga, ua = ga + 1, 0
                while gb < hiB and ub == seg(B, gb, hiB):
                    gb, ub = gb + 1, 0
                if ga == hiA or gb == hiB:
                    return ga == hiA and gb == hiB
                wa, wb = A[ga], B[gb]
                la, lb = len(wa.letters), len(wb.letters)
                ea, eb = seg(A, ga, hiA), seg(B, gb, hiB)
                if ua >= la and ub >= lb:
                    # only X against X: no letter tests
                    pos = span(ga, ua, gb, ub, min(ea - ua, eb - ub))
                    if pos is None:
                        return False
                    ga, ua, gb, ub = pos
                    continue
                inner_a = loA < ga < hiA - 1
                inner_b = loB < gb < hiB - 1
                if inner_a and inner_b and ua == ub and wa is wb:
                    k = aligned_jump(self.jump, ga, gb, hiA, hiB)
                    counts["aligned"] += 1
                    work += 1
                    ga, ua, gb, ub = ga + k, 0, gb + k, 0
                    continue
                if inner_a and inner_b:
                    ka = min(runA[ga], hiA - 1 - ga)
                    kb = min(runB[gb], hiB - 1 - gb)
                    if ka >= 2 and kb >= 2:
                        ctx = PeriodContext(la, lb, x, ka, kb, ua, ub)
                        done = periodic_skip(ctx, lambda m: span(ga, ua, gb, ub, m) is not None)
                        if done < 0:
                            return False
                        if done > 0:
                            counts["periodical"] += 1
                            ta, tb = ua + done, ub + done
                            ga, ua = ga + ta // (la + x), ta % (la + x)
                            gb, ub = gb + tb // (lb + x), tb % (lb + x)
                            continue
                nxt_a = A[ga + 1] if ga + 1 < hiA else None
                nxt_b = B[gb + 1] if gb + 1 < hiB else None
                four = (wa, nxt_a, wb, nxt_b)
                protected = (
                    not inner_a
                    or not inner_b
                    or nxt_a is None
                    or nxt_b is None
                    or ga + 1 == hiA - 1
                    or gb + 1 == hiB - 1
                    or any(len(w.letters) > N for w in four)
                )
                if protected:
                    counts["protected"] += 1
                else:
                    ahead = min(ea - ua + seg(A, ga + 1, hiA), eb - ub + seg(B, gb + 1, hiB))
                    if span(ga, ua, gb, ub, ahead) is None:
                        counts["failed"] += 1
                        return False
                    counts["misaligned"] += 1
                    fresh = max(system.phase if w.short_since is None else w.short_since for w in four)
                    if self.delay is not None and system.phase - fresh > self.delay:
                        self.early_exits += 1
                        return False
                pos = span(ga, ua, gb, ub, min(ea - ua, eb - ub))
                if pos is None:
                    return False
                ga, ua, gb, ub = pos
        finally:
            system.bump("work", work)


# ---------------------------------------------------------------------------
# driver used by the solver


class LinearDriver:
    """Keeps the succinct representation while the first and last words are long."""

    def __init__(self, options):
        self.options = options
        self.rep = None
        self.tester = None
        self.active = False
        self.linear_phases = 0
        self.short_tail_from = None
        self.flagged = 0
        self.removed = 0

    def attach(self, system, parsed):
        try:
            self.rep = build_succinct(system)
        except ShortTail:
            self._to_plain(system)
            return
        self.tester = FastTester(system, JumpIndex(system), self.options.overdue_delay)
        system.fast_test = self.tester
        self.active = True

    def _to_plain(self, system):
        unshare(system)
        system.fast_test = None
        self.active = False
        self.short_tail_from = system.phase

    def before_phase(self, system, reporter):
        """Overdue handling for the coming phase; False once in the short tail."""
        if not self.active:
            return False
        try:
            build_succinct(system, self.rep)
        except ShortTail:
            self._to_plain(system)
            return False
        delay = self.options.overdue_delay
        if delay is not None:
            self.removed += remove_overdue(self.rep, system, reporter, system.phase, delay)
            self.flagged += len(detect_overdue(self.rep, system.phase))
        self.linear_phases += 1
        return True

    def stats(self):
        out = {
            "linear_phases": self.linear_phases,
            "short_tail_from": self.short_tail_from,
            "overdue_flagged": self.flagged,
            "overdue_splits": self.removed,
        }
        if self.tester is not None:
            out["test_types"] = dict(self.tester.counts)
            out["early_exits"] = self.tester.early_exits
        return out
