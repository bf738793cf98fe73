"""Pair and block compression, popping and prefix/suffix cutting.

All operations act on the distinct stored words of a system: a shared inner
word is rewritten once and every occurrence sees the change.
"""
from . import kernels
from .equation import NO_SOLUTION, OK, UNIQUE, SolverInvariantError, canonicalize
from .testing import Explicit, Power, Single, report, runs_of, test_runs, test_simple_solution, test_substitution

DELETED = -1


class Resolved(Exception):
    """The remaining solutions are settled; nothing is left to compress."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class RouteToAStar(Exception):
    """Some first or last word is a block of ``letter``; only powers of it can solve."""

    def __init__(self, letter):
        super().__init__(f"route to a* test for letter {letter}")
        self.letter = letter


def settle(system, reporter):
    """Canonicalise; raise :class:`Resolved` when the system is decided."""
    out = canonicalize(system)
    if out.kind == OK:
        return
    if out.kind == NO_SOLUTION:
        raise Resolved("no-solution")
    if out.kind == UNIQUE:
        if out.candidate:
            runs = runs_of(out.candidate)
            if test_runs(system, runs):
                report(reporter, Explicit(tuple(runs)))
        raise Resolved("unique")
    raise SolverInvariantError("system became universal after the first canonicalisation")


def word_slots(system):
    """Yield ``(word, followed_by_X, preceded_by_X)`` once per stored word."""
    for eq in system.equations:
        for s in (0, 1):
            a = system.arr(s)
            yield a[eq.lo[s]], True, False
            yield a[eq.hi[s] - 1], False, True
    for entry in system.registry.values():
        yield entry.word, True, True


def first_letter(system):
    return system.first_word().letters[0]


def last_letter(system):
    return system.last_word().letters[-1]


# ---------------------------------------------------------------------------
# crossing pairs and blocks


def _crossing(system):
    first, last = first_letter(system), last_letter(system)
    out = set()
    for w, followed, preceded in word_slots(system):
        letters = w.letters
        if letters:
            if followed:
                out.add((letters[-1], first))
            if preceded:
                out.add((last, letters[0]))
        elif followed and preceded:
            out.add((last, first))
    return out


def crossing_pairs(system):
    """Pairs ab (a != b) with an occurrence across some X."""
    return sorted((a, b) for a, b in _crossing(system) if a != b)


def crossing_blocks(system):
    """Letters a such that aa occurs across some X."""
    return sorted(a for a, b in _crossing(system) if a == b)


def explicit_pairs(system, exclude=()):
    out = set()
    for w, _, _ in word_slots(system):
        letters = w.letters
        for i in range(len(letters) - 1):
            a, b = letters[i], letters[i + 1]
            if a != b and a not in exclude and b not in exclude:
                out.add((a, b))
    return out


def list_pairs(system):
    """Explicit pairs plus the crossing ones, without duplicates."""
    return sorted(explicit_pairs(system) | set(crossing_pairs(system)))


# ---------------------------------------------------------------------------
# popping


def _left_pop(system, b):
    for w, followed, _ in word_slots(system):
        if followed:
            w.letters.append(b)
    alph = system.alphabet
    system.popped.pop_left(alph.glob(b), 1, alph.weight(b))


def _right_pop(system, a):
    for w, _, preceded in word_slots(system):
        if preceded:
            w.letters.insert(0, a)
    alph = system.alphabet
    system.popped.pop_right(alph.glob(a), 1, alph.weight(a))


def pop(a, b, system, reporter):
    """Left-pop ``b`` if X's solutions start with it, right-pop ``a`` if they end with it."""
    if first_letter(system) == b:
        if test_substitution(b, 1, system):
            report(reporter, Single(b))
        _left_pop(system, b)
        settle(system, reporter)
    if last_letter(system) == a:
        if test_substitution(a, 1, system):
            report(reporter, Single(a))
        _right_pop(system, a)
        settle(system, reporter)


def preproc(system, reporter):
    """Pop the first letter to the left and the last letter to the right."""
    pop(last_letter(system), first_letter(system), system, reporter)


# ---------------------------------------------------------------------------
# pair compression


def compress_pairs(system, pairs):
    """Replace every explicit occurrence of each listed (noncrossing) pair.

    Occurrences are gathered first, radix-sorted by pair, then replaced with
    a check that the location still holds the expected pair.
    """
    pairs = set(pairs)
    if not pairs:
        return 0
    words = []
    keys = []
    locs = []
    for w, _, _ in word_slots(system):
        letters = w.letters
        wi = len(words)
        words.append(letters)
        for i in range(len(letters) - 1):
            key = (letters[i], letters[i + 1])
            if key in pairs:
                keys.append(key)
                locs.append((wi, i))
    order = kernels.radix_sort_keys(keys, 2)
    alph = system.alphabet
    touched = set()
    done = 0
    for idx in order:
        a, b = keys[idx]
        wi, i = locs[idx]
        letters = words[wi]
        if letters[i] == a and letters[i + 1] == b:
            letters[i] = alph.fresh_pair_letter(a, b)
            letters[i + 1] = DELETED
            touched.add(wi)
            done += 1
    for wi in touched:
        words[wi][:] = [c for c in words[wi] if c != DELETED]
    system.bump("work", len(keys))
    return done


def pair_comp_ncr(a, b, system):
    if a == b:
        raise ValueError("block, not pair")
    return compress_pairs(system, [(a, b)])


def pair_comp(a, b, system, reporter):
    if a == b:
        raise ValueError("block, not pair")
    pop(a, b, system, reporter)
    return pair_comp_ncr(a, b, system)


# ---------------------------------------------------------------------------
# block compression


def _emit_runs(alph, runs):
    out = []
    for c, k in runs:
        out.append(c if k == 1 else alph.fresh_block_letter(c, k))
    return out


def block_comp_ncr(a, system):
    """Replace every maximal explicit run a^l (l >= 2) by a block letter."""
    alph = system.alphabet
    for w, _, _ in word_slots(system):
        if a in w.letters:
            out = []
            for c, k in runs_of(w.letters):
                if c == a and k > 1:
                    out.append(alph.fresh_block_letter(a, k))
                else:
                    out.extend([c] * k)
            w.letters[:] = out


def block_guard(system):
    """A letter c such that some first or last word lies in c^+, else None."""
    for eq in system.equations:
        for s in (0, 1):
            arr = system.arr(s)
            for w in (arr[eq.lo[s]], arr[eq.hi[s] - 1]):
                letters = w.letters
                if letters and letters.count(letters[0]) == len(letters):
                    return letters[0]
    return None


def _cut_profile(system, reporter):
    """Report the a^+ and a^l b^r candidates; return (a, l, b, r) for the cut."""
    c = block_guard(system)
    if c is not None:
        raise RouteToAStar(c)
    first = system.first_word().letters
    last = system.last_word().letters
    a, b = first[0], last[-1]
    ell = 0
    while first[ell] == a:
        ell += 1
    r = 0
    while last[-1 - r] == b:
        r += 1
    found = test_simple_solution(a, system)
    if found is not None:
        report(reporter, Power(a, found))
    if a != b and test_runs(system, [(a, ell), (b, r)]):
        report(reporter, Explicit(((a, ell), (b, r))))
    return a, ell, b, r


def _record_cut(system, a, ell, b, r):
    alph = system.alphabet
    system.popped.pop_left(alph.glob(a), ell, alph.weight(a))
    system.popped.pop_right(alph.glob(b), r, alph.weight(b))


def cut_pref_suff(system, reporter):
    """Replace X by a^l X b^r, writing the runs out letter by letter."""
    a, ell, b, r = _cut_profile(system, reporter)
    for w, followed, preceded in word_slots(system):
        if preceded:
            w.letters[:0] = [b] * r
        if followed:
            w.letters.extend([a] * ell)
    _record_cut(system, a, ell, b, r)
    settle(system, reporter)
    return a, ell, b, r


def block_comp(system, reporter):
    """Cut prefix/suffix runs off X and compress all maximal blocks.

    The cut runs are merged into the run-length form of each word directly
    instead of being written out.
    """
    a, ell, b, r = _cut_profile(system, reporter)
    alph = system.alphabet
    work = 0
    for w, followed, preceded in word_slots(system):
        runs = [list(t) for t in runs_of(w.letters)]
        work += len(w.letters)
        if preceded:
            if runs and runs[0][0] == b:
                runs[0][1] += r
            else:
                runs.insert(0, [b, r])
        if followed:
            if runs and runs[-1][0] == a:
                runs[-1][1] += ell
            else:
                runs.append([a, ell])
        w.letters[:] = _emit_runs(alph, runs)
    system.bump("work", work)
    _record_cut(system, a, ell, b, r)
    settle(system, reporter)
    return a, ell, b, r
