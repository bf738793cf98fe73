"""Random and structured instance generators (deterministic in their seed)."""
import random

from .model import VAR

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _rng(*key):
    return random.Random(":".join(map(str, key)))


def _random_side(rng, length, letters, x_rate):
    out = [VAR if rng.random() < x_rate else rng.choice(letters) for _ in range(length)]
    if VAR not in out:
        out[rng.randrange(length)] = VAR
    return "".join(out)


def _carve(rng, text, sol, rate):
    """Replace non-overlapping occurrences of ``sol`` in ``text`` by X, each with prob. ``rate``."""
    out = []
    i = 0
    while i < len(text):
        if text.startswith(sol, i) and rng.random() < rate:
            out.append(VAR)
            i += len(sol)
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


def _planted(rng, size, letters):
    for _ in range(100):
        a0 = "".join(rng.choice(letters) for _ in range(rng.randint(1, max(1, size // 8))))
        k = rng.randint(1, max(1, min(8, size // 6)))
        sol = (a0 * (k // len(a0) + 1))[:k]
        budget = max(2, (size - len(a0)) // 2 - k)
        rest = _random_side(rng, rng.randint(1, budget), letters, rng.choice((0.2, 0.35, 0.5)))
        lhs = a0 + VAR + rest if rest[0] != VAR else a0 + rest
        text = lhs.replace(VAR, sol)
        rhs = VAR + _carve(rng, text[k:], sol, rng.choice((0.5, 0.8, 1.0)))
        if len(lhs) + len(rhs) <= size:
            return lhs, rhs
    return "a" + VAR, VAR + "a"


def gen_random(seed, size, alphabet=2, plant=False):
    """One random equation line of total size at most ``size``.

    With ``plant`` a solution is built in: one side is written out with X
    replaced by it, and copies of it are then carved back into X's.
    """
    if size < 4:
        raise ValueError("size must be at least 4")
    if alphabet < 1:
        raise ValueError("alphabet must be at least 1")
    rng = _rng("gen", seed, size, alphabet, int(plant))
    letters = LETTERS[:alphabet]
    if plant:
        lhs, rhs = _planted(rng, size, letters)
    else:
        n = rng.randint(4, size)
        nl = rng.randint(1, n - 1)
        rate = rng.choice((0.15, 0.3, 0.45))
        lhs = _random_side(rng, nl, letters, rate)
        if rng.random() < 0.5:
            # same letters on both sides, reshuffled, makes solutions likelier
            pool = [c for c in lhs if c != VAR][: max(0, n - nl - 1)]
            nx = rng.randint(1, max(1, n - nl - len(pool)))
            rhs = pool + [VAR] * nx
            rng.shuffle(rhs)
            rhs = "".join(rhs)
        else:
            rhs = _random_side(rng, max(1, n - nl), letters, rate)
    if rng.random() < 0.5:
        lhs, rhs = rhs, lhs
    if rng.random() < 0.5:
        lhs, rhs = lhs[::-1], rhs[::-1]
    return f"{lhs} = {rhs}"


# ---------------------------------------------------------------------------
# benchmark families


def power_family(m):
    """``X a^m b = a^m b X``-style: solutions (a^m b)^l, few X, long words."""
    w = "a" * (m // 2) + "b" + "a" * (m - m // 2 - 1) + "c"
    return f"{w}{VAR} = {VAR}{w}"


def dense_x_family(n, seed=0):
    """About n/4 occurrences of X between short words, long end words, a planted solution."""
    rng = _rng("dense", seed, n)
    a0 = "".join(rng.choice("abc") for _ in range(max(2, n // 8)))
    sol = a0[:2]
    tail = "".join(rng.choice("abc") for _ in range(max(2, n // 8)))
    words = []
    total = 0
    while total < n // 4:
        k = rng.randint(1, 3)
        words.append("".join(rng.choice("abc") for _ in range(k)))
        total += k + 1
    lhs = a0 + VAR + VAR.join(words) + VAR + tail
    text = lhs.replace(VAR, sol)
    rhs = VAR + _carve(rng, text[len(sol) :], sol, 1.0)
    return f"{lhs} = {rhs}"


def planted_long_family(n, seed=0):
    """Few X and long random words around a long planted solution."""
    rng = _rng("plong", seed, n)
    a0 = "".join(rng.choice("abc") for _ in range(max(4, n // 16)))
    sol = (a0 * 3)[: len(a0) * 2 + 1]
    words = ["".join(rng.choice("abc") for _ in range(max(2, n // 16))) for _ in range(3)]
    lhs = a0 + VAR + VAR.join(words) + VAR + "c"
    text = lhs.replace(VAR, sol)
    rhs = VAR + _carve(rng, text[len(sol) :], sol, 1.0)
    return f"{lhs} = {rhs}"


def universal_family(n):
    w = "ab" * max(1, n // 8)
    return f"{w}{VAR}{w} = {w}{VAR}{w}"


FAMILIES = {
    "power": power_family,
    "dense-X": dense_x_family,
    "planted-long": planted_long_family,
    "universal": universal_family,
}
