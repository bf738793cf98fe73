"""Small builders shared by the unit tests."""
from onevar.equation import canonicalize, make_system
from onevar.model import parse_equation


def system_of(line, N=100, share=False, canon=True):
    system = make_system(parse_equation(line), N=N, share=share)
    out = canonicalize(system) if canon else None
    return system, out


def letter(system, ch):
    return system.alphabet.intern(ch)


def side_text(system, eq, s):
    """Current side as text, letters expanded, X between words."""
    arr = system.arr(s)
    alph = system.alphabet
    words = ["".join(alph.expand(c) for c in arr[g].letters) for g in range(eq.lo[s], eq.hi[s])]
    return "X".join(words)
