import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import letter, system_of
from onevar import testing as tst
from onevar.model import parse_equation


def direct(line, s):
    eq = parse_equation(line)
    return eq.lhs.replace("X", s) == eq.rhs.replace("X", s)


@pytest.mark.parametrize("line,ch,ell", [("aabX = XabX", "a", 1), ("aabX = XabX", "a", 2), ("aX = Xa", "a", 7)])
def test_substitution_matches_direct(line, ch, ell):
    system, _ = system_of(line, canon=False)
    assert tst.test_substitution(letter(system, ch), ell, system) == direct(line, ch * ell)


def test_substitution_rejects_empty():
    system, _ = system_of("aX = Xa", canon=False)
    with pytest.raises(ValueError):
        tst.test_substitution(letter(system, "a"), 0, system)


def test_simple_solution_formula():
    system, _ = system_of("aabX = XabX", canon=False)
    a = letter(system, "a")
    prof = tst.a_prefix_profile(a, system)
    assert (prof.ell_A, prof.ell_B, prof.i) == (2, 1, 1)
    assert tst.test_simple_solution(a, system) == 1


def test_simple_solution_fails_verification():
    system, _ = system_of("aabX = XaX", canon=False)
    assert tst.test_simple_solution(letter(system, "a"), system) is None
    assert not direct("aabX = XaX", "a")


def test_simple_solution_non_integral():
    # three a's before b on the letter side, none on the X side, X twice: 3/2
    system, _ = system_of("aaabXbX = XXbaaabb", canon=False)
    a = letter(system, "a")
    assert tst.test_simple_solution(a, system) is None


def test_simple_solution_block_first_word():
    system, _ = system_of("aaX = Xaa", canon=False)
    with pytest.raises(ValueError, match="route to test_astar"):
        tst.test_simple_solution(letter(system, "a"), system)


@pytest.mark.parametrize("line,kind,ell", [("aX = Xa", "all", None), ("aabX = XabX", "unique", 1), ("abaX = XbX", "none", None)])
def test_astar_examples(line, kind, ell):
    system, _ = system_of(line, canon=False)
    out = tst.test_astar(letter(system, "a"), system)
    assert out.kind == kind
    if kind == "unique":
        assert out.ell == ell


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abX", min_size=1, max_size=9), st.text(alphabet="abX", min_size=1, max_size=9))
def test_astar_against_brute_force(lhs, rhs):
    if "X" not in lhs + rhs or "a" not in lhs + rhs:
        return
    line = f"{lhs} = {rhs}"
    system, _ = system_of(line, canon=False)
    out = tst.test_astar(letter(system, "a"), system)
    good = [k for k in range(1, 30) if direct(line, "a" * k)]
    if out.kind == "all":
        assert good == list(range(1, 30))
    elif out.kind == "unique":
        assert good == [out.ell]
    else:
        assert good == []


def test_report_lengths_from_weights():
    system, _ = system_of("aXb = aXb", canon=False)
    alph = system.alphabet
    a, b = letter(system, "a"), letter(system, "b")
    gb = alph.fresh_block_letter(b, 3)
    system.popped.pop_left(alph.glob(a), 2, 1)
    rep = tst.Reporter(system)
    tst.report(rep, tst.Single(gb))
    (sol,) = rep.finite.values()
    assert sol.length == 5


def test_report_family_and_expansion():
    system, _ = system_of("aX = Xa", canon=False)
    a = letter(system, "a")
    rep = tst.Reporter(system)
    tst.report(rep, tst.FamilyOf(a))
    fam = rep.family
    assert (fam.base_length, fam.period_length) == (0, 1)
    system2, _ = system_of("abX = Xab", canon=False)
    alph2 = system2.alphabet
    a2, b2 = letter(system2, "a"), letter(system2, "b")
    ab = alph2.fresh_pair_letter(a2, b2)
    system2.popped.pop_right(alph2.glob(b2), 1, 1)
    rep2 = tst.Reporter(system2)
    tst.report(rep2, tst.Single(ab))
    (sol,) = rep2.finite.values()
    from onevar.solver import solution_string

    assert sol.length == 3 and solution_string(alph2, sol, 100) == "abb"


def test_report_coalesces_equal_lengths():
    system, _ = system_of("aX = Xa", canon=False)
    a = letter(system, "a")
    rep = tst.Reporter(system)
    tst.report(rep, tst.Single(a))
    tst.report(rep, tst.Power(a, 1))
    assert list(rep.finite) == [1]
