import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevar import ParseError, SolverOptions, parse_equation, solve
from onevar.equation import Family, FiniteSolution
from onevar.oracle import oracle_solve
from onevar.solver import assemble, family_strings, phase_bound, shrink_limit, solution_string
from onevar.testing import Reporter


def strings(res, limit=100):
    alph = res.alphabet
    return [solution_string(alph, s, limit) for s in res.solutions.finite]


@pytest.mark.parametrize("engine", ["baseline", "linear"])
def test_worked_examples(derived, engine):
    opts = SolverOptions(engine=engine)
    for line, ref in derived["worked"].items():
        res = solve(line, opts)
        sols = res.solutions
        assert sols.epsilon == ref["epsilon"], line
        assert sols.universal == ref["universal"], line
        if not ref["universal"]:
            assert sols.lengths(ref["bound"]) == ref["lengths"], line


def test_commuting_family_shape():
    res = solve("aX = Xa")
    assert res.solutions.epsilon and not res.solutions.finite
    assert family_strings(res.alphabet, res.solutions.family, 100) == ("", "a", "")
    res = solve("Xab = abX")
    assert family_strings(res.alphabet, res.solutions.family, 100) == ("", "ab", "")


def test_single_solution_string():
    res = solve("Xaa = aXX")
    assert strings(res) == ["a"] and not res.solutions.epsilon and res.solutions.family is None


def test_no_solution():
    sols = solve("abaX = XbX").solutions
    assert not sols.epsilon and not sols.finite and sols.family is None


def test_universal():
    sols = solve("aXb = aXb").solutions
    assert sols.universal and sols.epsilon


def test_unique_after_trim():
    res = solve("abX = XX")
    assert strings(res) == ["ab"]


def test_parse_errors_surface():
    with pytest.raises(ParseError):
        solve("ab = ")


def test_options_validation():
    with pytest.raises(ValueError):
        SolverOptions(N=1)
    with pytest.raises(ValueError):
        SolverOptions(overdue_delay=0)
    with pytest.raises(ValueError):
        SolverOptions(engine="quadratic")


def test_phase_bound_formula():
    assert phase_bound(1000, 100) == math.ceil(math.log(1000, 4 / 3)) + 102
    assert shrink_limit(400, 100) == 300


def test_stats_fields():
    res = solve("abXbaX = XabXba", SolverOptions(collect_stats=True, check_invariants=True))
    st_ = res.stats
    for key in ("phases", "phase_bound", "size", "engine", "violations", "wall_time"):
        assert key in st_
    assert st_["violations"] == []
    assert st_["phases"] <= st_["phase_bound"]


def test_assemble_lowers_family_base():
    system_res = solve("aX = Xa")
    rep = Reporter.__new__(Reporter)
    rep.finite = {n: FiniteSolution(n, (), (), ()) for n in (3, 5, 8)}
    rep.family = Family(base_length=5, period_length=2, witness=(), witness_length=7)
    sols = assemble(rep, False, False)
    # 5 and 3 are the l = 0 members of the shifted families; 1 was never reported
    assert sols.family.base_length == 1
    assert [s.length for s in sols.finite] == [8]
    del system_res


def test_long_solution_not_expanded():
    eq = "a" * 300 + "X = X" + "a" * 300
    res = solve(eq, SolverOptions(max_expand=50))
    assert family_strings(res.alphabet, res.solutions.family, 50) == ("", "a", "")
    line = "ab" * 200 + "X" + "c = X" + "ab" * 200 + "c"
    res = solve(line)
    fam = res.solutions.family
    assert (fam.base_length, fam.period_length) == (0, 2)
    assert family_strings(res.alphabet, fam, fam.witness_length - 1) is None


sides = st.text(alphabet="abX", min_size=1, max_size=12)


@settings(max_examples=300, deadline=None)
@given(sides, sides, st.sampled_from([2, 3, 5, 100]), st.sampled_from(["baseline", "linear"]))
def test_agrees_with_oracle(lhs, rhs, n, engine):
    if "X" not in lhs + rhs:
        return
    line = f"{lhs} = {rhs}"
    res = solve(line, SolverOptions(N=n, engine=engine, check_invariants=True))
    o = oracle_solve(line, 60)
    assert res.stats["violations"] == []
    assert res.solutions.universal == o.universal
    if not o.universal:
        assert res.solutions.epsilon == o.epsilon
        assert tuple(res.solutions.lengths(60)) == o.lengths


def test_reported_strings_solve_input():
    for line in ("abXbaX = XabXba", "aabXaab = XaabaabX" , "abcXcba = XabccbaX"):
        eq = parse_equation(line)
        res = solve(line)
        for s in strings(res, 1000):
            assert eq.lhs.replace("X", s) == eq.rhs.replace("X", s)
