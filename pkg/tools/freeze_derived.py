"""Regenerate tests/data/*.json from the brute-force oracle and naive references.

Only the oracle, the instance generator and the naive string routines are
used here, never the solver, so the frozen values are independent of it.
"""
import json
import pathlib

from onevar.instances import gen_random
from onevar.oracle import oracle_solve
from onevar.strindex import lcp_naive, sa_naive

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

WORKED = ["aX = Xa", "Xaa = aXX", "Xab = abX", "abaX = XbX", "abX = XX", "aXb = aXb", "bXa = Xba", "aabX = XabX"]


def suite_instances(count=1000):
    """The seeded random suite: sizes 4..60, alphabets 1..3, every other one planted."""
    for i in range(count):
        size = 4 + i % 57
        yield i, size, gen_random(i, size, 1 + i % 3, plant=i % 2 == 1)


def oracle_doc(line, bound):
    o = oracle_solve(line, bound)
    return {
        "line": line,
        "bound": bound,
        "epsilon": o.epsilon,
        "universal": o.universal,
        "lengths": [] if o.universal else list(o.lengths),
        "strings": list(o.strings),
    }


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    worked = {line: oracle_doc(line, 50) for line in WORKED}
    text = "banana"
    sa = sa_naive(text)
    strings = {
        "banana": {
            "sa": sa,
            "lcp": [lcp_naive(text, sa[i], sa[i + 1]) for i in range(len(sa) - 1)],
            "queries": {f"{i},{j}": lcp_naive(text, i, j) for i, j in ((1, 3), (0, 2), (4, 4))},
        }
    }
    suite = []
    wide = []
    for i, size, line in suite_instances():
        suite.append(oracle_doc(line, 3 * size))
        if i % 20 == 0:
            wide.append(oracle_doc(line, 10 * size))
    (DATA / "derived.json").write_text(json.dumps({"worked": worked, "strings": strings}, indent=1, ensure_ascii=False))
    (DATA / "suite_oracle.json").write_text(json.dumps({"suite": suite, "wide": wide}))
    print(f"wrote {len(suite)} suite answers, {len(wide)} wide-bound answers")


if __name__ == "__main__":
    main()
