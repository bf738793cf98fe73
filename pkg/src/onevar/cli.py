"""Command-line frontend: solve equations line by line, generate instances, benchmark."""
import argparse
import json
import statistics
import sys
import time

from .equation import SolverInvariantError
from .instances import FAMILIES, gen_random
from .model import ParseError, parse_equation
from .oracle import OracleBudgetExceeded, oracle_solve
from .solver import BASELINE, LINEAR, SolverOptions, family_strings, solution_string, solve

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_ORACLE = 0, 1, 2, 3


def result_doc(result, limit, with_stats=False):
    """The engine-independent JSON document of a solve result."""
    sols = result.solutions
    alph = result.alphabet
    finite = []
    for sol in sols.finite:
        entry = {"length": sol.length}
        s = solution_string(alph, sol, limit)
        if s is not None:
            entry["string"] = s
        finite.append(entry)
    family = None
    fam = sols.family
    if fam is not None:
        family = {"prefix_length": 0, "period_length": fam.period_length, "suffix_length": fam.base_length}
        parts = family_strings(alph, fam, limit)
        if parts is not None:
            family.update(prefix=parts[0], period=parts[1], suffix=parts[2])
    doc = {"epsilon": sols.epsilon, "universal": sols.universal, "finite": finite, "family": family}
    if with_stats:
        st = result.stats
        doc["stats"] = {
            "engine": st.get("engine"),
            "phases": st.get("phases"),
            "phase_bound": st.get("phase_bound"),
            "comparisons": st.get("work", 0),
            "tests": st.get("tests", 0),
            "test_types": st.get("test_types", {}),
            "wall_time": round(st.get("wall_time", 0.0), 6),
        }
    return doc


def _clip(s, limit):
    return s if len(s) <= limit else s[:limit] + " (truncated)"


def format_text(line, doc, limit):
    out = [f"equation: {line}"]
    if doc["universal"]:
        out.append("  every string is a solution")
        return "\n".join(out)
    out.append(f"  epsilon: {'yes' if doc['epsilon'] else 'no'}")
    out.append(f"  finite solutions: {len(doc['finite'])}")
    for entry in doc["finite"]:
        s = entry.get("string")
        shown = _clip(s, limit) if s is not None else "(truncated)"
        out.append(f"    length {entry['length']}: {shown}")
    fam = doc["family"]
    if fam is None:
        out.append("  family: none")
    else:
        if "period" in fam:
            desc = f'U="{fam["prefix"]}" W="{_clip(fam["period"], limit)}" V="{_clip(fam["suffix"], limit)}"'
        else:
            desc = f"|W|={fam['period_length']} |V|={fam['suffix_length']} (truncated)"
        out.append(f"  family: U W^l V for l >= 1 with {desc}")
    if "stats" in doc:
        st = doc["stats"]
        out.append(
            f"  stats: engine={st['engine']} phases={st['phases']} (bound {st['phase_bound']}) "
            f"comparisons={st['comparisons']} tests={st['tests']} time={st['wall_time']:.4f}s"
        )
    return "\n".join(out)


def oracle_agrees(parsed, result, bound):
    """Compare (epsilon, lengths <= bound) with the brute-force oracle; None if too costly."""
    try:
        o = oracle_solve(parsed, bound)
    except OracleBudgetExceeded:
        return None
    sols = result.solutions
    if o.universal or sols.universal:
        return o.universal == sols.universal
    return o.epsilon == sols.epsilon and tuple(sols.lengths(bound)) == o.lengths


def bench(family, sizes, engines=(BASELINE, LINEAR), repeats=1, seed=0):
    """Rows of (family, size, engine, median wall time, comparisons, phases)."""
    make = FAMILIES[family]
    rows = []
    for n in sizes:
        line = make(n, seed) if family in ("dense-X", "planted-long") else make(n)
        for engine in engines:
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                res = solve(line, SolverOptions(engine=engine, verify=False))
                times.append(time.perf_counter() - t0)
            rows.append(
                {
                    "family": family,
                    "size": n,
                    "input_size": len(line) - 3,
                    "engine": engine,
                    "wall_time": statistics.median(times),
                    "comparisons": res.stats.get("work", 0),
                    "phases": res.stats["phases"],
                }
            )
    return rows


def _lines(paths):
    if not paths:
        yield from sys.stdin
        return
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            yield from fh


def build_parser():
    p = argparse.ArgumentParser(prog="onevar", description="Solve word equations with one variable X.")
    p.add_argument("files", nargs="*", help="equation files, one 'LHS = RHS' per line (default: stdin)")
    p.add_argument("--engine", choices=(BASELINE, LINEAR), default=LINEAR)
    p.add_argument("--oracle-check", type=int, metavar="B", help="compare lengths <= B with brute force")
    p.add_argument("--json", action="store_true", help="one JSON document per line")
    p.add_argument("--expand-limit", type=int, default=10**4, metavar="L")
    p.add_argument("--short-threshold", type=int, default=100, metavar="N")
    p.add_argument("--overdue-delay", type=int, default=32, metavar="c", help="0 keeps overdue words")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gen", nargs=2, type=int, metavar=("SIZE", "ALPHA"), help="print a random equation")
    p.add_argument("--plant", action="store_true", help="with --gen: build a solution in")
    p.add_argument("--count", type=int, default=1, help="with --gen: number of equations")
    p.add_argument("--bench", choices=sorted(FAMILIES), metavar="FAMILY")
    p.add_argument("--sizes", type=int, nargs="+", default=[2**k for k in range(10, 15)])
    p.add_argument("--repeats", type=int, default=1)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.gen:
        size, alpha = args.gen
        try:
            for k in range(args.count):
                print(gen_random(args.seed + k, size, alpha, plant=args.plant), file=out)
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return EXIT_PARSE
        return EXIT_OK
    if args.bench:
        rows = bench(args.bench, args.sizes, repeats=args.repeats, seed=args.seed)
        if args.json:
            for row in rows:
                print(json.dumps(row), file=out)
        else:
            print(f"{'family':<14}{'size':>9}{'engine':>10}{'time[s]':>11}{'comparisons':>14}{'per n':>8}{'phases':>8}", file=out)
            for r in rows:
                per = r["comparisons"] / r["input_size"]
                print(
                    f"{r['family']:<14}{r['size']:>9}{r['engine']:>10}{r['wall_time']:>11.4f}"
                    f"{r['comparisons']:>14}{per:>8.2f}{r['phases']:>8}",
                    file=out,
                )
        return EXIT_OK
    try:
        options = SolverOptions(
            N=args.short_threshold,
            engine=args.engine,
            overdue_delay=args.overdue_delay or None,
            max_expand=args.expand_limit,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    code = EXIT_OK
    for lineno, raw in enumerate(_lines(args.files), 1):
        if not raw.split("#", 1)[0].strip():
            continue
        try:
            parsed = parse_equation(raw)
        except ParseError as exc:
            print(f"line {lineno}: parse error: {exc}", file=err)
            code = max(code, EXIT_PARSE)
            continue
        try:
            res = solve(parsed, options)
        except SolverInvariantError as exc:
            print(f"line {lineno}: invariant violation: {exc}", file=err)
            code = max(code, EXIT_INVARIANT)
            continue
        if res.stats["violations"]:
            print(f"line {lineno}: invariant violation: {res.stats['violations'][0]}", file=err)
            code = max(code, EXIT_INVARIANT)
        doc = result_doc(res, args.expand_limit, args.stats)
        if args.oracle_check:
            agree = oracle_agrees(parsed, res, args.oracle_check)
            doc["oracle"] = {"bound": args.oracle_check, "agrees": agree}
            if agree is False:
                print(f"line {lineno}: oracle mismatch", file=err)
                code = max(code, EXIT_ORACLE)
        if args.json:
            print(json.dumps(doc, ensure_ascii=False), file=out)
        else:
            print(format_text(str(parsed), doc, args.expand_limit), file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
