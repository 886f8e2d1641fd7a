"""Compare the compiled kernels with the pure-Python fallback.

Each path runs in its own interpreter so the HANGWIRE_DISABLE_JIT flag is
read at import. Compilation happens in a warm-up call and is not timed.

    python benchmarks/bench_search.py --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys

CASES = {
    "search 2-of-3 len 8": "search_length(Spec.threshold(2, 3), 8)",
    "search 1-of-3 len 10": "search_length(Spec.threshold(1, 3), 10)",
    "search 2-of-4 len 10": "search_length(Spec.threshold(2, 4), 10)",
    "search 2-of-4 len 12": "search_length(Spec.threshold(2, 4), 12)",
    "solves full 3-of-8": "solves(split38, Spec.threshold(3, 8), 'full')",
}

WORKER = """
import json, sys, time
from hangwire._jit import HAVE_NUMBA
from hangwire.construct import demaine_split
from hangwire.search import search_length
from hangwire.spec import Spec, solves
split38 = demaine_split(3, 8, None).word
cases, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
out = {"jit": HAVE_NUMBA, "times": {}}
for name, stmt in cases.items():
    result = eval(stmt)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        again = eval(stmt)
        best = min(best, time.perf_counter() - start)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(disable: bool, repeat: int, cases: dict) -> dict:
    env = dict(os.environ, HANGWIRE_DISABLE_JIT="1" if disable else "0")
    done = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(cases), str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(done.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--case", action="append", choices=list(CASES), help="run only these cases")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    cases = {k: CASES[k] for k in (args.case or CASES)}

    fast = run(False, args.repeat, cases)
    slow = run(True, args.repeat, cases)
    if not fast["jit"]:
        print("numba is not available; both runs used the fallback", file=sys.stderr)
    rows = []
    for name in cases:
        a, b = fast["times"][name], slow["times"][name]
        rows.append({"case": name, "compiled": a, "python": b, "speedup": b / a if a else None})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'case':<24}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
        for r in rows:
            print(f"{r['case']:<24}{r['compiled']:>12.4f}{r['python']:>12.4f}{r['speedup']:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
