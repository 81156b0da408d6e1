"""Compare the numba kernels with the plain numpy/Python fallback.

Every workload runs in a fresh interpreter per path, because the switch
(``COSETLAB_DISABLE_NUMBA``) is read at import time.  Each workload is
called once to warm up (JIT compilation or cache load) and then timed.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads(quick):
    from cosetlab.fixtures import gamma, psl2_29
    from cosetlab.low_index import low_index_classes
    from cosetlab.sambale import automorphism_group, build_N
    from cosetlab import kernels

    E = psl2_29().elements_array()
    top = 9 if quick else 12
    return {
        "element_orders[PSL(2,29)]": lambda: kernels.element_orders(E),
        "automorphisms[N(5)]": lambda: automorphism_group(build_N(5)).order(),
        f"low_index[gamma, 1..{top}]": lambda: len(low_index_classes(gamma(), 1, top)),
    }


def worker(repeat, quick):
    from cosetlab import _accel

    loads = _workloads(quick)
    out = {"numba": _accel.ENABLED, "times": {}, "results": {}}
    for name, fn in loads.items():
        res = fn()
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            res = fn()
            best = min(best, time.perf_counter() - t0)
        out["times"][name] = best
        out["results"][name] = int(res) if not hasattr(res, "shape") else int(res.sum())
    print(json.dumps(out))


def run_path(disabled, repeat, quick):
    env = dict(os.environ)
    env["COSETLAB_DISABLE_NUMBA"] = "1" if disabled else "0"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)]
    if quick:
        cmd.append("--quick")
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller low-index workload")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args.repeat, args.quick)
        return 0
    fast = run_path(False, args.repeat, args.quick)
    slow = run_path(True, args.repeat, args.quick)
    print(f"{'workload':32s} {'numba s':>10s} {'fallback s':>11s} {'speedup':>8s}  same")
    for name in fast["times"]:
        a, b = fast["times"][name], slow["times"][name]
        same = fast["results"][name] == slow["results"][name]
        print(f"{name:32s} {a:10.4f} {b:11.4f} {b / a:8.1f}x  {same}")
    if not fast["numba"]:
        print("note: numba is unavailable, both columns ran the fallback")
    return 0


if __name__ == "__main__":
    sys.exit(main())
