"""Compare the compiled kernels with the plain-Python fallback.

Each backend runs in its own interpreter, because the choice is made once
at import time from ``FLEXCOLOR_NO_NUMBA``. Usage::

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    import numpy as np

    from flexcolor import catalog
    from flexcolor import reducibility as R
    from flexcolor.coloring import count_colorings, is_colorable
    from flexcolor.instances import cycle, random_c4c5_free_plane, random_lists

    rng = np.random.default_rng(0)
    plane = [random_c4c5_free_plane(40, s).graph for s in range(10)]
    tight = [[frozenset(int(c) for c in rng.choice(4, size=3, replace=False)) for _ in range(g.n)] for g in plane]
    ring = cycle(10)
    ring_lists = random_lists(ring, 4, 5, 1)
    gadget = catalog.get_entry("lemma3.8").build()
    # even cycles are 2-choosable, so every list system has to be visited
    hexagon = cycle(6)

    def colorable():
        for g, lists in zip(plane, tight):
            is_colorable(g, lists)

    def count():
        count_colorings(ring, ring_lists)

    def certify():
        R.check_reducible(gadget, "exhaustive")

    def profile():
        R.exhaustive_profile(hexagon, [2] * 6)

    return {
        "colorable (10 plane graphs, 3-lists)": colorable,
        "count colourings (C10, 4-lists)": count,
        "certify six-vertex entry": certify,
        "all 2-list systems on C6": profile,
    }


def worker(repeat: int) -> None:
    from flexcolor import USE_NUMBA

    out = {"numba": USE_NUMBA, "timings": {}}
    for name, fn in workloads().items():
        fn()  # warm-up, and compilation for the numba backend
        best = float("inf")
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t)
        out["timings"][name] = best
    print(json.dumps(out))


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["FLEXCOLOR_NO_NUMBA"] = "1"
    else:
        env.pop("FLEXCOLOR_NO_NUMBA", None)
    res = subprocess.run(
        [sys.executable, __file__, "--worker", "--repeat", str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(res.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", help="also write the results here")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)
    if args.worker:
        worker(args.repeat)
        return 0
    jit = run_backend(False, args.repeat)
    pure = run_backend(True, args.repeat)
    if not jit["numba"]:
        print("numba is not importable; both runs used the fallback", file=sys.stderr)
    width = max(len(k) for k in jit["timings"])
    print(f"{'workload':<{width}}  {'numba s':>9}  {'python s':>9}  {'speedup':>8}")
    rows = []
    for name, t_jit in jit["timings"].items():
        t_pure = pure["timings"][name]
        rows.append({"workload": name, "numba": t_jit, "python": t_pure, "speedup": t_pure / t_jit})
        print(f"{name:<{width}}  {t_jit:9.4f}  {t_pure:9.4f}  {t_pure / t_jit:7.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
