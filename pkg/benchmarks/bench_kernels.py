"""Compare the compiled and pure-Python kernels.

Micro-benchmarks call both kernel modules directly; the end-to-end rows run
the same workload in a subprocess per backend (``SYLOWLAB_PURE``).

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from sylowlab import _pykernels as PY

try:
    from sylowlab import _ckernels as CY
except ImportError:
    CY = None

END_TO_END = {
    "Sz(8) chain": "C.suzuki_8().group.order()",
    "Sz(8) v2, v5": "G = C.suzuki_8().group; count_sylow(G, 2); count_sylow(G, 5)",
    "PSL(3,3) v2, v3": "G = C.psl3_3().group; count_sylow(G, 2); count_sylow(G, 3)",
    "corpus scan": "scan_corpus(builtin_corpus())",
}
SETUP = ("from sylowlab import catalog as C; from sylowlab.sylow import count_sylow; "
         "from sylowlab.criterion import scan_corpus; from sylowlab.corpus import builtin_corpus")


def micro(K, repeat):
    rng = random.Random(0)
    n = 65
    a, b = tuple(rng.sample(range(n), n)), tuple(rng.sample(range(n), n))
    binv = K.invert(b)
    elems = [tuple(rng.sample(range(n), n)) for _ in range(64)]
    gens = [tuple(rng.sample(range(12), 12)), tuple(rng.sample(range(12), 12))]
    cases = {
        "compose (n=65)": (lambda: K.compose(a, b), 20000),
        "perm_order (n=65)": (lambda: K.perm_order(a), 20000),
        "conjugate_key (64 x n=65)": (lambda: K.conjugate_key(elems, b, binv), 500),
        "bfs_closure (10^5 elems)": (lambda: K.bfs_closure(gens, 12, 100000), 1),
    }
    out = {}
    for name, (fn, number) in cases.items():
        out[name] = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
    return out


def end_to_end(pure, repeat):
    env = dict(os.environ, SYLOWLAB_PURE="1" if pure else "0")
    out = {}
    for name, stmt in END_TO_END.items():
        code = (f"import timeit; {SETUP}\n"
                f"print(min(timeit.repeat({stmt!r}, setup={SETUP!r}, number=1, repeat={repeat})))")
        proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                              text=True, check=True)
        out[name] = float(proc.stdout)
    return out


def fmt(t):
    return f"{t * 1e6:10.2f} us" if t < 1e-3 else f"{t * 1e3:10.2f} ms"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if CY is None:
        print("compiled kernel not built; only the pure-Python backend is available")
    rows = []
    py = micro(PY, args.repeat)
    cy = micro(CY, args.repeat) if CY else {}
    rows += [(k, py[k], cy.get(k)) for k in py]
    py = end_to_end(True, args.repeat)
    cy = end_to_end(False, args.repeat) if CY else {}
    rows += [(k, py[k], cy.get(k)) for k in py]
    print(f"{'workload':28s} {'python':>13s} {'cython':>13s} {'speedup':>8s}")
    for name, tp, tc in rows:
        speed = f"{tp / tc:7.1f}x" if tc else "      -"
        print(f"{name:28s} {fmt(tp)} {fmt(tc) if tc else '            -'} {speed}")


if __name__ == "__main__":
    main()
