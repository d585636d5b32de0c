"""Compare the compiled and pure-Python signature kernels.

    python3 benchmarks/bench_signature.py [--columns 2000] [--repeat 200]

Times raw signature reduction on random long walls, then a full wall BFS
with each backend swapped in.
"""
from __future__ import annotations

import argparse
import random
import timeit

from youngwalls import _kernel, walls
from youngwalls._signature_py import reduce_signature as reduce_py
from youngwalls.cartan import AffineType, fundamental_weight


def _bfs(depth: int) -> int:
    walls.wall_model.cache_clear()
    total = 0
    for ctype, lam in ((AffineType.D4_3, 0), (AffineType.G2_1, 0), (AffineType.G2_1, 2)):
        total += len(walls.generate_crystal(ctype, fundamental_weight(lam), depth,
                                            check_weights=False))
    return total


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--columns", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--depth", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    eps = bytes(rng.randrange(4) for _ in range(15))
    phi = bytes(rng.randrange(4) for _ in range(15))
    classes = bytes(rng.randrange(15) for _ in range(args.columns))
    call = (classes, eps, phi, 1)

    backends = {"python": reduce_py}
    if _kernel.BACKEND == "cython":
        backends["cython"] = _kernel.reduce_signature
        assert backends["cython"](*call) == reduce_py(*call)
    else:
        print("compiled kernel not built; timing the Python fallback only")

    print(f"signature reduction, {args.columns} columns x {args.repeat} calls")
    times = {}
    for name, fn in backends.items():
        times[name] = min(timeit.repeat(lambda: fn(*call), number=args.repeat, repeat=3))
        print(f"  {name:7s} {1e6 * times[name] / args.repeat:10.1f} us/call")
    if "cython" in times:
        print(f"  speedup {times['python'] / times['cython']:.1f}x")

    print(f"wall BFS to depth {args.depth}, all three (type, lambda)")
    original = _kernel.reduce_signature
    try:
        for name, fn in backends.items():
            _kernel.reduce_signature = fn
            t = min(timeit.repeat(lambda: _bfs(args.depth), number=1, repeat=3))
            print(f"  {name:7s} {t:8.3f} s  ({_bfs(args.depth)} walls)")
    finally:
        _kernel.reduce_signature = original


if __name__ == "__main__":
    main()
