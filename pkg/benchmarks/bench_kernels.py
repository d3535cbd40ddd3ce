"""Compare the compiled kernels against the pure-Python fallback.

Both implementations are called with identical arguments; results must
match exactly before any timing is reported.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from petit import _kernels_py
from petit.fields import FrobeniusPower, make_finite_field
from petit.skew import SkewRing

try:
    from petit import _kernels as _compiled
except ImportError:
    _compiled = None


def workload(p, h, r, deg, count, seed=0):
    R = SkewRing(make_finite_field(p, h), FrobeniusPower(r))
    F = R.base
    rng = random.Random(seed)
    pairs = [(R.random(rng, deg), R.random(rng, deg // 2, monic=True)) for _ in range(count)]
    exp, log, zech = F.kernel_tables
    ctx = (R._sig, F.q, R._order, exp, log, zech, F.qm1, F.p)
    return pairs, ctx


def matrices(p, n, count, seed=0):
    rng = random.Random(seed)
    return [[[rng.randrange(p) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def run_mul(impl, pairs, ctx):
    return [impl.twisted_mul(a, b, *ctx) for a, b in pairs]


def run_divmod(impl, pairs, ctx):
    return [impl.twisted_divmod(a, b, *ctx) for a, b in pairs]


def run_rref(impl, mats, p):
    return [impl.rref_mod_p(m, len(m[0]), p) for m in mats]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return

    cases = []
    for p, h, r, deg in [(2, 4, 1, 12), (3, 4, 1, 24), (2, 8, 3, 48)]:
        pairs, ctx = workload(p, h, r, deg, 200)
        label = f"F_{p}^{h} deg {deg}"
        cases.append((f"twisted_mul     {label}", run_mul, (pairs, ctx)))
        cases.append((f"twisted_divmod  {label}", run_divmod, (pairs, ctx)))
    for p, n in [(3, 16), (7, 40)]:
        cases.append((f"rref_mod_p      F_{p} {n}x{n}", run_rref, (matrices(p, n, 20), p)))

    print(f"{'kernel':<36}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for label, fn, data in cases:
        assert fn(_kernels_py, *data) == fn(_compiled, *data), f"{label}: backends disagree"
        slow = min(timeit.repeat(lambda: fn(_kernels_py, *data), number=1, repeat=args.repeat))
        fast = min(timeit.repeat(lambda: fn(_compiled, *data), number=1, repeat=args.repeat))
        print(f"{label:<36}{slow * 1e3:>12.2f}{fast * 1e3:>13.2f}{slow / fast:>8.1f}x")


if __name__ == "__main__":
    main()
