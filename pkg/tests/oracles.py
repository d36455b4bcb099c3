"""Independent brute-force oracles shared by the unit and acceptance tests.

The point of these is to disagree with the library if anything is wrong:
they enumerate raw supports and raw coefficient patterns with none of the
normalizations the production search uses.
"""
import itertools

import numpy as np


def brute_force_weight_exists(ctx, exponents, w, chunk=100_000):
    """True iff some weight-w word has zero syndrome at every exponent.

    Enumerates all C(n, w) supports and all 2^w coefficient patterns over
    {1, 2}; no x_1 = 1 or c_1 = 1 normalization anywhere.
    """
    n = ctx.n
    cols = [ctx.power_map(r)[ctx.exp_np] for r in exponents]
    neg = ctx.neg_np
    combos = itertools.combinations(range(n), w)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return False
        idx = np.array(block, dtype=np.int64)
        for pattern in itertools.product((1, 2), repeat=w):
            alive = None
            for col in cols:
                vals = col[idx]
                acc = np.zeros(len(idx), dtype=np.int64)
                for t, c in enumerate(pattern):
                    v = vals[:, t]
                    if c == 2:
                        v = neg[v]
                    acc = ctx.vadd(acc, v)
                zero = acc == 0
                alive = zero if alive is None else (alive & zero)
                if not alive.any():
                    break
            if alive is not None and alive.any():
                return True


def valid_exponents(m):
    """Exponents e for which CodeSpec(ctx, e) is constructible without force."""
    from trit_codes.cosets import coset_of

    n = 3**m - 1
    c1 = set(coset_of(m, 1).members)
    return [e for e in range(2, n - 1) if e not in c1]
