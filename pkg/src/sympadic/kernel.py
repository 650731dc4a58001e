"""Backend selection for the hot lattice-coset kernels.

The compiled extension (_kernel_c, Cython) and the pure-Python twin
(_kernel_py) export the same functions with identical semantics; the compiled
one is picked when available.  Set SYMPADIC_KERNEL=py to force the fallback,
SYMPADIC_KERNEL=c to require the extension.
"""

import os

from . import _kernel_py

_choice = os.environ.get("SYMPADIC_KERNEL", "")
if _choice == "py":
    _impl = _kernel_py
else:
    try:
        from . import _kernel_c as _impl
    except ImportError:
        if _choice == "c":
            raise
        _impl = _kernel_py

BACKEND = _impl.BACKEND

mat_mul = _impl.mat_mul
mat_mul_mod = _impl.mat_mul_mod
hnf_mod = _impl.hnf_mod
hnf_key = _impl.hnf_key
encode = _impl.encode
decode = _impl.decode
orbit_from = _impl.orbit_from
partition_within = _impl.partition_within
labeled_reach = _impl.labeled_reach
close_group = _impl.close_group


def backends():
    """All importable kernel backends (for the benchmark and twin tests)."""
    out = {"python": _kernel_py}
    try:
        from . import _kernel_c

        out["c"] = _kernel_c
    except ImportError:
        pass
    return out


def smith_exponents(n, flat, p):
    """Elementary divisor exponents (sorted) of an integer matrix over Z_(p).

    Only the p-part matters: prime-to-p factors are units in Z_(p).  The
    matrix must have nonzero determinant.
    """
    a = [list(flat[i * n : (i + 1) * n]) for i in range(n)]

    def valp(x):
        if x == 0:
            return None
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    exps = []
    for t in range(n):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                v = valp(a[i][j])
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            raise ValueError("singular matrix in smith_exponents")
        v, bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        piv = a[t][t]
        pv = p**v
        upiv = piv // pv
        for i in range(t + 1, n):
            x = a[i][t]
            if x:
                m = x // pv
                a[i] = [upiv * a[i][j] - m * a[t][j] for j in range(n)]
        for j in range(t + 1, n):
            x = a[t][j]
            if x:
                m = x // pv
                for i in range(t, n):
                    a[i][j] = upiv * a[i][j] - m * a[i][t]
        exps.append(v)
    return sorted(exps)
