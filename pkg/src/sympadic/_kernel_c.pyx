# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of _kernel_py: same functions, same semantics.

All orbit arithmetic runs on entries in [0, p^pbound) with p^pbound <= 65535,
so every intermediate product fits comfortably in 64-bit integers (at most
8 * 65535^2 per accumulated entry).  Matrices are C arrays of size n*n with
n <= 8; visited sets stay ordinary Python dicts keyed by canonical bytes.
"""

from .errors import BudgetExceeded, ClosureEscape, OrbitCollision
from . import _kernel_py as _py

BACKEND = "c"

DEF NMAX = 8
DEF NN = 64

cdef long long OVERFLOW_GUARD = (<long long> 1) << 27


cdef void _mul(int n, long long* a, long long* b, long long* out) noexcept nogil:
    cdef int i, j, k
    cdef long long x
    for i in range(n * n):
        out[i] = 0
    for i in range(n):
        for k in range(n):
            x = a[i * n + k]
            if x != 0:
                for j in range(n):
                    out[i * n + j] += x * b[k * n + j]


cdef void _mul_mod(int n, long long* a, long long* b, long long* out, long long mod) noexcept nogil:
    cdef int i
    _mul(n, a, b, out)
    for i in range(n * n):
        out[i] = out[i] % mod
        if out[i] < 0:
            out[i] += mod


cdef int _valp(long long x, long long p, int pbound) noexcept nogil:
    cdef int v = 0
    if x == 0:
        return pbound
    while x % p == 0 and v < pbound:
        x = x // p
        v += 1
    return v


cdef long long _invmod(long long u, long long mod) noexcept nogil:
    # extended Euclid; u is a unit mod `mod`
    cdef long long r0 = mod, r1 = u % mod, t0 = 0, t1 = 1, q, tmp
    while r1 != 0:
        q = r0 // r1
        tmp = r0 - q * r1; r0 = r1; r1 = tmp
        tmp = t0 - q * t1; t0 = t1; t1 = tmp
    t0 = t0 % mod
    if t0 < 0:
        t0 += mod
    return t0


cdef void _hnf(int n, long long* a, long long p, int pbound) noexcept nogil:
    """In-place canonical Hermite form; same algorithm as _kernel_py.hnf_mod.

    Unimodular column operations only, with the virtual columns
    p^pbound * e_r materialized lazily into a widened column pool, so mod
    reduction never shrinks the lattice.
    """
    cdef long long mod = 1
    cdef int i, r, c, best, bestv, v, e, ncols, nz
    cdef long long piv, pv, x, t, y, u, w, pe, uinv
    cdef long long diagpe[NMAX]
    # column pool: up to 2n columns of height n, column-major
    cdef long long pool[2 * NMAX * NMAX]
    cdef long long pivcol[NMAX * NMAX]
    for i in range(pbound):
        mod *= p
    ncols = n
    for c in range(n):
        for r in range(n):
            x = a[r * n + c] % mod
            if x < 0:
                x += mod
            pool[c * NMAX + r] = x
    # stage 1: pick pivots bottom-up
    for r in range(n - 1, -1, -1):
        best = -1
        bestv = pbound
        for c in range(ncols):
            v = _valp(pool[c * NMAX + r], p, pbound)
            if v < bestv:
                best = c
                bestv = v
        if best < 0:
            for i in range(n):
                pivcol[r * NMAX + i] = 0
            continue
        pv = 1
        for i in range(bestv):
            pv *= p
        piv = pool[best * NMAX + r]
        u = piv // pv
        uinv = 1
        if u != 1:
            uinv = _invmod(u, mod)
        # move pivot out of the pool (swap with last)
        for i in range(n):
            pivcol[r * NMAX + i] = pool[best * NMAX + i]
        ncols -= 1
        if best != ncols:
            for i in range(n):
                pool[best * NMAX + i] = pool[ncols * NMAX + i]
        for c in range(ncols):
            x = pool[c * NMAX + r]
            if x != 0:
                t = ((x // pv) * uinv) % mod
                for i in range(r):
                    pool[c * NMAX + i] = (pool[c * NMAX + i] - t * pivcol[r * NMAX + i]) % mod
                    if pool[c * NMAX + i] < 0:
                        pool[c * NMAX + i] += mod
                pool[c * NMAX + r] = 0
        # residue of the absorbed virtual column p^pbound * e_r
        t = ((mod // pv) * uinv) % mod
        nz = 0
        for i in range(r):
            x = (-t * pivcol[r * NMAX + i]) % mod
            if x < 0:
                x += mod
            pool[ncols * NMAX + i] = x
            if x != 0:
                nz = 1
        for i in range(r, n):
            pool[ncols * NMAX + i] = 0
        if nz:
            ncols += 1
    for r in range(n):
        for i in range(n):
            a[i * n + r] = pivcol[r * NMAX + i]
    # stage 2
    for r in range(n):
        y = a[r * n + r]
        e = _valp(y, p, pbound)
        pe = 1
        for i in range(e):
            pe *= p
        diagpe[r] = pe
        if e >= pbound:
            a[r * n + r] = 0
            continue
        u = y // pe
        if u != 1:
            w = _invmod(u, mod)
            for i in range(r + 1):
                a[i * n + r] = (a[i * n + r] * w) % mod
            a[r * n + r] = pe
    # stage 3
    for c in range(n):
        for r in range(c - 1, -1, -1):
            t = a[r * n + c] // diagpe[r]
            if t != 0:
                for i in range(r + 1):
                    a[i * n + c] = (a[i * n + c] - t * a[i * n + r]) % mod
                    if a[i * n + c] < 0:
                        a[i * n + c] += mod


cdef bytes _encode(int n, long long* a, long long mod):
    cdef unsigned char buf[2 * NN]
    cdef int i, nn = n * n
    if mod <= 256:
        for i in range(nn):
            buf[i] = <unsigned char> a[i]
        return bytes(buf[:nn])
    for i in range(nn):
        buf[2 * i] = <unsigned char> (a[i] & 0xFF)
        buf[2 * i + 1] = <unsigned char> (a[i] >> 8)
    return bytes(buf[:2 * nn])


cdef void _decode(int n, bytes key, long long mod, long long* out):
    cdef const unsigned char* s = key
    cdef int i, nn = n * n
    if mod <= 256:
        for i in range(nn):
            out[i] = s[i]
    else:
        for i in range(nn):
            out[i] = s[2 * i] | (s[2 * i + 1] << 8)


cdef long long _load(int n, object flat, long long* out, long long mod) except -1:
    cdef int i
    cdef object x
    for i in range(n * n):
        x = flat[i]
        out[i] = <long long> (x % mod)
        if out[i] < 0:
            out[i] += mod
    return 0


def mat_mul(n, a, b):
    """Integer matmul; falls back to arbitrary precision on large entries."""
    cdef long long A[NN]
    cdef long long B[NN]
    cdef long long C[NN]
    cdef int i, nn = n * n
    cdef object x
    for i in range(nn):
        x = a[i]
        if x > OVERFLOW_GUARD or x < -OVERFLOW_GUARD:
            return _py.mat_mul(n, a, b)
        A[i] = x
        x = b[i]
        if x > OVERFLOW_GUARD or x < -OVERFLOW_GUARD:
            return _py.mat_mul(n, a, b)
        B[i] = x
    _mul(n, A, B, C)
    return [C[i] for i in range(nn)]


def mat_mul_mod(n, a, b, mod):
    return [x % mod for x in mat_mul(n, a, b)]


def hnf_mod(n, m, p, pbound):
    cdef long long A[NN]
    cdef long long mod = 1
    cdef int i
    for i in range(pbound):
        mod *= p
    _load(n, m, A, mod)
    _hnf(n, A, p, pbound)
    return tuple(A[i] for i in range(n * n))


def encode(n, flat, mod):
    return _py.encode(n, flat, mod)


def decode(n, key, mod):
    return _py.decode(n, key, mod)


def hnf_key(n, m, p, pbound):
    cdef long long A[NN]
    cdef long long mod = 1
    cdef int i
    for i in range(pbound):
        mod *= p
    if mod > 65535:
        raise ValueError(f"p^pbound = {mod} too large for key encoding")
    _load(n, m, A, mod)
    _hnf(n, A, p, pbound)
    return _encode(n, A, mod)


cdef long long GBUF[128 * NN]

cdef int _load_gens(int n, object gens, long long mod) except -1:
    cdef int gi, i
    cdef object g
    if len(gens) > 128:
        raise ValueError("too many generators for the compiled kernel")
    for gi, g in enumerate(gens):
        _load(n, g, &GBUF[gi * NN], mod)
    return len(gens)


def orbit_from(n, seed, gens, p, pbound, limit=None):
    cdef long long CUR[NN]
    cdef long long TMP[NN]
    cdef long long mod = 1
    cdef int i, gi, ngens, cn = n
    cdef long long lim = -1 if limit is None else <long long> limit
    for i in range(pbound):
        mod *= p
    if mod > 65535:
        raise ValueError(f"p^pbound = {mod} too large for key encoding")
    ngens = _load_gens(n, gens, mod)
    k0 = hnf_key(n, seed, p, pbound)
    keys = [k0]
    parents = [None]
    index = {k0: 0}
    cdef Py_ssize_t head = 0
    while head < len(keys):
        _decode(cn, <bytes> keys[head], mod, CUR)
        for gi in range(ngens):
            _mul_mod(cn, &GBUF[gi * NN], CUR, TMP, mod)
            _hnf(cn, TMP, p, pbound)
            nk = _encode(cn, TMP, mod)
            if nk not in index:
                if lim >= 0 and len(keys) >= lim:
                    raise BudgetExceeded(
                        f"orbit exceeded {limit} cosets", partial=len(keys)
                    )
                index[nk] = len(keys)
                keys.append(nk)
                parents.append((head, gi))
        head += 1
    return keys, parents


def partition_within(n, keys, gens, p, pbound):
    cdef long long CUR[NN]
    cdef long long TMP[NN]
    cdef long long mod = 1
    cdef int i, gi, ngens, cn = n
    for i in range(pbound):
        mod *= p
    ngens = _load_gens(n, gens, mod)
    index = {k: i for i, k in enumerate(keys)}
    cdef Py_ssize_t total = len(keys)
    labels = [-1] * total
    cdef Py_ssize_t start, cur_i
    stack = []
    for start in range(total):
        if labels[start] >= 0:
            continue
        stack.append(start)
        labels[start] = start
        while stack:
            cur_i = stack.pop()
            _decode(cn, <bytes> keys[cur_i], mod, CUR)
            for gi in range(ngens):
                _mul_mod(cn, &GBUF[gi * NN], CUR, TMP, mod)
                _hnf(cn, TMP, p, pbound)
                nk = _encode(cn, TMP, mod)
                j = index.get(nk)
                if j is None:
                    raise ClosureEscape("generator left the coset table")
                if labels[j] < 0:
                    labels[j] = start
                    stack.append(j)
    return labels


def labeled_reach(n, seeds, labels, targets, gens, p, pbound, limit=None):
    cdef long long CUR[NN]
    cdef long long TMP[NN]
    cdef long long mod = 1
    cdef int i, gi, ngens, cn = n
    cdef long long lim = -1 if limit is None else <long long> limit
    for i in range(pbound):
        mod *= p
    ngens = _load_gens(n, gens, mod)
    found = {}
    remaining = set(targets)
    visited = {}
    queue = []
    for s, lab in zip(seeds, labels):
        k = hnf_key(n, s, p, pbound)
        if k in visited and visited[k] != lab:
            raise OrbitCollision("seed anchors coincide", key=k, labels=(visited[k], lab))
        if k not in visited:
            visited[k] = lab
            queue.append(k)
        if k in remaining:
            found[k] = lab
            remaining.discard(k)
    cdef Py_ssize_t head = 0
    while head < len(queue) and remaining:
        cur_key = queue[head]
        head += 1
        lab = visited[cur_key]
        _decode(cn, <bytes> cur_key, mod, CUR)
        for gi in range(ngens):
            _mul_mod(cn, &GBUF[gi * NN], CUR, TMP, mod)
            _hnf(cn, TMP, p, pbound)
            nk = _encode(cn, TMP, mod)
            prev = visited.get(nk)
            if prev is None:
                if lim >= 0 and len(visited) >= lim:
                    raise BudgetExceeded(f"labeled reach exceeded {limit} cosets")
                visited[nk] = lab
                queue.append(nk)
                if nk in remaining:
                    found[nk] = lab
                    remaining.discard(nk)
            elif prev != lab:
                raise OrbitCollision(
                    "distinct anchors met in one orbit", key=nk, labels=(prev, lab)
                )
    return found


def close_group(n, gens, mod, limit=None):
    cdef long long CUR[NN]
    cdef long long TMP[NN]
    cdef int i, gi, ngens, cn = n
    cdef long long cmod = mod
    cdef long long lim = -1 if limit is None else <long long> limit
    if cmod > 65535:
        raise ValueError(f"mod = {mod} too large for key encoding")
    ngens = _load_gens(n, gens, cmod)
    ident = [0] * (n * n)
    for i in range(n):
        ident[i * n + i] = 1 % mod
    k0 = _py.encode(n, ident, mod)
    seen = {k0}
    queue = [k0]
    cdef Py_ssize_t head = 0
    while head < len(queue):
        _decode(cn, <bytes> queue[head], cmod, CUR)
        head += 1
        for gi in range(ngens):
            _mul_mod(cn, CUR, &GBUF[gi * NN], TMP, cmod)
            nk = _encode(cn, TMP, cmod)
            if nk not in seen:
                if lim >= 0 and len(seen) >= lim:
                    raise BudgetExceeded(f"group closure exceeded {limit} elements")
                seen.add(nk)
                queue.append(nk)
    return seen
