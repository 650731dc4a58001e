"""Pure-Python kernel for the hot lattice-coset loops.

A coset gK of K = GSp(2n, O) is stored as the canonical basis of the column
lattice g.O^(2n): the unique upper-triangular basis with p-power diagonal and
above-diagonal entries reduced modulo the diagonal of their row.  All entries
live in Z/p^pbound where p^pbound.Z^(2n) is contained in the lattice, so the
whole orbit machinery runs on small nonnegative integers.

Matrices are flat row-major lists of ints.  The compiled twin in _kernel_c
implements the same functions with the same semantics; kernel.py picks one at
import time.
"""

from .errors import BudgetExceeded, ClosureEscape, OrbitCollision

BACKEND = "python"


def mat_mul(n, a, b):
    """Flat n x n integer matrix product (no reduction)."""
    out = [0] * (n * n)
    for i in range(n):
        ib = i * n
        for k in range(n):
            x = a[ib + k]
            if x:
                kb = k * n
                for j in range(n):
                    out[ib + j] += x * b[kb + j]
    return out


def mat_mul_mod(n, a, b, mod):
    out = mat_mul(n, a, b)
    return [x % mod for x in out]


def _valp(x, p, pbound):
    if x == 0:
        return pbound
    v = 0
    while x % p == 0 and v < pbound:
        x //= p
        v += 1
    return v


def hnf_mod(n, m, p, pbound):
    """Canonical Hermite form of the column lattice of m, entries mod p^pbound.

    Requires p^pbound.Z^n to be contained in the lattice (so reduction mod
    p^pbound never changes it).  Returns a flat tuple: upper triangular,
    diagonal p^e_r (0 when e_r = pbound), entry (r, c) for r < c reduced into
    [0, p^e_r).

    Classical modular HNF: only unimodular column operations are used, and the
    virtual columns p^pbound * e_r (harmless since they lie in the lattice) are
    materialized lazily, so representative ambiguity mod p^pbound can never
    shrink the spanned lattice.
    """
    mod = p**pbound
    cols = [[m[r * n + c] % mod for r in range(n)] for c in range(n)]
    piv_cols = [None] * n
    for r in range(n - 1, -1, -1):
        best, bestv = None, pbound
        for ci, col in enumerate(cols):
            v = _valp(col[r], p, pbound)
            if v < bestv:
                best, bestv = ci, v
        if best is None:
            piv_cols[r] = [0] * n  # pivot is the virtual column p^pbound * e_r
            continue
        piv = cols.pop(best)
        pv = p**bestv
        u = piv[r] // pv
        uinv = pow(u, -1, mod) if u != 1 else 1
        for col in cols:
            x = col[r]
            if x:
                t = ((x // pv) * uinv) % mod
                for i in range(r):
                    col[i] = (col[i] - t * piv[i]) % mod
                col[r] = 0
        # residue of the absorbed virtual column p^pbound * e_r
        t = ((mod // pv) * uinv) % mod
        extra = [(-t * piv[i]) % mod for i in range(r)]
        if any(extra):
            cols.append(extra + [0] * (n - r))
        piv_cols[r] = piv
    a = [0] * (n * n)
    for r in range(n):
        for i in range(n):
            a[i * n + r] = piv_cols[r][i]
    # stage 2: normalize pivots to exact p-powers
    diag = [0] * n
    for r in range(n):
        y = a[r * n + r]
        e = _valp(y, p, pbound)
        diag[r] = e
        if e >= pbound:
            a[r * n + r] = 0
            continue
        u = y // p**e
        if u != 1:
            w = pow(u, -1, mod)
            for i in range(r + 1):
                a[i * n + r] = (a[i * n + r] * w) % mod
            a[r * n + r] = p**e
    # stage 3: reduce above-diagonal entries
    for c in range(n):
        for r in range(c - 1, -1, -1):
            pe = p ** diag[r]
            t = a[r * n + c] // pe
            if t:
                for i in range(r + 1):
                    ib = i * n
                    a[ib + c] = (a[ib + c] - t * a[ib + r]) % mod
    return tuple(a)


def encode(n, flat, mod):
    """Canonical bytes for a flat matrix with entries in [0, mod)."""
    if mod <= 256:
        return bytes(flat)
    out = bytearray(2 * n * n)
    for i, x in enumerate(flat):
        out[2 * i] = x & 0xFF
        out[2 * i + 1] = x >> 8
    return bytes(out)


def decode(n, key, mod):
    if mod <= 256:
        return list(key)
    return [key[2 * i] | (key[2 * i + 1] << 8) for i in range(n * n)]


def hnf_key(n, m, p, pbound):
    mod = p**pbound
    if mod > 65535:
        raise ValueError(f"p^pbound = {mod} too large for key encoding")
    return encode(n, hnf_mod(n, m, p, pbound), mod)


def orbit_from(n, seed, gens, p, pbound, limit=None):
    """BFS orbit of the lattice of `seed` under left multiplication by gens.

    Returns (keys, parents): keys in discovery order (seed first), and
    parents[i] = (j, g) with key_i = hnf(gens[g] . key_j); parents[0] = None.
    """
    mod = p**pbound
    k0 = hnf_key(n, seed, p, pbound)
    keys = [k0]
    parents = [None]
    index = {k0: 0}
    head = 0
    while head < len(keys):
        cur = decode(n, keys[head], mod)
        for gi, g in enumerate(gens):
            nk = encode(n, hnf_mod(n, mat_mul(n, g, cur), p, pbound), mod)
            if nk not in index:
                if limit is not None and len(keys) >= limit:
                    raise BudgetExceeded(
                        f"orbit exceeded {limit} cosets", partial=len(keys)
                    )
                index[nk] = len(keys)
                keys.append(nk)
                parents.append((head, gi))
        head += 1
    return keys, parents


def partition_within(n, keys, gens, p, pbound):
    """Orbit partition of a closed table of coset keys under gens.

    Returns labels: labels[i] is the smallest table index in the orbit of
    keys[i].  Raises ClosureEscape if a generator leaves the table.
    """
    mod = p**pbound
    index = {k: i for i, k in enumerate(keys)}
    labels = [-1] * len(keys)
    for start in range(len(keys)):
        if labels[start] >= 0:
            continue
        stack = [start]
        labels[start] = start
        while stack:
            cur = decode(n, keys[stack.pop()], mod)
            for g in gens:
                nk = encode(n, hnf_mod(n, mat_mul(n, g, cur), p, pbound), mod)
                j = index.get(nk)
                if j is None:
                    raise ClosureEscape("generator left the coset table")
                if labels[j] < 0:
                    labels[j] = start
                    stack.append(j)
    return labels


def labeled_reach(n, seeds, labels, targets, gens, p, pbound, limit=None):
    """Multi-source BFS from labeled seed matrices until all targets labeled.

    seeds: flat matrices; labels: one label per seed; targets: set of keys.
    Returns {target_key: label}.  Raises OrbitCollision if two different
    labels meet, BudgetExceeded past `limit`, and returns a partial dict if
    the orbits are exhausted before all targets are found.
    """
    mod = p**pbound
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
    head = 0
    while head < len(queue) and remaining:
        cur_key = queue[head]
        head += 1
        lab = visited[cur_key]
        cur = decode(n, cur_key, mod)
        for g in gens:
            nk = encode(n, hnf_mod(n, mat_mul(n, g, cur), p, pbound), mod)
            prev = visited.get(nk)
            if prev is None:
                if limit is not None and len(visited) >= limit:
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
    """Set of byte keys of the subgroup generated by gens in matrices mod `mod`.

    BFS from the identity under right multiplication.
    """
    ident = [0] * (n * n)
    for i in range(n):
        ident[i * n + i] = 1 % mod
    k0 = encode(n, ident, mod)
    seen = {k0}
    queue = [ident]
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for g in gens:
            nxt = mat_mul_mod(n, cur, g, mod)
            nk = encode(n, nxt, mod)
            if nk not in seen:
                if limit is not None and len(seen) >= limit:
                    raise BudgetExceeded(f"group closure exceeded {limit} elements")
                seen.add(nk)
                queue.append(nxt)
    return seen
