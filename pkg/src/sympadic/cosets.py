"""Coset tables, canonical keys, and orbit machinery.

Two engines share the work:

* the kernel engine handles right K-cosets of GSp(2n) inside one double coset
  (keys are canonical lattice Hermite forms at a table-wide scale; all the big
  BFS runs live here), and

* the block engine handles right cosets of block products (H(O), H'(O),
  GSp4-parahorics, the endohoric subgroup) in exact arithmetic with per-node
  normalized keys; every node doubles as its own witness element.

A key equality IS coset equality for these bases (see tests); the historical
"filter" contract is still honored by coset_equal, which cross-checks keys
against the exact membership test.
"""

from fractions import Fraction

from . import groups as G
from . import kernel
from . import matrices as mx
from .errors import BudgetExceeded, ClosureEscape, OrbitCollision
from .scalars import INF


# ---------------------------------------------------------------------------
# kernel engine: right K-cosets of GSp(2n) inside a fixed double coset


class GspCosetSpace:
    """Canonical keys for cosets gK inside K.anchor.K (fixed elementary
    divisors and similitude valuation)."""

    def __init__(self, field, anchor):
        self.field = field
        self.n2 = 2 * anchor.n
        flat, scale = mx.to_scaled(field, anchor.rows)
        self.scale = scale
        exps = kernel.smith_exponents(self.n2, flat, field.p)
        self.divisors = exps
        self.pbound = max(exps)
        self.sim_val = field.valuation(anchor.sim)
        self.anchor = anchor

    def key(self, g):
        """Canonical key of gK; raises if g is not in the right double coset."""
        if self.field.valuation(g.sim) != self.sim_val:
            raise ValueError("similitude valuation does not match the table")
        flat, scale = mx.to_scaled(self.field, g.rows)
        flat = self._rescale(flat, scale)
        return kernel.hnf_key(self.n2, flat, self.field.p, self.pbound)

    def _rescale(self, flat, scale):
        if scale < self.scale:
            f = self.field.p ** (self.scale - scale)
            return [x * f for x in flat]
        if scale > self.scale:
            f = self.field.p ** (scale - self.scale)
            out = []
            for x in flat:
                if x % f:
                    raise ValueError("representative not in the table's scale range")
                out.append(x // f)
            return out
        return list(flat)

    def key_of_flat(self, flat, scale):
        return kernel.hnf_key(
            self.n2, self._rescale(flat, scale), self.field.p, self.pbound
        )

    def gen_flats(self, gens):
        """Reduce integral generators to flat lists mod p^pbound."""
        mod = self.field.p**self.pbound
        out = []
        for g in gens:
            flat = []
            for row in g.rows:
                for x in row:
                    if x.denominator != 1:
                        raise ValueError("orbit generators must be integral")
                    flat.append(x.numerator % mod)
            out.append(flat)
        return out


class CosetTable:
    """A finite, duplicate-free set of right cosets with canonical keys."""

    def __init__(self, space, keys, parents=None, meta=None):
        self.space = space
        self.keys = list(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise ValueError("duplicate keys in coset table")
        self.parents = parents
        self.meta = meta or {}
        self.labels = None

    def __len__(self):
        return len(self.keys)

    def __contains__(self, key):
        return key in self.index

    def partition(self, gens):
        """Orbit partition under the (integral) generators; stores labels."""
        space = self.space
        self.labels = kernel.partition_within(
            space.n2, self.keys, space.gen_flats(gens), space.field.p, space.pbound
        )
        return self.labels

    def blocks(self):
        if self.labels is None:
            raise ValueError("partition() has not been run")
        out = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return out

    def orbit_count(self):
        return len(set(self.labels))

    def block_of_key(self, key):
        return self.labels[self.index[key]]


def orbit_table(field, anchor, gens, limit=None, meta=None):
    """BFS enumeration of the orbit of anchor.K under the generators."""
    space = GspCosetSpace(field, anchor)
    flat, scale = mx.to_scaled(field, anchor.rows)
    seed = space._rescale(flat, scale)
    keys, parents = kernel.orbit_from(
        space.n2, seed, space.gen_flats(gens), field.p, space.pbound, limit=limit
    )
    return CosetTable(space, keys, parents=parents, meta=meta)


def witness(table, idx, gens, anchor):
    """Reconstruct an exact group element representing table.keys[idx].

    parents must have been tracked; the witness is (product of generators
    along the BFS path) * anchor.
    """
    path = []
    while idx != 0:
        parent, gi = table.parents[idx]
        path.append(gi)
        idx = parent
    g = anchor
    for gi in reversed(path):
        g = gens[gi] * g
    return g


def coset_equal(g, gp, base_spec, space=None):
    """Exact decision of gB = g'B via membership, with a key cross-check when
    a kernel space for base K is supplied (keys are a filter, never trusted
    alone)."""
    exact = G.member(gp.inverse() * g, base_spec)
    if space is not None and base_spec == "K":
        keys_agree = space.key(g) == space.key(gp)
        if keys_agree != exact:
            raise AssertionError("canonical key disagrees with exact membership")
    return exact


# ---------------------------------------------------------------------------
# block engine: right cosets of block-diagonal groups, exact arithmetic
#
# A node is a tuple of per-block normalized lattices plus the common
# similitude; blocks(g) splits a group element into its GL-blocks.


def _block_lattice_key(field, rows):
    """Canonical (min divisor, spread, hnf) for the column lattice of a block."""
    p = field.p
    n = len(rows)
    vmin = INF
    vdet = field.valuation(_det(rows))
    for row in rows:
        for x in row:
            if x != 0:
                v = field.valuation(x)
                if v < vmin:
                    vmin = v
    scale = -vmin
    f = Fraction(p) ** scale
    flat = []
    for row in rows:
        for x in row:
            y = x * f
            assert y.denominator == 1
            flat.append(y.numerator)
    pbound = vdet + n * scale
    hnf = kernel.hnf_mod(n, flat, p, pbound) if pbound > 0 else tuple([0] * (n * n))
    if pbound == 0:
        # unimodular lattice: canonical form is the identity pattern
        hnf = tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))
    return (vmin, pbound, hnf)


def _det(rows):
    n = len(rows)
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # Laplace is fine for n = 4 on Fractions
    from itertools import permutations

    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # compute permutation sign
        visited = [False] * n
        for i in range(n):
            if not visited[i]:
                j = i
                clen = 0
                while not visited[j]:
                    visited[j] = True
                    j = seen[j]
                    clen += 1
                if clen % 2 == 0:
                    sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += sign * term
    return total


class BlockCosetSpace:
    """Right cosets gB for B a block product of GL(O)-type groups with
    matched determinants (H(O), H'(O)); extra congruence conditions on B can
    be layered via `refine`.

    blocks_fn: GroupElement -> tuple of square Fraction matrices.
    """

    def __init__(self, field, blocks_fn, sim_val):
        self.field = field
        self.blocks_fn = blocks_fn
        self.sim_val = sim_val

    def key(self, g):
        if self.field.valuation(g.sim) != self.sim_val:
            raise ValueError("similitude valuation mismatch")
        return tuple(_block_lattice_key(self.field, b.rows) for b in self.blocks_fn(g))


def gl2_witness_from_key(field, key, detval):
    """The canonical GL2 block with the keyed lattice and det p^detval."""
    vmin, pbound, hnf = key
    p = Fraction(field.p)
    rows = [[hnf[0], hnf[1]], [hnf[2], hnf[3]]]
    rows = [[Fraction(x) * p**vmin for x in row] for row in rows]
    d = _det(rows)
    delta = p**detval / d
    return G.GroupElement(field, [[rows[0][0], rows[0][1] * delta],
                                  [rows[1][0], rows[1][1] * delta]])


class ExactOrbit:
    """Generic left-orbit enumeration with exact representatives.

    bucket_fn(g) must be coset-invariant (g B = g' B implies equal buckets);
    within a bucket, equal_fn decides exact coset equality.  When bucket_fn is
    injective on cosets, equal_fn never fires.  Used for bases like the
    endohoric subgroup whose cosets have no cheap perfect key.
    """

    def __init__(self, bucket_fn, equal_fn):
        self.bucket_fn = bucket_fn
        self.equal_fn = equal_fn
        self.buckets = {}
        self.reps = []

    def add(self, g):
        """Insert the coset of g; returns (index, was_new)."""
        b = self.bucket_fn(g)
        lst = self.buckets.setdefault(b, [])
        for idx in lst:
            if self.equal_fn(self.reps[idx], g):
                return idx, False
        idx = len(self.reps)
        self.reps.append(g)
        lst.append(idx)
        return idx, True

    def find(self, g):
        b = self.bucket_fn(g)
        for idx in self.buckets.get(b, ()):
            if self.equal_fn(self.reps[idx], g):
                return idx
        return None

    def close(self, seeds, gens, limit=None):
        queue = []
        for s in seeds:
            idx, new = self.add(s)
            if new:
                queue.append(idx)
        head = 0
        while head < len(queue):
            cur = self.reps[queue[head]]
            head += 1
            for s in gens:
                idx, new = self.add(s * cur)
                if new:
                    if limit is not None and len(self.reps) > limit:
                        raise BudgetExceeded(f"orbit exceeded {limit} cosets")
                    queue.append(idx)
        return self

    def partition(self, gens):
        """Orbit partition of the table under a (sub)group, staying inside."""
        labels = [-1] * len(self.reps)
        for start in range(len(self.reps)):
            if labels[start] >= 0:
                continue
            labels[start] = start
            stack = [start]
            while stack:
                cur = self.reps[stack.pop()]
                for s in gens:
                    j = self.find(s * cur)
                    if j is None:
                        raise ClosureEscape("generator left the exact orbit table")
                    if labels[j] < 0:
                        labels[j] = start
                        stack.append(j)
        return labels


def member_equal(base_spec):
    """equal_fn testing g' B = g B via exact membership."""

    def eq(a, b):
        return G.member(a.inverse() * b, base_spec)

    return eq


class HCosetSpace:
    """Right cosets gU, g in H; nodes are their own witnesses."""

    def __init__(self, field, sim_val):
        self.field = field
        self.sim_val = sim_val

    def key(self, g):
        if self.field.valuation(g.sim) != self.sim_val:
            raise ValueError("similitude valuation mismatch")
        return tuple(_block_lattice_key(self.field, b.rows) for b in G.pr_factors(g))

    def witness(self, key):
        """An exact element of H whose coset has this key."""
        h = [gl2_witness_from_key(self.field, k, self.sim_val) for k in key]
        return G.iota(self.field, *h)

    def orbit(self, start, gens, limit=None):
        """Left orbit {s.start.U} under exact generators (any H-elements)."""
        k0 = self.key(start)
        seen = {k0}
        queue = [k0]
        head = 0
        while head < len(queue):
            cur = self.witness(queue[head])
            head += 1
            for s in gens:
                nk = self.key(s * cur)
                if nk not in seen:
                    if limit is not None and len(seen) >= limit:
                        raise BudgetExceeded(f"H-coset orbit exceeded {limit}")
                    seen.add(nk)
                    queue.append(nk)
        return queue

    def witnesses(self, keys):
        return [self.witness(k) for k in keys]
