"""Root datum of type C3, the cocharacter lattice, and (Iwahori-)Weyl groups.

Cocharacters are integer 4-tuples (a0, a1, a2, a3) in the basis f0..f3, where
f0 is the similitude direction.  The finite Weyl group W = (Z/2)^3 x| S3 acts
linearly; the Iwahori-Weyl group Lambda x| W is modelled faithfully by affine
maps on the lattice, which is all any operation here needs.

The GSp4 analogues (lattice Lambda2 = Z f0 + Z f2 + Z f3, reflections r0, r1,
r2) live in the same module since they share all the machinery.
"""

from collections import deque
from functools import lru_cache


# ---------------------------------------------------------------------------
# the finite Weyl action on Lambda


def act_s0(l):
    a0, a1, a2, a3 = l
    return (a0, a0 - a1, a2, a3)


def act_s1(l):
    a0, a1, a2, a3 = l
    return (a0, a2, a1, a3)


def act_s2(l):
    a0, a1, a2, a3 = l
    return (a0, a1, a3, a2)


def act_s3(l):
    a0, a1, a2, a3 = l
    return (a0, a1, a2, a0 - a3)


def act_r0(l):
    a0, a1, a2, a3 = l
    return (a0, a1, a0 - a2, a3)


def act_r1(l):
    a0, a1, a2, a3 = l
    return (a0, a1, a3, a2)


def act_r2(l):
    a0, a1, a2, a3 = l
    return (a0, a1, a2, a0 - a3)


SIMPLE_ACTIONS = {
    "s0": act_s0,
    "s1": act_s1,
    "s2": act_s2,
    "s3": act_s3,
    "r0": act_r0,
    "r1": act_r1,
    "r2": act_r2,
}


def weyl_act(tag, l):
    return SIMPLE_ACTIONS[tag](tuple(l))


# positive roots of C3 as pairing functionals on Lambda
# e_i - e_j (i<j), e_i + e_j - e_0 (i<j), 2 e_i - e_0
POS_ROOT_PAIRINGS = [
    lambda l: l[1] - l[2],
    lambda l: l[1] - l[3],
    lambda l: l[2] - l[3],
    lambda l: l[1] + l[2] - l[0],
    lambda l: l[1] + l[3] - l[0],
    lambda l: l[2] + l[3] - l[0],
    lambda l: 2 * l[1] - l[0],
    lambda l: 2 * l[2] - l[0],
    lambda l: 2 * l[3] - l[0],
]


def alpha0(l):
    """Highest root 2 e_1 - e_0."""
    return 2 * l[1] - l[0]


def beta0(l):
    return 2 * l[2] - l[0]


def beta2(l):
    return 2 * l[3] - l[0]


def depth(l):
    """max of |alpha0|, |beta0|, |beta2| at l."""
    return max(abs(alpha0(l)), abs(beta0(l)), abs(beta2(l)))


def is_dominant(l):
    return l[1] >= l[2] >= l[3] and 2 * l[3] - l[0] >= 0


def is_antidominant(l):
    return l[1] <= l[2] <= l[3] and 2 * l[3] - l[0] <= 0


def weyl_orbit(l, gens=("s1", "s2", "s3")):
    """The orbit of l under the listed simple reflections (finite W)."""
    seen = {tuple(l)}
    queue = [tuple(l)]
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = weyl_act(g, cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def dominant_rep(l):
    return next(m for m in weyl_orbit(l) if is_dominant(m))


def antidominant_rep(l):
    return next(m for m in weyl_orbit(l) if is_antidominant(m))


def length_min(l):
    """Minimal length in t(lambda) W inside the Iwahori-Weyl group.

    sum over positive roots a with <l, a> <= 0 of |<l, a>| plus
    sum over positive roots a with <l, a> > 0 of (<l, a> - 1).
    """
    total = 0
    for pairing in POS_ROOT_PAIRINGS:
        v = pairing(l)
        total += -v if v <= 0 else v - 1
    return total


# ---------------------------------------------------------------------------
# affine model of the Iwahori-Weyl group
#
# An element is (M, t): the affine map l -> M.l + t on Lambda, with M the
# matrix of the finite part in the f-basis.  Letters compose on the right:
# appending a letter s to a word w gives the map w o s.


def _linear_matrix(act):
    basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    cols = [act(b) for b in basis]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def _apply(mat, v):
    return tuple(sum(mat[i][j] * v[j] for j in range(4)) for i in range(4))


def _mat_mul4(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)) for i in range(4)
    )


IDENTITY_AFF = (_linear_matrix(lambda v: v), (0, 0, 0, 0))


def compose(x, y):
    """(x o y): first apply y, then x."""
    mx, tx = x
    my, ty = y
    return (_mat_mul4(mx, my), tuple(a + b for a, b in zip(_apply(mx, ty), tx)))


def translation(t):
    return (IDENTITY_AFF[0], tuple(t))


def linear(tag):
    return (_linear_matrix(SIMPLE_ACTIONS[tag]), (0, 0, 0, 0))


# affine letters for GSp6: classes of the matrices w0..w3 and rho
AFF = {
    "w0": compose(translation((0, 1, 0, 0)), linear("s0")),  # t(f1) s0
    "w1": linear("s1"),
    "w2": linear("s2"),
    "w3": linear("s3"),
}


def _omega():
    w = linear("s3")
    for tag in ("s2", "s3", "s1", "s2", "s3"):
        w = compose(w, linear(tag))
    return compose(translation((-1, 0, 0, 0)), w)


AFF["rho"] = _omega()

S_AFF_LETTERS = ("w0", "w1", "w2", "w3")
OMEGA_SWAP = {"w0": "w3", "w3": "w0", "w1": "w2", "w2": "w1"}


def _mat_inv4(m):
    # signed permutation-ish integer matrices: invert by solving
    from fractions import Fraction

    n = 4
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(int(a[i][j + n]) for j in range(n)) for i in range(n))


def aff_inverse(x):
    m, t = x
    mi = _mat_inv4(m)
    return (mi, tuple(-v for v in _apply(mi, t)))


AFF["rho-"] = aff_inverse(AFF["rho"])


class IwahoriWord:
    """A word in w0..w3 followed by a power of rho, plus its affine value."""

    __slots__ = ("letters", "omega_power", "element")

    def __init__(self, letters, omega_power):
        self.letters = tuple(letters)
        self.omega_power = omega_power
        el = IDENTITY_AFF
        for s in self.letters:
            el = compose(el, AFF[s])
        step = AFF["rho"] if omega_power >= 0 else AFF["rho-"]
        for _ in range(abs(omega_power)):
            el = compose(el, step)
        self.element = el

    @property
    def translation_part(self):
        return self.element[1]

    @property
    def linear_part(self):
        return self.element[0]

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        body = "".join(self.letters) or "e"
        if self.omega_power:
            body += f"*rho^{self.omega_power}"
        return f"IwahoriWord({body})"

    def __eq__(self, other):
        return self.element == other.element

    def __hash__(self):
        return hash(self.element)


def normalize_letters(raw):
    """Push rho letters to the right through w-letters (rho swaps 0<->3, 1<->2).

    raw is a sequence over {'w0'..'w3', 'rho', 'rho-'}; returns (letters, k).
    """
    letters = []
    k = 0
    for s in raw:
        if s == "rho":
            k += 1
        elif s == "rho-":
            k -= 1
        else:
            t = s
            if k % 2:
                t = OMEGA_SWAP[t]
            letters.append(t)
    return letters, k


def aff_length(x, bound=24):
    """Length of x in W_I with respect to S_aff (rho letters are free)."""
    return _aff_search(x, bound)


@lru_cache(maxsize=None)
def _aff_search(target, bound):
    res = _zero_one_bfs(lambda el: el == target, bound, tmax=_tnorm(target) + 8)
    if res is None:
        raise ValueError(f"element not found within length {bound}")
    return res[0]


def _tnorm(x):
    return max(abs(v) for v in x[1]) if any(x[1]) else 0


def _zero_one_bfs(is_target, bound, tmax):
    """0-1 BFS over W_I from the identity; returns (length, raw word) or None.

    Appending a w-letter costs 1, appending rho^{+-1} costs 0.  States with
    translation sup-norm beyond tmax are pruned.
    """
    start = IDENTITY_AFF
    dist = {start: (0, ())}
    dq = deque([start])
    if is_target(start):
        return (0, ())
    while dq:
        cur = dq.popleft()
        d, word = dist[cur]
        for tag, cost in (("rho", 0), ("rho-", 0), ("w0", 1), ("w1", 1), ("w2", 1), ("w3", 1)):
            if d + cost > bound:
                continue
            nxt = compose(cur, AFF[tag])
            if max((abs(v) for v in nxt[1]), default=0) > tmax:
                continue
            if nxt in dist and dist[nxt][0] <= d + cost:
                continue
            dist[nxt] = (d + cost, word + (tag,))
            if is_target(nxt):
                return dist[nxt]
            if cost == 0:
                dq.appendleft(nxt)
            else:
                dq.append(nxt)
    return None


def minimal_word(l, budget=200000):
    """The minimal-length w in W_I with K pi^l K = K w K, as an IwahoriWord.

    l must be dominant.  Found by bounded search over reduced words; the
    element is the unique one of minimal length whose translation part lands
    in -W.l (its value is t(-l^opp) by dominance).
    """
    l = tuple(l)
    if not is_dominant(l):
        raise ValueError(f"{l} is not dominant")
    targets = {tuple(-x for x in m) for m in weyl_orbit(l)}
    tmax = max((abs(v) for v in l), default=0) + 8
    res = _zero_one_bfs(lambda el: el[1] in targets, bound=length_min(l) + 1, tmax=tmax)
    if res is None:
        raise ValueError(f"no word found for {l} within budget")
    letters, k = normalize_letters(res[1])
    word = IwahoriWord(letters, k)
    assert word.translation_part == tuple(-x for x in antidominant_rep(l))
    return word


# ---------------------------------------------------------------------------
# Weyl orbit diagrams (weak left Bruhat order on W lambda)


class OrbitDiagram:
    """Hasse diagram on W.lambda: nodes are orbit elements, edges are labelled
    s1/s2/s3, the source is lambda^opp and the sink is lambda.

    words[v] is a reduced word (tuple of tags, leftmost applied last) for the
    minimal coset representative carrying lambda^opp to v; marked is the
    source plus the vertices all of whose incoming edges are labelled s1.
    """

    def __init__(self, l, labels=("s1", "s2", "s3")):
        l = tuple(l)
        self.l = l
        self.source = antidominant_rep(l) if labels == ("s1", "s2", "s3") else None
        if self.source is None:
            raise ValueError("custom labels need an explicit source")
        dist = {self.source: 0}
        words = {self.source: ()}
        frontier = [self.source]
        edges = []
        while frontier:
            nxt_frontier = []
            for v in frontier:
                for s in labels:
                    w = weyl_act(s, v)
                    if w == v:
                        continue
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        words[w] = (s,) + words[v]
                        nxt_frontier.append(w)
                    if dist[w] == dist[v] + 1:
                        edges.append((v, s, w))
            frontier = nxt_frontier
        self.nodes = set(dist)
        self.dist = dist
        self.words = words
        self.edges = edges
        incoming = {}
        for v, s, w in edges:
            incoming.setdefault(w, set()).add(s)
        self.sink = max(dist, key=lambda v: dist[v])
        self.marked = [self.source] + sorted(
            v for v, labs in incoming.items() if labs == {"s1"}
        )

    def edge_list_text(self):
        lines = []
        for v, s, w in sorted(self.edges):
            lines.append(f"{','.join(map(str, v))} {s} {','.join(map(str, w))}")
        return "\n".join(lines)


def orbit_diagram(l):
    return OrbitDiagram(tuple(l))


def cell_words(l):
    """Reduced words (IwahoriWord) of the cells decomposing K pi^l K.

    One word tau.w per diagram node, where w = minimal_word(l); returns
    {node: IwahoriWord} plus the diagram.
    """
    diagram = orbit_diagram(l)
    base = minimal_word(l)
    out = {}
    for v in diagram.nodes:
        prefix = tuple("w" + s[1] for s in diagram.words[v])
        out[v] = IwahoriWord(prefix + base.letters, base.omega_power)
    return out, diagram


# ---------------------------------------------------------------------------
# GSp4: lattice Lambda2 = Z f0 + Z f2 + Z f3, written (a0, a2, a3)


def pr2_cochar(l):
    a0, _, a2, a3 = l
    return (a0, a2, a3)


def act2(tag, l):
    a0, a2, a3 = l
    if tag == "r0":
        return (a0, a0 - a2, a3)
    if tag == "r1":
        return (a0, a3, a2)
    if tag == "r2":
        return (a0, a2, a0 - a3)
    raise KeyError(tag)


POS_ROOT_PAIRINGS_2 = [
    lambda l: l[1] - l[2],          # beta1
    lambda l: 2 * l[2] - l[0],      # beta2
    lambda l: l[1] + l[2] - l[0],   # beta1 + beta2
    lambda l: 2 * l[1] - l[0],      # beta0 = 2 beta1 + beta2
]


def is_dominant2(l):
    return l[1] >= l[2] and 2 * l[2] - l[0] >= 0


def length_min2(l):
    total = 0
    for pairing in POS_ROOT_PAIRINGS_2:
        v = pairing(l)
        total += -v if v <= 0 else v - 1
    return total


def weyl_orbit2(l, tags=("r1", "r2")):
    seen = {tuple(l)}
    queue = [tuple(l)]
    while queue:
        cur = queue.pop()
        for g in tags:
            nxt = act2(g, cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _linear2(tag):
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    cols = [act2(tag, b) for b in basis]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def _apply3(mat, v):
    return tuple(sum(mat[i][j] * v[j] for j in range(3)) for i in range(3))


IDENTITY_AFF2 = (tuple(tuple(int(i == j) for j in range(3)) for i in range(3)), (0, 0, 0))


def compose2(x, y):
    mx, tx = x
    my, ty = y
    m = tuple(
        tuple(sum(mx[i][k] * my[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )
    return (m, tuple(a + b for a, b in zip(_apply3(mx, ty), tx)))


def translation2(t):
    return (IDENTITY_AFF2[0], tuple(t))


# affine letters for GSp4: classes of the matrices v0, v1, v2 and rho2
AFF2 = {
    "v0": compose2(translation2((0, 1, 0)), (_linear2("r0"), (0, 0, 0))),  # t(f2) r0
    "v1": (_linear2("r1"), (0, 0, 0)),
    "v2": (_linear2("r2"), (0, 0, 0)),
}

# omega for GSp4: computed from the rho2 matrix by groups.monomial_class2 and
# verified there; hardcoding the affine map keeps this module self-contained.
# rho2 = antidiag(1, 1, pi, pi) represents t(-f0) r2 r1 r2.
AFF2["rho2"] = compose2(
    translation2((-1, 0, 0)),
    compose2(AFF2["v2"], compose2(AFF2["v1"], AFF2["v2"])),
)


def aff2_of_word(letters, rho2_power=0):
    el = IDENTITY_AFF2
    for s in letters:
        el = compose2(el, AFF2[s])
    for _ in range(rho2_power):
        el = compose2(el, AFF2["rho2"])
    return el
