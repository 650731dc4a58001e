"""Schubert-cell enumeration of Iwahori/parahoric double cosets.

A reduced word s_1 ... s_l rho^k yields the cell map
    (k_1, ..., k_l) -> g_{s_1}(k_1) ... g_{s_l}(k_l) rho^k
where g_s(k) = x_s(k) w_s runs over representatives of I w_s I / I; the image
gives q^l distinct right K-cosets when the word has minimal length in w W.
Double cosets K pi^lam K decompose into one cell per vertex of the Weyl orbit
diagram of lam; the endohoric analogue composes GSp4 Iwahori cells with the
q^2 unipotent representatives gamma(u, v).
"""

from fractions import Fraction

from . import cosets as ct
from . import groups as G
from . import matrices as mx
from . import weyl
from .errors import BudgetExceeded
from .kernel import mat_mul


def letter_generator(field, tag, kappa):
    """g_{w_i}(kappa) = x_i(kappa) w_i (GSp6) or y_i(kappa) v_i (GSp4)."""
    if tag.startswith("w"):
        i = int(tag[1])
        return G.named_element(field, "x", i, kappa) * G.named_element(field, tag)
    if tag.startswith("v"):
        i = int(tag[1])
        return G.named_element(field, "y", i, kappa) * G.named_element(field, tag)
    raise KeyError(tag)


class CellMap:
    """Evaluator for one Schubert cell."""

    def __init__(self, field, letters, omega_power, rank):
        self.field = field
        self.letters = tuple(letters)
        self.omega_power = omega_power
        self.rank = rank
        self.arity = len(self.letters)
        omega_tag = "rho" if rank == "gsp6" else "rho2"
        tail = G.identity_g(field, 3 if rank == "gsp6" else 2)
        step = G.named_element(field, omega_tag)
        if omega_power < 0:
            step = step.inverse()
        for _ in range(abs(omega_power)):
            tail = tail * step
        self.tail = tail
        self._per_letter = [
            [letter_generator(field, tag, kappa) for kappa in field.residue_reps(1)]
            for tag in self.letters
        ]

    def evaluate(self, kappas):
        g = G.identity_g(self.field, 3 if self.rank == "gsp6" else 2)
        for tag, kappa in zip(self.letters, kappas):
            g = g * letter_generator(self.field, tag, kappa)
        return g * self.tail

    def enumerate_flats(self):
        """Yield (flat integer matrix, scale) for every parameter vector, via
        a prefix-sharing DFS in the scaled-integer representation."""
        field = self.field
        n2 = 6 if self.rank == "gsp6" else 4
        per_letter = [
            [mx.to_scaled(field, g.rows) for g in options] for options in self._per_letter
        ]
        tail_flat, tail_scale = mx.to_scaled(field, self.tail.rows)
        q = field.q
        stack = [(0, mx.to_scaled(field, mx.identity(n2)))]
        out = []

        def rec(depth, flat, scale):
            if depth == self.arity:
                out.append((mat_mul(n2, flat, tail_flat), scale + tail_scale))
                return
            for gflat, gscale in per_letter[depth]:
                rec(depth + 1, mat_mul(n2, flat, gflat), scale + gscale)

        flat0, scale0 = mx.to_scaled(field, mx.identity(n2))
        rec(0, flat0, scale0)
        return out

    def key_set(self, space):
        """Canonical K-coset keys of the cell image; asserts the q^l law."""
        keys = set()
        for flat, scale in self.enumerate_flats():
            keys.add(space.key_of_flat(flat, scale))
        if len(keys) != self.field.q**self.arity:
            raise AssertionError(
                f"cell {self.letters} rho^{self.omega_power}: "
                f"{len(keys)} cosets, expected q^{self.arity}"
            )
        return keys


def cell(field, word, rank="gsp6"):
    """CellMap for a reduced word; non-reduced words are rejected."""
    if rank == "gsp6":
        length = weyl.aff_length(word.element)
        if length != len(word.letters):
            raise ValueError("word is not reduced")
        return CellMap(field, word.letters, word.omega_power, rank)
    letters, k = word
    el = weyl.aff2_of_word(letters, k)
    if aff2_length(el) != len(letters):
        raise ValueError("word is not reduced")
    return CellMap(field, letters, k, rank)


def aff2_length(el, bound=16):
    """Length in the GSp4 Iwahori-Weyl group (rho2 letters free)."""
    from collections import deque

    start = weyl.IDENTITY_AFF2
    if el == start:
        return 0
    tmax = max((abs(v) for v in el[1]), default=0) + 8
    dist = {start: 0}
    dq = deque([start])
    while dq:
        cur = dq.popleft()
        d = dist[cur]
        for tag, cost in (("rho2", 0), ("v0", 1), ("v1", 1), ("v2", 1)):
            if d + cost > bound:
                continue
            nxt = weyl.compose2(cur, weyl.AFF2[tag])
            if max((abs(v) for v in nxt[1]), default=0) > tmax:
                continue
            if nxt in dist and dist[nxt] <= d + cost:
                continue
            dist[nxt] = d + cost
            if nxt == el:
                return d + cost
            if cost == 0:
                dq.appendleft(nxt)
            else:
                dq.append(nxt)
        # also allow inverse rho2 steps
        nxt = weyl.compose2(cur, _rho2_inv())
        if max((abs(v) for v in nxt[1]), default=0) <= tmax and (
            nxt not in dist or dist[nxt] > d
        ):
            dist[nxt] = d
            if nxt == el:
                return d
            dq.appendleft(nxt)
    raise ValueError("element not found within bound")


def _rho2_inv():
    m, t = weyl.AFF2["rho2"]
    mi = [[Fraction(m[i][j]) for j in range(3)] for i in range(3)]
    inv = mx.mat_inv(mi)
    mi = tuple(tuple(int(inv[i][j]) for j in range(3)) for i in range(3))
    ti = tuple(-sum(mi[i][j] * t[j] for j in range(3)) for i in range(3))
    return (mi, ti)


def expected_size(field, lam):
    words, diagram = weyl.cell_words(lam)
    q = field.q
    return sum(q ** len(words[v].letters) for v in diagram.nodes)


def decompose_double_coset(field, lam, budget=2**20, marked_only=False):
    """Complete duplicate-free table of K pi^lam K / K from Schubert cells.

    With marked_only=True only the marked-vertex cells are enumerated (the
    per-cell mode used when the full table would blow the budget); the table
    is then *not* the full double coset and carries meta["partial"] = True.
    """
    words, diagram = weyl.cell_words(lam)
    q = field.q
    total = expected_size(field, lam)
    nodes = diagram.marked if marked_only else sorted(diagram.nodes)
    if not marked_only and total > budget:
        raise BudgetExceeded(
            f"|K pi^{lam} K / K| = {total} exceeds budget {budget}", partial=total
        )
    anchor = G.pi_cochar(field, lam)
    space = ct.GspCosetSpace(field, anchor)
    keys = []
    index = {}
    cells = {}
    for v in nodes:
        word = words[v]
        cm = CellMap(field, word.letters, word.omega_power, "gsp6")
        start = len(keys)
        for k in sorted(cm.key_set(space)):
            if k in index:
                raise AssertionError(f"cells overlap at vertex {v}")
            index[k] = len(keys)
            keys.append(k)
        cells[v] = (start, len(keys))
    table = ct.CosetTable(space, keys, meta={
        "lam": lam,
        "cells": cells,
        "diagram": diagram,
        "words": words,
        "partial": marked_only,
        "expected": total,
    })
    if not marked_only:
        if len(table) != total:
            raise AssertionError(
                f"decomposition size {len(table)} != sum of cell sizes {total}"
            )
        if space.key(anchor) not in table.index:
            raise AssertionError("anchor coset missing from its double coset")
    return table


def unmarked_vertices_absorb(diagram):
    """Check the marked-vertex rule: every unmarked vertex has an incoming
    edge labelled s2 or s3 (whose cell prefix lies in the acting subgroup), so
    orbits of marked cells cover everything."""
    incoming = {}
    for v, s, w in diagram.edges:
        incoming.setdefault(w, set()).add(s)
    for v in diagram.nodes:
        if v in diagram.marked:
            continue
        labs = incoming.get(v, set())
        if not (labs & {"s2", "s3"}):
            return False
    return True


# ---------------------------------------------------------------------------
# endohoric decomposition for GSp4


def minimal_word2_iwahori(lam2, bound=14):
    """Minimal-length w in the GSp4 Iwahori-Weyl group with
    U2' pi^lam2 I2' = U2' w I2', as (letters, rho2_power)."""
    targets = set()
    for gamma in _w2p_elements():
        targets.add(weyl.compose2(gamma, weyl.translation2(tuple(-x for x in lam2))))
    from collections import deque

    start = weyl.IDENTITY_AFF2
    dist = {start: (0, ())}
    dq = deque([start])
    best = None
    if start in targets:
        best = (0, ())
    tmax = max((abs(v) for v in lam2), default=0) + 6
    while dq and best is None:
        cur = dq.popleft()
        d, word = dist[cur]
        for tag, cost in (("rho2", 0), ("rho2-", 0), ("v0", 1), ("v1", 1), ("v2", 1)):
            if d + cost > bound:
                continue
            step = _rho2_inv() if tag == "rho2-" else weyl.AFF2[tag]
            nxt = weyl.compose2(cur, step)
            if max((abs(v) for v in nxt[1]), default=0) > tmax:
                continue
            if nxt in dist and dist[nxt][0] <= d + cost:
                continue
            dist[nxt] = (d + cost, word + (tag,))
            if nxt in targets:
                best = dist[nxt]
                break
            if cost == 0:
                dq.appendleft(nxt)
            else:
                dq.append(nxt)
    if best is None:
        raise ValueError(f"no word for {lam2}")
    letters = []
    k = 0
    swap = {"v0": "v2", "v2": "v0", "v1": "v1"}
    for tag in best[1]:
        if tag == "rho2":
            k += 1
        elif tag == "rho2-":
            k -= 1
        else:
            t = tag
            if k % 2:
                t = swap[t]
            letters.append(t)
    return tuple(letters), k


def _w2p_elements():
    """The eight elements of the finite Weyl group of GSp4 as affine maps."""
    seen = {weyl.IDENTITY_AFF2}
    frontier = [weyl.IDENTITY_AFF2]
    while frontier:
        cur = frontier.pop()
        for tag in ("v1", "v2"):
            nxt = weyl.compose2(cur, weyl.AFF2[tag])
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    assert len(seen) == 8
    return seen


def _w2p_reduced_words():
    """Reduced words (over v1, v2) for the eight finite Weyl elements."""
    words = {weyl.IDENTITY_AFF2: ()}
    frontier = [weyl.IDENTITY_AFF2]
    while frontier:
        nxt_frontier = []
        for cur in frontier:
            for tag in ("v1", "v2"):
                nxt = weyl.compose2(weyl.AFF2[tag], cur)
                if nxt not in words:
                    words[nxt] = (tag,) + words[cur]
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    return words


def endohoric_guard(lam2):
    b1 = lam2[1] - lam2[2]
    b2 = 2 * lam2[2] - lam2[0]
    return b1 in (0, 1) and b2 in (0, 1)


def endohoric_cosets(field, lam2, limit=None):
    """U2' pi^lam2 E / E, enumerated two independent ways.

    Primary: BFS orbit of the anchor coset under U2'(O) generators (exact).
    Cross-check: the recipe -- Iwahori cells of U2' w I2' composed with the
    q^2 elements gamma(u, v) -- must reproduce exactly the same coset set.
    Requires the guard beta1, beta2 in {0, 1}.
    """
    if not endohoric_guard(lam2):
        raise ValueError(f"guard violated for {lam2}: beta1, beta2 must be 0 or 1")
    anchor = G.pi_cochar(field, lam2)
    space = ct.BlockCosetSpace(field, lambda g: (g,), field.valuation(anchor.sim))
    bucket = lambda g: space.key(g)
    orb = ct.ExactOrbit(bucket, ct.member_equal("E"))
    gens = G.generators_mod(field, "U2p", 4)
    orb.close([anchor], gens, limit=limit)

    # recipe enumeration
    letters, k = minimal_word2_iwahori(lam2)
    w_el = weyl.aff2_of_word(letters, k)
    lw = len(letters)
    recipe = ct.ExactOrbit(bucket, ct.member_equal("E"))
    gammas = [
        G.named_element(field, "gamma", u, v)
        for u in field.residue_reps(1)
        for v in field.residue_reps(1)
    ]
    for tau, tword in _w2p_reduced_words().items():
        el = weyl.compose2(tau, w_el)
        if aff2_length(el) != len(tword) + lw:
            continue
        cm = CellMap(field, tword + letters, k, "gsp4")
        for kap in _tuples(field.q, cm.arity):
            g = cm.evaluate(kap)
            for gam in gammas:
                recipe.add(g * gam)
    if len(recipe.reps) != len(orb.reps) or any(
        recipe.find(r) is None for r in orb.reps
    ):
        raise AssertionError(
            f"endohoric recipe mismatch at {lam2}: "
            f"{len(recipe.reps)} vs {len(orb.reps)}"
        )
    return orb


def _tuples(q, k):
    if k == 0:
        yield ()
        return
    for rest in _tuples(q, k - 1):
        for v in range(q):
            yield rest + (v,)


def cell_word_independence(field, word_a, word_b, rank="gsp6"):
    """True iff the two reduced words have identical cell images mod I."""
    if rank != "gsp6":
        raise NotImplementedError
    if word_a.element != word_b.element:
        return False
    cm_a = CellMap(field, word_a.letters, word_a.omega_power, rank)
    cm_b = CellMap(field, word_b.letters, word_b.omega_power, rank)
    probe = cm_a.evaluate((0,) * cm_a.arity)
    space = ct.GspCosetSpace(field, probe)

    def image(cm):
        orb = ct.ExactOrbit(lambda g: space.key(g), ct.member_equal("I"))
        for kap in _tuples(field.q, cm.arity):
            orb.add(cm.evaluate(kap))
        return orb

    im_a = image(cm_a)
    im_b = image(cm_b)
    if len(im_a.reps) != len(im_b.reps):
        return False
    return all(im_b.find(r) is not None for r in im_a.reps)
