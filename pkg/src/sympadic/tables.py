"""Claimed double-coset representative tables (the data under verification).

Each entry lists representatives as (cocharacter, anchor) pairs: the anchor is
None for a plain torus representative, a catalogue tag, or ("eta_tilde"/
"theta_tilde", k) where k = "all" denotes one representative per residue k
with k != -1 (and "all+" additionally excludes 0).  The verification suites
check that the listed cosets are pairwise distinct, lie in the stated double
coset, and exhaust its orbit set.
"""

# U' \ K w K / K for the six Hecke words, keyed by the dominant cocharacter
GSP6_DECOMPOSE = {
    (1, 1, 1, 1): [((1, 1, 1, 1), None), ((0, 0, 0, 0), "tau1")],
    (2, 2, 1, 1): [((2, 2, 1, 1), None), ((2, 1, 2, 1), None), ((1, 1, 0, 0), "tau1")],
    (2, 2, 2, 1): [
        ((2, 2, 2, 1), None), ((2, 1, 2, 2), None), ((1, 1, 1, 0), "tau1"),
        ((1, 1, 0, 1), "tau1"), ((2, 1, 1, 1), "tau2"),
    ],
    (3, 3, 2, 2): [
        ((3, 3, 2, 2), None), ((3, 2, 3, 2), None), ((2, 2, 1, 1), "tau1"),
        ((2, 1, 2, 1), "tau1"), ((2, 2, 0, 1), "tau1"), ((2, 1, 1, 2), "tau1"),
        ((3, 2, 1, 2), "tau2"),
    ],
    (4, 3, 3, 3): [((4, 3, 3, 3), None), ((3, 2, 2, 2), "tau1"), ((4, 2, 2, 3), "tau2")],
    (4, 4, 2, 2): [
        ((4, 4, 2, 2), None), ((4, 2, 4, 2), None), ((3, 3, 1, 1), "tau1"),
        ((3, 2, 0, 1), "tau1"), ((4, 3, 1, 2), "tau2"),
    ],
}

# U \ U' pi^mu U' / U'  (tau0 level)
R0_TABLES = {
    (1, 1, 1, 1): [((1, 1, 1, 1), None), ((0, 0, 0, 0), "varrho1")],
    (2, 2, 2, 1): [((2, 2, 2, 1), None), ((2, 2, 1, 2), None), ((1, 1, 1, 0), "varrho1")],
    (2, 1, 2, 2): [((2, 1, 2, 2), None), ((1, 0, 1, 1), "varrho1"), ((0, 0, 0, 0), "varrho2")],
    (3, 2, 3, 2): [
        ((3, 2, 3, 2), None), ((3, 2, 2, 3), None), ((2, 1, 2, 1), "varrho1"),
        ((2, 1, 1, 2), "varrho1"), ((2, 1, 2, 0), "varrho1"), ((1, 1, 0, 1), "varrho2"),
    ],
    (4, 2, 4, 2): [
        ((4, 2, 4, 2), None), ((4, 2, 2, 4), None), ((3, 1, 3, 1), "varrho1"),
        ((3, 1, 1, 3), "varrho1"), ((2, 1, 2, 0), "varrho2"),
    ],
    (2, 2, 1, 1): [((2, 2, 1, 1), None)],
    (2, 1, 2, 1): [((2, 1, 2, 1), None), ((2, 1, 1, 2), None), ((1, 0, 1, 0), "varrho1")],
    (3, 3, 2, 2): [((3, 3, 2, 2), None), ((2, 2, 1, 1), "varrho1")],
    (4, 3, 3, 3): [((4, 3, 3, 3), None), ((3, 2, 2, 2), "varrho1"), ((2, 2, 1, 1), "varrho2")],
    (4, 4, 2, 2): [((4, 4, 2, 2), None)],
}

# U \ U' pi^mu H'_tau1 / H'_tau1
R1_TABLES = {
    (0, 0, 0, 0): [((0, 0, 0, 0), None), ((0, 0, 0, 0), "sigma1"), ((0, 0, 0, 0), "sigma2")],
    (1, 1, 1, 0): [((1, 1, 1, 0), None), ((1, 1, 0, 1), "sigma1"), ((1, 1, 1, 0), "sigma2")],
    (1, 1, 0, 1): [
        ((1, 1, 0, 1), None), ((1, 1, 1, 0), "sigma1"), ((1, 0, 0, 0), "sigma2"),
        ((1, 1, 0, 1), "sigma2"), ((1, 0, 1, 1), "sigma2"), ((0, -1, 0, 0), "sigma3"),
    ],
    (1, 1, 0, 0): [((1, 1, 0, 0), None), ((1, 1, 0, 0), "sigma1"), ((1, 0, 1, 0), "sigma2")],
    (2, 2, 1, 1): [
        ((2, 2, 1, 1), None), ((2, 2, 1, 1), "sigma1"), ((2, 2, 1, 1), "sigma2"),
        ((2, 0, 1, 1), "sigma2"),
    ],
    (2, 1, 2, 1): [
        ((2, 1, 2, 1), None), ((2, 1, 1, 2), "sigma1"), ((2, 1, 2, 1), "sigma2"),
        ((2, 1, 2, 0), "sigma2"), ((2, 1, 1, 0), "sigma2"), ((1, 0, 1, 0), "sigma3"),
    ],
    (2, 2, 0, 1): [
        ((2, 2, 0, 1), None), ((2, 2, 1, 0), "sigma1"), ((2, 0, 2, 1), "sigma2"),
        ((2, 0, 2, 0), "sigma2"), ((2, 0, 1, 0), "sigma2"), ((1, -1, 1, 0), "sigma3"),
    ],
    (2, 1, 1, 2): [
        ((2, 1, 1, 2), None), ((2, 1, 2, 1), "sigma1"), ((2, 1, 0, 1), "sigma2"),
        ((2, 1, 1, 2), "sigma2"), ((1, 0, 0, 1), "sigma3"),
    ],
    (2, 1, 1, 1): [((2, 1, 1, 1), None), ((2, 1, 1, 1), "sigma1"), ((2, 1, 1, 1), "sigma2")],
    (3, 2, 2, 2): [
        ((3, 2, 2, 2), None), ((3, 2, 2, 2), "sigma1"), ((3, 2, 1, 1), "sigma2"),
        ((3, 2, 2, 2), "sigma2"), ((3, 1, 1, 2), "sigma2"), ((3, 2, 1, 2), "psi-sigma2"),
        ((2, 1, 1, 1), "sigma3"),
    ],
    (3, 3, 1, 1): [((3, 3, 1, 1), None), ((3, 3, 1, 1), "sigma1"), ((3, 0, 2, 1), "sigma2")],
    (3, 2, 0, 1): [
        ((3, 2, 0, 1), None), ((3, 2, 1, 0), "sigma1"), ((3, 1, 3, 1), "sigma2"),
        ((3, 1, 2, 0), "sigma2"), ((2, 0, 2, 0), "sigma3"),
    ],
}

# U \ U' pi^mu H'_tau2 / H'_tau2
R2_TABLES = {
    (0, 0, 0, 0): [
        ((0, 0, 0, 0), None), ((0, 0, 0, 0), "theta1"), ((0, 0, 0, 0), "theta2"),
        ((0, 0, 0, 0), ("theta_tilde", "all")),
    ],
    (3, 2, 1, 2): [
        ((3, 2, 1, 2), None), ((3, 2, 2, 1), "theta1"), ((3, 2, 1, 2), "theta2"),
        ((3, 1, 2, 1), "theta2"), ((3, 1, 2, 2), "theta2"), ((3, 1, 2, 2), "theta3"),
        ((3, 1, 2, 2), ("theta_tilde", 0)), ((3, 1, 1, 2), ("theta_tilde", 0)),
        ((3, 2, 1, 1), ("theta_tilde", "all")),
    ],
    (4, 3, 1, 2): [
        ((4, 3, 1, 2), None), ((4, 3, 2, 1), "theta1"), ((4, 1, 3, 2), "theta2"),
        ((4, 1, 2, 3), ("theta_tilde", 0)), ((4, 1, 3, 2), "theta3"),
    ],
    (4, 2, 2, 3): [
        ((4, 2, 2, 3), None), ((4, 2, 3, 2), "theta1"), ((4, 2, 2, 3), "theta2"),
        ((4, 2, 1, 2), ("theta_tilde", 0)), ((4, 2, 2, 3), "theta3"),
    ],
}

# U2 \ U2' pi^mu U2_circ / U2_circ  (non-special maximal parahoric level)
U2CIRC_TABLES = {
    (2, 1, 1): [((2, 1, 1), None), ((2, 1, 1), "v1"), ((1, 1, 0), "eta1")],
    (2, 2, 2): [
        ((2, 2, 2), None), ((2, 2, 2), "v1"), ((1, 0, 0), "eta1"), ((1, 0, 1), "eta1"),
        ((1, 1, 1), "eta1"), ((0, 0, 0), "eta2"),
    ],
    (3, 2, 3): [
        ((3, 2, 3), None), ((3, 3, 2), "v1"), ((2, 0, 1), "eta1"), ((2, 1, 2), "eta1"),
        ((1, 0, 1), "eta2"),
    ],
    (1, 1, 1): [((1, 1, 1), "v1"), ((1, 1, 1), None), ((0, 0, 0), "eta1")],
    (3, 3, 2): [
        ((3, 2, 3), "v1"), ((3, 3, 2), None), ((2, 2, 1), "eta1"), ((2, 2, 0), "eta1"),
        ((2, 1, 0), "eta1"), ((1, 1, 0), "eta2"),
    ],
    (4, 4, 2): [
        ((4, 2, 4), "v1"), ((4, 4, 2), None), ((3, 3, 1), "eta1"), ((3, 2, 0), "eta1"),
        ((2, 2, 0), "eta2"),
    ],
}

# the (2,2,1) table is claimed to coincide with the (2,1,1) one
U2CIRC_EQUAL_PAIRS = [((2, 2, 1), (2, 1, 1))]

# U2 \ U2' pi^mu U2_dag / U2_dag  (the conjugate parahoric pr2'(H'_tau1))
U2DAG_TABLES = {
    (1, 0, 0): [((1, 0, 0), None), ((1, 0, 0), "v1"), ((1, 1, 0), "eta0")],
    (1, 1, 1): [
        ((1, 1, 1), None), ((1, 1, 1), "v1"), ((1, 0, 0), "eta0"), ((1, 0, 1), "eta0"),
        ((1, 1, 1), "eta0"), ((0, 0, 0), "eta1"),
    ],
    (2, 1, 2): [
        ((2, 1, 2), None), ((2, 2, 1), "v1"), ((2, 0, 1), "eta0"), ((2, 1, 2), "eta0"),
        ((1, 0, 1), "eta1"),
    ],
    (0, 0, 0): [((0, 0, 0), None), ((0, 0, 0), "v1"), ((0, 0, 0), "eta0")],
    (2, 2, 1): [
        ((2, 1, 2), "v1"), ((2, 2, 1), None), ((2, 2, 1), "eta0"), ((2, 2, 0), "eta0"),
        ((2, 1, 0), "eta0"), ((1, 1, 0), "eta1"),
    ],
    (3, 3, 1): [
        ((3, 1, 3), "v1"), ((3, 3, 1), None), ((3, 3, 1), "eta0"), ((3, 2, 0), "eta0"),
        ((2, 2, 0), "eta1"),
    ],
}

# U2 \ U2' pi^mu E / E  (endohoric level)
E_TABLES = {
    (0, 0, 0): [
        ((0, 0, 0), None), ((0, 0, 0), "v1"), ((0, 0, 0), "eta0"),
        ((0, 0, 0), ("eta_tilde", "all")),
    ],
    (1, 1, 1): [
        ((1, 1, 1), None), ((1, 1, 1), "v1"), ((1, 0, 1), "eta0"), ((1, 1, 0), "eta0"),
        ((1, 1, 1), "eta0"), ((0, 0, 0), "eta1"),
        ((1, 1, 1), ("eta_tilde", 0)), ((1, 0, 1), ("eta_tilde", 0)),
        ((1, 0, 0), ("eta_tilde", "all")),
    ],
    (2, 2, 1): [
        ((2, 2, 1), None), ((2, 1, 2), "v1"), ((2, 2, 1), "eta0"),
        ((2, 1, 2), ("eta_tilde", 0)), ((1, 1, 0), "eta1"),
    ],
    (2, 1, 2): [
        ((2, 2, 1), "v1"), ((2, 1, 2), None), ((2, 0, 1), ("eta_tilde", 0)),
        ((2, 1, 2), "eta0"), ((1, 0, 1), "eta1"),
    ],
}


def expand_reps(field, reps):
    """Expand family markers into concrete (cochar, anchor-params) entries."""
    out = []
    for coch, anchor in reps:
        if isinstance(anchor, tuple) and anchor[1] == "all":
            for k in field.residue_reps(1):
                if (k + 1) % field.p == 0:
                    continue
                out.append((coch, (anchor[0], k)))
        else:
            out.append((coch, anchor))
    return out
