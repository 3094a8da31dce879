"""Named 11-crossing fixtures: the Conway knot and the Kinoshita-Terasaka knot.

The two are mutants: one is obtained from the other by cutting out a
2-string tangle and gluing it back after a half-turn. The Kauffman
bracket cannot see that operation, so they share one Jones polynomial
while being distinct knots. Both have trivial Alexander polynomial,
which no knot of fewer than 11 crossings achieves nontrivially; these
diagrams realize the minimum.

The PD codes come from tools/make_named_fixtures.py: a five-crossing
two-string tangle (a 3-twist beside a 2-twist), a 2-twist, and four
single crossings substituted into the six-vertex basic polyhedron, with
the partner diagram produced by rotating the five-crossing tangle 180
degrees. The script certifies the pair directly: 11 crossings each,
single component, irreducible under simplify, trivial Alexander
polynomial by the independent Wirtinger oracle, equal nontrivial Jones
polynomials, distinct canonical keys, and no Reidemeister path between
them within a bounded bidirectional search. tests/test_fixtures.py
re-runs the cheap parts of that certificate against these frozen
strings.

Which diagram carries which name follows the construction's orientation
of the classical picture; no polynomial computed in this package can
tell mutants apart.
"""

from .diagram import Diagram, diagram_from_pd_text

__all__ = ["CONWAY_PD", "KINOSHITA_TERASAKA_PD", "SHARED_JONES_COEFFS",
           "conway", "kinoshita_terasaka"]

CONWAY_PD = ("X[1,2,6,7] X[7,8,2,3] X[3,4,8,9] X[13,14,5,4] X[5,6,13,12] "
             "X[20,21,10,9] X[10,11,15,16] X[18,19,11,12] X[14,15,19,20] "
             "X[16,17,22,21] X[22,1,18,17]")

KINOSHITA_TERASAKA_PD = ("X[1,2,6,7] X[7,8,2,3] X[3,4,8,9] X[13,14,5,4] "
                         "X[5,6,13,12] X[18,19,9,10] X[10,11,21,22] "
                         "X[16,17,12,11] X[14,15,20,19] X[20,21,16,15] "
                         "X[22,1,17,18]")

# The shared Jones polynomial, frozen from the state sum and cross-checked
# by the reference oracle: -t^-4 + 2t^-3 - 2t^-2 + 2t^-1 + t^2 - 2t^3
# + 2t^4 - 2t^5 + t^6.
SHARED_JONES_COEFFS = {-4: -1, -3: 2, -2: -2, -1: 2,
                       2: 1, 3: -2, 4: 2, 5: -2, 6: 1}


def conway() -> Diagram:
    """An 11-crossing diagram of the Conway knot."""
    return diagram_from_pd_text(CONWAY_PD)


def kinoshita_terasaka() -> Diagram:
    """An 11-crossing diagram of the Kinoshita-Terasaka knot."""
    return diagram_from_pd_text(KINOSHITA_TERASAKA_PD)
