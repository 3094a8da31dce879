"""Diagram building: traversal, faces, writhe, mirror, canonical identity."""

import pytest

from knottyjones import (
    ValidationError,
    build_diagram,
    diagram_from_pd_text,
    diagram_from_rot,
    mirror,
    parse_pd,
    unknot,
)

TREFOIL = "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"
FIG8 = "X[4,5,1,2] X[8,1,5,6] X[6,7,4,3] X[2,3,8,7]"
KINK_POS = "X[1,2,2,1]"
KINK_NEG = "X[1,2,1,2]"


class TestTrefoil:
    def test_build(self):
        d = diagram_from_pd_text(TREFOIL)
        assert d.n == 3
        assert d.arc_count == 6

    def test_faces(self):
        d = diagram_from_pd_text(TREFOIL)
        assert len(d.faces) == 5
        assert sorted(f.size for f in d.faces) == [2, 2, 2, 3, 3]

    def test_writhe_and_signs(self):
        d = diagram_from_pd_text(TREFOIL)
        assert d.signs == (1, 1, 1)
        assert d.writhe == 3

    def test_strand_covers_every_crossing_twice(self):
        d = diagram_from_pd_text(TREFOIL)
        assert len(d.strand) == 6
        from collections import Counter
        assert Counter(c for c, _ in d.strand) == {0: 2, 1: 2, 2: 2}


class TestUnknot:
    def test_trivial_face(self):
        d = unknot()
        assert d.n == 0
        assert d.writhe == 0
        assert len(d.faces) == 1
        assert d.faces[0].size == 0
        assert d.pd_text() == ""
        assert d.canonical_key() == ""


class TestKinks:
    def test_positive(self):
        d = diagram_from_pd_text(KINK_POS)
        assert d.writhe == 1
        assert sorted(f.size for f in d.faces) == [1, 1, 2]

    def test_negative(self):
        d = diagram_from_pd_text(KINK_NEG)
        assert d.writhe == -1
        assert sorted(f.size for f in d.faces) == [1, 1, 2]


class TestFigureEight:
    def test_build(self):
        d = diagram_from_pd_text(FIG8)
        assert d.n == 4
        assert d.writhe == 0
        assert sorted(f.size for f in d.faces) == [2, 2, 3, 3, 3, 3]


class TestValidationFailures:
    def test_multi_component(self):
        with pytest.raises(ValidationError, match="multi-component"):
            diagram_from_pd_text("X[1,2,3,4] X[2,1,3,4]")

    def test_non_planar(self):
        # Trefoil with one half-edge pairing swapped: passes arc counts
        # and traversal but the Euler count drops to 3.
        with pytest.raises(ValidationError, match="non-planar"):
            diagram_from_pd_text("X[1,4,3,2] X[3,6,4,5] X[5,2,6,1]")

    def test_inconsistent_orientation(self):
        with pytest.raises(ValidationError):
            diagram_from_pd_text("X[4,1,2,3] X[3,6,4,5] X[5,2,6,1]")

    def test_parse_pd_validates(self):
        with pytest.raises(ValidationError):
            parse_pd("X[1,2,3,4] X[2,1,3,4]")
        assert parse_pd(TREFOIL).n == 3


class TestMirror:
    def test_writhe_negates(self):
        d = diagram_from_pd_text(TREFOIL)
        assert mirror(d).writhe == -3

    @pytest.mark.parametrize("text", [TREFOIL, FIG8, KINK_POS, KINK_NEG])
    def test_involution(self, text):
        d = diagram_from_pd_text(text)
        assert mirror(mirror(d)).canonical_key() == d.canonical_key()

    def test_trefoil_chiral(self):
        d = diagram_from_pd_text(TREFOIL)
        assert mirror(d).canonical_key() != d.canonical_key()

    def test_unknot_fixed(self):
        assert mirror(unknot()).n == 0


class TestCanonicalKey:
    def test_relabel_invariance(self):
        d1 = diagram_from_pd_text(TREFOIL)
        # Same knot, crossings listed in a different order.
        d2 = diagram_from_pd_text("X[3,6,4,5] X[5,2,6,1] X[1,4,2,3]")
        assert d1.canonical_key() == d2.canonical_key()

    def test_distinguishes(self):
        assert (
            diagram_from_pd_text(TREFOIL).canonical_key()
            != diagram_from_pd_text(FIG8).canonical_key()
        )
        assert (
            diagram_from_pd_text(KINK_POS).canonical_key()
            != diagram_from_pd_text(KINK_NEG).canonical_key()
        )


class TestRotRebuild:
    @pytest.mark.parametrize("text", [TREFOIL, FIG8, KINK_POS, KINK_NEG])
    def test_round_trip_preserves_identity(self, text):
        d = diagram_from_pd_text(text)
        rots, flags = d.rot_tables()
        d2 = diagram_from_rot(rots, flags)
        assert d2.canonical_key() == d.canonical_key()
        assert d2.writhe == d.writhe
        assert sorted(f.size for f in d2.faces) == sorted(f.size for f in d.faces)

    def test_empty(self):
        assert diagram_from_rot([], []).is_unknot


class TestArcEnds:
    @pytest.mark.parametrize("text", [TREFOIL, FIG8, KINK_POS])
    def test_every_arc_has_head_and_tail(self, text):
        d = diagram_from_pd_text(text)
        head, tail = d.arc_ends()
        assert set(head) == set(range(1, 2 * d.n + 1))
        assert set(tail) == set(range(1, 2 * d.n + 1))
        for a in head:
            assert head[a] != tail[a] or d.n == 1
            assert d.arc_at(head[a]) == a
            assert d.arc_at(tail[a]) == a


class TestFaceStructure:
    @pytest.mark.parametrize("text", [TREFOIL, FIG8])
    def test_darts_partition(self, text):
        d = diagram_from_pd_text(text)
        all_darts = [dart for f in d.faces for dart in f.darts]
        assert sorted(all_darts) == list(range(4 * d.n))

    def test_face_arc_annotations(self):
        d = diagram_from_pd_text(TREFOIL)
        for f in d.faces:
            assert len(f.arcs) == f.size
            assert len(f.crossings) == f.size
