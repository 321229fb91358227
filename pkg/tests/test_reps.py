import random

import pytest

from chartab.classfun import is_irreducible, trivial_character
from chartab.cyclo import Cyclo, from_rational
from chartab.permgroup import GroupMismatchError, ParseError, parse_group_spec
from chartab.reps import (
    InconsistentRepError,
    MatrixRep,
    builtin_rep,
    character_of,
    check_matrix_orthogonality,
    mat_mul,
    mat_trace,
    permutation_character,
    standard_character,
)
from chartab.tablegen import build_character_table, linear_characters

from conftest import class_index_of


@pytest.fixture(scope="module")
def q8_rep():
    return builtin_rep("q8-2dim").extend_to_group()


class TestExtension:
    def test_q8_extends_to_all_elements(self, q8_rep):
        assert len(q8_rep.full_images) == 8

    def test_d4_rotation_rep(self):
        rep = builtin_rep("dihedral-rot:4:1").extend_to_group()
        assert len(rep.full_images) == 8

    def test_inconsistent_images_rejected(self):
        g = parse_group_spec("C2")
        rep = MatrixRep(g, [((from_rational(2),),)])
        with pytest.raises(InconsistentRepError):
            rep.extend_to_group()

    def test_singular_image_rejected(self):
        g = parse_group_spec("C2")
        with pytest.raises(InconsistentRepError):
            MatrixRep(g, [((Cyclo.zero(),),)])

    def test_homomorphism_on_random_pairs(self, q8_rep):
        rng = random.Random(3)
        g = q8_rep.group
        for _ in range(200):
            s = rng.choice(g.elements)
            t = rng.choice(g.elements)
            product_image = mat_mul(q8_rep.image(s), q8_rep.image(t))
            direct = q8_rep.image(s * t)
            assert all(
                a == b
                for ra, rb in zip(product_image, direct)
                for a, b in zip(ra, rb)
            )

    def test_identity_maps_to_identity(self, q8_rep):
        from chartab.permgroup import Perm

        image = q8_rep.image(Perm.identity(8))
        assert image[0][0] == 1 and image[1][1] == 1
        assert image[0][1].is_zero() and image[1][0].is_zero()


class TestCharacterOf:
    def test_q8_character(self, q8_rep):
        chi = character_of(q8_rep)
        # canonical classes: identity, the central involution, then i/j/k
        assert [v.exact_str() for v in chi.values] == ["2", "-2", "0", "0", "0"]
        assert is_irreducible(chi)

    def test_trivial_rep(self):
        g = parse_group_spec("S3")
        rep = MatrixRep(g, [((Cyclo.one(),),)] * len(g.generators))
        chi = character_of(rep)
        assert chi == trivial_character(g)

    def test_d4_rotation_character(self):
        rep = builtin_rep("dihedral-rot:4:1")
        chi = character_of(rep)
        assert [v.exact_str() for v in chi.values] == ["2", "-2", "0", "0", "0"]

    def test_trace_constant_on_classes(self, q8_rep):
        data = q8_rep.group.conjugacy_classes()
        for cl in data.classes:
            traces = {mat_trace(q8_rep.image(m)).exact_str() for m in cl.members}
            assert len(traces) == 1

    def test_d5_rotation_irreducible(self):
        for r in (1, 2):
            chi = character_of(builtin_rep(f"dihedral-rot:5:{r}"))
            assert is_irreducible(chi)


class TestPermutationCharacters:
    def test_s4_standard(self):
        g = parse_group_spec("S4")
        chi = standard_character(g)
        expected = {
            "()": 3, "(0,1)": 1, "(0,1)(2,3)": -1, "(0,1,2)": 0, "(0,1,2,3)": -1,
        }
        for rep_text, val in expected.items():
            assert chi.values[class_index_of(g, rep_text)] == val

    def test_s5_standard(self):
        g = parse_group_spec("S5")
        chi = standard_character(g)
        expected = {
            "()": 4, "(0,1)": 2, "(0,1,2)": 1, "(0,1)(2,3)": 0,
            "(0,1,2,3)": 0, "(0,1)(2,3,4)": -1, "(0,1,2,3,4)": -1,
        }
        for rep_text, val in expected.items():
            assert chi.values[class_index_of(g, rep_text)] == val

    def test_identity_value(self):
        for name in ["S3", "S4", "S5"]:
            g = parse_group_spec(name)
            assert standard_character(g).values[0] == g.degree - 1

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_standard_irreducible(self, n):
        assert is_irreducible(standard_character(parse_group_spec(f"S{n}")))

    @pytest.mark.parametrize("name", ["S3", "S4", "S5", "A4", "A5"])
    def test_permutation_splits_as_trivial_plus_standard(self, name):
        g = parse_group_spec(name)
        assert permutation_character(g) == trivial_character(g) + standard_character(g)


def linear_rep_of(group, chi):
    """1x1 matrix representation carrying a linear character."""
    data = group.conjugacy_classes()
    images = [
        ((chi.values[data.member_index[gen]],),) for gen in group.generators
    ]
    return MatrixRep(group, images)


class TestMatrixOrthogonality:
    def test_q8_self_pairings(self, q8_rep):
        report = check_matrix_orthogonality(q8_rep, q8_rep)
        assert report.ok
        assert report.checked == 16
        assert report.dim == 2

    def test_q8_cross_with_linear(self, q8_rep):
        g = q8_rep.group
        for chi in linear_characters(g):
            if all(v == 1 for v in chi.values):
                continue  # trivial character; not the cross case
            lin_rep = linear_rep_of(g, chi).extend_to_group()
            report = check_matrix_orthogonality(q8_rep, lin_rep)
            assert report.ok
            assert report.checked == 4

    def test_trivial_rep_on_c3(self):
        g = parse_group_spec("C3")
        rep = MatrixRep(g, [((Cyclo.one(),),)]).extend_to_group()
        report = check_matrix_orthogonality(rep, rep)
        assert report.ok
        assert report.checked == 1

    def test_violations_reported_for_reducible(self):
        # the 2-dim permutation rep of C2 is reducible, so the theorem's
        # conclusion must fail somewhere and be reported
        g = parse_group_spec("C2")
        swap = (
            (Cyclo.zero(), Cyclo.one()),
            (Cyclo.one(), Cyclo.zero()),
        )
        rep = MatrixRep(g, [swap]).extend_to_group()
        report = check_matrix_orthogonality(rep, rep)
        assert not report.ok
        assert report.violations

    def test_group_mismatch(self, q8_rep):
        g = parse_group_spec("C3")
        other = MatrixRep(g, [((Cyclo.one(),),)]).extend_to_group()
        with pytest.raises(GroupMismatchError):
            check_matrix_orthogonality(q8_rep, other)


class TestBuiltinReps:
    def test_unknown_name(self):
        with pytest.raises(ParseError):
            builtin_rep("nonsense")

    def test_dihedral_needs_three(self):
        with pytest.raises(ParseError):
            builtin_rep("dihedral-rot:2:1")

    def test_dihedral_relations(self):
        rep = builtin_rep("dihedral-rot:6:1")
        rot, flip = rep.images
        power = rot
        for _ in range(5):
            power = mat_mul(power, rot)
        identity = ((Cyclo.one(), Cyclo.zero()), (Cyclo.zero(), Cyclo.one()))
        assert all(
            a == b for ra, rb in zip(power, identity) for a, b in zip(ra, rb)
        )
        assert all(
            a == b
            for ra, rb in zip(mat_mul(flip, flip), identity)
            for a, b in zip(ra, rb)
        )

    def test_d6_rotation_character_against_table(self):
        g = parse_group_spec("D6")
        table = build_character_table(g)
        chi = character_of(builtin_rep("dihedral-rot:6:1"))
        assert any(chi == row for row in table.rows)
