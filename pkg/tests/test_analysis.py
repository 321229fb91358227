from fractions import Fraction

import pytest

from chartab.analysis import (
    burnside_class_test,
    burnside_solvability,
    check_all,
    regular_decomposition,
    restrict,
    restriction_report,
)
from chartab.classfun import ClassFunction, inner_product, regular_character, trivial_character
from chartab.cyclo import Cyclo
from chartab.permgroup import GroupMismatchError, parse_group_spec
from chartab.tablegen import CharacterTable, build_character_table

from conftest import BUILTINS_LE_24, class_index_of, ratio


def s5_char(table, group, degree, rep_text, value):
    col = class_index_of(group, rep_text)
    hits = [
        r for r in table.rows if r.values[0] == degree and r.values[col] == value
    ]
    assert len(hits) == 1
    return hits[0]


class TestRestrict:
    def test_trivial_restrictions_coincide(self, s5_group, s5_table, a5_subgroup):
        chi1 = s5_char(s5_table, s5_group, 1, "(0,1)", ratio(1))
        chi2 = s5_char(s5_table, s5_group, 1, "(0,1)", ratio(-1))
        r1 = restrict(chi1, a5_subgroup)
        r2 = restrict(chi2, a5_subgroup)
        assert r1 == r2
        assert r1 == trivial_character(a5_subgroup.as_group())

    def test_degree4_restricts_to_psi2(self, s5_group, s5_table, a5_subgroup):
        chi3 = s5_char(s5_table, s5_group, 4, "(0,1)", ratio(2))
        restricted = restrict(chi3, a5_subgroup)
        h_group = a5_subgroup.as_group()
        expected = {
            "()": 4, "(0,1,2)": 1, "(0,1)(2,3)": 0,
        }
        for rep_text, val in expected.items():
            assert restricted.values[class_index_of(h_group, rep_text)] == val
        # both 5-cycle classes carry -1
        data = h_group.conjugacy_classes()
        five_cycle_classes = [
            j for j, cl in enumerate(data.classes) if cl.element_order == 5
        ]
        assert len(five_cycle_classes) == 2
        for j in five_cycle_classes:
            assert restricted.values[j] == -1

    def test_restrict_to_whole_group(self, s5_group, s5_table):
        whole = s5_group.subgroup(list(s5_group.generators))
        for row in s5_table.rows:
            assert tuple(restrict(row, whole).values) == tuple(row.values)

    def test_group_mismatch(self, a5_subgroup):
        foreign = trivial_character(parse_group_spec("S4"))
        with pytest.raises(GroupMismatchError):
            restrict(foreign, a5_subgroup)


class TestRestrictionReport:
    def test_degree6_splits(self, s5_group, s5_table, a5_subgroup, a5_table):
        chi5 = s5_char(s5_table, s5_group, 6, "(0,1)", ratio(0))
        report = restriction_report(chi5, a5_subgroup, a5_table)
        assert report.case == "splits"
        assert report.norm == 2
        assert sorted(report.multiplicities, reverse=True)[:2] == [1, 1]
        assert len(report.constituents) == 2
        # the two constituents are the degree-3 rows
        for idx in report.constituents:
            assert a5_table.degrees[idx] == 3
        assert report.vanishes_off_subgroup
        # odd classes of S5 carry value 0: (12), (1234), (12)(345)
        for rep_text in ["(0,1)", "(0,1,2,3)", "(0,1)(2,3,4)"]:
            assert chi5.values[class_index_of(s5_group, rep_text)].is_zero()

    def test_degree5_restricts_irreducibly(self, s5_group, s5_table, a5_subgroup, a5_table):
        chi6 = s5_char(s5_table, s5_group, 5, "(0,1)", ratio(1))
        report = restriction_report(chi6, a5_subgroup, a5_table)
        assert report.case == "irreducible"
        assert report.norm == 1
        assert not report.vanishes_off_subgroup
        assert chi6.values[class_index_of(s5_group, "(0,1)")] == 1

    def test_trivial_character_report(self, s5_group, s5_table, a5_subgroup, a5_table):
        report = restriction_report(s5_table.rows[0], a5_subgroup, a5_table)
        assert report.case == "irreducible"
        assert report.norm == 1
        assert report.multiplicities[0] == 1

    def test_every_s5_irreducible_has_norm_one_or_two(
        self, s5_table, a5_subgroup, a5_table
    ):
        for row in s5_table.rows:
            report = restriction_report(row, a5_subgroup, a5_table)
            assert report.norm in (1, 2)
            if report.norm == 2:
                assert len(report.constituents) == 2
                assert all(report.multiplicities[i] == 1 for i in report.constituents)
                assert report.vanishes_off_subgroup
            else:
                assert not report.vanishes_off_subgroup

    def test_regular_restriction_pairing(self, s5_group, a5_subgroup, a5_table):
        # <chi_reg|_H, psi>_H = |G| psi(1) / |H|
        reg = regular_character(s5_group)
        restricted = restrict(reg, a5_subgroup)
        for psi in a5_table.rows:
            got = inner_product(restricted, psi)
            expected = Fraction(s5_group.order, a5_subgroup.order) * psi.values[0]
            assert got == expected

    def test_regular_restriction_pairing_s4(self):
        g = parse_group_spec("S4")
        a4 = parse_group_spec("A4")
        sub = g.subgroup(list(a4.generators))
        sub_table = build_character_table(sub.as_group())
        restricted = restrict(regular_character(g), sub)
        for psi in sub_table.rows:
            assert inner_product(restricted, psi) == 2 * psi.values[0]


class TestRegularDecomposition:
    @pytest.mark.parametrize("name", ["S5", "Q8", "C1", "A5", "D6"])
    def test_matches_degrees(self, name):
        g = parse_group_spec(name)
        table = build_character_table(g)
        assert regular_decomposition(table) == list(table.degrees)


class TestBurnsideClassTest:
    def test_s5_inconclusive_but_witness_found(self):
        g = parse_group_spec("S5")
        report = burnside_class_test(g)
        assert report.verdict == "inconclusive"
        assert not any(e.is_prime_power for e in report.entries)
        sizes = {e.size: e.factorization for e in report.entries}
        assert sizes[15] == {3: 1, 5: 1}
        assert sizes[10] == {2: 1, 5: 1}
        # the witness search still finds A5
        assert report.witness is not None
        assert report.witness.order == 60
        assert not report.simple

    def test_q8_center_witness(self):
        g = parse_group_spec("Q8")
        report = burnside_class_test(g)
        assert report.verdict == "not simple"
        assert not report.simple
        assert report.witness.order == 2
        assert report.witness.element_set == g.center().element_set

    def test_a5_inconclusive_and_simple(self):
        report = burnside_class_test(parse_group_spec("A5"))
        assert report.verdict == "inconclusive"
        assert report.simple
        assert report.witness is None
        factored = {e.size: e.factorization for e in report.entries}
        assert factored[20] == {2: 2, 5: 1}
        assert factored[15] == {3: 1, 5: 1}
        assert factored[12] == {2: 2, 3: 1}

    @pytest.mark.parametrize("name", BUILTINS_LE_24 + ["A5", "S5"])
    def test_verdict_agrees_with_is_simple(self, name):
        g = parse_group_spec(name)
        report = burnside_class_test(g)
        if report.verdict == "not simple":
            assert not g.is_simple()


class TestBurnsideSolvability:
    def test_s4(self):
        report = burnside_solvability(parse_group_spec("S4"))
        assert report.theorem_applies
        assert report.solvable
        assert report.series_orders == [12, 4, 1]

    def test_a5(self):
        report = burnside_solvability(parse_group_spec("A5"))
        assert not report.theorem_applies
        assert not report.solvable

    def test_c6(self):
        report = burnside_solvability(parse_group_spec("C6"))
        assert report.theorem_applies
        assert report.solvable


class TestCheckAll:
    @pytest.mark.parametrize("name", ["S3", "Q8", "A4", "S4", "D5", "A5"])
    def test_builtin_tables_pass(self, name):
        table = build_character_table(parse_group_spec(name))
        report = check_all(table)
        failing = [r.name for r in report.results if not r.passed]
        assert report.ok, f"failing checks: {failing}"

    def test_s3_column_of_transpositions(self):
        g = parse_group_spec("S3")
        table = build_character_table(g)
        col = class_index_of(g, "(0,1)")
        acc = Cyclo.zero()
        for row in table.rows:
            acc = acc + row.values[col] * row.values[col].conj()
        assert acc == 2 == Fraction(6, 3)

    def test_perturbed_table_fails(self):
        g = parse_group_spec("S3")
        table = build_character_table(g)
        rows = [ClassFunction(g, row.values) for row in table.rows]
        bad_values = list(rows[2].values)
        bad_values[1] = bad_values[1] + 1
        rows[2] = ClassFunction(g, bad_values)
        bad_table = CharacterTable(g, rows)
        report = check_all(bad_table)
        assert not report.ok
        names = {r.name for r in report.results if not r.passed}
        assert "row-orthonormality" in names

    def test_report_rendering(self):
        table = build_character_table(parse_group_spec("S3"))
        report = check_all(table)
        for line in report.lines():
            assert line.startswith(("PASS ", "FAIL "))
            assert ": " in line
        payload = report.to_json()
        assert payload["ok"] is True
        assert len(payload["checks"]) == len(report.results)
