"""Shared helpers: builtin group inventory and paper-table fixtures.

Expected tables are keyed by class representatives (as cycle strings on
0-based points) so tests stay correct under the library's canonical class
ordering.
"""

from fractions import Fraction

import pytest

from chartab.cyclo import from_rational, root_of_unity
from chartab.permgroup import parse_group_spec

# every builtin group of order <= 120
BUILTIN_NAMES = (
    [f"C{n}" for n in range(1, 10)]
    + [f"S{n}" for n in range(1, 6)]
    + [f"A{n}" for n in range(1, 6)]
    + [f"D{n}" for n in range(1, 10)]
    + ["Q8"]
)

BUILTINS_LE_24 = [
    name for name in BUILTIN_NAMES if parse_group_spec(name).order <= 24
]


def ratio(p, q=1):
    return from_rational(Fraction(p, q))


def zeta(e, k=1):
    return root_of_unity(e, k)


def perm_of(group, cycle_text):
    """Parse a product of cycles as an element of the given group."""
    from chartab.permgroup import _parse_cycles

    return _parse_cycles(cycle_text, group.degree)


def class_index_of(group, cycle_text):
    """Canonical class index of the element written in cycle notation."""
    data = group.conjugacy_classes()
    return data.member_index[perm_of(group, cycle_text)]


def reorder_paper_row(group, paper_columns, paper_values):
    """Map a table row given on paper-ordered class reps into canonical order."""
    data = group.conjugacy_classes()
    values = [None] * len(data)
    for rep_text, value in zip(paper_columns, paper_values):
        values[class_index_of(group, rep_text)] = value
    assert all(v is not None for v in values)
    return tuple(values)


# the worked S5 table: columns are class representatives, rows chi_1..chi_7
S5_COLUMNS = ["()", "(0,1)", "(0,1,2)", "(0,1)(2,3)", "(0,1,2,3)",
              "(0,1)(2,3,4)", "(0,1,2,3,4)"]
S5_ROWS = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, -1, 1],
    [4, 2, 1, 0, 0, -1, -1],
    [4, -2, 1, 0, 0, 1, -1],
    [6, 0, 0, -2, 0, 0, 1],
    [5, 1, -1, 1, -1, 1, 0],
    [5, -1, -1, 1, 1, -1, 0],
]

S4_COLUMNS = ["()", "(0,1)", "(0,1)(2,3)", "(0,1,2)", "(0,1,2,3)"]
S4_ROWS = [
    [1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1],
    [3, 1, -1, 0, -1],
    [3, -1, -1, 0, 1],
    [2, 0, 2, -1, 0],
]

A5_COLUMNS = ["()", "(0,1,2)", "(0,1)(2,3)", "(0,1,2,3,4)", "(0,2,3,4,1)"]

GOLDEN_PHI = zeta(5, 1) + zeta(5, 4) + 1          # (1 + sqrt 5) / 2
GOLDEN_PHI_CONJ = zeta(5, 2) + zeta(5, 3) + 1     # (1 - sqrt 5) / 2

A5_ROWS = [
    [ratio(1)] * 5,
    [ratio(4), ratio(1), ratio(0), ratio(-1), ratio(-1)],
    [ratio(5), ratio(-1), ratio(1), ratio(0), ratio(0)],
    [ratio(3), ratio(0), ratio(-1), GOLDEN_PHI, GOLDEN_PHI_CONJ],
    [ratio(3), ratio(0), ratio(-1), GOLDEN_PHI_CONJ, GOLDEN_PHI],
]

A4_COLUMNS = ["()", "(0,1)(2,3)", "(0,1,2)", "(0,2,1)"]
OMEGA = zeta(3, 1)
A4_ROWS = [
    [ratio(1)] * 4,
    [ratio(1), ratio(1), OMEGA, OMEGA * OMEGA],
    [ratio(1), ratio(1), OMEGA * OMEGA, OMEGA],
    [ratio(3), ratio(-1), ratio(0), ratio(0)],
]


def expected_row_set(group, columns, rows):
    """Paper rows as a list of canonically-ordered value tuples."""
    return [reorder_paper_row(group, columns, row) for row in rows]


def rows_match_as_sets(table, expected_rows) -> bool:
    """Multiset equality of table rows against expected tuples of values."""
    actual = [row.values for row in table.rows]
    remaining = list(expected_rows)
    for row in actual:
        for i, exp in enumerate(remaining):
            if all(a == b for a, b in zip(row, exp)):
                remaining.pop(i)
                break
        else:
            return False
    return not remaining


@pytest.fixture(scope="session")
def s5_group():
    return parse_group_spec("S5")


@pytest.fixture(scope="session")
def s5_table(s5_group):
    from chartab.tablegen import build_character_table

    return build_character_table(s5_group)


@pytest.fixture(scope="session")
def a5_subgroup(s5_group):
    sub = parse_group_spec("A5")
    return s5_group.subgroup(list(sub.generators))


@pytest.fixture(scope="session")
def a5_table(a5_subgroup):
    from chartab.tablegen import build_character_table

    return build_character_table(a5_subgroup.as_group())
