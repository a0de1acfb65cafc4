import io
import json
import math
import random

import pytest

from charcore.characters import (
    CharacterTable,
    build_table,
    centralizer_order,
    chi,
    chi_column,
    degree,
    verify_orthogonality,
    write_table_csv,
    write_table_json,
)
from charcore.errors import SizeCapError
from charcore.partitions import conjugate, partitions_of
from oracles import mn_reference


def class_sign(mu):
    return -1 if (sum(mu) - len(mu)) % 2 else 1


class TestChi:
    def test_trivial_row(self):
        for n in range(1, 9):
            for mu in partitions_of(n):
                assert chi((n,), mu) == 1

    def test_sign_row(self):
        for n in range(2, 9):
            assert chi((1,) * n, (2,) + (1,) * (n - 2)) == -1

    def test_empty_hook_sum_vanishes(self):
        assert chi((2, 2), (4,)) == 0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            chi((2, 1), (2, 2))

    def test_base_case(self):
        assert chi((), ()) == 1

    def test_against_diagram_recursion(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randint(1, 12)
            parts = partitions_of(n)
            lam = parts[rng.randrange(len(parts))]
            mu = parts[rng.randrange(len(parts))]
            assert chi(lam, mu) == mn_reference(lam, mu)

    def test_conjugation_symmetry(self, tables):
        for n in range(1, 13):
            table = tables.get(n)
            idx = {lam: i for i, lam in enumerate(table.partitions)}
            for i, lam in enumerate(table.partitions):
                ci = idx[conjugate(lam)]
                for j, mu in enumerate(table.partitions):
                    assert table.rows[ci][j] == class_sign(mu) * table.rows[i][j]


class TestDegree:
    def test_examples(self):
        assert degree((5,)) == 1
        assert degree((2, 1)) == 2
        assert degree((6, 5, 3, 1, 1, 1)) == 2475200

    def test_matches_identity_column(self):
        for n in range(1, 17):
            column = chi_column((1,) * n)
            for lam, value in zip(partitions_of(n), column):
                assert value == degree(lam)


class TestCentralizer:
    def test_example(self):
        assert centralizer_order((2, 1, 1)) == 4

    def test_class_equation(self):
        for n in range(1, 9):
            assert sum(
                math.factorial(n) // centralizer_order(mu)
                for mu in partitions_of(n)
            ) == math.factorial(n)


class TestTable:
    def test_n1(self, tables):
        assert tables.get(1).rows == ((1,),)

    def test_n3_fixture(self, tables):
        # classes in increasing order (1^3), (2,1), (3) for comparison
        table = tables.get(3)
        assert table.partitions == ((3,), (2, 1), (1, 1, 1))
        in_class_order = [tuple(reversed(row)) for row in table.rows]
        assert in_class_order == [(1, 1, 1), (2, 0, -1), (1, -1, 1)]

    def test_degree_squares(self, tables):
        table = tables.get(5)
        identity = table.partitions.index((1, 1, 1, 1, 1))
        assert sum(row[identity] ** 2 for row in table.rows) == 120

    def test_cap(self):
        with pytest.raises(SizeCapError):
            build_table(27)

    def test_threads_bit_identical(self, tables):
        assert build_table(10, threads=2) == tables.get(10)


class TestOrthogonality:
    def test_centralizer_diagonal(self, tables):
        table = tables.get(4)
        j = table.partitions.index((2, 1, 1))
        dot = sum(row[j] * row[j] for row in table.rows)
        assert dot == 4

    def test_distinct_columns_orthogonal(self, tables):
        table = tables.get(4)
        for j in range(len(table.partitions)):
            for l in range(j + 1, len(table.partitions)):
                assert sum(row[j] * row[l] for row in table.rows) == 0

    def test_full_verification(self, tables):
        for n in range(1, 11):
            ok, witness = verify_orthogonality(tables.get(n))
            assert ok, witness

    def test_witness_on_corruption(self, tables):
        table = tables.get(4)
        rows = [list(r) for r in table.rows]
        rows[0][0] += 1
        bad = CharacterTable(4, table.partitions, tuple(tuple(r) for r in rows))
        ok, witness = verify_orthogonality(bad)
        assert not ok and witness is not None


class TestExports:
    def test_csv_golden(self, tables):
        out = io.StringIO()
        write_table_csv(tables.get(3), out)
        assert out.getvalue() == (
            "partition,[3],[2,1],[1,1,1]\n"
            "[3],1,1,1\n"
            "[2,1],-1,0,2\n"
            "[1,1,1],1,-1,1\n"
        )

    def test_json_round_trip(self, tables):
        out = io.StringIO()
        write_table_json(tables.get(4), out)
        data = json.loads(out.getvalue())
        assert data["n"] == 4
        assert data["classes"][0] == "[4]"
        assert data["rows"][0]["values"] == [1, 1, 1, 1, 1]

    def test_json_big_values_become_strings(self):
        huge = 2**80
        table = CharacterTable(1, ((1,),), ((huge,),))
        out = io.StringIO()
        write_table_json(table, out)
        assert json.loads(out.getvalue())["rows"][0]["values"] == [str(huge)]
