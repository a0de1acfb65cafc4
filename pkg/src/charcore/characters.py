"""Exact irreducible character values by iterated border-strip removal.

The recursion consumes the cycle type largest part first; each step sums over
the hooks of that length with sign (-1)^height.  Values are plain Python
integers, so no precision is ever lost.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import IO, Iterable

from .abacus import from_partition, iter_hook_positions, trim_word
from .errors import SizeCapError
from .partitions import (
    Partition,
    check_partition,
    format_partition,
    multiplicities,
    partitions_of,
)
from .tableaux import count_syt

TABLE_CAP = 26
_INT64_MIN, _INT64_MAX = -(2**63), 2**63 - 1


def chi(lam, mu) -> int:
    """Character value of the row `lam` on the conjugacy class `mu`."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(
            f"lambda and mu must partition the same integer, "
            f"got {sum(lam)} and {sum(mu)}"
        )
    return _chi_word(from_partition(lam).word, mu, 0, {})


def _chi_word(word, mu, idx, memo) -> int:
    if idx == len(mu):
        return 1
    t = mu[idx]
    # the largest hook of a canonical window spans it end to end
    if t > len(word) - 1:
        return 0
    key = (word, idx)
    cached = memo.get(key)
    if cached is not None:
        return cached
    total = 0
    for i, height in iter_hook_positions(word, t):
        w = list(word)
        w[i], w[i + t] = 1, 0
        sub = _chi_word(trim_word(w), mu, idx + 1, memo)
        total += -sub if height & 1 else sub
    memo[key] = total
    return total


def chi_column(mu, rows: Iterable[Partition] | None = None) -> list[int]:
    """Character values of every row on the single class `mu`.

    One memo table is shared across rows, so a full column costs little more
    than its hardest entry.
    """
    mu = check_partition(mu)
    if rows is None:
        rows = partitions_of(sum(mu))
    memo: dict = {}
    return [_chi_word(from_partition(lam).word, mu, 0, memo) for lam in rows]


def degree(lam) -> int:
    """Dimension of the irreducible representation (hook-length formula)."""
    return count_syt(lam)


def centralizer_order(mu) -> int:
    """Order of the centralizer of the class `mu`: prod of m^a_m * a_m!."""
    z = 1
    for m, a in multiplicities(check_partition(mu)).items():
        z *= m**a * factorial(a)
    return z


@dataclass(frozen=True)
class CharacterTable:
    """Full p(n) x p(n) table; rows and columns both in reverse-lex order."""

    n: int
    partitions: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def value(self, lam, mu) -> int:
        i = self.partitions.index(check_partition(lam))
        j = self.partitions.index(check_partition(mu))
        return self.rows[i][j]


def _column_task(mu: Partition) -> list[int]:
    return chi_column(mu)


def build_table(n: int, threads: int = 1, cap: int = TABLE_CAP) -> CharacterTable:
    """Compute the full character table, one class column at a time.

    Columns are independent, so they may be farmed out to worker processes;
    the result is identical for every worker count.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise SizeCapError(f"table size capped at n <= {cap}, got {n}")
    parts = partitions_of(n)
    if threads > 1 and len(parts) >= 8:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(parts) // (threads * 8))
            columns = list(pool.map(_column_task, parts, chunksize=chunk))
    else:
        columns = [chi_column(mu) for mu in parts]
    rows = tuple(
        tuple(columns[j][i] for j in range(len(parts))) for i in range(len(parts))
    )
    return CharacterTable(n, parts, rows)


def verify_orthogonality(table: CharacterTable):
    """Exact column orthogonality against centralizer orders.

    Returns (True, None) or (False, witness) with the first failing pair.
    """
    parts = table.partitions
    k = len(parts)
    zs = [centralizer_order(mu) for mu in parts]
    for j in range(k):
        for l in range(j, k):
            dot = sum(row[j] * row[l] for row in table.rows)
            expected = zs[j] if j == l else 0
            if dot != expected:
                return False, {
                    "mu": format_partition(parts[j]),
                    "nu": format_partition(parts[l]),
                    "got": dot,
                    "expected": expected,
                }
    return True, None


def _json_value(v: int):
    return v if _INT64_MIN <= v <= _INT64_MAX else str(v)


def write_table_csv(table: CharacterTable, out: IO[str]) -> None:
    """CSV export: header row of class cycle types, first column the row label."""
    labels = [format_partition(mu) for mu in table.partitions]
    out.write("partition," + ",".join(labels) + "\n")
    for lam, row in zip(table.partitions, table.rows):
        out.write(format_partition(lam) + "," + ",".join(map(str, row)) + "\n")


def write_table_json(table: CharacterTable, out: IO[str]) -> None:
    """JSON export, streamed row by row; oversized values become decimal strings."""
    labels = [format_partition(mu) for mu in table.partitions]
    out.write('{"n":%d,"classes":%s,"rows":[' % (table.n, json.dumps(labels)))
    for i, (lam, row) in enumerate(zip(table.partitions, table.rows)):
        if i:
            out.write(",")
        out.write(
            '{"partition":%s,"values":%s}'
            % (
                json.dumps(format_partition(lam)),
                json.dumps([_json_value(v) for v in row]),
            )
        )
    out.write("]}")
