"""Integer partitions: enumeration, counting, conjugation, and exact sampling.

A partition is represented throughout as a tuple of weakly decreasing positive
integers; the empty tuple is the unique partition of 0.  The same tuples double
as conjugacy-class cycle types.  All arithmetic is exact (Python integers).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import FormatError, SizeCapError

Partition = tuple[int, ...]

ENUMERATION_CAP = 60
SAMPLING_CAP = 5000


def check_partition(parts) -> Partition:
    """Coerce to a tuple and verify weakly decreasing positive parts."""
    out = tuple(int(x) for x in parts)
    for i, x in enumerate(out):
        if x < 1:
            raise ValueError(f"parts must be positive integers, got {x}")
        if i > 0 and out[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {out}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse the bracket form "[6,5,3,1,1,1]"; "[]" is the empty partition."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise FormatError(f"expected [a1,a2,...], got {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = tuple(int(p) for p in inner.split(","))
    except ValueError as exc:
        raise FormatError(f"non-integer part in {text!r}") from exc
    try:
        return check_partition(parts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_partition(parts) -> str:
    """Canonical text form: comma-separated parts in brackets."""
    return "[" + ",".join(str(x) for x in parts) + "]"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ENUMERATION_CAP:
        raise SizeCapError(f"enumeration capped at n <= {ENUMERATION_CAP}, got {n}")
    return _descending(n, n)


def _descending(n: int, bound: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for k in range(min(bound, n), 0, -1):
        for rest in _descending(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, cached; same order as enumerate_partitions."""
    return tuple(enumerate_partitions(n))


_pcount = [1]


def partition_count(n: int) -> int:
    """Exact p(n) via Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_pcount) <= n:
        m = len(_pcount)
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _pcount[m - g]
            g = k * (3 * k + 1) // 2
            if g <= m:
                total += sign * _pcount[m - g]
            k += 1
        _pcount.append(total)
    return _pcount[n]


def conjugate(parts) -> Partition:
    """Transpose of the Young diagram (an involution)."""
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_lengths(parts) -> list[list[int]]:
    """Hook length of every box, row by row: arm + leg + 1."""
    parts = check_partition(parts)
    conj = conjugate(parts)
    return [
        [(row - j) + (conj[j] - i) - 1 for j in range(row)]
        for i, row in enumerate(parts)
    ]


def max_hook_length(parts) -> int:
    """Largest hook length, i.e. first row plus first column minus one."""
    return parts[0] + len(parts) - 1 if parts else 0


def multiplicities(parts) -> dict[int, int]:
    """Map each part size to its multiplicity, largest size first."""
    out: dict[int, int] = {}
    for x in parts:
        out[x] = out.get(x, 0) + 1
    return out


def from_multiplicities(mult: Mapping[int, int]) -> Partition:
    """Rebuild the sorted partition from a size -> count map."""
    parts: list[int] = []
    for m in sorted(mult, reverse=True):
        a = mult[m]
        if a < 0 or (a > 0 and m < 1):
            raise ValueError(f"invalid multiplicity entry {m}: {a}")
        parts.extend([m] * a)
    return tuple(parts)


# _bounded[k][m] = number of partitions of k into parts of size <= m, for m <= k.
# For m > k the count equals _bounded[k][k].  Grown on demand, shared per process.
_bounded: list[list[int]] = [[1]]


def _bounded_counts(n: int) -> list[list[int]]:
    while len(_bounded) <= n:
        k = len(_bounded)
        row = [0] * (k + 1)
        for m in range(1, k + 1):
            rem = k - m
            row[m] = row[m - 1] + _bounded[rem][min(m, rem)]
        _bounded.append(row)
    return _bounded


def sample_uniform(n: int, rng_seed: int) -> Partition:
    """Draw one partition of n, exactly uniformly over all p(n) of them.

    Walks the bounded-count table, picking each successive largest part with
    its exact conditional probability; integer draws only, so the distribution
    is uniform and the output is a pure function of (n, rng_seed).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > SAMPLING_CAP:
        raise SizeCapError(f"sampling capped at n <= {SAMPLING_CAP}, got {n}")
    table = _bounded_counts(n)
    rng = random.Random(rng_seed)
    parts: list[int] = []
    remaining, bound = n, n
    while remaining:
        b = min(bound, remaining)
        u = rng.randrange(table[remaining][b])
        for m in range(b, 0, -1):
            rem = remaining - m
            c = table[rem][min(m, rem)]
            if u < c:
                parts.append(m)
                remaining, bound = rem, m
                break
            u -= c
    return tuple(parts)
