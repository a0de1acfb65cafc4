"""Prime-power divisibility machinery for character values.

The pieces fit together as follows: combining equal parts of a cycle type
preserves character values modulo a prime power; iterating the rewrite
reduces any cycle type to one with bounded multiplicities; and for suitable
core partitions, counting hook-removal sequences with signs certifies the
divisibility directly, without evaluating the character.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import factorial
from typing import Iterable, Sequence

from .abacus import (
    aligned_windows,
    canonicalize,
    from_partition,
    hook_length_mask,
    is_tcore,
    skew_per_residue,
    to_partition,
)
from .characters import chi, chi_column
from .errors import SizeCapError, UnreachableError
from .partitions import (
    Partition,
    check_partition,
    format_partition,
    from_multiplicities,
    multiplicities,
    partitions_of,
)
from .tableaux import count_skew_syt, is_border_strip, iter_box_skews

MAX_SEQUENCES = 10**7
CONGRUENCE_CAP = 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CombineConfig:
    """A prime power q = p**r driving the combining rewrite."""

    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")

    @property
    def q(self) -> int:
        return self.p**self.r


def combine_step(mu, m: int, cfg: CombineConfig) -> Partition:
    """Replace q parts of size m by q/p parts of size p*m; the size is unchanged."""
    mu = check_partition(mu)
    counts = multiplicities(mu)
    if counts.get(m, 0) < cfg.q:
        raise ValueError(
            f"need at least {cfg.q} parts of size {m}, got {counts.get(m, 0)}"
        )
    counts[m] -= cfg.q
    counts[cfg.p * m] = counts.get(cfg.p * m, 0) + cfg.p ** (cfg.r - 1)
    return from_multiplicities(counts)


def carry_levels(levels: Sequence[int], p: int, r: int) -> list[int]:
    """Run the rewrite along one p-free class: multiplicities by level, lowest first.

    Whenever a level holds at least p**r parts, p**r of them are traded for
    p**(r-1) at the next level up; the result is the fixpoint.
    """
    q = p**r
    keep = p ** (r - 1)
    arr = list(levels)
    j = 0
    while j < len(arr):
        t = arr[j] // q
        if t:
            arr[j] -= q * t
            if j + 1 == len(arr):
                arr.append(0)
            arr[j + 1] += keep * t
        j += 1
    return arr


@dataclass(frozen=True)
class ReductionStep:
    part: int
    before: int
    after: int


@dataclass(frozen=True)
class ReductionTrace:
    input: Partition
    output: Partition
    steps: tuple[ReductionStep, ...]


def reduce_partition(mu, cfg: CombineConfig) -> ReductionTrace:
    """Iterate combine_step to its fixpoint, recording every application.

    Each p-free class is processed independently, lowest level first; the
    fixpoint has every multiplicity below p**r and does not depend on the
    rewrite order.
    """
    mu = check_partition(mu)
    classes: dict[int, dict[int, int]] = {}
    for m, a in multiplicities(mu).items():
        free, level = m, 0
        while free % cfg.p == 0:
            free //= cfg.p
            level += 1
        classes.setdefault(free, {})[level] = a
    final: dict[int, int] = {}
    steps: list[ReductionStep] = []
    for free in sorted(classes):
        by_level = classes[free]
        arr = [by_level.get(j, 0) for j in range(max(by_level) + 1)]
        j = 0
        while j < len(arr):
            c = arr[j]
            while c >= cfg.q:
                steps.append(ReductionStep(free * cfg.p**j, c, c - cfg.q))
                c -= cfg.q
                if j + 1 == len(arr):
                    arr.append(0)
                arr[j + 1] += cfg.p ** (cfg.r - 1)
            arr[j] = c
            j += 1
        for j, a in enumerate(arr):
            if a:
                final[free * cfg.p**j] = a
    out = from_multiplicities(final)
    assert sum(out) == sum(mu)
    return ReductionTrace(mu, out, tuple(steps))


@dataclass
class VerifyReport:
    """Tally of an exhaustive check, with the first failing witness kept."""

    lemma: str
    params: dict
    checked: int = 0
    skipped: int = 0
    violated: int = 0
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.violated == 0

    def check(self, condition: bool, witness: dict) -> None:
        if condition:
            self.checked += 1
        else:
            self.violated += 1
            if self.witness is None:
                self.witness = witness

    def merge(self, other: "VerifyReport") -> None:
        self.checked += other.checked
        self.skipped += other.skipped
        self.violated += other.violated
        if self.witness is None:
            self.witness = other.witness

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "params": self.params,
            "checked": self.checked,
            "skipped": self.skipped,
            "violated": self.violated,
            "witness": self.witness,
        }


def verify_combine_congruence(
    n: int, cfg: CombineConfig, cap: int = CONGRUENCE_CAP
) -> VerifyReport:
    """Exhaust every applicable combine step at size n against every row.

    For each pair (mu, nu) related by one rewrite and every lambda, the two
    character values must agree modulo p**r.
    """
    if n > cap:
        raise SizeCapError(f"congruence sweep capped at n <= {cap}, got {n}")
    report = VerifyReport("combine", {"n": n, "p": cfg.p, "r": cfg.r})
    rows = partitions_of(n)
    columns: dict[Partition, list[int]] = {}

    def column(mu: Partition) -> list[int]:
        if mu not in columns:
            columns[mu] = chi_column(mu, rows)
        return columns[mu]

    for mu in rows:
        applicable = [m for m, a in multiplicities(mu).items() if a >= cfg.q]
        if not applicable:
            report.skipped += 1
            continue
        for m in applicable:
            nu = combine_step(mu, m, cfg)
            col_mu, col_nu = column(mu), column(nu)
            for lam, x, y in zip(rows, col_mu, col_nu):
                report.check(
                    (x - y) % cfg.q == 0,
                    {
                        "lambda": format_partition(lam),
                        "mu": format_partition(mu),
                        "nu": format_partition(nu),
                        "chi_mu": str(x),
                        "chi_nu": str(y),
                        "modulus": cfg.q,
                    },
                )
    return report


@dataclass(frozen=True)
class HookSequence:
    """One ordered way of removing `len(starts)` hooks of a common length.

    Start indices refer to the canonical window of the initial partition and
    stay meaningful across the successive swaps.
    """

    length: int
    starts: tuple[int, ...]
    result: Partition
    sign: int


def enumerate_hook_sequences(
    lam, m: int, count: int, max_sequences: int = MAX_SEQUENCES
) -> dict[Partition, list[HookSequence]]:
    """Depth-first enumeration of all ways to remove `count` hooks of length m.

    Sequences are grouped by the partition they end at; insertion order is the
    deterministic DFS order.  Aborts with a size error if more than
    `max_sequences` sequences would be produced.
    """
    lam = check_partition(lam)
    if m < 1 or count < 1:
        raise ValueError("hook length and count must be positive")
    if count * m > sum(lam):
        raise ValueError(
            f"cannot remove {count} hooks of length {m} from a partition of {sum(lam)}"
        )
    word = list(from_partition(lam).word)
    groups: dict[Partition, list[HookSequence]] = {}
    starts: list[int] = []
    total = 0

    def dfs(depth: int, parity: int) -> None:
        nonlocal total
        if depth == count:
            total += 1
            if total > max_sequences:
                raise SizeCapError(
                    f"more than {max_sequences} hook sequences; raise the cap"
                )
            result = to_partition(canonicalize(word))
            seq = HookSequence(
                m, tuple(starts), result, -1 if parity else 1
            )
            groups.setdefault(result, []).append(seq)
            return
        for i in range(len(word) - m):
            if word[i] == 0 and word[i + m] == 1:
                height = sum(word[i + 1 : i + m])
                word[i], word[i + m] = 1, 0
                starts.append(i)
                dfs(depth + 1, parity ^ (height & 1))
                starts.pop()
                word[i], word[i + m] = 0, 1

    dfs(0, 0)
    return groups


def epsilon(lam, lam2, m: int) -> int:
    """Common sign of every hook sequence of length m from lam down to lam2.

    Computed from one greedy witness; raises UnreachableError when no such
    sequence exists.
    """
    lam = check_partition(lam)
    lam2 = check_partition(lam2)
    diff = sum(lam) - sum(lam2)
    if diff == 0:
        if lam != lam2:
            raise UnreachableError(f"{lam2} is not reachable from {lam}")
        return 1
    if diff < 0 or diff % m:
        raise UnreachableError(
            f"size difference {diff} is not a positive multiple of {m}"
        )
    current, target = aligned_windows(from_partition(lam), from_partition(lam2), m)
    for c in range(m):
        sub_cur, sub_tgt = current[c::m], target[c::m]
        if sum(sub_cur) != sum(sub_tgt):
            raise UnreachableError(f"residue {c} bead counts differ")
        if not _contains(sub_cur, sub_tgt):
            raise UnreachableError(f"residue {c} diagram is not contained")
    parity = 0
    for _ in range(diff // m):
        i = _next_removal(current, target, m)
        parity ^= sum(current[i + 1 : i + m]) & 1
        current[i], current[i + m] = 1, 0
    return -1 if parity else 1


def _partition_of_window(word) -> Partition:
    return to_partition(canonicalize(word))


def _contains(word_big, word_small) -> bool:
    big = _partition_of_window(word_big)
    small = _partition_of_window(word_small)
    return len(small) <= len(big) and all(
        t <= big[i] for i, t in enumerate(small)
    )


def _next_removal(current, target, m: int) -> int:
    """Pick any swap position that keeps the target reachable."""
    for c in range(m):
        sub_cur, sub_tgt = current[c::m], target[c::m]
        if sub_cur == sub_tgt:
            continue
        for l in range(len(sub_cur) - 1):
            if sub_cur[l] == 0 and sub_cur[l + 1] == 1:
                trial = list(sub_cur)
                trial[l], trial[l + 1] = 1, 0
                if _contains(trial, sub_tgt):
                    return c + l * m
    raise UnreachableError("no admissible removal found")


@dataclass(frozen=True)
class FactorizationCheck:
    ok: bool
    direct: int
    predicted: int
    multinomial: int
    skew_counts: tuple[int, ...]
    skew_sizes: tuple[int, ...]


def _multinomial(total: int, parts: Iterable[int]) -> int:
    out = factorial(total)
    for s in parts:
        out //= factorial(s)
    return out


def verify_count_factorization(lam, lam2, m: int) -> FactorizationCheck:
    """Compare the direct sequence count against the residue-wise product.

    The number of ordered removals factors as a multinomial over residues
    times the per-residue standard-filling counts.
    """
    lam = check_partition(lam)
    lam2 = check_partition(lam2)
    diff = sum(lam) - sum(lam2)
    if diff <= 0 or diff % m:
        raise UnreachableError(
            f"size difference {diff} is not a positive multiple of {m}"
        )
    count = diff // m
    skews = skew_per_residue(from_partition(lam), from_partition(lam2), m)
    sizes = tuple(sz for _, sz in skews)
    assert sum(sizes) == count
    skew_counts = tuple(count_skew_syt(shape) for shape, _ in skews)
    predicted = _multinomial(count, sizes)
    for f in skew_counts:
        predicted *= f
    groups = enumerate_hook_sequences(lam, m, count)
    direct = len(groups.get(lam2, []))
    return FactorizationCheck(
        direct == predicted,
        direct,
        predicted,
        _multinomial(count, sizes),
        skew_counts,
        sizes,
    )


def verify_lemma61(n: int, m: int, max_hooks: int = 3) -> VerifyReport:
    """Sign constancy: within every group of sequences, all signs agree.

    Also cross-checks the greedy witness sign against each group.
    """
    report = VerifyReport("lemma61", {"n": n, "m": m, "max_hooks": max_hooks})
    for lam in partitions_of(n):
        for count in range(1, max_hooks + 1):
            if count * m > n:
                break
            for lam2, seqs in enumerate_hook_sequences(lam, m, count).items():
                signs = {s.sign for s in seqs}
                report.check(
                    len(signs) == 1 and epsilon(lam, lam2, m) in signs,
                    {
                        "lambda": format_partition(lam),
                        "lambda2": format_partition(lam2),
                        "m": m,
                        "signs": sorted(signs),
                    },
                )
    return report


def verify_factorization(n: int, m: int, max_hooks: int = 4) -> VerifyReport:
    """Exhaust the counting identity over all reachable pairs at size n."""
    report = VerifyReport("factorization", {"n": n, "m": m, "max_hooks": max_hooks})
    for lam in partitions_of(n):
        a = from_partition(lam)
        for count in range(1, max_hooks + 1):
            if count * m > n:
                break
            for lam2, seqs in enumerate_hook_sequences(lam, m, count).items():
                skews = skew_per_residue(a, from_partition(lam2), m)
                predicted = _multinomial(count, (sz for _, sz in skews))
                for shape, _ in skews:
                    predicted *= count_skew_syt(shape)
                report.check(
                    len(seqs) == predicted,
                    {
                        "lambda": format_partition(lam),
                        "lambda2": format_partition(lam2),
                        "m": m,
                        "direct": len(seqs),
                        "predicted": predicted,
                    },
                )
    return report


def verify_lemma62(n: int, m: int, cfg: CombineConfig) -> VerifyReport:
    """For cores, every group count of p**(r-1) removals is a multiple of p."""
    count = cfg.p ** (cfg.r - 1)
    report = VerifyReport("lemma62", {"n": n, "m": m, "p": cfg.p, "r": cfg.r})
    for lam in partitions_of(n):
        if not is_tcore(lam, count * m):
            report.skipped += 1
            continue
        if count * m > n:
            continue
        for lam2, seqs in enumerate_hook_sequences(lam, m, count).items():
            report.check(
                len(seqs) % cfg.p == 0,
                {
                    "lambda": format_partition(lam),
                    "lambda2": format_partition(lam2),
                    "m": m,
                    "count": len(seqs),
                    "p": cfg.p,
                },
            )
    return report


def verify_prop_pm1(
    lam, m: int, cfg: CombineConfig, taus: Iterable[Partition] | None = None
) -> VerifyReport:
    """Check the p-divisible expansion of one core row.

    Removing p**(r-1) strips of length m must aggregate into coefficients all
    divisible by p, and the signed expansion must reproduce the character
    value on every residual class tau.
    """
    lam = check_partition(lam)
    n = sum(lam)
    count = cfg.p ** (cfg.r - 1)
    strip_total = count * m
    report = VerifyReport(
        "prop-pm1",
        {"lambda": format_partition(lam), "m": m, "p": cfg.p, "r": cfg.r},
    )
    if strip_total > n or not is_tcore(lam, strip_total):
        report.skipped += 1
        return report
    groups = enumerate_hook_sequences(lam, m, count)
    coeffs: dict[Partition, int] = {}
    for lam2, seqs in groups.items():
        signs = {s.sign for s in seqs}
        report.check(
            len(signs) == 1,
            {
                "lambda": format_partition(lam),
                "lambda2": format_partition(lam2),
                "issue": "mixed signs",
            },
        )
        c = next(iter(signs)) * len(seqs)
        coeffs[lam2] = c
        report.check(
            c % cfg.p == 0,
            {
                "lambda": format_partition(lam),
                "lambda2": format_partition(lam2),
                "coefficient": c,
                "p": cfg.p,
            },
        )
    if taus is None:
        taus = partitions_of(n - strip_total)
    for tau in taus:
        tau = check_partition(tau)
        mu = tuple(sorted(tau + (m,) * count, reverse=True))
        lhs = chi(lam, mu)
        rhs = sum(c * chi(lam2, tau) for lam2, c in coeffs.items())
        report.check(
            lhs == rhs,
            {
                "lambda": format_partition(lam),
                "tau": format_partition(tau),
                "chi": str(lhs),
                "expansion": str(rhs),
            },
        )
    return report


def verify_prop_pm1_sweep(n: int, m: int, cfg: CombineConfig) -> VerifyReport:
    """Run the expansion check over every suitable core row of size n."""
    report = VerifyReport("prop-pm1", {"n": n, "m": m, "p": cfg.p, "r": cfg.r})
    for lam in partitions_of(n):
        report.merge(verify_prop_pm1(lam, m, cfg))
    return report


@dataclass(frozen=True)
class TheoremCheck:
    hypothesis_holds: bool
    divides: bool
    sizes: tuple[int, ...] | None
    core_lengths: tuple[int, ...] | None


def _hypothesis(lam, mu, cfg: CombineConfig):
    """Find part sizes m_1..m_r of mu making lam a core for all combined lengths."""
    reps = cfg.p ** (cfg.r - 1)
    candidates = sorted(m for m, a in multiplicities(mu).items() if a >= reps)
    mask = hook_length_mask(lam)
    for sizes in combinations(candidates, cfg.r):
        sums = sorted(
            {
                sum(k * m for k, m in zip(ks, sizes))
                for ks in product(range(reps + 1), repeat=cfg.r)
                if max(ks) == reps
            }
        )
        if all(not (mask >> t) & 1 for t in sums):
            return True, sizes, tuple(sums)
    return False, None, None


def check_divisibility_theorem(lam, mu, cfg: CombineConfig) -> TheoremCheck:
    """Evaluate the core-condition hypothesis and the divisibility it promises.

    The contract is one-directional: whenever the hypothesis holds, p**r must
    divide the character value.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must partition the same integer")
    holds, sizes, sums = _hypothesis(lam, mu, cfg)
    divides = chi(lam, mu) % cfg.q == 0
    return TheoremCheck(holds, divides, sizes, sums)


def verify_theorem3(n: int, cfg: CombineConfig) -> VerifyReport:
    """Exhaust all row/class pairs of size n for hypothesis-vs-divisibility."""
    report = VerifyReport("theorem3", {"n": n, "p": cfg.p, "r": cfg.r})
    rows = partitions_of(n)
    reps = cfg.p ** (cfg.r - 1)
    masks = [hook_length_mask(lam) for lam in rows]
    for mu in rows:
        candidates = sorted(m for m, a in multiplicities(mu).items() if a >= reps)
        if len(candidates) < cfg.r:
            report.skipped += len(rows)
            continue
        sum_sets = [
            sorted(
                {
                    sum(k * m for k, m in zip(ks, sizes))
                    for ks in product(range(reps + 1), repeat=cfg.r)
                    if max(ks) == reps
                }
            )
            for sizes in combinations(candidates, cfg.r)
        ]
        column: list[int] | None = None
        for i, lam in enumerate(rows):
            mask = masks[i]
            holds = any(
                all(not (mask >> t) & 1 for t in sums) for sums in sum_sets
            )
            if not holds:
                report.skipped += 1
                continue
            if column is None:
                column = chi_column(mu, rows)
            report.check(
                column[i] % cfg.q == 0,
                {
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "chi": str(column[i]),
                    "modulus": cfg.q,
                },
            )
    return report


@dataclass(frozen=True)
class PipelineResult:
    divides: bool
    certified: bool
    mu_tilde: Partition
    sizes: tuple[int, ...] | None
    core_lengths: tuple[int, ...] | None

    def certificate(self) -> dict:
        return {
            "mu_tilde": format_partition(self.mu_tilde),
            "sizes": list(self.sizes) if self.sizes else None,
            "core_lengths": list(self.core_lengths) if self.core_lengths else None,
            "certified": self.certified,
        }


def theorem1_pipeline(lam, mu, cfg: CombineConfig) -> PipelineResult:
    """Reduce the class, then certify divisibility from core conditions alone.

    When the hypothesis fails the reduced character value is evaluated
    directly; either way the verdict matches p**r | chi(lam, mu).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must partition the same integer")
    reduced = reduce_partition(mu, cfg).output
    holds, sizes, sums = _hypothesis(lam, reduced, cfg)
    if holds:
        return PipelineResult(True, True, reduced, sizes, sums)
    divides = chi(lam, reduced) % cfg.q == 0
    return PipelineResult(divides, False, reduced, None, None)


def verify_lemma81(box: int, cfg: CombineConfig) -> VerifyReport:
    """p divides the filling count of every non-strip skew of size p**r in a box.

    Sweeps one representative per translation class; counts and strip status
    depend only on the class.
    """
    size = cfg.q
    report = VerifyReport("lemma81", {"box": box, "p": cfg.p, "r": cfg.r})
    for shape in iter_box_skews(box, box, size):
        if is_border_strip(shape):
            report.skipped += 1
            continue
        f = count_skew_syt(shape)
        report.check(
            f % cfg.p == 0,
            {"shape": str(shape), "count": str(f), "p": cfg.p},
        )
    return report
