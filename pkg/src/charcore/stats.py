"""Desk-scale statistics: divisibility densities, core counts, partitions into
prime powers, and numeric bound checks.

Counting is exact throughout; real-valued thresholds and bounds are evaluated
in high-precision arithmetic (interval arithmetic where a verdict must be
rigorous), and asymptotic statements are reported but never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .abacus import hook_length_mask
from .characters import CharacterTable, build_table
from .divisibility import CombineConfig, carry_levels, is_prime, reduce_partition
from .errors import RangeError, SizeCapError
from .partitions import (
    multiplicities,
    partition_count,
    partitions_of,
    sample_uniform,
)

PPOWER_CAP = 10**5
RESTRICTED_CAP = 2000


@dataclass(frozen=True)
class DensityReport:
    """Exact entry counts of one character table against one modulus."""

    n: int
    modulus: int
    total: int
    divisible: int
    zero: int
    nonzero_positive: int
    nonzero_negative: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "modulus": self.modulus,
            "total": self.total,
            "divisible": self.divisible,
            "zero": self.zero,
            "nonzero_positive": self.nonzero_positive,
            "nonzero_negative": self.nonzero_negative,
        }


def density_report(
    n: int, k: int, threads: int = 1, table: CharacterTable | None = None
) -> DensityReport:
    """Scan the full table at size n; zero entries count as divisible."""
    if k < 1:
        raise ValueError("modulus must be positive")
    if table is None:
        table = build_table(n, threads=threads)
    divisible = zero = pos = neg = 0
    for row in table.rows:
        for v in row:
            if v == 0:
                zero += 1
                divisible += 1
            else:
                if v % k == 0:
                    divisible += 1
                if v > 0:
                    pos += 1
                else:
                    neg += 1
    total = len(table.partitions) ** 2
    assert zero + pos + neg == total
    return DensityReport(n, k, total, divisible, zero, pos, neg)


def count_non_tcores(n: int, t: int) -> int:
    """Exact number of partitions of n having some hook of length t."""
    if t < 1:
        raise ValueError("t must be positive")
    count = sum(
        1 for lam in partitions_of(n) if (hook_length_mask(lam) >> t) & 1
    )
    if t <= n:
        # strip-removal bound; cannot fail, kept as a tripwire
        assert count <= (t + 1) * partition_count(n - t)
    return count


def _ppower_table(p: int, kmax: int) -> list[int]:
    dp = [1] + [0] * kmax
    w = 1
    while w <= kmax:
        for x in range(w, kmax + 1):
            dp[x] += dp[x - w]
        w *= p
    return dp


def ppower_count(p: int, k: int, cap: int = PPOWER_CAP) -> int:
    """Number of partitions of k into powers of p (1 for k = 0)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > cap:
        raise SizeCapError(f"capped at k <= {cap}, got {k}")
    return _ppower_table(p, k)[k]


def _reduction_stays_low(counts: list[int], p: int, r: int, s: int) -> bool:
    """True iff the reduced multiplicities are below p**(r-1) at all levels >= s."""
    keep = p ** (r - 1)
    arr = carry_levels(counts, p, r)
    return all(a < keep for a in arr[s:])


def ppower_count_restricted(
    p: int, r: int, s: int, k: int, cap: int = RESTRICTED_CAP
) -> int:
    """Partitions of k into p-powers whose reduction avoids levels >= s.

    Every multiplicity vector of sum k is enumerated and reduced; a partition
    counts when the fixpoint has fewer than p**(r-1) parts of size p**j for
    every j >= s.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if r < 1 or s < 0 or k < 0:
        raise ValueError("r must be positive and s, k nonnegative")
    if k > cap:
        raise SizeCapError(f"capped at k <= {cap}, got {k}")
    if k == 0:
        return 1
    levels = []
    w = 1
    while w <= k:
        levels.append(w)
        w *= p
    counts = [0] * len(levels)
    hits = 0

    def rec(j: int, budget: int) -> None:
        nonlocal hits
        if j == 0:
            counts[0] = budget
            if _reduction_stays_low(counts, p, r, s):
                hits += 1
            counts[0] = 0
            return
        w = levels[j]
        for a in range(budget // w + 1):
            counts[j] = a
            rec(j - 1, budget - a * w)
        counts[j] = 0

    rec(len(levels) - 1, k)
    return hits


def restricted_counts_table(p: int, r: int, s: int, kmax: int) -> list[int]:
    """ptilde(k; s) for every k <= kmax at once, via a carry-tracking pass.

    Walks the levels bottom-up; a state is (weight used, carry entering the
    current level) and choosing the parts of one size is a unary closure, so
    the pass is linear in the state count.  Agrees with the per-k enumeration
    (tested), just without materializing the partitions.
    """
    q = p**r
    keep = p ** (r - 1)
    good = [0] * (kmax + 1)
    # buckets[w] maps carry -> number of ways, for the current level
    buckets: list[dict[int, int]] = [dict() for _ in range(kmax + 1)]
    buckets[0][0] = 1
    pj = 1
    level = 0
    while True:
        if pj > kmax:
            for w, carries in enumerate(buckets):
                for carry, count in carries.items():
                    c, j = carry, level
                    while c:
                        t, f = divmod(c, q)
                        if j >= s and f >= keep:
                            break
                        c, j = keep * t, j + 1
                    else:
                        good[w] += count
            return good
        for w in range(kmax - pj + 1):
            target = buckets[w + pj]
            for c, count in buckets[w].items():
                target[c + 1] = target.get(c + 1, 0) + count
        nxt: list[dict[int, int]] = [dict() for _ in range(kmax + 1)]
        for w, carries in enumerate(buckets):
            for c, count in carries.items():
                t, f = divmod(c, q)
                if level >= s and f >= keep:
                    continue
                nxt[w][keep * t] = nxt[w].get(keep * t, 0) + count
        buckets = nxt
        pj *= p
        level += 1


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality; `satisfied` is None for report-only output."""

    inputs: dict
    lhs: str
    rhs: str
    satisfied: bool | None
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "satisfied": self.satisfied,
            "detail": self.detail,
        }


def ppower_difference_check(p: int, r: int, s: int, k: int) -> BoundCheck:
    """Exact lower bound on ptilde(k) - ptilde(k; s).

    Valid for s >= 2 and k >= p**(r+s-1) * (1 + 4/s); the comparison is done by
    cross-multiplication, so the verdict is exact.
    """
    if s < 2:
        raise RangeError(f"s must be at least 2, got {s}")
    if k * s < p ** (r + s - 1) * (s + 4):
        raise RangeError(
            f"k={k} is below the validity threshold p**(r+s-1)*(1+4/s)"
        )
    diff = ppower_count(p, k) - ppower_count_restricted(p, r, s, k)
    denom = (s - 1) ** (s - 1)
    numer = p ** (s * (s - 1) // 2)
    return BoundCheck(
        {"p": p, "r": r, "s": s, "k": k},
        str(diff),
        f"{numer}/{denom}",
        diff * denom >= numer,
    )


def generating_function_fp(p: int, t, dps: int = 30):
    """Product form of the p-power partition generating function at e**(-1/t).

    Factors with p**j > 50*t are dropped; each is within exp(exp(-50)) of 1,
    far below the returned precision.  Agrees with the truncated series.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    with mpmath.workdps(dps + 15):
        tt = mpmath.mpf(t)
        if tt <= 0:
            raise ValueError("t must be positive")
        result = mpmath.mpf(1)
        power = mpmath.mpf(1)
        while power <= 50 * tt:
            result /= 1 - mpmath.exp(-power / tt)
            power *= p
        value = result
    with mpmath.workdps(dps):
        return +value


def fp_series(p: int, t, dps: int = 30):
    """Series evaluation of the same generating function, as a cross-check."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    with mpmath.workdps(dps + 15):
        tt = mpmath.mpf(t)
        if tt <= 0:
            raise ValueError("t must be positive")
        # truncate where the terms are safely below the target precision;
        # partitions of k into p-powers number fewer than exp(3 sqrt(k))
        kmax = 8
        threshold = mpmath.mpf(10) ** (-(dps + 12))
        while kmax < 8 * tt or mpmath.exp(
            3 * mpmath.sqrt(kmax) - kmax / tt
        ) > threshold:
            kmax *= 2
        counts = [1] + [0] * kmax
        w = 1
        while w <= kmax:
            for x in range(w, kmax + 1):
                counts[x] += counts[x - w]
            w *= p
        z = mpmath.exp(-1 / tt)
        acc = mpmath.mpf(0)
        zk = mpmath.mpf(1)
        for k in range(kmax + 1):
            acc += counts[k] * zk
            zk *= z
        value = acc
    with mpmath.workdps(dps):
        return +value


def _interval_threshold(n: int, cfg: CombineConfig):
    """Interval enclosure of (1 + 1/(6q)) * sqrt(6)/(2 pi) * sqrt(n) * log(n)."""
    one = mpmath.iv.mpf(1)
    return (
        (one + one / (6 * cfg.q))
        * mpmath.iv.sqrt(6)
        / (2 * mpmath.iv.pi)
        * mpmath.iv.sqrt(n)
        * mpmath.iv.log(n)
    )


def exceeds_threshold(value: int, n: int, cfg: CombineConfig) -> bool:
    """Rigorously decide value > (1 + 1/(6q)) * sqrt(6)/(2 pi) * sqrt(n) * log n."""
    saved = mpmath.iv.dps
    try:
        for dps in (40, 80, 160, 320):
            mpmath.iv.dps = dps
            thr = _interval_threshold(n, cfg)
            v = mpmath.iv.mpf(value)
            if v > thr:
                return True
            if v < thr:
                return False
        raise RuntimeError(f"cannot separate {value} from the threshold")
    finally:
        mpmath.iv.dps = saved


def prop4_threshold(n: int, cfg: CombineConfig, dps: int = 50):
    """The part-size threshold as a high-precision value (for reporting)."""
    with mpmath.workdps(dps):
        return +(
            (1 + mpmath.mpf(1) / (6 * cfg.q))
            * mpmath.sqrt(6)
            / (2 * mpmath.pi)
            * mpmath.sqrt(n)
            * mpmath.log(n)
        )


@dataclass(frozen=True)
class SamplingReport:
    n: int
    p: int
    r: int
    samples: int
    seed: int
    holds: int
    fails: int
    threshold: str
    min_clearing_part: int
    failure_fraction: float
    ci95: tuple[float, float]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "r": self.r,
            "samples": self.samples,
            "seed": self.seed,
            "holds": self.holds,
            "fails": self.fails,
            "threshold": self.threshold,
            "min_clearing_part": self.min_clearing_part,
            "failure_fraction": self.failure_fraction,
            "ci95": list(self.ci95),
        }


def prop4_empirical(
    n: int, cfg: CombineConfig, samples: int, rng_seed: int
) -> SamplingReport:
    """Sample uniform partitions, reduce each, and test the large-parts property.

    The property: the reduction has at least r distinct part sizes, each with
    multiplicity at least p**(r-1) and with p**(r-1) * size clearing the
    threshold.  Per-sample seeds are derived by a counter split, so the report
    is a pure function of (n, cfg, samples, rng_seed).
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    reps = cfg.p ** (cfg.r - 1)
    # smallest part size whose scaled value rigorously clears the threshold
    approx = prop4_threshold(n, cfg)
    guess = max(1, int(mpmath.floor(approx / reps)))
    m_min = guess + 2
    for m in (guess - 1, guess, guess + 1, guess + 2):
        if m >= 1 and exceeds_threshold(reps * m, n, cfg):
            m_min = m
            break
    holds = 0
    for i in range(samples):
        mu = sample_uniform(n, rng_seed * 1_000_003 + i)
        reduced = reduce_partition(mu, cfg).output
        big = sum(
            1
            for m, a in multiplicities(reduced).items()
            if a >= reps and m >= m_min
        )
        if big >= cfg.r:
            holds += 1
    fails = samples - holds
    frac = fails / samples
    half = 1.96 * math.sqrt(frac * (1 - frac) / samples)
    return SamplingReport(
        n,
        cfg.p,
        cfg.r,
        samples,
        rng_seed,
        holds,
        fails,
        mpmath.nstr(approx, 20),
        m_min,
        frac,
        (max(0.0, frac - half), min(1.0, frac + half)),
    )


def lemma91_delta(
    n: int,
    cfg: CombineConfig,
    L,
    tail: float = 1e-6,
    dps: int = 30,
) -> BoundCheck:
    """Numeric evaluation of the weighted deficiency sum Delta (report-only).

    The inner sums are truncated at an adaptively chosen k with a rigorous
    geometric tail bound; all summands are nonnegative, so the reported value
    is a certified lower bound on the untruncated Delta.
    """
    with mpmath.workdps(dps + 15):
        x = mpmath.sqrt(6 * n) / mpmath.pi
        s = int(mpmath.floor(mpmath.log(mpmath.sqrt(n)) / (mpmath.e * cfg.q)))
        scale = cfg.p ** (cfg.r + s - 1)
        lower = x / (2 * scale)
        upper = (1 + mpmath.mpf(1) / (5 * cfg.q)) * lower * mpmath.log(n)
        Lval = mpmath.mpf(L)
        if not (lower <= Lval <= upper):
            raise RangeError(
                f"L={L} outside [{mpmath.nstr(lower, 10)}, {mpmath.nstr(upper, 10)}]"
            )
        lo = int(mpmath.ceil(Lval))
        hi = int(mpmath.floor(Lval + x / scale))
        ells = [l for l in range(lo, hi + 1) if l % cfg.p != 0]
        if not ells:
            raise RangeError("empty coprime window; n is too small for these parameters")
        ell_lower_bound = x / (3 * scale)
        ell_ok = mpmath.mpf(len(ells)) >= ell_lower_bound

        # pick the truncation point from the geometric tail bound at the
        # smallest ell, which dominates
        lmin = ells[0]
        ratio = mpmath.exp(-mpmath.mpf(lmin) / (2 * x))
        fp_big = generating_function_fp(cfg.p, 2 * x / lmin, dps=dps)
        kmax = 32
        while True:
            bound = len(ells) * fp_big * ratio ** (kmax + 1) / (1 - ratio)
            if bound < tail:
                break
            kmax *= 2
            if kmax > PPOWER_CAP:
                raise SizeCapError("tail target unreachable at a sane truncation")

        total = _ppower_table(cfg.p, kmax)
        good = restricted_counts_table(cfg.p, cfg.r, s, kmax)
        deficit = [a - b for a, b in zip(total, good)]
        delta = mpmath.mpf(0)
        for l in ells:
            z = mpmath.exp(-mpmath.mpf(l) / x)
            zk = mpmath.mpf(1)
            inner = mpmath.mpf(0)
            for k in range(kmax + 1):
                if deficit[k]:
                    inner += deficit[k] * zk
                zk *= z
            delta += inner / generating_function_fp(cfg.p, x / l, dps=dps)
        result = delta
        tail_str = mpmath.nstr(bound, 8)
        x_str = mpmath.nstr(x, 20)
        lower_str = mpmath.nstr(ell_lower_bound, 15)
    with mpmath.workdps(dps):
        return BoundCheck(
            {"n": n, "p": cfg.p, "r": cfg.r, "s": s, "L": str(L)},
            mpmath.nstr(+result, dps),
            "0",
            None,
            {
                "x": x_str,
                "ell_count": len(ells),
                "ell_lower_bound": lower_str,
                "ell_bound_satisfied": bool(ell_ok),
                "k_truncation": kmax,
                "tail_bound": tail_str,
            },
        )
