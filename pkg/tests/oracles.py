"""Independent reference implementations used only to check the library.

Everything here works directly on Young diagrams or by brute enumeration,
deliberately avoiding the bead-sequence machinery and the memoized recursions
that the package itself uses.
"""

from fractions import Fraction
from math import factorial


def diagram_strip_removals(lam, t):
    """All (resulting partition, height) pairs for removing a length-t strip.

    Walks the diagram itself: a box whose arm plus leg plus one equals t owns
    a rim strip; removing it shifts the intermediate rows up-left.
    """
    lam = list(lam)
    out = []
    for r in range(len(lam)):
        for c in range(lam[r]):
            arm = lam[r] - c - 1
            leg = sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)
            if arm + leg + 1 != t:
                continue
            r2 = r + leg
            new = lam[:r] + [lam[i + 1] - 1 for i in range(r, r2)] + [c] + lam[r2 + 1 :]
            out.append((tuple(x for x in new if x > 0), leg))
    return out


def mn_reference(lam, mu):
    """Unmemoized character recursion on diagrams, consuming smallest part first."""
    if not mu:
        return 1
    t = mu[-1]
    rest = mu[:-1]
    return sum(
        (-sub if h % 2 else sub)
        for res, h in diagram_strip_removals(lam, t)
        for sub in [mn_reference(res, rest)]
    )


def brute_skew_syt(outer, inner):
    """Count standard fillings of outer/inner by direct placement of 1..size."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = {
        (r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])
    }
    size = len(cells)
    filled = set()

    def rec(remaining):
        if remaining == 0:
            return 1
        total = 0
        for cell in cells:
            if cell in filled:
                continue
            r, c = cell
            if (r - 1, c) in cells and (r - 1, c) not in filled:
                continue
            if (r, c - 1) in cells and (r, c - 1) not in filled:
                continue
            filled.add(cell)
            total += rec(remaining - 1)
            filled.remove(cell)
        return total

    return rec(size)


def _fraction_det(matrix):
    m = [row[:] for row in matrix]
    k = len(m)
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, k):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def aitken_count(outer, inner):
    """Skew standard-filling count via the classical determinant formula."""
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    k = len(outer)
    n = sum(outer) - sum(inner)

    def inv_fact(x):
        return Fraction(1, factorial(x)) if x >= 0 else Fraction(0)

    matrix = [
        [inv_fact(outer[i] - inner[j] - i + j) for j in range(k)] for i in range(k)
    ]
    value = _fraction_det(matrix) * factorial(n)
    assert value.denominator == 1
    return int(value)


def naive_partitions(n):
    """Set of all partitions of n by ascending-part recursion."""
    out = set()

    def rec(remaining, minpart, acc):
        if remaining == 0:
            out.add(tuple(sorted(acc, reverse=True)))
            return
        for k in range(minpart, remaining + 1):
            rec(remaining - k, k, acc + [k])

    rec(n, 1, [])
    return out


def brute_ppower_count(p, k):
    """Partitions of k into powers of p, by plain recursion over powers."""
    powers = []
    w = 1
    while w <= k:
        powers.append(w)
        w *= p

    def rec(remaining, idx):
        if remaining == 0:
            return 1
        if idx < 0:
            return 0
        total = 0
        w = powers[idx]
        for a in range(remaining // w + 1):
            total += rec(remaining - a * w, idx - 1)
        return total

    return rec(k, len(powers) - 1)


def random_order_reduce(mu, cfg, rng):
    """Apply the combine rewrite at randomly chosen sites until it stalls."""
    from charcore.divisibility import combine_step
    from charcore.partitions import multiplicities

    current = tuple(mu)
    while True:
        options = sorted(
            m for m, a in multiplicities(current).items() if a >= cfg.q
        )
        if not options:
            return current
        current = combine_step(current, rng.choice(options), cfg)
