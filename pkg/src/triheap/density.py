"""How rare the P-positions are: exact counts and closed-form bounds.

pi(N) counts the P-positions in classes 0..N.  nu(N) counts every
canonical position whose total token count is at most k*T_N + N, i.e.
everything "up to" class N.  Both are computed exactly by partition
dynamic programming with arbitrary-precision counts.

For comparison, ``closed_form_bounds`` evaluates the polynomial
sandwich obtained by integrating the leading term of the partition
counting polynomial; those expressions are estimates derived from an
asymptotic argument, so the exact counts are authoritative and the
bounds are reported alongside, not asserted against.  The ratio
pi/nu falls off like 1/N^(k+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import _tri


@dataclass(frozen=True)
class DensityReport:
    """Exact counts, closed-form bound values, and their ratio at one N."""

    k: int
    N: int
    pi_exact: int
    nu_exact: int
    pi_lower: Fraction
    pi_upper: Fraction
    nu_lower: Fraction
    nu_upper: Fraction
    ratio: Fraction


def _partitions_exact_parts(total: int, parts: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` positive parts,
    part size unbounded."""
    # dp[j][t]: partitions of t into exactly j parts.  Either a part
    # equals 1 (drop it) or all parts exceed 1 (subtract 1 from each).
    dp = [[0] * (total + 1) for _ in range(parts + 1)]
    dp[0][0] = 1
    for j in range(1, parts + 1):
        row = dp[j]
        prev = dp[j - 1]
        for t in range(j, total + 1):
            row[t] = prev[t - 1] + (row[t - j] if t >= j else 0)
    return dp[parts][total]


def _partitions_in_box(total: int, rows: int, max_part: int) -> int:
    """Partitions of ``total`` into at most ``rows`` parts, each part at
    most ``max_part`` (partitions fitting in a rows x max_part box)."""
    if total < 0:
        return 0
    dp = [[0] * (total + 1) for _ in range(rows + 1)]
    for r in range(rows + 1):
        dp[r][0] = 1
    for part in range(1, max_part + 1):
        for r in range(1, rows + 1):
            for t in range(part, total + 1):
                dp[r][t] += dp[r - 1][t - part]
    return dp[rows][total]


def count_partitions(total: int, parts: int, max_part: int) -> int:
    """Exact number of partitions of ``total`` into exactly ``parts``
    positive integers, each at most ``max_part``."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    if parts < 0:
        raise ValueError("parts must be nonnegative")
    if parts == 0:
        return 1 if total == 0 else 0
    if max_part < 1 or total < parts or total > parts * max_part:
        return 0
    if max_part >= total - parts + 1:
        return _partitions_exact_parts(total, parts)
    # Subtract 1 from every part: at most `parts` leftover parts, each
    # at most max_part - 1.
    return _partitions_in_box(total - parts, parts, max_part - 1)


def p_class_size(n: int, k: int) -> int:
    """|P_n| without enumeration: shifting each part down by T_n - 1
    turns the class into the partitions of n + k - 1 into exactly k - 1
    parts of size at most n + 1."""
    return count_partitions(n + k - 1, k - 1, n + 1)


def pi_exact(N: int, k: int) -> int:
    """Exact number of P-positions in classes 0..N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if k < 3:
        raise ValueError("the game needs k >= 3 heaps")
    return sum(p_class_size(n, k) for n in range(N + 1))


def _at_most_k_parts_counts(k: int, up_to: int) -> list[int]:
    """counts[t] = partitions of t into at most k parts (t <= up_to).

    Conjugation turns "at most k parts" into "parts of size at most k",
    which is a coin-style DP.
    """
    counts = [0] * (up_to + 1)
    counts[0] = 1
    for part in range(1, k + 1):
        for t in range(part, up_to + 1):
            counts[t] += counts[t - part]
    return counts


def nu_exact(N: int, k: int) -> int:
    """Exact number of canonical k-heap positions with at most
    k*T_N + N tokens in total."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if k < 3:
        raise ValueError("the game needs k >= 3 heaps")
    top = k * _tri(N) + N
    return sum(_at_most_k_parts_counts(k, top))


def closed_form_bounds(N: int, k: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(pi_lower, pi_upper, nu_lower, nu_upper) as exact rationals.

    Integral sandwich of the leading-term estimates; see the module
    docstring for how these relate to the exact counts.
    """
    kf1 = math.factorial(k - 1)
    kf = math.factorial(k)
    top = k * _tri(N) + N
    pi_lower = Fraction((N + k - 1) ** (k - 1) - (k - 2) ** (k - 1), kf1)
    pi_upper = Fraction((N + k) ** (k - 1) - (k - 1) ** (k - 1), kf1)
    nu_lower = Fraction((top + k) ** k - (k - 1) ** k, kf)
    nu_upper = Fraction((top + k + 1) ** k - k**k, kf)
    return pi_lower, pi_upper, nu_lower, nu_upper


def density_report(N: int, k: int) -> DensityReport:
    pi = pi_exact(N, k)
    nu = nu_exact(N, k)
    pi_lo, pi_hi, nu_lo, nu_hi = closed_form_bounds(N, k)
    return DensityReport(
        k=k,
        N=N,
        pi_exact=pi,
        nu_exact=nu,
        pi_lower=pi_lo,
        pi_upper=pi_hi,
        nu_lower=nu_lo,
        nu_upper=nu_hi,
        ratio=Fraction(pi, nu),
    )


def density_rows(k: int, n_max: int) -> list[DensityReport]:
    """Reports for N = 1..n_max sharing one partition DP."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    top = k * _tri(n_max) + n_max
    counts = _at_most_k_parts_counts(k, top)
    prefix = [0] * (top + 1)
    running = 0
    for t, c in enumerate(counts):
        running += c
        prefix[t] = running
    rows = []
    pi = p_class_size(0, k)
    for N in range(1, n_max + 1):
        pi += p_class_size(N, k)
        nu = prefix[k * _tri(N) + N]
        pi_lo, pi_hi, nu_lo, nu_hi = closed_form_bounds(N, k)
        rows.append(
            DensityReport(
                k=k,
                N=N,
                pi_exact=pi,
                nu_exact=nu,
                pi_lower=pi_lo,
                pi_upper=pi_hi,
                nu_lower=nu_lo,
                nu_upper=nu_hi,
                ratio=Fraction(pi, nu),
            )
        )
    return rows


def ratio_scan(k: int, n_max: int) -> list[tuple[int, Fraction]]:
    """Exact pi/nu ratios for N = 1..n_max."""
    return [(row.N, row.ratio) for row in density_rows(k, n_max)]


DENSITY_CSV_HEADER = "N,pi_exact,nu_exact,pi_lower,pi_upper,nu_lower,nu_upper,ratio"


def write_density_csv(rows: list[DensityReport], stream) -> None:
    """Counts as exact integers; bound estimates and the ratio as
    shortest round-trip floats."""
    print(DENSITY_CSV_HEADER, file=stream)
    for row in rows:
        print(
            f"{row.N},{row.pi_exact},{row.nu_exact},"
            f"{float(row.pi_lower)!r},{float(row.pi_upper)!r},"
            f"{float(row.nu_lower)!r},{float(row.nu_upper)!r},"
            f"{float(row.ratio)!r}",
            file=stream,
        )


def fitted_loglog_slope(points: list[tuple[int, Fraction]]) -> float:
    """Least-squares slope of log(ratio) against log(N).

    Logs are taken on numerator and denominator separately so that
    arbitrarily small exact ratios never underflow.
    """
    if len(points) < 2:
        raise ValueError("need at least two points to fit a slope")
    xs = [math.log(n) for n, _ in points]
    ys = [
        math.log(r.numerator) - math.log(r.denominator) for _, r in points
    ]
    x_mean = sum(xs) / len(xs)
    y_mean = sum(ys) / len(ys)
    sxx = sum((x - x_mean) ** 2 for x in xs)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    return sxy / sxx
