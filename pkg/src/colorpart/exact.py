"""Exact arbitrary-precision evaluation of colored partition counts.

Three independent routes to the same integers:

* ``g_series_divisor``  -- divisor-sum recurrence from the logarithmic
  derivative of the generating product (the workhorse, O(N^2)).
* ``g_series_euler``    -- direct truncated Euler-product multiplication.
* ``g_via_tuple_convolution`` -- the convolution of plain partition counts
  over constrained tuples, folded one color at a time.

Each serves as an oracle for the others; the test suite enforces three-way
agreement.  Plain p(n) comes from the pentagonal-number recurrence.
"""

from __future__ import annotations

import enum
import io
import json
from dataclasses import dataclass

from .errors import TooLarge
from .specs import ColoredSpec


class Method(enum.Enum):
    DIVISOR_RECURRENCE = "divisor"
    EULER_PRODUCT = "euler"
    TUPLE_CONVOLUTION = "convolution"


@dataclass(frozen=True)
class PartitionTable:
    """Exact p(0..N)."""

    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


@dataclass(frozen=True)
class ExactSeries:
    """Exact coefficient table g(0..N) together with the method that built it."""

    spec: ColoredSpec
    coeffs: tuple[int, ...]
    method: Method

    def __post_init__(self):
        if self.coeffs and self.coeffs[0] != 1:
            raise ValueError(f"series must start at g(0)=1, got {self.coeffs[0]}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def partition_table(n_max: int) -> PartitionTable:
    """p(0..n_max) via Euler's pentagonal-number recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            pent = k * (3 * k - 1) // 2
            if pent > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - pent]
            pent2 = k * (3 * k + 1) // 2
            if pent2 <= n:
                total += sign * p[n - pent2]
            k += 1
        p[n] = total
    return PartitionTable(tuple(p))


def _sigma1_table(n_max: int) -> list[int]:
    """Sum-of-divisors sieve sigma_1(1..n_max); index 0 unused."""
    sig = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            sig[m] += d
    return sig


def divisor_weights(spec: ColoredSpec, n_max: int) -> list[int]:
    """The recurrence weights b(j) = sum over s_i | j of l_i * s_i * sigma_1(j / s_i)."""
    sig = _sigma1_table(n_max)
    b = [0] * (n_max + 1)
    for si, li in zip(spec.s, spec.l):
        w = li * si
        for j in range(si, n_max + 1, si):
            b[j] += w * sig[j // si]
    return b


def g_series_divisor(spec: ColoredSpec, n_max: int) -> ExactSeries:
    """g(0..n_max) from the recurrence n*g(n) = sum_j b(j) * g(n-j)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    b = divisor_weights(spec, n_max)
    g = [0] * (n_max + 1)
    g[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        for j in range(1, n + 1):
            acc += b[j] * g[n - j]
        q, r = divmod(acc, n)
        if r:
            raise ArithmeticError(f"divisor recurrence produced non-integer g({n})")
        g[n] = q
    return ExactSeries(spec=spec, coeffs=tuple(g), method=Method.DIVISOR_RECURRENCE)


def factor_multiplicities(spec: ColoredSpec, n_max: int) -> list[int]:
    """For each part size m <= n_max, how many colors can use it."""
    mult = [0] * (n_max + 1)
    for si, li in zip(spec.s, spec.l):
        for m in range(si, n_max + 1, si):
            mult[m] += li
    return mult


def g_series_euler(spec: ColoredSpec, n_max: int) -> ExactSeries:
    """g(0..n_max) by multiplying truncated factors 1/(1-z^m) one at a time.

    Factors are applied in increasing m so the cheap m=1 passes touch the
    array while it is still short in the prefix sense; each application is
    the in-place recurrence c[j] += c[j-m].
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    c = [0] * (n_max + 1)
    c[0] = 1
    mult = factor_multiplicities(spec, n_max)
    for m in range(1, n_max + 1):
        for _ in range(mult[m]):
            for j in range(m, n_max + 1):
                c[j] += c[j - m]
    return ExactSeries(spec=spec, coeffs=tuple(c), method=Method.EULER_PRODUCT)


DEFAULT_FOLD_BUDGET = 10**9


def g_via_tuple_convolution(
    spec: ColoredSpec,
    n: int,
    ptable: PartitionTable,
    budget: int = DEFAULT_FOLD_BUDGET,
) -> int:
    """g(n) as the sum over constrained tuples of products of p-values.

    The tuple sum is evaluated by folding one color at a time (a stride-s
    convolution with the p-series), in decreasing modulus order so the early
    intermediate arrays stay sparse.  Raises TooLarge when the estimated
    fold-step count exceeds ``budget``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(ptable) <= n:
        raise ValueError(f"partition table covers 0..{len(ptable) - 1}, need {n}")
    colors = []
    for si, li in zip(spec.s, spec.l):
        colors.extend([si] * li)
    colors.sort(reverse=True)
    est = sum((n // si + 1) * (n + 1) for si in colors)
    if est > budget:
        raise TooLarge(f"estimated {est} fold steps exceeds budget {budget}")
    acc = [0] * (n + 1)
    acc[0] = 1
    for si in colors:
        out = [0] * (n + 1)
        for t in range(n + 1):
            base = acc[t]
            if base == 0:
                continue
            for u in range((n - t) // si + 1):
                out[t + si * u] += base * ptable[u]
        acc = out
    return acc[n]


def series_to_csv(series: ExactSeries) -> str:
    """CSV export: header ``n,g`` and exact decimal integers."""
    buf = io.StringIO()
    buf.write("n,g\n")
    for n, g in enumerate(series.coeffs):
        buf.write(f"{n},{g}\n")
    return buf.getvalue()


def series_to_raw(series: ExactSeries) -> str:
    """Newline-delimited decimal coefficients, for piping downstream."""
    return "\n".join(str(g) for g in series.coeffs) + "\n"


def series_to_json(series: ExactSeries) -> str:
    """JSON export with coefficients as decimal strings (exact at any size)."""
    return json.dumps(
        {
            "spec": {"s": list(series.spec.s), "l": list(series.spec.l)},
            "method": series.method.value,
            "g": [str(g) for g in series.coeffs],
        }
    )
