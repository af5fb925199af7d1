"""Colored-partition specifications and their closed-form asymptotic constants.

A spec is a pair of integer tuples (s, l): ``l[i]`` colors may only be used
on parts divisible by ``s[i]``.  The moduli must satisfy
``1 = s[0] < s[1] < ... < s[k-1]`` and every multiplicity must be positive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath

from .errors import (
    EmptySpec,
    EtaOutOfWindow,
    FirstModulusNotOne,
    NonIncreasingModuli,
    NonPositiveMultiplicity,
    WindowUndefined,
)
from .precision import default_bits, working_precision

ETA_LOWER = Fraction(3, 4)
ETA_CAP = Fraction(5, 6)


@dataclass(frozen=True)
class ColoredSpec:
    """Validated (s, l) pair. Construct via :func:`validate` or the parsers."""

    s: tuple[int, ...]
    l: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.s)

    def total_colors(self) -> int:
        return sum(self.l)

    def growth_rate(self) -> Fraction:
        """The exact rational sum of l[i]/s[i] driving the exponential."""
        return sum((Fraction(li, si) for si, li in zip(self.s, self.l)), Fraction(0))

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All (i, j) color indices, 1-based, in lexicographic order."""
        for i, li in enumerate(self.l, start=1):
            for j in range(1, li + 1):
                yield (i, j)

    def modulus(self, i: int) -> int:
        """Modulus for 1-based color-group index i."""
        return self.s[i - 1]

    def to_text(self) -> str:
        return "s={};l={}".format(
            ",".join(map(str, self.s)), ",".join(map(str, self.l))
        )

    def to_json(self) -> str:
        return json.dumps({"s": list(self.s), "l": list(self.l)})

    def __str__(self) -> str:
        return self.to_text()


def validate(s, l) -> ColoredSpec:
    """Check the spec invariants, returning a ColoredSpec or raising SpecError."""
    s = tuple(int(x) for x in s)
    l = tuple(int(x) for x in l)
    if len(s) == 0 or len(l) == 0:
        raise EmptySpec("spec needs at least one (modulus, multiplicity) pair")
    if len(s) != len(l):
        raise EmptySpec(f"moduli and multiplicities differ in length: {len(s)} vs {len(l)}")
    if s[0] != 1:
        raise FirstModulusNotOne(f"first modulus must be 1, got {s[0]}")
    if any(a >= b for a, b in zip(s, s[1:])):
        raise NonIncreasingModuli(f"moduli must be strictly increasing: {s}")
    if any(li < 1 for li in l):
        raise NonPositiveMultiplicity(f"all multiplicities must be >= 1: {l}")
    return ColoredSpec(s, l)


def parse_text(text: str) -> ColoredSpec:
    """Parse the compact form ``s=1,3;l=2,2``."""
    fields = {}
    for chunk in text.strip().split(";"):
        if "=" not in chunk:
            raise EmptySpec(f"malformed spec text {text!r}")
        key, _, val = chunk.partition("=")
        fields[key.strip()] = [int(x) for x in val.split(",") if x.strip()]
    if set(fields) != {"s", "l"}:
        raise EmptySpec(f"spec text must define exactly s and l, got {sorted(fields)}")
    return validate(fields["s"], fields["l"])


def parse_json(text: str) -> ColoredSpec:
    """Parse the JSON form ``{"s": [1, 3], "l": [2, 2]}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EmptySpec(f"invalid spec JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"s", "l"}:
        raise EmptySpec("spec JSON must be an object with keys 's' and 'l'")
    return validate(obj["s"], obj["l"])


@dataclass(frozen=True)
class AsymptoticConstants:
    """Closed-form constants of the leading asymptotic term.

    The main term is  M(n) = c * n**d * exp(exp_coeff * sqrt(n)).
    ``a`` and ``d`` are exact rationals; ``c`` and ``exp_coeff`` are mpmath
    floats carrying ``prec`` bits of significand.
    """

    a: Fraction
    d: Fraction
    c: mpmath.mpf
    exp_coeff: mpmath.mpf
    prec: int


def constants(spec: ColoredSpec, prec: int | None = None) -> AsymptoticConstants:
    """Evaluate the prefactor, power, and exponential coefficient for a spec.

    Exponents are assembled as exact rationals and converted to floats in a
    single powering step each, so no rounding accumulates across the product.
    """
    bits = prec if prec is not None else default_bits()
    a = spec.growth_rate()
    total = spec.total_colors()
    d = Fraction(-3, 4) - Fraction(total, 4)
    with working_precision(bits):
        mpf = mpmath.mpf
        c = mpf(2) ** (mpf(-(3 * total + 5)) / 4)
        c *= mpf(3) ** (mpf(-(total + 1)) / 4)
        c *= (mpf(a.numerator) / a.denominator) ** (mpf(total + 1) / 4)
        for si, li in zip(spec.s, spec.l):
            c *= mpf(si) ** (mpf(li) / 2)
        exp_coeff = mpmath.pi * mpmath.sqrt(mpf(2 * a.numerator) / (3 * a.denominator))
        return AsymptoticConstants(a=a, d=d, c=+c, exp_coeff=+exp_coeff, prec=bits)


@dataclass(frozen=True)
class EtaWindow:
    """Open interval of admissible box-width exponents eta."""

    lower: Fraction
    upper: Fraction

    def contains(self, eta) -> bool:
        eta = Fraction(eta)
        return self.lower < eta < self.upper


def eta_window(spec: ColoredSpec) -> EtaWindow:
    """Admissible eta interval (3/4, min{5/6, (3/4)(L-1)/(L-2)}) for L colors.

    For L <= 2 the second argument of the min degenerates and is treated as
    +infinity, leaving the cap 5/6.  Requires k + l[0] >= 3.
    """
    if spec.k + spec.l[0] < 3:
        raise WindowUndefined(
            f"eta window needs k + l[0] >= 3, got k={spec.k}, l[0]={spec.l[0]}"
        )
    total = spec.total_colors()
    upper = ETA_CAP
    if total > 2:
        upper = min(upper, Fraction(3, 4) * Fraction(total - 1, total - 2))
    return EtaWindow(lower=ETA_LOWER, upper=upper)


def require_eta(spec: ColoredSpec, eta) -> Fraction:
    """Validate eta against the spec's window and return it as a Fraction."""
    window = eta_window(spec)
    eta = Fraction(eta)
    if not window.contains(eta):
        raise EtaOutOfWindow(
            f"eta={float(eta):.6f} outside ({window.lower}, {window.upper})"
        )
    return eta
