"""Closed-form constants of the leading asymptotic for several color specs.

The count grows like  c * n**d * exp(r * sqrt(n)); all three constants are
determined by the moduli and multiplicities alone.  The classical case
reproduces the Hardy-Ramanujan prefactor 1/(4*sqrt(3)).
"""

import mpmath

import colorpart as cp

SPECS = [
    "s=1;l=1",      # plain partitions
    "s=1;l=2",      # 2 unrestricted colors
    "s=1,2;l=1,1",  # one color on everything, one on even parts
    "s=1,3;l=2,2",  # the 4-colored family with two colors on multiples of 3
    "s=1,2,5;l=1,2,1",
]

print(f"{'spec':>18} {'a':>8} {'d':>8} {'c':>26} {'exp coeff':>26}")
for text in SPECS:
    spec = cp.parse_text(text)
    consts = cp.constants(spec)
    print(
        f"{text:>18} {str(consts.a):>8} {str(consts.d):>8} "
        f"{mpmath.nstr(consts.c, 20):>26} {mpmath.nstr(consts.exp_coeff, 20):>26}"
    )

print()
print("checks against known closed forms:")
with mpmath.workprec(128):
    classical = cp.constants(cp.parse_text("s=1;l=1"))
    print("  1/(4*sqrt(3)) =", mpmath.nstr(1 / (4 * mpmath.sqrt(3)), 20))
    four = cp.constants(cp.parse_text("s=1,3;l=2,2"))
    print("  1/(3*sqrt(6)) =", mpmath.nstr(1 / (3 * mpmath.sqrt(6)), 20))
    print("  4*pi/3        =", mpmath.nstr(4 * mpmath.pi / 3, 20))
