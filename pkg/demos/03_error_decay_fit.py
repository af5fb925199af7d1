"""How fast does the main term converge?  Measure the decay exponent.

Exact counts are compared against the leading asymptotic in log-space on a
geometric grid of n, and the relative error is fit to a power law.  For
plain partitions the observed exponent is close to -1/2.
"""

import mpmath

import colorpart as cp

for text in ["s=1;l=1", "s=1,3;l=2,2"]:
    spec = cp.parse_text(text)
    ns = cp.geometric_grid(256, 4096)
    series = cp.g_series_divisor(spec, ns[-1])
    rows = cp.comparison_table(spec, ns, series=series)

    print(f"spec {text}")
    print(f"  {'n':>6} {'ln exact':>14} {'ln main':>14} {'rel err':>14}")
    for r in rows:
        print(
            f"  {r.n:>6} {mpmath.nstr(r.ln_exact, 10):>14} "
            f"{mpmath.nstr(r.ln_main, 10):>14} {mpmath.nstr(r.rel_err, 6):>14}"
        )

    fit = cp.fit_error_exponent(rows)
    print(f"  fitted decay exponent: {fit.slope:.4f}  (r^2 = {fit.r_squared:.6f})")
    print()
