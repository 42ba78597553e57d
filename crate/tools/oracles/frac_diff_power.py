"""Fractional differences of c_n = (n+1)^{-sigma}.

Uses (n+1)^{-s} = 1/Gamma(s) int_0^inf t^{s-1} e^{-(n+1)t} dt and
sum_j A_j^{-mu-1} x^j = (1-x)^mu, so the series becomes
1/Gamma(s) int_0^inf t^{s-1} e^{-(k+1)t} (1 - e^{-kappa t})^mu dt.
"""
import mpmath as mp

mp.mp.dps = 40
CASES = [
    (0.3, 1, 2.0, 0), (0.3, 1, 2.0, 5), (1.2, 1, 2.0, 0), (1.2, 1, 2.0, 9),
    (0.5, 2, 1.0, 0), (0.5, 2, 1.0, 3), (0.75, 1, 0.5, 2), (1.9, 2, 1.5, 4),
    (2.5, 1, 2.0, 1), (0.25, 1, 3.0, 0),
]

print("/// (mu, kappa, sigma, k, value)")
print("pub const POWER_DIFF_ORACLE: &[(f64, usize, f64, usize, f64)] = &[")
for mu, kappa, s, k in CASES:
    f = lambda t: t ** (s - 1) * mp.exp(-(k + 1) * t) * (-mp.expm1(-kappa * t)) ** mu
    v = mp.quad(f, [0, 1, 10, mp.inf]) / mp.gamma(s)
    print(f"    ({mu!r}, {kappa}, {s!r}, {k}, {mp.nstr(v, 20)}),")
print("];")
