"""Weighted L^p norms of polynomials in x = cos t against
(sin t/2)^{2a+1} (cos t/2)^{2b+1} on [0, pi], integrated piecewise between
the real roots so that |f|^p is smooth on each piece."""
import mpmath as mp

mp.mp.dps = 40
# (polynomial coefficients in x, highest first), a, b, p
CASES = [
    ([1, 0, -0.4, 0.1], 1.0, 0.5, 1.5),
    ([1, 0, -0.4, 0.1], -0.3, 0.2, 1.0),
    ([2, -1, -1.5, 0.25, 0.3], 2.5, 2.5, 3.0),
    ([0.5, 1, -0.2], 0.0, -0.5, 1.25),
    ([1, 0, 0, 0, -0.5, 0, 0.05], 1.0, 1.0, 1.0),
]

print("/// (coefficients in x highest first, a, b, p, norm)")
print("pub const NORM_ORACLE: &[(&[f64], f64, f64, f64, f64)] = &[")
for coeffs, a, b, p in CASES:
    cs = [mp.mpf(c) for c in coeffs]
    roots = [r for r in mp.polyroots(cs, maxsteps=200, extraprec=80) if abs(mp.im(r)) < mp.mpf(10) ** -30 and -1 < mp.re(r) < 1]
    ts = sorted(mp.acos(mp.re(r)) for r in roots)
    pts = [mp.mpf(0)] + ts + [mp.pi]
    f = lambda t: abs(mp.polyval(cs, mp.cos(t))) ** p * mp.sin(t / 2) ** (2 * a + 1) * mp.cos(t / 2) ** (2 * b + 1)
    v = mp.quad(f, pts) ** (1 / mp.mpf(p))
    row = ", ".join(repr(float(c)) for c in coeffs)
    print(f"    (&[{row}], {a!r}, {b!r}, {p!r}, {mp.nstr(v, 20)}),")
print("];")
