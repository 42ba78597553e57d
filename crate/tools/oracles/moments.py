"""Moments of (cos t)^d against (sin t/2)^{2a+1} (cos t/2)^{2b+1} on [0, pi]."""
import mpmath as mp

mp.mp.dps = 40
CASES = [(0.0, 0.0), (0.5, -0.5), (1.5, 0.25), (-0.5, -0.5), (3.0, 2.0), (-0.3, 0.6)]
DEGS = [0, 1, 7, 20, 31]

print("pub const MOMENT_ORACLE: &[(f64, f64, i32, f64)] = &[")
for a, b in CASES:
    for d in DEGS:
        f = lambda t: mp.cos(t) ** d * mp.sin(t / 2) ** (2 * a + 1) * mp.cos(t / 2) ** (2 * b + 1)
        v = mp.quad(f, [0, mp.pi / 4, mp.pi / 2, 3 * mp.pi / 4, mp.pi])
        print(f"    ({a!r}, {b!r}, {d}, {mp.nstr(v, 20)}),")
print("];")
