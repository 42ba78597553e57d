"""Reference values of P_k^{(a,b)}(x) at 50 digits, printed as a Rust table."""
import mpmath as mp

mp.mp.dps = 50
PARAMS = [(-0.5, -0.5), (0.0, 0.0), (0.5, -0.5), (1.0, 0.0), (2.5, 2.5), (1.5, 0.5), (-0.7, -0.3), (4.0, 1.0)]
DEGREES = [1, 5, 17, 64, 128, 255, 512]
XS = [-0.93, -0.4, 0.1, 0.77, 0.999]

print("pub const JACOBI_ORACLE: &[(f64, f64, usize, f64, f64)] = &[")
for a, b in PARAMS:
    for k in DEGREES:
        for x in XS:
            v = mp.jacobi(k, mp.mpf(a), mp.mpf(b), mp.mpf(x))
            print(f"    ({a!r}, {b!r}, {k}, {x!r}, {mp.nstr(v, 20)}),")
print("];")
