/// (coefficients in x highest first, a, b, p, norm)
pub const NORM_ORACLE: &[(&[f64], f64, f64, f64, f64)] = &[
    (&[1.0, 0.0, -0.4, 0.1], 1.0, 0.5, 1.5, 0.057_257_599_938_962_46),
    (&[1.0, 0.0, -0.4, 0.1], -0.3, 0.2, 1.0, 0.252_305_542_083_243_4),
    (&[2.0, -1.0, -1.5, 0.25, 0.3], 2.5, 2.5, 3.0, 0.059_925_514_731_058),
    (&[0.5, 1.0, -0.2], 0.0, -0.5, 1.25, 1.003_370_901_571_068_3),
    (&[1.0, 0.0, 0.0, 0.0, -0.5, 0.0, 0.05], 1.0, 1.0, 1.0, 0.007_820_648_315_217_79),
];
