/// (mu, kappa, sigma, k, value)
pub const POWER_DIFF_ORACLE: &[(f64, usize, f64, usize, f64)] = &[
    (0.3, 1, 2.0, 0, 0.905_581_188_665_771_1),
    (0.3, 1, 2.0, 5, 0.017_932_365_117_352_13),
    (1.2, 1, 2.0, 0, 0.716_388_434_630_969_4),
    (1.2, 1, 2.0, 9, 0.001_276_878_994_533_921_8),
    (0.5, 2, 1.0, 0, 0.785_398_163_397_448_3),
    (0.5, 2, 1.0, 3, 0.133_333_333_333_333_33),
    (0.75, 1, 0.5, 2, 0.112_660_559_270_103_32),
    (1.9, 2, 1.5, 4, 0.019_579_375_520_037_384),
    (2.5, 1, 2.0, 1, 0.075_448_178_633_859_3),
    (0.25, 1, 3.0, 0, 0.963_823_148_572_256_8),
];
