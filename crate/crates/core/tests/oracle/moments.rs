// Generated by tools/oracles/moments.py
pub const MOMENT_ORACLE: &[(f64, f64, i32, f64)] = &[
    (0.0, 0.0, 0, 1.0),
    (0.0, 0.0, 1, -4.105_366_594_701_612_5e-48),
    (0.0, 0.0, 7, -6.842_277_657_836_021e-49),
    (0.0, 0.0, 20, 0.047_619_047_619_047_616),
    (0.0, 0.0, 31, -1.710_569_414_459_005_2e-49),
    (0.5, -0.5, 0, 1.570_796_326_794_896_6),
    (0.5, -0.5, 1, -0.785_398_163_397_448_3),
    (0.5, -0.5, 7, -0.429_514_620_607_979_57),
    (0.5, -0.5, 20, 0.276_769_682_076_757_34),
    (0.5, -0.5, 31, -0.219_832_842_405_988_83),
    (1.5, 0.25, 0, 0.272_421_564_082_298_2),
    (1.5, 0.25, 1, -0.090_807_188_027_432_72),
    (1.5, 0.25, 7, -0.024_044_097_103_004_442),
    (1.5, 0.25, 20, 0.008_170_178_967_622_151),
    (1.5, 0.25, 31, -0.004_805_725_758_665_251),
    (-0.5, -0.5, 0, 3.141_592_653_589_793),
    (-0.5, -0.5, 1, -2.189_528_850_507_526_7e-47),
    (-0.5, -0.5, 7, -5.473_822_126_268_817e-48),
    (-0.5, -0.5, 20, 0.553_539_364_153_514_7),
    (-0.5, -0.5, 31, 0.0),
    (3.0, 2.0, 0, 0.016_666_666_666_666_666),
    (3.0, 2.0, 1, -0.002_380_952_380_952_381),
    (3.0, 2.0, 7, -0.000_194_250_194_250_194_25),
    (3.0, 2.0, 20, 0.000_020_703_933_747_412_007),
    (3.0, 2.0, 31, -5.850_005_850_005_85e-6),
    (-0.3, 0.6, 0, 0.994_103_478_997_533_4),
    (-0.3, 0.6, 1, 0.388_997_013_520_773_9),
    (-0.3, 0.6, 7, 0.173_918_863_848_632_75),
    (-0.3, 0.6, 20, 0.096_623_342_066_678_65),
    (-0.3, 0.6, 31, 0.069_257_938_678_773_56),
];
