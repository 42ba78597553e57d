// Generated by tools/oracles/jacobi_values.py
pub const JACOBI_ORACLE: &[(f64, f64, usize, f64, f64)] = &[
    (-0.5, -0.5, 1, -0.93, -0.465),
    (-0.5, -0.5, 1, -0.4, -0.2),
    (-0.5, -0.5, 1, 0.1, 0.05),
    (-0.5, -0.5, 1, 0.77, 0.385),
    (-0.5, -0.5, 1, 0.999, 0.499_5),
    (-0.5, -0.5, 5, -0.93, 0.075_335_717_756_249_85),
    (-0.5, -0.5, 5, -0.4, -0.217_507_5),
    (-0.5, -0.5, 5, 0.1, 0.118_164_375),
    (-0.5, -0.5, 5, 0.77, -0.233_741_160_056_25),
    (-0.5, -0.5, 5, 0.999, 0.239_965_981_191_558_57),
    (-0.5, -0.5, 17, -0.93, -0.134_931_336_556_019_85),
    (-0.5, -0.5, 17, -0.4, -0.088_808_671_720_133_36),
    (-0.5, -0.5, 17, 0.1, 0.134_651_202_039_195_1),
    (-0.5, -0.5, 17, 0.77, 0.094_330_579_937_772_18),
    (-0.5, -0.5, 17, 0.999, 0.098_426_643_377_976_24),
    (-0.5, -0.5, 64, -0.93, 0.035_375_706_634_508_716),
    (-0.5, -0.5, 64, -0.4, 0.025_220_194_183_604_158),
    (-0.5, -0.5, 64, 0.1, 0.069_814_494_450_142_54),
    (-0.5, -0.5, 64, 0.77, 0.067_183_182_359_216_37),
    (-0.5, -0.5, 64, 0.999, -0.067_660_726_999_449_6),
    (-0.5, -0.5, 128, -0.93, -0.024_650_310_526_560_363),
    (-0.5, -0.5, 128, -0.4, -0.037_026_796_134_162_945),
    (-0.5, -0.5, 128, 0.1, 0.048_207_378_893_848_89),
    (-0.5, -0.5, 128, 0.77, 0.040_957_382_076_265_11),
    (-0.5, -0.5, 128, 0.999, 0.042_252_464_955_665_02),
    (-0.5, -0.5, 255, -0.93, 0.005_598_629_128_638_938),
    (-0.5, -0.5, 255, -0.4, -0.033_667_212_616_431_14),
    (-0.5, -0.5, 255, 0.1, -0.014_074_751_756_510_335),
    (-0.5, -0.5, 255, 0.77, 0.030_656_680_291_292_905),
    (-0.5, -0.5, 255, 0.999, 0.014_054_402_257_810_38),
    (-0.5, -0.5, 512, -0.93, -0.011_942_390_182_733_431),
    (-0.5, -0.5, 512, -0.4, -0.024_380_593_963_586_224),
    (-0.5, -0.5, 512, 0.1, 0.013_041_326_550_757_114),
    (-0.5, -0.5, 512, 0.77, -0.018_758_605_191_142_218),
    (-0.5, -0.5, 512, 0.999, -0.015_336_777_925_308_728),
    (0.0, 0.0, 1, -0.93, -0.93),
    (0.0, 0.0, 1, -0.4, -0.4),
    (0.0, 0.0, 1, 0.1, 0.1),
    (0.0, 0.0, 1, 0.77, 0.77),
    (0.0, 0.0, 1, 0.999, 0.999),
    (0.0, 0.0, 5, -0.93, -0.184_172_158_237_500_4),
    (0.0, 0.0, 5, -0.4, -0.270_64),
    (0.0, 0.0, 5, 0.1, 0.178_828_75),
    (0.0, 0.0, 5, 0.77, -0.419_321_226_362_5),
    (0.0, 0.0, 5, 0.999, 0.985_052_430_039_367_2),
    (0.0, 0.0, 17, -0.93, -0.275_723_918_514_219_6),
    (0.0, 0.0, 17, -0.4, -0.158_645_273_580_348_44),
    (0.0, 0.0, 17, 0.1, 0.187_984_456_699_493_49),
    (0.0, 0.0, 17, 0.77, 0.074_997_375_428_906_58),
    (0.0, 0.0, 17, 0.999, 0.852_717_985_195_880_7),
    (0.0, 0.0, 64, -0.93, -0.012_360_181_495_353_456),
    (0.0, 0.0, 64, -0.4, 0.016_518_038_492_139_876),
    (0.0, 0.0, 64, 0.1, 0.098_026_402_863_308_59),
    (0.0, 0.0, 64, 0.77, 0.123_172_686_407_993_13),
    (0.0, 0.0, 64, 0.999, -0.218_599_606_241_290_9),
    (0.0, 0.0, 128, -0.93, -0.104_358_316_800_605_45),
    (0.0, 0.0, 128, -0.4, -0.063_556_197_445_065_09),
    (0.0, 0.0, 128, 0.1, 0.067_301_354_067_605_66),
    (0.0, 0.0, 128, 0.77, 0.086_919_055_751_320_89),
    (0.0, 0.0, 128, 0.999, 0.075_093_336_827_098_65),
    (0.0, 0.0, 255, -0.93, -0.035_011_969_218_832_01),
    (0.0, 0.0, 255, -0.4, -0.051_876_846_987_936_18),
    (0.0, 0.0, 255, 0.1, -0.022_219_857_267_877_92),
    (0.0, 0.0, 255, 0.77, 0.062_294_389_071_147_656),
    (0.0, 0.0, 255, 0.999, -0.084_137_435_324_506_43),
    (0.0, 0.0, 512, -0.93, -0.051_741_275_821_126_545),
    (0.0, 0.0, 512, -0.4, -0.033_678_259_669_107_52),
    (0.0, 0.0, 512, 0.1, 0.016_953_667_807_468_372),
    (0.0, 0.0, 512, 0.77, -0.017_675_358_644_939_99),
    (0.0, 0.0, 512, 0.999, -0.165_040_979_078_709_96),
    (0.5, -0.5, 1, -0.93, -0.430_000_000_000_000_05),
    (0.5, -0.5, 1, -0.4, 0.099_999_999_999_999_98),
    (0.5, -0.5, 1, 0.1, 0.6),
    (0.5, -0.5, 1, 0.77, 1.27),
    (0.5, -0.5, 1, 0.999, 1.498_999_999_999_999_9),
    (0.5, -0.5, 5, -0.93, 0.119_953_068_637_499_84),
    (0.5, -0.5, 5, -0.4, -0.292_871_25),
    (0.5, -0.5, 5, 0.1, 0.356_816_25),
    (0.5, -0.5, 5, 0.77, -0.447_314_799_487_499_9),
    (0.5, -0.5, 5, 0.999, 2.680_036_647_793_304_6),
    (0.5, -0.5, 17, -0.93, -0.131_954_384_887_595_62),
    (0.5, -0.5, 17, -0.4, -0.021_523_043_675_024_757),
    (0.5, -0.5, 17, 0.1, 0.114_878_874_913_738_58),
    (0.5, -0.5, 17, 0.77, -0.176_802_444_581_810_94),
    (0.5, -0.5, 17, 0.999, 4.283_787_943_506_969),
    (0.5, -0.5, 64, -0.93, 0.046_964_366_773_686_78),
    (0.5, -0.5, 64, -0.4, 0.068_239_178_911_149_56),
    (0.5, -0.5, 64, 0.1, 0.059_917_684_122_198_49),
    (0.5, -0.5, 64, 0.77, 0.125_414_389_550_737_72),
    (0.5, -0.5, 64, 0.999, 0.799_564_594_212_265_4),
    (0.5, -0.5, 128, -0.93, -0.016_405_311_621_457_468),
    (0.5, -0.5, 128, -0.4, -0.015_206_490_228_866_307),
    (0.5, -0.5, 128, 0.1, 0.034_311_273_583_546_15),
    (0.5, -0.5, 128, 0.77, 0.119_638_154_985_033_12),
    (0.5, -0.5, 128, 0.999, -1.137_853_109_592_237),
    (0.5, -0.5, 255, -0.93, 0.012_238_883_011_406_885),
    (0.5, -0.5, 255, -0.4, -0.026_690_629_524_415_203),
    (0.5, -0.5, 255, 0.1, -0.049_880_515_596_211_53),
    (0.5, -0.5, 255, 0.77, 0.079_280_225_772_408_29),
    (0.5, -0.5, 255, 0.999, -1.434_392_960_062_955_7),
    (0.5, -0.5, 512, -0.93, -0.007_775_270_078_095_663_5),
    (0.5, -0.5, 512, -0.4, -0.027_781_149_251_485_667),
    (0.5, -0.5, 512, 0.1, -0.010_445_105_449_159_62),
    (0.5, -0.5, 512, 0.77, 0.026_783_211_289_406_007),
    (0.5, -0.5, 512, 0.999, -0.893_955_762_620_124_3),
    (1.0, 0.0, 1, -0.93, -0.895),
    (1.0, 0.0, 1, -0.4, -0.100_000_000_000_000_03),
    (1.0, 0.0, 1, 0.1, 0.65),
    (1.0, 0.0, 1, 0.77, 1.655),
    (1.0, 0.0, 1, 0.999, 1.998_5),
    (1.0, 0.0, 5, -0.93, -0.083_536_391_143_750_44),
    (1.0, 0.0, 5, -0.4, -0.402_34),
    (1.0, 0.0, 5, 0.1, 0.475_175_625),
    (1.0, 0.0, 5, 0.77, -0.374_220_182_706_249_85),
    (1.0, 0.0, 5, 0.999, 5.947_639_842_578_735),
    (1.0, 0.0, 17, -0.93, -0.300_007_554_881_536_74),
    (1.0, 0.0, 17, -0.4, -0.080_697_620_326_841_6),
    (1.0, 0.0, 17, 0.1, 0.151_186_299_576_251_57),
    (1.0, 0.0, 17, 0.77, -0.529_719_547_073_524_5),
    (1.0, 0.0, 17, 0.999, 16.584_755_172_728_638),
    (1.0, 0.0, 64, -0.93, 0.018_568_795_357_313_8),
    (1.0, 0.0, 64, -0.4, 0.083_037_153_132_040_62),
    (1.0, 0.0, 64, 0.1, 0.078_784_261_910_744_03),
    (1.0, 0.0, 64, 0.77, 0.078_930_816_719_276_92),
    (1.0, 0.0, 64, 0.999, 16.679_356_513_453_16),
    (1.0, 0.0, 128, -0.93, -0.094_513_284_435_131_54),
    (1.0, 0.0, 128, -0.4, -0.039_383_047_203_918_324),
    (1.0, 0.0, 128, 0.1, 0.043_977_088_127_576_51),
    (1.0, 0.0, 128, 0.77, 0.128_060_431_827_502_3),
    (1.0, 0.0, 128, 0.999, -14.104_146_392_200_215),
    (1.0, 0.0, 255, -0.93, -0.020_814_840_801_944_175),
    (1.0, 0.0, 255, -0.4, -0.048_426_972_005_458_785),
    (1.0, 0.0, 255, 0.1, -0.071_698_747_733_308_5),
    (1.0, 0.0, 255, 0.77, 0.076_419_834_906_280_28),
    (1.0, 0.0, 255, 0.999, -10.094_335_578_951_807),
    (1.0, 0.0, 512, -0.93, -0.046_674_622_083_026_82),
    (1.0, 0.0, 512, -0.4, -0.043_393_923_301_860_67),
    (1.0, 0.0, 512, 0.1, -0.017_283_172_601_218_654),
    (1.0, 0.0, 512, 0.77, 0.094_309_966_104_678_15),
    (1.0, 0.0, 512, 0.999, -1.361_873_144_559_851_5),
    (2.5, 2.5, 1, -0.93, -3.255_000_000_000_000_3),
    (2.5, 2.5, 1, -0.4, -1.400_000_000_000_000_1),
    (2.5, 2.5, 1, 0.1, 0.350_000_000_000_000_03),
    (2.5, 2.5, 1, 0.77, 2.695_000_000_000_000_3),
    (2.5, 2.5, 1, 0.999, 3.496_5),
    (2.5, 2.5, 5, -0.93, -19.161_333_062_746_884),
    (2.5, 2.5, 5, -0.4, -0.022_522_499_999_999_737),
    (2.5, 2.5, 5, 0.1, 0.771_797_812_5),
    (2.5, 2.5, 5, 0.77, 1.251_257_729_596_875_9),
    (2.5, 2.5, 5, 0.999, 34.915_638_816_562_875),
    (2.5, 2.5, 17, -0.93, 17.855_182_515_221_53),
    (2.5, 2.5, 17, -0.4, -1.072_011_599_079_522),
    (2.5, 2.5, 17, 0.1, 0.803_875_613_359_494_9),
    (2.5, 2.5, 17, 0.77, -3.330_541_247_452_787_3),
    (2.5, 2.5, 17, 0.999, 432.344_717_201_434_83),
    (2.5, 2.5, 64, -0.93, -2.092_751_888_485_308),
    (2.5, 2.5, 64, -0.4, -0.513_117_799_936_751_8),
    (2.5, 2.5, 64, 0.1, 0.487_232_211_909_342_13),
    (2.5, 2.5, 64, 0.77, -1.320_002_147_018_479_5),
    (2.5, 2.5, 64, 0.999, 5_265.487_036_948_11),
    (2.5, 2.5, 128, -0.93, 6.084_251_408_396_589_5),
    (2.5, 2.5, 128, -0.4, -0.440_958_426_503_135_77),
    (2.5, 2.5, 128, 0.1, 0.332_613_613_628_490_96),
    (2.5, 2.5, 128, 0.77, -0.621_364_749_111_708_8),
    (2.5, 2.5, 128, 0.999, -390.796_335_420_878_45),
    (2.5, 2.5, 255, -0.93, 1.399_692_189_900_391_6),
    (2.5, 2.5, 255, -0.4, -0.217_626_711_701_052_3),
    (2.5, 2.5, 255, 0.1, -0.183_559_588_091_882_08),
    (2.5, 2.5, 255, 0.77, -0.542_471_571_397_795_8),
    (2.5, 2.5, 255, 0.999, 2_181.470_879_877_29),
    (2.5, 2.5, 512, -0.93, 3.183_068_468_137_095_8),
    (2.5, 2.5, 512, -0.4, -0.032_999_830_893_988_204),
    (2.5, 2.5, 512, 0.1, 0.049_776_406_942_910_89),
    (2.5, 2.5, 512, 0.77, 0.744_860_740_784_460_7),
    (2.5, 2.5, 512, 0.999, 2_044.451_109_199_729_4),
    (1.5, 0.5, 1, -0.93, -1.36),
    (1.5, 0.5, 1, -0.4, -0.300_000_000_000_000_04),
    (1.5, 0.5, 1, 0.1, 0.7),
    (1.5, 0.5, 1, 0.77, 2.04),
    (1.5, 0.5, 1, 0.999, 2.497_999_999_999_999_8),
    (1.5, 0.5, 5, -0.93, -0.756_175_162_050_001),
    (1.5, 0.5, 5, -0.4, -0.510_221_25),
    (1.5, 0.5, 5, 0.1, 0.614_872_5),
    (1.5, 0.5, 5, 0.77, 0.008_792_516_700_000_341),
    (1.5, 0.5, 5, 0.999, 11.636_866_044_509_038),
    (1.5, 0.5, 17, -0.93, -0.444_954_187_384_736_74),
    (1.5, 0.5, 17, -0.4, -0.178_791_479_914_981_57),
    (1.5, 0.5, 17, 0.1, 0.195_854_460_298_715_4),
    (1.5, 0.5, 17, 0.77, -1.135_216_980_165_236_3),
    (1.5, 0.5, 17, 0.999, 54.742_263_701_698_56),
    (1.5, 0.5, 64, -0.93, -0.177_664_734_229_622_62),
    (1.5, 0.5, 64, -0.4, 0.091_331_243_825_364_42),
    (1.5, 0.5, 64, 0.1, 0.102_494_093_520_322_31),
    (1.5, 0.5, 64, 0.77, -0.132_875_237_488_541_38),
    (1.5, 0.5, 64, 0.999, 145.521_223_909_851_47),
    (1.5, 0.5, 128, -0.93, -0.273_533_254_659_652_6),
    (1.5, 0.5, 128, -0.4, -0.080_298_689_053_284_29),
    (1.5, 0.5, 128, 0.1, 0.055_543_547_278_256_13),
    (1.5, 0.5, 128, 0.77, 0.038_119_797_308_157_4),
    (1.5, 0.5, 128, 0.999, -95.252_204_897_023_82),
    (1.5, 0.5, 255, -0.93, -0.146_044_737_578_097_8),
    (1.5, 0.5, 255, -0.4, -0.081_656_215_967_774_03),
    (1.5, 0.5, 255, 0.1, -0.102_690_997_367_758_02),
    (1.5, 0.5, 255, 0.77, -0.002_625_544_043_522_265_3),
    (1.5, 0.5, 255, 0.999, -37.721_116_787_658_96),
    (1.5, 0.5, 512, -0.93, -0.137_519_582_984_985_46),
    (1.5, 0.5, 512, -0.4, -0.064_831_821_590_776_34),
    (1.5, 0.5, 512, 0.1, -0.027_929_555_140_351_916),
    (1.5, 0.5, 512, 0.77, 0.218_170_778_176_351_2),
    (1.5, 0.5, 512, 0.999, 26.128_673_849_864_676),
    (-0.7, -0.3, 1, -0.93, -0.665),
    (-0.7, -0.3, 1, -0.4, -0.4),
    (-0.7, -0.3, 1, 0.1, -0.149_999_999_999_999_97),
    (-0.7, -0.3, 1, 0.77, 0.185_000_000_000_000_05),
    (-0.7, -0.3, 1, 0.999, 0.299_500_000_000_000_04),
    (-0.7, -0.3, 5, -0.93, -0.014_828_403_493_750_234),
    (-0.7, -0.3, 5, -0.4, -0.183_230_999_999_999_98),
    (-0.7, -0.3, 5, 0.1, 0.040_128_375_000_000_015),
    (-0.7, -0.3, 5, 0.77, -0.158_936_006_306_250_04),
    (-0.7, -0.3, 5, 0.999, 0.101_671_023_353_183_58),
    (-0.7, -0.3, 17, -0.93, -0.185_083_202_950_491_35),
    (-0.7, -0.3, 17, -0.4, -0.127_093_120_492_831_83),
    (-0.7, -0.3, 17, 0.1, 0.130_946_716_485_080_88),
    (-0.7, -0.3, 17, 0.77, 0.098_482_760_738_432_3),
    (-0.7, -0.3, 17, 0.999, 0.024_892_252_893_866_998),
    (-0.7, -0.3, 64, -0.93, 0.020_350_802_672_104_956),
    (-0.7, -0.3, 64, -0.4, 0.003_886_092_543_469_713),
    (-0.7, -0.3, 64, 0.1, 0.067_790_609_959_964_76),
    (-0.7, -0.3, 64, 0.77, 0.046_733_295_893_581_07),
    (-0.7, -0.3, 64, 0.999, -0.033_046_491_383_723_89),
    (-0.7, -0.3, 128, -0.93, -0.051_392_492_208_926_555),
    (-0.7, -0.3, 128, -0.4, -0.049_563_945_504_472_08),
    (-0.7, -0.3, 128, 0.1, 0.048_749_435_545_595_715),
    (-0.7, -0.3, 128, 0.77, 0.024_574_112_605_105_326),
    (-0.7, -0.3, 128, 0.999, 0.022_761_758_544_234_64),
    (-0.7, -0.3, 255, -0.93, -0.007_636_116_478_273_286),
    (-0.7, -0.3, 255, -0.4, -0.038_437_918_891_533_855),
    (-0.7, -0.3, 255, 0.1, -0.003_296_892_201_598_235_6),
    (-0.7, -0.3, 255, 0.77, 0.019_344_146_950_870_524),
    (-0.7, -0.3, 255, 0.999, 0.011_067_559_947_968_637),
    (-0.7, -0.3, 512, -0.93, -0.025_257_201_329_321_865),
    (-0.7, -0.3, 512, -0.4, -0.023_488_765_596_540_635),
    (-0.7, -0.3, 512, 0.1, 0.018_594_946_308_907_002),
    (-0.7, -0.3, 512, 0.77, -0.018_687_480_914_596_356),
    (-0.7, -0.3, 512, 0.999, -0.003_924_499_220_957_642),
    (4.0, 1.0, 1, -0.93, -1.755_000_000_000_000_1),
    (4.0, 1.0, 1, -0.4, 0.099_999_999_999_999_92),
    (4.0, 1.0, 1, 0.1, 1.85),
    (4.0, 1.0, 1, 0.77, 4.195),
    (4.0, 1.0, 1, 0.999, 4.996_5),
    (4.0, 1.0, 5, -0.93, -1.666_921_280_559_377_2),
    (4.0, 1.0, 5, -0.4, -0.821_310_000_000_000_1),
    (4.0, 1.0, 5, 0.1, 0.748_510_312_5),
    (4.0, 1.0, 5, 0.77, 25.785_749_674_284_38),
    (4.0, 1.0, 5, 0.999, 125.308_384_713_562_97),
    (4.0, 1.0, 17, -0.93, -0.696_874_126_537_976_5),
    (4.0, 1.0, 17, -0.4, 0.182_848_939_163_736),
    (4.0, 1.0, 17, 0.1, -0.916_476_199_353_888_4),
    (4.0, 1.0, 17, 0.77, 8.499_061_466_912_929),
    (4.0, 1.0, 17, 0.999, 5_754.697_474_896_51),
    (4.0, 1.0, 64, -0.93, -0.575_261_814_836_612),
    (4.0, 1.0, 64, -0.4, 0.365_835_089_857_074_2),
    (4.0, 1.0, 64, 0.1, -0.577_015_126_193_775_7),
    (4.0, 1.0, 64, 0.77, -1.750_980_024_460_507_2),
    (4.0, 1.0, 64, 0.999, 510_790.142_631_993_05),
    (4.0, 1.0, 128, -0.93, -0.640_501_726_292_357_5),
    (4.0, 1.0, 128, -0.4, 0.070_318_909_588_913_03),
    (4.0, 1.0, 128, 0.1, -0.442_754_084_309_253_9),
    (4.0, 1.0, 128, 0.77, -2.743_852_686_328_118),
    (4.0, 1.0, 128, 0.999, 1_471_253.053_323_681_2),
    (4.0, 1.0, 255, -0.93, -0.408_687_260_939_093_74),
    (4.0, 1.0, 255, -0.4, -0.028_948_561_051_045_246),
    (4.0, 1.0, 255, 0.1, -0.029_954_764_267_408_257),
    (4.0, 1.0, 255, 0.77, -1.376_249_175_484_595_6),
    (4.0, 1.0, 255, 0.999, 413_659.452_165_148_86),
    (4.0, 1.0, 512, -0.93, -0.327_594_234_639_181_14),
    (4.0, 1.0, 512, -0.4, -0.083_952_013_649_389_08),
    (4.0, 1.0, 512, 0.1, -0.202_049_489_894_116_36),
    (4.0, 1.0, 512, 0.77, -2.923_315_220_301_623_7),
    (4.0, 1.0, 512, 0.999, -551_365.207_703_752_4),
];
