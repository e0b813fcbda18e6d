//! Precomputed double-double constants.
//!
//! Each constant is stored as a non-overlapping (hi, lo) pair with
//! hi = fl(value) and lo = fl(value - hi), giving ~32 significant digits.

use super::dd::Dd;

pub const PI: Dd = Dd {
    hi: 3.141592653589793,
    lo: 1.2246467991473532e-16,
};
pub const TWO_PI: Dd = Dd {
    hi: 6.283185307179586,
    lo: 2.4492935982947064e-16,
};
pub const HALF_PI: Dd = Dd {
    hi: 1.5707963267948966,
    lo: 6.123233995736766e-17,
};
pub const LN_2: Dd = Dd {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};
pub const LN_10: Dd = Dd {
    hi: 2.302585092994046,
    lo: -2.1707562233822494e-16,
};
pub const LN_TWO_PI: Dd = Dd {
    hi: 1.8378770664093456,
    lo: -7.756588316134483e-17,
};
pub const EULER_GAMMA: Dd = Dd {
    hi: 0.5772156649015329,
    lo: -4.942915152430645e-18,
};
/// ln A where A is the Glaisher-Kinkelin constant; ln A = 1/12 - zeta'(-1).
pub const LN_GLAISHER: Dd = Dd {
    hi: 0.24875447703378425,
    lo: 7.755882066780179e-18,
};

/// b_n = B_{2n}/((2n)(2n-1)), n = 1.., for the log-gamma asymptotic series.
pub const STIRLING_COEFFS: [Dd; 24] = [
    Dd { hi: 0.08333333333333333, lo: 4.625929269271485e-18 },
    Dd { hi: -0.002777777777777778, lo: 1.0601087908747154e-19 },
    Dd { hi: 0.0007936507936507937, lo: 6.883823317368282e-22 },
    Dd { hi: -0.0005952380952380953, lo: 5.36938218754726e-20 },
    Dd { hi: 0.0008417508417508417, lo: 3.6870174889237694e-20 },
    Dd { hi: -0.0019175269175269176, lo: 1.0675702776872475e-19 },
    Dd { hi: 0.00641025641025641, lo: 2.2240044563805217e-19 },
    Dd { hi: -0.029550653594771242, lo: 4.861760957508855e-19 },
    Dd { hi: 0.17964437236883057, lo: -6.401600482710946e-19 },
    Dd { hi: -1.3924322169059011, lo: 1.5837056989230303e-17 },
    Dd { hi: 13.402864044168393, lo: -6.154114101993966e-16 },
    Dd { hi: -156.84828462600203, lo: 9.391823141715389e-15 },
    Dd { hi: 2193.1033333333335, lo: -1.3339255626002948e-13 },
    Dd { hi: -36108.77125372499, lo: 5.897583353514365e-13 },
    Dd { hi: 691472.268851313, lo: 2.5585296305158e-11 },
    Dd { hi: -15238221.539407415, lo: -8.76774522490625e-10 },
    Dd { hi: 382900751.39141417, lo: -2.4082684757733585e-08 },
    Dd { hi: -10882266035.784391, lo: 3.141830930219749e-07 },
    Dd { hi: 347320283765.00226, lo: -6.048528997747748e-06 },
    Dd { hi: -12369602142269.275, lo: 0.0009363732896507286 },
    Dd { hi: 488788064793079.3, lo: 0.022575815162518022 },
    Dd { hi: -2.1320333960919372e+16, lo: -1.8969750589821368 },
    Dd { hi: 1.0217752965257001e+18, lo: -18.434712371946414 },
    Dd { hi: -5.35754721733002e+19, lo: -90.8277091919692 },
];

/// c_k = B_{2k+2}/((2k)(2k+1)(2k+2)), k = 1.., for the log Barnes-G asymptotic series.
pub const BARNES_TAIL_COEFFS: [Dd; 18] = [
    Dd { hi: -0.001388888888888889, lo: 5.300543954373577e-20 },
    Dd { hi: 0.0001984126984126984, lo: 1.7209558293420705e-22 },
    Dd { hi: -9.92063492063492e-05, lo: -8.604779146710353e-23 },
    Dd { hi: 0.00010521885521885521, lo: 4.608771861154712e-21 },
    Dd { hi: -0.00019175269175269175, lo: -1.6631894798256933e-22 },
    Dd { hi: 0.0005341880341880342, lo: -5.374677436252928e-20 },
    Dd { hi: -0.0021107609710550885, lo: -2.1309077544305204e-19 },
    Dd { hi: 0.01122777327305191, lo: -4.001000301694341e-20 },
    Dd { hi: -0.07735734538366117, lo: -6.830045616050792e-18 },
    Dd { hi: 0.6701432022084196, lo: -8.566110017466702e-18 },
    Dd { hi: -7.1294674830000915, lo: -2.1904688970393702e-16 },
    Dd { hi: 91.37930555555556, lo: -5.5580231775012284e-15 },
    Dd { hi: -1388.7988943740381, lo: 7.515386107733958e-14 },
    Dd { hi: 24695.43817326118, lo: 9.137605823270714e-13 },
    Dd { hi: -507940.7179802472, lo: 1.734031131441976e-11 },
    Dd { hi: 11965648.480981693, lo: -7.525838986791745e-10 },
    Dd { hi: -320066648.1113056, lo: -2.5820876543701105e-08 },
    Dd { hi: 9647785660.138952, lo: -8.037975719860485e-07 },
];

/// f64 truncation of `STIRLING_COEFFS`.
pub const STIRLING_COEFFS_F64: [f64; 12] = [
    0.08333333333333333,
    -0.002777777777777778,
    0.0007936507936507937,
    -0.0005952380952380953,
    0.0008417508417508417,
    -0.0019175269175269176,
    0.00641025641025641,
    -0.029550653594771242,
    0.17964437236883057,
    -1.3924322169059011,
    13.402864044168393,
    -156.84828462600203,
];

/// f64 truncation of `BARNES_TAIL_COEFFS`.
pub const BARNES_TAIL_COEFFS_F64: [f64; 10] = [
    -0.001388888888888889,
    0.0001984126984126984,
    -9.92063492063492e-05,
    0.00010521885521885521,
    -0.00019175269175269175,
    0.0005341880341880342,
    -0.0021107609710550885,
    0.01122777327305191,
    -0.07735734538366117,
    0.6701432022084196,
];
