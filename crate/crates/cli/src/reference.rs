//! Published values of the reduced integral `I(u)` with the cosine family,
//! used as table defaults and by `verify`.

pub struct PublishedTable {
    pub lambda: f64,
    pub s0: [f64; 5],
    pub lengths: [f64; 6],
    pub cells: [[f64; 6]; 5],
    /// First `L` with `I(u) < 0` per row, if inside the grid.
    pub first_negative: [Option<f64>; 5],
    /// Absolute tolerance matching the printed precision.
    pub tolerance: f64,
}

pub const TABLES: [PublishedTable; 3] = [
    PublishedTable {
        lambda: 0.25,
        s0: [3.0, 4.0, 5.0, 6.0, 7.0],
        lengths: [15.0, 20.0, 25.0, 30.0, 35.0, 40.0],
        cells: [
            [0.2405, 0.0102, -0.0962, -0.1541, -0.1891, -0.2117],
            [0.3229, 0.0158, -0.1262, -0.2034, -0.2499, -0.2802],
            [0.5434, 0.1596, -0.0180, -0.1145, -0.1727, -0.2104],
            [0.8320, 0.3715, 0.1583, 0.0425, -0.0273, -0.0726],
            [1.1585, 0.6211, 0.3724, 0.2373, 0.1558, 0.1030],
        ],
        first_negative: [Some(25.0), Some(25.0), Some(25.0), Some(35.0), None],
        tolerance: 5e-4,
    },
    PublishedTable {
        lambda: 0.5,
        s0: [2.0, 4.0, 6.0, 8.0, 10.0],
        lengths: [10.0, 12.0, 14.0, 16.0, 18.0, 20.0],
        cells: [
            [0.2486, 0.0074, -0.1380, -0.2324, -0.2971, -0.3434],
            [0.3297, -0.1527, -0.4436, -0.6324, -0.7619, -0.8545],
            [1.1578, 0.4340, -0.0023, -0.2856, -0.4798, -0.61872],
            [2.1681, 1.2030, 0.6212, 0.2435, -0.0153, -0.2005],
            [3.2460, 2.0397, 1.3124, 0.8403, 0.51667, 0.2851],
        ],
        first_negative: [Some(14.0), Some(12.0), Some(14.0), Some(18.0), None],
        tolerance: 1e-3,
    },
    PublishedTable {
        lambda: 0.75,
        s0: [2.0, 4.0, 6.0, 8.0, 10.0],
        lengths: [2.0, 4.0, 6.0, 8.0, 10.0, 12.0],
        cells: [
            [18.3781, 3.5737, 0.832, -0.1273, -0.5715, -0.8127],
            [37.1420, 7.5332, 2.0501, 0.1310, -0.7572, -1.2397],
            [56.7298, 12.3166, 4.0918, 1.2132, -0.1191, -0.8429],
            [76.5192, 17.3016, 6.3353, 2.4972, 0.7206, -0.2443],
            [96.3834, 22.3613, 8.6535, 3.8558, 1.6351, 0.4288],
        ],
        first_negative: [Some(8.0), Some(10.0), Some(10.0), Some(12.0), None],
        tolerance: 1e-3,
    },
];

pub fn published(lambda: f64) -> Option<&'static PublishedTable> {
    TABLES.iter().find(|t| t.lambda == lambda)
}

/// `I(u)` at λ = 1/4, s0 = 3, L = 4 as quoted alongside the tables.
pub const ROUTINE_VALUE: f64 = 7.1166;

/// The three λ = 1 component integrals as printed, for `f = (s² − s0²)e^{−α3/2}`:
/// gradient, curvature and mass terms.
pub fn printed_eq1_components(s0: f64) -> (f64, f64, f64) {
    let s2 = s0 * s0;
    let poly = s2 * s2 - 2.0 * s2 - 3.0;
    let at = s0.atan();
    let grad = 11.0 * s0 * s2 / 3.0 + 3.0 * s0 * poly * at;
    let curvature = -2.0 * (s0 * (s2 + 3.0) + poly * at);
    let mass = 16.0 * s0.powi(5) / 15.0;
    (grad, curvature, mass)
}
