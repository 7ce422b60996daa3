//! Published Monte Carlo summaries for the preset families, used to render
//! side-by-side comparisons. Values are as printed (three or four decimals);
//! cells that were not printed are `None`.

use serde::Serialize;

use super::metrics::MetricsTable;
use super::presets::PresetTable;
use super::Estimator;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PublishedCell {
    pub table: &'static str,
    pub n: usize,
    /// Position in `(theta, beta)` order.
    pub parameter: usize,
    pub truth: f64,
    pub estimator: Estimator,
    pub mean: f64,
    pub abs_bias: f64,
    pub mse: Option<f64>,
    pub cp: Option<f64>,
}

#[allow(clippy::too_many_arguments)]
const fn r(
    table: &'static str,
    n: usize,
    parameter: usize,
    truth: f64,
    estimator: Estimator,
    mean: f64,
    abs_bias: f64,
    mse: Option<f64>,
    cp: Option<f64>,
) -> PublishedCell {
    PublishedCell {
        table,
        n,
        parameter,
        truth,
        estimator,
        mean,
        abs_bias,
        mse,
        cp,
    }
}

pub static PUBLISHED: &[PublishedCell] = &[
    r(
        "t2",
        60,
        0,
        1.0,
        Estimator::Whole,
        1.071,
        0.071,
        Some(0.3552),
        Some(0.952),
    ),
    r(
        "t2",
        60,
        0,
        1.0,
        Estimator::Cc,
        1.926,
        0.926,
        Some(1.3276),
        Some(0.792),
    ),
    r(
        "t2",
        60,
        0,
        1.0,
        Estimator::Em,
        1.275,
        0.275,
        Some(0.6894),
        Some(0.881),
    ),
    r(
        "t2",
        60,
        1,
        -0.6,
        Estimator::Whole,
        -0.663,
        0.063,
        Some(0.3302),
        Some(0.951),
    ),
    r(
        "t2",
        60,
        1,
        -0.6,
        Estimator::Cc,
        -0.279,
        0.321,
        Some(0.5397),
        Some(0.927),
    ),
    r(
        "t2",
        60,
        1,
        -0.6,
        Estimator::Em,
        -0.556,
        0.044,
        Some(0.4808),
        Some(0.924),
    ),
    r(
        "t2",
        60,
        2,
        -1.0,
        Estimator::Whole,
        -1.095,
        0.095,
        Some(0.459),
        Some(0.945),
    ),
    r(
        "t2",
        60,
        2,
        -1.0,
        Estimator::Cc,
        -1.49,
        0.49,
        Some(0.8709),
        Some(0.931),
    ),
    r(
        "t2",
        60,
        2,
        -1.0,
        Estimator::Em,
        -1.216,
        0.216,
        Some(0.6465),
        Some(0.931),
    ),
    r(
        "t2",
        60,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0002),
        Some(0.958),
    ),
    r(
        "t2",
        60,
        3,
        0.005,
        Estimator::Cc,
        0.017,
        0.012,
        Some(0.0004),
        Some(0.914),
    ),
    r(
        "t2",
        60,
        3,
        0.005,
        Estimator::Em,
        0.01,
        0.008,
        Some(0.0003),
        Some(0.937),
    ),
    r(
        "t2",
        60,
        4,
        -0.1,
        Estimator::Whole,
        -0.11,
        0.01,
        Some(0.001),
        Some(0.951),
    ),
    r(
        "t2",
        60,
        4,
        -0.1,
        Estimator::Cc,
        -0.131,
        0.031,
        Some(0.0023),
        Some(0.914),
    ),
    r(
        "t2",
        60,
        4,
        -0.1,
        Estimator::Em,
        -0.118,
        0.018,
        Some(0.0016),
        Some(0.948),
    ),
    r(
        "t2",
        150,
        0,
        1.0,
        Estimator::Whole,
        1.019,
        0.019,
        Some(0.1183),
        Some(0.95),
    ),
    r(
        "t2",
        150,
        0,
        1.0,
        Estimator::Cc,
        1.809,
        0.809,
        Some(0.8126),
        Some(0.495),
    ),
    r(
        "t2",
        150,
        0,
        1.0,
        Estimator::Em,
        1.098,
        0.098,
        Some(0.1967),
        Some(0.934),
    ),
    r(
        "t2",
        150,
        1,
        -0.6,
        Estimator::Whole,
        -0.615,
        0.015,
        Some(0.1069),
        Some(0.954),
    ),
    r(
        "t2",
        150,
        1,
        -0.6,
        Estimator::Cc,
        -0.24,
        0.36,
        Some(0.2682),
        Some(0.838),
    ),
    r(
        "t2",
        150,
        1,
        -0.6,
        Estimator::Em,
        -0.577,
        0.023,
        Some(0.1254),
        Some(0.951),
    ),
    r(
        "t2",
        150,
        2,
        -1.0,
        Estimator::Whole,
        -1.033,
        0.033,
        Some(0.1601),
        Some(0.949),
    ),
    r(
        "t2",
        150,
        2,
        -1.0,
        Estimator::Cc,
        -1.39,
        0.39,
        Some(0.3557),
        Some(0.874),
    ),
    r(
        "t2",
        150,
        2,
        -1.0,
        Estimator::Em,
        -1.077,
        0.077,
        Some(0.1869),
        Some(0.942),
    ),
    r(
        "t2",
        150,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0001),
        Some(0.949),
    ),
    r(
        "t2",
        150,
        3,
        0.005,
        Estimator::Cc,
        0.015,
        0.01,
        Some(0.0002),
        Some(0.83),
    ),
    r(
        "t2",
        150,
        3,
        0.005,
        Estimator::Em,
        0.007,
        0.002,
        Some(0.0001),
        Some(0.94),
    ),
    r(
        "t2",
        150,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0003),
        Some(0.956),
    ),
    r(
        "t2",
        150,
        4,
        -0.1,
        Estimator::Cc,
        -0.121,
        0.021,
        Some(0.0008),
        Some(0.872),
    ),
    r(
        "t2",
        150,
        4,
        -0.1,
        Estimator::Em,
        -0.106,
        0.006,
        Some(0.0004),
        Some(0.959),
    ),
    r(
        "t2",
        250,
        0,
        1.0,
        Estimator::Whole,
        1.013,
        0.013,
        Some(0.0669),
        Some(0.957),
    ),
    r(
        "t2",
        250,
        0,
        1.0,
        Estimator::Cc,
        1.787,
        0.787,
        Some(0.7069),
        Some(0.265),
    ),
    r(
        "t2",
        250,
        0,
        1.0,
        Estimator::Em,
        1.045,
        0.045,
        Some(0.0932),
        Some(0.946),
    ),
    r(
        "t2",
        250,
        1,
        -0.6,
        Estimator::Whole,
        -0.618,
        0.018,
        Some(0.063),
        Some(0.954),
    ),
    r(
        "t2",
        250,
        1,
        -0.6,
        Estimator::Cc,
        -0.256,
        0.344,
        Some(0.1985),
        Some(0.763),
    ),
    r(
        "t2",
        250,
        1,
        -0.6,
        Estimator::Em,
        -0.606,
        0.006,
        Some(0.0703),
        Some(0.947),
    ),
    r(
        "t2",
        250,
        2,
        -1.0,
        Estimator::Whole,
        -1.021,
        0.021,
        Some(0.0844),
        Some(0.954),
    ),
    r(
        "t2",
        250,
        2,
        -1.0,
        Estimator::Cc,
        -1.369,
        0.369,
        Some(0.245),
        Some(0.824),
    ),
    r(
        "t2",
        250,
        2,
        -1.0,
        Estimator::Em,
        -1.036,
        0.036,
        Some(0.0938),
        Some(0.953),
    ),
    r(
        "t2",
        250,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.944),
    ),
    r(
        "t2",
        250,
        3,
        0.005,
        Estimator::Cc,
        0.015,
        0.01,
        Some(0.0002),
        Some(0.739),
    ),
    r(
        "t2",
        250,
        3,
        0.005,
        Estimator::Em,
        0.006,
        0.001,
        Some(0.0),
        Some(0.956),
    ),
    r(
        "t2",
        250,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0002),
        Some(0.939),
    ),
    r(
        "t2",
        250,
        4,
        -0.1,
        Estimator::Cc,
        -0.12,
        0.02,
        Some(0.0006),
        Some(0.771),
    ),
    r(
        "t2",
        250,
        4,
        -0.1,
        Estimator::Em,
        -0.104,
        0.004,
        Some(0.0002),
        Some(0.937),
    ),
    r(
        "t2",
        500,
        0,
        1.0,
        Estimator::Whole,
        1.011,
        0.011,
        Some(0.0354),
        Some(0.943),
    ),
    r(
        "t2",
        500,
        0,
        1.0,
        Estimator::Cc,
        1.784,
        0.784,
        Some(0.6621),
        Some(0.044),
    ),
    r(
        "t2",
        500,
        0,
        1.0,
        Estimator::Em,
        1.031,
        0.031,
        Some(0.0474),
        Some(0.945),
    ),
    r(
        "t2",
        500,
        1,
        -0.6,
        Estimator::Whole,
        -0.605,
        0.005,
        Some(0.0318),
        Some(0.942),
    ),
    r(
        "t2",
        500,
        1,
        -0.6,
        Estimator::Cc,
        -0.242,
        0.358,
        Some(0.1689),
        Some(0.544),
    ),
    r(
        "t2",
        500,
        1,
        -0.6,
        Estimator::Em,
        -0.597,
        0.003,
        Some(0.0329),
        Some(0.945),
    ),
    r(
        "t2",
        500,
        2,
        -1.0,
        Estimator::Whole,
        -1.01,
        0.01,
        Some(0.0437),
        Some(0.944),
    ),
    r(
        "t2",
        500,
        2,
        -1.0,
        Estimator::Cc,
        -1.357,
        0.357,
        Some(0.1818),
        Some(0.683),
    ),
    r(
        "t2",
        500,
        2,
        -1.0,
        Estimator::Em,
        -1.024,
        0.024,
        Some(0.0492),
        Some(0.941),
    ),
    r(
        "t2",
        500,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.942),
    ),
    r(
        "t2",
        500,
        3,
        0.005,
        Estimator::Cc,
        0.015,
        0.01,
        Some(0.0001),
        Some(0.49),
    ),
    r(
        "t2",
        500,
        3,
        0.005,
        Estimator::Em,
        0.006,
        0.001,
        Some(0.0),
        Some(0.93),
    ),
    r(
        "t2",
        500,
        4,
        -0.1,
        Estimator::Whole,
        -0.101,
        0.001,
        None,
        Some(0.957),
    ),
    r(
        "t2",
        500,
        4,
        -0.1,
        Estimator::Cc,
        -0.118,
        0.018,
        None,
        Some(0.618),
    ),
    r(
        "t2",
        500,
        4,
        -0.1,
        Estimator::Em,
        -0.099,
        0.002,
        None,
        Some(0.958),
    ),
    r(
        "t2",
        1000,
        0,
        1.0,
        Estimator::Whole,
        1.001,
        0.001,
        Some(0.0161),
        Some(0.955),
    ),
    r(
        "t2",
        1000,
        0,
        1.0,
        Estimator::Cc,
        1.764,
        0.764,
        Some(0.6041),
        Some(0.0),
    ),
    r(
        "t2",
        1000,
        0,
        1.0,
        Estimator::Em,
        1.007,
        0.007,
        Some(0.0201),
        Some(0.956),
    ),
    r(
        "t2",
        1000,
        1,
        -0.6,
        Estimator::Whole,
        -0.607,
        0.007,
        Some(0.0155),
        Some(0.946),
    ),
    r(
        "t2",
        1000,
        1,
        -0.6,
        Estimator::Cc,
        -0.247,
        0.353,
        Some(0.1443),
        Some(0.283),
    ),
    r(
        "t2",
        1000,
        1,
        -0.6,
        Estimator::Em,
        -0.604,
        0.004,
        Some(0.0159),
        Some(0.948),
    ),
    r(
        "t2",
        1000,
        2,
        -1.0,
        Estimator::Whole,
        -1.001,
        0.001,
        Some(0.0199),
        Some(0.949),
    ),
    r(
        "t2",
        1000,
        2,
        -1.0,
        Estimator::Cc,
        -1.342,
        0.342,
        Some(0.1421),
        Some(0.452),
    ),
    r(
        "t2",
        1000,
        2,
        -1.0,
        Estimator::Em,
        -1.005,
        0.005,
        Some(0.0218),
        Some(0.952),
    ),
    r(
        "t2",
        1000,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.947),
    ),
    r(
        "t2",
        1000,
        3,
        0.005,
        Estimator::Cc,
        0.015,
        0.01,
        Some(0.0001),
        Some(0.225),
    ),
    r(
        "t2",
        1000,
        3,
        0.005,
        Estimator::Em,
        0.005,
        0.0,
        Some(0.0),
        Some(0.955),
    ),
    r(
        "t2",
        1000,
        4,
        -0.1,
        Estimator::Whole,
        -0.1,
        0.0,
        Some(0.0),
        Some(0.94),
    ),
    r(
        "t2",
        1000,
        4,
        -0.1,
        Estimator::Cc,
        -0.117,
        0.017,
        Some(0.0003),
        Some(0.344),
    ),
    r(
        "t2",
        1000,
        4,
        -0.1,
        Estimator::Em,
        -0.101,
        0.001,
        Some(0.0001),
        Some(0.934),
    ),
    r(
        "t3",
        60,
        0,
        1.0,
        Estimator::Whole,
        1.071,
        0.071,
        Some(0.3552),
        Some(0.952),
    ),
    r(
        "t3",
        60,
        0,
        1.0,
        Estimator::Cc,
        2.973,
        1.973,
        Some(5.1162),
        Some(0.451),
    ),
    r(
        "t3",
        60,
        0,
        1.0,
        Estimator::Em,
        1.446,
        0.446,
        Some(1.6538),
        Some(0.899),
    ),
    r(
        "t3",
        60,
        1,
        -0.6,
        Estimator::Whole,
        -0.663,
        0.82,
        Some(0.3302),
        Some(0.951),
    ),
    r(
        "t3",
        60,
        1,
        -0.6,
        Estimator::Cc,
        -0.22,
        1.133,
        Some(1.5607),
        Some(0.837),
    ),
    r(
        "t3",
        60,
        1,
        -0.6,
        Estimator::Em,
        -0.472,
        0.128,
        Some(0.8903),
        Some(0.928),
    ),
    r(
        "t3",
        60,
        2,
        -1.0,
        Estimator::Whole,
        -1.095,
        0.095,
        Some(0.459),
        Some(0.945),
    ),
    r(
        "t3",
        60,
        2,
        -1.0,
        Estimator::Cc,
        -1.805,
        0.805,
        Some(1.9163),
        Some(0.912),
    ),
    r(
        "t3",
        60,
        2,
        -1.0,
        Estimator::Em,
        -1.3,
        0.3,
        Some(1.1524),
        Some(0.942),
    ),
    r(
        "t3",
        60,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0002),
        Some(0.958),
    ),
    r(
        "t3",
        60,
        3,
        0.005,
        Estimator::Cc,
        0.024,
        0.019,
        Some(0.0009),
        Some(0.884),
    ),
    r(
        "t3",
        60,
        3,
        0.005,
        Estimator::Em,
        0.01,
        0.005,
        Some(0.0004),
        Some(0.928),
    ),
    r(
        "t3",
        60,
        4,
        -0.1,
        Estimator::Whole,
        -0.11,
        0.01,
        Some(0.001),
        Some(0.951),
    ),
    r(
        "t3",
        60,
        4,
        -0.1,
        Estimator::Cc,
        -0.147,
        0.047,
        Some(0.0043),
        Some(0.895),
    ),
    r(
        "t3",
        60,
        4,
        -0.1,
        Estimator::Em,
        -0.124,
        0.024,
        Some(0.0025),
        Some(0.934),
    ),
    r(
        "t3",
        150,
        0,
        1.0,
        Estimator::Whole,
        1.019,
        0.019,
        Some(0.1183),
        Some(0.95),
    ),
    r(
        "t3",
        150,
        0,
        1.0,
        Estimator::Cc,
        2.702,
        1.702,
        Some(3.1716),
        Some(0.06),
    ),
    r(
        "t3",
        150,
        0,
        1.0,
        Estimator::Em,
        1.083,
        0.083,
        Some(0.2753),
        Some(0.943),
    ),
    r(
        "t3",
        150,
        1,
        -0.6,
        Estimator::Whole,
        -0.615,
        0.015,
        Some(0.1069),
        Some(0.954),
    ),
    r(
        "t3",
        150,
        1,
        -0.6,
        Estimator::Cc,
        -0.206,
        0.806,
        Some(0.8648),
        Some(0.539),
    ),
    r(
        "t3",
        150,
        1,
        -0.6,
        Estimator::Em,
        -0.578,
        0.022,
        Some(0.1376),
        Some(0.955),
    ),
    r(
        "t3",
        150,
        2,
        -1.0,
        Estimator::Whole,
        -1.033,
        0.033,
        Some(0.1601),
        Some(0.949),
    ),
    r(
        "t3",
        150,
        2,
        -1.0,
        Estimator::Cc,
        -1.619,
        0.619,
        Some(0.6831),
        Some(0.815),
    ),
    r(
        "t3",
        150,
        2,
        -1.0,
        Estimator::Em,
        -1.072,
        0.072,
        Some(0.2257),
        Some(0.946),
    ),
    r(
        "t3",
        150,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0001),
        Some(0.949),
    ),
    r(
        "t3",
        150,
        3,
        0.005,
        Estimator::Cc,
        0.022,
        0.017,
        Some(0.0004),
        Some(0.692),
    ),
    r(
        "t3",
        150,
        3,
        0.005,
        Estimator::Em,
        0.006,
        0.001,
        Some(0.0001),
        Some(0.95),
    ),
    r(
        "t3",
        150,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0003),
        Some(0.956),
    ),
    r(
        "t3",
        150,
        4,
        -0.1,
        Estimator::Cc,
        -0.132,
        0.032,
        Some(0.0015),
        Some(0.766),
    ),
    r(
        "t3",
        150,
        4,
        -0.1,
        Estimator::Em,
        -0.106,
        0.006,
        Some(0.0005),
        Some(0.964),
    ),
    r(
        "t3",
        250,
        0,
        1.0,
        Estimator::Whole,
        1.013,
        0.013,
        Some(0.0669),
        Some(0.957),
    ),
    r(
        "t3",
        250,
        0,
        1.0,
        Estimator::Cc,
        2.669,
        1.669,
        Some(2.9314),
        Some(0.003),
    ),
    r(
        "t3",
        250,
        0,
        1.0,
        Estimator::Em,
        1.045,
        0.045,
        Some(0.1332),
        Some(0.952),
    ),
    r(
        "t3",
        250,
        1,
        -0.6,
        Estimator::Whole,
        -0.618,
        0.018,
        Some(0.063),
        Some(0.954),
    ),
    r(
        "t3",
        250,
        1,
        -0.6,
        Estimator::Cc,
        0.187,
        0.787,
        Some(0.7346),
        Some(0.335),
    ),
    r(
        "t3",
        250,
        1,
        -0.6,
        Estimator::Em,
        -0.6,
        0.0,
        Some(0.0731),
        Some(0.959),
    ),
    r(
        "t3",
        250,
        2,
        -1.0,
        Estimator::Whole,
        -1.021,
        0.021,
        Some(0.0844),
        Some(0.954),
    ),
    r(
        "t3",
        250,
        2,
        -1.0,
        Estimator::Cc,
        -1.6,
        0.6,
        Some(0.5102),
        Some(0.711),
    ),
    r(
        "t3",
        250,
        2,
        -1.0,
        Estimator::Em,
        -1.044,
        0.044,
        Some(0.112),
        Some(0.956),
    ),
    r(
        "t3",
        250,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.944),
    ),
    r(
        "t3",
        250,
        3,
        0.005,
        Estimator::Cc,
        0.021,
        0.016,
        Some(0.0003),
        Some(0.561),
    ),
    r(
        "t3",
        250,
        3,
        0.005,
        Estimator::Em,
        0.005,
        0.0,
        Some(0.0001),
        Some(0.96),
    ),
    r(
        "t3",
        250,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0002),
        Some(0.939),
    ),
    r(
        "t3",
        250,
        4,
        -0.1,
        Estimator::Cc,
        -0.131,
        0.031,
        Some(0.0012),
        Some(0.577),
    ),
    r(
        "t3",
        250,
        4,
        -0.1,
        Estimator::Em,
        -0.104,
        0.004,
        Some(0.0003),
        Some(0.939),
    ),
    r(
        "t3",
        500,
        0,
        1.0,
        Estimator::Whole,
        1.011,
        0.011,
        Some(0.0354),
        Some(0.943),
    ),
    r(
        "t3",
        500,
        0,
        1.0,
        Estimator::Cc,
        2.637,
        1.637,
        Some(2.7559),
        Some(0.0),
    ),
    r(
        "t3",
        500,
        0,
        1.0,
        Estimator::Em,
        1.04,
        0.04,
        Some(0.0707),
        Some(0.943),
    ),
    r(
        "t3",
        500,
        1,
        -0.6,
        Estimator::Whole,
        -0.605,
        0.005,
        Some(0.0318),
        Some(0.942),
    ),
    r(
        "t3",
        500,
        1,
        -0.6,
        Estimator::Cc,
        0.195,
        0.795,
        Some(0.6892),
        Some(0.064),
    ),
    r(
        "t3",
        500,
        1,
        -0.6,
        Estimator::Em,
        -0.591,
        0.009,
        Some(0.0379),
        Some(0.946),
    ),
    r(
        "t3",
        500,
        2,
        -1.0,
        Estimator::Whole,
        -1.01,
        0.01,
        Some(0.0437),
        Some(0.944),
    ),
    r(
        "t3",
        500,
        2,
        -1.0,
        Estimator::Cc,
        -1.581,
        0.581,
        Some(0.4149),
        Some(0.463),
    ),
    r(
        "t3",
        500,
        2,
        -1.0,
        Estimator::Em,
        -1.03,
        0.03,
        Some(0.059),
        Some(0.94),
    ),
    r(
        "t3",
        500,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.942),
    ),
    r(
        "t3",
        500,
        3,
        0.005,
        Estimator::Cc,
        0.022,
        0.017,
        Some(0.0003),
        Some(0.215),
    ),
    r(
        "t3",
        500,
        3,
        0.005,
        Estimator::Em,
        0.006,
        0.001,
        Some(0.0),
        Some(0.935),
    ),
    r(
        "t3",
        500,
        4,
        -0.1,
        Estimator::Whole,
        -0.101,
        0.001,
        Some(0.0001),
        Some(0.957),
    ),
    r(
        "t3",
        500,
        4,
        -0.1,
        Estimator::Cc,
        -0.128,
        0.028,
        Some(0.0009),
        Some(0.316),
    ),
    r(
        "t3",
        500,
        4,
        -0.1,
        Estimator::Em,
        -0.102,
        0.002,
        Some(0.0001),
        Some(0.959),
    ),
    r(
        "t3",
        1000,
        0,
        1.0,
        Estimator::Whole,
        1.001,
        0.001,
        Some(0.0161),
        Some(0.955),
    ),
    r(
        "t3",
        1000,
        0,
        1.0,
        Estimator::Cc,
        2.609,
        1.609,
        Some(2.6223),
        Some(0.0),
    ),
    r(
        "t3",
        1000,
        0,
        1.0,
        Estimator::Em,
        1.006,
        0.006,
        Some(0.0297),
        Some(0.944),
    ),
    r(
        "t3",
        1000,
        1,
        -0.6,
        Estimator::Whole,
        -0.607,
        0.007,
        Some(0.0155),
        Some(0.946),
    ),
    r(
        "t3",
        1000,
        1,
        -0.6,
        Estimator::Cc,
        0.182,
        0.782,
        Some(0.6367),
        Some(0.0),
    ),
    r(
        "t3",
        1000,
        1,
        -0.6,
        Estimator::Em,
        -0.603,
        0.003,
        Some(0.0172),
        Some(0.949),
    ),
    r(
        "t3",
        1000,
        2,
        -1.0,
        Estimator::Whole,
        -1.001,
        0.001,
        Some(0.0199),
        Some(0.949),
    ),
    r(
        "t3",
        1000,
        2,
        -1.0,
        Estimator::Cc,
        -1.554,
        0.554,
        Some(0.3411),
        Some(0.163),
    ),
    r(
        "t3",
        1000,
        2,
        -1.0,
        Estimator::Em,
        -1.006,
        0.006,
        Some(0.0253),
        Some(0.951),
    ),
    r(
        "t3",
        1000,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.947),
    ),
    r(
        "t3",
        1000,
        3,
        0.005,
        Estimator::Cc,
        0.021,
        0.016,
        Some(0.0003),
        Some(0.041),
    ),
    r(
        "t3",
        1000,
        3,
        0.005,
        Estimator::Em,
        0.005,
        0.0,
        Some(0.0),
        Some(0.946),
    ),
    r(
        "t3",
        1000,
        4,
        -0.1,
        Estimator::Whole,
        -0.1,
        0.0,
        Some(0.0),
        Some(0.94),
    ),
    r(
        "t3",
        1000,
        4,
        -0.1,
        Estimator::Cc,
        -0.127,
        0.027,
        Some(0.0008),
        Some(0.074),
    ),
    r(
        "t3",
        1000,
        4,
        -0.1,
        Estimator::Em,
        -0.101,
        0.001,
        Some(0.0001),
        Some(0.935),
    ),
    r(
        "t4",
        60,
        0,
        1.0,
        Estimator::Whole,
        1.071,
        0.071,
        Some(0.3552),
        Some(0.952),
    ),
    r(
        "t4",
        60,
        0,
        1.0,
        Estimator::Cc,
        5.598,
        4.598,
        Some(33.3628),
        Some(0.326),
    ),
    r(
        "t4",
        60,
        0,
        1.0,
        Estimator::Em,
        2.056,
        1.056,
        Some(6.1152),
        Some(0.888),
    ),
    r(
        "t4",
        60,
        1,
        -0.6,
        Estimator::Whole,
        -0.663,
        0.063,
        Some(0.3302),
        Some(0.951),
    ),
    r(
        "t4",
        60,
        1,
        -0.6,
        Estimator::Cc,
        1.754,
        2.354,
        Some(11.0449),
        Some(0.69),
    ),
    r(
        "t4",
        60,
        1,
        -0.6,
        Estimator::Em,
        -0.171,
        0.429,
        Some(2.7097),
        Some(0.906),
    ),
    r(
        "t4",
        60,
        2,
        -1.0,
        Estimator::Whole,
        -1.095,
        0.095,
        Some(0.459),
        Some(0.945),
    ),
    r(
        "t4",
        60,
        2,
        -1.0,
        Estimator::Cc,
        -2.85,
        1.85,
        Some(11.0145),
        Some(0.959),
    ),
    r(
        "t4",
        60,
        2,
        -1.0,
        Estimator::Em,
        -1.583,
        0.583,
        Some(2.9001),
        Some(0.949),
    ),
    r(
        "t4",
        60,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0002),
        Some(0.958),
    ),
    r(
        "t4",
        60,
        3,
        0.005,
        Estimator::Cc,
        0.04,
        0.034,
        Some(0.0035),
        Some(0.872),
    ),
    r(
        "t4",
        60,
        3,
        0.005,
        Estimator::Em,
        0.015,
        0.01,
        Some(0.0011),
        Some(0.926),
    ),
    r(
        "t4",
        60,
        4,
        -0.1,
        Estimator::Whole,
        -0.11,
        0.01,
        Some(0.001),
        Some(0.951),
    ),
    r(
        "t4",
        60,
        4,
        -0.1,
        Estimator::Cc,
        -0.181,
        0.081,
        Some(0.018),
        Some(0.96),
    ),
    r(
        "t4",
        60,
        4,
        -0.1,
        Estimator::Em,
        -0.14,
        0.04,
        Some(0.0068),
        Some(0.94),
    ),
    r(
        "t4",
        150,
        0,
        1.0,
        Estimator::Whole,
        1.019,
        0.019,
        Some(0.1183),
        Some(0.95),
    ),
    r(
        "t4",
        150,
        0,
        1.0,
        Estimator::Cc,
        4.298,
        3.298,
        Some(11.8009),
        Some(0.004),
    ),
    r(
        "t4",
        150,
        0,
        1.0,
        Estimator::Em,
        1.162,
        0.162,
        Some(0.9018),
        Some(0.888),
    ),
    r(
        "t4",
        150,
        1,
        -0.6,
        Estimator::Whole,
        -0.615,
        0.015,
        Some(0.1069),
        Some(0.954),
    ),
    r(
        "t4",
        150,
        1,
        -0.6,
        Estimator::Cc,
        1.214,
        1.814,
        Some(3.8526),
        Some(0.151),
    ),
    r(
        "t4",
        150,
        1,
        -0.6,
        Estimator::Em,
        -0.534,
        0.066,
        Some(0.2995),
        Some(0.942),
    ),
    r(
        "t4",
        150,
        2,
        -1.0,
        Estimator::Whole,
        -1.033,
        0.033,
        Some(0.1601),
        Some(0.949),
    ),
    r(
        "t4",
        150,
        2,
        -1.0,
        Estimator::Cc,
        -2.047,
        1.047,
        Some(1.8011),
        Some(0.786),
    ),
    r(
        "t4",
        150,
        2,
        -1.0,
        Estimator::Em,
        -1.109,
        0.109,
        Some(0.4155),
        Some(0.929),
    ),
    r(
        "t4",
        150,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0001),
        Some(0.958),
    ),
    r(
        "t4",
        150,
        3,
        0.005,
        Estimator::Cc,
        0.032,
        0.027,
        Some(0.001),
        Some(0.872),
    ),
    r(
        "t4",
        150,
        3,
        0.005,
        Estimator::Em,
        0.007,
        0.002,
        Some(0.0002),
        Some(0.926),
    ),
    r(
        "t4",
        150,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0003),
        Some(0.956),
    ),
    r(
        "t4",
        150,
        4,
        -0.1,
        Estimator::Cc,
        -0.146,
        0.046,
        Some(0.0032),
        Some(0.753),
    ),
    r(
        "t4",
        150,
        4,
        -0.1,
        Estimator::Em,
        -0.109,
        0.009,
        Some(0.0011),
        Some(0.938),
    ),
    r(
        "t4",
        250,
        0,
        1.0,
        Estimator::Whole,
        1.013,
        0.013,
        Some(0.0669),
        Some(0.957),
    ),
    r(
        "t4",
        250,
        0,
        1.0,
        Estimator::Cc,
        4.177,
        3.177,
        Some(10.5452),
        Some(0.0),
    ),
    r(
        "t4",
        250,
        0,
        1.0,
        Estimator::Em,
        1.064,
        0.064,
        Some(0.3269),
        Some(0.917),
    ),
    r(
        "t4",
        250,
        1,
        -0.6,
        Estimator::Whole,
        -0.618,
        0.018,
        Some(0.063),
        Some(0.954),
    ),
    r(
        "t4",
        250,
        1,
        -0.6,
        Estimator::Cc,
        1.135,
        1.735,
        Some(3.2883),
        Some(0.035),
    ),
    r(
        "t4",
        250,
        1,
        -0.6,
        Estimator::Em,
        -0.592,
        0.008,
        Some(0.1273),
        Some(0.954),
    ),
    r(
        "t4",
        250,
        2,
        -1.0,
        Estimator::Whole,
        -1.021,
        0.021,
        Some(0.0844),
        Some(0.954),
    ),
    r(
        "t4",
        250,
        2,
        -1.0,
        Estimator::Cc,
        -1.957,
        0.957,
        Some(1.2779),
        Some(0.628),
    ),
    r(
        "t4",
        250,
        2,
        -1.0,
        Estimator::Em,
        -1.054,
        0.054,
        Some(0.1862),
        Some(0.944),
    ),
    r(
        "t4",
        250,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.944),
    ),
    r(
        "t4",
        250,
        3,
        0.005,
        Estimator::Cc,
        0.03,
        0.025,
        Some(0.0008),
        Some(0.448),
    ),
    r(
        "t4",
        250,
        3,
        0.005,
        Estimator::Em,
        0.005,
        0.0,
        Some(0.0001),
        Some(0.948),
    ),
    r(
        "t4",
        250,
        4,
        -0.1,
        Estimator::Whole,
        -0.103,
        0.003,
        Some(0.0002),
        Some(0.939),
    ),
    r(
        "t4",
        250,
        4,
        -0.1,
        Estimator::Cc,
        -0.142,
        0.042,
        Some(0.0023),
        Some(0.527),
    ),
    r(
        "t4",
        250,
        4,
        -0.1,
        Estimator::Em,
        -0.105,
        0.005,
        Some(0.0004),
        Some(0.93),
    ),
    r(
        "t4",
        500,
        0,
        1.0,
        Estimator::Whole,
        1.011,
        0.011,
        Some(0.0354),
        Some(0.943),
    ),
    r(
        "t4",
        500,
        0,
        1.0,
        Estimator::Cc,
        4.095,
        3.095,
        Some(9.7817),
        Some(0.0),
    ),
    r(
        "t4",
        500,
        0,
        1.0,
        Estimator::Em,
        1.072,
        0.072,
        Some(0.1684),
        Some(0.93),
    ),
    r(
        "t4",
        500,
        1,
        -0.6,
        Estimator::Whole,
        -0.605,
        0.005,
        Some(0.0318),
        Some(0.942),
    ),
    r(
        "t4",
        500,
        1,
        -0.6,
        Estimator::Cc,
        1.118,
        1.718,
        Some(3.0653),
        Some(0.0),
    ),
    r(
        "t4",
        500,
        1,
        -0.6,
        Estimator::Em,
        -0.577,
        0.023,
        Some(0.0596),
        Some(0.939),
    ),
    r(
        "t4",
        500,
        2,
        -1.0,
        Estimator::Whole,
        -1.01,
        0.01,
        Some(0.0437),
        Some(0.944),
    ),
    r(
        "t4",
        500,
        2,
        -1.0,
        Estimator::Cc,
        -1.921,
        0.921,
        Some(1.0064),
        Some(0.324),
    ),
    r(
        "t4",
        500,
        2,
        -1.0,
        Estimator::Em,
        -1.048,
        0.048,
        Some(0.0917),
        Some(0.939),
    ),
    r(
        "t4",
        500,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.944),
    ),
    r(
        "t4",
        500,
        3,
        0.005,
        Estimator::Cc,
        0.03,
        0.025,
        Some(0.0007),
        Some(0.324),
    ),
    r(
        "t4",
        500,
        3,
        0.005,
        Estimator::Em,
        0.006,
        0.001,
        Some(0.0),
        Some(0.939),
    ),
    r(
        "t4",
        500,
        4,
        -0.1,
        Estimator::Whole,
        -0.101,
        0.001,
        Some(0.0001),
        Some(0.957),
    ),
    r(
        "t4",
        500,
        4,
        -0.1,
        Estimator::Cc,
        -0.139,
        0.039,
        Some(0.0018),
        Some(0.221),
    ),
    r(
        "t4",
        500,
        4,
        -0.1,
        Estimator::Em,
        -0.103,
        0.003,
        Some(0.0002),
        Some(0.942),
    ),
    r(
        "t4",
        1000,
        0,
        1.0,
        Estimator::Whole,
        1.0,
        0.0,
        Some(0.0162),
        Some(0.957),
    ),
    r(
        "t4",
        1000,
        0,
        1.0,
        Estimator::Cc,
        3.989,
        2.989,
        Some(9.0196),
        Some(0.0),
    ),
    r(
        "t4",
        1000,
        0,
        1.0,
        Estimator::Em,
        0.999,
        0.001,
        Some(0.0685),
        Some(0.932),
    ),
    r(
        "t4",
        1000,
        1,
        -0.6,
        Estimator::Whole,
        -0.608,
        0.008,
        Some(0.0151),
        Some(0.954),
    ),
    r(
        "t4",
        1000,
        1,
        -0.6,
        Estimator::Cc,
        1.082,
        1.682,
        Some(2.8807),
        Some(0.0),
    ),
    r(
        "t4",
        1000,
        1,
        -0.6,
        Estimator::Em,
        -0.605,
        0.005,
        Some(0.0255),
        Some(0.948),
    ),
    r(
        "t4",
        1000,
        2,
        -1.0,
        Estimator::Whole,
        -0.999,
        0.001,
        Some(0.0206),
        Some(0.948),
    ),
    r(
        "t4",
        1000,
        2,
        -1.0,
        Estimator::Cc,
        -1.85,
        0.85,
        Some(0.7945),
        Some(0.096),
    ),
    r(
        "t4",
        1000,
        2,
        -1.0,
        Estimator::Em,
        -1.001,
        0.001,
        Some(0.0391),
        Some(0.957),
    ),
    r(
        "t4",
        1000,
        3,
        0.005,
        Estimator::Whole,
        0.005,
        0.0,
        Some(0.0),
        Some(0.953),
    ),
    r(
        "t4",
        1000,
        3,
        0.005,
        Estimator::Cc,
        0.029,
        0.024,
        Some(0.0006),
        Some(0.015),
    ),
    r(
        "t4",
        1000,
        3,
        0.005,
        Estimator::Em,
        0.005,
        0.0,
        Some(0.0),
        Some(0.96),
    ),
    r(
        "t4",
        1000,
        4,
        -0.1,
        Estimator::Whole,
        -0.1,
        0.0,
        Some(0.0),
        Some(0.946),
    ),
    r(
        "t4",
        1000,
        4,
        -0.1,
        Estimator::Cc,
        -0.136,
        0.036,
        Some(0.0014),
        Some(0.032),
    ),
    r(
        "t4",
        1000,
        4,
        -0.1,
        Estimator::Em,
        -0.101,
        0.001,
        Some(0.0001),
        Some(0.938),
    ),
    r(
        "supp5",
        60,
        0,
        0.6,
        Estimator::Whole,
        0.658,
        0.058,
        Some(0.2442),
        Some(0.9395),
    ),
    r(
        "supp5",
        60,
        0,
        0.6,
        Estimator::Cc,
        1.724,
        1.124,
        Some(1.7381),
        Some(0.5937),
    ),
    r(
        "supp5",
        60,
        0,
        0.6,
        Estimator::Em,
        1.304,
        0.704,
        Some(1.2219),
        Some(0.7537),
    ),
    r(
        "supp5",
        60,
        1,
        0.5,
        Estimator::Whole,
        0.512,
        0.012,
        Some(0.2337),
        Some(0.9476),
    ),
    r(
        "supp5",
        60,
        1,
        0.5,
        Estimator::Cc,
        1.535,
        1.035,
        Some(1.5294),
        Some(0.6435),
    ),
    r(
        "supp5",
        60,
        1,
        0.5,
        Estimator::Em,
        1.143,
        0.643,
        Some(1.1247),
        Some(0.7671),
    ),
    r(
        "supp5",
        60,
        2,
        -0.2,
        Estimator::Whole,
        -0.216,
        0.016,
        Some(0.2228),
        Some(0.953),
    ),
    r(
        "supp5",
        60,
        2,
        -0.2,
        Estimator::Cc,
        0.633,
        0.833,
        Some(1.1047),
        Some(0.7115),
    ),
    r(
        "supp5",
        60,
        2,
        -0.2,
        Estimator::Em,
        0.381,
        0.582,
        Some(1.0045),
        Some(0.7704),
    ),
    r(
        "supp5",
        60,
        3,
        -0.7,
        Estimator::Whole,
        -0.76,
        0.06,
        Some(0.2375),
        Some(0.9476),
    ),
    r(
        "supp5",
        60,
        3,
        -0.7,
        Estimator::Cc,
        -0.022,
        0.678,
        Some(0.869),
        Some(0.7825),
    ),
    r(
        "supp5",
        60,
        3,
        -0.7,
        Estimator::Em,
        -0.185,
        0.515,
        Some(0.9555),
        Some(0.7787),
    ),
    r(
        "supp5",
        60,
        4,
        -1.3,
        Estimator::Whole,
        -1.394,
        0.094,
        Some(0.3619),
        Some(0.9476),
    ),
    r(
        "supp5",
        60,
        4,
        -1.3,
        Estimator::Cc,
        -2.034,
        0.734,
        Some(1.1417),
        Some(0.8459),
    ),
    r(
        "supp5",
        60,
        4,
        -1.3,
        Estimator::Em,
        -1.691,
        0.391,
        Some(0.7509),
        Some(0.9301),
    ),
    r(
        "supp5",
        60,
        5,
        0.008,
        Estimator::Whole,
        0.009,
        0.001,
        Some(0.0002),
        Some(0.957),
    ),
    r(
        "supp5",
        60,
        5,
        0.008,
        Estimator::Cc,
        0.01,
        0.002,
        Some(0.0003),
        Some(0.9532),
    ),
    r(
        "supp5",
        60,
        5,
        0.008,
        Estimator::Em,
        0.01,
        0.002,
        Some(0.0003),
        Some(0.9551),
    ),
    r(
        "supp5",
        60,
        6,
        -0.02,
        Estimator::Whole,
        -0.023,
        0.003,
        Some(0.0003),
        Some(0.9664),
    ),
    r(
        "supp5",
        60,
        6,
        -0.02,
        Estimator::Cc,
        -0.024,
        0.004,
        Some(0.0005),
        Some(0.9562),
    ),
    r(
        "supp5",
        60,
        6,
        -0.02,
        Estimator::Em,
        -0.023,
        0.003,
        Some(0.0004),
        Some(0.9418),
    ),
    r(
        "supp5",
        150,
        0,
        0.6,
        Estimator::Whole,
        0.602,
        0.002,
        Some(0.0839),
        Some(0.9593),
    ),
    r(
        "supp5",
        150,
        0,
        0.6,
        Estimator::Cc,
        1.571,
        0.971,
        Some(1.0701),
        Some(0.2287),
    ),
    r(
        "supp5",
        150,
        0,
        0.6,
        Estimator::Em,
        0.972,
        0.372,
        Some(0.5121),
        Some(0.7837),
    ),
    r(
        "supp5",
        150,
        1,
        0.5,
        Estimator::Whole,
        0.498,
        0.002,
        Some(0.0827),
        Some(0.9614),
    ),
    r(
        "supp5",
        150,
        1,
        0.5,
        Estimator::Cc,
        1.45,
        0.95,
        Some(1.0241),
        Some(0.2352),
    ),
    r(
        "supp5",
        150,
        1,
        0.5,
        Estimator::Em,
        0.867,
        0.367,
        Some(0.4969),
        Some(0.7872),
    ),
    r(
        "supp5",
        150,
        2,
        -0.2,
        Estimator::Whole,
        -0.218,
        0.018,
        Some(0.0801),
        Some(0.9531),
    ),
    r(
        "supp5",
        150,
        2,
        -0.2,
        Estimator::Cc,
        0.577,
        0.777,
        Some(0.7177),
        Some(0.3654),
    ),
    r(
        "supp5",
        150,
        2,
        -0.2,
        Estimator::Em,
        0.131,
        0.331,
        Some(0.438),
        Some(0.7953),
    ),
    r(
        "supp5",
        150,
        3,
        -0.7,
        Estimator::Whole,
        -0.737,
        0.037,
        Some(0.0872),
        Some(0.9489),
    ),
    r(
        "supp5",
        150,
        3,
        -0.7,
        Estimator::Cc,
        -0.038,
        0.662,
        Some(0.5529),
        Some(0.4912),
    ),
    r(
        "supp5",
        150,
        3,
        -0.7,
        Estimator::Em,
        -0.41,
        0.29,
        Some(0.3975),
        Some(0.8209),
    ),
    r(
        "supp5",
        150,
        4,
        -1.3,
        Estimator::Whole,
        -1.325,
        0.025,
        Some(0.1233),
        Some(0.9489),
    ),
    r(
        "supp5",
        150,
        4,
        -1.3,
        Estimator::Cc,
        -1.897,
        0.597,
        Some(0.5262),
        Some(0.7298),
    ),
    r(
        "supp5",
        150,
        4,
        -1.3,
        Estimator::Em,
        -1.497,
        0.197,
        Some(0.2361),
        Some(0.936),
    ),
    r(
        "supp5",
        150,
        5,
        0.008,
        Estimator::Whole,
        0.009,
        0.001,
        Some(0.0001),
        Some(0.9468),
    ),
    r(
        "supp5",
        150,
        5,
        0.008,
        Estimator::Cc,
        0.01,
        0.002,
        Some(0.0001),
        Some(0.9387),
    ),
    r(
        "supp5",
        150,
        5,
        0.008,
        Estimator::Em,
        0.009,
        0.001,
        Some(0.0001),
        Some(0.9535),
    ),
    r(
        "supp5",
        150,
        6,
        -0.02,
        Estimator::Whole,
        -0.021,
        0.001,
        Some(0.0001),
        Some(0.9531),
    ),
    r(
        "supp5",
        150,
        6,
        -0.02,
        Estimator::Cc,
        -0.022,
        0.002,
        Some(0.0002),
        Some(0.9464),
    ),
    r(
        "supp5",
        150,
        6,
        -0.02,
        Estimator::Em,
        -0.021,
        0.001,
        Some(0.0001),
        Some(0.9384),
    ),
    r(
        "supp5",
        250,
        0,
        0.6,
        Estimator::Whole,
        0.608,
        0.008,
        Some(0.0475),
        Some(0.9467),
    ),
    r(
        "supp5",
        250,
        0,
        0.6,
        Estimator::Cc,
        1.549,
        0.949,
        Some(0.9685),
        Some(0.0481),
    ),
    r(
        "supp5",
        250,
        0,
        0.6,
        Estimator::Em,
        0.847,
        0.247,
        Some(0.3116),
        Some(0.8562),
    ),
    r(
        "supp5",
        250,
        1,
        0.5,
        Estimator::Whole,
        0.509,
        0.009,
        Some(0.0474),
        Some(0.9417),
    ),
    r(
        "supp5",
        250,
        1,
        0.5,
        Estimator::Cc,
        1.438,
        0.938,
        Some(0.9469),
        Some(0.042),
    ),
    r(
        "supp5",
        250,
        1,
        0.5,
        Estimator::Em,
        0.75,
        0.25,
        Some(0.3072),
        Some(0.8617),
    ),
    r(
        "supp5",
        250,
        2,
        -0.2,
        Estimator::Whole,
        -0.201,
        0.001,
        Some(0.0442),
        Some(0.9558),
    ),
    r(
        "supp5",
        250,
        2,
        -0.2,
        Estimator::Cc,
        0.573,
        0.773,
        Some(0.6579),
        Some(0.1167),
    ),
    r(
        "supp5",
        250,
        2,
        -0.2,
        Estimator::Em,
        0.019,
        0.219,
        Some(0.2475),
        Some(0.8761),
    ),
    r(
        "supp5",
        250,
        3,
        -0.7,
        Estimator::Whole,
        -0.708,
        0.008,
        Some(0.0473),
        Some(0.9558),
    ),
    r(
        "supp5",
        250,
        3,
        -0.7,
        Estimator::Cc,
        -0.024,
        0.676,
        Some(0.5164),
        Some(0.2252),
    ),
    r(
        "supp5",
        250,
        3,
        -0.7,
        Estimator::Em,
        -0.502,
        0.198,
        Some(0.2299),
        Some(0.8894),
    ),
    r(
        "supp5",
        250,
        4,
        -1.3,
        Estimator::Whole,
        -1.317,
        0.017,
        Some(0.0724),
        Some(0.9477),
    ),
    r(
        "supp5",
        250,
        4,
        -1.3,
        Estimator::Cc,
        -1.863,
        0.563,
        Some(0.4106),
        Some(0.5752),
    ),
    r(
        "supp5",
        250,
        4,
        -1.3,
        Estimator::Em,
        -1.444,
        0.144,
        Some(0.1457),
        Some(0.9369),
    ),
    r(
        "supp5",
        250,
        5,
        0.008,
        Estimator::Whole,
        0.008,
        0.0,
        Some(0.0),
        Some(0.9528),
    ),
    r(
        "supp5",
        250,
        5,
        0.008,
        Estimator::Cc,
        0.01,
        0.002,
        Some(0.0001),
        Some(0.9427),
    ),
    r(
        "supp5",
        250,
        5,
        0.008,
        Estimator::Em,
        0.008,
        0.0,
        Some(0.0),
        Some(0.9502),
    ),
    r(
        "supp5",
        250,
        6,
        -0.02,
        Estimator::Whole,
        -0.021,
        0.001,
        Some(0.0001),
        Some(0.9467),
    ),
    r(
        "supp5",
        250,
        6,
        -0.02,
        Estimator::Cc,
        -0.022,
        0.002,
        Some(0.0001),
        Some(0.9478),
    ),
    r(
        "supp5",
        250,
        6,
        -0.02,
        Estimator::Em,
        -0.021,
        0.001,
        Some(0.0001),
        Some(0.9403),
    ),
    r(
        "supp5",
        500,
        0,
        0.6,
        Estimator::Whole,
        0.606,
        0.006,
        Some(0.025),
        Some(0.946),
    ),
    r(
        "supp5",
        500,
        0,
        0.6,
        Estimator::Cc,
        1.529,
        0.929,
        Some(0.8972),
        Some(0.002),
    ),
    r(
        "supp5",
        500,
        0,
        0.6,
        Estimator::Em,
        0.708,
        0.108,
        Some(0.1261),
        Some(0.9293),
    ),
    r(
        "supp5",
        500,
        1,
        0.5,
        Estimator::Whole,
        0.505,
        0.005,
        Some(0.0244),
        Some(0.948),
    ),
    r(
        "supp5",
        500,
        1,
        0.5,
        Estimator::Cc,
        1.417,
        0.917,
        Some(0.8735),
        Some(0.002),
    ),
    r(
        "supp5",
        500,
        1,
        0.5,
        Estimator::Em,
        0.609,
        0.109,
        Some(0.1209),
        Some(0.9358),
    ),
    r(
        "supp5",
        500,
        2,
        -0.2,
        Estimator::Whole,
        -0.2,
        0.0,
        Some(0.0227),
        Some(0.947),
    ),
    r(
        "supp5",
        500,
        2,
        -0.2,
        Estimator::Cc,
        0.561,
        0.761,
        Some(0.6077),
        Some(0.005),
    ),
    r(
        "supp5",
        500,
        2,
        -0.2,
        Estimator::Em,
        -0.107,
        0.093,
        Some(0.0922),
        Some(0.9456),
    ),
    r(
        "supp5",
        500,
        3,
        -0.7,
        Estimator::Whole,
        -0.706,
        0.006,
        Some(0.0244),
        Some(0.946),
    ),
    r(
        "supp5",
        500,
        3,
        -0.7,
        Estimator::Cc,
        -0.033,
        0.667,
        Some(0.4738),
        Some(0.031),
    ),
    r(
        "supp5",
        500,
        3,
        -0.7,
        Estimator::Em,
        -0.622,
        0.078,
        Some(0.0795),
        Some(0.9499),
    ),
    r(
        "supp5",
        500,
        4,
        -1.3,
        Estimator::Whole,
        -1.311,
        0.011,
        Some(0.0375),
        Some(0.952),
    ),
    r(
        "supp5",
        500,
        4,
        -1.3,
        Estimator::Cc,
        -1.844,
        0.544,
        Some(0.3435),
        Some(0.3073),
    ),
    r(
        "supp5",
        500,
        4,
        -1.3,
        Estimator::Em,
        -1.376,
        0.076,
        Some(0.0759),
        Some(0.9423),
    ),
    r(
        "supp5",
        500,
        5,
        0.008,
        Estimator::Whole,
        0.008,
        0.0,
        Some(0.0),
        Some(0.94),
    ),
    r(
        "supp5",
        500,
        5,
        0.008,
        Estimator::Cc,
        0.009,
        0.001,
        Some(0.0),
        Some(0.9359),
    ),
    r(
        "supp5",
        500,
        5,
        0.008,
        Estimator::Em,
        0.008,
        0.0,
        Some(0.0),
        Some(0.9412),
    ),
    r(
        "supp5",
        500,
        6,
        -0.02,
        Estimator::Whole,
        -0.02,
        0.0,
        Some(0.0),
        Some(0.949),
    ),
    r(
        "supp5",
        500,
        6,
        -0.02,
        Estimator::Cc,
        -0.021,
        0.001,
        Some(0.0),
        Some(0.9489),
    ),
    r(
        "supp5",
        500,
        6,
        -0.02,
        Estimator::Em,
        -0.02,
        0.0,
        Some(0.0),
        Some(0.9467),
    ),
    r(
        "supp5",
        1000,
        0,
        0.6,
        Estimator::Whole,
        0.6,
        0.0,
        Some(0.012),
        Some(0.951),
    ),
    r(
        "supp5",
        1000,
        0,
        0.6,
        Estimator::Cc,
        1.523,
        0.923,
        Some(0.868),
        Some(0.0),
    ),
    r(
        "supp5",
        1000,
        0,
        0.6,
        Estimator::Em,
        0.657,
        0.057,
        Some(0.049),
        Some(0.9515),
    ),
    r(
        "supp5",
        1000,
        1,
        0.5,
        Estimator::Whole,
        0.5,
        0.0,
        Some(0.011),
        Some(0.949),
    ),
    r(
        "supp5",
        1000,
        1,
        0.5,
        Estimator::Cc,
        1.411,
        0.911,
        Some(0.846),
        Some(0.0),
    ),
    r(
        "supp5",
        1000,
        1,
        0.5,
        Estimator::Em,
        0.557,
        0.057,
        Some(0.046),
        Some(0.9578),
    ),
    r(
        "supp5",
        1000,
        2,
        -0.2,
        Estimator::Whole,
        -0.202,
        0.002,
        Some(0.011),
        Some(0.944),
    ),
    r(
        "supp5",
        1000,
        2,
        -0.2,
        Estimator::Cc,
        0.558,
        0.758,
        Some(0.59),
        Some(0.0),
    ),
    r(
        "supp5",
        1000,
        2,
        -0.2,
        Estimator::Em,
        -0.154,
        0.046,
        Some(0.032),
        Some(0.9599),
    ),
    r(
        "supp5",
        1000,
        3,
        -0.7,
        Estimator::Whole,
        -0.705,
        0.005,
        Some(0.012),
        Some(0.952),
    ),
    r(
        "supp5",
        1000,
        3,
        -0.7,
        Estimator::Cc,
        -0.032,
        0.668,
        Some(0.461),
        Some(0.0),
    ),
    r(
        "supp5",
        1000,
        3,
        -0.7,
        Estimator::Em,
        -0.663,
        0.037,
        Some(0.027),
        Some(0.9652),
    ),
    r(
        "supp5",
        1000,
        4,
        -1.3,
        Estimator::Whole,
        -1.306,
        0.006,
        Some(0.017),
        Some(0.946),
    ),
    r(
        "supp5",
        1000,
        4,
        -1.3,
        Estimator::Cc,
        -1.836,
        0.536,
        Some(0.311),
        Some(0.051),
    ),
    r(
        "supp5",
        1000,
        4,
        -1.3,
        Estimator::Em,
        -1.346,
        0.046,
        Some(0.035),
        Some(0.9536),
    ),
    r(
        "supp5",
        1000,
        5,
        0.008,
        Estimator::Whole,
        0.008,
        0.0,
        Some(0.0),
        Some(0.949),
    ),
    r(
        "supp5",
        1000,
        5,
        0.008,
        Estimator::Cc,
        0.01,
        0.002,
        Some(0.0),
        Some(0.927),
    ),
    r(
        "supp5",
        1000,
        5,
        0.008,
        Estimator::Em,
        0.008,
        0.0,
        Some(0.0),
        Some(0.9462),
    ),
    r(
        "supp5",
        1000,
        6,
        -0.02,
        Estimator::Whole,
        -0.02,
        0.0,
        Some(0.0),
        Some(0.961),
    ),
    r(
        "supp5",
        1000,
        6,
        -0.02,
        Estimator::Cc,
        -0.021,
        0.001,
        Some(0.0),
        Some(0.965),
    ),
    r(
        "supp5",
        1000,
        6,
        -0.02,
        Estimator::Em,
        -0.02,
        0.0,
        Some(0.0),
        Some(0.9599),
    ),
    r(
        "alt",
        250,
        0,
        1.0,
        Estimator::Whole,
        1.022,
        0.022,
        Some(0.08),
        Some(0.91),
    ),
    r(
        "alt",
        250,
        0,
        1.0,
        Estimator::Cc,
        3.862,
        2.862,
        Some(11.1198),
        Some(0.238),
    ),
    r(
        "alt",
        250,
        0,
        1.0,
        Estimator::Em,
        1.57,
        0.57,
        Some(2.3764),
        Some(0.94),
    ),
    r(
        "alt",
        250,
        1,
        -0.6,
        Estimator::Whole,
        -0.607,
        0.007,
        Some(0.073),
        Some(0.94),
    ),
    r(
        "alt",
        250,
        1,
        -0.6,
        Estimator::Cc,
        1.773,
        2.373,
        Some(8.6316),
        Some(0.048),
    ),
    r(
        "alt",
        250,
        1,
        -0.6,
        Estimator::Em,
        -0.285,
        0.315,
        Some(1.078),
        Some(0.92),
    ),
    r(
        "alt",
        250,
        2,
        0.5,
        Estimator::Whole,
        0.498,
        0.002,
        Some(0.0967),
        Some(0.94),
    ),
    r(
        "alt",
        250,
        2,
        0.5,
        Estimator::Cc,
        0.628,
        0.128,
        Some(3.6833),
        Some(0.952),
    ),
    r(
        "alt",
        250,
        2,
        0.5,
        Estimator::Em,
        0.549,
        0.049,
        Some(0.2277),
        Some(0.952),
    ),
    r(
        "alt",
        250,
        3,
        -0.05,
        Estimator::Whole,
        -0.052,
        0.002,
        Some(0.0001),
        Some(0.97),
    ),
    r(
        "alt",
        250,
        3,
        -0.05,
        Estimator::Cc,
        -0.022,
        0.028,
        Some(0.0018),
        Some(0.762),
    ),
    r(
        "alt",
        250,
        3,
        -0.05,
        Estimator::Em,
        -0.055,
        0.005,
        Some(0.0009),
        Some(0.96),
    ),
    r(
        "alt",
        250,
        4,
        0.1,
        Estimator::Whole,
        0.101,
        0.001,
        Some(0.0001),
        Some(0.95),
    ),
    r(
        "alt",
        250,
        4,
        0.1,
        Estimator::Cc,
        0.049,
        0.051,
        Some(0.0039),
        Some(0.429),
    ),
    r(
        "alt",
        250,
        4,
        0.1,
        Estimator::Em,
        0.112,
        0.012,
        Some(0.0016),
        Some(0.98),
    ),
];

pub fn published(
    table: PresetTable,
    n: usize,
    parameter: usize,
    estimator: Estimator,
) -> Option<&'static PublishedCell> {
    PUBLISHED.iter().find(|c| {
        c.table == table.name() && c.n == n && c.parameter == parameter && c.estimator == estimator
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Mean,
    AbsBias,
    Mse,
    Cp,
}

impl Metric {
    pub const ALL: [Metric; 4] = [Metric::Mean, Metric::AbsBias, Metric::Mse, Metric::Cp];

    pub fn label(self) -> &'static str {
        match self {
            Metric::Mean => "mean",
            Metric::AbsBias => "abs_bias",
            Metric::Mse => "mse",
            Metric::Cp => "cp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonCell {
    pub n: usize,
    pub parameter: String,
    pub estimator: Estimator,
    pub metric: Metric,
    pub ours: Option<f64>,
    pub published: Option<f64>,
    pub tolerance: Option<f64>,
    /// Both values present and further apart than `tolerance`.
    pub flagged: bool,
}

/// Monte Carlo tolerance for each metric: three standard errors of the
/// replicate mean plus the printed rounding, a 25% relative band for MSE,
/// and three binomial standard errors for coverage.
fn tolerance(metric: Metric, sd: Option<f64>, published: f64, reps: usize) -> Option<f64> {
    let r = reps.max(1) as f64;
    match metric {
        Metric::Mean | Metric::AbsBias => sd.map(|s| 3.0 * s / r.sqrt() + 0.01),
        Metric::Mse => Some(0.25 * published.abs() + 0.0005),
        Metric::Cp => Some(3.0 * (0.95 * 0.05 / r).sqrt() + 0.01),
    }
}

/// Pairs every metric of `table` with its published counterpart.
pub fn compare(preset: PresetTable, table: &MetricsTable, names: &[String]) -> Vec<ComparisonCell> {
    let mut out = Vec::new();
    for (k, name) in names.iter().enumerate() {
        for est in Estimator::ALL {
            let Some(row) = table.row(name, est) else {
                continue;
            };
            let cell = published(preset, table.n, k, est);
            for metric in Metric::ALL {
                let ours = match metric {
                    Metric::Mean => row.mean,
                    Metric::AbsBias => row.abs_bias,
                    Metric::Mse => row.mse,
                    Metric::Cp => row.cp,
                };
                let theirs = cell.and_then(|c| match metric {
                    Metric::Mean => Some(c.mean),
                    Metric::AbsBias => Some(c.abs_bias),
                    Metric::Mse => c.mse,
                    Metric::Cp => c.cp,
                });
                let tol = theirs.and_then(|p| tolerance(metric, row.sd, p, table.replications));
                let flagged = match (ours, theirs, tol) {
                    (Some(a), Some(b), Some(t)) => (a - b).abs() > t,
                    _ => false,
                };
                out.push(ComparisonCell {
                    n: table.n,
                    parameter: name.clone(),
                    estimator: est,
                    metric,
                    ours,
                    published: theirs,
                    tolerance: tol,
                    flagged,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_is_complete() {
        for p in PresetTable::ALL {
            let k = if p == PresetTable::Supp5 { 7 } else { 5 };
            for &n in p.sizes() {
                for j in 0..k {
                    for e in Estimator::ALL {
                        assert!(published(p, n, j, e).is_some(), "{p} n={n} param {j} {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn truths_match_presets() {
        for p in PresetTable::ALL {
            for &n in p.sizes() {
                let truth = p.scenario(n, 1, 0).truth();
                for (j, t) in truth.iter().enumerate() {
                    let c = published(p, n, j, Estimator::Em).unwrap();
                    assert!((c.truth - t).abs() < 1e-12, "{p} n={n} param {j}");
                }
            }
        }
    }

    #[test]
    fn known_cells() {
        let c = published(PresetTable::T2, 1000, 2, Estimator::Em).unwrap();
        assert_eq!((c.mean, c.abs_bias, c.cp), (-1.005, 0.005, Some(0.952)));
        let c = published(PresetTable::T4, 1000, 2, Estimator::Cc).unwrap();
        assert_eq!((c.abs_bias, c.mse), (0.85, Some(0.7945)));
        assert_eq!(
            published(PresetTable::T2, 500, 4, Estimator::Em)
                .unwrap()
                .mse,
            None
        );
    }
}
