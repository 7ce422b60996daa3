//! Derivative-free maximization by the Nelder-Mead simplex method.

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub max_evals: usize,
    /// Stop when the simplex's value spread falls below this.
    pub ftol: f64,
    /// Initial simplex edge length.
    pub step: f64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_evals: 20_000,
            ftol: 1e-12,
            step: 0.5,
        }
    }
}

/// Maximizes `f` from `start`. Non-finite values count as `-inf`.
pub fn maximize(f: &impl Fn(&[f64]) -> f64, start: &[f64], opts: Options) -> (Vec<f64>, f64) {
    let d = start.len();
    let cost = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            -v
        } else {
            f64::INFINITY
        }
    };
    let mut simplex: Vec<Vec<f64>> = vec![start.to_vec()];
    for i in 0..d {
        let mut v = start.to_vec();
        v[i] += opts.step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| cost(v)).collect();
    let mut evals = d + 1;
    while evals < opts.max_evals {
        let mut order: Vec<usize> = (0..=d).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();
        if (values[d] - values[0]).abs() <= opts.ftol * (1.0 + values[0].abs()) {
            break;
        }
        let centroid: Vec<f64> = (0..d)
            .map(|k| simplex[..d].iter().map(|v| v[k]).sum::<f64>() / d as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            (0..d)
                .map(|k| centroid[k] + t * (simplex[d][k] - centroid[k]))
                .collect()
        };
        let reflected = along(-1.0);
        let fr = cost(&reflected);
        evals += 1;
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = cost(&expanded);
            evals += 1;
            if fe < fr {
                simplex[d] = expanded;
                values[d] = fe;
            } else {
                simplex[d] = reflected;
                values[d] = fr;
            }
        } else if fr < values[d - 1] {
            simplex[d] = reflected;
            values[d] = fr;
        } else {
            let (contracted, fc) = if fr < values[d] {
                let c = along(-0.5);
                let v = cost(&c);
                (c, v)
            } else {
                let c = along(0.5);
                let v = cost(&c);
                (c, v)
            };
            evals += 1;
            if fc < values[d].min(fr) {
                simplex[d] = contracted;
                values[d] = fc;
            } else {
                for i in 1..=d {
                    let shrunk: Vec<f64> = (0..d)
                        .map(|k| simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]))
                        .collect();
                    values[i] = cost(&shrunk);
                    simplex[i] = shrunk;
                }
                evals += d;
            }
        }
    }
    let best = (0..=d)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .unwrap();
    (simplex[best].clone(), -values[best])
}

/// Runs [`maximize`] from every start, restarting each run from its own
/// optimum until a restart gains less than `1e-10`, and returns the best.
pub fn multi_start(
    f: &impl Fn(&[f64]) -> f64,
    starts: &[Vec<f64>],
    opts: Options,
) -> (Vec<f64>, f64) {
    let mut best: Option<(Vec<f64>, f64)> = None;
    for s in starts {
        let (mut x, mut fx) = maximize(f, s, opts);
        for _ in 0..20 {
            let (nx, nfx) = maximize(
                f,
                &x,
                Options {
                    step: opts.step * 0.2,
                    ..opts
                },
            );
            let gain = nfx - fx;
            if nfx > fx {
                x = nx;
                fx = nfx;
            }
            if !(gain > 1e-10) {
                break;
            }
        }
        if best.as_ref().is_none_or(|b| fx > b.1) {
            best = Some((x, fx));
        }
    }
    best.expect("at least one start")
}
