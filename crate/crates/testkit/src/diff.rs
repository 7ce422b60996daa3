//! Finite-difference derivatives.

fn step(x: f64, scale: f64) -> f64 {
    scale * x.abs().max(1.0)
}

/// Central-difference gradient with one Richardson extrapolation.
pub fn gradient(f: impl Fn(&[f64]) -> f64, x: &[f64]) -> Vec<f64> {
    let mut pt = x.to_vec();
    let mut central = |i: usize, h: f64| {
        pt[i] = x[i] + h;
        let up = f(&pt);
        pt[i] = x[i] - h;
        let down = f(&pt);
        pt[i] = x[i];
        (up - down) / (2.0 * h)
    };
    (0..x.len())
        .map(|i| {
            let h = step(x[i], 1e-3);
            let coarse = central(i, h);
            let fine = central(i, h / 2.0);
            (4.0 * fine - coarse) / 3.0
        })
        .collect()
}

/// Central second differences; returns a symmetric `d × d` matrix in
/// row-major order.
pub fn hessian(f: impl Fn(&[f64]) -> f64, x: &[f64]) -> Vec<Vec<f64>> {
    let d = x.len();
    let h: Vec<f64> = x.iter().map(|&v| step(v, 2e-4)).collect();
    let mut pt = x.to_vec();
    let mut eval = |i: usize, si: f64, j: usize, sj: f64| {
        pt[i] += si * h[i];
        pt[j] += sj * h[j];
        let v = f(&pt);
        pt[i] = x[i];
        pt[j] = x[j];
        v
    };
    let mut out = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in i..d {
            let v = (eval(i, 1.0, j, 1.0) - eval(i, 1.0, j, -1.0) - eval(i, -1.0, j, 1.0)
                + eval(i, -1.0, j, -1.0))
                / (4.0 * h[i] * h[j]);
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    out
}

/// `max |a - b| / max |b|`, the norm-relative discrepancy.
pub fn max_rel_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let scale = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let err = a
        .iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    if scale == 0.0 {
        err
    } else {
        err / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_derivatives() {
        let f = |v: &[f64]| v[0].powi(3) + 2.0 * v[0] * v[1] - v[1].powi(2);
        let g = gradient(f, &[1.5, -2.0]);
        assert!((g[0] - (3.0 * 2.25 - 4.0)).abs() < 1e-9);
        assert!((g[1] - (3.0 + 4.0)).abs() < 1e-9);
        let h = hessian(f, &[1.5, -2.0]);
        assert!((h[0][0] - 9.0).abs() < 1e-5);
        assert!((h[0][1] - 2.0).abs() < 1e-5);
        assert!((h[1][1] + 2.0).abs() < 1e-5);
    }
}
