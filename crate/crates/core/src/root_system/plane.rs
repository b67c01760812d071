//! Floating-point projection onto the `exp(±2πi/h)` eigenplane of the
//! Coxeter element.

use std::f64::consts::PI;

use super::weight::{IntMatrix, Weight};

/// Float tolerance used by every geometric assertion.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct CoxeterPlane {
    n: usize,
    /// Row-major projector in weight coordinates.
    projector: Vec<f64>,
    /// Row-major Gram matrix of the fundamental weights.
    gram: Vec<f64>,
    /// Gram-orthonormal basis of the plane. For `h = 2` the eigenspace is a
    /// line and the second vector is zero.
    basis: [Vec<f64>; 2],
}

impl CoxeterPlane {
    pub(crate) fn new(gram: Vec<f64>, powers: &[IntMatrix]) -> CoxeterPlane {
        let h = powers.len();
        let n = powers[0].dim();
        // For h = 2 the eigenvalue -1 is real and the usual 2/h weight would
        // give twice the projector.
        let scale = if h == 2 {
            1.0 / h as f64
        } else {
            2.0 / h as f64
        };
        let mut projector = vec![0.0; n * n];
        for (k, wk) in powers.iter().enumerate() {
            let c = scale * (2.0 * PI * k as f64 / h as f64).cos();
            for i in 0..n {
                for j in 0..n {
                    projector[i * n + j] += c * wk.get(i, j) as f64;
                }
            }
        }

        let mut plane = CoxeterPlane {
            n,
            projector,
            gram,
            basis: [vec![0.0; n], vec![0.0; n]],
        };

        let columns: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|i| plane.projector[i * n + j]).collect())
            .collect();
        let first = columns
            .iter()
            .max_by(|a, b| plane.norm(a).total_cmp(&plane.norm(b)))
            .cloned()
            .expect("rank >= 1");
        let b1 = plane.normalized(&first);
        let mut b2 = vec![0.0; n];
        let mut best = 0.0;
        for col in &columns {
            let d = plane.dot(col, &b1);
            let resid: Vec<f64> = col.iter().zip(&b1).map(|(c, b)| c - d * b).collect();
            let norm = plane.norm(&resid);
            if norm > best + TOLERANCE {
                best = norm;
                b2 = resid;
            }
        }
        if best > TOLERANCE {
            b2 = plane.normalized(&b2);
        }
        plane.basis = [b1, b2];

        // Orient so that the Coxeter element rotates by +2π/h.
        if h > 2 {
            let mu = Weight::fundamental(n, 0);
            let (x0, y0) = plane.project(&mu);
            let (x1, y1) = plane.project(&powers[1].apply(&mu));
            if x0 * y1 - y0 * x1 < 0.0 {
                for v in plane.basis[1].iter_mut() {
                    *v = -*v;
                }
            }
        }
        plane
    }

    fn dot(&self, a: &[f64], b: &[f64]) -> f64 {
        let n = self.n;
        a.iter()
            .enumerate()
            .map(|(i, x)| x * (0..n).map(|j| self.gram[i * n + j] * b[j]).sum::<f64>())
            .sum()
    }

    fn norm(&self, a: &[f64]) -> f64 {
        self.dot(a, a).max(0.0).sqrt()
    }

    fn normalized(&self, a: &[f64]) -> Vec<f64> {
        let norm = self.norm(a);
        a.iter().map(|x| x / norm).collect()
    }

    /// `P μ` in weight coordinates.
    pub fn project_vector(&self, mu: &Weight) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.projector[i * n + j] * mu[j] as f64)
                    .sum()
            })
            .collect()
    }

    /// Coordinates of `P μ` in the oriented orthonormal basis.
    pub fn project(&self, mu: &Weight) -> (f64, f64) {
        let v = self.project_vector(mu);
        (self.dot(&v, &self.basis[0]), self.dot(&v, &self.basis[1]))
    }

    pub fn projector(&self) -> &[f64] {
        &self.projector
    }

    pub fn basis(&self) -> &[Vec<f64>; 2] {
        &self.basis
    }

    pub fn gram_dot(&self, a: &[f64], b: &[f64]) -> f64 {
        self.dot(a, b)
    }
}

/// Normalizes an angle into `(-π, π]`, sending values within tolerance of
/// `-π` to `+π`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t > PI + TOLERANCE {
        t -= 2.0 * PI;
    }
    if t <= -PI + TOLERANCE {
        t += 2.0 * PI;
    }
    t
}
