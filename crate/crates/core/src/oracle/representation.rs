//! Floating-point geometric representation, used as a faithful model of `W`.

use std::collections::HashMap;
use std::f64::consts::PI;

use crate::matrix::{CoxeterMatrix, Label};

/// `B(α_s, α_t) = -cos(π / m(s, t))`, with `-1` for infinite labels.
pub fn bilinear_entry(label: Label) -> f64 {
    match label {
        Label::Finite(1) => 1.0,
        Label::Finite(m) => -(PI / m as f64).cos(),
        Label::Infinity => -1.0,
    }
}

/// Square matrix stored row-major.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Mat { n, data }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Mat { n, data }
    }

    pub fn approx_eq(&self, other: &Mat) -> bool {
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| (a - b).abs() <= 1e-7 * (1.0 + a.abs().max(b.abs())))
    }

    fn fingerprint(&self) -> f64 {
        self.data
            .iter()
            .enumerate()
            .map(|(i, x)| x * (1.0 + 0.6180339887 * i as f64).sqrt())
            .sum()
    }
}

/// Reflection matrices `σ_s(v) = v - 2 B(α_s, v) α_s` in the basis of simple roots.
pub fn reflections(m: &CoxeterMatrix) -> Vec<Mat> {
    let n = m.rank();
    (0..n)
        .map(|s| {
            let mut r = Mat::identity(n);
            for t in 0..n {
                r.data[s * n + t] -= 2.0 * bilinear_entry(m.label(s, t));
            }
            r
        })
        .collect()
}

/// Tolerance-aware set of matrices.
pub struct MatIndex {
    buckets: HashMap<i64, Vec<usize>>,
}

const BUCKET_WIDTH: f64 = 1e-4;

impl MatIndex {
    pub fn new() -> Self {
        MatIndex { buckets: HashMap::new() }
    }

    fn bucket(x: &Mat) -> i64 {
        (x.fingerprint() / BUCKET_WIDTH).round() as i64
    }

    /// Index of a stored matrix approximately equal to `x`.
    pub fn find(&self, x: &Mat, store: &[Mat]) -> Option<usize> {
        let b = Self::bucket(x);
        (b - 1..=b + 1)
            .filter_map(|k| self.buckets.get(&k))
            .flatten()
            .copied()
            .find(|&i| store[i].approx_eq(x))
    }

    pub fn insert(&mut self, x: &Mat, index: usize) {
        self.buckets.entry(Self::bucket(x)).or_default().push(index);
    }
}
