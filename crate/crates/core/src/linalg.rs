//! Small dense vector helpers used throughout the lab.
//!
//! Dimensions here are desk scale (d up to a few thousand), so plain
//! `Vec<f64>` loops are simpler and fast enough; no BLAS needed.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// y += c * x
pub fn axpy(y: &mut [f64], c: f64, x: &[f64]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

pub fn scale(a: &mut [f64], c: f64) {
    for x in a.iter_mut() {
        *x *= c;
    }
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Squared Euclidean distance.
pub fn dist2(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Orthonormalize `rows` in place by modified Gram-Schmidt with one
/// re-orthogonalization pass. Returns `false` if a row became numerically
/// dependent (norm collapsed), in which case the caller should redraw it.
pub fn orthonormalize_rows(rows: &mut [Vec<f64>]) -> bool {
    let n = rows.len();
    for i in 0..n {
        // two passes of projection removal keep cross products near 1e-16
        for _ in 0..2 {
            for j in 0..i {
                let (head, tail) = rows.split_at_mut(i);
                let c = dot(&tail[0], &head[j]);
                axpy(&mut tail[0], -c, &head[j]);
            }
        }
        let nrm = norm(&rows[i]);
        if nrm < 1e-8 {
            return false;
        }
        scale(&mut rows[i], 1.0 / nrm);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use rand_distr::{Distribution, StandardNormal};

    #[test]
    fn orthonormalize_produces_orthonormal_rows() {
        let mut r = rng::rng_from_seed(5);
        let d = 24;
        let mut rows: Vec<Vec<f64>> = (0..8)
            .map(|_| (0..d).map(|_| StandardNormal.sample(&mut r)).collect())
            .collect();
        assert!(orthonormalize_rows(&mut rows));
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&rows[i], &rows[j]) - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn orthonormalize_rejects_dependent_rows() {
        let mut rows = vec![vec![1.0, 0.0], vec![2.0, 0.0]];
        assert!(!orthonormalize_rows(&mut rows));
    }
}
