//! Small shared numeric helpers.

use nalgebra::{DMatrix, DVector};

/// Fixes the sign of every column so that its largest-magnitude entry is
/// positive, ties broken by the lowest row index. Singular vectors and
/// eigenvectors are sign-ambiguous; this makes them deterministic.
pub(crate) fn orient_columns(m: &mut DMatrix<f64>) {
    for mut col in m.column_iter_mut() {
        let mut best = 0usize;
        let mut best_abs = 0.0f64;
        for (r, v) in col.iter().enumerate() {
            let a = v.abs();
            if a > best_abs {
                best_abs = a;
                best = r;
            }
        }
        if col[best] < 0.0 {
            col.neg_mut();
        }
    }
}

/// Same sign rule for a single vector.
pub(crate) fn orient_vector(v: &mut DVector<f64>) {
    let mut best = 0usize;
    let mut best_abs = 0.0f64;
    for (r, x) in v.iter().enumerate() {
        let a = x.abs();
        if a > best_abs {
            best_abs = a;
            best = r;
        }
    }
    if v[best] < 0.0 {
        v.neg_mut();
    }
}
