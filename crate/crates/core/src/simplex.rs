//! Dense revised-simplex feasibility solver for equality-form linear
//! programs `A x = b, x >= 0`.
//!
//! Columns are produced on demand through a generator closure so the large
//! sign-vector hull problems never materialize their constraint matrix.
//! Phase 1 minimizes the sum of artificial variables; a zero optimum yields a
//! feasible point. Bland's rule guards against cycling once progress stalls.

use crate::scalar::{real, Scalar};

/// Outcome of a feasibility solve.
#[derive(Debug, Clone)]
pub enum Feasibility<T: Scalar> {
    /// A nonnegative solution of `A x = b`, indexed like the columns.
    Feasible(Vec<T>),
    Infeasible,
}

/// Solves `A x = b, x >= 0` for feasibility.
///
/// `column(j, out)` writes column `j` of `A` (length `rows`) into `out`.
pub fn solve_feasibility<T: Scalar>(
    rows: usize,
    cols: usize,
    column: &dyn Fn(usize, &mut [T]),
    b: &[T],
) -> Feasibility<T> {
    assert_eq!(b.len(), rows);
    // Flip rows so the right-hand side is nonnegative.
    let mut sign = vec![T::one(); rows];
    let mut rhs = b.to_vec();
    for i in 0..rows {
        if rhs[i] < T::zero() {
            sign[i] = -T::one();
            rhs[i] = -rhs[i];
        }
    }
    let get_col = |j: usize, out: &mut [T]| {
        column(j, out);
        for i in 0..rows {
            out[i] = out[i] * sign[i];
        }
    };

    // Basis starts as the artificial identity; artificial j has index cols + j.
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // basis_inv holds B^{-1}, row-major.
    let mut basis_inv: Vec<T> = vec![T::zero(); rows * rows];
    for i in 0..rows {
        basis_inv[i * rows + i] = T::one();
    }
    let mut x_b = rhs.clone();

    let tol = real::<T>(1e-11);
    let mut col_buf = vec![T::zero(); rows];
    let max_iters = 50 * (rows + cols) + 2000;
    let mut stalled = 0usize;

    for _iter in 0..max_iters {
        let objective: T = basis
            .iter()
            .zip(x_b.iter())
            .filter(|(j, _)| **j >= cols)
            .map(|(_, v)| *v)
            .fold(T::zero(), |a, b| a + b);
        if objective <= tol {
            break;
        }

        // Phase-1 costs: 1 for artificials, 0 otherwise.
        // y = c_B B^{-1} (row vector).
        let mut y = vec![T::zero(); rows];
        for (pos, &j) in basis.iter().enumerate() {
            if j >= cols {
                for k in 0..rows {
                    y[k] = y[k] + basis_inv[pos * rows + k];
                }
            }
        }

        // Pricing: find entering column with most negative reduced cost
        // (original columns have zero phase-1 cost, so reduced cost = -y.A_j).
        let use_bland = stalled > 2 * rows + 20;
        let mut entering = None;
        let mut best = -real::<T>(1e-9);
        for j in 0..cols {
            get_col(j, &mut col_buf);
            let mut ya = T::zero();
            for i in 0..rows {
                ya = ya + y[i] * col_buf[i];
            }
            let reduced = -ya;
            if use_bland {
                if reduced < -tol {
                    entering = Some(j);
                    break;
                }
            } else if reduced < best {
                best = reduced;
                entering = Some(j);
            }
        }
        let entering = match entering {
            Some(j) => j,
            None => break, // optimal for phase 1
        };

        // Direction d = B^{-1} A_e.
        get_col(entering, &mut col_buf);
        let mut d = vec![T::zero(); rows];
        for i in 0..rows {
            let mut acc = T::zero();
            for k in 0..rows {
                acc = acc + basis_inv[i * rows + k] * col_buf[k];
            }
            d[i] = acc;
        }

        // Ratio test, preferring to kick artificials out on ties.
        let mut leave: Option<usize> = None;
        let mut best_ratio = T::infinity();
        for i in 0..rows {
            if d[i] > tol {
                let ratio = x_b[i] / d[i];
                let better = ratio < best_ratio - tol
                    || (ratio < best_ratio + tol
                        && leave.map_or(false, |l| basis[i] >= cols && basis[l] < cols));
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let leave = match leave {
            Some(i) => i,
            None => return Feasibility::Infeasible, // unbounded phase-1 cannot happen
        };
        if best_ratio <= tol {
            stalled += 1;
        } else {
            stalled = 0;
        }

        // Pivot: update basis inverse and basic solution.
        let pivot = d[leave];
        for k in 0..rows {
            basis_inv[leave * rows + k] = basis_inv[leave * rows + k] / pivot;
        }
        x_b[leave] = x_b[leave] / pivot;
        for i in 0..rows {
            if i != leave {
                let factor = d[i];
                if factor != T::zero() {
                    for k in 0..rows {
                        let delta = factor * basis_inv[leave * rows + k];
                        basis_inv[i * rows + k] = basis_inv[i * rows + k] - delta;
                    }
                    x_b[i] = x_b[i] - factor * x_b[leave];
                    if x_b[i] < T::zero() {
                        x_b[i] = T::zero();
                    }
                }
            }
        }
        basis[leave] = entering;
    }

    // Any artificial still carrying weight means the system is infeasible.
    let residual: T = basis
        .iter()
        .zip(x_b.iter())
        .filter(|(j, _)| **j >= cols)
        .map(|(_, v)| *v)
        .fold(T::zero(), |a, b| a + b);
    if residual > real(1e-8) {
        return Feasibility::Infeasible;
    }

    let mut x = vec![T::zero(); cols];
    for (pos, &j) in basis.iter().enumerate() {
        if j < cols {
            x[j] = x_b[pos].max(T::zero());
        }
    }
    Feasibility::Feasible(x)
}

/// Convenience wrapper for a dense column-major constraint matrix.
pub fn solve_feasibility_dense<T: Scalar>(a_cols: &[Vec<T>], b: &[T]) -> Feasibility<T> {
    let rows = b.len();
    let cols = a_cols.len();
    solve_feasibility(
        rows,
        cols,
        &|j, out| out.copy_from_slice(&a_cols[j]),
        b,
    )
}
