//! Small one-dimensional search routines shared by the rate and solver code.

use crate::scalar::{real, Scalar};

/// Golden-section minimization of a unimodal function on `[lo, hi]`.
///
/// Returns `(argmin, min)`. The bracket is shrunk until its width falls below
/// `xtol`; the best evaluated point is returned.
pub fn golden_min<T: Scalar, F: FnMut(T) -> T>(mut f: F, lo: T, hi: T, xtol: T) -> (T, T) {
    let inv_phi = real::<T>(0.618_033_988_749_894_8);
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a) > xtol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden-section maximization; see [`golden_min`].
pub fn golden_max<T: Scalar, F: FnMut(T) -> T>(mut f: F, lo: T, hi: T, xtol: T) -> (T, T) {
    let (x, neg) = golden_min(|x| -f(x), lo, hi, xtol);
    (x, -neg)
}

/// Bisection for a root of a monotone nonincreasing function `f` on
/// `[lo, hi]` with `f(lo) >= 0 >= f(hi)`. Returns the midpoint after the
/// interval width falls below `xtol`.
pub fn bisect_decreasing<T: Scalar, F: FnMut(T) -> T>(
    mut f: F,
    mut lo: T,
    mut hi: T,
    xtol: T,
    max_iter: usize,
) -> T {
    let half = real::<T>(0.5);
    for _ in 0..max_iter {
        if (hi - lo) <= xtol {
            break;
        }
        let mid = (lo + hi) * half;
        if f(mid) >= T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * half
}
