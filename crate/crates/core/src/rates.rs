//! Closed-form bipartite rate/exponent curves and one-shot conversions
//! between fidelity- and probability-based transformation guarantees.

use crate::error::{Error, Result};
use crate::opt::{golden_max, golden_min};
use crate::scalar::{real, Scalar};
use crate::state::{renyi_entropy, MarginalSpectrum};

/// Which trade-off a sampled curve describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Rate vs direct error exponent; nonincreasing in `r`.
    Direct,
    /// Rate vs strong-converse exponent (success probability); nondecreasing
    /// and concave in `r`.
    StrongConverse,
    /// Rate vs strong-converse exponent for the fidelity criterion.
    StrongConverseFidelity,
}

/// Sampled rate curve `r -> R` on a strictly increasing grid.
#[derive(Debug, Clone)]
pub struct RateCurve<T: Scalar> {
    pub grid: Vec<T>,
    pub values: Vec<T>,
    pub kind: CurveKind,
}

impl<T: Scalar> RateCurve<T> {
    pub fn new(grid: Vec<T>, values: Vec<T>, kind: CurveKind) -> Result<Self> {
        if grid.len() != values.len() || grid.is_empty() {
            return Err(Error::InvalidInput("grid/value length mismatch".into()));
        }
        for w in grid.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidInput("grid must be strictly increasing".into()));
            }
        }
        Ok(RateCurve { grid, values, kind })
    }

    /// Verifies the monotonicity (and, for strong-converse kinds, concavity)
    /// required of this curve kind, within `tol`.
    pub fn check_shape(&self, tol: T) -> Result<()> {
        match self.kind {
            CurveKind::Direct => {
                for w in self.values.windows(2) {
                    if w[1] > w[0] + tol {
                        return Err(Error::InvalidInput("direct curve must be nonincreasing".into()));
                    }
                }
            }
            CurveKind::StrongConverse | CurveKind::StrongConverseFidelity => {
                for w in self.values.windows(2) {
                    if w[1] < w[0] - tol {
                        return Err(Error::InvalidInput(
                            "strong-converse curve must be nondecreasing".into(),
                        ));
                    }
                }
                // Concavity of the chords on the (possibly uneven) grid.
                for i in 1..self.grid.len().saturating_sub(1) {
                    let (x0, x1, x2) = (self.grid[i - 1], self.grid[i], self.grid[i + 1]);
                    let (y0, y1, y2) = (self.values[i - 1], self.values[i], self.values[i + 1]);
                    let left = (y1 - y0) / (x1 - x0);
                    let right = (y2 - y1) / (x2 - x1);
                    if right > left + tol {
                        return Err(Error::InvalidInput("curve is not concave".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Optimal rate for distilling EPR pairs from `psi_P` with failure
/// probability decaying at exponent `r`:
/// `sup over alpha > 1 of [r/(1-alpha) + H_alpha(P)]`.
///
/// The search runs over `s = 1/(alpha-1)`, where the objective
/// `-r s - s psi((s+1)/s)` is concave (perspective of the convex cumulant
/// `psi`), with the `alpha -> inf` endpoint evaluated exactly so the plateau
/// at `H_inf(P)` is hit without rounding.
pub fn bipartite_direct_rate<T: Scalar>(p: &MarginalSpectrum<T>, r: T) -> Result<T> {
    if r <= T::zero() {
        return Err(Error::InvalidArgument("direct exponent must be positive".into()));
    }
    let h_inf = renyi_entropy(p.values(), T::infinity())?;
    let objective = |s: T| -> T {
        if s <= T::zero() {
            return h_inf;
        }
        let alpha = T::one() + T::one() / s;
        r / (T::one() - alpha) + renyi_entropy(p.values(), alpha).expect("alpha > 1")
    };
    // Expand the bracket until the peak is interior.
    let mut hi = T::one();
    let limit = real::<T>(1e9);
    while hi < limit && objective(hi) > objective(hi * real(0.5)) {
        hi = hi * real(4.0);
    }
    let (_, interior) = golden_max(objective, T::zero(), hi, hi * real(1e-12));
    Ok(interior.max(h_inf))
}

/// Optimal rate as a function of the strong converse exponent (success
/// probability decaying at exponent `r`):
/// `inf over alpha in [0,1) of [r alpha/(1-alpha) + H_alpha(P)]`.
///
/// Search variable `u = alpha/(1-alpha) in [0, inf)`; the objective
/// `r u + (1+u) psi(u/(1+u))` is convex in `u`.
pub fn bipartite_sc_rate<T: Scalar>(p: &MarginalSpectrum<T>, r: T) -> Result<T> {
    if r < T::zero() {
        return Err(Error::InvalidArgument("exponent must be nonnegative".into()));
    }
    let shannon = renyi_entropy(p.values(), T::one())?;
    if r == T::zero() {
        // The infimum is approached as alpha -> 1.
        return Ok(shannon);
    }
    let h0 = renyi_entropy(p.values(), T::zero())?;
    let objective = |u: T| -> T {
        if u <= T::zero() {
            return h0;
        }
        let alpha = u / (T::one() + u);
        r * u + renyi_entropy(p.values(), alpha).expect("alpha in (0,1)")
    };
    let mut hi = T::one();
    let limit = real::<T>(1e9);
    while hi < limit && objective(hi) < objective(hi * real(0.5)) {
        hi = hi * real(4.0);
    }
    let (_, interior) = golden_min(objective, T::zero(), hi, hi * real(1e-12));
    Ok(interior.min(h0).max(shannon))
}

/// Threshold exponent at which the slope of the strong-converse curve drops
/// to one, located by bisection on secant slopes with grid step `1e-4`.
pub fn sc_rate_unit_slope_threshold<T: Scalar>(p: &MarginalSpectrum<T>) -> Result<T> {
    let step = real::<T>(1e-4);
    let slope = |r: T| -> T {
        let lo = bipartite_sc_rate(p, r).expect("valid r");
        let hi = bipartite_sc_rate(p, r + step).expect("valid r");
        (hi - lo) / step
    };
    if slope(step) <= T::one() {
        return Ok(T::zero());
    }
    let mut hi = T::one();
    let limit = real::<T>(1e6);
    while slope(hi) > T::one() {
        hi = hi * real(2.0);
        if hi > limit {
            return Ok(limit);
        }
    }
    // slope is nonincreasing (concave curve); bisect slope(r) - 1.
    Ok(crate::opt::bisect_decreasing(
        |r| slope(r) - T::one(),
        step,
        hi,
        real(1e-10),
        200,
    ))
}

/// Fidelity-criterion strong-converse rate: equals the probability-criterion
/// curve up to the unit-slope threshold `r_0`, and grows with unit slope
/// beyond it.
pub fn bipartite_sc_fidelity_rate<T: Scalar>(p: &MarginalSpectrum<T>, r: T) -> Result<T> {
    if r <= T::zero() {
        return Err(Error::InvalidArgument("exponent must be positive".into()));
    }
    let r0 = sc_rate_unit_slope_threshold(p)?;
    if r <= r0 {
        bipartite_sc_rate(p, r)
    } else {
        let base = if r0 > T::zero() {
            bipartite_sc_rate(p, r0)?
        } else {
            // r_0 -> 0: continue from the r = 0 value H(P).
            renyi_entropy(p.values(), T::one())?
        };
        Ok(base + (r - r0))
    }
}

/// Transforms a probability-criterion strong-converse curve into the
/// fidelity-criterion one: `sup over grid points x <= r of curve(x) + r - x`.
pub fn sc_fidelity_from_probability<T: Scalar>(curve: &RateCurve<T>, r: T) -> Result<T> {
    if curve.kind != CurveKind::StrongConverse {
        return Err(Error::InvalidArgument(
            "transform expects a strong-converse curve".into(),
        ));
    }
    if r < T::zero() {
        return Err(Error::InvalidArgument("exponent must be nonnegative".into()));
    }
    let mut best = T::neg_infinity();
    for (x, v) in curve.grid.iter().zip(curve.values.iter()) {
        if *x <= r {
            let cand = *v + r - *x;
            if cand > best {
                best = cand;
            }
        }
    }
    if best.is_infinite() {
        return Err(Error::InvalidArgument(
            "no grid point at or below the requested exponent".into(),
        ));
    }
    Ok(best)
}

/// One-shot high-fidelity-to-probability conversion: a transformation with
/// infidelity `epsilon` onto a `d`-dimensional maximally entangled state
/// yields an exact one onto `floor(d/8)` dimensions with probability
/// `1 - 30 epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidToProb<T: Scalar> {
    pub l: u64,
    pub p: T,
    /// Set when no entangled target is guaranteed (`l == 0`).
    pub degenerate: bool,
}

pub fn oneshot_fid_to_prob<T: Scalar>(d: u64, epsilon: T) -> Result<FidToProb<T>> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be >= 1".into()));
    }
    if epsilon < T::zero() || epsilon >= T::one() {
        return Err(Error::InvalidArgument("epsilon must lie in [0, 1)".into()));
    }
    let l = d / 8;
    let p = (T::one() - real::<T>(30.0) * epsilon).max(T::zero());
    Ok(FidToProb {
        l,
        p,
        degenerate: l == 0,
    })
}

/// One-shot probability-to-fidelity conversion: success probability `p` onto
/// `d` dimensions gives fidelity `p d / L` onto any `L >= d` dimensions,
/// i.e. infidelity `1 - p d / L`.
pub fn oneshot_prob_to_fid<T: Scalar>(d: u64, p: T, l: u64) -> Result<T> {
    if d == 0 || l < d {
        return Err(Error::InvalidArgument("need L >= d >= 1".into()));
    }
    if p < T::zero() || p > T::one() {
        return Err(Error::InvalidArgument("probability must lie in [0, 1]".into()));
    }
    Ok(T::one() - p * real::<T>(d as f64) / real::<T>(l as f64))
}

/// Lower bound on `sqrt(P L)` achievable from a fidelity-`(1-epsilon)`
/// transformation onto `d` dimensions: `(sqrt(d (1-eps)) - 1)/ln d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowFidBound<T: Scalar> {
    pub bound: T,
    /// The bound carries no information when nonpositive.
    pub vacuous: bool,
}

pub fn oneshot_lowfid_bound<T: Scalar>(d: u64, epsilon: T) -> Result<LowFidBound<T>> {
    if d < 2 {
        return Err(Error::InvalidArgument("dimension must be >= 2".into()));
    }
    let df = real::<T>(d as f64);
    let bound = ((df * (T::one() - epsilon)).sqrt() - T::one()) / df.ln();
    Ok(LowFidBound {
        bound,
        vacuous: bound <= T::zero(),
    })
}

/// Samples the direct-rate curve of a bipartite spectrum on a grid.
pub fn sample_direct_curve<T: Scalar>(p: &MarginalSpectrum<T>, grid: &[T]) -> Result<RateCurve<T>> {
    let values = grid
        .iter()
        .map(|&r| bipartite_direct_rate(p, r))
        .collect::<Result<Vec<_>>>()?;
    RateCurve::new(grid.to_vec(), values, CurveKind::Direct)
}

/// Samples the strong-converse curve of a bipartite spectrum on a grid.
pub fn sample_sc_curve<T: Scalar>(p: &MarginalSpectrum<T>, grid: &[T]) -> Result<RateCurve<T>> {
    let values = grid
        .iter()
        .map(|&r| bipartite_sc_rate(p, r))
        .collect::<Result<Vec<_>>>()?;
    RateCurve::new(grid.to_vec(), values, CurveKind::StrongConverse)
}
