//! Free-support detection and the exact strong-converse rate for states
//! whose support in local product bases has pairwise Hamming distance >= 2.
//!
//! The rate at exponent `r` is the KL-ball-constrained maximin of the two
//! marginal entropies of the measured distribution. The solver follows the
//! saddle structure: exponentiated-gradient ascent over the simplex for a
//! fixed weight `x` and multiplier `t`, bisection on `t` to meet the KL
//! budget, and bisection on the marginal-entropy gap to balance the two
//! subsystems.

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rates::{CurveKind, RateCurve};
use crate::scalar::{real, support_cutoff, Scalar};
use crate::state::PureTripartiteState;

/// Probability distribution over triples of local basis labels.
#[derive(Debug, Clone)]
pub struct TripleDistribution<T: Scalar> {
    support: Vec<[usize; 3]>,
    probs: Vec<T>,
    /// Distinct labels per subsystem, sorted.
    labels: [Vec<usize>; 3],
    /// Marginal index of each support point per subsystem.
    marginal_idx: [Vec<usize>; 3],
}

impl<T: Scalar> TripleDistribution<T> {
    pub fn new(mut entries: Vec<([usize; 3], T)>) -> Result<Self> {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        // Zero-probability coordinates are excluded up front.
        entries.retain(|(_, p)| *p > support_cutoff::<T>());
        if entries.is_empty() {
            return Err(Error::InvalidInput("empty support".into()));
        }
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidInput("duplicate support triple".into()));
            }
        }
        let sum: T = entries.iter().map(|(_, p)| *p).fold(T::zero(), |a, b| a + b);
        if (sum - T::one()).abs() > real(1e-10) {
            return Err(Error::InvalidInput(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        let support: Vec<[usize; 3]> = entries.iter().map(|(s, _)| *s).collect();
        let probs: Vec<T> = entries.iter().map(|(_, p)| *p / sum).collect();
        let mut labels: [Vec<usize>; 3] = Default::default();
        let mut marginal_idx: [Vec<usize>; 3] = Default::default();
        for s in 0..3 {
            let mut ls: Vec<usize> = support.iter().map(|t| t[s]).collect();
            ls.sort_unstable();
            ls.dedup();
            marginal_idx[s] = support
                .iter()
                .map(|t| ls.binary_search(&t[s]).expect("label present"))
                .collect();
            labels[s] = ls;
        }
        Ok(TripleDistribution {
            support,
            probs,
            labels,
            marginal_idx,
        })
    }

    pub fn support(&self) -> &[[usize; 3]] {
        &self.support
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn label_count(&self, subsystem: usize) -> usize {
        self.labels[subsystem].len()
    }

    /// Marginal of an arbitrary weight vector over the support.
    pub fn marginal_of(&self, weights: &[T], subsystem: usize) -> Vec<T> {
        let mut out = vec![T::zero(); self.labels[subsystem].len()];
        for (i, &w) in weights.iter().enumerate() {
            out[self.marginal_idx[subsystem][i]] += w;
        }
        out
    }

    pub fn marginal(&self, subsystem: usize) -> Vec<T> {
        self.marginal_of(&self.probs, subsystem)
    }
}

/// Witness that a state has free support in the given local bases.
#[derive(Debug, Clone)]
pub struct FreeSupportCertificate<T: Scalar> {
    pub bases: [CMatrix<T>; 3],
    pub support: Vec<[usize; 3]>,
    pub measured: TripleDistribution<T>,
}

/// Refusal: the support is not free in the supplied bases.
#[derive(Debug, Clone)]
pub struct FreeSupportRefusal {
    /// Two support triples that differ in fewer than two positions.
    pub conflicting: ([usize; 3], [usize; 3]),
}

/// Outcome of free-support detection; a refusal is a typed result, not an
/// error.
#[derive(Debug, Clone)]
pub enum DetectOutcome<T: Scalar> {
    Free(FreeSupportCertificate<T>),
    Refused(FreeSupportRefusal),
}

/// Tests whether the state has free support in the supplied local bases
/// (computational bases when omitted). No search over bases is performed.
pub fn detect_free_support<T: Scalar>(
    state: &PureTripartiteState<T>,
    bases: Option<[CMatrix<T>; 3]>,
) -> Result<DetectOutcome<T>> {
    let [da, db, dc] = state.dims();
    let bases = match bases {
        Some(b) => b,
        None => [
            CMatrix::identity(da),
            CMatrix::identity(db),
            CMatrix::identity(dc),
        ],
    };
    let rotated = state.in_bases(&bases)?;
    let threshold = real::<T>(1e-12);
    let mut entries: Vec<([usize; 3], T)> = Vec::new();
    for a in 0..da {
        for b in 0..db {
            for c in 0..dc {
                let amp = rotated.amp(a, b, c);
                if amp.norm() > threshold {
                    entries.push(([a, b, c], amp.norm_sqr()));
                }
            }
        }
    }
    // Free support: any two distinct triples differ in at least two positions.
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let (x, y) = (entries[i].0, entries[j].0);
            let agreements = (0..3).filter(|&s| x[s] == y[s]).count();
            if agreements >= 2 {
                return Ok(DetectOutcome::Refused(FreeSupportRefusal {
                    conflicting: (x, y),
                }));
            }
        }
    }
    let total: T = entries.iter().map(|(_, p)| *p).fold(T::zero(), |a, b| a + b);
    let entries: Vec<([usize; 3], T)> =
        entries.into_iter().map(|(s, p)| (s, p / total)).collect();
    let measured = TripleDistribution::new(entries)?;
    Ok(DetectOutcome::Free(FreeSupportCertificate {
        support: measured.support().to_vec(),
        bases,
        measured,
    }))
}

/// Solution of the KL-ball constrained maximin problem.
#[derive(Debug, Clone)]
pub struct KlBallSolution<T: Scalar> {
    /// Maximizer over the support of `P`.
    pub q: Vec<T>,
    /// `min { H(Q_A), H(Q_B) }` at the maximizer.
    pub value: T,
    /// Subsystem weight at the saddle.
    pub x_weight: T,
    /// KL multiplier at the saddle.
    pub multiplier: T,
    /// Achieved divergence `D(Q || P)`.
    pub kl: T,
    /// The KL budget was slack at the optimum.
    pub saturated: bool,
}

pub(crate) struct InnerSolution<T: Scalar> {
    pub q: Vec<T>,
    pub objective: T,
    pub entropies: [T; 3],
    pub kl: T,
}

/// Entropy of a probability vector in bits, tolerant of zero entries.
pub(crate) fn entropy_bits<T: Scalar>(p: &[T]) -> T {
    let mut h = T::zero();
    for &x in p {
        if x > T::zero() {
            h = h - x * x.log2();
        }
    }
    h
}

pub(crate) fn kl_bits<T: Scalar>(q: &[T], p: &[T]) -> T {
    let mut d = T::zero();
    for (&qi, &pi) in q.iter().zip(p.iter()) {
        if qi > T::zero() {
            d = d + qi * (qi / pi).log2();
        }
    }
    d
}

/// Exponentiated-gradient ascent for
/// `max_Q  sum_s theta_s H(Q_s) - t D(Q || P)` over the simplex on `supp P`.
pub(crate) fn inner_solve<T: Scalar>(
    p: &TripleDistribution<T>,
    theta: [T; 3],
    t: T,
    warm: Option<&[T]>,
) -> InnerSolution<T> {
    let n = p.support().len();
    let floor = real::<T>(1e-300);
    let mut q: Vec<T> = match warm {
        Some(w) => w.to_vec(),
        None => p.probs().to_vec(),
    };
    for v in q.iter_mut() {
        *v = v.max(floor);
    }
    let eval = |q: &[T]| -> (T, [T; 3], T) {
        let hs = [
            entropy_bits(&p.marginal_of(q, 0)),
            entropy_bits(&p.marginal_of(q, 1)),
            entropy_bits(&p.marginal_of(q, 2)),
        ];
        let kl = kl_bits(q, p.probs());
        let obj = theta[0] * hs[0] + theta[1] * hs[1] + theta[2] * hs[2] - t * kl;
        (obj, hs, kl)
    };
    let gradient = |q: &[T]| -> Vec<T> {
        let margs = [
            p.marginal_of(q, 0),
            p.marginal_of(q, 1),
            p.marginal_of(q, 2),
        ];
        (0..n)
            .map(|i| {
                let mut g = T::zero();
                for s in 0..3 {
                    if theta[s] > T::zero() {
                        let m = margs[s][p.marginal_idx[s][i]].max(floor);
                        g = g - theta[s] * m.log2();
                    }
                }
                if t > T::zero() {
                    g = g - t * (q[i].max(floor) / p.probs()[i]).log2();
                }
                g
            })
            .collect()
    };

    let mut eta = T::one() / (T::one() + t);
    let (mut obj, mut hs, mut kl) = eval(&q);
    let gtol = real::<T>(1e-10);
    let mut streak = 0usize;
    for _ in 0..50_000 {
        let g = gradient(&q);
        let gbar: T = g.iter().zip(q.iter()).map(|(&gi, &qi)| gi * qi).sum();
        // KKT residual: interior coordinates must match the mean gradient,
        // boundary coordinates must not point inward.
        let mut resid = T::zero();
        for i in 0..n {
            let d = g[i] - gbar;
            let contrib = if q[i] > real(1e-13) {
                d.abs()
            } else {
                d.max(T::zero())
            };
            if contrib > resid {
                resid = contrib;
            }
        }
        if resid < gtol {
            break;
        }
        let gmax = g.iter().copied().fold(T::neg_infinity(), |a, b| a.max(b));
        let ln2 = real::<T>(std::f64::consts::LN_2);
        let mut accepted = false;
        for _ in 0..60 {
            let mut cand: Vec<T> = q
                .iter()
                .zip(g.iter())
                .map(|(&qi, &gi)| qi * ((eta * (gi - gmax)) * ln2).exp())
                .collect();
            let z: T = cand.iter().copied().fold(T::zero(), |a, b| a + b);
            for v in cand.iter_mut() {
                *v = (*v / z).max(floor);
            }
            let (cobj, chs, ckl) = eval(&cand);
            if cobj >= obj - real(1e-15) {
                q = cand;
                obj = cobj;
                hs = chs;
                kl = ckl;
                accepted = true;
                break;
            }
            eta = eta * real(0.5);
            streak = 0;
        }
        if !accepted {
            break; // step underflow: stationary to machine precision
        }
        streak += 1;
        if streak >= 4 {
            eta = eta * real(1.4);
            streak = 0;
        }
    }
    InnerSolution {
        q,
        objective: obj,
        entropies: hs,
        kl,
    }
}

/// Weighted objective maximized under the KL budget via outer bisection on
/// the multiplier; returns the solution from the feasible side along with
/// the multiplier and whether the budget was slack.
pub(crate) fn constrained_solve<T: Scalar>(
    p: &TripleDistribution<T>,
    theta: [T; 3],
    r: T,
) -> (InnerSolution<T>, T, bool) {
    let unconstrained = inner_solve(p, theta, T::zero(), None);
    if unconstrained.kl <= r + real(1e-12) {
        return (unconstrained, T::zero(), true);
    }
    // Bracket: KL is nonincreasing in t.
    let mut lo = T::zero();
    let mut hi = T::one();
    let mut warm = unconstrained.q.clone();
    let mut bracketed: Option<(InnerSolution<T>, T)> = None;
    for _ in 0..60 {
        let sol = inner_solve(p, theta, hi, Some(&warm));
        warm = sol.q.clone();
        if sol.kl <= r {
            bracketed = Some((sol, hi));
            break;
        }
        lo = hi;
        hi = hi * real(2.0);
        if hi > real(1e12) {
            bracketed = Some((sol, hi));
            break;
        }
    }
    let (mut best_sol, mut best_t) = bracketed.expect("bracket search terminates");
    for _ in 0..80 {
        if hi - lo <= real::<T>(1e-12) * (T::one() + hi) {
            break;
        }
        let mid = (lo + hi) * real(0.5);
        let sol = inner_solve(p, theta, mid, Some(&warm));
        warm = sol.q.clone();
        if sol.kl <= r {
            hi = mid;
            best_sol = sol;
            best_t = mid;
        } else {
            lo = mid;
        }
    }
    (best_sol, best_t, false)
}

/// KL-ball constrained maximin of the A and B marginal entropies:
/// `max { min(H(Q_A), H(Q_B)) : Q on supp P, D(Q||P) <= r }`.
pub fn kl_ball_minmax_entropy<T: Scalar>(
    p: &TripleDistribution<T>,
    r: T,
) -> Result<KlBallSolution<T>> {
    if r < T::zero() {
        return Err(Error::InvalidArgument(
            "KL budget must be nonnegative".into(),
        ));
    }
    let solve_at = |x: T| -> (InnerSolution<T>, T, bool) {
        constrained_solve(p, [x, T::one() - x, T::zero()], r)
    };
    // The derivative of the convex function x -> V_x(r) is the entropy gap
    // H_A - H_B at the maximizer; bisect it to balance the subsystems.
    let gap = |sol: &InnerSolution<T>| sol.entropies[0] - sol.entropies[1];

    let finish = |sol: InnerSolution<T>, x: T, t: T, saturated: bool| -> KlBallSolution<T> {
        let value = sol.entropies[0].min(sol.entropies[1]);
        KlBallSolution {
            q: sol.q,
            value,
            x_weight: x,
            multiplier: t,
            kl: sol.kl,
            saturated,
        }
    };
    let (sol0, t0, sat0) = solve_at(T::zero());
    if gap(&sol0) >= T::zero() {
        return Ok(finish(sol0, T::zero(), t0, sat0));
    }
    let (sol1, t1, sat1) = solve_at(T::one());
    if gap(&sol1) <= T::zero() {
        return Ok(finish(sol1, T::one(), t1, sat1));
    }
    let mut lo = T::zero();
    let mut hi = T::one();
    let mut best = (sol0, T::zero(), sat0, t0);
    for _ in 0..80 {
        let x = (lo + hi) * real(0.5);
        let (sol, t, sat) = solve_at(x);
        let g = gap(&sol);
        let keep = g.abs() < (best.0.entropies[0] - best.0.entropies[1]).abs();
        if keep {
            best = (sol, x, sat, t);
        }
        if g.abs() < real(1e-7) || (hi - lo) < real(1e-11) {
            break;
        }
        if g < T::zero() {
            lo = x;
        } else {
            hi = x;
        }
    }
    let (sol, x, sat, t) = best;
    Ok(finish(sol, x, t, sat))
}

/// `H_{alpha,theta}`: penalized maximum of weighted marginal entropies,
/// `max_Q sum_s theta_s H(Q_s) - alpha/(1-alpha) D(Q||P)`. For free-support
/// states this equals the tripartite entanglement measure with the same
/// parameters.
pub fn h_alpha_theta<T: Scalar>(p: &TripleDistribution<T>, alpha: T, theta: [T; 3]) -> Result<T> {
    if alpha < T::zero() || alpha >= T::one() {
        return Err(Error::InvalidArgument("order must lie in [0, 1)".into()));
    }
    let tsum = theta[0] + theta[1] + theta[2];
    if (tsum - T::one()).abs() > real(1e-10) || theta.iter().any(|&w| w < T::zero()) {
        return Err(Error::InvalidArgument(
            "theta must be a distribution on {A,B,C}".into(),
        ));
    }
    let t = alpha / (T::one() - alpha);
    let sol = inner_solve(p, theta, t, None);
    Ok(sol.objective)
}

/// Strong-converse rate curve for a free-support state, sampled on `grid`.
///
/// Beyond the exponent where the unconstrained maximin becomes feasible the
/// curve is exactly flat at the saturation value.
pub fn sc_rate_curve_free<T: Scalar>(
    cert: &FreeSupportCertificate<T>,
    grid: &[T],
) -> Result<RateCurve<T>> {
    let p = &cert.measured;
    // Saturation cap: unconstrained maximin over the support simplex.
    let cap = kl_ball_minmax_entropy(p, T::infinity())?;
    let values = grid
        .iter()
        .map(|&r| {
            let sol = kl_ball_minmax_entropy(p, r)?;
            Ok(if sol.saturated {
                cap.value
            } else {
                sol.value.min(cap.value)
            })
        })
        .collect::<Result<Vec<T>>>()?;
    RateCurve::new(grid.to_vec(), values, CurveKind::StrongConverse)
}

/// Convenience wrapper: detect free support in the computational bases and
/// sample the rate curve; a refusal maps to [`Error::NotFreeSupport`].
pub fn sc_rate_curve_free_state<T: Scalar>(
    state: &PureTripartiteState<T>,
    grid: &[T],
) -> Result<RateCurve<T>> {
    match detect_free_support(state, None)? {
        DetectOutcome::Free(cert) => sc_rate_curve_free(&cert, grid),
        DetectOutcome::Refused(refusal) => Err(Error::NotFreeSupport(format!(
            "support triples {:?} and {:?} differ in fewer than two positions",
            refusal.conflicting.0, refusal.conflicting.1
        ))),
    }
}
