//! Majorization (dominance order) predicates, one-shot transformability and
//! ball-majorization queries over normalized partition triples.

use crate::error::{Error, Result};
use crate::scalar::{real, Scalar};
use crate::state::MarginalSpectrum;

/// Comparison tolerance on partial sums.
fn cmp_tol<T: Scalar>() -> T {
    real(1e-10)
}

/// Sorts nonincreasing and strips the ordering responsibility from callers.
fn sorted_desc<T: Scalar>(xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
    v
}

/// Dominance order on real sequences: `x` majorizes `y` when every partial
/// sum of the decreasingly ordered, zero-padded `x` dominates that of `y`
/// and the totals agree.
pub fn majorizes<T: Scalar>(x: &[T], y: &[T]) -> bool {
    let tol = cmp_tol::<T>();
    let xs = sorted_desc(x);
    let ys = sorted_desc(y);
    let len = xs.len().max(ys.len());
    let mut sx = T::zero();
    let mut sy = T::zero();
    for i in 0..len {
        sx += xs.get(i).copied().unwrap_or_else(T::zero);
        sy += ys.get(i).copied().unwrap_or_else(T::zero);
        if sx < sy - tol {
            return false;
        }
    }
    (sx - sy).abs() <= tol
}

/// Nielsen's criterion: a deterministic LOCC transformation from `source`
/// to `target` exists iff the target Schmidt-squared vector majorizes the
/// source's.
pub fn nielsen_transformable<T: Scalar>(
    source: &MarginalSpectrum<T>,
    target: &MarginalSpectrum<T>,
) -> bool {
    majorizes(target.values(), source.values())
}

/// Number of EPR pairs extractable deterministically from a bipartite pure
/// state with the given Schmidt spectrum: `floor(H_inf)`.
pub fn max_epr_extractable<T: Scalar>(spec: &MarginalSpectrum<T>) -> u64 {
    let h_inf = crate::state::renyi_entropy(spec.values(), T::infinity())
        .expect("spectrum is a distribution");
    // Guard against 0.9999999... representations of exact integers.
    let shifted = h_inf + real::<T>(1e-12);
    shifted.floor().to_u64().unwrap_or(0)
}

/// Integer partition: nonincreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(Error::InvalidInput("partition parts must be nonincreasing".into()));
            }
        }
        Ok(Partition(parts))
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Normalized version `lambda / n`.
    pub fn normalized<T: Scalar>(&self) -> Vec<T> {
        let n = real::<T>(self.weight() as f64);
        self.0.iter().map(|&p| real::<T>(p as f64) / n).collect()
    }
}

/// Triple of partitions of a common weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionTriple {
    pub a: Partition,
    pub b: Partition,
    pub c: Partition,
}

impl PartitionTriple {
    pub fn new(a: Partition, b: Partition, c: Partition) -> Result<Self> {
        if a.weight() != b.weight() || b.weight() != c.weight() {
            return Err(Error::InvalidInput("partitions must share a weight".into()));
        }
        Ok(PartitionTriple { a, b, c })
    }

    pub fn weight(&self) -> usize {
        self.a.weight()
    }

    pub fn normalized<T: Scalar>(&self) -> NormalizedTriple<T> {
        NormalizedTriple::new(
            self.a.normalized(),
            self.b.normalized(),
            self.c.normalized(),
        )
        .expect("normalized partitions sum to one")
    }
}

/// Triple of nonincreasing nonnegative sequences, each summing to one;
/// the normalized-partition space carrying the max-l1 ball metric.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedTriple<T: Scalar> {
    pub a: Vec<T>,
    pub b: Vec<T>,
    pub c: Vec<T>,
}

impl<T: Scalar> NormalizedTriple<T> {
    pub fn new(a: Vec<T>, b: Vec<T>, c: Vec<T>) -> Result<Self> {
        for part in [&a, &b, &c] {
            let sum: T = part.iter().copied().fold(T::zero(), |x, y| x + y);
            if (sum - T::one()).abs() > real(1e-10) {
                return Err(Error::InvalidInput("components must sum to 1".into()));
            }
            for w in part.windows(2) {
                if w[1] > w[0] + cmp_tol::<T>() {
                    return Err(Error::InvalidInput("components must be nonincreasing".into()));
                }
            }
            if part.iter().any(|&x| x < -cmp_tol::<T>()) {
                return Err(Error::InvalidInput("components must be nonnegative".into()));
            }
        }
        Ok(NormalizedTriple { a, b, c })
    }

    pub fn components(&self) -> [&[T]; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Max over subsystems of the l1 distances.
    pub fn distance(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for (x, y) in self.components().iter().zip(other.components().iter()) {
            let len = x.len().max(y.len());
            let mut d = T::zero();
            for i in 0..len {
                let xi = x.get(i).copied().unwrap_or_else(T::zero);
                let yi = y.get(i).copied().unwrap_or_else(T::zero);
                d += (xi - yi).abs();
            }
            if d > worst {
                worst = d;
            }
        }
        worst
    }
}

/// Per-component feasibility: is there `nu` in the closed l1-ball of radius
/// `eps` around `center` (nonincreasing, normalized) with `mu <= nu` in the
/// dominance order?
///
/// The partial-sum-maximal ball element moves `eps/2` of mass from the tail
/// to the first coordinate, so the query reduces to
/// `max_k [ sum_k mu - sum_k center ] <= eps/2`.
fn component_ball_majorizes<T: Scalar>(mu: &[T], center: &[T], eps: T) -> bool {
    let tol = cmp_tol::<T>();
    let half_eps = eps * real::<T>(0.5);
    let mus = sorted_desc(mu);
    let cs = sorted_desc(center);
    let len = mus.len().max(cs.len());
    let mut sm = T::zero();
    let mut sc = T::zero();
    for i in 0..len {
        sm += mus.get(i).copied().unwrap_or_else(T::zero);
        sc += cs.get(i).copied().unwrap_or_else(T::zero);
        if sm - sc > half_eps + tol {
            return false;
        }
    }
    true
}

/// Decides whether some element of the closed `eps`-ball around `center`
/// (max-l1 metric, componentwise) majorizes `mu`, one greedy feasibility
/// check per subsystem.
pub fn triple_majorized_by_ball<T: Scalar>(
    mu: &NormalizedTriple<T>,
    center: &NormalizedTriple<T>,
    eps: T,
) -> Result<bool> {
    if eps < T::zero() {
        return Err(Error::InvalidArgument("ball radius must be nonnegative".into()));
    }
    Ok(mu
        .components()
        .iter()
        .zip(center.components().iter())
        .all(|(m, c)| component_ball_majorizes(m, c, eps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::{solve_feasibility_dense, Feasibility};
    use proptest::prelude::*;

    #[test]
    fn majorizes_examples() {
        assert!(majorizes(&[0.3, 0.7], &[0.7, 0.3]));
        assert!(majorizes(&[1.0, 0.0], &[0.5, 0.5]));
        assert!(!majorizes(&[0.5, 0.5], &[1.0, 0.0]));
        assert!(majorizes(&[0.5, 0.3, 0.2], &[0.4, 0.4, 0.2]));
        assert!(!majorizes(&[0.4, 0.4, 0.2], &[0.5, 0.3, 0.2]));
        // Unequal totals never compare.
        assert!(!majorizes(&[0.5, 0.2], &[0.5, 0.5]));
        // Padding: shorter sequences are zero-extended.
        assert!(majorizes(&[1.0], &[0.5, 0.5]));
    }

    #[test]
    fn nielsen_examples() {
        let half = MarginalSpectrum::from_probs(&[0.5, 0.5]).unwrap();
        let prod = MarginalSpectrum::from_probs(&[1.0, 0.0]).unwrap();
        let skew = MarginalSpectrum::from_probs(&[0.6, 0.4]).unwrap();
        assert!(nielsen_transformable(&half, &half));
        assert!(nielsen_transformable(&half, &prod));
        assert!(!nielsen_transformable(&skew, &half));
    }

    #[test]
    fn max_epr_examples() {
        let s = |p: &[f64]| MarginalSpectrum::from_probs(p).unwrap();
        assert_eq!(max_epr_extractable(&s(&[0.5, 0.5])), 1);
        let third = 1.0 / 3.0;
        assert_eq!(max_epr_extractable(&s(&[third, third, third])), 1);
        assert_eq!(max_epr_extractable(&s(&[0.4, 0.3, 0.3])), 1);
        assert_eq!(max_epr_extractable(&s(&[1.0])), 0);
        assert_eq!(max_epr_extractable(&s(&[0.25; 4])), 2);
    }

    fn nt(a: &[f64], b: &[f64], c: &[f64]) -> NormalizedTriple<f64> {
        NormalizedTriple::new(a.to_vec(), b.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn ball_majorization_examples() {
        let u = nt(&[0.5, 0.5], &[0.5, 0.5], &[0.5, 0.5]);
        assert!(triple_majorized_by_ball(&u, &u, 0.0).unwrap());

        // Extreme centers majorize everything, even at eps = 0.
        let top = nt(&[1.0], &[1.0], &[1.0]);
        let mu = nt(&[0.25; 4], &[0.5, 0.5], &[0.7, 0.3]);
        assert!(triple_majorized_by_ball(&mu, &top, 0.0).unwrap());

        // mu=(1,0) against center (1/2,1/2) with eps=0.1: the best ball
        // element is (0.55, 0.45) and its first partial sum stays below 1.
        let point = nt(&[1.0, 0.0], &[1.0, 0.0], &[1.0, 0.0]);
        let center = nt(&[0.5, 0.5], &[0.5, 0.5], &[0.5, 0.5]);
        assert!(!triple_majorized_by_ball(&point, &center, 0.1).unwrap());
        // A radius of 1 closes the gap: nu = (1, 0) lies in the ball.
        assert!(triple_majorized_by_ball(&point, &center, 1.0).unwrap());

        assert!(triple_majorized_by_ball(&point, &center, f64::INFINITY).unwrap());
        assert!(triple_majorized_by_ball(&point, &center, -0.5).is_err());
    }

    #[test]
    fn ball_majorization_monotone_in_eps() {
        let mu = nt(&[0.8, 0.2], &[0.6, 0.4], &[0.9, 0.1]);
        let center = nt(&[0.55, 0.45], &[0.5, 0.5], &[0.6, 0.4]);
        let mut prev = false;
        for i in 0..=40 {
            let eps = i as f64 * 0.05;
            let now = triple_majorized_by_ball(&mu, &center, eps).unwrap();
            assert!(!prev || now, "feasibility must be monotone in eps");
            prev = now;
        }
        assert!(prev, "large radius covers everything");
    }

    /// LP oracle: exists nu with nu nonincreasing, sum nu = 1,
    /// ||nu - c||_1 <= eps and partial sums of nu dominating mu's.
    /// Variables: nu_i, split deviations p_i, m_i (nu = c + p - m),
    /// surplus s_k for partial sums, slack t for the l1 budget.
    fn lp_ball_majorizes(mu: &[f64], c: &[f64], eps: f64) -> bool {
        let d = c.len().max(mu.len());
        let cpad: Vec<f64> = (0..d).map(|i| c.get(i).copied().unwrap_or(0.0)).collect();
        let mupad: Vec<f64> = (0..d).map(|i| mu.get(i).copied().unwrap_or(0.0)).collect();
        // Rows: d partial-sum rows, (d-1) monotonicity rows, 1 total row, 1 budget row.
        let rows = d + (d - 1) + 1 + 1;
        let mut cols: Vec<Vec<f64>> = Vec::new();
        let mut rhs = vec![0.0; rows];
        // Column helper: coefficients for nu_i appear via p_i and m_i only.
        // Partial sums: sum_{j<=k} (c_j + p_j - m_j) - s_k = sum_{j<=k} mu_j.
        // Monotonicity: (c_i + p_i - m_i) - (c_{i+1} + p_{i+1} - m_{i+1}) - w_i = 0.
        // Total: sum (p_j - m_j) = 0.
        // Budget: sum (p_j + m_j) + t = eps.
        let col_p = |i: usize| -> Vec<f64> {
            let mut v = vec![0.0; rows];
            for k in i..d {
                v[k] = 1.0;
            }
            if i < d - 1 {
                v[d + i] += 1.0;
            }
            if i > 0 {
                v[d + i - 1] -= 1.0;
            }
            v[2 * d - 1] = 1.0;
            v[2 * d] = 1.0;
            v
        };
        for i in 0..d {
            cols.push(col_p(i));
            let mut v = col_p(i);
            for x in v.iter_mut() {
                *x = -*x;
            }
            v[2 * d] = 1.0; // |.| contributes positively to the budget
            cols.push(v);
        }
        // Surplus s_k (partial sums), downhill slack w_i, budget slack t.
        for k in 0..d {
            let mut v = vec![0.0; rows];
            v[k] = -1.0;
            cols.push(v);
        }
        for i in 0..d - 1 {
            let mut v = vec![0.0; rows];
            v[d + i] = -1.0;
            cols.push(v);
        }
        let mut v = vec![0.0; rows];
        v[2 * d] = 1.0;
        cols.push(v);
        // Right-hand side.
        let mut acc_mu = 0.0;
        let mut acc_c = 0.0;
        for k in 0..d {
            acc_mu += mupad[k];
            acc_c += cpad[k];
            rhs[k] = acc_mu - acc_c;
        }
        for i in 0..d - 1 {
            rhs[d + i] = cpad[i + 1] - cpad[i];
        }
        rhs[2 * d - 1] = 0.0;
        rhs[2 * d] = eps;
        matches!(solve_feasibility_dense(&cols, &rhs), Feasibility::Feasible(_))
    }

    #[test]
    fn greedy_matches_lp_oracle() {
        let cases: Vec<(Vec<f64>, Vec<f64>, f64)> = vec![
            (vec![0.5, 0.5], vec![0.5, 0.5], 0.0),
            (vec![1.0, 0.0], vec![0.5, 0.5], 0.1),
            (vec![1.0, 0.0], vec![0.5, 0.5], 1.0),
            (vec![0.7, 0.3], vec![0.6, 0.4], 0.1),
            (vec![0.7, 0.3], vec![0.6, 0.4], 0.3),
            (vec![0.5, 0.3, 0.2], vec![0.4, 0.4, 0.2], 0.05),
            (vec![0.5, 0.3, 0.2], vec![0.4, 0.4, 0.2], 0.2),
            (vec![0.4, 0.4, 0.2], vec![0.5, 0.3, 0.2], 0.0),
            (vec![0.9, 0.1], vec![0.5, 0.3, 0.2], 0.4),
            (vec![0.6, 0.2, 0.2], vec![0.34, 0.33, 0.33], 0.3),
        ];
        for (mu, c, eps) in cases {
            let greedy = component_ball_majorizes(&mu, &c, eps);
            let lp = lp_ball_majorizes(&mu, &c, eps);
            assert_eq!(greedy, lp, "mu={mu:?} c={c:?} eps={eps}");
        }
    }

    proptest! {
        #[test]
        fn greedy_matches_lp_oracle_random(
            raw_mu in proptest::collection::vec(0.01f64..1.0, 3),
            raw_c in proptest::collection::vec(0.01f64..1.0, 3),
            eps in 0.0f64..0.8,
        ) {
            let sm: f64 = raw_mu.iter().sum();
            let sc: f64 = raw_c.iter().sum();
            let mut mu: Vec<f64> = raw_mu.iter().map(|x| x / sm).collect();
            let mut c: Vec<f64> = raw_c.iter().map(|x| x / sc).collect();
            mu.sort_by(|a, b| b.partial_cmp(a).unwrap());
            c.sort_by(|a, b| b.partial_cmp(a).unwrap());
            prop_assert_eq!(
                component_ball_majorizes(&mu, &c, eps),
                lp_ball_majorizes(&mu, &c, eps)
            );
        }

        #[test]
        fn partial_order_properties(
            raw in proptest::collection::vec(0.01f64..1.0, 4),
            t1 in 0.0f64..1.0,
            t2 in 0.0f64..1.0,
        ) {
            let sum: f64 = raw.iter().sum();
            let mut q: Vec<f64> = raw.iter().map(|x| x / sum).collect();
            q.sort_by(|a, b| b.partial_cmp(a).unwrap());
            // Reflexivity.
            prop_assert!(majorizes(&q, &q));
            // T-transforms move toward uniform: p = (1-t) q + t (q with a
            // Robin Hood transfer) satisfies p <= q in the dominance order.
            let mut p = q.clone();
            let delta = t1 * (q[0] - q[3]) / 2.0;
            p[0] -= delta;
            p[3] += delta;
            p.sort_by(|a, b| b.partial_cmp(a).unwrap());
            prop_assert!(majorizes(&q, &p));
            // Entropy is antitone: P <= Q implies H(P) >= H(Q).
            let hq = crate::state::shannon_entropy(&q);
            let hp = crate::state::shannon_entropy(&p);
            prop_assert!(hp >= hq - 1e-10);
            // Transitivity through a second transfer.
            let mut p2 = p.clone();
            let delta2 = t2 * (p[0] - p[2]) / 2.0;
            p2[0] -= delta2;
            p2[2] += delta2;
            p2.sort_by(|a, b| b.partial_cmp(a).unwrap());
            prop_assert!(majorizes(&q, &p2));
            // Antisymmetry up to tolerance: mutual domination forces equality.
            if majorizes(&p, &q) {
                for (a, b) in p.iter().zip(q.iter()) {
                    prop_assert!((a - b).abs() < 1e-8);
                }
            }
        }
    }
}
