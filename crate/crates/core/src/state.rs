//! Tripartite pure states, marginals, Schmidt data and entropy functionals.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, largest_psd_eigenvalue, CMatrix};
use crate::scalar::{real, support_cutoff, Scalar};

/// Subsystem selector for partial traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
    C,
    AB,
    AC,
    BC,
}

/// Pure state of a tripartite system, stored as a dense complex tensor with
/// index layout `a * (d_b * d_c) + b * d_c + c`.
#[derive(Debug, Clone)]
pub struct PureTripartiteState<T: Scalar> {
    dims: [usize; 3],
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> PureTripartiteState<T> {
    /// Builds a state from amplitudes, enforcing unit norm within 1e-12.
    pub fn new(dims: [usize; 3], amps: Vec<Complex<T>>) -> Result<Self> {
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::InvalidInput("all local dimensions must be >= 1".into()));
        }
        if amps.len() != dims[0] * dims[1] * dims[2] {
            return Err(Error::InvalidInput(format!(
                "amplitude count {} does not match dims {:?}",
                amps.len(),
                dims
            )));
        }
        let norm_sqr: T = amps.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b);
        let dev = (norm_sqr - T::one()).abs();
        if dev > real(1e-12) {
            return Err(Error::NotNormalized {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(PureTripartiteState { dims, amps })
    }

    /// Builds from a sparse list of `(index triple, amplitude)` entries.
    pub fn from_entries(dims: [usize; 3], entries: &[([usize; 3], Complex<T>)]) -> Result<Self> {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dims[0] * dims[1] * dims[2]];
        for &([a, b, c], z) in entries {
            if a >= dims[0] || b >= dims[1] || c >= dims[2] {
                return Err(Error::InvalidInput(format!(
                    "index ({a},{b},{c}) out of bounds for dims {dims:?}"
                )));
            }
            amps[a * dims[1] * dims[2] + b * dims[2] + c] = z;
        }
        Self::new(dims, amps)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    #[inline]
    pub fn amp(&self, a: usize, b: usize, c: usize) -> Complex<T> {
        self.amps[a * self.dims[1] * self.dims[2] + b * self.dims[2] + c]
    }

    /// GHZ state `(|000> + |111>)/sqrt(2)`.
    pub fn ghz() -> Self {
        let h = Complex::new(real::<T>(std::f64::consts::FRAC_1_SQRT_2), T::zero());
        Self::from_entries([2, 2, 2], &[([0, 0, 0], h), ([1, 1, 1], h)]).expect("ghz is normalized")
    }

    /// W state `(|100> + |010> + |001>)/sqrt(3)`.
    pub fn w() -> Self {
        let a = Complex::new(real::<T>(1.0 / 3f64.sqrt()), T::zero());
        Self::from_entries([2, 2, 2], &[([1, 0, 0], a), ([0, 1, 0], a), ([0, 0, 1], a)])
            .expect("w is normalized")
    }

    /// Weighted W state `sqrt(a)|100> + sqrt(b)|010> + sqrt(c)|001>`.
    pub fn weighted_w(a: T, b: T, c: T) -> Result<Self> {
        Self::from_entries(
            [2, 2, 2],
            &[
                ([1, 0, 0], Complex::new(a.sqrt(), T::zero())),
                ([0, 1, 0], Complex::new(b.sqrt(), T::zero())),
                ([0, 0, 1], Complex::new(c.sqrt(), T::zero())),
            ],
        )
    }

    /// Product basis state `|abc>`.
    pub fn basis_state(dims: [usize; 3], idx: [usize; 3]) -> Result<Self> {
        Self::from_entries(dims, &[(idx, Complex::new(T::one(), T::zero()))])
    }

    /// Applies local unitaries `U_A^*, U_B^*, U_C^*` to express the state in
    /// the rotated product bases (column `k` of each unitary is the new basis
    /// vector `|k>`).
    pub fn in_bases(&self, bases: &[CMatrix<T>; 3]) -> Result<Self> {
        for (s, u) in bases.iter().enumerate() {
            if u.dim != self.dims[s] {
                return Err(Error::InvalidInput(format!(
                    "basis {s} has dimension {} but subsystem has {}",
                    u.dim, self.dims[s]
                )));
            }
        }
        let [da, db, dc] = self.dims;
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.amps.len()];
        // coefficient in rotated basis: sum_abc conj(U_A[a,a'])... psi[a,b,c]
        for ap in 0..da {
            for bp in 0..db {
                for cp in 0..dc {
                    let mut acc = Complex::new(T::zero(), T::zero());
                    for a in 0..da {
                        let ua = bases[0][(a, ap)].conj();
                        if ua.norm_sqr() == T::zero() {
                            continue;
                        }
                        for b in 0..db {
                            let ub = bases[1][(b, bp)].conj();
                            if ub.norm_sqr() == T::zero() {
                                continue;
                            }
                            for c in 0..dc {
                                let uc = bases[2][(c, cp)].conj();
                                acc = acc + ua * ub * uc * self.amp(a, b, c);
                            }
                        }
                    }
                    out[ap * db * dc + bp * dc + cp] = acc;
                }
            }
        }
        PureTripartiteState::new(self.dims, out)
    }

    /// Dense `n`-fold tensor power with regrouped legs
    /// `(A^n, B^n, C^n)`; index digits are big-endian per copy.
    pub fn tensor_power(&self, n: usize) -> Self {
        assert!(n >= 1);
        let [da, db, dc] = self.dims;
        let (na, nb, nc) = (da.pow(n as u32), db.pow(n as u32), dc.pow(n as u32));
        let mut amps = vec![Complex::new(T::zero(), T::zero()); na * nb * nc];
        // Iterate over all n-tuples of per-copy flat indices.
        let base = da * db * dc;
        let total = base.pow(n as u32);
        for flat in 0..total {
            let mut rem = flat;
            let mut coeff = Complex::new(T::one(), T::zero());
            let mut ai = 0usize;
            let mut bi = 0usize;
            let mut ci = 0usize;
            for _ in 0..n {
                let idx = rem % base;
                rem /= base;
                let z = self.amps[idx];
                if z.norm_sqr() == T::zero() {
                    coeff = Complex::new(T::zero(), T::zero());
                    break;
                }
                coeff = coeff * z;
                let a = idx / (db * dc);
                let b = (idx / dc) % db;
                let c = idx % dc;
                ai = ai * da + a;
                bi = bi * db + b;
                ci = ci * dc + c;
            }
            if coeff.norm_sqr() > T::zero() {
                amps[ai * nb * nc + bi * nc + ci] = coeff;
            }
        }
        PureTripartiteState {
            dims: [na, nb, nc],
            amps,
        }
    }
}

/// Reduced density matrix on the chosen subsystem(s).
///
/// Output is Hermitian PSD with unit trace up to rounding.
pub fn marginal<T: Scalar>(state: &PureTripartiteState<T>, subsystem: Subsystem) -> CMatrix<T> {
    let [da, db, dc] = state.dims();
    let (kept_dim, key): (usize, Box<dyn Fn(usize, usize, usize) -> (usize, usize)>) =
        match subsystem {
            Subsystem::A => (da, Box::new(move |a, b, c| (a, b * dc + c))),
            Subsystem::B => (db, Box::new(move |a, b, c| (b, a * dc + c))),
            Subsystem::C => (dc, Box::new(move |a, b, c| (c, a * db + b))),
            Subsystem::AB => (da * db, Box::new(move |a, b, c| (a * db + b, c))),
            Subsystem::AC => (da * dc, Box::new(move |a, b, c| (a * dc + c, b))),
            Subsystem::BC => (db * dc, Box::new(move |a, b, c| (b * dc + c, a))),
        };
    let traced_dim = (da * db * dc) / kept_dim;
    // Collect amplitudes as a kept x traced rectangular matrix Z; marginal = Z Z^*.
    let mut z = vec![Complex::new(T::zero(), T::zero()); kept_dim * traced_dim];
    for a in 0..da {
        for b in 0..db {
            for c in 0..dc {
                let (r, t) = key(a, b, c);
                z[r * traced_dim + t] = state.amp(a, b, c);
            }
        }
    }
    let mut rho = CMatrix::zeros(kept_dim);
    for i in 0..kept_dim {
        for j in i..kept_dim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for t in 0..traced_dim {
                acc = acc + z[i * traced_dim + t] * z[j * traced_dim + t].conj();
            }
            rho[(i, j)] = acc;
            rho[(j, i)] = acc.conj();
        }
    }
    rho
}

/// Nonincreasing nonnegative spectrum summing to one; the squared Schmidt
/// coefficient vector of a bipartition.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalSpectrum<T: Scalar> {
    eigenvalues: Vec<T>,
}

impl<T: Scalar> MarginalSpectrum<T> {
    pub fn new(mut eigenvalues: Vec<T>) -> Result<Self> {
        for v in eigenvalues.iter_mut() {
            if *v < T::zero() {
                if *v < -real::<T>(1e-10) {
                    return Err(Error::InvalidInput("negative spectrum entry".into()));
                }
                *v = T::zero();
            }
        }
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let sum: T = eigenvalues.iter().copied().fold(T::zero(), |a, b| a + b);
        if (sum - T::one()).abs() > real(1e-10) {
            return Err(Error::InvalidInput(format!(
                "spectrum sums to {sum}, expected 1"
            )));
        }
        Ok(MarginalSpectrum { eigenvalues })
    }

    /// Spectrum of the given marginal of a pure state.
    pub fn of_marginal(state: &PureTripartiteState<T>, subsystem: Subsystem) -> Self {
        let rho = marginal(state, subsystem);
        let vals = hermitian_eigenvalues(&rho);
        MarginalSpectrum::new(vals).expect("marginal of a normalized state is a spectrum")
    }

    pub fn values(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn from_probs(probs: &[T]) -> Result<Self> {
        Self::new(probs.to_vec())
    }
}

/// Probability distribution over an ordered finite label set.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<L: Ord + Clone, T: Scalar> {
    labels: Vec<L>,
    probs: Vec<T>,
}

impl<L: Ord + Clone + std::fmt::Debug, T: Scalar> Distribution<L, T> {
    pub fn new(mut pairs: Vec<(L, T)>) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidInput(format!(
                    "duplicate label {:?}",
                    w[0].0
                )));
            }
        }
        let mut sum = T::zero();
        for (_, p) in pairs.iter() {
            if *p < T::zero() {
                return Err(Error::InvalidInput("negative probability".into()));
            }
            sum += *p;
        }
        if (sum - T::one()).abs() > real(1e-12) {
            return Err(Error::InvalidInput(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        let (labels, probs) = pairs.into_iter().unzip();
        Ok(Distribution { labels, probs })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }
}

/// Uniform distribution over `0..d`.
pub fn uniform_distribution<T: Scalar>(d: usize) -> Distribution<usize, T> {
    let p = T::one() / real::<T>(d as f64);
    Distribution::new((0..d).map(|i| (i, p)).collect()).expect("uniform is a distribution")
}

/// Renyi entropy of order `alpha` in bits.
///
/// `alpha = 0` counts the support, `alpha = 1` is Shannon, `alpha = inf` is
/// the min-entropy; each is a dedicated branch rather than a limit of the
/// generic formula.
pub fn renyi_entropy<T: Scalar>(probs: &[T], alpha: T) -> Result<T> {
    if alpha < T::zero() || alpha.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "Renyi order must be nonnegative, got {alpha}"
        )));
    }
    let cutoff = support_cutoff::<T>();
    let support: Vec<T> = probs.iter().copied().filter(|&p| p > cutoff).collect();
    if support.is_empty() {
        return Err(Error::InvalidInput("empty support".into()));
    }
    if alpha == T::zero() {
        return Ok(real::<T>(support.len() as f64).log2());
    }
    if alpha.is_infinite() {
        let max = support.iter().copied().fold(T::zero(), |a, b| a.max(b));
        return Ok(-max.log2());
    }
    if alpha == T::one() {
        let mut h = T::zero();
        for p in support {
            h = h - p * p.log2();
        }
        return Ok(h);
    }
    let ln2 = real::<T>(std::f64::consts::LN_2);
    if (alpha - T::one()).abs() < real(0.5) {
        // sum p^alpha - 1 via expm1 keeps full precision as alpha -> 1.
        let mut s = T::zero();
        for p in &support {
            s = s + *p * ((alpha - T::one()) * p.ln()).exp_m1();
        }
        return Ok(s.ln_1p() / ((T::one() - alpha) * ln2));
    }
    // log-sum-exp of alpha*ln(p) is stable for small and large alpha alike.
    let terms: Vec<T> = support.iter().map(|p| alpha * p.ln()).collect();
    let m = terms
        .iter()
        .copied()
        .fold(T::neg_infinity(), |a, b| a.max(b));
    let mut s = T::zero();
    for t in terms {
        s = s + (t - m).exp();
    }
    let log_sum = (m + s.ln()) / ln2;
    Ok(log_sum / (T::one() - alpha))
}

/// Shannon entropy in bits.
pub fn shannon_entropy<T: Scalar>(probs: &[T]) -> T {
    renyi_entropy(probs, T::one()).expect("order 1 is valid")
}

/// Binary entropy `h(p)`.
pub fn binary_entropy<T: Scalar>(p: T) -> T {
    shannon_entropy(&[p, T::one() - p])
}

/// Kullback-Leibler divergence `D(Q || P)` in bits; `+inf` when the support
/// of `Q` is not contained in the support of `P`.
pub fn relative_entropy<L: Ord + Clone + std::fmt::Debug, T: Scalar>(
    q: &Distribution<L, T>,
    p: &Distribution<L, T>,
) -> Result<T> {
    if q.labels() != p.labels() {
        return Err(Error::LabelMismatch);
    }
    Ok(relative_entropy_probs(q.probs(), p.probs()))
}

/// KL divergence on aligned probability vectors.
pub fn relative_entropy_probs<T: Scalar>(q: &[T], p: &[T]) -> T {
    let cutoff = support_cutoff::<T>();
    let mut d = T::zero();
    for (&qi, &pi) in q.iter().zip(p.iter()) {
        if qi > cutoff {
            if pi <= cutoff {
                return T::infinity();
            }
            d = d + qi * (qi / pi).log2();
        }
    }
    d
}

/// Min-entropy of entanglement `E_inf` of a bipartite pure state given as an
/// amplitude matrix `Z` with unit Frobenius norm: `-log2` of the largest
/// eigenvalue of `Z Z^*`.
pub fn min_entropy_entanglement<T: Scalar>(
    z: &[Complex<T>],
    rows: usize,
    cols: usize,
) -> Result<T> {
    if z.len() != rows * cols || rows == 0 || cols == 0 {
        return Err(Error::InvalidInput("bad matrix shape".into()));
    }
    let norm_sqr: T = z.iter().map(|v| v.norm_sqr()).fold(T::zero(), |a, b| a + b);
    if (norm_sqr - T::one()).abs() > real(1e-10) {
        return Err(Error::NotNormalized {
            deviation: (norm_sqr - T::one()).abs().to_f64().unwrap_or(f64::NAN),
        });
    }
    // Work with the smaller Gram matrix.
    let (n, gram_of_rows) = if rows <= cols { (rows, true) } else { (cols, false) };
    let mut gram = CMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            if gram_of_rows {
                for t in 0..cols {
                    acc = acc + z[i * cols + t] * z[j * cols + t].conj();
                }
            } else {
                for t in 0..rows {
                    acc = acc + z[t * cols + i].conj() * z[t * cols + j];
                }
            }
            gram[(i, j)] = acc;
            gram[(j, i)] = acc.conj();
        }
    }
    let top = largest_psd_eigenvalue(&gram);
    Ok(-top.log2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_state(dims: [usize; 3], seed: u64) -> PureTripartiteState<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = dims[0] * dims[1] * dims[2];
        let mut amps: Vec<Complex<f64>> = (0..n)
            .map(|_| Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in amps.iter_mut() {
            *z /= norm;
        }
        PureTripartiteState::new(dims, amps).unwrap()
    }

    #[test]
    fn ghz_marginal_a_is_maximally_mixed() {
        let rho = marginal(&PureTripartiteState::<f64>::ghz(), Subsystem::A);
        assert!((rho[(0, 0)].re - 0.5).abs() < 1e-14);
        assert!((rho[(1, 1)].re - 0.5).abs() < 1e-14);
        assert!(rho[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn w_marginal_c_matches_hand_contraction() {
        // Direct contraction: p(c=0) = 2/3, p(c=1) = 1/3, no coherences.
        let rho = marginal(&PureTripartiteState::<f64>::w(), Subsystem::C);
        assert!((rho[(0, 0)].re - 2.0 / 3.0).abs() < 1e-14);
        assert!((rho[(1, 1)].re - 1.0 / 3.0).abs() < 1e-14);
        assert!(rho[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn product_state_marginal_is_rank_one() {
        let s = PureTripartiteState::<f64>::basis_state([2, 2, 2], [0, 0, 0]).unwrap();
        for sub in [Subsystem::A, Subsystem::B, Subsystem::C, Subsystem::AB] {
            let vals = hermitian_eigenvalues(&marginal(&s, sub));
            assert!((vals[0] - 1.0).abs() < 1e-14);
            for v in &vals[1..] {
                assert!(v.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn marginal_is_hermitian_psd_trace_one() {
        for seed in 0..5u64 {
            let s = random_state([2, 3, 2], seed);
            for sub in [
                Subsystem::A,
                Subsystem::B,
                Subsystem::C,
                Subsystem::AB,
                Subsystem::AC,
                Subsystem::BC,
            ] {
                let rho = marginal(&s, sub);
                assert!(rho.hermiticity_defect() < 1e-12);
                assert!((rho.trace().re - 1.0).abs() < 1e-10);
                assert!(crate::linalg::is_psd(&rho, 1e-10));
            }
        }
    }

    #[test]
    fn complementary_marginals_share_spectra() {
        // Schmidt symmetry across each bipartition.
        for seed in 0..4u64 {
            let s = random_state([2, 2, 3], seed);
            for (x, xbar) in [
                (Subsystem::A, Subsystem::BC),
                (Subsystem::B, Subsystem::AC),
                (Subsystem::C, Subsystem::AB),
            ] {
                let sx = MarginalSpectrum::of_marginal(&s, x);
                let sy = MarginalSpectrum::of_marginal(&s, xbar);
                for (a, b) in sx.values().iter().zip(sy.values()) {
                    assert!((a - b).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn renyi_entropy_special_cases() {
        // Uniform: all orders coincide with log2 d.
        for alpha in [0.0, 0.5, 1.0, 2.0, f64::INFINITY] {
            let h = renyi_entropy(&[0.25, 0.25, 0.25, 0.25], alpha).unwrap();
            assert!((h - 2.0).abs() < 1e-12, "alpha={alpha} gave {h}");
        }
        let p = [0.5, 0.25, 0.25];
        assert!((renyi_entropy(&p, f64::INFINITY).unwrap() - 1.0).abs() < 1e-14);
        // -log2 sum p^2 = log2(8/3)
        let expected = (8.0f64 / 3.0).log2();
        assert!((renyi_entropy(&p, 2.0).unwrap() - expected).abs() < 1e-13);
        assert!(renyi_entropy(&p, -0.5).is_err());
    }

    #[test]
    fn renyi_entropy_ignores_numerical_dust() {
        let p: [f64; 3] = [0.5, 0.5, 1e-16];
        let h0 = renyi_entropy(&p, 0.0).unwrap();
        assert!((h0 - 1.0).abs() < 1e-12);
        let h_half = renyi_entropy(&p, 0.5).unwrap();
        assert!((h_half - 1.0).abs() < 1e-7);
    }

    #[test]
    fn relative_entropy_cases() {
        let q = Distribution::new(vec![(0usize, 0.5), (1, 0.5), (2, 0.0)]).unwrap();
        let p = uniform_distribution::<f64>(3);
        let d = relative_entropy(&q, &p).unwrap();
        assert!((d - (1.5f64).log2()).abs() < 1e-13);

        let q2: Distribution<usize, f64> = Distribution::new(vec![(0, 1.0), (1, 0.0)]).unwrap();
        let p2: Distribution<usize, f64> = Distribution::new(vec![(0, 0.0), (1, 1.0)]).unwrap();
        assert!(relative_entropy(&q2, &p2).unwrap().is_infinite());

        assert!((relative_entropy(&p, &p).unwrap()).abs() < 1e-14);

        let mism = uniform_distribution::<f64>(2);
        assert!(matches!(
            relative_entropy(&q2, &mism),
            Ok(_) | Err(Error::LabelMismatch)
        ));
    }

    #[test]
    fn min_entropy_examples() {
        // EPR as I/sqrt(2).
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = vec![
            Complex::new(s, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(s, 0.0),
        ];
        assert!((min_entropy_entanglement(&z, 2, 2).unwrap() - 1.0).abs() < 1e-12);

        // [[1,1],[1,0]]/sqrt(3): top eigenvalue of ZZ* is (3+sqrt 5)/6.
        let t = 1.0 / 3f64.sqrt();
        let z = vec![
            Complex::new(t, 0.0),
            Complex::new(t, 0.0),
            Complex::new(t, 0.0),
            Complex::new(0.0, 0.0),
        ];
        let expected = -((3.0 + 5f64.sqrt()) / 6.0).log2();
        assert!((min_entropy_entanglement(&z, 2, 2).unwrap() - expected).abs() < 1e-12);

        // Rank one.
        let z: Vec<Complex<f64>> = vec![
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
        ];
        assert!(min_entropy_entanglement(&z, 2, 2).unwrap().abs() < 1e-12);

        // Non-normalized input is rejected.
        let z: Vec<Complex<f64>> = vec![Complex::new(2.0, 0.0); 4];
        assert!(min_entropy_entanglement(&z, 2, 2).is_err());
    }

    #[test]
    fn min_entropy_agrees_with_order_inf_renyi() {
        for seed in 10..14u64 {
            let s = random_state([3, 2, 2], seed);
            // Z for the A:BC cut.
            let [da, db, dc] = s.dims();
            let mut z = Vec::with_capacity(da * db * dc);
            for a in 0..da {
                for b in 0..db {
                    for c in 0..dc {
                        z.push(s.amp(a, b, c));
                    }
                }
            }
            let e = min_entropy_entanglement(&z, da, db * dc).unwrap();
            let spec = MarginalSpectrum::of_marginal(&s, Subsystem::A);
            let h = renyi_entropy(spec.values(), f64::INFINITY).unwrap();
            assert!((e - h).abs() < 1e-10);
        }
    }

    proptest! {
        #[test]
        fn renyi_nonincreasing_in_alpha(raw in proptest::collection::vec(1e-6f64..1.0, 2..6)) {
            let sum: f64 = raw.iter().sum();
            let p: Vec<f64> = raw.iter().map(|x| x / sum).collect();
            let mut grid: Vec<f64> = (0..=32).map(|i| i as f64 * 0.25).collect();
            grid.push(f64::INFINITY);
            let hs: Vec<f64> = grid.iter().map(|&a| renyi_entropy(&p, a).unwrap()).collect();
            for w in hs.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-9);
            }
        }

        #[test]
        fn relative_entropy_nonnegative(
            raw_q in proptest::collection::vec(1e-6f64..1.0, 4),
            raw_p in proptest::collection::vec(1e-6f64..1.0, 4),
        ) {
            let sq: f64 = raw_q.iter().sum();
            let sp: f64 = raw_p.iter().sum();
            let q: Vec<f64> = raw_q.iter().map(|x| x / sq).collect();
            let p: Vec<f64> = raw_p.iter().map(|x| x / sp).collect();
            let d = relative_entropy_probs(&q, &p);
            prop_assert!(d >= -1e-10);
            let dqq = relative_entropy_probs(&q, &q);
            prop_assert!(dqq.abs() < 1e-10);
        }
    }
}
