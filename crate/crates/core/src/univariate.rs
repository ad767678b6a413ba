//! Flattened one-variable mixed polynomial `g(w, w̄) = Σ c_{ab} w^a w̄^b`.
//!
//! The map-backed [`MixedPolynomial`] is convenient for algebra; the contour
//! and subdivision loops evaluate the same polynomial millions of times, so
//! they work on this dense-index form instead.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::MixedPolynomial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniTerm {
    pub a: u32,
    pub b: u32,
    pub c: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixedUnivariate {
    terms: Vec<UniTerm>,
    max_a: u32,
    max_b: u32,
}

/// Taylor coefficients `g_{ij}` of `g(center + Δ) = Σ g_{ij} Δ^i Δ̄^j`, stored row-major in `i`.
#[derive(Debug, Clone)]
pub struct TaylorExpansion {
    pub coeffs: Vec<Complex64>,
    width: usize,
}

impl TaylorExpansion {
    /// `g_{ij}`; zero outside the stored range.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if j >= self.width {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs.get(i * self.width + j).copied().unwrap_or_default()
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (k / self.width, k % self.width, *c))
    }

    pub fn value(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Upper bound on `|g(center + Δ) - g(center)|` for `|Δ| ≤ delta`.
    pub fn variation_bound(&self, delta: f64) -> f64 {
        self.entries()
            .filter(|&(i, j, _)| i + j > 0)
            .map(|(i, j, c)| c.norm() * delta.powi((i + j) as i32))
            .sum()
    }

    /// Upper bound on the operator norm of `Dg(center + Δ) - Dg(center)` for `|Δ| ≤ rho`.
    pub fn derivative_variation_bound(&self, rho: f64) -> f64 {
        self.entries()
            .filter(|&(i, j, _)| i + j >= 2)
            .map(|(i, j, c)| c.norm() * (i + j) as f64 * rho.powi((i + j - 1) as i32))
            .sum()
    }
}

fn binomial_table(n: usize) -> Vec<Vec<f64>> {
    let mut t = vec![vec![0.0; n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = 1.0;
        for k in 1..=i {
            t[i][k] = t[i - 1][k - 1] + if k < i { t[i - 1][k] } else { 0.0 };
        }
    }
    t
}

fn powers(z: Complex64, k: u32) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    out.push(acc);
    for _ in 0..k {
        acc *= z;
        out.push(acc);
    }
    out
}

impl MixedUnivariate {
    pub fn new(g: &MixedPolynomial) -> Result<Self> {
        if g.n_vars() != 1 {
            return Err(Error::NotOneVariable { n: g.n_vars() });
        }
        let terms: Vec<UniTerm> = g
            .terms()
            .map(|(e, c)| UniTerm {
                a: e.nu[0],
                b: e.mu[0],
                c: *c,
            })
            .collect();
        let max_a = terms.iter().map(|t| t.a).max().unwrap_or(0);
        let max_b = terms.iter().map(|t| t.b).max().unwrap_or(0);
        Ok(MixedUnivariate { terms, max_a, max_b })
    }

    pub fn terms(&self) -> &[UniTerm] {
        &self.terms
    }

    pub fn radial_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.a + t.b).max().unwrap_or(0)
    }

    pub fn max_coefficient_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.c.norm()).fold(0.0, f64::max)
    }

    /// The unique monomial of maximal radial degree.
    pub fn top_term(&self) -> Result<UniTerm> {
        let d = self.radial_degree();
        let top: Vec<&UniTerm> = self.terms.iter().filter(|t| t.a + t.b == d).collect();
        match top.as_slice() {
            [t] => Ok(**t),
            _ => Err(Error::NotMonic {
                degree: d,
                count: top.len(),
            }),
        }
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let pw = powers(w, self.max_a);
        let pwb = powers(w.conj(), self.max_b);
        self.terms
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t.c * pw[t.a as usize] * pwb[t.b as usize])
    }

    /// `(g, ∂g/∂w, ∂g/∂w̄)` at `w`.
    pub fn eval_with_derivatives(&self, w: Complex64) -> (Complex64, Complex64, Complex64) {
        let pw = powers(w, self.max_a);
        let pwb = powers(w.conj(), self.max_b);
        let zero = Complex64::new(0.0, 0.0);
        let (mut g, mut gw, mut gwb) = (zero, zero, zero);
        for t in &self.terms {
            let (a, b) = (t.a as usize, t.b as usize);
            g += t.c * pw[a] * pwb[b];
            if a > 0 {
                gw += t.c * (a as f64) * pw[a - 1] * pwb[b];
            }
            if b > 0 {
                gwb += t.c * (b as f64) * pw[a] * pwb[b - 1];
            }
        }
        (g, gw, gwb)
    }

    /// `Σ |c_{ab}| max(1, |w|)^{a+b}`, the magnitude against which residuals are judged.
    pub fn coefficient_scale(&self, w: Complex64) -> f64 {
        let r = w.norm().max(1.0);
        self.terms.iter().map(|t| t.c.norm() * r.powi((t.a + t.b) as i32)).sum()
    }

    /// `Σ |c_{ab}| |w|^{a+b}`: bound on the rounding-free magnitude of the summands.
    pub fn summand_magnitude(&self, w: Complex64) -> f64 {
        let r = w.norm();
        self.terms.iter().map(|t| t.c.norm() * r.powi((t.a + t.b) as i32)).sum()
    }

    pub fn taylor(&self, center: Complex64) -> TaylorExpansion {
        let width = self.max_b as usize + 1;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (self.max_a as usize + 1) * width];
        let binom = binomial_table(self.max_a.max(self.max_b) as usize);
        let pw = powers(center, self.max_a);
        let pwb = powers(center.conj(), self.max_b);
        for t in &self.terms {
            let (a, b) = (t.a as usize, t.b as usize);
            for i in 0..=a {
                let left = t.c * binom[a][i] * pw[a - i];
                for j in 0..=b {
                    coeffs[i * width + j] += left * binom[b][j] * pwb[b - j];
                }
            }
        }
        TaylorExpansion { coeffs, width }
    }

    pub fn to_polynomial(&self) -> MixedPolynomial {
        MixedPolynomial::univariate(self.terms.iter().map(|t| (t.a, t.b, t.c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn worked_example(t: f64) -> MixedUnivariate {
        MixedUnivariate::new(&MixedPolynomial::univariate([
            (2, 1, c(-2.0, 0.0)),
            (2, 0, c(t, 0.0)),
            (0, 0, c(1.0, 0.0)),
        ]))
        .unwrap()
    }

    #[test]
    fn matches_map_backed_evaluation() {
        let g = worked_example(3.0);
        let p = g.to_polynomial();
        for w in [c(0.3, -0.7), c(-1.5, 2.0), c(0.0, 0.0)] {
            assert_eq!(g.eval(w), p.evaluate(&[w]).unwrap());
        }
    }

    #[test]
    fn taylor_reproduces_shifted_values() {
        let g = worked_example(3.0);
        let center = c(0.4, 0.9);
        let tay = g.taylor(center);
        let delta = c(0.05, -0.02);
        let mut sum = c(0.0, 0.0);
        for i in 0..3 {
            for j in 0..2 {
                sum += tay.get(i, j) * delta.powu(i as u32) * delta.conj().powu(j as u32);
            }
        }
        assert!((sum - g.eval(center + delta)).norm() < 1e-13);
        let (_, gw, gwb) = g.eval_with_derivatives(center);
        assert!((tay.get(1, 0) - gw).norm() < 1e-13);
        assert!((tay.get(0, 1) - gwb).norm() < 1e-13);
        assert_eq!(tay.get(0, 2), c(0.0, 0.0));
        assert_eq!(tay.get(3, 0), c(0.0, 0.0));
        let bound = tay.variation_bound(delta.norm());
        assert!((g.eval(center + delta) - g.eval(center)).norm() <= bound);
    }

    #[test]
    fn top_term_detects_ties() {
        assert_eq!(worked_example(3.0).top_term().unwrap().c, c(-2.0, 0.0));
        let tie = MixedUnivariate::new(&MixedPolynomial::univariate([(2, 0, c(1.0, 0.0)), (1, 1, c(1.0, 0.0))])).unwrap();
        assert_eq!(tie.top_term().unwrap_err(), Error::NotMonic { degree: 2, count: 2 });
    }
}
