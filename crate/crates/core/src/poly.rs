//! Sparse mixed polynomials in `z = (z_1, ..., z_n)` and their conjugates.
//!
//! A [`MixedPolynomial`] maps exponent pairs `(ν, μ)` to nonzero complex
//! coefficients, denoting `Σ c_{ν,μ} z^ν z̄^μ`. Terms are kept in a
//! `BTreeMap`, so iteration (and therefore evaluation and printing) follows the
//! lexicographic order of `(ν, μ)` and is bit-for-bit reproducible.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::homogeneity;

/// Holomorphic exponents `nu` and anti-holomorphic exponents `mu` of one monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentPair {
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
}

impl ExponentPair {
    pub fn new(nu: Vec<u32>, mu: Vec<u32>) -> Self {
        assert_eq!(nu.len(), mu.len(), "exponent vectors must have equal length");
        ExponentPair { nu, mu }
    }

    pub fn constant(n: usize) -> Self {
        ExponentPair {
            nu: vec![0; n],
            mu: vec![0; n],
        }
    }

    pub fn n_vars(&self) -> usize {
        self.nu.len()
    }

    /// `|ν| + |μ|`.
    pub fn radial_degree(&self) -> u32 {
        self.nu.iter().sum::<u32>() + self.mu.iter().sum::<u32>()
    }

    /// `|ν| - |μ|`.
    pub fn polar_degree(&self) -> i64 {
        self.nu.iter().map(|&e| e as i64).sum::<i64>() - self.mu.iter().map(|&e| e as i64).sum::<i64>()
    }

    fn product(&self, other: &ExponentPair) -> ExponentPair {
        ExponentPair {
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| a + b).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
        }
    }

    fn swapped(&self) -> ExponentPair {
        ExponentPair {
            nu: self.mu.clone(),
            mu: self.nu.clone(),
        }
    }
}

/// Signed zeros are folded to `+0.0` so that equal coefficients compare and print identically.
fn normalize(c: Complex64) -> Complex64 {
    Complex64::new(c.re + 0.0, c.im + 0.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixedPolynomial {
    n: usize,
    terms: BTreeMap<ExponentPair, Complex64>,
}

impl MixedPolynomial {
    pub fn zero(n: usize) -> Self {
        MixedPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Complex64) -> Self {
        Self::monomial(ExponentPair::constant(n), c)
    }

    pub fn monomial(exponents: ExponentPair, c: Complex64) -> Self {
        let mut p = Self::zero(exponents.n_vars());
        p.add_term(exponents, c);
        p
    }

    /// The coordinate function `z_j` (0-based).
    pub fn var(n: usize, j: usize) -> Self {
        let mut e = ExponentPair::constant(n);
        e.nu[j] = 1;
        Self::monomial(e, Complex64::new(1.0, 0.0))
    }

    /// The conjugate coordinate `z̄_j` (0-based).
    pub fn conj_var(n: usize, j: usize) -> Self {
        let mut e = ExponentPair::constant(n);
        e.mu[j] = 1;
        Self::monomial(e, Complex64::new(1.0, 0.0))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentPair, Complex64)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.n_vars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.n_vars(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// One-variable polynomial from `(a, b, c)` triples meaning `c w^a w̄^b`.
    pub fn univariate<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Complex64)>,
    {
        let mut p = Self::zero(1);
        for (a, b, c) in terms {
            p.add_term(ExponentPair::new(vec![a], vec![b]), c);
        }
        p
    }

    fn add_term(&mut self, e: ExponentPair, c: Complex64) {
        debug_assert_eq!(e.n_vars(), self.n);
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum == Complex64::new(0.0, 0.0) {
                    o.remove();
                } else {
                    *o.get_mut() = normalize(sum);
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                if c != Complex64::new(0.0, 0.0) {
                    v.insert(normalize(c));
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of `(ν, μ)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentPair, &Complex64)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentPair) -> Complex64 {
        self.terms.get(e).copied().unwrap_or_default()
    }

    pub fn max_coefficient_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest `|ν| + |μ|` over the support (0 for the zero polynomial).
    pub fn radial_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.radial_degree()).max().unwrap_or(0)
    }

    fn check_n(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        self.check_n(point.len())?;
        let conj: Vec<Complex64> = point.iter().map(|z| z.conj()).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = *c;
            for j in 0..self.n {
                if e.nu[j] > 0 {
                    m *= point[j].powu(e.nu[j]);
                }
                if e.mu[j] > 0 {
                    m *= conj[j].powu(e.mu[j]);
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Formal Wirtinger derivative `∂f/∂z_j` (or `∂f/∂z̄_j` when `conjugate`), 0-based `j`.
    pub fn wirtinger(&self, j: usize, conjugate: bool) -> Result<Self> {
        if j >= self.n {
            return Err(Error::VariableOutOfRange { index: j, n: self.n });
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let exp = if conjugate { e.mu[j] } else { e.nu[j] };
            if exp == 0 {
                continue;
            }
            let mut d = e.clone();
            if conjugate {
                d.mu[j] -= 1;
            } else {
                d.nu[j] -= 1;
            }
            out.add_term(d, c * exp as f64);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other.n)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.product(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.n, Complex64::new(1.0, 0.0));
        for _ in 0..k {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// `conj(f)`: exponents swap and coefficients are conjugated.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.swapped(), c.conj());
        }
        out
    }

    /// Substitutes `z_i ↦ Σ_k rows[i][k] w_k` (and the conjugate rule for `z̄_i`),
    /// producing a polynomial in `rows[i].len()` new variables.
    pub fn substitute_linear(&self, rows: &[Vec<Complex64>]) -> Result<Self> {
        self.check_n(rows.len())?;
        let m = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != m) || m == 0 {
            return Err(Error::InvalidParams("substitution rows must share a nonzero width".into()));
        }
        let linear: Vec<MixedPolynomial> = rows
            .iter()
            .map(|row| {
                let mut p = Self::zero(m);
                for (k, a) in row.iter().enumerate() {
                    p = p.add(&Self::var(m, k).scale(*a)).expect("same n");
                }
                p
            })
            .collect();
        let linear_bar: Vec<MixedPolynomial> = linear.iter().map(|p| p.conjugate()).collect();

        let mut cache: BTreeMap<(usize, bool, u32), MixedPolynomial> = BTreeMap::new();
        let mut power = |i: usize, bar: bool, k: u32| -> MixedPolynomial {
            cache
                .entry((i, bar, k))
                .or_insert_with(|| if bar { linear_bar[i].pow(k) } else { linear[i].pow(k) })
                .clone()
        };

        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut term = Self::constant(m, *c);
            for i in 0..self.n {
                if e.nu[i] > 0 {
                    term = term.mul(&power(i, false, e.nu[i]))?;
                }
                if e.mu[i] > 0 {
                    term = term.mul(&power(i, true, e.mu[i]))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Restricts `f(z_1, ..., z_n)`, `n ≥ 3`, to the line `z_j = a_{j1} z_1 + a_{j2} z_2`
    /// for `j = 3..n`; `coeffs[j - 3] = [a_{j1}, a_{j2}]`.
    pub fn restrict_to_line(&self, coeffs: &[[Complex64; 2]]) -> Result<Self> {
        if self.n < 3 {
            return Err(Error::AmbientDimension { n: self.n });
        }
        if coeffs.len() != self.n - 2 {
            return Err(Error::DimensionMismatch {
                expected: self.n - 2,
                found: coeffs.len(),
            });
        }
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let mut rows = vec![vec![one, zero], vec![zero, one]];
        rows.extend(coeffs.iter().map(|a| a.to_vec()));
        self.substitute_linear(&rows)
    }

    /// Sets `z_chart = 1` (0-based chart) in a strongly polar homogeneous `f`.
    ///
    /// On `z_chart ≠ 0`, `f(z) = g(u) z_chart^{q+r} z̄_chart^r` with `u_i = z_i / z_chart`.
    pub fn dehomogenize(&self, chart: usize) -> Result<Self> {
        if chart >= self.n {
            return Err(Error::VariableOutOfRange {
                index: chart,
                n: self.n,
            });
        }
        if self.n < 2 {
            return Err(Error::AmbientDimension { n: self.n });
        }
        let analysis = homogeneity::analyze(self)?;
        if !analysis.strongly_polar_homogeneous {
            return Err(Error::NotStronglyPolarHomogeneous);
        }
        let mut out = Self::zero(self.n - 1);
        for (e, c) in &self.terms {
            let mut nu = e.nu.clone();
            let mut mu = e.mu.clone();
            nu.remove(chart);
            mu.remove(chart);
            out.add_term(ExponentPair { nu, mu }, *c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z2zbar() -> MixedPolynomial {
        MixedPolynomial::univariate([(2, 1, c(1.0, 0.0))])
    }

    #[test]
    fn evaluate_examples() {
        let f = MixedPolynomial::univariate([(1, 1, c(1.0, 0.0))]);
        assert_eq!(f.evaluate(&[c(0.0, 2.0)]).unwrap(), c(4.0, 0.0));
        assert_eq!(z2zbar().evaluate(&[c(1.0, 1.0)]).unwrap(), c(2.0, 2.0));
        let g = MixedPolynomial::var(3, 0).mul(&MixedPolynomial::conj_var(3, 2)).unwrap();
        assert_eq!(g.evaluate(&[c(0.0, 0.0); 3]).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn evaluate_rejects_wrong_length() {
        let err = z2zbar().evaluate(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, found: 2 });
    }

    #[test]
    fn wirtinger_rules() {
        let f = z2zbar();
        assert_eq!(f.wirtinger(0, true).unwrap(), MixedPolynomial::univariate([(2, 0, c(1.0, 0.0))]));
        assert_eq!(f.wirtinger(0, false).unwrap(), MixedPolynomial::univariate([(1, 1, c(2.0, 0.0))]));
        let cube = MixedPolynomial::univariate([(3, 0, c(1.0, 0.0))]);
        assert!(cube.wirtinger(0, true).unwrap().is_zero());
        assert!(f.wirtinger(1, false).is_err());
    }

    #[test]
    fn product_and_conjugate() {
        let p = MixedPolynomial::var(1, 0).mul(&MixedPolynomial::conj_var(1, 0)).unwrap();
        assert_eq!(p, MixedPolynomial::univariate([(1, 1, c(1.0, 0.0))]));

        let f = MixedPolynomial::univariate([(2, 0, c(1.0, 0.0)), (0, 0, c(0.0, 1.0))]);
        let expected = MixedPolynomial::univariate([(0, 2, c(1.0, 0.0)), (0, 0, c(0.0, -1.0))]);
        assert_eq!(f.conjugate(), expected);
    }

    #[test]
    fn cancellation_prunes_terms() {
        let f = z2zbar();
        assert!(f.sub(&f).unwrap().is_zero());
        assert!(f.add(&MixedPolynomial::zero(2)).is_err());
    }

    #[test]
    fn dehomogenize_examples() {
        let one = c(1.0, 0.0);
        // z1^2 z̄1 + z2^2 z̄2 on chart z2 = 1
        let f = MixedPolynomial::from_terms(
            2,
            [
                (ExponentPair::new(vec![2, 0], vec![1, 0]), one),
                (ExponentPair::new(vec![0, 2], vec![0, 1]), one),
            ],
        )
        .unwrap();
        let g = f.dehomogenize(1).unwrap();
        assert_eq!(g, MixedPolynomial::univariate([(2, 1, one), (0, 0, one)]));

        // -2 z1^2 z̄1 + 3 z1^2 z̄2 + z2^2 z̄2
        let f = MixedPolynomial::from_terms(
            2,
            [
                (ExponentPair::new(vec![2, 0], vec![1, 0]), c(-2.0, 0.0)),
                (ExponentPair::new(vec![2, 0], vec![0, 1]), c(3.0, 0.0)),
                (ExponentPair::new(vec![0, 2], vec![0, 1]), one),
            ],
        )
        .unwrap();
        let g = f.dehomogenize(1).unwrap();
        assert_eq!(g, MixedPolynomial::univariate([(2, 1, c(-2.0, 0.0)), (2, 0, c(3.0, 0.0)), (0, 0, one)]));

        let f = MixedPolynomial::monomial(ExponentPair::new(vec![0, 2], vec![0, 1]), one);
        assert_eq!(f.dehomogenize(1).unwrap(), MixedPolynomial::constant(1, one));
    }

    #[test]
    fn dehomogenize_requires_strong_polarity() {
        // z1^2 + z1 z̄2 is not polar homogeneous with unit weights
        let f = MixedPolynomial::from_terms(
            2,
            [
                (ExponentPair::new(vec![2, 0], vec![0, 0]), c(1.0, 0.0)),
                (ExponentPair::new(vec![1, 0], vec![0, 1]), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        assert_eq!(f.dehomogenize(1).unwrap_err(), Error::NotStronglyPolarHomogeneous);
    }

    #[test]
    fn restrict_identity_line() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let f = MixedPolynomial::monomial(ExponentPair::new(vec![0, 0, 2], vec![0, 0, 1]), one);
        let g = f.restrict_to_line(&[[one, zero]]).unwrap();
        assert_eq!(g, MixedPolynomial::monomial(ExponentPair::new(vec![2, 0], vec![1, 0]), one));
    }

    #[test]
    fn restrict_fermat_sum_expands_to_ten_terms() {
        let one = c(1.0, 0.0);
        let mut f = MixedPolynomial::zero(3);
        for j in 0..3 {
            let mut e = ExponentPair::constant(3);
            e.nu[j] = 2;
            e.mu[j] = 1;
            f = f.add(&MixedPolynomial::monomial(e, one)).unwrap();
        }
        let g = f.restrict_to_line(&[[one, one]]).unwrap();
        // (z1+z2)^2 (z̄1+z̄2) has 6 monomials; z1^2 z̄1 and z2^2 z̄2 merge with two of them.
        assert_eq!(g.len(), 6);
        let expected_coeffs = [
            (vec![2, 0], vec![1, 0], 2.0),
            (vec![0, 2], vec![0, 1], 2.0),
            (vec![2, 0], vec![0, 1], 1.0),
            (vec![1, 1], vec![1, 0], 2.0),
            (vec![1, 1], vec![0, 1], 2.0),
            (vec![0, 2], vec![1, 0], 1.0),
        ];
        for (nu, mu, v) in expected_coeffs {
            assert_eq!(g.coefficient(&ExponentPair::new(nu, mu)), c(v, 0.0));
        }
        let a = [c(0.3, -1.1), c(2.0, 0.5)];
        let lhs = g.evaluate(&a).unwrap();
        let rhs = f.evaluate(&[a[0], a[1], a[0] + a[1]]).unwrap();
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
    }

    #[test]
    fn restrict_needs_three_variables() {
        let f = MixedPolynomial::var(2, 0);
        assert_eq!(f.restrict_to_line(&[]).unwrap_err(), Error::AmbientDimension { n: 2 });
    }
}
