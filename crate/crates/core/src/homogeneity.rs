//! Radial and polar weighted homogeneity.
//!
//! A mixed polynomial is radially weighted homogeneous with weights `q` when
//! every monomial satisfies `Σ q_j (ν_j + μ_j) = d_r`, and polar weighted
//! homogeneous with weights `p` when `Σ p_j (ν_j - μ_j) = d_p`. Both are
//! homogeneous integer linear systems over the monomial support; we row-reduce
//! the difference matrix over `ℚ` and search its integer kernel.

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::poly::MixedPolynomial;

type Q = Ratio<i128>;

/// Default tolerance for [`is_mixed_singular`].
pub const DEFAULT_SINGULAR_TOL: f64 = 1e-8;

/// Largest weight magnitude tried when the kernel has dimension two or more.
const MAX_SEARCH_WEIGHT: i64 = 32;
/// Cap on candidate vectors examined in the multi-dimensional search.
const SEARCH_BUDGET: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAnalysis {
    pub radial_weights: Option<Vec<i64>>,
    pub radial_degree: Option<i64>,
    pub polar_weights: Option<Vec<i64>>,
    pub polar_degree: Option<i64>,
    /// `p_j = q_j` for all `j`.
    pub strongly_polar_weighted: bool,
    /// `p_j = q_j = 1` for all `j`.
    pub strongly_polar_homogeneous: bool,
    pub class_q: Option<i64>,
    pub class_r: Option<i64>,
    /// Set when either weight system has a kernel of dimension ≥ 2, so the
    /// reported vector is one of several primitive choices.
    pub non_unique_weights: bool,
}

struct Reduced {
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    n: usize,
}

fn row_reduce(mut m: Vec<Vec<Q>>, n: usize) -> Reduced {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::from_integer(1) / m[r][col];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != Q::from_integer(0) {
                let factor = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Reduced { rows: m, pivots, n }
}

impl Reduced {
    fn free_columns(&self) -> Vec<usize> {
        (0..self.n).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Kernel vector with the given values on the free columns.
    fn complete(&self, free: &[usize], values: &[Q]) -> Vec<Q> {
        let mut x = vec![Q::from_integer(0); self.n];
        for (&c, &v) in free.iter().zip(values) {
            x[c] = v;
        }
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let mut s = Q::from_integer(0);
            for (&c, &v) in free.iter().zip(values) {
                s -= row[c] * v;
            }
            x[pc] = s;
        }
        x
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Domain {
    Positive,
    Nonzero,
}

fn primitive(x: &[Q]) -> Vec<i64> {
    let lcm = x.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let ints: Vec<i128> = x.iter().map(|v| (v * Q::from_integer(lcm)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, v| acc.gcd(v));
    ints.iter().map(|v| (v / g.max(1)) as i64).collect()
}

/// Returns an integer kernel vector and whether the kernel dimension exceeds one.
fn search_kernel<K: Ord>(
    red: &Reduced,
    domain: Domain,
    key: impl Fn(&[i64]) -> K,
) -> Option<(Vec<i64>, bool)> {
    let free = red.free_columns();
    match free.len() {
        0 => None,
        1 => {
            let v = primitive(&red.complete(&free, &[Q::from_integer(1)]));
            match domain {
                Domain::Nonzero => Some((v, false)),
                Domain::Positive => {
                    if v.iter().all(|&x| x > 0) {
                        Some((v, false))
                    } else if v.iter().all(|&x| x < 0) {
                        Some((v.iter().map(|x| -x).collect(), false))
                    } else {
                        None
                    }
                }
            }
        }
        k => {
            let mut budget = SEARCH_BUDGET;
            for m in 1..=MAX_SEARCH_WEIGHT {
                let lo = if domain == Domain::Positive { 1 } else { -m };
                let span = (m - lo + 1) as usize;
                let total = span.checked_pow(k as u32)?;
                if total > budget {
                    return None;
                }
                budget -= total;
                let mut best: Option<(K, Vec<i64>)> = None;
                for idx in 0..total {
                    let mut rest = idx;
                    let values: Vec<Q> = (0..k)
                        .map(|_| {
                            let v = lo + (rest % span) as i64;
                            rest /= span;
                            Q::from_integer(v as i128)
                        })
                        .collect();
                    let x = red.complete(&free, &values);
                    if x.iter().any(|v| !v.is_integer()) {
                        continue;
                    }
                    let xi: Vec<i64> = x.iter().map(|v| v.to_integer() as i64).collect();
                    let ok = match domain {
                        Domain::Positive => xi.iter().all(|&v| v > 0),
                        Domain::Nonzero => xi.iter().any(|&v| v != 0),
                    };
                    if !ok || xi.iter().any(|v| v.abs() > m) {
                        continue;
                    }
                    let kx = key(&xi);
                    if best.as_ref().is_none_or(|(bk, _)| kx < *bk) {
                        best = Some((kx, xi));
                    }
                }
                if let Some((_, x)) = best {
                    return Some((x, true));
                }
            }
            None
        }
    }
}

fn difference_matrix(vectors: &[Vec<i64>], n: usize) -> Vec<Vec<Q>> {
    vectors
        .iter()
        .skip(1)
        .map(|v| (0..n).map(|j| Q::from_integer((v[j] - vectors[0][j]) as i128)).collect())
        .collect()
}

fn dot(w: &[i64], v: &[i64]) -> i64 {
    w.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn analyze(f: &MixedPolynomial) -> Result<WeightAnalysis> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.n_vars();
    let radial_vecs: Vec<Vec<i64>> = f
        .terms()
        .map(|(e, _)| (0..n).map(|j| (e.nu[j] + e.mu[j]) as i64).collect())
        .collect();
    let polar_vecs: Vec<Vec<i64>> = f
        .terms()
        .map(|(e, _)| (0..n).map(|j| e.nu[j] as i64 - e.mu[j] as i64).collect())
        .collect();

    let radial_red = row_reduce(difference_matrix(&radial_vecs, n), n);
    let radial = search_kernel(&radial_red, Domain::Positive, |w| w.to_vec());
    let radial_weights = radial.as_ref().map(|(w, _)| w.clone());
    let radial_degree = radial_weights.as_ref().map(|w| dot(w, &radial_vecs[0]));

    let polar_red = row_reduce(difference_matrix(&polar_vecs, n), n);
    let polar_kernel_dim = polar_red.free_columns().len();
    let q_is_polar = radial_weights.as_ref().filter(|q| {
        let d = dot(q, &polar_vecs[0]);
        polar_vecs.iter().all(|v| dot(q, v) == d)
    });
    let polar = match q_is_polar {
        Some(q) => Some((q.clone(), polar_kernel_dim > 1)),
        None => {
            let b0 = polar_vecs[0].clone();
            search_kernel(&polar_red, Domain::Nonzero, |p| (dot(p, &b0) <= 0, p.to_vec())).map(|(p, multi)| {
                let d = dot(&p, &b0);
                let first_negative = p.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
                if d < 0 || (d == 0 && first_negative) {
                    (p.iter().map(|x| -x).collect(), multi)
                } else {
                    (p, multi)
                }
            })
        }
    };
    let polar_weights = polar.as_ref().map(|(p, _)| p.clone());
    let polar_degree = polar_weights.as_ref().map(|p| dot(p, &polar_vecs[0]));

    let strongly_polar_weighted = matches!((&radial_weights, &polar_weights), (Some(q), Some(p)) if q == p);
    let strongly_polar_homogeneous =
        strongly_polar_weighted && radial_weights.as_ref().is_some_and(|q| q.iter().all(|&x| x == 1));
    let (class_q, class_r) = if strongly_polar_homogeneous {
        let dr = radial_degree.unwrap_or(0);
        let dp = polar_degree.unwrap_or(0);
        (Some(dp), Some((dr - dp) / 2))
    } else {
        (None, None)
    };

    Ok(WeightAnalysis {
        non_unique_weights: radial.is_some_and(|(_, m)| m) || polar.is_some_and(|(_, m)| m),
        radial_weights,
        radial_degree,
        polar_weights,
        polar_degree,
        strongly_polar_weighted,
        strongly_polar_homogeneous,
        class_q,
        class_r,
    })
}

/// Class `(q, r)` of a strongly polar homogeneous polynomial, i.e. membership in `M(q+2r, q; n)`.
pub fn polar_class(f: &MixedPolynomial) -> Result<(i64, i64)> {
    let a = analyze(f)?;
    match (a.class_q, a.class_r) {
        (Some(q), Some(r)) => Ok((q, r)),
        _ => Err(Error::NotStronglyPolarHomogeneous),
    }
}

/// Whether `a` is a critical point of `f` viewed as a real map `ℂⁿ → ℂ`:
/// `conj(∂f/∂z_j)(a) = α ∂f/∂z̄_j(a)` for some unimodular `α`, or both gradients vanish.
pub fn is_mixed_singular(f: &MixedPolynomial, a: &[Complex64], tol: f64) -> Result<bool> {
    let n = f.n_vars();
    if a.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.len(),
        });
    }
    let mut v = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for j in 0..n {
        v.push(f.wirtinger(j, false)?.evaluate(a)?.conj());
        w.push(f.wirtinger(j, true)?.evaluate(a)?);
    }
    let norm = |x: &[Complex64]| x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let (nv, nw) = (norm(&v), norm(&w));
    let scale = nv.max(nw).max(1.0);
    if nv <= tol && nw <= tol {
        return Ok(true);
    }
    for j in 0..n {
        for k in j + 1..n {
            if (v[j] * w[k] - v[k] * w[j]).norm() > tol * scale {
                return Ok(false);
            }
        }
    }
    Ok((nv - nw).abs() <= tol * scale)
}
