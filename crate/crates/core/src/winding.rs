//! Winding numbers of `g(w, w̄)` along circles: the degree of the Gauss map `g/|g|`.
//!
//! The circle is sampled uniformly and principal-branch argument increments
//! are accumulated. The sample count doubles until every increment is below
//! `π/2`; the total divided by `2π` is then the winding number.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::MixedPolynomial;
use crate::univariate::MixedUnivariate;

pub const INITIAL_SAMPLES: usize = 64;
pub const MAX_SAMPLES: usize = 1 << 20;
pub const ZERO_EPS: f64 = 1e-9;
const INTEGRALITY_TOL: f64 = 1e-6;
/// Below this many new samples a refinement pass stays on the calling thread.
const PARALLEL_MIN_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contour {
    pub center: Complex64,
    pub radius: f64,
}

impl Contour {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParams(format!("contour radius must be positive, got {radius}")));
        }
        Ok(Contour { center, radius })
    }

    fn point(&self, k: usize, samples: usize) -> Complex64 {
        let theta = TAU * k as f64 / samples as f64;
        self.center + Complex64::from_polar(self.radius, theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingReport {
    pub winding: i64,
    /// Smallest `|g|` over the final samples.
    pub min_modulus: f64,
    pub samples: usize,
    pub certified: bool,
}

pub fn contour_winding(g: &MixedPolynomial, contour: Contour) -> Result<WindingReport> {
    winding_of(&MixedUnivariate::new(g)?, contour, MAX_SAMPLES, Exec::default())
}

/// Winding on a prepared univariate polynomial with an explicit sample cap.
pub fn winding_of(g: &MixedUnivariate, contour: Contour, max_samples: usize, exec: Exec) -> Result<WindingReport> {
    let scale = g.max_coefficient_norm() * contour.radius.powi(g.radial_degree() as i32);
    let threshold = ZERO_EPS * scale;

    let mut samples = INITIAL_SAMPLES;
    let eval_exec = |n: usize| if n >= PARALLEL_MIN_SAMPLES { exec } else { Exec::Sequential };
    let mut values: Vec<Complex64> = eval_exec(samples).map_range(samples, |k| g.eval(contour.point(k, samples)));

    loop {
        let min_modulus = values.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        if min_modulus.partial_cmp(&threshold) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::ZeroOnContour {
                modulus: min_modulus,
                threshold,
            });
        }
        let mut total = 0.0;
        let mut max_step: f64 = 0.0;
        for k in 0..samples {
            let step = (values[(k + 1) % samples] / values[k]).arg();
            max_step = max_step.max(step.abs());
            total += step;
        }
        if max_step < FRAC_PI_2 {
            let turns = total / TAU;
            let winding = turns.round();
            if (turns - winding).abs() > INTEGRALITY_TOL {
                return Err(Error::RefinementExhausted { samples });
            }
            return Ok(WindingReport {
                winding: winding as i64,
                min_modulus,
                samples,
                certified: true,
            });
        }
        if samples * 2 > max_samples {
            return Err(Error::RefinementExhausted { samples });
        }
        let fine = samples * 2;
        let odd = eval_exec(samples).map_range(samples, |k| g.eval(contour.point(2 * k + 1, fine)));
        let mut merged = Vec::with_capacity(fine);
        for (even, odd) in values.into_iter().zip(odd) {
            merged.push(even);
            merged.push(odd);
        }
        values = merged;
        samples = fine;
    }
}

/// Radius beyond which the unique top monomial `c w^a w̄^b` dominates all lower terms:
/// `|c| R^d > Σ_lower |c'| R^{deg}`, found by doubling from 1.
pub fn dominance_radius(g: &MixedUnivariate) -> Result<f64> {
    let top = g.top_term()?;
    let d = (top.a + top.b) as i32;
    let mut radius: f64 = 1.0;
    for _ in 0..1100 {
        let lower: f64 = g
            .terms()
            .iter()
            .filter(|t| (t.a, t.b) != (top.a, top.b))
            .map(|t| t.c.norm() * radius.powi((t.a + t.b) as i32))
            .sum();
        if top.c.norm() * radius.powi(d) > lower {
            return Ok(radius);
        }
        radius *= 2.0;
    }
    Err(Error::InvalidParams("no finite dominance radius".into()))
}

/// Winding of `g` on a circle `|w| = R` enclosing every root; equals `a - b` for top term `w^a w̄^b`.
pub fn degree_at_infinity(g: &MixedPolynomial) -> Result<i64> {
    degree_at_infinity_of(&MixedUnivariate::new(g)?)
}

pub fn degree_at_infinity_of(g: &MixedUnivariate) -> Result<i64> {
    let radius = dominance_radius(g)?;
    let contour = Contour::new(Complex64::new(0.0, 0.0), radius)?;
    Ok(winding_of(g, contour, MAX_SAMPLES, Exec::default())?.winding)
}

/// Local intersection index at an isolated root: the winding on `|w - root| = eps`.
pub fn local_index(g: &MixedPolynomial, root: Complex64, eps: f64) -> Result<i64> {
    Ok(contour_winding(g, Contour::new(root, eps)?)?.winding)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit() -> Contour {
        Contour::new(c(0.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn monomial_windings() {
        let cube = MixedPolynomial::univariate([(3, 0, c(1.0, 0.0))]);
        assert_eq!(contour_winding(&cube, unit()).unwrap().winding, 3);
        let bar = MixedPolynomial::univariate([(0, 1, c(1.0, 0.0))]);
        assert_eq!(contour_winding(&bar, unit()).unwrap().winding, -1);
        for q in 1..5 {
            for r in 0..4 {
                let g = MixedPolynomial::univariate([(q + r, r, c(1.0, 0.0))]);
                let rep = contour_winding(&g, Contour::new(c(0.0, 0.0), 0.37).unwrap()).unwrap();
                assert_eq!(rep.winding, q as i64);
                assert!(rep.certified);
            }
        }
    }

    #[test]
    fn degree_at_infinity_examples() {
        let ex = MixedPolynomial::univariate([(2, 1, c(-2.0, 0.0)), (2, 0, c(3.0, 0.0)), (0, 0, c(1.0, 0.0))]);
        assert_eq!(degree_at_infinity(&ex).unwrap(), 1);
        // (w - 1)(w̄ - 2) = w w̄ - 2w - w̄ + 2
        let g = MixedPolynomial::univariate([
            (1, 1, c(1.0, 0.0)),
            (1, 0, c(-2.0, 0.0)),
            (0, 1, c(-1.0, 0.0)),
            (0, 0, c(2.0, 0.0)),
        ]);
        assert_eq!(degree_at_infinity(&g).unwrap(), 0);
        let tie = MixedPolynomial::univariate([(2, 0, c(1.0, 0.0)), (0, 2, c(1.0, 0.0))]);
        assert!(matches!(degree_at_infinity(&tie), Err(Error::NotMonic { .. })));
    }

    #[test]
    fn local_indices() {
        let a = c(0.4, -1.2);
        let hol = MixedPolynomial::univariate([(1, 0, c(1.0, 0.0)), (0, 0, -a)]);
        assert_eq!(local_index(&hol, a, 1e-3).unwrap(), 1);
        let anti = MixedPolynomial::univariate([(0, 1, c(1.0, 0.0)), (0, 0, -a.conj())]);
        assert_eq!(local_index(&anti, a, 1e-3).unwrap(), -1);
    }

    #[test]
    fn zero_on_contour_is_an_error() {
        let g = MixedPolynomial::univariate([(1, 0, c(1.0, 0.0)), (0, 0, c(-1.0, 0.0))]);
        let err = contour_winding(&g, unit()).unwrap_err();
        assert!(matches!(err, Error::ZeroOnContour { .. }));
    }

    #[test]
    fn rejects_multivariate_input() {
        let g = MixedPolynomial::var(2, 0);
        assert_eq!(contour_winding(&g, unit()).unwrap_err(), Error::NotOneVariable { n: 2 });
        assert!(Contour::new(c(0.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn refinement_cap_is_reported() {
        let g = MixedUnivariate::new(&MixedPolynomial::univariate([(40, 0, c(1.0, 0.0))])).unwrap();
        let err = winding_of(&g, unit(), 64, Exec::Sequential).unwrap_err();
        assert_eq!(err, Error::RefinementExhausted { samples: 64 });
        let ok = winding_of(&g, unit(), MAX_SAMPLES, Exec::Sequential).unwrap();
        assert_eq!(ok.winding, 40);
        assert_eq!(ok.samples, 256);
    }
}
