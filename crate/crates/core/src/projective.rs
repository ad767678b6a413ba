//! Line sections of projective mixed hypersurfaces, point counts on `ℂP¹`,
//! and seeded scans of the point count over random coefficients.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homogeneity::polar_class;
use crate::poly::{ExponentPair, MixedPolynomial};
use crate::roots::{count_projective_points, solve_univariate, PointCount, RootInventory, SolverOptions};
use crate::univariate::MixedUnivariate;

/// Consecutive rejected lines tolerated before giving up.
pub const MAX_CONSECUTIVE_REJECTIONS: usize = 20;
const LINE_COEFF_MIN: f64 = 0.5;
const LINE_COEFF_MAX: f64 = 1.5;

#[derive(Debug, Clone, PartialEq)]
pub struct LineSection {
    /// `coeffs[j - 3] = [a_{j1}, a_{j2}]`.
    pub coeffs: Vec<[Complex64; 2]>,
    pub restricted: MixedPolynomial,
    pub inventory: RootInventory,
    pub total_index: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVerdict {
    pub polar_degree: i64,
    pub sections: Vec<LineSection>,
    pub agree: bool,
    /// Lines discarded as non-generic, summed over trials.
    pub rejections: usize,
    pub seed: u64,
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Uniform in the annulus `min ≤ |a| ≤ max` (uniform with respect to area).
fn annulus_sample(rng: &mut ChaCha8Rng, min: f64, max: f64) -> Complex64 {
    let r = rng.gen_range(min * min..=max * max).sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

fn disk_sample(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = rng.gen_range(0.0f64..1.0).sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

/// The chart polynomial of the restriction, if its top term is the lone `c w^{q+r} w̄^r`.
fn generic_chart(restricted: &MixedPolynomial, q: i64, r: i64) -> Option<MixedUnivariate> {
    let g = MixedUnivariate::new(&restricted.dehomogenize(1).ok()?).ok()?;
    let top = g.top_term().ok()?;
    let shape_ok = i64::from(top.a) == q + r && i64::from(top.b) == r;
    (shape_ok && top.c.norm() > 1e-9 * g.max_coefficient_norm()).then_some(g)
}

fn one_section(f: &MixedPolynomial, q: i64, r: i64, seed: u64, trial: usize, opts: &SolverOptions) -> Result<(LineSection, usize)> {
    let mut rng = trial_rng(seed, trial);
    let mut rejections = 0;
    loop {
        if rejections >= MAX_CONSECUTIVE_REJECTIONS {
            return Err(Error::GenericityFailure { rejections });
        }
        let coeffs: Vec<[Complex64; 2]> = (2..f.n_vars())
            .map(|_| {
                [
                    annulus_sample(&mut rng, LINE_COEFF_MIN, LINE_COEFF_MAX),
                    annulus_sample(&mut rng, LINE_COEFF_MIN, LINE_COEFF_MAX),
                ]
            })
            .collect();
        let restricted = f.restrict_to_line(&coeffs)?;
        let Some(chart) = generic_chart(&restricted, q, r) else {
            rejections += 1;
            continue;
        };
        match solve_univariate(&chart, opts) {
            Ok(inventory) => {
                let total_index = inventory.index_sum;
                return Ok((
                    LineSection {
                        coeffs,
                        restricted,
                        inventory,
                        total_index,
                    },
                    rejections,
                ));
            }
            Err(_) => rejections += 1,
        }
    }
}

pub fn verify_degree(f: &MixedPolynomial, trials: usize, seed: u64) -> Result<DegreeVerdict> {
    verify_degree_with(f, trials, seed, &SolverOptions::default())
}

pub fn verify_degree_with(f: &MixedPolynomial, trials: usize, seed: u64, opts: &SolverOptions) -> Result<DegreeVerdict> {
    if f.n_vars() < 3 {
        return Err(Error::AmbientDimension { n: f.n_vars() });
    }
    let (q, r) = polar_class(f)?;
    let inner = SolverOptions {
        exec: crate::exec::Exec::Sequential,
        ..*opts
    };
    let ids: Vec<usize> = (0..trials).collect();
    let results = opts.exec.map(&ids, |&t| one_section(f, q, r, seed, t, &inner));
    let mut sections = Vec::with_capacity(trials);
    let mut rejections = 0;
    for res in results {
        let (section, rej) = res?;
        rejections += rej;
        sections.push(section);
    }
    let agree = sections.iter().all(|s| s.total_index == q);
    Ok(DegreeVerdict {
        polar_degree: q,
        sections,
        agree,
        rejections,
        seed,
    })
}

/// Number of points of `V ⊂ ℂP¹`, i.e. link components of `f⁻¹(0) ∩ S³`.
pub fn lkn(f: &MixedPolynomial) -> Result<usize> {
    Ok(count_projective_points(f, &SolverOptions::default())?.count)
}

pub fn lkn_detailed(f: &MixedPolynomial, opts: &SolverOptions) -> Result<PointCount> {
    count_projective_points(f, opts)
}

/// All exponent pairs of `M(q+2r, q; 2)`: `|ν| = q + r`, `|μ| = r`.
pub fn class_monomials(q: u32, r: u32) -> Vec<ExponentPair> {
    let mut out = Vec::new();
    for nu1 in 0..=q + r {
        for mu1 in 0..=r {
            out.push(ExponentPair::new(vec![nu1, q + r - nu1], vec![mu1, r - mu1]));
        }
    }
    out
}

pub fn random_class_polynomial(q: u32, r: u32, seed: u64, trial: usize) -> MixedPolynomial {
    let mut rng = trial_rng(seed, trial);
    let terms: Vec<(ExponentPair, Complex64)> = class_monomials(q, r)
        .into_iter()
        .map(|e| (e, disk_sample(&mut rng)))
        .collect();
    MixedPolynomial::from_terms(2, terms).expect("two-variable exponents")
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutlier {
    pub trial: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub q: u32,
    pub r: u32,
    pub trials: usize,
    pub seed: u64,
    pub histogram: BTreeMap<usize, usize>,
    /// Solver failures by error kind.
    pub failures: BTreeMap<String, usize>,
    /// Counts outside `{q, q+2, …, q+2r}`.
    pub outliers: Vec<ScanOutlier>,
    /// Instances that contained an index-0 cluster counted as a point.
    pub uncertified: usize,
}

impl ScanReport {
    pub fn predicted(&self) -> Vec<usize> {
        (0..=self.r).map(|k| (self.q + 2 * k) as usize).collect()
    }
}

pub fn scan_point_counts(q: u32, r: u32, trials: usize, seed: u64) -> Result<ScanReport> {
    scan_point_counts_with(q, r, trials, seed, &SolverOptions::default())
}

pub fn scan_point_counts_with(q: u32, r: u32, trials: usize, seed: u64, opts: &SolverOptions) -> Result<ScanReport> {
    if q < 1 {
        return Err(Error::InvalidParams(format!("scan needs q ≥ 1, got {q}")));
    }
    let inner = SolverOptions {
        exec: crate::exec::Exec::Sequential,
        ..*opts
    };
    let ids: Vec<usize> = (0..trials).collect();
    let results = opts.exec.map(&ids, |&t| {
        let f = random_class_polynomial(q, r, seed, t);
        count_projective_points(&f, &inner)
    });
    let mut report = ScanReport {
        q,
        r,
        trials,
        seed,
        histogram: BTreeMap::new(),
        failures: BTreeMap::new(),
        outliers: Vec::new(),
        uncertified: 0,
    };
    let lo = q as usize;
    let hi = (q + 2 * r) as usize;
    for (trial, res) in results.into_iter().enumerate() {
        match res {
            Ok(pc) => {
                *report.histogram.entry(pc.count).or_insert(0) += 1;
                if pc.uncertified > 0 {
                    report.uncertified += 1;
                }
                if pc.count < lo || pc.count > hi || !(pc.count - lo).is_multiple_of(2) {
                    report.outliers.push(ScanOutlier { trial, count: pc.count });
                }
            }
            Err(e) => *report.failures.entry(e.kind().to_string()).or_insert(0) += 1,
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::invariants::{build_family, FamilyKind, FamilySpec};

    fn family(kind: FamilyKind, q: i64, r: i64) -> MixedPolynomial {
        build_family(&FamilySpec::new(kind).with_int("q", q).with_int("r", r)).unwrap()
    }

    #[test]
    fn degree_of_fermat_curve() {
        let f = family(FamilyKind::S1, 3, 0);
        let v = verify_degree(&f, 4, 1).unwrap();
        assert!(v.agree);
        for s in &v.sections {
            assert_eq!(s.total_index, 3);
            assert!(s.inventory.roots.iter().all(|r| r.index == 1));
        }
    }

    #[test]
    fn degree_is_polar_degree_for_s4() {
        let v = verify_degree(&family(FamilyKind::S4, 2, 1), 3, 5).unwrap();
        assert_eq!(v.polar_degree, 2);
        assert!(v.agree);
    }

    #[test]
    fn verify_degree_is_seed_deterministic() {
        let f = family(FamilyKind::S2, 2, 1);
        let par = verify_degree_with(&f, 4, 9, &SolverOptions { exec: Exec::Parallel, ..Default::default() }).unwrap();
        let seq = verify_degree_with(&f, 4, 9, &SolverOptions { exec: Exec::Sequential, ..Default::default() }).unwrap();
        assert_eq!(par, seq);
        let coeffs = &par.sections[0].coeffs[0];
        for a in coeffs {
            assert!((LINE_COEFF_MIN..=LINE_COEFF_MAX).contains(&a.norm()));
        }
    }

    #[test]
    fn verify_degree_rejects_curves_in_the_plane() {
        let f = build_family(&FamilySpec::new(FamilyKind::FQj).with_int("q", 2).with_int("j", 1)).unwrap();
        assert_eq!(verify_degree(&f, 1, 0).unwrap_err(), Error::AmbientDimension { n: 2 });
    }

    #[test]
    fn class_monomials_are_in_class() {
        let f = random_class_polynomial(2, 1, 3, 0);
        assert_eq!(f.len(), 8);
        assert_eq!(polar_class(&f).unwrap(), (2, 1));
    }

    #[test]
    fn scan_without_mixed_part_counts_q() {
        let rep = scan_point_counts(2, 0, 20, 0).unwrap();
        assert_eq!(rep.histogram.get(&2), Some(&20));
        assert!(rep.failures.is_empty());
        assert!(rep.outliers.is_empty());
    }
}
