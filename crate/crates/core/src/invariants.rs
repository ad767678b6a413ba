//! Closed-form topological invariants of Milnor fibers and projective curves,
//! and constructors for the named polynomial families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{ExponentPair, MixedPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    JoinF1,
    SimplicialF2,
    SimplicialF2p,
    SimplicialF3,
    SimplicialF3p,
    S1,
    S2,
    S3,
    S4,
    S5,
    HJoin,
    FQj,
    KEll,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 13] = [
        FamilyKind::JoinF1,
        FamilyKind::SimplicialF2,
        FamilyKind::SimplicialF2p,
        FamilyKind::SimplicialF3,
        FamilyKind::SimplicialF3p,
        FamilyKind::S1,
        FamilyKind::S2,
        FamilyKind::S3,
        FamilyKind::S4,
        FamilyKind::S5,
        FamilyKind::HJoin,
        FamilyKind::FQj,
        FamilyKind::KEll,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::JoinF1 => "join_f1",
            FamilyKind::SimplicialF2 => "simplicial_f2",
            FamilyKind::SimplicialF2p => "simplicial_f2p",
            FamilyKind::SimplicialF3 => "simplicial_f3",
            FamilyKind::SimplicialF3p => "simplicial_f3p",
            FamilyKind::S1 => "s1",
            FamilyKind::S2 => "s2",
            FamilyKind::S3 => "s3",
            FamilyKind::S4 => "s4",
            FamilyKind::S5 => "s5",
            FamilyKind::HJoin => "h_join",
            FamilyKind::FQj => "f_qj",
            FamilyKind::KEll => "k_ell",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {name:?}")))
    }

    fn simplicial(self) -> Option<SimplicialKind> {
        match self {
            FamilyKind::SimplicialF2 => Some(SimplicialKind::F2),
            FamilyKind::SimplicialF2p => Some(SimplicialKind::F2p),
            FamilyKind::SimplicialF3 => Some(SimplicialKind::F3),
            FamilyKind::SimplicialF3p => Some(SimplicialKind::F3p),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Int(i64),
    Complex(Complex64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: BTreeMap<String, Param>,
}

pub const DEFAULT_H_ALPHA: Complex64 = Complex64::new(1.0, 1.0);
pub const DEFAULT_H_BETA: Complex64 = Complex64::new(2.0, -1.0);
pub const DEFAULT_K_BETA: Complex64 = Complex64::new(1.0, 1.0);
pub const DEFAULT_K_GAMMA: Complex64 = Complex64::new(2.0, -1.0);

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            params: BTreeMap::new(),
        }
    }

    pub fn with_int(mut self, key: &str, v: i64) -> Self {
        self.params.insert(key.to_string(), Param::Int(v));
        self
    }

    pub fn with_complex(mut self, key: &str, v: Complex64) -> Self {
        self.params.insert(key.to_string(), Param::Complex(v));
        self
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Ok(*v),
            Some(Param::Complex(c)) if c.im == 0.0 && c.re.fract() == 0.0 => Ok(c.re as i64),
            Some(Param::Complex(_)) => Err(Error::InvalidParams(format!("{key} must be an integer"))),
            None => Err(Error::InvalidParams(format!("{} needs parameter {key}", self.kind))),
        }
    }

    fn int_at_least(&self, key: &str, min: i64) -> Result<i64> {
        let v = self.int(key)?;
        if v < min {
            return Err(Error::InvalidParams(format!("{key} = {v} must be at least {min}")));
        }
        Ok(v)
    }

    pub fn complex_or(&self, key: &str, default: Complex64) -> Complex64 {
        match self.params.get(key) {
            Some(Param::Int(v)) => Complex64::new(*v as f64, 0.0),
            Some(Param::Complex(c)) => *c,
            None => default,
        }
    }

    /// The class `(q, r)` of `M(q+2r, q; 3)` the built polynomial belongs to, read off the parameters.
    /// `None` for join/simplicial parameters that do not give a strongly polar homogeneous polynomial.
    pub fn expected_class(&self) -> Result<Option<(i64, i64)>> {
        let kind = self.kind;
        Ok(match kind {
            FamilyKind::S1 | FamilyKind::S2 | FamilyKind::S3 | FamilyKind::HJoin => {
                Some((self.int("q")?, self.int("r")?))
            }
            FamilyKind::S4 | FamilyKind::S5 => Some((self.int("q")?, self.int("r")? + 1)),
            FamilyKind::FQj => Some((self.int("q")?, self.int("j")?)),
            FamilyKind::KEll => Some((0, self.int("l")?)),
            _ => {
                let (a, b) = self.ab()?;
                // (radial, polar) of the three monomials with unit weights.
                let shift = |i: usize| -> (i64, i64) {
                    match (kind, i) {
                        (FamilyKind::JoinF1, _) | (FamilyKind::SimplicialF2 | FamilyKind::SimplicialF2p, 2) => (0, 0),
                        (FamilyKind::SimplicialF2 | FamilyKind::SimplicialF3, _) => (1, 1),
                        _ => (1, -1),
                    }
                };
                let degs: Vec<(i64, i64)> = (0..3)
                    .map(|i| {
                        let (dr, dp) = shift(i);
                        (a[i] + 2 * b[i] + dr, a[i] + dp)
                    })
                    .collect();
                let (dr, dp) = degs[0];
                (degs.iter().all(|&d| d == (dr, dp)) && (dr - dp) % 2 == 0).then_some((dp, (dr - dp) / 2))
            }
        })
    }

    fn ab(&self) -> Result<([i64; 3], [i64; 3])> {
        let mut a = [0; 3];
        let mut b = [0; 3];
        for i in 0..3 {
            a[i] = self.int_at_least(&format!("a{}", i + 1), 1)?;
            b[i] = self.int_at_least(&format!("b{}", i + 1), 1)?;
        }
        Ok((a, b))
    }
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn mono(n: usize, parts: &[(usize, u32, u32)]) -> ExponentPair {
    let mut nu = vec![0; n];
    let mut mu = vec![0; n];
    for &(var, a, b) in parts {
        nu[var] += a;
        mu[var] += b;
    }
    ExponentPair::new(nu, mu)
}

fn sum_of(n: usize, monos: Vec<ExponentPair>) -> MixedPolynomial {
    MixedPolynomial::from_terms(n, monos.into_iter().map(|e| (e, one()))).expect("consistent arity")
}

fn to_u32(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidParams(format!("{what} = {v} out of range")))
}

/// `z1^{q+j} z̄1^j + z2^{q+j} z̄2^j`.
pub fn f_qj(q: u32, j: u32) -> MixedPolynomial {
    sum_of(2, vec![mono(2, &[(0, q + j, j)]), mono(2, &[(1, q + j, j)])])
}

fn binomial_pair(l: u32, coeff: Complex64, conjugate: bool) -> MixedPolynomial {
    let (a, b) = if conjugate { (0, l) } else { (l, 0) };
    MixedPolynomial::from_terms(
        2,
        [(mono(2, &[(0, a, b)]), one()), (mono(2, &[(1, a, b)]), -coeff)],
    )
    .expect("two variables")
}

fn check_binomial_pair_generic(l: u32, first: Complex64, second: Complex64) -> Result<()> {
    if l > 0 && (first.norm() == 0.0 || second.norm() == 0.0 || first == second.conj()) {
        return Err(Error::InvalidParams(format!(
            "coefficients {first} and {second} are not generic: need nonzero values with {first} ≠ conj({second})"
        )));
    }
    Ok(())
}

/// `(z1^ℓ − β z2^ℓ)(z̄1^ℓ − γ z̄2^ℓ)`.
pub fn k_ell(l: u32, beta: Complex64, gamma: Complex64) -> Result<MixedPolynomial> {
    check_binomial_pair_generic(l, beta, gamma)?;
    binomial_pair(l, beta, false).mul(&binomial_pair(l, gamma, true))
}

/// The two-variable factor `g_j = f_{q,j} · (w1^{r−j} − α w2^{r−j})(w̄1^{r−j} − β w̄2^{r−j})`.
pub fn join_factor(q: u32, r: u32, j: u32, alpha: Complex64, beta: Complex64) -> Result<MixedPolynomial> {
    if j > r {
        return Err(Error::InvalidParams(format!("j = {j} exceeds r = {r}")));
    }
    let m = r - j;
    check_binomial_pair_generic(m, alpha, beta)?;
    if m > 0 && (alpha.norm() == 1.0 || beta.norm() == 1.0) {
        return Err(Error::InvalidParams("|α| = 1 or |β| = 1 meets the zeros of f_{q,j}".into()));
    }
    f_qj(q, j).mul(&binomial_pair(m, alpha, false).mul(&binomial_pair(m, beta, true))?)
}

fn lift(g: &MixedPolynomial, n: usize) -> MixedPolynomial {
    let terms = g.terms().map(|(e, c)| {
        let mut nu = e.nu.clone();
        let mut mu = e.mu.clone();
        nu.resize(n, 0);
        mu.resize(n, 0);
        (ExponentPair::new(nu, mu), *c)
    });
    MixedPolynomial::from_terms(n, terms).expect("lifted arity")
}

pub fn build_family(spec: &FamilySpec) -> Result<MixedPolynomial> {
    use FamilyKind::*;
    let kind = spec.kind;
    match kind {
        S1 | S2 | S3 | S4 | S5 | HJoin => {
            let q = to_u32(spec.int_at_least("q", 1)?, "q")?;
            let r = to_u32(spec.int_at_least("r", 0)?, "r")?;
            let monos = match kind {
                S1 => vec![mono(3, &[(0, q + r, r)]), mono(3, &[(1, q + r, r)]), mono(3, &[(2, q + r, r)])],
                S2 => vec![
                    mono(3, &[(0, q + r - 1, r), (1, 1, 0)]),
                    mono(3, &[(1, q + r - 1, r), (2, 1, 0)]),
                    mono(3, &[(2, q + r, r)]),
                ],
                S3 => vec![
                    mono(3, &[(0, q + r - 1, r), (1, 1, 0)]),
                    mono(3, &[(1, q + r - 1, r), (2, 1, 0)]),
                    mono(3, &[(2, q + r - 1, r), (0, 1, 0)]),
                ],
                S4 => vec![
                    mono(3, &[(0, q + r + 1, r), (1, 0, 1)]),
                    mono(3, &[(1, q + r + 1, r), (2, 0, 1)]),
                    mono(3, &[(2, q + r + 1, r + 1)]),
                ],
                S5 => vec![
                    mono(3, &[(0, q + r + 1, r), (1, 0, 1)]),
                    mono(3, &[(1, q + r + 1, r), (2, 0, 1)]),
                    mono(3, &[(2, q + r + 1, r), (0, 0, 1)]),
                ],
                _ => {
                    let j = to_u32(spec.int_at_least("j", 0)?, "j")?;
                    let alpha = spec.complex_or("alpha", DEFAULT_H_ALPHA);
                    let beta = spec.complex_or("beta", DEFAULT_H_BETA);
                    let g = lift(&join_factor(q, r, j, alpha, beta)?, 3);
                    return g.add(&sum_of(3, vec![mono(3, &[(2, q + r, r)])]));
                }
            };
            Ok(sum_of(3, monos))
        }
        FQj => {
            let q = to_u32(spec.int_at_least("q", 1)?, "q")?;
            let j = to_u32(spec.int_at_least("j", 0)?, "j")?;
            Ok(f_qj(q, j))
        }
        KEll => {
            let l = to_u32(spec.int_at_least("l", 1)?, "l")?;
            k_ell(l, spec.complex_or("beta", DEFAULT_K_BETA), spec.complex_or("gamma", DEFAULT_K_GAMMA))
        }
        JoinF1 | SimplicialF2 | SimplicialF2p | SimplicialF3 | SimplicialF3p => {
            let (a, b) = spec.ab()?;
            let a: Vec<u32> = a.iter().map(|&v| v as u32).collect();
            let b: Vec<u32> = b.iter().map(|&v| v as u32).collect();
            let head = |i: usize| (i, a[i] + b[i], b[i]);
            // Linear tail on the next variable: z_{i+1} for f2/f3, z̄_{i+1} for the primed kinds.
            let tail = |i: usize| {
                let next = (i + 1) % 3;
                match kind {
                    SimplicialF2 | SimplicialF3 => Some((next, 1, 0)),
                    SimplicialF2p | SimplicialF3p => Some((next, 0, 1)),
                    _ => None,
                }
            };
            let cyclic = matches!(kind, SimplicialF3 | SimplicialF3p);
            let monos = (0..3)
                .map(|i| {
                    let mut parts = vec![head(i)];
                    if i < 2 || cyclic {
                        parts.extend(tail(i));
                    }
                    mono(3, &parts)
                })
                .collect();
            Ok(sum_of(3, monos))
        }
    }
}

pub fn milnor_number(n: usize, chi_f: i64) -> i64 {
    if n % 2 == 1 {
        chi_f - 1
    } else {
        1 - chi_f
    }
}

/// `χ(F(f₁)) = (a₃ − 1) μ_g + 1`.
pub fn euler_join(mu_g: i64, a3: i64) -> Result<i64> {
    if mu_g < 0 || a3 < 1 {
        return Err(Error::InvalidParams(format!("need mu_g ≥ 0 and a3 ≥ 1, got ({mu_g}, {a3})")));
    }
    Ok((a3 - 1) * mu_g + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicialKind {
    F2,
    F2p,
    F3,
    F3p,
}

/// `(χ(F), μ)` of the simplicial families.
pub fn euler_simplicial(kind: SimplicialKind, a1: i64, a2: i64, a3: i64) -> Result<(i64, i64)> {
    if a1 < 1 || a2 < 1 || a3 < 1 {
        return Err(Error::InvalidParams(format!("exponents must be positive, got ({a1}, {a2}, {a3})")));
    }
    let prod = a1 * a2 * a3;
    let chi = match kind {
        SimplicialKind::F2 | SimplicialKind::F2p => prod - a2 * a3 + a3,
        SimplicialKind::F3 => prod + 1,
        SimplicialKind::F3p => prod - 1,
    };
    Ok((chi, chi - 1))
}

fn exact_div(value: i64, divisor: i64) -> Result<i64> {
    if divisor == 0 || value % divisor != 0 {
        return Err(Error::Divisibility { value, divisor });
    }
    Ok(value / divisor)
}

/// The genus `g` with `2 − 2g = 3 − χ(F)/q`.
pub fn genus_from_chi(chi_f: i64, q: i64) -> Result<i64> {
    let bad = Error::NonIntegralGenus { chi_f, q };
    if q == 0 || chi_f % q != 0 {
        return Err(bad);
    }
    let twice = chi_f / q - 1;
    if twice < 0 || twice % 2 != 0 {
        return Err(bad);
    }
    Ok(twice / 2)
}

/// `(χ(ℂPⁿ⁻¹ ∖ V), χ(V)) = (χ(F)/d_p, n − χ(F)/d_p)`.
pub fn chi_relations(chi_f: i64, d_p: i64, n: i64) -> Result<(i64, i64)> {
    let c = exact_div(chi_f, d_p)?;
    Ok((c, n - c))
}

/// `ζ(t) = Π (1 − t^k)^{e_k}` stored as `k ↦ e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZetaFunction {
    pub factors: BTreeMap<i64, i64>,
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(k, e)| {
                let base = if *k == 1 { "(1-t)".to_string() } else { format!("(1-t^{k})") };
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

pub fn zeta(chi_f: i64, d_p: i64) -> Result<ZetaFunction> {
    let e = -exact_div(chi_f, d_p)?;
    let mut factors = BTreeMap::new();
    if e != 0 {
        factors.insert(d_p, e);
    }
    Ok(ZetaFunction { factors })
}

/// Ranks of `H_j(V)`, `j = 0..=2(n−2)`, for `V ⊂ ℂPⁿ⁻¹` under the bouquet hypothesis.
/// Torsion is not determined.
pub fn homology_pattern(n: i64, chi_f: i64, d_p: i64) -> Result<Vec<i64>> {
    if n < 3 {
        return Err(Error::AmbientDimension { n: n.max(0) as usize });
    }
    let (_, chi_v) = chi_relations(chi_f, d_p, n)?;
    let mid = (n - 2) as usize;
    let mut ranks: Vec<i64> = (0..=2 * mid).map(|j| i64::from(j % 2 == 0)).collect();
    ranks[mid] = 0;
    let rest: i64 = ranks.iter().enumerate().map(|(j, r)| if j.is_multiple_of(2) { *r } else { -*r }).sum();
    let sign = if mid.is_multiple_of(2) { 1 } else { -1 };
    let middle = sign * (chi_v - rest);
    if middle < 0 {
        return Err(Error::InvalidParams(format!("χ(V) = {chi_v} forces a negative middle Betti number")));
    }
    ranks[mid] = middle;
    Ok(ranks)
}

/// `(q−1)(q−2)/2`, the genus of a smooth algebraic curve of degree `q`.
pub fn thom_bound(q: i64) -> i64 {
    (q - 1) * (q - 2) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInvariants {
    pub q: i64,
    pub r: i64,
    pub chi_f: i64,
    pub milnor: i64,
    pub genus: i64,
    pub chi_v: i64,
    pub chi_complement: i64,
    pub zeta_exponent: i64,
    pub homology: Vec<i64>,
    pub thom_bound: i64,
}

pub fn curve_invariants(q: i64, r: i64, chi_f: i64) -> Result<CurveInvariants> {
    let (chi_complement, chi_v) = chi_relations(chi_f, q, 3)?;
    Ok(CurveInvariants {
        q,
        r,
        chi_f,
        milnor: milnor_number(3, chi_f),
        genus: genus_from_chi(chi_f, q)?,
        chi_v,
        chi_complement,
        zeta_exponent: -chi_f / q,
        homology: homology_pattern(3, chi_f, q)?,
        thom_bound: thom_bound(q),
    })
}

/// `lkn(g_j) = q + 2(r − j)`.
pub fn join_factor_lkn(q: i64, r: i64, j: i64) -> i64 {
    q + 2 * (r - j)
}

/// `χ(F_g) = q (2 − lkn)` for a two-variable `g` of polar degree `q` with `lkn` points in `ℂP¹`.
pub fn chi_two_variable(q: i64, lkn: i64) -> i64 {
    q * (2 - lkn)
}

/// `χ(F(h_j))` from the number of points of `g_j`, through the join formula with `a₃ = q`.
pub fn h_join_chi(q: i64, lkn_g: i64) -> Result<i64> {
    let mu_g = milnor_number(2, chi_two_variable(q, lkn_g));
    euler_join(mu_g, q)
}

/// `χ(F)` of a family member from its closed form.
pub fn family_chi(spec: &FamilySpec) -> Result<i64> {
    use FamilyKind::*;
    let kind = spec.kind;
    match kind {
        S1 | S2 | S3 | S4 | S5 | HJoin => {
            let q = spec.int_at_least("q", 1)?;
            let r = spec.int_at_least("r", 0)?;
            Ok(match kind {
                S1 => euler_join((q - 1) * (q - 1), q)?,
                S2 => euler_simplicial(SimplicialKind::F2, q - 1, q - 1, q)?.0,
                S3 => euler_simplicial(SimplicialKind::F3, q - 1, q - 1, q - 1)?.0,
                S4 => euler_simplicial(SimplicialKind::F2p, q + 1, q + 1, q)?.0,
                S5 => euler_simplicial(SimplicialKind::F3p, q + 1, q + 1, q + 1)?.0,
                _ => {
                    let j = spec.int_at_least("j", 0)?;
                    if j > r {
                        return Err(Error::InvalidParams(format!("j = {j} exceeds r = {r}")));
                    }
                    h_join_chi(q, join_factor_lkn(q, r, j))?
                }
            })
        }
        JoinF1 => euler_join(spec.int_at_least("mu_g", 0)?, spec.ab()?.0[2]),
        SimplicialF2 | SimplicialF2p | SimplicialF3 | SimplicialF3p => {
            let (a, _) = spec.ab()?;
            Ok(euler_simplicial(kind.simplicial().expect("simplicial kind"), a[0], a[1], a[2])?.0)
        }
        FQj | KEll => Err(Error::AmbientDimension { n: 2 }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusRow {
    pub q: i64,
    /// Set for `h_join` rows.
    pub j: Option<i64>,
    pub chi_f: i64,
    pub genus: i64,
    pub thom_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusTable {
    pub kind: FamilyKind,
    pub r: i64,
    pub rows: Vec<GenusRow>,
    /// For `h_join`: `q ↦ {g₀ + k(q−1) | k = 0..=r}`.
    pub attainable: BTreeMap<i64, BTreeSet<i64>>,
}

pub fn genus_table(kind: FamilyKind, q_range: RangeInclusive<i64>, r: i64) -> Result<GenusTable> {
    let mut rows = Vec::new();
    let mut attainable = BTreeMap::new();
    for q in q_range {
        let base = FamilySpec::new(kind).with_int("q", q).with_int("r", r);
        let specs: Vec<(Option<i64>, FamilySpec)> = if kind == FamilyKind::HJoin {
            let g0 = thom_bound(q);
            attainable.insert(q, (0..=r).map(|k| g0 + k * (q - 1)).collect());
            (0..=r).rev().map(|j| (Some(j), base.clone().with_int("j", j))).collect()
        } else {
            vec![(None, base)]
        };
        for (j, spec) in specs {
            let chi_f = family_chi(&spec)?;
            rows.push(GenusRow {
                q,
                j,
                chi_f,
                genus: genus_from_chi(chi_f, q)?,
                thom_bound: thom_bound(q),
            });
        }
    }
    Ok(GenusTable {
        kind,
        r,
        rows,
        attainable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::polar_class;

    #[test]
    fn euler_join_examples() {
        assert_eq!(euler_join(1, 2).unwrap(), 2);
        assert_eq!(euler_join(0, 7).unwrap(), 1);
        assert_eq!(euler_join(4, 3).unwrap(), 9);
        assert!(euler_join(-1, 3).is_err());
    }

    #[test]
    fn simplicial_specializations() {
        for q in 2..=6 {
            let s = q * q * q - 3 * q * q + 3 * q;
            assert_eq!(euler_simplicial(SimplicialKind::F2, q - 1, q - 1, q).unwrap().0, s);
            assert_eq!(euler_simplicial(SimplicialKind::F3, q - 1, q - 1, q - 1).unwrap().0, s);
            assert_eq!(euler_simplicial(SimplicialKind::F3p, q + 1, q + 1, q + 1).unwrap(), (q * (q * q + 3 * q + 3), q * (q * q + 3 * q + 3) - 1));
        }
        assert_eq!(euler_simplicial(SimplicialKind::F3p, 2, 2, 2).unwrap().1, 6);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_from_chi(2, 2).unwrap(), 0);
        assert_eq!(genus_from_chi(14, 2).unwrap(), 3);
        assert_eq!(genus_from_chi(26, 2).unwrap(), 6);
        assert!(matches!(genus_from_chi(3, 2), Err(Error::NonIntegralGenus { .. })));
        assert!(matches!(genus_from_chi(0, 2), Err(Error::NonIntegralGenus { .. })));
        assert!(matches!(genus_from_chi(4, 2), Err(Error::NonIntegralGenus { .. })));
    }

    #[test]
    fn chi_relation_examples() {
        assert_eq!(chi_relations(2, 2, 3).unwrap(), (1, 2));
        assert_eq!(chi_relations(7, 1, 3).unwrap(), (7, -4));
        assert_eq!(chi_relations(0, 5, 3).unwrap(), (0, 3));
        assert_eq!(chi_relations(3, 2, 3).unwrap_err(), Error::Divisibility { value: 3, divisor: 2 });
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(6, 3).unwrap().factors, BTreeMap::from([(3, -2)]));
        assert_eq!(zeta(6, 3).unwrap().to_string(), "(1-t^3)^-2");
        assert_eq!(zeta(5, 1).unwrap().to_string(), "(1-t)^-5");
        assert!(zeta(0, 4).unwrap().factors.is_empty());
        assert_eq!(zeta(0, 4).unwrap().to_string(), "1");
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_pattern(3, 2, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(homology_pattern(3, 14, 2).unwrap(), vec![1, 6, 1]);
        assert_eq!(homology_pattern(2, 2, 2).unwrap_err(), Error::AmbientDimension { n: 2 });
        // n = 4: j = 0..4, middle j = 2; χ(V) = 4 − χ/d.
        let ranks = homology_pattern(4, 3, 3).unwrap();
        assert_eq!(ranks, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn family_builders_match_displays() {
        let s1 = build_family(&FamilySpec::new(FamilyKind::S1).with_int("q", 2).with_int("r", 1)).unwrap();
        let expected = sum_of(3, vec![mono(3, &[(0, 3, 1)]), mono(3, &[(1, 3, 1)]), mono(3, &[(2, 3, 1)])]);
        assert_eq!(s1, expected);
        let f11 = build_family(&FamilySpec::new(FamilyKind::FQj).with_int("q", 1).with_int("j", 1)).unwrap();
        assert_eq!(f11, sum_of(2, vec![mono(2, &[(0, 2, 1)]), mono(2, &[(1, 2, 1)])]));
    }

    #[test]
    fn builders_land_in_expected_class() {
        let cases = [
            FamilySpec::new(FamilyKind::S1).with_int("q", 3).with_int("r", 2),
            FamilySpec::new(FamilyKind::S2).with_int("q", 2).with_int("r", 1),
            FamilySpec::new(FamilyKind::S3).with_int("q", 4).with_int("r", 0),
            FamilySpec::new(FamilyKind::S4).with_int("q", 2).with_int("r", 1),
            FamilySpec::new(FamilyKind::S5).with_int("q", 2).with_int("r", 0),
            FamilySpec::new(FamilyKind::HJoin).with_int("q", 2).with_int("r", 2).with_int("j", 0),
            FamilySpec::new(FamilyKind::FQj).with_int("q", 3).with_int("j", 2),
            FamilySpec::new(FamilyKind::KEll).with_int("l", 2),
        ];
        for spec in cases {
            let f = build_family(&spec).unwrap();
            assert_eq!(Some(polar_class(&f).unwrap()), spec.expected_class().unwrap(), "{}", spec.kind);
        }
    }

    #[test]
    fn simplicial_builders() {
        let spec = |kind| {
            FamilySpec::new(kind)
                .with_int("a1", 1)
                .with_int("a2", 1)
                .with_int("a3", 2)
                .with_int("b1", 1)
                .with_int("b2", 1)
                .with_int("b3", 1)
        };
        let f2 = build_family(&spec(FamilyKind::SimplicialF2)).unwrap();
        assert_eq!(f2.len(), 3);
        assert_eq!(spec(FamilyKind::SimplicialF2).expected_class().unwrap(), Some((2, 1)));
        assert_eq!(polar_class(&f2).unwrap(), (2, 1));
        let f3p = build_family(&spec(FamilyKind::SimplicialF3p)).unwrap();
        assert_eq!(spec(FamilyKind::SimplicialF3p).expected_class().unwrap(), None);
        assert!(polar_class(&f3p).is_err());
        assert!(build_family(&FamilySpec::new(FamilyKind::SimplicialF2).with_int("a1", 1)).is_err());
    }

    #[test]
    fn non_generic_coefficients_are_rejected() {
        let b = Complex64::new(1.0, 2.0);
        assert!(k_ell(2, b, b.conj()).is_err());
        assert!(join_factor(2, 2, 0, Complex64::new(0.0, 1.0), b).is_err());
        assert!(join_factor(2, 2, 2, Complex64::new(0.0, 1.0), b).is_ok());
    }

    #[test]
    fn tables() {
        let s1 = genus_table(FamilyKind::S1, 2..=5, 1).unwrap();
        assert_eq!(s1.rows.iter().map(|r| r.genus).collect::<Vec<_>>(), vec![0, 1, 3, 6]);
        let s4 = genus_table(FamilyKind::S4, 2..=4, 1).unwrap();
        assert_eq!(s4.rows.iter().map(|r| r.genus).collect::<Vec<_>>(), vec![3, 6, 10]);
        let h = genus_table(FamilyKind::HJoin, 2..=2, 3).unwrap();
        assert_eq!(h.rows.iter().map(|r| r.genus).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(h.attainable[&2], BTreeSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn curve_invariant_relations() {
        let inv = curve_invariants(2, 1, 14).unwrap();
        assert_eq!(inv.genus, 3);
        assert_eq!(inv.chi_v, 2 - 2 * inv.genus);
        assert_eq!(inv.zeta_exponent * inv.q, -inv.chi_f);
        assert_eq!(inv.homology, vec![1, 6, 1]);
        assert_eq!(inv.milnor, 13);
    }
}
