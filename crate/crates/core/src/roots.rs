//! Isolation of all zeros of a monic one-variable mixed polynomial.
//!
//! The square `[-R, R]²` around the dominance disk is subdivided on a dyadic
//! grid. A cell is discarded when the Taylor expansion at its center proves
//! `|g| > 0` on the whole cell. Surviving cells are grouped into 8-connected
//! clusters; a cluster whose circumscribed circle avoids every other cluster
//! gets a certified winding number, its index. A cluster becomes final when
//! either
//!
//! * its index is ±1, Newton polishing lands inside it, and the real
//!   derivative at the polished point dominates the derivative variation over
//!   a disk covering the cluster (so `g` is injective there and the cluster
//!   holds exactly one simple zero), or
//! * the cells reach the minimal width, in which case the cluster is reported
//!   with its total index (multiple zeros, index-0 clusters).
//!
//! Every run ends with the sum rule: the indices must add up to the winding
//! on the dominance circle.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::homogeneity::polar_class;
use crate::poly::{ExponentPair, MixedPolynomial};
use crate::univariate::MixedUnivariate;
use crate::winding::{degree_at_infinity_of, dominance_radius, winding_of, Contour, MAX_SAMPLES};

/// Sample cap for tentative cluster windings above the minimal width.
const TENTATIVE_SAMPLES: usize = 1 << 14;
const RESIDUAL_REL: f64 = 1e-8;
/// Estimates closer than this are the same point of `ℂP¹`.
pub const DISTINCT_POINT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Minimal cell half-width relative to the search radius.
    pub min_half_width_rel: f64,
    pub max_boxes: usize,
    pub exec: Exec,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            min_half_width_rel: 1e-7,
            max_boxes: 1_000_000,
            exec: Exec::default(),
        }
    }
}

/// Axis-aligned square `center ± half_width` in the `w`-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBox {
    pub center: Complex64,
    pub half_width: f64,
}

impl RootBox {
    pub fn circumradius(&self) -> f64 {
        self.half_width * SQRT_2
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedRoot {
    /// Isolating box; the winding on its circumscribed circle is `index`.
    pub root_box: RootBox,
    pub estimate: Complex64,
    pub index: i64,
    pub residual: f64,
    /// Proven to be a single simple zero (otherwise a cluster at the minimal width).
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootInventory {
    pub roots: Vec<CertifiedRoot>,
    pub index_sum: i64,
    pub search_radius: f64,
}

impl RootInventory {
    /// Clusters whose index is 0: the winding test cannot decide whether they hold zeros.
    pub fn index_zero_clusters(&self) -> impl Iterator<Item = &CertifiedRoot> {
        self.roots.iter().filter(|r| r.index == 0)
    }
}

#[derive(Clone, Copy)]
struct Grid {
    radius: f64,
    level: u32,
}

impl Grid {
    fn half_width(&self) -> f64 {
        self.radius / (1u64 << self.level) as f64
    }

    fn center(&self, (ix, iy): (i64, i64)) -> Complex64 {
        let h = self.half_width();
        Complex64::new(-self.radius + (2 * ix + 1) as f64 * h, -self.radius + (2 * iy + 1) as f64 * h)
    }
}

fn cell_is_root_free(g: &MixedUnivariate, center: Complex64, half_width: f64) -> bool {
    let tay = g.taylor(center);
    let value = tay.value().norm();
    let rounding = 8.0 * f64::EPSILON * (g.radial_degree() as f64 + 1.0) * g.summand_magnitude(center);
    value - rounding > tay.variation_bound(half_width * SQRT_2)
}

/// Newton iteration on `(Re g, Im g)`; a step is taken only if it decreases `|g|`.
fn polish(g: &MixedUnivariate, start: Complex64) -> Complex64 {
    let mut w = start;
    let (mut val, mut gw, mut gwb) = g.eval_with_derivatives(w);
    for _ in 0..100 {
        let det = gw.norm_sqr() - gwb.norm_sqr();
        if det == 0.0 || !det.is_finite() {
            break;
        }
        // Solves gw·Δ + gwb·conj(Δ) = -g.
        let delta = (-gw.conj() * val + gwb * val.conj()) / det;
        let next = w + delta;
        let (nv, ngw, ngwb) = g.eval_with_derivatives(next);
        if nv.norm().partial_cmp(&val.norm()) != Some(Ordering::Less) {
            break;
        }
        w = next;
        val = nv;
        gw = ngw;
        gwb = ngwb;
        if delta.norm() <= 4.0 * f64::EPSILON * (1.0 + w.norm()) {
            break;
        }
    }
    w
}

struct Cluster {
    cells: Vec<(i64, i64)>,
}

fn clusters_of(cells: &[(i64, i64)]) -> Vec<Cluster> {
    let index: HashMap<(i64, i64), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(x, y)) in cells.iter().enumerate() {
        for (dx, dy) in [(1, -1), (1, 0), (1, 1), (0, 1)] {
            if let Some(&j) = index.get(&(x + dx, y + dy)) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<(i64, i64)>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, &cell) in cells.iter().enumerate() {
        let root = find(&mut parent, i);
        let s = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[s].push(cell);
    }
    groups.into_iter().map(|cells| Cluster { cells }).collect()
}

fn square_distance(p: Complex64, center: Complex64, half_width: f64) -> f64 {
    let dx = ((p.re - center.re).abs() - half_width).max(0.0);
    let dy = ((p.im - center.im).abs() - half_width).max(0.0);
    dx.hypot(dy)
}

struct Finalized {
    root: CertifiedRoot,
    squares: Vec<(Complex64, f64)>,
}

enum Outcome {
    Final(Finalized),
    Pending,
}

struct LevelContext<'a> {
    g: &'a MixedUnivariate,
    grid: Grid,
    all_cells: &'a [(i64, i64)],
    cell_owner: &'a HashMap<(i64, i64), usize>,
    finals: &'a [Finalized],
    at_floor: bool,
}

fn try_finalize(ctx: &LevelContext<'_>, id: usize, cluster: &Cluster) -> Result<Outcome> {
    let h = ctx.grid.half_width();
    let centers: Vec<Complex64> = cluster.cells.iter().map(|&c| ctx.grid.center(c)).collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for c in &centers {
        lo_x = lo_x.min(c.re - h);
        hi_x = hi_x.max(c.re + h);
        lo_y = lo_y.min(c.im - h);
        hi_y = hi_y.max(c.im + h);
    }
    let mid = Complex64::new(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
    let rho = 0.5 * (hi_x - lo_x).hypot(hi_y - lo_y) + h;

    let indeterminate = || Error::IndeterminateCluster {
        center: mid,
        half_width: rho / SQRT_2,
    };

    if rho > 0.5 * ctx.grid.radius && !ctx.at_floor {
        return Ok(Outcome::Pending);
    }
    let separated = ctx
        .all_cells
        .iter()
        .filter(|c| ctx.cell_owner[c] != id)
        .all(|&c| square_distance(mid, ctx.grid.center(c), h) > rho)
        && ctx
            .finals
            .iter()
            .flat_map(|f| f.squares.iter())
            .all(|&(c, hw)| square_distance(mid, c, hw) > rho);
    if !separated {
        return if ctx.at_floor { Err(indeterminate()) } else { Ok(Outcome::Pending) };
    }

    let cap = if ctx.at_floor { MAX_SAMPLES } else { TENTATIVE_SAMPLES };
    let report = match winding_of(ctx.g, Contour::new(mid, rho)?, cap, Exec::Sequential) {
        Ok(r) => r,
        Err(_) if !ctx.at_floor => return Ok(Outcome::Pending),
        Err(_) => return Err(indeterminate()),
    };
    let index = report.winding;
    let root_box = RootBox {
        center: mid,
        half_width: rho / SQRT_2,
    };
    let squares: Vec<(Complex64, f64)> = centers.iter().map(|&c| (c, h)).collect();

    let estimate = polish(ctx.g, mid);
    let inside = (estimate - mid).norm() < rho;
    let residual = ctx.g.eval(estimate).norm();
    let scale = ctx.g.coefficient_scale(estimate);

    if index.abs() == 1 && inside && residual <= RESIDUAL_REL * scale {
        let tay = ctx.g.taylor(estimate);
        let (gw, gwb) = (tay.get(1, 0), tay.get(0, 1));
        let det_sign = (gw.norm_sqr() - gwb.norm_sqr()).signum() as i64;
        let sigma = (gw.norm() - gwb.norm()).abs();
        let cover = (estimate - mid).norm() + rho;
        let slack = 1e-12 * scale;
        if det_sign == index && sigma > tay.derivative_variation_bound(cover) + slack {
            return Ok(Outcome::Final(Finalized {
                root: CertifiedRoot {
                    root_box,
                    estimate,
                    index,
                    residual,
                    simple: true,
                },
                squares,
            }));
        }
    }
    if ctx.at_floor {
        let estimate = if inside { estimate } else { mid };
        return Ok(Outcome::Final(Finalized {
            root: CertifiedRoot {
                root_box,
                estimate,
                index,
                residual: ctx.g.eval(estimate).norm(),
                simple: false,
            },
            squares,
        }));
    }
    Ok(Outcome::Pending)
}

pub fn solve(g: &MixedPolynomial, opts: &SolverOptions) -> Result<RootInventory> {
    solve_univariate(&MixedUnivariate::new(g)?, opts)
}

pub fn solve_univariate(g: &MixedUnivariate, opts: &SolverOptions) -> Result<RootInventory> {
    if g.terms().is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let radius = dominance_radius(g)?;
    let at_infinity = degree_at_infinity_of(g)?;
    let h_min = opts.min_half_width_rel * radius;

    let mut grid = Grid { radius, level: 0 };
    let mut cells: Vec<(i64, i64)> = vec![(0, 0)];
    cells.retain(|&c| !cell_is_root_free(g, grid.center(c), grid.half_width()));
    let mut finals: Vec<Finalized> = Vec::new();

    while !cells.is_empty() {
        grid.level += 1;
        if grid.level > 60 {
            return Err(Error::IndeterminateCluster {
                center: grid.center(cells[0]),
                half_width: grid.half_width(),
            });
        }
        let h = grid.half_width();
        let g_ref = g;
        let grid_ref = grid;
        let mut next = opts.exec.flat_map(&cells, |&(ix, iy)| {
            [(0, 0), (1, 0), (0, 1), (1, 1)]
                .into_iter()
                .map(move |(dx, dy)| (2 * ix + dx, 2 * iy + dy))
                .filter(|&c| !cell_is_root_free(g_ref, grid_ref.center(c), h))
                .collect::<Vec<_>>()
        });
        next.sort_unstable();
        if next.len() > opts.max_boxes {
            return Err(Error::BoxBudgetExceeded { limit: opts.max_boxes });
        }
        cells = next;
        if cells.is_empty() {
            break;
        }

        let at_floor = h <= h_min;
        let clusters = clusters_of(&cells);
        let mut owner: HashMap<(i64, i64), usize> = HashMap::with_capacity(cells.len());
        for (id, cl) in clusters.iter().enumerate() {
            for &c in &cl.cells {
                owner.insert(c, id);
            }
        }
        let ctx = LevelContext {
            g,
            grid,
            all_cells: &cells,
            cell_owner: &owner,
            finals: &finals,
            at_floor,
        };
        let ids: Vec<usize> = (0..clusters.len()).collect();
        let outcomes = opts.exec.map(&ids, |&id| try_finalize(&ctx, id, &clusters[id]));

        let mut remaining = Vec::new();
        let mut new_finals = Vec::new();
        for (cluster, outcome) in clusters.iter().zip(outcomes) {
            match outcome? {
                Outcome::Final(f) => new_finals.push(f),
                Outcome::Pending => remaining.extend_from_slice(&cluster.cells),
            }
        }
        finals.extend(new_finals);
        remaining.sort_unstable();
        cells = remaining;
    }

    let mut roots: Vec<CertifiedRoot> = finals.into_iter().map(|f| f.root).collect();
    roots.sort_by(|a, b| {
        a.estimate
            .re
            .total_cmp(&b.estimate.re)
            .then(a.estimate.im.total_cmp(&b.estimate.im))
    });
    let index_sum: i64 = roots.iter().map(|r| r.index).sum();
    if index_sum != at_infinity {
        return Err(Error::IndexSumMismatch {
            index_sum,
            at_infinity,
        });
    }
    Ok(RootInventory {
        roots,
        index_sum,
        search_radius: radius,
    })
}

/// Number of points of `V = {f = 0} ⊂ ℂP¹` for a strongly polar homogeneous `f(z1, z2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCount {
    pub count: usize,
    /// Index-0 clusters counted as points without a winding certificate.
    pub uncertified: usize,
    /// Roots on the affine chart `z2 = 1` of the (possibly rotated) polynomial.
    pub inventory: RootInventory,
    /// Rotation angle applied to move `[1:0]` off `V`; 0 when none was needed.
    pub rotation: f64,
}

const ROTATIONS: [f64; 5] = [0.0, 0.7326, 1.9113, 2.6547, 0.3119];

fn rotated(f: &MixedPolynomial, theta: f64) -> Result<MixedPolynomial> {
    if theta == 0.0 {
        return Ok(f.clone());
    }
    let (s, c) = theta.sin_cos();
    let rows = vec![
        vec![Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        vec![Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ];
    f.substitute_linear(&rows)
}

pub fn count_projective_points(f: &MixedPolynomial, opts: &SolverOptions) -> Result<PointCount> {
    if f.n_vars() != 2 {
        return Err(Error::AmbientDimension { n: f.n_vars() });
    }
    let (q, r) = polar_class(f)?;
    let top = ExponentPair::new(vec![(q + r) as u32, 0], vec![r as u32, 0]);
    for theta in ROTATIONS {
        let fr = rotated(f, theta)?;
        // [1:0] lies on V exactly when the chart-1 polynomial vanishes at the origin.
        if fr.coefficient(&top).norm() <= 1e-9 * fr.max_coefficient_norm() {
            continue;
        }
        let g = fr.dehomogenize(1)?;
        let inventory = solve(&g, opts)?;
        let (count, uncertified) = distinct_points(&inventory, &MixedUnivariate::new(&g)?);
        return Ok(PointCount {
            count,
            uncertified,
            inventory,
            rotation: theta,
        });
    }
    Err(Error::DegenerateAtInfinity)
}

fn distinct_points(inv: &RootInventory, g: &MixedUnivariate) -> (usize, usize) {
    let mut points: Vec<Complex64> = Vec::new();
    let mut uncertified = 0;
    for root in &inv.roots {
        if root.index == 0 {
            if root.residual > RESIDUAL_REL * g.coefficient_scale(root.estimate) {
                continue;
            }
            uncertified += 1;
        }
        if points.iter().all(|p| (p - root.estimate).norm() >= DISTINCT_POINT_TOL) {
            points.push(root.estimate);
        }
    }
    (points.len(), uncertified)
}

pub fn compare_estimates(a: &CertifiedRoot, b: &CertifiedRoot) -> Ordering {
    a.estimate
        .re
        .total_cmp(&b.estimate.re)
        .then(a.estimate.im.total_cmp(&b.estimate.im))
}
