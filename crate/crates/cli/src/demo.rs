//! End-to-end reproduction of the worked examples and tables.

use mixedpoly::invariants::{
    family_chi, genus_from_chi, genus_table, join_factor, k_ell, thom_bound, f_qj, DEFAULT_H_ALPHA, DEFAULT_H_BETA,
    DEFAULT_K_BETA, DEFAULT_K_GAMMA,
};
use mixedpoly::projective::verify_degree_with;
use mixedpoly::{build_family, lkn, solve, Complex64, FamilyKind, FamilySpec, MixedPolynomial, SolverOptions};
use serde_json::{json, Value};

pub struct Item {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Item {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Item {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "pass": self.pass, "detail": self.detail })
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn worked_example(t: f64) -> MixedPolynomial {
    MixedPolynomial::univariate([(2, 1, c(-2.0, 0.0)), (2, 0, c(t, 0.0)), (0, 0, c(1.0, 0.0))])
}

fn example_items(opts: &SolverOptions) -> Vec<Item> {
    let mut items = Vec::new();
    let cube_root = c(2f64.powf(-1.0 / 3.0), 0.0);
    let im = 26f64.sqrt() / 9.0;
    let cases: [(f64, Vec<Complex64>); 2] = [(0.0, vec![cube_root]), (3.0, vec![c(1.0 / 9.0, im), c(1.0 / 9.0, -im)])];
    for (t, expected) in cases {
        let name = format!("example t={t}");
        match solve(&worked_example(t), opts) {
            Ok(inv) => {
                let count = if t == 0.0 { 1 } else { 3 };
                let found = expected
                    .iter()
                    .all(|z| inv.roots.iter().any(|r| (r.estimate - z).norm() < 1e-6));
                let indices: Vec<i64> = inv.roots.iter().map(|r| r.index).collect();
                let pass = inv.roots.len() == count && found && inv.index_sum == 1;
                items.push(Item::new(name, pass, format!("{} roots, indices {indices:?}, index sum {}", inv.roots.len(), inv.index_sum)));
            }
            Err(e) => items.push(Item::new(name, false, e.to_string())),
        }
    }
    items
}

fn lkn_items() -> Vec<Item> {
    let mut corpus: Vec<(String, Result<MixedPolynomial, mixedpoly::Error>, usize)> = Vec::new();
    for q in 1..=3u32 {
        for j in 0..=2u32 {
            corpus.push((format!("lkn f_{{{q},{j}}}"), Ok(f_qj(q, j)), q as usize));
        }
    }
    for l in 1..=3u32 {
        corpus.push((format!("lkn k_{l}"), k_ell(l, DEFAULT_K_BETA, DEFAULT_K_GAMMA), 2 * l as usize));
    }
    let r = 2u32;
    for q in 1..=2u32 {
        for j in 0..=r {
            let f = k_ell(r - j, DEFAULT_K_BETA, DEFAULT_K_GAMMA).and_then(|k| f_qj(q, j).mul(&k));
            corpus.push((format!("lkn f_{{{q},{j}}}k_{}", r - j), f, (q + 2 * (r - j)) as usize));
        }
    }
    for j in 0..=r {
        let g = join_factor(2, r, j, DEFAULT_H_ALPHA, DEFAULT_H_BETA);
        corpus.push((format!("lkn g_{j} (q=2, r={r})"), g, (2 + 2 * (r - j)) as usize));
    }
    corpus
        .into_iter()
        .map(|(name, f, expected)| match f.and_then(|f| lkn(&f)) {
            Ok(n) => Item::new(name, n == expected, format!("{n} points, expected {expected}")),
            Err(e) => Item::new(name, false, e.to_string()),
        })
        .collect()
}

fn degree_items(seed: u64, opts: &SolverOptions) -> Vec<Item> {
    [(1, 1), (2, 1), (2, 2), (3, 1)]
        .into_iter()
        .map(|(q, r)| {
            let name = format!("degree s1 q={q} r={r}");
            let spec = FamilySpec::new(FamilyKind::S1).with_int("q", q).with_int("r", r);
            match build_family(&spec).and_then(|f| verify_degree_with(&f, 10, seed, opts)) {
                Ok(v) => {
                    let totals: Vec<i64> = v.sections.iter().map(|s| s.total_index).collect();
                    Item::new(name, v.agree && v.polar_degree == q, format!("polar degree {}, line totals {totals:?}", v.polar_degree))
                }
                Err(e) => Item::new(name, false, e.to_string()),
            }
        })
        .collect()
}

fn table_items() -> Vec<Item> {
    let mut items = Vec::new();
    for q in 2..=5i64 {
        let s = q * q * q - 3 * q * q + 3 * q;
        let expected = [
            (FamilyKind::S1, s, (q - 1) * (q - 2) / 2),
            (FamilyKind::S2, s, (q - 1) * (q - 2) / 2),
            (FamilyKind::S3, s, (q - 1) * (q - 2) / 2),
            (FamilyKind::S4, q * (q * q + q + 1), q * (q + 1) / 2),
            (FamilyKind::S5, q * (q * q + 3 * q + 3), (q + 2) * (q + 1) / 2),
        ];
        for (kind, chi, genus) in expected {
            let name = format!("table {kind} q={q}");
            let spec = FamilySpec::new(kind).with_int("q", q).with_int("r", 1);
            let item = match family_chi(&spec).and_then(|x| Ok((x, genus_from_chi(x, q)?))) {
                Ok((x, g)) => Item::new(
                    name,
                    x == chi && g == genus && g >= thom_bound(q),
                    format!("chi {x} (expected {chi}), genus {g} (expected {genus}), Thom bound {}", thom_bound(q)),
                ),
                Err(e) => Item::new(name, false, e.to_string()),
            };
            items.push(item);
        }
        let name = format!("table h_join q={q} r=3");
        let item = match genus_table(FamilyKind::HJoin, q..=q, 3) {
            Ok(t) => {
                let genera: Vec<i64> = t.rows.iter().map(|r| r.genus).collect();
                let expected: Vec<i64> = (0..=3).rev().map(|j| (q - 1) * (q - 2 + 2 * (3 - j)) / 2).collect();
                let attainable: Vec<i64> = t.attainable[&q].iter().copied().collect();
                let pass = genera == expected && attainable == expected;
                Item::new(name, pass, format!("genera for j=3..0: {genera:?}, expected {expected:?}"))
            }
            Err(e) => Item::new(name, false, e.to_string()),
        };
        items.push(item);
    }
    items
}

pub fn run(seed: u64, opts: &SolverOptions) -> Vec<Item> {
    let mut items = example_items(opts);
    items.extend(lkn_items());
    items.extend(degree_items(seed, opts));
    items.extend(table_items());
    items
}
